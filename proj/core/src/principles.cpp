#include "doxa/principles.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace doxa {

std::string_view to_string(Principle p) {
  switch (p) {
    case Principle::DiamondMinus: return "diamond-minus";
    case Principle::DiamondR: return "diamond-r";
    case Principle::BoxPlus: return "box-plus";
    case Principle::BoxMinus: return "box-minus";
    case Principle::BoxR: return "box-r";
    case Principle::PiMinus: return "pi-minus";
    case Principle::PiR: return "pi-r";
  }
  return "?";
}

std::string_view symbol(Principle p) {
  switch (p) {
    case Principle::DiamondMinus: return "◇−";
    case Principle::DiamondR: return "◇R";
    case Principle::BoxPlus: return "□+";
    case Principle::BoxMinus: return "□−";
    case Principle::BoxR: return "□R";
    case Principle::PiMinus: return "Π−";
    case Principle::PiR: return "ΠR";
  }
  return "?";
}

std::optional<std::string_view> klm_alias(Principle p) {
  switch (p) {
    case Principle::DiamondMinus: return "rational monotony";
    case Principle::BoxPlus: return "cut";
    case Principle::BoxMinus: return "cautious monotony";
    default: return std::nullopt;
  }
}

std::optional<Principle> parse_principle(std::string_view name) {
  for (auto p : kAllPrinciples) {
    if (name == to_string(p)) return p;
    if (auto alias = klm_alias(p)) {
      std::string hyphenated(*alias);
      std::replace(hyphenated.begin(), hyphenated.end(), ' ', '-');
      if (name == hyphenated) return p;
    }
  }
  return std::nullopt;
}

bool is_partition_principle(Principle p) { return p == Principle::PiMinus || p == Principle::PiR; }

CheckOptions default_check_options() {
  CheckOptions options;
  if (const char* env = std::getenv("DOXA_MAX_PARTITIONS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) options.max_partitions = static_cast<std::size_t>(v);
  }
  return options;
}

namespace {

enum class Precondition { Compatible, Believed };
enum class Conclusion { NoLoss, NoGain, NoReversal };

Precondition precondition_of(Principle p) {
  switch (p) {
    case Principle::DiamondMinus:
    case Principle::DiamondR: return Precondition::Compatible;
    default: return Precondition::Believed;
  }
}

Conclusion conclusion_of(Principle p) {
  switch (p) {
    case Principle::DiamondMinus:
    case Principle::BoxMinus:
    case Principle::PiMinus: return Conclusion::NoLoss;
    case Principle::BoxPlus: return Conclusion::NoGain;
    default: return Conclusion::NoReversal;
  }
}

bool precondition_holds(Precondition pre, const Proposition& before, const Proposition& discovery) {
  return pre == Precondition::Compatible ? before.intersects(discovery) : before.is_subset_of(discovery);
}

bool conclusion_holds(Conclusion c, const Proposition& before, const Proposition& after) {
  switch (c) {
    case Conclusion::NoLoss: return after.is_subset_of(before);
    case Conclusion::NoGain: return before.is_subset_of(after);
    case Conclusion::NoReversal: return before.intersects(after);
  }
  return true;
}

std::vector<std::size_t> canonical_evidence_order(const ProbabilityStructure& m) {
  std::vector<std::size_t> order(m.evidence().size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return m.evidence()[a] < m.evidence()[b]; });
  return order;
}

std::vector<std::pair<std::size_t, std::size_t>> discovery_index_pairs(const ProbabilityStructure& m) {
  const auto& ev = m.evidence();
  const auto order = canonical_evidence_order(m);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto i : order) {
    for (auto j : order) {
      if (i != j && ev[j].is_subset_of(ev[i])) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

struct IndexPartitions {
  std::vector<std::vector<std::size_t>> partitions;
  bool bounded = false;
};

// Exact cover of ev[target] by members of the evidence family: repeatedly
// cover the lowest uncovered state with a candidate disjoint from the cover.
IndexPartitions partition_indices(const ProbabilityStructure& m, std::size_t target, std::size_t max_partitions) {
  const auto& ev = m.evidence();
  const Proposition& whole = ev[target];
  std::vector<std::size_t> candidates;
  for (auto i : canonical_evidence_order(m)) {
    if (ev[i].is_subset_of(whole)) candidates.push_back(i);
  }

  IndexPartitions out;
  std::vector<std::size_t> chosen;
  auto recurse = [&](auto&& self, const Proposition& uncovered) -> void {
    if (out.bounded) return;
    const auto pivot = uncovered.first();
    if (!pivot) {
      if (out.partitions.size() >= max_partitions) {
        out.bounded = true;
        return;
      }
      out.partitions.push_back(chosen);
      return;
    }
    for (auto c : candidates) {
      if (!ev[c].contains(*pivot) || !ev[c].is_subset_of(uncovered)) continue;
      chosen.push_back(c);
      self(self, uncovered - ev[c]);
      chosen.pop_back();
      if (out.bounded) return;
    }
  };
  recurse(recurse, whole);

  for (auto& p : out.partitions) {
    std::sort(p.begin(), p.end(), [&](std::size_t a, std::size_t b) { return ev[a] < ev[b]; });
  }
  std::sort(out.partitions.begin(), out.partitions.end(),
            [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
              return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                                  [&](std::size_t x, std::size_t y) { return ev[x] < ev[y]; });
            });
  return out;
}

std::string describe_pair(const ProbabilityStructure& m, Principle pr, const Proposition& before,
                          const Proposition& after) {
  const auto b0 = format_proposition(m, before);
  const auto b1 = format_proposition(m, after);
  switch (conclusion_of(pr)) {
    case Conclusion::NoLoss: return "B(E') = " + b1 + " is not a subset of B(E) = " + b0;
    case Conclusion::NoGain: return "B(E) = " + b0 + " is not a subset of B(E') = " + b1;
    case Conclusion::NoReversal: return "B(E) = " + b0 + " and B(E') = " + b1 + " are disjoint";
  }
  return {};
}

class Checker {
 public:
  Checker(const ProbabilityStructure& m, BeliefOperator op, const CheckOptions& options)
      : m_(m), op_(op), options_(options) {
    beliefs_.reserve(m.evidence().size());
    for (const auto& e : m.evidence()) beliefs_.push_back(belief(m, e, op));
  }

  Verdict check(Principle pr) {
    return is_partition_principle(pr) ? check_partitions(pr) : check_pairs(pr);
  }

 private:
  Verdict check_pairs(Principle pr) {
    Verdict v{pr, op_, {}, 0, false};
    const auto pre = precondition_of(pr);
    const auto post = conclusion_of(pr);
    const auto& ev = m_.evidence();
    if (!pairs_) pairs_ = discovery_index_pairs(m_);
    for (const auto& [i, j] : *pairs_) {
      const auto& before = beliefs_[i].states;
      if (!precondition_holds(pre, before, ev[j])) continue;
      ++v.instances_checked;
      const auto& after = beliefs_[j].states;
      if (conclusion_holds(post, before, after)) continue;
      Witness w;
      w.evidence = ev[i];
      w.discovery = ev[j];
      w.belief_before = beliefs_[i];
      w.belief_after = {beliefs_[j]};
      w.detail = describe_pair(m_, pr, before, after);
      v.witnesses.push_back(std::move(w));
      if (options_.first_witness_only) break;
    }
    return v;
  }

  Verdict check_partitions(Principle pr) {
    Verdict v{pr, op_, {}, 0, false};
    const auto post = conclusion_of(pr);
    const auto& ev = m_.evidence();
    if (partitions_.empty()) {
      partitions_.resize(ev.size());
      for (std::size_t i = 0; i < ev.size(); ++i) partitions_[i] = partition_indices(m_, i, options_.max_partitions);
    }
    for (auto i : canonical_evidence_order(m_)) {
      v.bounded = v.bounded || partitions_[i].bounded;
      const auto& before = beliefs_[i].states;
      for (const auto& partition : partitions_[i].partitions) {
        ++v.instances_checked;
        const bool some_member_ok = std::any_of(partition.begin(), partition.end(), [&](std::size_t j) {
          return conclusion_holds(post, before, beliefs_[j].states);
        });
        if (some_member_ok) continue;
        Witness w;
        w.evidence = ev[i];
        w.discovery = Proposition();
        w.belief_before = beliefs_[i];
        std::string members;
        for (auto j : partition) {
          w.partition.push_back(ev[j]);
          w.belief_after.push_back(beliefs_[j]);
          if (!members.empty()) members += ", ";
          members += format_proposition(m_, ev[j]);
        }
        w.detail = (post == Conclusion::NoLoss ? "every member p of {" + members + "} has B(p) not a subset of B(E) = "
                                               : "every member p of {" + members + "} has B(p) disjoint from B(E) = ") +
                   format_proposition(m_, before);
        v.witnesses.push_back(std::move(w));
        if (options_.first_witness_only) return v;
      }
    }
    return v;
  }

  const ProbabilityStructure& m_;
  BeliefOperator op_;
  CheckOptions options_;
  std::vector<BeliefSet> beliefs_;
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> pairs_;
  std::vector<IndexPartitions> partitions_;
};

}  // namespace

std::vector<std::pair<Proposition, Proposition>> enumerate_discoveries(const ProbabilityStructure& m) {
  std::vector<std::pair<Proposition, Proposition>> out;
  for (const auto& [i, j] : discovery_index_pairs(m)) out.emplace_back(m.evidence()[i], m.evidence()[j]);
  return out;
}

PartitionEnumeration enumerate_partitions(const ProbabilityStructure& m, const Proposition& e,
                                          std::size_t max_partitions) {
  const auto idx = m.evidence_index(e);
  if (!idx) throw Error(ErrorCode::NotEvidence, format_proposition(m, e) + " is not a body of evidence");
  const auto found = partition_indices(m, *idx, max_partitions);
  PartitionEnumeration out;
  out.bounded = found.bounded;
  for (const auto& p : found.partitions) {
    std::vector<Proposition> members;
    for (auto j : p) members.push_back(m.evidence()[j]);
    out.partitions.push_back(std::move(members));
  }
  return out;
}

Verdict check_principle(const ProbabilityStructure& m, Principle pr, BeliefOperator op, const CheckOptions& options) {
  return Checker(m, op, options).check(pr);
}

std::vector<Verdict> check_all(const ProbabilityStructure& m, BeliefOperator op, const CheckOptions& options) {
  Checker checker(m, op, options);
  std::vector<Verdict> out;
  for (auto p : kAllPrinciples) out.push_back(checker.check(p));
  return out;
}

bool witness_reproduces(const ProbabilityStructure& m, Principle pr, BeliefOperator op, const Witness& w) {
  if (!m.is_evidence(w.evidence)) return false;
  const auto before = belief(m, w.evidence, op);
  if (before.states != w.belief_before.states) return false;
  const auto post = conclusion_of(pr);

  if (is_partition_principle(pr)) {
    if (w.partition.empty()) return false;
    Proposition covered = m.empty_set();
    for (const auto& p : w.partition) {
      if (!m.is_evidence(p) || p.intersects(covered)) return false;
      covered |= p;
    }
    if (covered != w.evidence) return false;
    for (const auto& p : w.partition) {
      if (conclusion_holds(post, before.states, belief(m, p, op).states)) return false;
    }
    return true;
  }

  if (!m.is_evidence(w.discovery) || !w.discovery.is_subset_of(w.evidence) || w.discovery == w.evidence) {
    return false;
  }
  const auto after = belief(m, w.discovery, op);
  return precondition_holds(precondition_of(pr), before.states, w.discovery) &&
         !conclusion_holds(post, before.states, after.states);
}

}  // namespace doxa
