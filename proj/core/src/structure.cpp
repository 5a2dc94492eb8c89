#include "doxa/structure.hpp"

#include <algorithm>
#include <unordered_set>

namespace doxa {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyStateSet: return "EmptyStateSet";
    case ErrorCode::EmptyEvidenceSet: return "EmptyEvidenceSet";
    case ErrorCode::ZeroProbabilityEvidence: return "ZeroProbabilityEvidence";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::ThresholdOutOfRange: return "ThresholdOutOfRange";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::ZeroTotalWeight: return "ZeroTotalWeight";
    case ErrorCode::DuplicateEvidence: return "DuplicateEvidence";
    case ErrorCode::DuplicateState: return "DuplicateState";
    case ErrorCode::UnknownState: return "UnknownState";
    case ErrorCode::ConditionOnNull: return "ConditionOnNull";
    case ErrorCode::NotEvidence: return "NotEvidence";
    case ErrorCode::QuestionTooLarge: return "QuestionTooLarge";
    case ErrorCode::InfeasibleConfig: return "InfeasibleConfig";
    case ErrorCode::NotACountermodel: return "NotACountermodel";
  }
  return "Unknown";
}

Question Question::from_cells(std::size_t state_count, std::vector<Proposition> cells) {
  Question q;
  q.cell_of_.assign(state_count, state_count);
  for (const auto& cell : cells) {
    if (cell.universe_size() != state_count) {
      throw Error(ErrorCode::NotAPartition, "question cell over a different state set");
    }
    if (cell.empty()) throw Error(ErrorCode::NotAPartition, "question has an empty cell");
  }
  std::sort(cells.begin(), cells.end(),
            [](const Proposition& a, const Proposition& b) { return *a.first() < *b.first(); });
  for (std::size_t i = 0; i < cells.size(); ++i) {
    bool overlap = false;
    cells[i].for_each([&](std::size_t s) {
      if (q.cell_of_[s] != state_count) overlap = true;
      q.cell_of_[s] = i;
    });
    if (overlap) throw Error(ErrorCode::NotAPartition, "question cells overlap");
  }
  for (std::size_t s = 0; s < state_count; ++s) {
    if (q.cell_of_[s] == state_count) {
      throw Error(ErrorCode::NotAPartition, "state " + std::to_string(s) + " is in no question cell");
    }
  }
  q.cells_ = std::move(cells);
  return q;
}

Question Question::singletons(std::size_t state_count) {
  std::vector<Proposition> cells;
  cells.reserve(state_count);
  for (std::size_t s = 0; s < state_count; ++s) cells.push_back(Proposition::of(state_count, {s}));
  return from_cells(state_count, std::move(cells));
}

Question Question::trivial(std::size_t state_count) {
  return from_cells(state_count, {Proposition::full(state_count)});
}

std::optional<std::size_t> ProbabilityStructure::find_state(std::string_view name) const {
  for (const auto& s : states_) {
    if (s.name == name) return s.index;
  }
  return std::nullopt;
}

Rational ProbabilityStructure::weight(const Proposition& p) const {
  Rational w;
  p.for_each([&](std::size_t s) { w += weights_[s]; });
  return w;
}

Rational ProbabilityStructure::prior(const Proposition& p) const { return weight(p) / total_; }

std::optional<std::size_t> ProbabilityStructure::evidence_index(const Proposition& e) const {
  const auto it = std::find(evidence_.begin(), evidence_.end(), e);
  if (it == evidence_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - evidence_.begin());
}

StructureSpec ProbabilityStructure::to_spec() const {
  StructureSpec spec;
  for (const auto& s : states_) spec.states.push_back(s.name);
  spec.weights = weights_;
  for (const auto& c : question_.cells()) spec.cells.push_back(c.members());
  for (const auto& e : evidence_) spec.evidence.push_back(e.members());
  spec.threshold = threshold_;
  return spec;
}

bool operator==(const ProbabilityStructure& a, const ProbabilityStructure& b) {
  return a.states_ == b.states_ && a.weights_ == b.weights_ && a.question_ == b.question_ &&
         a.evidence_ == b.evidence_ && a.threshold_ == b.threshold_;
}

namespace {

Proposition indices_to_proposition(std::size_t n, const std::vector<std::size_t>& members) {
  Proposition p(n);
  for (auto s : members) {
    if (s >= n) throw Error(ErrorCode::UnknownState, "state index " + std::to_string(s) + " out of range");
    p.insert(s);
  }
  return p;
}

}  // namespace

ProbabilityStructure validate_structure(StructureSpec spec) {
  const std::size_t n = spec.states.size();
  if (n == 0) throw Error(ErrorCode::EmptyStateSet, "a structure needs at least one state");

  ProbabilityStructure m;
  {
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i) {
      if (!seen.insert(spec.states[i]).second) {
        throw Error(ErrorCode::DuplicateState, "state '" + spec.states[i] + "' declared twice");
      }
      m.states_.push_back(StateId{i, spec.states[i]});
    }
  }

  if (spec.weights.size() != n) {
    throw Error(ErrorCode::UnknownState, "expected " + std::to_string(n) + " weights, got " +
                                             std::to_string(spec.weights.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.weights[i] < 0) {
      throw Error(ErrorCode::NegativeWeight, "state '" + spec.states[i] + "' has negative weight");
    }
    m.total_ += spec.weights[i];
  }
  if (m.total_ == 0) throw Error(ErrorCode::ZeroTotalWeight, "total prior weight is zero");
  m.weights_ = std::move(spec.weights);

  std::vector<Proposition> cells;
  cells.reserve(spec.cells.size());
  for (const auto& c : spec.cells) cells.push_back(indices_to_proposition(n, c));
  m.question_ = Question::from_cells(n, std::move(cells));

  std::unordered_set<Proposition, PropositionHash> seen_evidence;
  for (std::size_t i = 0; i < spec.evidence.size(); ++i) {
    auto e = indices_to_proposition(n, spec.evidence[i]);
    if (e.empty()) throw Error(ErrorCode::EmptyEvidenceSet, "evidence set " + std::to_string(i) + " is empty");
    if (m.weight(e) == 0) {
      throw Error(ErrorCode::ZeroProbabilityEvidence,
                  "evidence set " + std::to_string(i) + " has zero prior probability");
    }
    if (!seen_evidence.insert(e).second) {
      throw Error(ErrorCode::DuplicateEvidence, "evidence set " + std::to_string(i) + " repeats an earlier one");
    }
    m.evidence_.push_back(std::move(e));
  }

  if (spec.threshold < 0 || spec.threshold > 1) {
    throw Error(ErrorCode::ThresholdOutOfRange, "threshold " + to_string(spec.threshold) + " is outside [0,1]");
  }
  m.threshold_ = std::move(spec.threshold);
  return m;
}

Rational conditional_probability(const ProbabilityStructure& m, const Proposition& p, const Proposition& e) {
  const Rational we = m.weight(e);
  if (we == 0) throw Error(ErrorCode::ConditionOnNull, "conditioning on a zero-probability proposition");
  return Rational(m.weight(p & e) / we);
}

const Proposition& answer_of(const ProbabilityStructure& m, std::size_t state) {
  if (state >= m.state_count()) throw Error(ErrorCode::UnknownState, "state index " + std::to_string(state));
  return m.question().cell(m.question().cell_of(state));
}

const Proposition& answer_of(const ProbabilityStructure& m, std::string_view state) {
  const auto idx = m.find_state(state);
  if (!idx) throw Error(ErrorCode::UnknownState, "no state named '" + std::string(state) + "'");
  return answer_of(m, *idx);
}

ProbabilityStructure with_question(const ProbabilityStructure& m, const Question& q) {
  std::vector<Proposition> cells = q.cells();
  return with_question(m, std::move(cells));
}

ProbabilityStructure with_question(const ProbabilityStructure& m, std::vector<Proposition> cells) {
  auto spec = m.to_spec();
  spec.cells.clear();
  for (const auto& c : cells) {
    if (c.universe_size() != m.state_count()) {
      throw Error(ErrorCode::NotAPartition, "question over a different state set");
    }
    spec.cells.push_back(c.members());
  }
  return validate_structure(std::move(spec));
}

ProbabilityStructure with_threshold(const ProbabilityStructure& m, const Rational& t) {
  auto spec = m.to_spec();
  spec.threshold = t;
  return validate_structure(std::move(spec));
}

Discovery discover(const ProbabilityStructure& m, const Proposition& e, const Proposition& p) {
  Discovery d{e & p, false};
  d.admissible = !d.result.empty() && m.is_evidence(d.result);
  return d;
}

Proposition make_proposition(const ProbabilityStructure& m, const std::vector<std::string>& names) {
  Proposition p = m.empty_set();
  for (const auto& name : names) {
    const auto idx = m.find_state(name);
    if (!idx) throw Error(ErrorCode::UnknownState, "no state named '" + name + "'");
    p.insert(*idx);
  }
  return p;
}

std::string format_proposition(const ProbabilityStructure& m, const Proposition& p) {
  std::string out = "{";
  bool first = true;
  p.for_each([&](std::size_t s) {
    if (!first) out += ' ';
    out += m.state_name(s);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace doxa
