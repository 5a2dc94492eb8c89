#include "doxa/belief.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace doxa {

std::string_view to_string(BeliefOperator op) {
  switch (op) {
    case BeliefOperator::Hpd: return "hpd";
    case BeliefOperator::Lk: return "lk";
  }
  return "?";
}

std::optional<BeliefOperator> parse_operator(std::string_view name) {
  if (name == "hpd") return BeliefOperator::Hpd;
  if (name == "lk") return BeliefOperator::Lk;
  return std::nullopt;
}

std::vector<Rational> cell_weights(const ProbabilityStructure& m, const Proposition& e) {
  const auto& q = m.question();
  std::vector<Rational> w(q.size());
  const auto& weights = m.weights();
  e.for_each([&](std::size_t s) { w[q.cell_of(s)] += weights[s]; });
  return w;
}

namespace {

Rational evidence_weight(const ProbabilityStructure& m, const Proposition& e) {
  Rational we = m.weight(e);
  if (we == 0) throw Error(ErrorCode::ConditionOnNull, "belief on zero-probability evidence");
  return we;
}

// Cells containing at least one state of e.
std::vector<bool> cells_meeting(const ProbabilityStructure& m, const Proposition& e) {
  std::vector<bool> meets(m.question().size(), false);
  e.for_each([&](std::size_t s) { meets[m.question().cell_of(s)] = true; });
  return meets;
}

BeliefSet assemble(const ProbabilityStructure& m, const Proposition& e, BeliefOperator op,
                   const std::vector<bool>& keep_cell, const std::vector<Rational>& weights,
                   const Rational& evidence_weight) {
  BeliefSet b{e, op, m.empty_set(), Rational(0)};
  const auto& q = m.question();
  Rational kept;
  e.for_each([&](std::size_t s) {
    if (keep_cell[q.cell_of(s)]) b.states.insert(s);
  });
  for (std::size_t c = 0; c < q.size(); ++c) {
    if (keep_cell[c]) kept += weights[c];
  }
  b.mass_given_evidence = kept / evidence_weight;
  return b;
}

}  // namespace

BeliefSet belief_set(const ProbabilityStructure& m, const Proposition& e) {
  const Rational we = evidence_weight(m, e);
  const auto w = cell_weights(m, e);
  const auto meets = cells_meeting(m, e);

  // Total mass at each distinct cell weight, largest first.
  std::map<Rational, Rational, std::greater<>> mass_at;
  for (std::size_t c = 0; c < w.size(); ++c) {
    if (meets[c]) mass_at[w[c]] += w[c];
  }
  // Mass of all cells strictly heavier than each distinct weight.
  std::map<Rational, Rational, std::greater<>> heavier;
  Rational running;
  for (const auto& [weight, mass] : mass_at) {
    heavier[weight] = running;
    running += mass;
  }

  const Rational bound = m.threshold() * we;
  std::vector<bool> keep(w.size(), false);
  for (std::size_t c = 0; c < w.size(); ++c) {
    if (meets[c]) keep[c] = heavier.at(w[c]) < bound;
  }
  return assemble(m, e, BeliefOperator::Hpd, keep, w, we);
}

BeliefSet lk_belief_set(const ProbabilityStructure& m, const Proposition& e) {
  const Rational we = evidence_weight(m, e);
  const auto w = cell_weights(m, e);
  const auto meets = cells_meeting(m, e);
  const Rational heaviest = *std::max_element(w.begin(), w.end());
  const Rational bound = m.threshold() * heaviest;
  std::vector<bool> keep(w.size(), false);
  for (std::size_t c = 0; c < w.size(); ++c) {
    keep[c] = meets[c] && w[c] >= bound;
  }
  return assemble(m, e, BeliefOperator::Lk, keep, w, we);
}

BeliefSet belief(const ProbabilityStructure& m, const Proposition& e, BeliefOperator op) {
  return op == BeliefOperator::Hpd ? belief_set(m, e) : lk_belief_set(m, e);
}

bool believes(const ProbabilityStructure& m, const Proposition& e, const Proposition& p, BeliefOperator op) {
  return belief(m, e, op).states.is_subset_of(p);
}

BeliefSet hpd_oracle(const ProbabilityStructure& m, const Proposition& e) {
  const Rational we = evidence_weight(m, e);
  const auto& q = m.question();

  struct Cell {
    std::size_t index;
    Rational mass;  // conditional on e
  };
  std::vector<Cell> cells;
  for (std::size_t c = 0; c < q.size(); ++c) {
    const Proposition piece = q.cell(c) & e;
    if (!piece.empty()) cells.push_back({c, m.weight(piece) / we});
  }
  std::stable_sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.mass > b.mass; });

  // Grow the region one tie group at a time; the first prefix reaching t is
  // the smallest region that is both closed under "at least as probable" and
  // probable enough.
  Proposition region = m.empty_set();
  Rational covered;
  std::size_t i = 0;
  while (i < cells.size() && covered < m.threshold()) {
    std::size_t j = i;
    while (j < cells.size() && cells[j].mass == cells[i].mass) {
      region |= q.cell(cells[j].index) & e;
      covered += cells[j].mass;
      ++j;
    }
    i = j;
  }
  return BeliefSet{e, BeliefOperator::Hpd, region, covered};
}

bool nm_consequence(const ProbabilityStructure& m, const Proposition& p, const Proposition& q, BeliefOperator op) {
  if (!m.is_evidence(p)) {
    throw Error(ErrorCode::NotEvidence, "antecedent " + format_proposition(m, p) + " is not a body of evidence");
  }
  return believes(m, p, q, op);
}

}  // namespace doxa
