#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "doxa/proposition.hpp"
#include "doxa/rational.hpp"
#include "doxa/structure.hpp"

namespace doxa {

enum class BeliefOperator {
  // A state survives iff the cells strictly more probable than its own carry
  // conditional mass below the threshold.
  Hpd,
  // Lin-Kelly tracking belief: a state survives iff no cell is more than 1/t
  // times as probable as its own.
  Lk,
};

std::string_view to_string(BeliefOperator op);
std::optional<BeliefOperator> parse_operator(std::string_view name);

struct BeliefSet {
  Proposition evidence;
  BeliefOperator op = BeliefOperator::Hpd;
  Proposition states;
  Rational mass_given_evidence;

  friend bool operator==(const BeliefSet&, const BeliefSet&) = default;
};

// Unnormalized weight of (cell ∩ e) for every cell of the question.
std::vector<Rational> cell_weights(const ProbabilityStructure& m, const Proposition& e);

// B(E) = { s in E : Pr_E(cells strictly more probable than [s]_Q) < t }.
// Throws Error{ConditionOnNull} when e has zero weight.
BeliefSet belief_set(const ProbabilityStructure& m, const Proposition& e);

// B_LK(E) = { s in E : Pr_E([s]_Q) >= t * Pr_E(q) for every cell q }.
BeliefSet lk_belief_set(const ProbabilityStructure& m, const Proposition& e);

BeliefSet belief(const ProbabilityStructure& m, const Proposition& e, BeliefOperator op);

bool believes(const ProbabilityStructure& m, const Proposition& e, const Proposition& p,
              BeliefOperator op = BeliefOperator::Hpd);

// Independent construction of B(E) used to cross-check belief_set: take
// question cells in descending order of conditional mass, whole tie groups
// at a time, until the accumulated mass reaches t.
BeliefSet hpd_oracle(const ProbabilityStructure& m, const Proposition& e);

// p |~ q iff B(p) ⊆ q. p must be a member of the evidence family
// (Error{NotEvidence} otherwise).
bool nm_consequence(const ProbabilityStructure& m, const Proposition& p, const Proposition& q,
                    BeliefOperator op = BeliefOperator::Hpd);

}  // namespace doxa
