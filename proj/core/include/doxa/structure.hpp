#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "doxa/error.hpp"
#include "doxa/proposition.hpp"
#include "doxa/rational.hpp"

namespace doxa {

struct StateId {
  std::size_t index = 0;
  std::string name;

  friend bool operator==(const StateId&, const StateId&) = default;
};

// A partition of the state set. Cells are kept sorted by their lowest member.
class Question {
 public:
  Question() = default;

  // Throws Error{NotAPartition} unless the cells are nonempty, pairwise
  // disjoint and cover 0..state_count-1.
  static Question from_cells(std::size_t state_count, std::vector<Proposition> cells);
  static Question singletons(std::size_t state_count);
  static Question trivial(std::size_t state_count);

  [[nodiscard]] const std::vector<Proposition>& cells() const { return cells_; }
  [[nodiscard]] std::size_t size() const { return cells_.size(); }
  [[nodiscard]] std::size_t cell_of(std::size_t state) const { return cell_of_.at(state); }
  [[nodiscard]] const Proposition& cell(std::size_t i) const { return cells_.at(i); }

  friend bool operator==(const Question&, const Question&) = default;

 private:
  std::vector<Proposition> cells_;
  std::vector<std::size_t> cell_of_;
};

// Unvalidated input for a probability structure. Weights are unnormalized
// prior masses.
struct StructureSpec {
  std::vector<std::string> states;
  std::vector<Rational> weights;
  std::vector<std::vector<std::size_t>> cells;
  std::vector<std::vector<std::size_t>> evidence;
  Rational threshold;
};

class ProbabilityStructure {
 public:
  [[nodiscard]] std::size_t state_count() const { return states_.size(); }
  [[nodiscard]] const std::vector<StateId>& states() const { return states_; }
  [[nodiscard]] const std::string& state_name(std::size_t i) const { return states_.at(i).name; }
  [[nodiscard]] std::optional<std::size_t> find_state(std::string_view name) const;

  [[nodiscard]] const std::vector<Rational>& weights() const { return weights_; }
  [[nodiscard]] const Rational& total_weight() const { return total_; }
  [[nodiscard]] const Question& question() const { return question_; }
  [[nodiscard]] const std::vector<Proposition>& evidence() const { return evidence_; }
  [[nodiscard]] const Rational& threshold() const { return threshold_; }

  [[nodiscard]] Proposition universe() const { return Proposition::full(states_.size()); }
  [[nodiscard]] Proposition empty_set() const { return Proposition(states_.size()); }

  // Unnormalized weight of p.
  [[nodiscard]] Rational weight(const Proposition& p) const;
  // Prior probability Pr(p).
  [[nodiscard]] Rational prior(const Proposition& p) const;

  [[nodiscard]] std::optional<std::size_t> evidence_index(const Proposition& e) const;
  [[nodiscard]] bool is_evidence(const Proposition& e) const { return evidence_index(e).has_value(); }

  // Rebuild the raw spec (for edits such as shrinking).
  [[nodiscard]] StructureSpec to_spec() const;

  friend bool operator==(const ProbabilityStructure& a, const ProbabilityStructure& b);

 private:
  friend ProbabilityStructure validate_structure(StructureSpec spec);

  std::vector<StateId> states_;
  std::vector<Rational> weights_;
  Rational total_;
  Question question_;
  std::vector<Proposition> evidence_;
  Rational threshold_;
};

// Checks every structural invariant and returns the validated structure, or
// throws Error naming the first violation: EmptyStateSet, DuplicateState,
// UnknownState, NegativeWeight, NotAPartition, EmptyEvidenceSet,
// ZeroProbabilityEvidence, DuplicateEvidence, ThresholdOutOfRange.
ProbabilityStructure validate_structure(StructureSpec spec);

// Pr(p | e), exact. Throws Error{ConditionOnNull} if e has zero weight.
Rational conditional_probability(const ProbabilityStructure& m, const Proposition& p, const Proposition& e);

// [s]_Q. Throws Error{UnknownState}.
const Proposition& answer_of(const ProbabilityStructure& m, std::size_t state);
const Proposition& answer_of(const ProbabilityStructure& m, std::string_view state);

ProbabilityStructure with_question(const ProbabilityStructure& m, const Question& q);
ProbabilityStructure with_question(const ProbabilityStructure& m, std::vector<Proposition> cells);
ProbabilityStructure with_threshold(const ProbabilityStructure& m, const Rational& t);

struct Discovery {
  Proposition result;
  // Only admissible discoveries (result in the evidence family) can be revised on.
  bool admissible = false;
};

Discovery discover(const ProbabilityStructure& m, const Proposition& e, const Proposition& p);

// Build a proposition from state names; throws Error{UnknownState}.
Proposition make_proposition(const ProbabilityStructure& m, const std::vector<std::string>& names);

// "{a b c}" in state-index order.
std::string format_proposition(const ProbabilityStructure& m, const Proposition& p);

}  // namespace doxa
