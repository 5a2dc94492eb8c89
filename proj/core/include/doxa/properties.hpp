#pragma once

#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

#include "doxa/proposition.hpp"
#include "doxa/rational.hpp"
#include "doxa/structure.hpp"

namespace doxa {

enum class Constraint { Orthogonality, Stability };

std::string_view to_string(Constraint c);

// Two answers whose probability ratio moves under conditioning on the evidence.
// Ratios are oriented so that the second cell has positive conditional mass.
struct CellPairDetail {
  std::size_t cell_a = 0;
  std::size_t cell_b = 0;
  std::size_t state_a = 0;
  std::size_t state_b = 0;
  Rational prior_ratio;
  Rational conditional_ratio;
};

// A union of answers with prior mass >= t whose conditional mass drops below t.
struct CellSetDetail {
  std::vector<std::size_t> cells;
  Rational prior_mass;
  Rational conditional_mass;
};

struct ConstraintViolation {
  Proposition evidence;
  std::variant<CellPairDetail, CellSetDetail> detail;
};

struct ConstraintReport {
  Constraint constraint = Constraint::Orthogonality;
  std::vector<ConstraintViolation> violations;

  [[nodiscard]] bool holds() const { return violations.empty(); }
};

inline constexpr std::size_t kDefaultMaxStabilityCells = 20;

ConstraintReport check_orthogonality(const ProbabilityStructure& m);

// Enumerates all subsets of the question. Throws Error{QuestionTooLarge} when
// the question has more than max_cells cells.
ConstraintReport check_stability(const ProbabilityStructure& m,
                                 std::size_t max_cells = kDefaultMaxStabilityCells);

// Early-exit predicates used by search filters.
bool is_orthogonal(const ProbabilityStructure& m);
bool is_stable(const ProbabilityStructure& m, std::size_t max_cells = kDefaultMaxStabilityCells);

// Re-checks a reported violation from scratch.
bool violation_reproduces(const ProbabilityStructure& m, Constraint c, const ConstraintViolation& v);

}  // namespace doxa
