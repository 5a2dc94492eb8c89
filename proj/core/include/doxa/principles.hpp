#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "doxa/belief.hpp"
#include "doxa/structure.hpp"

namespace doxa {

enum class Principle {
  DiamondMinus,
  DiamondR,
  BoxPlus,
  BoxMinus,
  BoxR,
  PiMinus,
  PiR,
};

inline constexpr std::array<Principle, 7> kAllPrinciples = {
    Principle::DiamondMinus, Principle::DiamondR, Principle::BoxPlus, Principle::BoxMinus,
    Principle::BoxR,         Principle::PiMinus,  Principle::PiR,
};

// Command-line name, e.g. "diamond-minus".
std::string_view to_string(Principle p);
// Symbolic name, e.g. "◇−".
std::string_view symbol(Principle p);
// KLM name: rational monotony, cut, cautious monotony; nullopt for the rest.
std::optional<std::string_view> klm_alias(Principle p);
// Accepts CLI names and the hyphenated KLM aliases ("rational-monotony").
std::optional<Principle> parse_principle(std::string_view name);

[[nodiscard]] bool is_partition_principle(Principle p);

struct Witness {
  Proposition evidence;
  // E' for pairwise principles; unused (empty universe) for partition principles.
  Proposition discovery;
  std::vector<Proposition> partition;
  BeliefSet belief_before;
  // One entry for pairwise principles, one per partition member otherwise.
  std::vector<BeliefSet> belief_after;
  std::string detail;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  Principle principle = Principle::DiamondMinus;
  BeliefOperator op = BeliefOperator::Hpd;
  std::vector<Witness> witnesses;
  std::size_t instances_checked = 0;
  // Set when partition enumeration hit its bound for some evidence set.
  bool bounded = false;

  [[nodiscard]] bool holds() const { return witnesses.empty(); }
};

struct CheckOptions {
  // Maximum number of evidence partitions enumerated per evidence set.
  std::size_t max_partitions = 1u << 16;
  // Stop after the first witness.
  bool first_witness_only = false;
};

// Reads DOXA_MAX_PARTITIONS when set.
CheckOptions default_check_options();

// All pairs (E, E') of evidence sets with E' a proper subset of E, in
// canonical order.
std::vector<std::pair<Proposition, Proposition>> enumerate_discoveries(const ProbabilityStructure& m);

struct PartitionEnumeration {
  std::vector<std::vector<Proposition>> partitions;
  bool bounded = false;
};

// Every subfamily of the evidence family that partitions e, including {e}.
PartitionEnumeration enumerate_partitions(const ProbabilityStructure& m, const Proposition& e,
                                          std::size_t max_partitions = 1u << 16);

Verdict check_principle(const ProbabilityStructure& m, Principle pr, BeliefOperator op,
                        const CheckOptions& options = default_check_options());

std::vector<Verdict> check_all(const ProbabilityStructure& m, BeliefOperator op,
                               const CheckOptions& options = default_check_options());

// Re-evaluates the principle's defining condition on the witness data.
bool witness_reproduces(const ProbabilityStructure& m, Principle pr, BeliefOperator op, const Witness& w);

}  // namespace doxa
