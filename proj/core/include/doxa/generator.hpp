#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <optional>

#include "doxa/rational.hpp"
#include "doxa/structure.hpp"

namespace doxa {

enum class GeneratorMode {
  // Arbitrary evidence sets.
  Free,
  // Every evidence set is a union of question cells.
  Coarse,
  // States are pairs (x, y) with product weights; the question groups x values
  // and evidence fixes a set of y values. Orthogonal by construction.
  Product,
};

std::string_view to_string(GeneratorMode mode);
std::optional<GeneratorMode> parse_generator_mode(std::string_view name);

struct IntRange {
  std::size_t lo = 1;
  std::size_t hi = 1;
};

struct GeneratorConfig {
  IntRange state_count{2, 6};
  IntRange evidence_count{1, 4};
  IntRange cell_count{1, 6};
  std::uint64_t weight_bound = 10;
  // Thresholds are drawn from {n/d : d <= threshold_denominator_bound} within [lo, hi].
  Rational threshold_lo{1, 100};
  Rational threshold_hi{1};
  bool threshold_lo_exclusive = false;
  std::uint64_t threshold_denominator_bound = 100;
  GeneratorMode mode = GeneratorMode::Free;
  bool include_full_evidence = true;
  std::uint64_t seed = 0;
};

// Throws Error{InfeasibleConfig} for empty ranges, thresholds outside [0,1],
// or cell counts that cannot be realized.
void validate_config(const GeneratorConfig& cfg);

// Deterministic function of cfg (including cfg.seed).
ProbabilityStructure generate_random(const GeneratorConfig& cfg);

// Seed for trial `index` of a run seeded with `seed` (splitmix64 mixing).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace doxa
