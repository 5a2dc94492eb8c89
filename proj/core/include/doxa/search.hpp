#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string_view>

#include "doxa/belief.hpp"
#include "doxa/generator.hpp"
#include "doxa/principles.hpp"
#include "doxa/properties.hpp"
#include "doxa/structure.hpp"

namespace doxa {

enum class ConstraintFilter { None, Orthogonality, Stability, Both };

std::string_view to_string(ConstraintFilter f);
std::optional<ConstraintFilter> parse_constraint_filter(std::string_view name);

bool passes_filter(const ProbabilityStructure& m, ConstraintFilter filter);

struct Countermodel {
  ProbabilityStructure structure;
  Witness witness;
  std::size_t trial_index = 0;
};

struct SearchResult {
  std::optional<Countermodel> found;
  // Candidates generated (the budget counts these).
  std::size_t structures_tried = 0;
  // Candidates that passed the constraint filter and were checked.
  std::size_t structures_checked = 0;
  std::chrono::milliseconds elapsed{0};
};

struct SearchOptions {
  // 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  CheckOptions check = default_check_options();
};

// Trial i uses generate_random with seed trial_seed(cfg.seed, i). The reported
// hit is the lowest failing trial index, so results do not depend on the
// number of workers.
SearchResult search_countermodel(Principle pr, BeliefOperator op, ConstraintFilter filter,
                                 const GeneratorConfig& cfg, std::size_t budget,
                                 const SearchOptions& options = {});

// Greedy reduction to a local minimum that still fails `pr`. Throws
// Error{NotACountermodel} if m does not fail `pr` to begin with.
ProbabilityStructure shrink(const ProbabilityStructure& m, Principle pr, BeliefOperator op,
                            const CheckOptions& options = default_check_options());

}  // namespace doxa
