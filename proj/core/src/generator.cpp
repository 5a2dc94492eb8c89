#include "doxa/generator.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <unordered_set>

namespace doxa {

std::string_view to_string(GeneratorMode mode) {
  switch (mode) {
    case GeneratorMode::Free: return "free";
    case GeneratorMode::Coarse: return "coarse";
    case GeneratorMode::Product: return "product";
  }
  return "?";
}

std::optional<GeneratorMode> parse_generator_mode(std::string_view name) {
  if (name == "free") return GeneratorMode::Free;
  if (name == "coarse") return GeneratorMode::Coarse;
  if (name == "product") return GeneratorMode::Product;
  return std::nullopt;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

void validate_config(const GeneratorConfig& cfg) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::InfeasibleConfig, why); };
  if (cfg.state_count.lo == 0 || cfg.state_count.lo > cfg.state_count.hi) fail("state count range is empty");
  if (cfg.evidence_count.lo > cfg.evidence_count.hi || cfg.evidence_count.hi == 0) fail("evidence count range is empty");
  if (cfg.cell_count.lo == 0 || cfg.cell_count.lo > cfg.cell_count.hi) fail("cell count range is empty");
  if (cfg.cell_count.lo > cfg.state_count.hi) fail("more cells than states");
  if (cfg.weight_bound == 0) fail("weight bound must be positive");
  if (cfg.threshold_denominator_bound == 0) fail("threshold denominator bound must be positive");
  if (cfg.threshold_lo < 0 || cfg.threshold_hi > 1 || cfg.threshold_lo > cfg.threshold_hi) {
    fail("threshold range must lie within [0,1]");
  }
  if (cfg.threshold_lo_exclusive && cfg.threshold_lo == cfg.threshold_hi) fail("threshold range is empty");
}

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (engine_() >> 63) != 0; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

Rational draw_threshold(const GeneratorConfig& cfg, Rng& rng) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const auto d = rng.between(1, cfg.threshold_denominator_bound);
    mpz_class lo_num = cfg.threshold_lo.get_num() * d;
    mpz_class lo;
    mpz_cdiv_q(lo.get_mpz_t(), lo_num.get_mpz_t(), cfg.threshold_lo.get_den().get_mpz_t());
    if (cfg.threshold_lo_exclusive) {
      Rational at_lo(lo, d);
      at_lo.canonicalize();
      if (at_lo == cfg.threshold_lo) lo += 1;
    }
    mpz_class hi_num = cfg.threshold_hi.get_num() * d;
    mpz_class hi;
    mpz_fdiv_q(hi.get_mpz_t(), hi_num.get_mpz_t(), cfg.threshold_hi.get_den().get_mpz_t());
    if (lo > hi) continue;
    const mpz_class span = hi - lo + 1;
    const mpz_class pick = lo + mpz_class(static_cast<unsigned long>(rng.below(span.get_ui())));
    Rational t(pick, d);
    t.canonicalize();
    return t;
  }
  throw Error(ErrorCode::InfeasibleConfig, "no threshold with a small denominator lies in the range");
}

std::vector<Rational> draw_weights(std::size_t n, const GeneratorConfig& cfg, Rng& rng) {
  std::vector<Rational> w(n);
  bool positive = false;
  while (!positive) {
    for (auto& x : w) {
      x = Rational(static_cast<unsigned long>(rng.below(cfg.weight_bound + 1)));
      positive = positive || x > 0;
    }
  }
  return w;
}

// Random surjection of n items onto k groups.
std::vector<std::size_t> draw_grouping(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);
  std::vector<std::size_t> group(n);
  for (std::size_t i = 0; i < n; ++i) group[order[i]] = i < k ? i : rng.below(k);
  return group;
}

std::size_t clamp_count(const IntRange& r, std::size_t cap, Rng& rng) {
  const auto hi = std::min(r.hi, cap);
  const auto lo = std::min(r.lo, hi);
  return rng.between(lo, hi);
}

// Draws evidence sets as subsets of `units` (each unit is a set of states),
// either of all units or of the units of an already drawn set.
std::vector<std::vector<std::size_t>> draw_evidence(const std::vector<std::vector<std::size_t>>& units,
                                                    const std::vector<Rational>& weights,
                                                    const GeneratorConfig& cfg, Rng& rng) {
  const std::size_t u = units.size();
  const std::size_t target = rng.between(cfg.evidence_count.lo, cfg.evidence_count.hi);
  std::vector<std::vector<bool>> chosen;  // per evidence set, which units
  std::unordered_set<std::vector<bool>> seen;

  auto positive = [&](const std::vector<bool>& pick) {
    Rational w;
    for (std::size_t i = 0; i < u; ++i) {
      if (!pick[i]) continue;
      for (auto s : units[i]) w += weights[s];
    }
    return w > 0;
  };

  if (cfg.include_full_evidence) {
    std::vector<bool> all(u, true);
    seen.insert(all);
    chosen.push_back(std::move(all));
  }
  for (std::size_t attempt = 0; chosen.size() < target && attempt < 64 * target; ++attempt) {
    std::vector<bool> pick(u, false);
    const bool refine = !chosen.empty() && rng.coin();
    const auto* base = refine ? &chosen[rng.below(chosen.size())] : nullptr;
    bool any = false;
    for (std::size_t i = 0; i < u; ++i) {
      if (base != nullptr && !(*base)[i]) continue;
      pick[i] = rng.coin();
      any = any || pick[i];
    }
    if (!any || !positive(pick) || seen.count(pick) != 0) continue;
    seen.insert(pick);
    chosen.push_back(std::move(pick));
  }

  std::vector<std::vector<std::size_t>> out;
  for (const auto& pick : chosen) {
    std::vector<std::size_t> states;
    for (std::size_t i = 0; i < u; ++i) {
      if (pick[i]) states.insert(states.end(), units[i].begin(), units[i].end());
    }
    std::sort(states.begin(), states.end());
    out.push_back(std::move(states));
  }
  return out;
}

ProbabilityStructure generate_flat(const GeneratorConfig& cfg, Rng& rng) {
  const std::size_t n = rng.between(std::max(cfg.state_count.lo, cfg.cell_count.lo), cfg.state_count.hi);
  const std::size_t k = clamp_count(cfg.cell_count, n, rng);

  StructureSpec spec;
  for (std::size_t s = 0; s < n; ++s) spec.states.push_back("s" + std::to_string(s + 1));
  spec.weights = draw_weights(n, cfg, rng);
  const auto group = draw_grouping(n, k, rng);
  spec.cells.assign(k, {});
  for (std::size_t s = 0; s < n; ++s) spec.cells[group[s]].push_back(s);

  std::vector<std::vector<std::size_t>> units;
  if (cfg.mode == GeneratorMode::Coarse) {
    units = spec.cells;
  } else {
    for (std::size_t s = 0; s < n; ++s) units.push_back({s});
  }
  spec.evidence = draw_evidence(units, spec.weights, cfg, rng);
  spec.threshold = draw_threshold(cfg, rng);
  return validate_structure(std::move(spec));
}

ProbabilityStructure generate_product(const GeneratorConfig& cfg, Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  for (std::size_t a = 1; a <= cfg.state_count.hi; ++a) {
    for (std::size_t b = 1; a * b <= cfg.state_count.hi; ++b) {
      if (a * b >= cfg.state_count.lo && a >= cfg.cell_count.lo) shapes.emplace_back(a, b);
    }
  }
  if (shapes.empty()) throw Error(ErrorCode::InfeasibleConfig, "no product shape fits the state and cell ranges");
  const auto [a, b] = shapes[rng.below(shapes.size())];
  const std::size_t k = clamp_count(cfg.cell_count, a, rng);

  const auto wx = draw_weights(a, cfg, rng);
  const auto wy = draw_weights(b, cfg, rng);
  const auto group = draw_grouping(a, k, rng);

  StructureSpec spec;
  spec.cells.assign(k, {});
  for (std::size_t x = 0; x < a; ++x) {
    for (std::size_t y = 0; y < b; ++y) {
      const auto s = spec.states.size();
      spec.states.push_back("x" + std::to_string(x + 1) + "_y" + std::to_string(y + 1));
      spec.weights.push_back(wx[x] * wy[y]);
      spec.cells[group[x]].push_back(s);
    }
  }
  // Evidence fixes a set of y values.
  std::vector<std::vector<std::size_t>> units(b);
  for (std::size_t x = 0; x < a; ++x) {
    for (std::size_t y = 0; y < b; ++y) units[y].push_back(x * b + y);
  }
  spec.evidence = draw_evidence(units, spec.weights, cfg, rng);
  spec.threshold = draw_threshold(cfg, rng);
  return validate_structure(std::move(spec));
}

}  // namespace

ProbabilityStructure generate_random(const GeneratorConfig& cfg) {
  validate_config(cfg);
  Rng rng(cfg.seed);
  return cfg.mode == GeneratorMode::Product ? generate_product(cfg, rng) : generate_flat(cfg, rng);
}

}  // namespace doxa
