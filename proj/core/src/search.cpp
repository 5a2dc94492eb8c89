#include "doxa/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <set>

namespace doxa {

std::string_view to_string(ConstraintFilter f) {
  switch (f) {
    case ConstraintFilter::None: return "none";
    case ConstraintFilter::Orthogonality: return "orthogonality";
    case ConstraintFilter::Stability: return "stability";
    case ConstraintFilter::Both: return "both";
  }
  return "?";
}

std::optional<ConstraintFilter> parse_constraint_filter(std::string_view name) {
  if (name == "none") return ConstraintFilter::None;
  if (name == "orthogonality") return ConstraintFilter::Orthogonality;
  if (name == "stability") return ConstraintFilter::Stability;
  if (name == "both") return ConstraintFilter::Both;
  return std::nullopt;
}

bool passes_filter(const ProbabilityStructure& m, ConstraintFilter filter) {
  switch (filter) {
    case ConstraintFilter::None: return true;
    case ConstraintFilter::Orthogonality: return is_orthogonal(m);
    case ConstraintFilter::Stability: return is_stable(m);
    case ConstraintFilter::Both: return is_orthogonal(m) && is_stable(m);
  }
  return false;
}

SearchResult search_countermodel(Principle pr, BeliefOperator op, ConstraintFilter filter, const GeneratorConfig& cfg,
                                 std::size_t budget, const SearchOptions& options) {
  validate_config(cfg);
  const auto start = std::chrono::steady_clock::now();
  unsigned workers = options.workers != 0 ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(budget, 1)));

  CheckOptions check = options.check;
  check.first_witness_only = true;

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{kNone};
  struct WorkerState {
    std::vector<std::size_t> accepted;
    std::optional<Countermodel> hit;
  };
  std::vector<WorkerState> states(workers);

  auto work = [&](unsigned w) {
    auto& state = states[w];
    for (std::size_t i = w; i < budget; i += workers) {
      if (i > best.load(std::memory_order_relaxed)) break;
      GeneratorConfig trial = cfg;
      trial.seed = trial_seed(cfg.seed, i);
      auto m = generate_random(trial);
      if (!passes_filter(m, filter)) continue;
      state.accepted.push_back(i);
      auto verdict = check_principle(m, pr, op, check);
      if (verdict.holds()) continue;
      state.hit = Countermodel{std::move(m), std::move(verdict.witnesses.front()), i};
      std::size_t current = best.load();
      while (i < current && !best.compare_exchange_weak(current, i)) {
      }
      break;
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  SearchResult result;
  const std::size_t hit_index = best.load();
  for (auto& state : states) {
    if (state.hit && state.hit->trial_index == hit_index) result.found = std::move(state.hit);
    result.structures_checked += static_cast<std::size_t>(
        std::count_if(state.accepted.begin(), state.accepted.end(), [&](std::size_t i) { return i <= hit_index; }));
  }
  result.structures_tried = result.found ? hit_index + 1 : budget;
  result.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return result;
}

namespace {

// Rebuilds a spec keeping only `keep` states, dropping empty cells and
// evidence sets that become empty or duplicate.
std::optional<ProbabilityStructure> restrict_states(const StructureSpec& spec, const std::vector<bool>& keep) {
  const std::size_t n = spec.states.size();
  std::vector<std::size_t> remap(n, n);
  StructureSpec out;
  for (std::size_t s = 0; s < n; ++s) {
    if (!keep[s]) continue;
    remap[s] = out.states.size();
    out.states.push_back(spec.states[s]);
    out.weights.push_back(spec.weights[s]);
  }
  auto project = [&](const std::vector<std::size_t>& set) {
    std::vector<std::size_t> r;
    for (auto s : set) {
      if (remap[s] != n) r.push_back(remap[s]);
    }
    return r;
  };
  for (const auto& c : spec.cells) {
    auto r = project(c);
    if (!r.empty()) out.cells.push_back(std::move(r));
  }
  std::set<std::vector<std::size_t>> seen;
  for (const auto& e : spec.evidence) {
    auto r = project(e);
    if (r.empty()) continue;
    std::sort(r.begin(), r.end());
    Rational w;
    for (auto s : r) w += out.weights[s];
    if (w == 0 || !seen.insert(r).second) continue;
    out.evidence.push_back(std::move(r));
  }
  out.threshold = spec.threshold;
  try {
    return validate_structure(std::move(out));
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<ProbabilityStructure> try_build(StructureSpec spec) {
  try {
    return validate_structure(std::move(spec));
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Scales weights to coprime integers; beliefs are invariant under scaling.
StructureSpec integer_weights(StructureSpec spec) {
  mpz_class lcm = 1;
  for (const auto& w : spec.weights) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), w.get_den().get_mpz_t());
  mpz_class gcd = 0;
  std::vector<mpz_class> ints;
  for (const auto& w : spec.weights) {
    mpz_class v = w.get_num() * (lcm / w.get_den());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (gcd == 0) gcd = 1;
  for (std::size_t i = 0; i < ints.size(); ++i) spec.weights[i] = Rational(ints[i] / gcd);
  return spec;
}

}  // namespace

ProbabilityStructure shrink(const ProbabilityStructure& m, Principle pr, BeliefOperator op, const CheckOptions& options) {
  CheckOptions check = options;
  check.first_witness_only = true;
  auto fails = [&](const ProbabilityStructure& s) { return !check_principle(s, pr, op, check).holds(); };
  if (!fails(m)) {
    throw Error(ErrorCode::NotACountermodel, std::string(to_string(pr)) + " holds on this structure");
  }

  ProbabilityStructure current = m;
  if (auto scaled = try_build(integer_weights(current.to_spec())); scaled && fails(*scaled)) current = *scaled;

  auto attempt = [&](std::optional<ProbabilityStructure> candidate) {
    if (candidate && fails(*candidate)) {
      current = std::move(*candidate);
      return true;
    }
    return false;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    const auto spec = current.to_spec();
    const std::size_t n = spec.states.size();

    for (std::size_t s = 0; s < n && !changed && n > 1; ++s) {
      std::vector<bool> keep(n, true);
      keep[s] = false;
      changed = attempt(restrict_states(spec, keep));
    }
    for (std::size_t e = 0; e < spec.evidence.size() && !changed; ++e) {
      auto smaller = spec;
      smaller.evidence.erase(smaller.evidence.begin() + static_cast<std::ptrdiff_t>(e));
      changed = attempt(try_build(std::move(smaller)));
    }
    for (std::size_t a = 0; a < spec.cells.size() && !changed; ++a) {
      for (std::size_t b = a + 1; b < spec.cells.size() && !changed; ++b) {
        auto merged = spec;
        merged.cells[a].insert(merged.cells[a].end(), spec.cells[b].begin(), spec.cells[b].end());
        std::sort(merged.cells[a].begin(), merged.cells[a].end());
        merged.cells.erase(merged.cells.begin() + static_cast<std::ptrdiff_t>(b));
        changed = attempt(try_build(std::move(merged)));
      }
    }
    // Weights are coprime integers here; every candidate lowers the weight sum.
    for (std::size_t s = 0; s < n && !changed; ++s) {
      const Rational w = spec.weights[s];
      std::vector<Rational> candidates = {Rational(0), Rational(1)};
      mpz_class half = w.get_num() / 2;
      candidates.emplace_back(half);
      candidates.emplace_back(w - 1);
      for (const auto& c : candidates) {
        if (c < 0 || c >= w) continue;
        auto simpler = spec;
        simpler.weights[s] = c;
        if (attempt(try_build(integer_weights(std::move(simpler))))) {
          changed = true;
          break;
        }
      }
    }
  }
  return current;
}

}  // namespace doxa
