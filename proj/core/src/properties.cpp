#include "doxa/properties.hpp"

#include <cstdint>

#include "doxa/belief.hpp"

namespace doxa {

std::string_view to_string(Constraint c) {
  return c == Constraint::Orthogonality ? "orthogonality" : "stability";
}

namespace {

std::vector<Rational> prior_cell_weights(const ProbabilityStructure& m) { return cell_weights(m, m.universe()); }

// Representative state of cell c inside e (the lowest index).
std::size_t representative(const ProbabilityStructure& m, std::size_t cell, const Proposition& e) {
  return *(m.question().cell(cell) & e).first();
}

// Calls on_violation(e_index, a, b, ...) for each pair of cells that both meet
// E, not both with zero conditional mass, whose cross products differ.
// Returning false from the callback stops the scan.
template <typename F>
void scan_orthogonality(const ProbabilityStructure& m, F&& on_violation) {
  const auto prior = prior_cell_weights(m);
  const auto& q = m.question();
  for (std::size_t e = 0; e < m.evidence().size(); ++e) {
    const auto& ev = m.evidence()[e];
    const auto within = cell_weights(m, ev);
    std::vector<std::size_t> meeting;
    for (std::size_t c = 0; c < q.size(); ++c) {
      if (q.cell(c).intersects(ev)) meeting.push_back(c);
    }
    for (std::size_t x = 0; x < meeting.size(); ++x) {
      for (std::size_t y = x + 1; y < meeting.size(); ++y) {
        const auto a = meeting[x];
        const auto b = meeting[y];
        if (within[a] == 0 && within[b] == 0) continue;
        if (prior[a] * within[b] == prior[b] * within[a]) continue;
        if (!on_violation(e, a, b, prior, within)) return;
      }
    }
  }
}

CellPairDetail pair_detail(const ProbabilityStructure& m, const Proposition& ev, std::size_t a, std::size_t b,
                           const std::vector<Rational>& prior, const std::vector<Rational>& within) {
  // Orient so the denominator cell has positive conditional mass.
  if (within[b] == 0) std::swap(a, b);
  CellPairDetail d;
  d.cell_a = a;
  d.cell_b = b;
  d.state_a = representative(m, a, ev);
  d.state_b = representative(m, b, ev);
  d.prior_ratio = prior[a] / prior[b];
  d.conditional_ratio = within[a] / within[b];
  return d;
}

struct StabilityScan {
  const ProbabilityStructure& m;
  std::vector<Rational> prior;
  std::vector<std::vector<Rational>> within;  // per evidence set, cell weights
  std::vector<Rational> evidence_weight;
  std::vector<std::uint32_t> meets;  // per evidence set, cells meeting it
  Rational threshold_mass;           // t * total weight
  bool stop_at_first = false;
  ConstraintReport report{Constraint::Stability, {}};

  explicit StabilityScan(const ProbabilityStructure& structure, std::size_t max_cells, bool first_only)
      : m(structure), stop_at_first(first_only) {
    const auto k = m.question().size();
    if (k > max_cells || k > 30) {
      throw Error(ErrorCode::QuestionTooLarge, "stability enumerates 2^" + std::to_string(k) +
                                                   " answer sets; the bound is " + std::to_string(max_cells) +
                                                   " cells");
    }
    prior = prior_cell_weights(m);
    threshold_mass = m.threshold() * m.total_weight();
    for (const auto& ev : m.evidence()) {
      within.push_back(cell_weights(m, ev));
      evidence_weight.push_back(m.weight(ev));
      std::uint32_t mask = 0;
      for (std::size_t c = 0; c < k; ++c) {
        if (m.question().cell(c).intersects(ev)) mask |= std::uint32_t{1} << c;
      }
      meets.push_back(mask);
    }
  }

  bool done() const { return stop_at_first && !report.violations.empty(); }

  void check_leaf(std::uint32_t mask, const Rational& prior_sum) {
    if (prior_sum < threshold_mass) return;
    for (std::size_t e = 0; e < within.size() && !done(); ++e) {
      if ((meets[e] & mask) == 0) continue;
      Rational cond;
      for (std::size_t c = 0; c < prior.size(); ++c) {
        if (mask & (std::uint32_t{1} << c)) cond += within[e][c];
      }
      if (cond >= m.threshold() * evidence_weight[e]) continue;
      CellSetDetail d;
      for (std::size_t c = 0; c < prior.size(); ++c) {
        if (mask & (std::uint32_t{1} << c)) d.cells.push_back(c);
      }
      d.prior_mass = prior_sum / m.total_weight();
      d.conditional_mass = cond / evidence_weight[e];
      report.violations.push_back({m.evidence()[e], std::move(d)});
    }
  }

  // Enumerates masks in increasing numeric order.
  void run() {
    const auto k = prior.size();
    const std::uint64_t limit = std::uint64_t{1} << k;
    // sum(mask) = sum(mask minus its lowest bit) + weight of that cell.
    std::vector<Rational> sums(k <= 16 ? limit : 0);
    for (std::uint64_t mask = 0; mask < limit && !done(); ++mask) {
      Rational s;
      if (!sums.empty()) {
        if (mask != 0) {
          const auto low = static_cast<std::size_t>(__builtin_ctzll(mask));
          sums[mask] = sums[mask & (mask - 1)] + prior[low];
        }
        s = sums[mask];
      } else {
        for (std::size_t c = 0; c < k; ++c) {
          if (mask & (std::uint64_t{1} << c)) s += prior[c];
        }
      }
      check_leaf(static_cast<std::uint32_t>(mask), s);
    }
  }
};

}  // namespace

ConstraintReport check_orthogonality(const ProbabilityStructure& m) {
  ConstraintReport report{Constraint::Orthogonality, {}};
  scan_orthogonality(m, [&](std::size_t e, std::size_t a, std::size_t b, const auto& prior, const auto& within) {
    const auto& ev = m.evidence()[e];
    report.violations.push_back({ev, pair_detail(m, ev, a, b, prior, within)});
    return true;
  });
  return report;
}

bool is_orthogonal(const ProbabilityStructure& m) {
  bool ok = true;
  scan_orthogonality(m, [&](auto&&...) {
    ok = false;
    return false;
  });
  return ok;
}

ConstraintReport check_stability(const ProbabilityStructure& m, std::size_t max_cells) {
  StabilityScan scan(m, max_cells, false);
  scan.run();
  return std::move(scan.report);
}

bool is_stable(const ProbabilityStructure& m, std::size_t max_cells) {
  StabilityScan scan(m, max_cells, true);
  scan.run();
  return scan.report.holds();
}

bool violation_reproduces(const ProbabilityStructure& m, Constraint c, const ConstraintViolation& v) {
  if (!m.is_evidence(v.evidence)) return false;
  const auto& q = m.question();
  if (c == Constraint::Orthogonality) {
    const auto* d = std::get_if<CellPairDetail>(&v.detail);
    if (d == nullptr || d->cell_a >= q.size() || d->cell_b >= q.size()) return false;
    const auto& qa = q.cell(d->cell_a);
    const auto& qb = q.cell(d->cell_b);
    if (!qa.intersects(v.evidence) || !qb.intersects(v.evidence)) return false;
    if (conditional_probability(m, qb, v.evidence) <= 0) return false;
    const Rational prior_ratio = m.prior(qa) / m.prior(qb);
    const Rational cond_ratio = conditional_probability(m, qa, v.evidence) / conditional_probability(m, qb, v.evidence);
    return prior_ratio != cond_ratio && prior_ratio == d->prior_ratio && cond_ratio == d->conditional_ratio;
  }
  const auto* d = std::get_if<CellSetDetail>(&v.detail);
  if (d == nullptr) return false;
  Proposition u = m.empty_set();
  for (auto cell : d->cells) {
    if (cell >= q.size()) return false;
    u |= q.cell(cell);
  }
  return m.prior(u) >= m.threshold() && u.intersects(v.evidence) &&
         conditional_probability(m, u, v.evidence) < m.threshold();
}

}  // namespace doxa
