#pragma once

// Straight-from-the-definition reimplementations used to cross-check the
// library. Deliberately naive: per-state loops, no caching, no grouping.

#include <doxa/structure.hpp>

#include <cstddef>
#include <vector>

namespace oracle {

using doxa::ProbabilityStructure;
using doxa::Proposition;
using doxa::Rational;

inline Rational mass(const ProbabilityStructure& m, const Proposition& p) {
  Rational w = 0;
  for (std::size_t s = 0; s < m.state_count(); ++s) {
    if (p.contains(s)) w += m.weights()[s];
  }
  return w;
}

inline Rational given(const ProbabilityStructure& m, const Proposition& p, const Proposition& e) {
  return mass(m, p & e) / mass(m, e);
}

inline const Proposition& cell(const ProbabilityStructure& m, std::size_t s) {
  for (const auto& c : m.question().cells()) {
    if (c.contains(s)) return c;
  }
  throw std::logic_error("state without a cell");
}

// s survives iff the states whose cell is strictly more probable than [s]
// carry conditional mass < t.
inline Proposition hpd(const ProbabilityStructure& m, const Proposition& e) {
  Proposition out(m.state_count());
  for (std::size_t s = 0; s < m.state_count(); ++s) {
    if (!e.contains(s)) continue;
    const Rational mine = given(m, cell(m, s), e);
    Proposition above(m.state_count());
    for (std::size_t r = 0; r < m.state_count(); ++r) {
      if (given(m, cell(m, r), e) > mine) above.insert(r);
    }
    if (given(m, above, e) < m.threshold()) out.insert(s);
  }
  return out;
}

inline Proposition lk(const ProbabilityStructure& m, const Proposition& e) {
  Proposition out(m.state_count());
  for (std::size_t s = 0; s < m.state_count(); ++s) {
    if (!e.contains(s)) continue;
    const Rational mine = given(m, cell(m, s), e);
    bool keep = true;
    for (const auto& q : m.question().cells()) {
      if (mine < m.threshold() * given(m, q, e)) keep = false;
    }
    if (keep) out.insert(s);
  }
  return out;
}

inline Proposition belief(const ProbabilityStructure& m, const Proposition& e, bool use_lk) {
  return use_lk ? lk(m, e) : hpd(m, e);
}

enum class Kind { DiamondMinus, DiamondR, BoxPlus, BoxMinus, BoxR, PiMinus, PiR };

// All subfamilies of the evidence list that partition e (brute force over
// subsets; only for small evidence lists).
inline std::vector<std::vector<Proposition>> partitions(const ProbabilityStructure& m, const Proposition& e) {
  std::vector<Proposition> inside;
  for (const auto& f : m.evidence()) {
    if (f.is_subset_of(e)) inside.push_back(f);
  }
  if (inside.size() > 20) throw std::logic_error("too many evidence sets for the brute-force oracle");
  std::vector<std::vector<Proposition>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << inside.size()); ++mask) {
    std::vector<Proposition> family;
    Proposition cover(m.state_count());
    bool disjoint = true;
    for (std::size_t i = 0; i < inside.size(); ++i) {
      if (!((mask >> i) & 1u)) continue;
      if (cover.intersects(inside[i])) disjoint = false;
      cover |= inside[i];
      family.push_back(inside[i]);
    }
    if (disjoint && cover == e) out.push_back(family);
  }
  return out;
}

// Does the principle hold on m? Quantifies over every pair of evidence sets
// directly rather than over discoveries.
inline bool holds(const ProbabilityStructure& m, Kind k, bool use_lk) {
  const auto& ev = m.evidence();
  if (k == Kind::PiMinus || k == Kind::PiR) {
    for (const auto& e : ev) {
      const auto be = belief(m, e, use_lk);
      for (const auto& family : partitions(m, e)) {
        bool some = false;
        for (const auto& p : family) {
          const auto bp = belief(m, p, use_lk);
          if (k == Kind::PiMinus ? bp.is_subset_of(be) : be.intersects(bp)) some = true;
        }
        if (!some) return false;
      }
    }
    return true;
  }
  for (const auto& e : ev) {
    for (const auto& f : ev) {
      if (f == e || !f.is_subset_of(e)) continue;
      const auto be = belief(m, e, use_lk);
      const auto bf = belief(m, f, use_lk);
      const bool diamond = k == Kind::DiamondMinus || k == Kind::DiamondR;
      const bool pre = diamond ? be.intersects(f) : be.is_subset_of(f);
      if (!pre) continue;
      bool ok = true;
      switch (k) {
        case Kind::DiamondMinus:
        case Kind::BoxMinus: ok = bf.is_subset_of(be); break;
        case Kind::BoxPlus: ok = be.is_subset_of(bf); break;
        default: ok = be.intersects(bf); break;
      }
      if (!ok) return false;
    }
  }
  return true;
}

// Ratio form over state pairs: Pr([s])/Pr([s']) = Pr([s]|E)/Pr([s']|E)
// whenever s, s' in E and Pr([s']|E) > 0.
inline bool orthogonal(const ProbabilityStructure& m) {
  const auto all = m.universe();
  for (const auto& e : m.evidence()) {
    for (std::size_t s = 0; s < m.state_count(); ++s) {
      for (std::size_t r = 0; r < m.state_count(); ++r) {
        if (!e.contains(s) || !e.contains(r)) continue;
        const Rational below_e = given(m, cell(m, r), e);
        if (below_e == 0) continue;
        const Rational below = given(m, cell(m, r), all);
        if (below == 0) return false;
        if (given(m, cell(m, s), all) / below != given(m, cell(m, s), e) / below_e) return false;
      }
    }
  }
  return true;
}

inline bool stable(const ProbabilityStructure& m) {
  const auto& cells = m.question().cells();
  const auto all = m.universe();
  for (std::size_t mask = 0; mask < (std::size_t{1} << cells.size()); ++mask) {
    Proposition u(m.state_count());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if ((mask >> i) & 1u) u |= cells[i];
    }
    if (given(m, u, all) < m.threshold()) continue;
    for (const auto& e : m.evidence()) {
      if (e.intersects(u) && given(m, u, e) < m.threshold()) return false;
    }
  }
  return true;
}

}  // namespace oracle
