#pragma once

// Test-only reference computations. They share no code path with the
// library beyond Space/Distribution accessors: indexing, maxima and residua
// are recomputed from first principles.

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include "possind/conjunction.hpp"
#include "possind/distribution.hpp"

namespace oracle {

using possind::Conjunction;
using possind::Distribution;
using possind::Space;
using possind::VarSet;

/// Every full assignment of the space as a vector of frame indices, first
/// variable slowest.
inline std::vector<std::vector<std::size_t>> all_points(const Space& space) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (std::size_t v = 0; v < space.size(); ++v) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& prefix : out) {
      for (std::size_t k = 0; k < space.variable(v).frame.size(); ++k) {
        auto p = prefix;
        p.push_back(k);
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::vector<std::size_t> restrict(const std::vector<std::size_t>& point,
                                         VarSet scope) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < point.size(); ++v) {
    if (scope.contains(v)) out.push_back(point[v]);
  }
  return out;
}

/// Value of a full-scope distribution at a full point, via its own
/// mixed-radix arithmetic.
inline double value_at(const Distribution& d,
                       const std::vector<std::size_t>& point) {
  std::size_t off = 0;
  for (std::size_t v = 0; v < point.size(); ++v) {
    if (!d.scope().contains(v)) continue;
    off = off * d.space().variable(v).frame.size() + point[v];
  }
  return d[off];
}

using Marginal = std::map<std::vector<std::size_t>, double>;

/// Brute-force max over all completions.
inline Marginal marginal(const Distribution& full, VarSet keep) {
  Marginal out;
  for (const auto& p : all_points(full.space())) {
    auto key = restrict(p, keep);
    auto [it, fresh] = out.try_emplace(key, 0.0);
    it->second = std::max(it->second, value_at(full, p));
  }
  return out;
}

/// sup{ s : c(s, a) ≤ b } by bisection on the monotone map s ↦ c(s, a).
inline double residuum_bisection(const Conjunction& c, double a, double b) {
  if (c.conjoin(1.0, a) <= b) return 1.0;
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (c.conjoin(mid, a) <= b) lo = mid; else hi = mid;
  }
  return lo;
}

/// Conditional at a full point: residuum of the joint marginal by the
/// conditioning marginal, both brute force.
inline double conditional_at(const Distribution& full, VarSet target,
                             VarSet given, const Conjunction& c,
                             const std::vector<std::size_t>& point) {
  const auto joint = marginal(full, target | given);
  const auto cond = marginal(full, given);
  return residuum_bisection(c, cond.at(restrict(point, given)),
                            joint.at(restrict(point, target | given)));
}

}  // namespace oracle
