#include "possind/distribution.hpp"

#include <algorithm>
#include <cmath>

#include "possind/error.hpp"

namespace possind {

namespace {

void check_value(double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorCode::OutOfRange,
                "possibility degree " + std::to_string(v) +
                    " is outside [0,1]");
  }
}

void require_same_space(const Space& s1, const Space& s2) {
  if (!(s1 == s2)) {
    throw Error(ErrorCode::SpaceMismatch,
                "distributions are defined on different spaces");
  }
}

}  // namespace

Distribution::Distribution(Space space, VarSet scope, std::vector<double> table)
    : space_(std::move(space)), scope_(scope), table_(std::move(table)) {
  if (!space_.contains(scope_)) {
    throw Error(ErrorCode::ScopeMismatch,
                "scope names variables outside the space");
  }
  if (table_.size() != space_.cardinality(scope_)) {
    throw Error(ErrorCode::ScopeMismatch,
                "table has " + std::to_string(table_.size()) +
                    " entries, scope " + space_.format(scope_) + " needs " +
                    std::to_string(space_.cardinality(scope_)));
  }
  for (double v : table_) check_value(v);
}

Distribution Distribution::constant(Space space, VarSet scope, double value) {
  const auto n = space.cardinality(scope);
  return Distribution(std::move(space), scope, std::vector<double>(n, value));
}

double Distribution::at(const Assignment& a) const {
  if (a.scope != scope_) {
    throw Error(ErrorCode::ScopeMismatch,
                "assignment over " + space_.format(a.scope) +
                    " does not match scope " + space_.format(scope_));
  }
  return table_[space_.offset(a)];
}

double Distribution::max() const {
  return *std::max_element(table_.begin(), table_.end());
}

Distribution make_distribution(
    const Space& space, VarSet scope,
    std::span<const std::pair<Assignment, double>> entries) {
  std::vector<double> table(space.cardinality(scope), 0.0);
  for (const auto& [a, v] : entries) {
    if (a.scope != scope) {
      throw Error(ErrorCode::ScopeMismatch,
                  "entry over " + space.format(a.scope) +
                      " does not match scope " + space.format(scope));
    }
    check_value(v);
    table[space.offset(a)] = v;
  }
  return Distribution(space, scope, std::move(table));
}

Distribution marginalize(const Distribution& dist, VarSet keep) {
  const auto& space = dist.space();
  const auto map = project_offsets(space, dist.scope(), keep);
  std::vector<double> out(space.cardinality(keep), 0.0);
  for (std::size_t n = 0; n < map.size(); ++n) {
    out[map[n]] = std::max(out[map[n]], dist[n]);
  }
  return Distribution(space, keep, std::move(out));
}

Distribution extend(const Distribution& dist, VarSet to) {
  const auto& space = dist.space();
  if (!space.contains(to)) {
    throw Error(ErrorCode::ScopeMismatch,
                "extension target names variables outside the space");
  }
  const auto map = project_offsets(space, to, dist.scope());
  std::vector<double> out(map.size());
  for (std::size_t n = 0; n < map.size(); ++n) out[n] = dist[map[n]];
  return Distribution(space, to, std::move(out));
}

double max_abs_difference(const Distribution& d1, const Distribution& d2) {
  require_same_space(d1.space(), d2.space());
  const auto scope = d1.scope() | d2.scope();
  const auto e1 = extend(d1, scope);
  const auto e2 = extend(d2, scope);
  double worst = 0.0;
  for (std::size_t n = 0; n < e1.size(); ++n) {
    worst = std::max(worst, std::abs(e1[n] - e2[n]));
  }
  return worst;
}

bool equal_within(const Distribution& d1, const Distribution& d2, double eps) {
  return max_abs_difference(d1, d2) <= eps;
}

double possibility_measure(const Distribution& dist,
                           std::span<const Assignment> event) {
  double out = 0.0;
  for (const auto& a : event) out = std::max(out, dist.at(a));
  return out;
}

}  // namespace possind
