#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "possind/space.hpp"

namespace possind {

/// Dense table of possibility degrees over the joint assignments of a scope.
/// Immutable once built; every value lies in [0,1].
class Distribution {
 public:
  Distribution(Space space, VarSet scope, std::vector<double> table);

  static Distribution constant(Space space, VarSet scope, double value);

  const Space& space() const { return space_; }
  VarSet scope() const { return scope_; }
  std::span<const double> table() const { return table_; }
  std::size_t size() const { return table_.size(); }

  double operator[](std::size_t offset) const { return table_[offset]; }
  double at(const Assignment& a) const;

  double max() const;
  /// True when some entry is exactly 1.
  bool normalised() const { return max() == 1.0; }

 private:
  Space space_;
  VarSet scope_;
  std::vector<double> table_;
};

/// Builds a table from sparse entries; unlisted assignments are 0.
Distribution make_distribution(
    const Space& space, VarSet scope,
    std::span<const std::pair<Assignment, double>> entries);

/// Max-projection onto `keep` ⊆ scope.
Distribution marginalize(const Distribution& dist, VarSet keep);

/// Cylindrical extension onto `to` ⊇ scope.
Distribution extend(const Distribution& dist, VarSet to);

/// Largest pointwise |d1 - d2| after extending both to the union of scopes.
double max_abs_difference(const Distribution& d1, const Distribution& d2);

bool equal_within(const Distribution& d1, const Distribution& d2, double eps);

/// Π(event) = max of the distribution over the event; 0 for an empty event.
double possibility_measure(const Distribution& dist,
                           std::span<const Assignment> event);

}  // namespace possind
