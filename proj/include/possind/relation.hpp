#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "possind/space.hpp"

namespace possind {

/// (A, B, C): "A independent of B given C". A and B are nonempty, C may be
/// empty, all three pairwise disjoint.
struct Triplet {
  VarSet a;
  VarSet b;
  VarSet c;

  VarSet all() const { return a | b | c; }
  Triplet swapped() const { return {b, a, c}; }

  auto operator<=>(const Triplet&) const = default;
};

/// Throws BadTriplet unless `t` is a valid triplet over `space`.
void validate_triplet(const Space& space, const Triplet& t);

Triplet parse_triplet(const Space& space, std::string_view a,
                      std::string_view b, std::string_view c);

std::string format(const Space& space, const Triplet& t);

/// Enumeration guard shared by every exhaustive triplet scan.
inline constexpr std::size_t kMaxTriplets = 100000;

/// 4^n - 2·3^n + 2^n ordered triplets over n variables.
std::size_t triplet_count(std::size_t n);

/// All triplets over the variables of `universe` (the whole space by
/// default), sorted. Throws TooSmall below two variables and TooLarge past
/// kMaxTriplets.
std::vector<Triplet> enumerate_triplets(const Space& space);
std::vector<Triplet> enumerate_triplets(const Space& space, VarSet universe);

/// A finite set of triplets over one space.
class IndependenceRelation {
 public:
  explicit IndependenceRelation(Space space) : space_(std::move(space)) {}

  const Space& space() const { return space_; }
  const std::set<Triplet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool contains(const Triplet& t) const { return members_.count(t) != 0; }
  void insert(const Triplet& t);

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const IndependenceRelation& o) const {
    return space_ == o.space_ && members_ == o.members_;
  }

 private:
  Space space_;
  std::set<Triplet> members_;
};

}  // namespace possind
