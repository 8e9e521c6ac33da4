#include "possind/relation.hpp"

#include <algorithm>

#include "possind/error.hpp"

namespace possind {

void validate_triplet(const Space& space, const Triplet& t) {
  if (!space.contains(t.all())) {
    throw Error(ErrorCode::BadTriplet,
                "triplet names variables outside the space");
  }
  if (t.a.empty() || t.b.empty()) {
    throw Error(ErrorCode::BadTriplet,
                "triplet " + format(space, t) + " needs nonempty A and B");
  }
  if (!t.a.disjoint(t.b) || !t.a.disjoint(t.c) || !t.b.disjoint(t.c)) {
    throw Error(ErrorCode::BadTriplet,
                "triplet " + format(space, t) + " is not pairwise disjoint");
  }
}

Triplet parse_triplet(const Space& space, std::string_view a,
                      std::string_view b, std::string_view c) {
  Triplet t{space.parse_subset(a), space.parse_subset(b),
            space.parse_subset(c)};
  validate_triplet(space, t);
  return t;
}

std::string format(const Space& space, const Triplet& t) {
  return "(" + space.format(t.a) + "," + space.format(t.b) + "," +
         space.format(t.c) + ")";
}

std::size_t triplet_count(std::size_t n) {
  std::size_t p4 = 1, p3 = 1, p2 = 1;
  for (std::size_t i = 0; i < n; ++i) {
    p4 *= 4;
    p3 *= 3;
    p2 *= 2;
  }
  return p4 - 2 * p3 + p2;
}

std::vector<Triplet> enumerate_triplets(const Space& space) {
  return enumerate_triplets(space, space.all());
}

std::vector<Triplet> enumerate_triplets(const Space& space, VarSet universe) {
  if (!space.contains(universe)) {
    throw Error(ErrorCode::ScopeMismatch,
                "universe names variables outside the space");
  }
  const auto idx = universe.indices();
  if (idx.size() < 2) {
    throw Error(ErrorCode::TooSmall,
                "triplets need at least two variables, got " +
                    std::to_string(idx.size()));
  }
  if (idx.size() > 12 || triplet_count(idx.size()) > kMaxTriplets) {
    throw Error(ErrorCode::TooLarge,
                std::to_string(idx.size()) +
                    " variables give more triplets than the enumeration "
                    "guard allows");
  }

  // Each variable is labelled 0 (unused), 1 (A), 2 (B) or 3 (C).
  std::size_t codes = 1;
  for (std::size_t i = 0; i < idx.size(); ++i) codes *= 4;
  std::vector<Triplet> out;
  out.reserve(triplet_count(idx.size()));
  for (std::size_t code = 0; code < codes; ++code) {
    Triplet t;
    std::size_t rest = code;
    for (auto var : idx) {
      switch (rest % 4) {
        case 1: t.a = t.a | VarSet::single(var); break;
        case 2: t.b = t.b | VarSet::single(var); break;
        case 3: t.c = t.c | VarSet::single(var); break;
        default: break;
      }
      rest /= 4;
    }
    if (!t.a.empty() && !t.b.empty()) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void IndependenceRelation::insert(const Triplet& t) {
  validate_triplet(space_, t);
  members_.insert(t);
}

}  // namespace possind
