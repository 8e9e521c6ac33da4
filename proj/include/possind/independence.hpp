#pragma once

#include <cstdint>
#include <vector>

#include "possind/conjunction.hpp"
#include "possind/distribution.hpp"
#include "possind/relation.hpp"

namespace possind {

inline constexpr double kDefaultEps = 1e-9;

enum class RelationKind { Independence, NonInteractivity };

const char* to_string(RelationKind kind) noexcept;
RelationKind parse_relation_kind(std::string_view text);

/// A point of Ω_{A∪B∪C} where a defining equality failed. `equation` is 0
/// for the A-side equality of independence (or the factorisation of
/// no-interactivity) and 1 for the B-side equality.
struct Witness {
  int equation = 0;
  Assignment point;
  double left = 0.0;
  double right = 0.0;
};

struct MembershipEvidence {
  bool verdict = true;
  std::vector<Witness> witnesses;
};

/// π_{target|given}: residuum of the joint marginal on target ∪ given by the
/// marginal on given. Scope of the result is target ∪ given.
Distribution condition(const Distribution& dist, VarSet target, VarSet given,
                       const Conjunction& c);

/// π_{A|B∪C} = π_{A|C} and π_{B|A∪C} = π_{B|C}, pointwise on Ω_{A∪B∪C}.
MembershipEvidence in_independence(const Distribution& dist, const Triplet& t,
                                   const Conjunction& c,
                                   double eps = kDefaultEps);

/// π_{A∪B|C} = c(π_{A|C}, π_{B|C}), pointwise on Ω_{A∪B∪C}.
MembershipEvidence in_noninteractivity(const Distribution& dist,
                                       const Triplet& t, const Conjunction& c,
                                       double eps = kDefaultEps);

MembershipEvidence test_membership(const Distribution& dist, const Triplet& t,
                                   const Conjunction& c, RelationKind kind,
                                   double eps = kDefaultEps);

// Closed-form membership tests stated on marginals only.

/// φ(π_{ABC}) + φ(π_C) = φ(π_{AC}) + φ(π_{BC}).
bool characterize_luka(const Distribution& dist, const Triplet& t,
                       const Generator& g, double eps = kDefaultEps);

/// φ(π_{ABC})·φ(π_C) = φ(π_{AC})·φ(π_{BC}).
bool characterize_product_ni(const Distribution& dist, const Triplet& t,
                             const Generator& g, double eps = kDefaultEps);

/// characterize_product_ni plus the two zero-pattern clauses: wherever
/// π_C(x_C) > 0 and some π_{BC}(·, x_C) vanishes, π_{AC}(·, x_C) = π_C(x_C)
/// throughout, and symmetrically.
bool characterize_product_i(const Distribution& dist, const Triplet& t,
                            const Generator& g, double eps = kDefaultEps);

/// π_{ABC} = min(π_{AC}, π_{BC}) and π_C = max(π_{AC}, π_{BC}).
bool characterize_min_i(const Distribution& dist, const Triplet& t,
                        double eps = kDefaultEps);

/// π_{ABC} = min(π_{AC}, π_{BC}).
bool characterize_min_ni(const Distribution& dist, const Triplet& t,
                         double eps = kDefaultEps);

/// Dispatches to the closed form matching the conjunction family. Under the
/// Lukasiewicz-like family the same test serves both relation kinds.
bool characterize(const Distribution& dist, const Triplet& t,
                  const Conjunction& c, RelationKind kind,
                  double eps = kDefaultEps);

struct LukaInstance {
  Distribution dist;
  Triplet triplet;
};

/// π = φ(Tm)(f_AC, f_BC) on Ω_{A∪B∪C}. Throws OutOfRange unless the
/// factors share their C-marginal and φ(f_AC) + φ(f_BC) ≥ 1 everywhere,
/// which makes (A,B,C) independent under φ(Tm).
Distribution compose_luka(const Distribution& f_ac, const Distribution& f_bc,
                          const Generator& g);

/// Random seeded instance of the construction above: normalised grid factors
/// with values in [φ⁻¹(1/2), 1] and a common C-marginal.
LukaInstance construct_luka_instance(const Space& space, const Triplet& t,
                                     const Generator& g, std::uint64_t seed,
                                     int grid = 10);

/// All triplets over the distribution's scope that belong to the relation.
IndependenceRelation enumerate_relation(const Distribution& dist,
                                        const Conjunction& c,
                                        RelationKind kind,
                                        double eps = kDefaultEps);

}  // namespace possind
