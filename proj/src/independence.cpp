#include "possind/independence.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "possind/error.hpp"

namespace possind {

namespace {

void require_normalised(const Distribution& dist) {
  if (!dist.normalised()) {
    throw Error(ErrorCode::NotNormalised,
                "distribution is not normalised (max " +
                    std::to_string(dist.max()) + ")");
  }
}

void require_triplet(const Distribution& dist, const Triplet& t) {
  validate_triplet(dist.space(), t);
  if (!t.all().subset_of(dist.scope())) {
    throw Error(ErrorCode::BadTriplet,
                "triplet " + format(dist.space(), t) +
                    " leaves the distribution scope " +
                    dist.space().format(dist.scope()));
  }
}

bool close(double x, double y, double eps) { return std::abs(x - y) <= eps; }

/// Marginals of the triplet's four scopes, each extended to Ω_{A∪B∪C}.
struct Marginals {
  Distribution abc, ac, bc, c;
};

Marginals triplet_marginals(const Distribution& dist, const Triplet& t) {
  const auto scope = t.all();
  return {marginalize(dist, scope),
          extend(marginalize(dist, t.a | t.c), scope),
          extend(marginalize(dist, t.b | t.c), scope),
          extend(marginalize(dist, t.c), scope)};
}

void compare_into(const Distribution& left, const Distribution& right,
                  int equation, double eps, MembershipEvidence& out) {
  const auto& space = left.space();
  for (std::size_t n = 0; n < left.size(); ++n) {
    if (!close(left[n], right[n], eps)) {
      out.witnesses.push_back(
          {equation, space.decode(left.scope(), n), left[n], right[n]});
    }
  }
}

Distribution pointwise(const Distribution& x, const Distribution& y,
                       const Conjunction& c) {
  std::vector<double> out(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) out[n] = c.conjoin(x[n], y[n]);
  return Distribution(x.space(), x.scope(), std::move(out));
}

/// Zero-pattern clause: for every x_C with π_C > 0 where `vanishing` has a
/// zero somewhere in the slice, `saturated` must equal π_C on the whole slice.
bool zero_clause(const Marginals& m, const Distribution& vanishing,
                 const Distribution& saturated, VarSet c_scope, double eps) {
  const auto& space = m.c.space();
  const auto slice = project_offsets(space, m.c.scope(), c_scope);
  const auto slices = space.cardinality(c_scope);
  std::vector<char> has_zero(slices, 0), all_equal(slices, 1);
  for (std::size_t n = 0; n < slice.size(); ++n) {
    if (vanishing[n] == 0.0) has_zero[slice[n]] = 1;
    if (!close(saturated[n], m.c[n], eps)) all_equal[slice[n]] = 0;
  }
  for (std::size_t n = 0; n < slice.size(); ++n) {
    if (m.c[n] > 0.0 && has_zero[slice[n]] && !all_equal[slice[n]]) {
      return false;
    }
  }
  return true;
}

}  // namespace

const char* to_string(RelationKind kind) noexcept {
  return kind == RelationKind::Independence ? "independence"
                                            : "noninteractivity";
}

RelationKind parse_relation_kind(std::string_view text) {
  if (text == "independence" || text == "I") return RelationKind::Independence;
  if (text == "noninteractivity" || text == "NI") {
    return RelationKind::NonInteractivity;
  }
  throw Error(ErrorCode::Parse,
              "unknown relation '" + std::string(text) +
                  "' (expected independence or noninteractivity)");
}

Distribution condition(const Distribution& dist, VarSet target, VarSet given,
                       const Conjunction& c) {
  require_normalised(dist);
  if (!target.disjoint(given)) {
    throw Error(ErrorCode::ScopeMismatch,
                "conditioning sets " + dist.space().format(target) + " and " +
                    dist.space().format(given) + " overlap");
  }
  const auto scope = target | given;
  const auto joint = marginalize(dist, scope);
  const auto cond = marginalize(dist, given);
  const auto map = project_offsets(dist.space(), scope, given);
  std::vector<double> out(joint.size());
  for (std::size_t n = 0; n < joint.size(); ++n) {
    out[n] = c.residuum(cond[map[n]], joint[n]);
  }
  return Distribution(dist.space(), scope, std::move(out));
}

MembershipEvidence in_independence(const Distribution& dist, const Triplet& t,
                                   const Conjunction& c, double eps) {
  require_normalised(dist);
  require_triplet(dist, t);
  const auto scope = t.all();
  MembershipEvidence ev;
  compare_into(condition(dist, t.a, t.b | t.c, c),
               extend(condition(dist, t.a, t.c, c), scope), 0, eps, ev);
  compare_into(condition(dist, t.b, t.a | t.c, c),
               extend(condition(dist, t.b, t.c, c), scope), 1, eps, ev);
  ev.verdict = ev.witnesses.empty();
  return ev;
}

MembershipEvidence in_noninteractivity(const Distribution& dist,
                                       const Triplet& t, const Conjunction& c,
                                       double eps) {
  require_normalised(dist);
  require_triplet(dist, t);
  const auto scope = t.all();
  const auto joint = condition(dist, t.a | t.b, t.c, c);
  const auto factored =
      pointwise(extend(condition(dist, t.a, t.c, c), scope),
                extend(condition(dist, t.b, t.c, c), scope), c);
  MembershipEvidence ev;
  compare_into(joint, factored, 0, eps, ev);
  ev.verdict = ev.witnesses.empty();
  return ev;
}

MembershipEvidence test_membership(const Distribution& dist, const Triplet& t,
                                   const Conjunction& c, RelationKind kind,
                                   double eps) {
  return kind == RelationKind::Independence
             ? in_independence(dist, t, c, eps)
             : in_noninteractivity(dist, t, c, eps);
}

bool characterize_luka(const Distribution& dist, const Triplet& t,
                       const Generator& g, double eps) {
  require_normalised(dist);
  require_triplet(dist, t);
  const auto m = triplet_marginals(dist, t);
  for (std::size_t n = 0; n < m.abc.size(); ++n) {
    const double lhs = g.apply(m.abc[n]) + g.apply(m.c[n]);
    const double rhs = g.apply(m.ac[n]) + g.apply(m.bc[n]);
    if (!close(lhs, rhs, eps)) return false;
  }
  return true;
}

bool characterize_product_ni(const Distribution& dist, const Triplet& t,
                             const Generator& g, double eps) {
  require_normalised(dist);
  require_triplet(dist, t);
  const auto m = triplet_marginals(dist, t);
  for (std::size_t n = 0; n < m.abc.size(); ++n) {
    const double lhs = g.apply(m.abc[n]) * g.apply(m.c[n]);
    const double rhs = g.apply(m.ac[n]) * g.apply(m.bc[n]);
    if (!close(lhs, rhs, eps)) return false;
  }
  return true;
}

bool characterize_product_i(const Distribution& dist, const Triplet& t,
                            const Generator& g, double eps) {
  if (!characterize_product_ni(dist, t, g, eps)) return false;
  const auto m = triplet_marginals(dist, t);
  return zero_clause(m, m.bc, m.ac, t.c, eps) &&
         zero_clause(m, m.ac, m.bc, t.c, eps);
}

bool characterize_min_ni(const Distribution& dist, const Triplet& t,
                         double eps) {
  require_normalised(dist);
  require_triplet(dist, t);
  const auto m = triplet_marginals(dist, t);
  for (std::size_t n = 0; n < m.abc.size(); ++n) {
    if (!close(m.abc[n], std::min(m.ac[n], m.bc[n]), eps)) return false;
  }
  return true;
}

bool characterize_min_i(const Distribution& dist, const Triplet& t,
                        double eps) {
  if (!characterize_min_ni(dist, t, eps)) return false;
  const auto m = triplet_marginals(dist, t);
  for (std::size_t n = 0; n < m.abc.size(); ++n) {
    if (!close(m.c[n], std::max(m.ac[n], m.bc[n]), eps)) return false;
  }
  return true;
}

bool characterize(const Distribution& dist, const Triplet& t,
                  const Conjunction& c, RelationKind kind, double eps) {
  const bool independence = kind == RelationKind::Independence;
  switch (c.kind()) {
    case Conjunction::Kind::Min:
      return independence ? characterize_min_i(dist, t, eps)
                          : characterize_min_ni(dist, t, eps);
    case Conjunction::Kind::LukasiewiczLike:
      return characterize_luka(dist, t, c.generator(), eps);
    case Conjunction::Kind::ProductLike:
      return independence
                 ? characterize_product_i(dist, t, c.generator(), eps)
                 : characterize_product_ni(dist, t, c.generator(), eps);
  }
  return false;
}

Distribution compose_luka(const Distribution& f_ac, const Distribution& f_bc,
                          const Generator& g) {
  if (!(f_ac.space() == f_bc.space())) {
    throw Error(ErrorCode::SpaceMismatch, "factors live on different spaces");
  }
  const auto c_scope = f_ac.scope() & f_bc.scope();
  const auto scope = f_ac.scope() | f_bc.scope();
  if (!equal_within(marginalize(f_ac, c_scope), marginalize(f_bc, c_scope),
                    0.0)) {
    throw Error(ErrorCode::OutOfRange,
                "factors disagree on their common marginal");
  }
  const auto x = extend(f_ac, scope);
  const auto y = extend(f_bc, scope);
  for (std::size_t n = 0; n < x.size(); ++n) {
    if (g.apply(x[n]) + g.apply(y[n]) < 1.0 - 1e-12) {
      throw Error(ErrorCode::OutOfRange,
                  "factors violate phi(f_AC) + phi(f_BC) >= 1");
    }
  }
  return pointwise(x, y, Conjunction::lukasiewicz(g));
}

LukaInstance construct_luka_instance(const Space& space, const Triplet& t,
                                     const Generator& g, std::uint64_t seed,
                                     int grid) {
  validate_triplet(space, t);
  if (grid < 1) throw Error(ErrorCode::OutOfRange, "grid must be positive");

  // Smallest grid level k with 2·φ(k/grid) ≥ 1.
  int lowest = 0;
  while (2.0 * g.apply(static_cast<double>(lowest) / grid) < 1.0) ++lowest;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> level(lowest, grid);
  auto draw = [&](std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) x = static_cast<double>(level(rng)) / grid;
    return v;
  };

  auto c_table = draw(space.cardinality(t.c));
  c_table[std::uniform_int_distribution<std::size_t>(
      0, c_table.size() - 1)(rng)] = 1.0;

  // Cap each C-slice at the shared marginal and pin one entry to it.
  auto factor = [&](VarSet side) {
    const auto scope = side | t.c;
    auto table = draw(space.cardinality(scope));
    const auto slice = project_offsets(space, scope, t.c);
    for (std::size_t n = 0; n < table.size(); ++n) {
      table[n] = std::min(table[n], c_table[slice[n]]);
    }
    const std::size_t per_slice = table.size() / c_table.size();
    std::uniform_int_distribution<std::size_t> pick(0, per_slice - 1);
    std::vector<std::size_t> seen(c_table.size(), 0);
    std::vector<std::size_t> chosen(c_table.size());
    for (auto& k : chosen) k = pick(rng);
    for (std::size_t n = 0; n < table.size(); ++n) {
      if (seen[slice[n]]++ == chosen[slice[n]]) table[n] = c_table[slice[n]];
    }
    return Distribution(space, scope, std::move(table));
  };

  auto f_ac = factor(t.a);
  auto f_bc = factor(t.b);
  return {compose_luka(f_ac, f_bc, g), t};
}

IndependenceRelation enumerate_relation(const Distribution& dist,
                                        const Conjunction& c,
                                        RelationKind kind, double eps) {
  require_normalised(dist);
  IndependenceRelation rel(dist.space());
  for (const auto& t : enumerate_triplets(dist.space(), dist.scope())) {
    if (test_membership(dist, t, c, kind, eps).verdict) rel.insert(t);
  }
  return rel;
}

}  // namespace possind
