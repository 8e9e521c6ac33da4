#include "possind/worked_examples.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "possind/graphoid.hpp"
#include "possind/independence.hpp"

namespace possind {

namespace {

constexpr double kEps = 1e-9;

Space three_binary() {
  return Space({{"X1", {"0", "1"}}, {"X2", {"0", "1"}}, {"X3", {"0", "1"}}});
}

using ClosedForm = std::function<double(double joint, double given)>;

/// Compares condition() against a closed form for every ordered pair of
/// disjoint subsets (target nonempty).
bool matches_closed_form(const Distribution& dist, const Conjunction& c,
                         const ClosedForm& form, std::string& detail) {
  const auto& space = dist.space();
  for (const auto& t : enumerate_triplets(space)) {
    // Use (A, B) of each triplet as (target, given); C is ignored.
    const auto cond = condition(dist, t.a, t.b, c);
    const auto joint = marginalize(dist, t.a | t.b);
    const auto given = extend(marginalize(dist, t.b), t.a | t.b);
    for (std::size_t n = 0; n < cond.size(); ++n) {
      const double expected = form(joint[n], given[n]);
      if (std::abs(cond[n] - expected) > kEps) {
        detail = "pi_" + space.format(t.a) + "|" + space.format(t.b) + " at " +
                 space.format(space.decode(cond.scope(), n)) + ": " +
                 std::to_string(cond[n]) + " vs " + std::to_string(expected);
        return false;
      }
    }
  }
  return true;
}

bool recovers_joint(const Distribution& dist, const Conjunction& c) {
  for (const auto& t : enumerate_triplets(dist.space())) {
    const auto cond = condition(dist, t.a, t.b, c);
    const auto given = extend(marginalize(dist, t.b), t.a | t.b);
    const auto joint = marginalize(dist, t.a | t.b);
    for (std::size_t n = 0; n < cond.size(); ++n) {
      if (std::abs(c.conjoin(cond[n], given[n]) - joint[n]) > kEps) {
        return false;
      }
    }
  }
  return true;
}

bool has_equation(const MembershipEvidence& ev, int equation) {
  return std::any_of(ev.witnesses.begin(), ev.witnesses.end(),
                     [&](const Witness& w) { return w.equation == equation; });
}

}  // namespace

Distribution one_sided_min_distribution() {
  const auto space = three_binary();
  std::vector<double> table = {0.6, 0.6, 0.6, 0.6, 0.7, 0.8, 0.9, 1.0};
  return Distribution(space, space.all(), std::move(table));
}

Distribution intersection_failure_distribution() {
  Space space({{"X1", {"0", "2"}}, {"X2", {"-1", "1"}}, {"X3", {"-1", "1"}}});
  const std::pair<Assignment, double> entries[] = {
      {space.assignment({{"X1", "0"}, {"X2", "1"}, {"X3", "-1"}}), 1.0},
      {space.assignment({{"X1", "2"}, {"X2", "-1"}, {"X3", "1"}}), 1.0},
  };
  return make_distribution(space, space.all(), entries);
}

std::vector<RegressionCheck> run_worked_examples() {
  std::vector<RegressionCheck> out;
  auto check = [&](std::string name, bool passed, std::string detail = {}) {
    out.push_back({std::move(name), passed, std::move(detail)});
  };

  const auto one_sided = one_sided_min_distribution();
  const auto& s4 = one_sided.space();
  const auto x3 = marginalize(one_sided, s4.subset({"X3"}));
  check("max-marginal on X3 is (0.9, 1)", x3[0] == 0.9 && x3[1] == 1.0);

  for (const auto& g : {Generator::identity(), Generator::power(2.0)}) {
    const auto luka = Conjunction::lukasiewicz(g);
    std::string detail;
    check("lukasiewicz-like conditional closed form (" + luka.to_string() + ")",
          matches_closed_form(
              one_sided, luka,
              [&](double joint, double given) {
                return g.invert(std::min(
                    1.0, g.apply(joint) - g.apply(given) + 1.0));
              },
              detail),
          detail);

    const auto prod = Conjunction::product(g);
    detail.clear();
    check("product-like conditional closed form (" + prod.to_string() + ")",
          matches_closed_form(
              one_sided, prod,
              [&](double joint, double given) {
                return given > 0.0 ? g.invert(g.apply(joint) / g.apply(given))
                                   : 1.0;
              },
              detail),
          detail);
  }
  {
    std::string detail;
    check("min conditional closed form",
          matches_closed_form(
              one_sided, Conjunction::min(),
              [](double joint, double given) {
                return joint < given ? joint : 1.0;
              },
              detail),
          detail);
  }
  for (const auto& c :
       {Conjunction::min(), Conjunction::lukasiewicz(),
        Conjunction::product(), Conjunction::product(Generator::power(2.0))}) {
    check("c(pi_A|B, pi_B) = pi_AB under " + c.to_string(),
          recovers_joint(one_sided, c));
  }

  const Triplet t4{s4.subset({"X1"}), s4.subset({"X2"}), s4.subset({"X3"})};
  const auto ev = in_independence(one_sided, t4, Conjunction::min(), kEps);
  check("min: pi_{X1}|{X2,X3} = pi_{X1}|{X3}", !has_equation(ev, 0));
  check("min: pi_{X2}|{X1,X3} != pi_{X2}|{X3}", has_equation(ev, 1),
        std::to_string(ev.witnesses.size()) + " witness(es)");
  check("min: ({X1},{X2},{X3}) not independent", !ev.verdict);

  const auto inter = intersection_failure_distribution();
  const auto& s5 = inter.space();
  const auto x1 = s5.subset({"X1"});
  const auto x2 = s5.subset({"X2"});
  const auto x3b = s5.subset({"X3"});
  const Triplet p1{x1, x2, x3b}, p2{x1, x3b, x2}, joined{x1, x2 | x3b, {}};

  for (const auto& c : {Conjunction::product(), Conjunction::min()}) {
    const auto name = c.to_string();
    check(name + ": ({X1},{X2},{X3}) no-interactive",
          in_noninteractivity(inter, p1, c).verdict);
    check(name + ": ({X1},{X3},{X2}) no-interactive",
          in_noninteractivity(inter, p2, c).verdict);
    check(name + ": ({X1},{X2,X3},{}) not no-interactive",
          !in_noninteractivity(inter, joined, c).verdict,
          "the joint vanishes at X1=2,X2=1,X3=-1 while both marginals are 1");

    const auto ni = enumerate_relation(inter, c, RelationKind::NonInteractivity);
    const auto semi = is_semigraphoid(ni);
    const auto full = is_graphoid(ni);
    const bool expected_ce = std::any_of(
        full.counterexamples.begin(), full.counterexamples.end(),
        [&](const AxiomCounterexample& ce) {
          return ce.axiom == Axiom::Intersection && ce.premises.size() == 2 &&
                 ce.premises[0] == p1 && ce.premises[1] == p2 &&
                 ce.conclusion == joined;
        });
    check(name + ": no-interactivity is a semigraphoid", semi.holds());
    check(name + ": no-interactivity fails intersection",
          !full.holds() && expected_ce);

    const auto i = enumerate_relation(inter, c, RelationKind::Independence);
    check(name + ": independence is a graphoid", is_graphoid(i).holds());
  }
  return out;
}

}  // namespace possind
