#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "../support/oracles.hpp"
#include "possind/error.hpp"
#include "possind/graphoid.hpp"
#include "possind/independence.hpp"
#include "possind/worked_examples.hpp"

using namespace possind;
using doctest::Approx;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected possind::Error");
  return ErrorCode::Io;
}

std::vector<Conjunction> families() {
  return {Conjunction::min(), Conjunction::lukasiewicz(),
          Conjunction::lukasiewicz(Generator::power(2.0)),
          Conjunction::product(),
          Conjunction::product(Generator::power(2.0))};
}

Distribution two_binary(std::vector<double> table) {
  Space s({{"X1", {"0", "1"}}, {"X2", {"0", "1"}}});
  return Distribution(s, s.all(), std::move(table));
}

Triplet singletons(const Space& s, const char* a, const char* b,
                   const char* c) {
  return parse_triplet(s, a, b, c);
}

}  // namespace

TEST_CASE("condition under min on the one-sided distribution") {
  const auto d = one_sided_min_distribution();
  const auto& s = d.space();
  const auto cond = condition(d, s.subset({"X1"}), s.subset({"X3"}),
                              Conjunction::min());
  CHECK(cond.scope() == s.subset({"X1", "X3"}));
  CHECK(cond[0] == 0.6);  // x1=0, x3=0
  CHECK(cond[1] == 0.6);  // x1=0, x3=1
  CHECK(cond[2] == 1.0);
  CHECK(cond[3] == 1.0);
}

TEST_CASE("condition under product divides by the conditioning marginal") {
  const auto d = two_binary({1.0, 0.5, 0.8, 0.4});
  const auto& s = d.space();
  const auto cond = condition(d, s.subset({"X1"}), s.subset({"X2"}),
                              Conjunction::product());
  CHECK(cond[0] == Approx(1.0));  // (0,0)
  CHECK(cond[1] == Approx(1.0));  // (0,1)
  CHECK(cond[2] == Approx(0.8));  // (1,0)
  CHECK(cond[3] == Approx(0.8));  // (1,1)
}

TEST_CASE("condition on an all-one distribution is constant 1") {
  Space s({{"X1", {"0", "1"}}, {"X2", {"a", "b", "c"}}, {"X3", {"0", "1"}}});
  const auto ones = Distribution::constant(s, s.all(), 1.0);
  for (const auto& c : families()) {
    const auto cond =
        condition(ones, s.subset({"X1"}), s.subset({"X2", "X3"}), c);
    for (double v : cond.table()) CHECK(v == 1.0);
  }
}

TEST_CASE("condition on the empty set is the marginal") {
  const auto d = random_distribution(make_uniform_space(3, 3), 10, false, 5);
  for (const auto& c : families()) {
    const auto target = d.space().subset({"X1", "X3"});
    CHECK(equal_within(condition(d, target, VarSet{}, c),
                       marginalize(d, target), 1e-12));
  }
}

TEST_CASE("condition errors") {
  const auto d = one_sided_min_distribution();
  const auto& s = d.space();
  CHECK(code_of([&] {
          condition(d, s.subset({"X1"}), s.subset({"X1", "X2"}),
                    Conjunction::min());
        }) == ErrorCode::ScopeMismatch);
  const auto low = two_binary({0.5, 0.2, 0.1, 0.0});
  CHECK(code_of([&] {
          condition(low, low.space().subset({"X1"}),
                    low.space().subset({"X2"}), Conjunction::min());
        }) == ErrorCode::NotNormalised);
}

TEST_CASE("condition agrees with a brute-force residuum oracle") {
  const auto space = make_uniform_space(3, 2);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto d = random_distribution(space, 10, false, seed);
    for (const auto& t : enumerate_triplets(space)) {
      for (const auto& c : families()) {
        const auto cond = condition(d, t.a, t.b, c);
        const auto lifted = extend(cond, space.all());
        const auto points = oracle::all_points(space);
        for (std::size_t n = 0; n < points.size(); ++n) {
          CHECK(lifted[n] == Approx(oracle::conditional_at(d, t.a, t.b, c,
                                                           points[n]))
                                 .epsilon(1e-9));
        }
      }
    }
  }
}

TEST_CASE("conditioning recovers the joint marginal") {
  const auto space = make_uniform_space(3, 3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto d = random_distribution(space, 10, false, seed);
    for (const auto& t : enumerate_triplets(space)) {
      for (VarSet given : {t.b, VarSet{}}) {
        for (const auto& c : families()) {
          const auto cond = condition(d, t.a, given, c);
          const auto m = extend(marginalize(d, given), t.a | given);
          const auto joint = marginalize(d, t.a | given);
          for (std::size_t n = 0; n < cond.size(); ++n) {
            CHECK(std::abs(c.conjoin(cond[n], m[n]) - joint[n]) <= 1e-9);
          }
        }
      }
    }
  }
}

TEST_CASE("independence fails on one side only under min") {
  const auto d = one_sided_min_distribution();
  const auto& s = d.space();
  const auto t = singletons(s, "X1", "X2", "X3");
  const auto ev = in_independence(d, t, Conjunction::min());
  CHECK_FALSE(ev.verdict);
  REQUIRE(ev.witnesses.size() == 2);
  for (const auto& w : ev.witnesses) CHECK(w.equation == 1);
  CHECK(s.format(ev.witnesses[0].point) == "X1=0,X2=0,X3=0");
  CHECK(ev.witnesses[0].left == 1.0);
  CHECK(ev.witnesses[0].right == 0.7);
  CHECK(s.format(ev.witnesses[1].point) == "X1=0,X2=0,X3=1");
  CHECK(ev.witnesses[1].left == 1.0);
  CHECK(ev.witnesses[1].right == 0.8);

  // The A-side conditionals coincide.
  CHECK(equal_within(
      condition(d, t.a, t.b | t.c, Conjunction::min()),
      condition(d, t.a, t.c, Conjunction::min()), 1e-9));

  // Swapping A and B moves the failure to the other equation.
  const auto swapped = in_independence(d, t.swapped(), Conjunction::min());
  CHECK_FALSE(swapped.verdict);
  for (const auto& w : swapped.witnesses) CHECK(w.equation == 0);
}

TEST_CASE("all-one distribution is in every relation") {
  const auto space = make_uniform_space(3, 2);
  const auto ones = Distribution::constant(space, space.all(), 1.0);
  for (const auto& c : families()) {
    for (auto kind :
         {RelationKind::Independence, RelationKind::NonInteractivity}) {
      CHECK(enumerate_relation(ones, c, kind).size() == 18);
      for (const auto& t : enumerate_triplets(space)) {
        CHECK(characterize(ones, t, c, kind));
      }
    }
  }
}

TEST_CASE("intersection-failure distribution memberships") {
  const auto d = intersection_failure_distribution();
  const auto& s = d.space();
  const auto p1 = singletons(s, "X1", "X2", "X3");
  const auto p2 = singletons(s, "X1", "X3", "X2");
  const auto joined = parse_triplet(s, "X1", "X2,X3", "");
  const auto prod = Conjunction::product();

  CHECK(in_noninteractivity(d, p1, prod).verdict);
  CHECK(in_noninteractivity(d, p2, prod).verdict);
  const auto ev = in_noninteractivity(d, joined, prod);
  CHECK_FALSE(ev.verdict);
  bool found = false;
  for (const auto& w : ev.witnesses) {
    if (s.format(w.point) == "X1=2,X2=1,X3=-1") {
      found = true;
      CHECK(w.left == 0.0);
      CHECK(w.right == 1.0);
    }
  }
  CHECK(found);

  // Independence is stricter: the zero-pattern clause fails.
  CHECK_FALSE(in_independence(d, p1, prod).verdict);

  CHECK(characterize_product_ni(d, p1, Generator::identity()));
  CHECK_FALSE(characterize_product_ni(d, joined, Generator::identity()));
  CHECK_FALSE(characterize_product_i(d, p1, Generator::identity()));
  CHECK(characterize_min_ni(d, p1));
  CHECK_FALSE(characterize_min_ni(d, joined));

  const auto rel = enumerate_relation(d, prod, RelationKind::NonInteractivity);
  CHECK(rel.contains(p1));
  CHECK(rel.contains(p2));
  CHECK_FALSE(rel.contains(joined));
}

TEST_CASE("lukasiewicz no-interactivity is weaker where the joint vanishes") {
  // π(0,0) = 0 while φ(π_X1(0)) + φ(π_X2(0)) = 0.8 ≤ 1: the truncation in
  // Tm hides the mismatch from the factorisation test.
  const auto d = two_binary({0.0, 0.3, 0.5, 1.0});
  const auto t = singletons(d.space(), "X1", "X2", "");
  const auto luka = Conjunction::lukasiewicz();
  CHECK(in_noninteractivity(d, t, luka).verdict);
  CHECK_FALSE(in_independence(d, t, luka).verdict);
  CHECK_FALSE(characterize_luka(d, t, Generator::identity()));
}

TEST_CASE("membership errors") {
  const auto d = one_sided_min_distribution();
  const auto& s = d.space();
  const Triplet empty_a{VarSet{}, s.subset({"X1"}), VarSet{}};
  CHECK(code_of([&] { in_independence(d, empty_a, Conjunction::min()); }) ==
        ErrorCode::BadTriplet);
  const Triplet overlap{s.subset({"X1"}), s.subset({"X1", "X2"}), VarSet{}};
  CHECK(code_of([&] {
          in_noninteractivity(d, overlap, Conjunction::min());
        }) == ErrorCode::BadTriplet);
  const auto sub = marginalize(d, s.subset({"X1", "X2"}));
  CHECK(code_of([&] {
          in_independence(sub, singletons(s, "X1", "X2", "X3"),
                          Conjunction::min());
        }) == ErrorCode::BadTriplet);
  const auto low = two_binary({0.5, 0.2, 0.1, 0.0});
  CHECK(code_of([&] {
          characterize_min_i(low, singletons(low.space(), "X1", "X2", ""));
        }) == ErrorCode::NotNormalised);
}

TEST_CASE("closed forms agree with the direct definitions") {
  for (std::size_t vars : {3u, 4u}) {
    const auto space = make_uniform_space(vars, 2);
    const auto triplets = enumerate_triplets(space);
    for (std::uint64_t seed = 0; seed < (vars == 3 ? 150u : 25u); ++seed) {
      const auto d = random_distribution(space, 10, seed % 3 == 0, seed);
      for (const auto& t : triplets) {
        for (const auto& c : families()) {
          const bool i = in_independence(d, t, c).verdict;
          const bool ni = in_noninteractivity(d, t, c).verdict;
          CHECK(i == characterize(d, t, c, RelationKind::Independence));
          CHECK(i == in_independence(d, t.swapped(), c).verdict);
          if (c.kind() == Conjunction::Kind::LukasiewiczLike) {
            CHECK((!i || ni));
          } else {
            CHECK(ni == characterize(d, t, c, RelationKind::NonInteractivity));
            CHECK((!i || ni));
          }
        }
      }
    }
  }
}

TEST_CASE("strictly positive distributions: I = NI under product-like") {
  const auto space = make_uniform_space(3, 2);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto d = random_distribution(space, 10, true, seed);
    for (const auto& g : {Generator::identity(), Generator::power(2.0)}) {
      const auto c = Conjunction::product(g);
      CHECK(enumerate_relation(d, c, RelationKind::Independence) ==
            enumerate_relation(d, c, RelationKind::NonInteractivity));
      for (const auto& t : enumerate_triplets(space)) {
        CHECK(characterize_product_i(d, t, g) ==
              characterize_product_ni(d, t, g));
      }
    }
  }
}

TEST_CASE("constructed lukasiewicz instances are independent") {
  const auto space = make_uniform_space(3, 2);
  const auto triplets = enumerate_triplets(space);
  for (const auto& g : {Generator::identity(), Generator::power(2.0)}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto& t = triplets[seed % triplets.size()];
      const auto inst = construct_luka_instance(space, t, g, seed);
      CHECK(inst.triplet == t);
      CHECK(inst.dist.scope() == t.all());
      CHECK(inst.dist.normalised());
      CHECK(in_independence(inst.dist, t, Conjunction::lukasiewicz(g))
                .verdict);
      CHECK(characterize_luka(inst.dist, t, g));
    }
  }
}

TEST_CASE("compose_luka checks its hypotheses") {
  const auto space = make_uniform_space(3, 2);
  const auto ac = space.subset({"X1", "X3"});
  const auto bc = space.subset({"X2", "X3"});
  const auto g = Generator::identity();

  const auto one_ac = Distribution::constant(space, ac, 1.0);
  const auto one_bc = Distribution::constant(space, bc, 1.0);
  const auto pi = compose_luka(one_ac, one_bc, g);
  for (double v : pi.table()) CHECK(v == 1.0);

  // Values in [0.5, 1] always satisfy φ(f) + φ(f') ≥ 1 for the identity.
  const Distribution f(space, ac, {0.5, 1.0, 1.0, 0.5});
  const Distribution h(space, bc, {1.0, 0.5, 0.5, 1.0});
  const auto mixed = compose_luka(f, h, g);
  CHECK(in_independence(mixed, parse_triplet(space, "X1", "X2", "X3"),
                        Conjunction::lukasiewicz())
            .verdict);

  const Distribution low(space, ac, {0.4, 1.0, 1.0, 0.4});
  CHECK(code_of([&] { compose_luka(low, h, g); }) == ErrorCode::OutOfRange);
  const Distribution shifted(space, bc, {0.9, 0.5, 0.5, 0.9});
  CHECK(code_of([&] { compose_luka(f, shifted, g); }) ==
        ErrorCode::OutOfRange);
}

TEST_CASE("enumerate_relation guard and candidate count") {
  const auto space = make_uniform_space(3, 2);
  CHECK(enumerate_triplets(space).size() == 18);
  const auto big = make_uniform_space(9, 2);
  const auto d = random_distribution(big, 10, false, 1);
  CHECK(code_of([&] {
          enumerate_relation(d, Conjunction::min(),
                             RelationKind::Independence);
        }) == ErrorCode::TooLarge);
}

TEST_CASE("relation kind names") {
  CHECK(parse_relation_kind("independence") == RelationKind::Independence);
  CHECK(parse_relation_kind("noninteractivity") ==
        RelationKind::NonInteractivity);
  CHECK(code_of([] { parse_relation_kind("dependence"); }) ==
        ErrorCode::Parse);
}
