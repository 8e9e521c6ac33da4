#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "../support/oracles.hpp"
#include "possind/conjunction.hpp"
#include "possind/error.hpp"

using namespace possind;
using doctest::Approx;

namespace {

std::vector<double> grid(int steps) {
  std::vector<double> out;
  for (int k = 0; k <= steps; ++k) out.push_back(static_cast<double>(k) / steps);
  return out;
}

std::vector<Conjunction> families() {
  return {Conjunction::min(),
          Conjunction::lukasiewicz(),
          Conjunction::lukasiewicz(Generator::power(2.0)),
          Conjunction::product(),
          Conjunction::product(Generator::power(2.0)),
          Conjunction::product(Generator::power(0.5))};
}

}  // namespace

TEST_CASE("generators") {
  CHECK(Generator::identity().apply(0.7) == 0.7);
  CHECK(Generator::power(2.0).apply(0.5) == 0.25);
  CHECK(Generator::power(2.0).apply(1.0) == 1.0);
  CHECK(Generator::power(2.0).invert(0.25) == Approx(0.5).epsilon(1e-15));
  CHECK(Generator::identity().invert(0.3) == 0.3);
  const auto half = Generator::power(0.5);
  CHECK(half.invert(0.09) == Approx(0.0081).epsilon(1e-12));
  CHECK(half.apply(half.invert(0.09)) == Approx(0.09).epsilon(1e-12));

  CHECK_THROWS_AS(Generator::power(0.0), Error);
  CHECK_THROWS_AS(Generator::identity().apply(1.2), Error);
  CHECK_THROWS_AS(Generator::power(2.0).invert(-0.1), Error);
}

TEST_CASE("generator invariants on a dense grid") {
  for (double p : {0.3, 0.5, 1.0, 2.0, 3.7}) {
    const auto g = Generator::power(p);
    CHECK(g.apply(0.0) == 0.0);
    CHECK(g.apply(1.0) == 1.0);
    double prev = -1.0;
    for (double x : grid(1000)) {
      const double y = g.apply(x);
      CHECK(y > prev);
      prev = y;
      CHECK(std::abs(g.invert(y) - x) <= 1e-12);
    }
  }
}

TEST_CASE("conjoin reference values") {
  CHECK(Conjunction::min().conjoin(0.7, 0.4) == 0.4);
  CHECK(Conjunction::lukasiewicz().conjoin(0.7, 0.4) ==
        Approx(std::max(0.0, 0.7 + 0.4 - 1.0)));
  CHECK(Conjunction::lukasiewicz().conjoin(0.7, 0.4) == Approx(0.1));
  CHECK(Conjunction::product().conjoin(0.5, 0.4) == Approx(0.2));
  CHECK_THROWS_AS(Conjunction::min().conjoin(1.1, 0.2), Error);
}

TEST_CASE("conjoin boundary laws hold exactly on the grid") {
  for (const auto& c : families()) {
    for (double a : grid(100)) {
      CHECK(c.conjoin(0.0, a) == 0.0);
      CHECK(c.conjoin(a, 0.0) == 0.0);
      CHECK(c.conjoin(1.0, a) == a);
      CHECK(c.conjoin(a, 1.0) == a);
    }
  }
}

TEST_CASE("conjoin is monotone, commutative and associative") {
  const auto g = grid(20);
  for (const auto& c : families()) {
    for (double a : g) {
      for (std::size_t j = 0; j + 1 < g.size(); ++j) {
        CHECK(c.conjoin(a, g[j]) <= c.conjoin(a, g[j + 1]) + 1e-15);
        CHECK(c.conjoin(g[j], a) <= c.conjoin(g[j + 1], a) + 1e-15);
      }
      for (double b : g) {
        CHECK(std::abs(c.conjoin(a, b) - c.conjoin(b, a)) <= 1e-9);
        for (double d : grid(10)) {
          CHECK(std::abs(c.conjoin(c.conjoin(a, b), d) -
                         c.conjoin(a, c.conjoin(b, d))) <= 1e-9);
        }
      }
    }
  }
}

TEST_CASE("residuum reference values") {
  for (const auto& c : families()) CHECK(c.residuum(0.0, 0.3) == 1.0);
  CHECK(Conjunction::min().residuum(0.9, 0.6) == 0.6);
  CHECK(Conjunction::min().residuum(0.6, 0.9) == 1.0);
  CHECK(Conjunction::lukasiewicz().residuum(0.9, 0.6) == Approx(0.7));
  CHECK(Conjunction::product().residuum(0.5, 0.2) == Approx(0.4));

  // Same values from the independent bisection oracle.
  CHECK(oracle::residuum_bisection(Conjunction::lukasiewicz(), 0.9, 0.6) ==
        Approx(0.7));
  CHECK(oracle::residuum_bisection(Conjunction::product(), 0.5, 0.2) ==
        Approx(0.4));
}

TEST_CASE("residuum_oracle scans the grid") {
  CHECK(Conjunction::min().residuum_oracle(0.9, 0.6, 1000) == 0.6);
  CHECK(Conjunction::lukasiewicz().residuum_oracle(0.9, 0.6, 1000) ==
        Approx(0.7));
  for (const auto& c : families()) {
    for (int steps : {1, 7, 100}) {
      CHECK(c.residuum_oracle(0.37, 1.0, steps) == 1.0);
    }
  }
  CHECK_THROWS_AS(Conjunction::min().residuum_oracle(0.5, 0.5, 0), Error);
}

TEST_CASE("residuation adjunction on the grid") {
  const auto g = grid(20);
  for (const auto& c : families()) {
    for (double a : g) {
      for (double b : g) {
        const double r = c.residuum(a, b);
        CHECK(r >= 0.0);
        CHECK(r <= 1.0);
        for (double s : g) {
          const bool lhs = c.conjoin(s, a) <= b + 1e-12;
          const bool rhs = s <= r + 1e-9;
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("closed-form residuum matches bisection") {
  const auto g = grid(50);
  for (const auto& c : families()) {
    for (double a : g) {
      for (double b : g) {
        CHECK(c.residuum(a, b) ==
              Approx(oracle::residuum_bisection(c, a, b)).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("conjunction spec strings") {
  CHECK(Conjunction::parse("min") == Conjunction::min());
  CHECK(Conjunction::parse("luka") == Conjunction::lukasiewicz());
  CHECK(Conjunction::parse("prod") == Conjunction::product());
  CHECK(Conjunction::parse("luka:pow=2") ==
        Conjunction::lukasiewicz(Generator::power(2.0)));
  CHECK(Conjunction::parse("prod:pow=0.5") ==
        Conjunction::product(Generator::power(0.5)));
  CHECK(Conjunction::parse("prod:pow=1") == Conjunction::product());
  for (const auto& c : families()) {
    CHECK(Conjunction::parse(c.to_string()) == c);
  }
  for (const char* bad : {"", "max", "min:pow=2", "luka:pow=", "luka:pow=-1",
                          "prod:p=2", "luka:pow=2x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Conjunction::parse(bad), Error);
  }
}
