#pragma once

#include <string>
#include <string_view>

namespace possind {

/// Continuous strictly increasing bijection of [0,1] with fixed endpoints.
/// Identity or x ↦ x^p for p > 0.
class Generator {
 public:
  enum class Kind { Identity, Power };

  static Generator identity() { return Generator(Kind::Identity, 1.0); }
  static Generator power(double exponent);

  Kind kind() const { return kind_; }
  double exponent() const { return exponent_; }

  double apply(double x) const;
  double invert(double y) const;

  bool operator==(const Generator&) const = default;

 private:
  Generator(Kind kind, double exponent) : kind_(kind), exponent_(exponent) {}

  Kind kind_;
  double exponent_;
};

/// A T-norm-like conjunction: min, or φ⁻¹(Tm(φ(a), φ(b))) with the Lukasiewicz
/// norm Tm(a,b) = max(0, a+b-1), or φ⁻¹(φ(a)·φ(b)).
class Conjunction {
 public:
  enum class Kind { Min, LukasiewiczLike, ProductLike };

  static Conjunction min() { return {Kind::Min, Generator::identity()}; }
  static Conjunction lukasiewicz(Generator g = Generator::identity()) {
    return {Kind::LukasiewiczLike, g};
  }
  static Conjunction product(Generator g = Generator::identity()) {
    return {Kind::ProductLike, g};
  }

  /// Parses `min`, `luka`, `luka:pow=<p>`, `prod`, `prod:pow=<p>`.
  static Conjunction parse(std::string_view spec);

  Kind kind() const { return kind_; }
  const Generator& generator() const { return gen_; }

  double conjoin(double a, double b) const;

  /// sup{ s ∈ [0,1] : conjoin(s, a) ≤ b }, in closed form. `a` is the
  /// conditioning degree, `b` the joint degree.
  double residuum(double a, double b) const;

  /// Grid scan of the same supremum over s = k/steps; independent of the
  /// closed forms, used to validate them.
  double residuum_oracle(double a, double b, int steps) const;

  /// Inverse of parse().
  std::string to_string() const;

  bool operator==(const Conjunction&) const = default;

 private:
  Conjunction(Kind kind, Generator g) : kind_(kind), gen_(g) {}

  Kind kind_;
  Generator gen_;
};

}  // namespace possind
