#include "possind/conjunction.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "possind/error.hpp"

namespace possind {

namespace {

void check_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream os;
    os << what << " " << x << " is outside [0,1]";
    throw Error(ErrorCode::OutOfRange, os.str());
  }
}

}  // namespace

Generator Generator::power(double exponent) {
  if (!(exponent > 0.0) || !std::isfinite(exponent)) {
    throw Error(ErrorCode::OutOfRange, "generator exponent must be positive");
  }
  if (exponent == 1.0) return identity();
  return Generator(Kind::Power, exponent);
}

double Generator::apply(double x) const {
  check_unit(x, "generator argument");
  if (kind_ == Kind::Identity) return x;
  return std::pow(x, exponent_);
}

double Generator::invert(double y) const {
  check_unit(y, "generator argument");
  if (kind_ == Kind::Identity) return y;
  return std::pow(y, 1.0 / exponent_);
}

double Conjunction::conjoin(double a, double b) const {
  check_unit(a, "conjunction argument");
  check_unit(b, "conjunction argument");
  // Identity laws stay exact even when φ⁻¹(φ(x)) rounds.
  if (a == 1.0) return b;
  if (b == 1.0) return a;
  switch (kind_) {
    case Kind::Min:
      return std::min(a, b);
    case Kind::LukasiewiczLike:
      return gen_.invert(std::max(0.0, gen_.apply(a) + gen_.apply(b) - 1.0));
    case Kind::ProductLike:
      return gen_.invert(gen_.apply(a) * gen_.apply(b));
  }
  return 0.0;
}

double Conjunction::residuum(double a, double b) const {
  check_unit(a, "residuum argument");
  check_unit(b, "residuum argument");
  if (a == 0.0 || b >= a) return 1.0;
  if (a == 1.0) return b;
  switch (kind_) {
    case Kind::Min:
      return b;
    case Kind::LukasiewiczLike:
      return gen_.invert(
          std::clamp(1.0 - gen_.apply(a) + gen_.apply(b), 0.0, 1.0));
    case Kind::ProductLike: {
      return gen_.invert(std::min(1.0, gen_.apply(b) / gen_.apply(a)));
    }
  }
  return 1.0;
}

double Conjunction::residuum_oracle(double a, double b, int steps) const {
  if (steps < 1) {
    throw Error(ErrorCode::OutOfRange, "oracle needs at least one step");
  }
  check_unit(a, "residuum argument");
  check_unit(b, "residuum argument");
  for (int k = steps; k >= 0; --k) {
    const double s = static_cast<double>(k) / steps;
    if (conjoin(s, a) <= b + 1e-12) return s;
  }
  return 0.0;
}

Conjunction Conjunction::parse(std::string_view spec) {
  auto head = spec.substr(0, spec.find(':'));
  Kind kind;
  if (head == "min") {
    kind = Kind::Min;
  } else if (head == "luka") {
    kind = Kind::LukasiewiczLike;
  } else if (head == "prod") {
    kind = Kind::ProductLike;
  } else {
    throw Error(ErrorCode::Parse,
                "unknown conjunction '" + std::string(spec) +
                    "' (expected min, luka, luka:pow=<p>, prod, prod:pow=<p>)");
  }
  if (head.size() == spec.size()) return {kind, Generator::identity()};

  auto param = spec.substr(head.size() + 1);
  constexpr std::string_view kPow = "pow=";
  if (kind == Kind::Min || !param.starts_with(kPow)) {
    throw Error(ErrorCode::Parse,
                "bad conjunction parameter in '" + std::string(spec) + "'");
  }
  param.remove_prefix(kPow.size());
  double p = 0.0;
  auto [ptr, ec] = std::from_chars(param.data(), param.data() + param.size(), p);
  if (ec != std::errc() || ptr != param.data() + param.size()) {
    throw Error(ErrorCode::Parse,
                "bad generator exponent in '" + std::string(spec) + "'");
  }
  return {kind, Generator::power(p)};
}

std::string Conjunction::to_string() const {
  std::string out;
  switch (kind_) {
    case Kind::Min:
      return "min";
    case Kind::LukasiewiczLike:
      out = "luka";
      break;
    case Kind::ProductLike:
      out = "prod";
      break;
  }
  if (gen_.kind() == Generator::Kind::Power) {
    std::ostringstream os;
    os << gen_.exponent();
    out += ":pow=" + os.str();
  }
  return out;
}

}  // namespace possind
