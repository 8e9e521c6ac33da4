#include "possind/space.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "possind/error.hpp"

namespace possind {

std::vector<std::size_t> VarSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (Bits rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

Space::Space(std::vector<Variable> variables) {
  if (variables.size() > kMaxVariables) {
    throw Error(ErrorCode::TooLarge,
                "space has " + std::to_string(variables.size()) +
                    " variables; at most " + std::to_string(kMaxVariables) +
                    " are supported");
  }
  std::unordered_set<std::string> names;
  std::size_t joint = 1;
  for (const auto& v : variables) {
    if (!names.insert(v.name).second) {
      throw Error(ErrorCode::DuplicateVariable,
                  "duplicate variable '" + v.name + "'");
    }
    if (v.frame.empty()) {
      throw Error(ErrorCode::EmptyFrame,
                  "variable '" + v.name + "' has an empty frame");
    }
    std::unordered_set<std::string> values(v.frame.begin(), v.frame.end());
    if (values.size() != v.frame.size()) {
      throw Error(ErrorCode::DuplicateVariable,
                  "variable '" + v.name + "' lists a frame value twice");
    }
    joint *= v.frame.size();
    if (joint > kMaxJointAssignments) {
      throw Error(ErrorCode::TooLarge, "space has too many joint assignments");
    }
  }
  vars_ = std::make_shared<const std::vector<Variable>>(std::move(variables));
}

std::span<const Variable> Space::variables() const {
  if (!vars_) return {};
  return {vars_->data(), vars_->size()};
}

std::optional<std::size_t> Space::find(std::string_view name) const {
  const auto vars = variables();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Space::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorCode::UnknownVariable,
              "unknown variable '" + std::string(name) + "'");
}

std::size_t Space::value_index(std::size_t variable,
                               std::string_view value) const {
  const auto& frame = (*vars_)[variable].frame;
  auto it = std::find(frame.begin(), frame.end(), value);
  if (it == frame.end()) {
    throw Error(ErrorCode::UnknownValue,
                "value '" + std::string(value) + "' is not in the frame of '" +
                    (*vars_)[variable].name + "'");
  }
  return static_cast<std::size_t>(it - frame.begin());
}

VarSet Space::subset(std::span<const std::string> names) const {
  VarSet out;
  for (const auto& n : names) out = out | VarSet::single(index_of(n));
  return out;
}

VarSet Space::subset(std::initializer_list<std::string_view> names) const {
  VarSet out;
  for (auto n : names) out = out | VarSet::single(index_of(n));
  return out;
}

VarSet Space::parse_subset(std::string_view csv) const {
  VarSet out;
  while (!csv.empty()) {
    auto comma = csv.find(',');
    auto token = csv.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) {
      throw Error(ErrorCode::Parse, "empty variable name in list");
    }
    out = out | VarSet::single(index_of(token));
    if (comma == std::string_view::npos) break;
    csv.remove_prefix(comma + 1);
  }
  return out;
}

std::size_t Space::cardinality(VarSet scope) const {
  std::size_t n = 1;
  for (auto i : scope.indices()) n *= (*vars_)[i].frame.size();
  return n;
}

Assignment Space::build_assignment(
    std::span<const std::pair<std::string_view, std::string_view>> bindings)
    const {
  std::vector<std::size_t> by_var(size(), 0);
  VarSet scope;
  for (const auto& [name, value] : bindings) {
    auto var = index_of(name);
    if (scope.contains(var)) {
      throw Error(ErrorCode::ScopeMismatch,
                  "variable '" + std::string(name) + "' bound twice");
    }
    scope = scope | VarSet::single(var);
    by_var[var] = value_index(var, value);
  }
  Assignment a{scope, {}};
  for (auto i : scope.indices()) a.values.push_back(by_var[i]);
  return a;
}

Assignment Space::assignment(
    std::span<const std::pair<std::string, std::string>> bindings) const {
  std::vector<std::pair<std::string_view, std::string_view>> views(
      bindings.begin(), bindings.end());
  return build_assignment(views);
}

Assignment Space::assignment(
    std::initializer_list<std::pair<std::string_view, std::string_view>>
        bindings) const {
  return build_assignment({bindings.begin(), bindings.size()});
}

Assignment Space::decode(VarSet scope, std::size_t offset) const {
  const auto idx = scope.indices();
  Assignment a{scope, std::vector<std::size_t>(idx.size())};
  for (std::size_t k = idx.size(); k-- > 0;) {
    const auto radix = (*vars_)[idx[k]].frame.size();
    a.values[k] = offset % radix;
    offset /= radix;
  }
  return a;
}

std::size_t Space::offset(const Assignment& a) const {
  const auto idx = a.scope.indices();
  std::size_t off = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    off = off * (*vars_)[idx[k]].frame.size() + a.values[k];
  }
  return off;
}

Assignment Space::restrict(const Assignment& a, VarSet to) const {
  if (!to.subset_of(a.scope)) {
    throw Error(ErrorCode::ScopeMismatch,
                "cannot restrict an assignment to a larger scope");
  }
  Assignment out{to, {}};
  const auto idx = a.scope.indices();
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (to.contains(idx[k])) out.values.push_back(a.values[k]);
  }
  return out;
}

std::string Space::format(VarSet set) const {
  std::string out = "{";
  bool first = true;
  for (auto i : set.indices()) {
    if (!first) out += ',';
    out += (*vars_)[i].name;
    first = false;
  }
  return out + "}";
}

std::string Space::format(const Assignment& a) const {
  std::ostringstream os;
  const auto idx = a.scope.indices();
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) os << ',';
    const auto& v = (*vars_)[idx[k]];
    os << v.name << '=' << v.frame[a.values[k]];
  }
  return os.str();
}

bool Space::operator==(const Space& other) const {
  if (vars_ == other.vars_) return true;
  const auto lhs = variables();
  const auto rhs = other.variables();
  return std::equal(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                    [](const Variable& x, const Variable& y) {
                      return x.name == y.name && x.frame == y.frame;
                    });
}

std::vector<std::size_t> project_offsets(const Space& space, VarSet scope,
                                         VarSet sub) {
  if (!sub.subset_of(scope)) {
    throw Error(ErrorCode::ScopeMismatch,
                space.format(sub) + " is not a subset of " +
                    space.format(scope));
  }
  // Stride of each scope variable inside the sub table (0 when dropped).
  const auto idx = scope.indices();
  std::vector<std::size_t> radix(idx.size()), stride(idx.size(), 0);
  std::size_t s = 1;
  for (std::size_t k = idx.size(); k-- > 0;) {
    radix[k] = space.variable(idx[k]).frame.size();
    if (sub.contains(idx[k])) {
      stride[k] = s;
      s *= radix[k];
    }
  }

  const auto total = space.cardinality(scope);
  std::vector<std::size_t> out(total);
  std::vector<std::size_t> digit(idx.size(), 0);
  std::size_t target = 0;
  for (std::size_t n = 0; n < total; ++n) {
    out[n] = target;
    for (std::size_t k = idx.size(); k-- > 0;) {
      if (++digit[k] < radix[k]) {
        target += stride[k];
        break;
      }
      target -= stride[k] * (radix[k] - 1);
      digit[k] = 0;
    }
  }
  return out;
}

}  // namespace possind
