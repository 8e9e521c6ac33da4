#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace possind {

/// A subset of a space's variables, stored as a bitmask over variable
/// positions. Only meaningful together with the Space it was built from.
class VarSet {
 public:
  using Bits = std::uint32_t;

  constexpr VarSet() = default;
  constexpr explicit VarSet(Bits bits) : bits_(bits) {}

  static constexpr VarSet single(std::size_t index) {
    return VarSet(Bits{1} << index);
  }

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t index) const {
    return (bits_ >> index) & 1u;
  }
  constexpr bool subset_of(VarSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool disjoint(VarSet other) const {
    return (bits_ & other.bits_) == 0;
  }

  constexpr VarSet operator|(VarSet o) const { return VarSet(bits_ | o.bits_); }
  constexpr VarSet operator&(VarSet o) const { return VarSet(bits_ & o.bits_); }
  constexpr VarSet operator-(VarSet o) const { return VarSet(bits_ & ~o.bits_); }

  constexpr auto operator<=>(const VarSet&) const = default;

  /// Variable positions in ascending order.
  std::vector<std::size_t> indices() const;

 private:
  Bits bits_ = 0;
};

struct Variable {
  std::string name;
  std::vector<std::string> frame;
};

/// Values of the variables of `scope`, as frame indices in space order.
struct Assignment {
  VarSet scope;
  std::vector<std::size_t> values;

  bool operator==(const Assignment&) const = default;
};

/// Ordered finite variables with finite frames. Joint assignments of any
/// scope are enumerated in mixed-radix order, last variable fastest.
/// Copies share the underlying variable list.
class Space {
 public:
  static constexpr std::size_t kMaxVariables = 31;
  static constexpr std::size_t kMaxJointAssignments = std::size_t{1} << 24;

  Space() = default;
  explicit Space(std::vector<Variable> variables);

  std::size_t size() const { return vars_ ? vars_->size() : 0; }
  const Variable& variable(std::size_t index) const { return (*vars_)[index]; }
  std::span<const Variable> variables() const;

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;
  std::size_t value_index(std::size_t variable, std::string_view value) const;

  VarSet all() const { return VarSet((VarSet::Bits{1} << size()) - 1); }
  VarSet subset(std::span<const std::string> names) const;
  VarSet subset(std::initializer_list<std::string_view> names) const;
  /// Comma-separated names; empty text is the empty set.
  VarSet parse_subset(std::string_view csv) const;
  bool contains(VarSet set) const { return set.subset_of(all()); }

  /// Number of joint assignments of `scope` (1 for the empty scope).
  std::size_t cardinality(VarSet scope) const;
  std::size_t joint_count() const { return cardinality(all()); }

  Assignment assignment(
      std::span<const std::pair<std::string, std::string>> bindings) const;
  Assignment assignment(
      std::initializer_list<std::pair<std::string_view, std::string_view>>
          bindings) const;
  Assignment decode(VarSet scope, std::size_t offset) const;
  std::size_t offset(const Assignment& a) const;
  /// Restriction of an assignment to a subset of its scope.
  Assignment restrict(const Assignment& a, VarSet to) const;

  std::string format(VarSet set) const;
  std::string format(const Assignment& a) const;

  bool operator==(const Space& other) const;

 private:
  Assignment build_assignment(
      std::span<const std::pair<std::string_view, std::string_view>> bindings)
      const;

  std::shared_ptr<const std::vector<Variable>> vars_;
};

/// For every joint assignment of `scope` (in order), the offset of its
/// restriction to `sub` within Ω_sub. Requires sub ⊆ scope.
std::vector<std::size_t> project_offsets(const Space& space, VarSet scope,
                                         VarSet sub);

}  // namespace possind
