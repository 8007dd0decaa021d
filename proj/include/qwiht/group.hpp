#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace qwiht {

enum class GroupKind { Z2Power, Symmetric, Table };

inline constexpr std::size_t kDefaultEnumerationCap = 10080;

// An element of a FiniteGroup, identified by its rank in the group's
// canonical enumeration. The (kind, parameter) pair tags the owning group so
// elements of different groups are never mixed silently.
struct GroupElement {
  GroupKind kind = GroupKind::Z2Power;
  int parameter = 0;
  std::size_t index = 0;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Finite group with a canonical enumeration of its elements.
//
//   Z2Power(d)   bitstrings of length d under XOR; an element's index is the
//                integer value of its bitstring, bit j <-> generator e_j = 2^j.
//   Symmetric(n) permutations of {1..n} in one-line notation, ranked
//                lexicographically. Composition is (g o h)(i) = g(h(i)).
//   Table        explicit composition table table[a][b] = a o b.
class FiniteGroup {
 public:
  static FiniteGroup z2_power(int d);
  static FiniteGroup symmetric(int n);
  // Validates closure, identity, inverses and (for order <= 120) associativity.
  static FiniteGroup from_table(std::vector<std::vector<std::size_t>> table);

  GroupKind kind() const { return kind_; }
  int parameter() const { return parameter_; }
  std::size_t order() const { return order_; }

  bool contains(const GroupElement& g) const;
  GroupElement element(std::size_t index) const;
  GroupElement identity() const;
  GroupElement compose(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;
  std::vector<GroupElement> enumerate(std::size_t cap = kDefaultEnumerationCap) const;

  // Z2Power only.
  GroupElement from_bits(std::uint64_t bits) const;
  std::uint64_t bits(const GroupElement& g) const;

  // Symmetric only. One-line values are 1-based.
  GroupElement from_one_line(std::span<const int> one_line) const;
  std::vector<int> one_line(const GroupElement& g) const;

  // "011" for Z2Power, "(2,1,3)" for Symmetric, "g5" for Table.
  std::string label(const GroupElement& g) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.kind_ == b.kind_ && a.parameter_ == b.parameter_ && a.order_ == b.order_ &&
           a.table_ == b.table_;
  }

 private:
  FiniteGroup(GroupKind kind, int parameter, std::size_t order)
      : kind_(kind), parameter_(parameter), order_(order) {}

  void check_member(const GroupElement& g, const char* what) const;

  GroupKind kind_;
  int parameter_;
  std::size_t order_;
  std::size_t table_identity_ = 0;
  std::shared_ptr<const std::vector<std::size_t>> table_;  // row-major, Table only
};

// Lexicographic rank of a 1-based one-line permutation and its inverse map.
std::size_t permutation_rank(std::span<const int> one_line);
std::vector<int> permutation_unrank(std::size_t rank, int n);

}  // namespace qwiht
