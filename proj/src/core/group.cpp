#include "qwiht/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qwiht/error.hpp"

namespace qwiht {
namespace {

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

const char* kind_name(GroupKind kind) {
  switch (kind) {
    case GroupKind::Z2Power: return "Z2^d";
    case GroupKind::Symmetric: return "S_n";
    case GroupKind::Table: return "table";
  }
  return "?";
}

}  // namespace

std::size_t permutation_rank(std::span<const int> one_line) {
  const auto n = static_cast<int>(one_line.size());
  std::size_t rank = 0;
  for (int i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (int j = i + 1; j < n; ++j) {
      if (one_line[j] < one_line[i]) ++smaller;
    }
    rank += smaller * factorial(n - 1 - i);
  }
  return rank;
}

std::vector<int> permutation_unrank(std::size_t rank, int n) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const std::size_t block = factorial(n - 1 - i);
    const std::size_t pick = rank / block;
    rank %= block;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

FiniteGroup FiniteGroup::z2_power(int d) {
  if (d < 1 || d > 20) throw ArgumentError("Z2^d requires 1 <= d <= 20, got d=" + std::to_string(d));
  return FiniteGroup(GroupKind::Z2Power, d, std::size_t{1} << d);
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 12) throw ArgumentError("S_n requires 1 <= n <= 12, got n=" + std::to_string(n));
  return FiniteGroup(GroupKind::Symmetric, n, factorial(n));
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::size_t>> table) {
  const std::size_t order = table.size();
  if (order == 0) throw ArgumentError("composition table is empty");
  auto flat = std::make_shared<std::vector<std::size_t>>();
  flat->reserve(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    if (table[a].size() != order) {
      throw ArgumentError("composition table row " + std::to_string(a) + " has " +
                          std::to_string(table[a].size()) + " entries, expected " +
                          std::to_string(order));
    }
    for (std::size_t b = 0; b < order; ++b) {
      if (table[a][b] >= order) {
        throw ArgumentError("composition table entry (" + std::to_string(a) + "," +
                            std::to_string(b) + ") is out of range");
      }
      flat->push_back(table[a][b]);
    }
  }
  const auto at = [&](std::size_t a, std::size_t b) { return (*flat)[a * order + b]; };

  std::size_t identity = order;
  for (std::size_t e = 0; e < order && identity == order; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < order && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
    if (ok) identity = e;
  }
  if (identity == order) throw ArgumentError("composition table has no identity element");

  // Latin-square rows give unique left/right inverses.
  for (std::size_t a = 0; a < order; ++a) {
    std::vector<bool> seen_row(order, false), seen_col(order, false);
    for (std::size_t b = 0; b < order; ++b) {
      if (seen_row[at(a, b)] || seen_col[at(b, a)]) {
        throw ArgumentError("composition table is not a Latin square at element " +
                            std::to_string(a));
      }
      seen_row[at(a, b)] = true;
      seen_col[at(b, a)] = true;
    }
  }
  if (order <= 120) {
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        for (std::size_t c = 0; c < order; ++c)
          if (at(at(a, b), c) != at(a, at(b, c))) {
            throw ArgumentError("composition table is not associative at (" + std::to_string(a) +
                                "," + std::to_string(b) + "," + std::to_string(c) + ")");
          }
  }

  FiniteGroup group(GroupKind::Table, static_cast<int>(order), order);
  group.table_identity_ = identity;
  group.table_ = std::move(flat);
  return group;
}

bool FiniteGroup::contains(const GroupElement& g) const {
  return g.kind == kind_ && g.parameter == parameter_ && g.index < order_;
}

void FiniteGroup::check_member(const GroupElement& g, const char* what) const {
  if (!contains(g)) {
    throw ArgumentError(std::string(what) + ": element of " + kind_name(g.kind) + "(" +
                        std::to_string(g.parameter) + ") used with group " + kind_name(kind_) +
                        "(" + std::to_string(parameter_) + ")");
  }
}

GroupElement FiniteGroup::element(std::size_t index) const {
  if (index >= order_) {
    throw ArgumentError("element index " + std::to_string(index) + " out of range for order " +
                        std::to_string(order_));
  }
  return GroupElement{kind_, parameter_, index};
}

GroupElement FiniteGroup::identity() const {
  // Identity is index 0 for Z2^d (bitstring 0) and S_n (1,2,...,n).
  return element(kind_ == GroupKind::Table ? table_identity_ : 0);
}

GroupElement FiniteGroup::compose(const GroupElement& g, const GroupElement& h) const {
  check_member(g, "compose");
  check_member(h, "compose");
  switch (kind_) {
    case GroupKind::Z2Power:
      return element(g.index ^ h.index);
    case GroupKind::Symmetric: {
      const auto gl = one_line(g);
      const auto hl = one_line(h);
      std::vector<int> out(gl.size());
      for (std::size_t i = 0; i < gl.size(); ++i) out[i] = gl[hl[i] - 1];
      return element(permutation_rank(out));
    }
    case GroupKind::Table:
      return element((*table_)[g.index * order_ + h.index]);
  }
  throw ArgumentError("unknown group kind");
}

GroupElement FiniteGroup::inverse(const GroupElement& g) const {
  check_member(g, "inverse");
  switch (kind_) {
    case GroupKind::Z2Power:
      return g;
    case GroupKind::Symmetric: {
      const auto gl = one_line(g);
      std::vector<int> out(gl.size());
      for (std::size_t i = 0; i < gl.size(); ++i) out[gl[i] - 1] = static_cast<int>(i) + 1;
      return element(permutation_rank(out));
    }
    case GroupKind::Table:
      for (std::size_t b = 0; b < order_; ++b) {
        if ((*table_)[g.index * order_ + b] == table_identity_) return element(b);
      }
      break;
  }
  throw InvariantError("element has no inverse");
}

std::vector<GroupElement> FiniteGroup::enumerate(std::size_t cap) const {
  if (order_ > cap) {
    throw ArgumentError("group order " + std::to_string(order_) + " exceeds enumeration cap " +
                        std::to_string(cap));
  }
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.push_back(GroupElement{kind_, parameter_, i});
  return out;
}

GroupElement FiniteGroup::from_bits(std::uint64_t bits) const {
  if (kind_ != GroupKind::Z2Power) throw ArgumentError("from_bits requires a Z2^d group");
  if (bits >= order_) {
    throw ArgumentError("bitstring value " + std::to_string(bits) + " has more than " +
                        std::to_string(parameter_) + " bits");
  }
  return element(static_cast<std::size_t>(bits));
}

std::uint64_t FiniteGroup::bits(const GroupElement& g) const {
  if (kind_ != GroupKind::Z2Power) throw ArgumentError("bits requires a Z2^d group");
  check_member(g, "bits");
  return g.index;
}

GroupElement FiniteGroup::from_one_line(std::span<const int> one_line) const {
  if (kind_ != GroupKind::Symmetric) throw ArgumentError("from_one_line requires an S_n group");
  if (static_cast<int>(one_line.size()) != parameter_) {
    throw ArgumentError("one-line permutation has " + std::to_string(one_line.size()) +
                        " entries, expected " + std::to_string(parameter_));
  }
  std::vector<bool> seen(parameter_ + 1, false);
  for (int v : one_line) {
    if (v < 1 || v > parameter_ || seen[v]) {
      throw ArgumentError("one-line tuple is not a permutation of 1.." + std::to_string(parameter_));
    }
    seen[v] = true;
  }
  return element(permutation_rank(one_line));
}

std::vector<int> FiniteGroup::one_line(const GroupElement& g) const {
  if (kind_ != GroupKind::Symmetric) throw ArgumentError("one_line requires an S_n group");
  check_member(g, "one_line");
  return permutation_unrank(g.index, parameter_);
}

std::string FiniteGroup::label(const GroupElement& g) const {
  check_member(g, "label");
  switch (kind_) {
    case GroupKind::Z2Power: {
      std::string s(static_cast<std::size_t>(parameter_), '0');
      for (int j = 0; j < parameter_; ++j) {
        if ((g.index >> j) & 1U) s[static_cast<std::size_t>(parameter_ - 1 - j)] = '1';
      }
      return s;
    }
    case GroupKind::Symmetric: {
      std::string s = "(";
      const auto line = one_line(g);
      for (std::size_t i = 0; i < line.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(line[i]);
      }
      return s + ")";
    }
    case GroupKind::Table:
      return "g" + std::to_string(g.index);
  }
  return {};
}

}  // namespace qwiht
