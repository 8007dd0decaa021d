#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qwiht/cayley.hpp"
#include "qwiht/coin.hpp"

namespace qwiht {

enum class JointOrigin { RightTranslation, GroupAutomorphism, Composite, Explicit };

// P = P_v (x) P_c acting as |v, j> -> |vertex_perm[v], coin_perm[j]>.
struct JointPermutation {
  Permutation vertex_perm;
  Permutation coin_perm;
  JointOrigin origin = JointOrigin::Explicit;
  std::string label;
};

// (a o b) applies b first.
JointPermutation compose(const JointPermutation& a, const JointPermutation& b);

// P S P^dag = S, checked combinatorially:
// vertex_perm(h_j . v) = h_{coin_perm(j)} . vertex_perm(v) for all v, j.
bool is_shift_automorphism(const JointPermutation& p, const CayleyGraph& graph);

// Shift automorphism whose coin permutation also fixes the coin.
bool is_walk_symmetry(const JointPermutation& p, const CayleyGraph& graph, const CoinOperator& coin,
                      double tol = kDefaultCpsTol);

inline constexpr std::size_t kMaxCandidateGroupOrder = 120;
inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

// Structured joint automorphisms of a Cayley graph (|G| <= 120):
//   - right translations v -> v . g, identity coin permutation;
//   - conjugations v -> s . v . s^-1 by s with s H s^-1 = H, coin permutation
//     induced on the generator labels;
//   - for Z2^d, coordinate permutations of the bit labels.
// Every candidate is verified with is_shift_automorphism before it is returned.
std::vector<JointPermutation> generate_candidates(const CayleyGraph& graph);

// Subgroup of A2 generated by the candidates, split into A1, A2 and W2.
// This certifies a subgroup; it does not prove the listed sets exhaust A2.
struct SymmetryReport {
  std::vector<JointPermutation> a1;        // identity coin permutation (= W1)
  std::vector<JointPermutation> a2_extra;  // nontrivial coin permutation
  std::vector<JointPermutation> w2;        // elements of A2 whose coin permutation fixes the coin
  std::vector<Permutation> coin_perms_w2;  // distinct coin permutations appearing in w2

  std::size_t a1_count() const { return a1.size(); }
  std::size_t a2_count() const { return a1.size() + a2_extra.size(); }
  std::size_t w2_count() const { return w2.size(); }
};

SymmetryReport classify(const CayleyGraph& graph, const CoinOperator& coin, double tol = kDefaultCpsTol,
                        std::size_t closure_cap = kDefaultClosureCap);

}  // namespace qwiht
