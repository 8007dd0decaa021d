#include "qwiht/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "qwiht/error.hpp"

namespace qwiht {
namespace {

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

std::vector<std::size_t> key_of(const JointPermutation& p) {
  std::vector<std::size_t> key = p.vertex_perm;
  key.insert(key.end(), p.coin_perm.begin(), p.coin_perm.end());
  return key;
}

}  // namespace

JointPermutation compose(const JointPermutation& a, const JointPermutation& b) {
  return JointPermutation{compose(a.vertex_perm, b.vertex_perm), compose(a.coin_perm, b.coin_perm),
                          JointOrigin::Composite, {}};
}

bool is_shift_automorphism(const JointPermutation& p, const CayleyGraph& graph) {
  const auto n = graph.vertex_count();
  const auto d = graph.degree();
  if (!is_permutation(p.vertex_perm, n) || !is_permutation(p.coin_perm, d)) return false;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < d; ++j) {
      if (p.vertex_perm[graph.neighbor(v, j)] != graph.neighbor(p.vertex_perm[v], p.coin_perm[j])) {
        return false;
      }
    }
  }
  return true;
}

bool is_walk_symmetry(const JointPermutation& p, const CayleyGraph& graph, const CoinOperator& coin,
                      double tol) {
  if (coin.dim() != graph.degree()) throw ArgumentError("coin dimension does not match graph degree");
  return is_shift_automorphism(p, graph) && coin_permutation_residual(coin, p.coin_perm) < tol;
}

std::vector<JointPermutation> generate_candidates(const CayleyGraph& graph) {
  const auto& group = graph.group();
  const auto n = graph.vertex_count();
  const auto d = graph.degree();
  if (n > kMaxCandidateGroupOrder) {
    throw ArgumentError("candidate generation supports |G| <= " + std::to_string(kMaxCandidateGroupOrder));
  }
  const auto elements = group.enumerate();
  const auto& gens = graph.generators();

  std::vector<JointPermutation> out;
  std::set<std::vector<std::size_t>> seen;
  const auto emit = [&](JointPermutation p) {
    if (!is_shift_automorphism(p, graph)) {
      throw InvariantError("candidate " + p.label + " does not preserve the shift operator");
    }
    if (seen.insert(key_of(p)).second) out.push_back(std::move(p));
  };

  for (const auto& g : elements) {
    JointPermutation p{Permutation(n), identity_permutation(d), JointOrigin::RightTranslation,
                       "right-translation[" + group.label(g) + "]"};
    for (const auto& v : elements) p.vertex_perm[v.index] = group.compose(v, g).index;
    emit(std::move(p));
  }

  for (const auto& s : elements) {
    const auto s_inv = group.inverse(s);
    Permutation coin_perm(d);
    bool preserves = true;
    for (std::size_t j = 0; j < d && preserves; ++j) {
      const auto image = group.compose(group.compose(s, gens[j]), s_inv);
      const auto it = std::find(gens.begin(), gens.end(), image);
      if (it == gens.end()) {
        preserves = false;
      } else {
        coin_perm[j] = static_cast<std::size_t>(it - gens.begin());
      }
    }
    if (!preserves) continue;
    JointPermutation p{Permutation(n), coin_perm, JointOrigin::GroupAutomorphism,
                       "conjugation[" + group.label(s) + "]"};
    for (const auto& v : elements) p.vertex_perm[v.index] = group.compose(group.compose(s, v), s_inv).index;
    emit(std::move(p));
  }

  if (group.kind() == GroupKind::Z2Power) {
    // Generator j is e_j only for the standard hypercube generating set.
    const auto dim = static_cast<std::size_t>(group.parameter());
    std::vector<std::size_t> bit_of(d);
    bool standard = d == dim;
    for (std::size_t j = 0; j < d && standard; ++j) {
      const auto b = group.bits(gens[j]);
      standard = b != 0 && (b & (b - 1)) == 0;
      if (standard) bit_of[j] = static_cast<std::size_t>(__builtin_ctzll(b));
    }
    if (standard) {
      std::vector<std::size_t> label_of_bit(dim);
      for (std::size_t j = 0; j < d; ++j) label_of_bit[bit_of[j]] = j;
      auto sigma = identity_permutation(dim);  // bit b -> bit sigma[b]
      do {
        JointPermutation p{Permutation(n), Permutation(d), JointOrigin::GroupAutomorphism, "coordinate-permutation"};
        for (std::size_t v = 0; v < n; ++v) {
          std::size_t image = 0;
          for (std::size_t b = 0; b < dim; ++b)
            if ((v >> b) & 1U) image |= std::size_t{1} << sigma[b];
          p.vertex_perm[v] = image;
        }
        for (std::size_t j = 0; j < d; ++j) p.coin_perm[j] = label_of_bit[sigma[bit_of[j]]];
        emit(std::move(p));
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
  }
  return out;
}

SymmetryReport classify(const CayleyGraph& graph, const CoinOperator& coin, double tol, std::size_t closure_cap) {
  if (coin.dim() != graph.degree()) throw ArgumentError("coin dimension does not match graph degree");
  const auto generators = generate_candidates(graph);

  std::vector<JointPermutation> elements;
  std::set<std::vector<std::size_t>> seen;
  std::deque<std::size_t> frontier;
  JointPermutation identity{identity_permutation(graph.vertex_count()), identity_permutation(graph.degree()),
                            JointOrigin::Composite, "identity"};
  seen.insert(key_of(identity));
  elements.push_back(identity);
  frontier.push_back(0);
  for (const auto& g : generators) {
    if (seen.insert(key_of(g)).second) {
      elements.push_back(g);
      frontier.push_back(elements.size() - 1);
    }
  }
  while (!frontier.empty()) {
    const auto x = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      auto y = compose(g, elements[x]);
      if (seen.insert(key_of(y)).second) {
        if (elements.size() >= closure_cap) {
          throw ArgumentError("symmetry closure exceeded cap of " + std::to_string(closure_cap) + " elements");
        }
        elements.push_back(std::move(y));
        frontier.push_back(elements.size() - 1);
      }
    }
  }

  SymmetryReport report;
  std::set<Permutation> coin_perms;
  for (auto& p : elements) {
    if (!is_shift_automorphism(p, graph)) throw InvariantError("closure produced a non-automorphism");
    const bool fixes = coin_permutation_residual(coin, p.coin_perm) < tol;
    if (fixes) {
      report.w2.push_back(p);
      coin_perms.insert(p.coin_perm);
    }
    if (is_identity(p.coin_perm)) {
      report.a1.push_back(std::move(p));
    } else {
      report.a2_extra.push_back(std::move(p));
    }
  }
  report.coin_perms_w2.assign(coin_perms.begin(), coin_perms.end());
  return report;
}

}  // namespace qwiht
