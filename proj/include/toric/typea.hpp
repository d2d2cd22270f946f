#pragma once

// Type-A combinatorics: hook factorizations and the lec statistic, Eulerian
// polynomials, admissible forests, the bijection Psi between pairs (forest,
// permutation) and forests with one more leaf, the chain-monomial bijection,
// generating-function identities and the toric type-A arrangement.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toric/graded.hpp"
#include "toric/series.hpp"
#include "toric/wonderful.hpp"

namespace toric {

using Word = std::vector<int>;

struct HookFactorization {
  Word prefix;
  std::vector<Word> hooks;
  friend bool operator==(const HookFactorization&, const HookFactorization&) = default;
};

/// Throws ValidationError on repeated or non-positive entries.
HookFactorization hook_factorize(const Word& word);
std::size_t inversions(const Word& word);
std::size_t lec(const Word& word);
std::size_t des(const Word& word);
bool is_hook(const Word& word);

/// The hook on the sorted set {j_1 < ... < j_s} with exactly i inversions:
/// [j_{i+1}, j_1, ..., j_i, j_{i+2}, ..., j_s]. Throws ValidationError
/// unless 1 <= i <= s-1 and the set is strictly increasing.
Word hook_from_set(const Word& sorted_set, std::size_t i);

/// Coefficient k counts permutations of S_n with statistic value k.
GradedCount des_distribution(std::size_t n);
GradedCount lec_distribution(std::size_t n);
/// A_n(q) = sum over S_n of q^{des+1}, by brute force.
GradedCount eulerian_polynomial(std::size_t n);

// ---------------------------------------------------------------------------
// Admissible forests

/// A leaf has label > 0 and no children; an internal vertex has label 0,
/// k >= 3 children and exponent 1 <= i <= k-2.
struct ForestNode {
  int leaf = 0;
  unsigned exponent = 0;
  std::vector<ForestNode> children;

  bool is_leaf() const { return leaf > 0; }
  int min_leaf() const;
  std::size_t leaf_count() const;
  unsigned degree() const;
  friend bool operator==(const ForestNode&, const ForestNode&) = default;
};

/// Trees ordered by their minimal leaf, children likewise.
struct AdmissibleForest {
  std::vector<ForestNode> trees;

  std::size_t leaf_count() const;
  unsigned degree() const;
  friend bool operator==(const AdmissibleForest&, const AdmissibleForest&) = default;
  friend bool operator<(const AdmissibleForest& a, const AdmissibleForest& b);
};

/// Sorts children and trees by minimal leaf.
void canonicalize(AdmissibleForest& f);
/// Structure, labels {1..n} and exponent bounds.
bool is_admissible(const AdmissibleForest& f);
/// "q1(1,2,3) 4"
std::string to_string(const ForestNode& node);
std::string to_string(const AdmissibleForest& f);
/// Inverse of to_string; throws ParseError on bad syntax and ValidationError
/// if the result is not admissible.
AdmissibleForest parse_forest(const std::string& text);
/// "3,1,2" or "[3, 1, 2]"; throws ParseError.
Word parse_word(const std::string& text);
std::string to_string(const Word& word);

/// All admissible trees whose leaves are exactly `labels`.
std::vector<ForestNode> enumerate_trees(const Word& labels);
/// All admissible forests on leaves {1..n}, in canonical form.
std::vector<AdmissibleForest> enumerate_forests(std::size_t n);
/// Number of forests on n leaves by (degree, number of trees).
std::map<std::pair<unsigned, std::size_t>, std::int64_t> forest_counts(std::size_t n);
/// Coefficient d counts admissible trees on n leaves of degree d, computed by
/// the set-partition recursion on the root's children.
GradedCount tree_degree_counts(std::size_t n);

/// F on n leaves with m trees and sigma in S_m give a forest on n+1 leaves
/// of degree deg F + lec(sigma). Throws ValidationError if sigma is not a
/// permutation of {1..m} or F is not admissible.
AdmissibleForest psi(const AdmissibleForest& forest, const Word& sigma);
/// Inverse of psi. Throws ValidationError on a malformed forest.
std::pair<AdmissibleForest, Word> psi_inverse(const AdmissibleForest& forest);

// ---------------------------------------------------------------------------
// Chains of subsets and permutations

struct ChainStep {
  Word set;  // sorted subset of {1..n}
  unsigned exponent = 0;
  friend bool operator==(const ChainStep&, const ChainStep&) = default;
};
using ChainMonomial = std::vector<ChainStep>;

/// Strictly increasing chain with 1 <= exponent_j < |S_j \ S_{j-1}|;
/// throws ValidationError otherwise. lec of the result = total exponent.
Word chain_monomial_to_permutation(const ChainMonomial& chain, std::size_t n);
ChainMonomial permutation_to_chain_monomial(const Word& sigma);
/// All valid chain monomials for {1..n}.
std::vector<ChainMonomial> enumerate_chain_monomials(std::size_t n);

// ---------------------------------------------------------------------------
// Generating functions

/// lambda(q,t) = sum_n T_n(q) t^n/n! with T_n from tree_degree_counts.
TruncatedSeries lambda_series(std::size_t order);
/// L(q,t) = sum_{n>=1} (sum_{S_n} q^lec) t^n/n!.
TruncatedSeries lec_series(std::size_t order);
/// E(q,t) = sum_{n>=1} A_n(q)/q t^n/n!, from brute-force descent counts.
TruncatedSeries eulerian_series(std::size_t order);

struct IdentityCheck {
  std::string name;
  bool holds = false;
  std::size_t order = 0;
  std::string detail;
};

/// d/dt lambda * (e^{q lambda} - q e^lambda) = 1 - q through t^order.
IdentityCheck verify_lambda_recurrence(std::size_t order);
/// (q E + 1)(1 - q e^{t(1-q)}) = 1 - q through t^order.
IdentityCheck verify_eulerian_egf(std::size_t order);
/// L(q, lambda) = d/dt(e^lambda - 1) - 1 = E(q, lambda) through t^order.
std::vector<IdentityCheck> verify_main_identity(std::size_t order);

// ---------------------------------------------------------------------------
// Toric type-A arrangement on the torus (C*)^n / C*, in the character
// coordinates dual to weyl_fan_A(n).

/// Character of t_i / t_j (1-based i < j).
IntVector typea_root(std::size_t n, std::size_t i, std::size_t j);
/// The layers K_{ij} = {t_i = t_j}.
std::vector<Layer> typea_toric_arrangement(std::size_t n);
/// K_I = {t_i = t_j for i, j in I}.
Layer typea_layer(std::size_t n, const Word& subset);
/// Minimal building set {K_I : |I| >= 2}, subsets ordered by size then
/// lexicographically.
BuildingSet typea_minimal_building_set(std::size_t n);

}  // namespace toric
