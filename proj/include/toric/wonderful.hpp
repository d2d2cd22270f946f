#pragma once

// Projective wonderful models of toric arrangements: building sets, nested
// sets, admissible functions, the monomial cohomology basis, its Poincaré
// polynomial, a blowup-recursion rank oracle and the presentation of the
// cohomology ring.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toric/arrangement.hpp"
#include "toric/fan.hpp"
#include "toric/graded.hpp"

namespace toric {

/// Members are referred to by their position 0..size()-1, which is also the
/// index of the variable T_{position+1}.
class BuildingSet {
 public:
  /// `members` are poset indices; the torus (index 0) may not appear and
  /// duplicates are rejected (ValidationError).
  BuildingSet(LayerPoset poset, std::vector<std::size_t> members);

  const LayerPoset& poset() const { return poset_; }
  std::size_t size() const { return members_.size(); }
  std::size_t poset_index(std::size_t m) const { return members_.at(m); }
  const Layer& layer(std::size_t m) const { return poset_.element(members_.at(m)); }
  /// Position of a poset element in the building set, if it is a member.
  std::optional<std::size_t> position_of(std::size_t poset_index) const;
  /// layer(a) ⊆ layer(b) as subvarieties.
  bool contained(std::size_t a, std::size_t b) const {
    return poset_.below_or_equal(members_[b], members_[a]);
  }

 private:
  LayerPoset poset_;
  std::vector<std::size_t> members_;
  std::map<std::size_t, std::size_t> position_;
};

/// Positions of building-set members, sorted.
using MemberSet = std::vector<std::size_t>;

struct WellConnectedReport {
  bool well_connected = true;
  MemberSet subset;
  std::optional<Layer> missing_component;
};

/// Exhaustive check: whenever the intersection of a subset has two or more
/// connected components, each must belong to the building set.
WellConnectedReport is_well_connected(const BuildingSet& g);

/// Intersection of the members' layers, or nullopt unless it is a single
/// connected component.
std::optional<Layer> connected_intersection(const BuildingSet& g, const MemberSet& members);

bool is_nested(const BuildingSet& g, const MemberSet& candidate);

/// All nested sets, including the empty set, sorted by size and then
/// lexicographically.
std::vector<MemberSet> enumerate_nested_sets(const BuildingSet& g);

struct AdmissibleFunction {
  MemberSet support;
  std::vector<unsigned> values;  // values[i] = f(support[i])

  unsigned degree() const;
  friend bool operator==(const AdmissibleFunction&, const AdmissibleFunction&) = default;
};

/// Upper bound dim M_N(A) - dim A for every A in the nested set N.
std::vector<std::size_t> admissible_bounds(const BuildingSet& g, const MemberSet& nested);

/// All admissible functions, the zero function first; grouped by support in
/// nested-set order, values in lexicographic order.
std::vector<AdmissibleFunction> enumerate_admissible(const BuildingSet& g);

/// Gamma of the intersection of the support (the zero lattice for the empty
/// support). The support must be nested.
Sublattice support_lattice(const BuildingSet& g, const MemberSet& support);

/// One row of the basis table: everything contributed by one support.
struct SupportContribution {
  MemberSet support;
  GradedCount subfan_betti;
  /// Basis Theta(N) of H*(X_{Delta(N)}) lifted to monomials in the C_r of the
  /// parent fan, by degree.
  std::vector<std::vector<RayMonomial>> theta;
  /// Admissible functions with this support.
  std::vector<AdmissibleFunction> functions;
  GradedCount contribution;
};

struct BasisElement {
  AdmissibleFunction function;
  RayMonomial theta;
  std::size_t theta_degree = 0;
  std::size_t monomial_degree = 0;
  std::size_t degree() const { return theta_degree + monomial_degree; }
};

struct WonderfulBasis {
  std::vector<SupportContribution> rows;
  std::vector<BasisElement> elements;
  GradedCount poincare;
};

WonderfulBasis compute_basis(const BuildingSet& g, const Fan& fan);
GradedCount poincare(const BuildingSet& g, const Fan& fan);

/// Members ordered so that G_i ⊂ G_j implies i < j: decreasing codimension,
/// ties by building-set position.
std::vector<std::size_t> inclusion_order(const BuildingSet& g);

/// Ranks from the blowup formula
///   H*(Y_m) = H*(Y_{m-1}) ⊕ ⊕_{J=1}^{codim G_m - 1} H*(Z~) q^J,
/// recursing on the proper transform Z~ of G_m with the components of its
/// intersections with earlier centers. `order` lists member positions and
/// must refine inclusion (MathError otherwise).
GradedCount rank_via_blowup_recursion(const BuildingSet& g, const Fan& fan,
                                      const std::vector<std::size_t>& order);
GradedCount rank_via_blowup_recursion(const BuildingSet& g, const Fan& fan);

// ---------------------------------------------------------------------------
// Presentation

/// Variable index -> exponent.
using Monomial = std::map<std::size_t, unsigned>;
/// Monomial -> coefficient.
using Polynomial = std::map<Monomial, Integer>;
/// Variable index -> coefficient.
using LinearForm = std::map<std::size_t, Integer>;

enum class GeneratorKind { StanleyReisner, Linear, Boundary, NestedPair, EmptyIntersection };

std::string to_string(GeneratorKind kind);

/// A generator written as (product of linear factors) * monomial.
struct Generator {
  explicit Generator(GeneratorKind k) : kind(k) {}

  GeneratorKind kind;
  std::vector<LinearForm> factors;
  Monomial monomial;
  /// For NestedPair: the member G; for Boundary: the member and the ray.
  std::optional<std::size_t> member;
  std::optional<std::size_t> ray;
  /// For NestedPair and EmptyIntersection: the set H.
  MemberSet set;
  /// For NestedPair: the layer M (nullopt for the whole variety) and the
  /// equal-sign basis used.
  std::optional<Layer> m_layer;
  std::vector<IntVector> basis;

  Polynomial expand() const;
  /// Total degree in the T variables.
  std::size_t t_degree(std::size_t first_t) const;
};

struct Presentation {
  std::size_t ray_count = 0;
  std::size_t member_count = 0;
  std::vector<std::string> variables;  // C1..CR then T1..Tm
  std::vector<Generator> generators;

  std::size_t count(GeneratorKind kind) const;
  std::string format(const Generator& gen) const;
  std::string format(const Polynomial& p) const;
};

/// Emits the generators of the ideal: Stanley-Reisner minimal non-faces,
/// linear relations, C_r T_G for rays outside V_{Gamma_G}, F(G,H) for
/// (G,H) in W and F(H) for H in W_0. Throws MathError if an equal-sign
/// extension basis is not found within the bound.
Presentation emit_presentation(const BuildingSet& g, const Fan& fan,
                               int bound = kDefaultSearchBound);

/// |W| and |W_0| computed directly from the building set.
std::size_t count_nested_pairs(const BuildingSet& g);
std::size_t count_empty_intersections(const BuildingSet& g);

}  // namespace toric
