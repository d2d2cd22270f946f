#pragma once

// Layers K(Gamma, phi) = {t : x_chi(t) = exp(2 pi i phi(chi)), chi in Gamma}
// of a torus (C*)^n with phi valued in Q/Z, their intersections, the poset of
// layers and equal-sign bases with respect to a fan.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/lattice.hpp"

namespace toric {

/// Element of Q/Z, kept as a reduced fraction in [0, 1).
using Rational = mpq_class;

Rational mod_one(Rational x);
/// Parses "p/q" or an integer; throws ParseError.
Rational parse_rational(const std::string& text);

class Layer {
 public:
  Layer() = default;
  /// The torus itself (Gamma = 0) in dimension n.
  explicit Layer(std::size_t torus_dim);
  /// phi[i] is the value on generator row i. The generators need not be
  /// independent, but phi must then vanish on their relations. Throws
  /// ValidationError if the lattice is not a split summand or phi is
  /// inconsistent.
  Layer(const IntegerMatrix& generators, const std::vector<Rational>& phi);

  std::size_t torus_dim() const { return gamma_.ambient_rank(); }
  const Sublattice& gamma() const { return gamma_; }
  /// Values on the rows of gamma().basis().
  const std::vector<Rational>& phi() const { return phi_; }
  std::size_t codim() const { return gamma_.rank(); }
  std::size_t dim() const { return torus_dim() - codim(); }

  /// phi(chi); throws MathError if chi is not in Gamma.
  Rational value(const IntVector& chi) const;
  /// True iff this layer is a subset of `other` as subvarieties of the torus.
  bool is_contained_in(const Layer& other) const;

  friend bool operator==(const Layer& a, const Layer& b) {
    return a.gamma_ == b.gamma_ && a.phi_ == b.phi_;
  }
  friend bool operator!=(const Layer& a, const Layer& b) { return !(a == b); }
  /// Orders by codimension, then lattice, then phi.
  friend bool operator<(const Layer& a, const Layer& b);

  /// e.g. "gamma=[(1,0,2)] phi=[0]"
  std::string to_string() const;

 private:
  Layer(Sublattice gamma, std::vector<Rational> phi);
  friend std::vector<Layer> intersect(const Layer& a, const Layer& b);

  Sublattice gamma_;
  std::vector<Rational> phi_;
};

/// Connected components of a ∩ b, sorted; empty if the intersection is empty.
std::vector<Layer> intersect(const Layer& a, const Layer& b);

/// Connected components of the intersection of all given layers (the torus
/// for an empty list).
std::vector<Layer> intersect_all(const std::vector<Layer>& layers, std::size_t torus_dim);

/// Poset of layers ordered by reverse inclusion. Element 0 is the torus;
/// elements are sorted by Layer::operator<.
class LayerPoset {
 public:
  std::size_t torus_dim() const { return torus_dim_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Layer>& elements() const { return elements_; }
  const Layer& element(std::size_t i) const { return elements_.at(i); }
  std::optional<std::size_t> index_of(const Layer& layer) const;
  /// Index of a layer that must belong to the poset; throws MathError.
  std::size_t require_index(const Layer& layer) const;

  /// element(i) ⊇ element(j) (i is below j in reverse inclusion).
  bool below_or_equal(std::size_t i, std::size_t j) const { return leq_[i][j]; }
  /// Cover relations (i, j): i < j with nothing strictly between.
  const std::vector<std::pair<std::size_t, std::size_t>>& hasse_edges() const { return hasse_; }

  friend LayerPoset poset_of_layers(const std::vector<Layer>& arrangement, std::size_t torus_dim);

 private:
  std::size_t torus_dim_ = 0;
  std::vector<Layer> elements_;
  std::map<Layer, std::size_t> index_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::pair<std::size_t, std::size_t>> hasse_;
};

/// Closure of {torus} ∪ arrangement under connected components of pairwise
/// intersections. Throws MathError on a dimension mismatch.
LayerPoset poset_of_layers(const std::vector<Layer>& arrangement, std::size_t torus_dim);

inline constexpr int kDefaultSearchBound = 8;

struct EqualSignResult {
  bool found = false;
  std::vector<IntVector> basis;
  bool supplied = false;
  std::string detail;
};

/// Bounded search for an equal-sign basis of gamma: coefficient vectors in
/// [-bound, bound]^rank over the Hermite basis are enumerated up to sign,
/// ordered by max-norm then lexicographically, filtered by the equal-sign
/// property, and a Z-basis is selected depth-first in that order.
EqualSignResult find_equal_sign_basis(const Fan& fan, const Sublattice& gamma,
                                      int bound = kDefaultSearchBound);

/// Checks a supplied basis: throws ValidationError if it does not generate
/// gamma; otherwise reports whether every vector has the equal-sign property.
EqualSignResult verify_equal_sign_basis(const Fan& fan, const Sublattice& gamma,
                                        const std::vector<IntVector>& basis);

struct GoodnessReport {
  bool good = true;
  /// One entry per poset element (element 0, the torus, has an empty basis).
  std::vector<EqualSignResult> certificates;
};

/// Certifies an equal-sign basis for every poset element, using supplied
/// bases (keyed by poset index) where given and the bounded search otherwise.
GoodnessReport goodness_check(const Fan& fan, const LayerPoset& poset,
                              const std::map<std::size_t, std::vector<IntVector>>& supplied = {},
                              int bound = kDefaultSearchBound);

/// Equal-sign basis (chi_1..chi_s) of outer whose first k vectors are an
/// equal-sign basis of inner (k = rank inner). Requires inner ⊆ outer, both
/// split. Throws MathError if no extension is found within the bound.
std::vector<IntVector> extend_basis_equal_sign(const Fan& fan, const Sublattice& inner,
                                               const Sublattice& outer,
                                               int bound = kDefaultSearchBound);

}  // namespace toric
