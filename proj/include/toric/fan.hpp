#pragma once

// Rational polyhedral fans given by primitive rays and maximal cones.
// Only simplicial fans are handled; smoothness, completeness, Betti numbers
// of the toric variety, restriction to V_Gamma and the type-A Weyl fan.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "toric/graded.hpp"
#include "toric/lattice.hpp"

namespace toric {

/// Sorted ray indices into the parent fan. The empty cone is the origin.
using Cone = std::vector<std::size_t>;

class Fan {
 public:
  Fan() = default;
  /// Throws ValidationError on an out-of-range index, a non-primitive or
  /// repeated ray, a ray not used by any maximal cone, or a repeated cone.
  Fan(std::size_t ambient_dim, std::vector<IntVector> rays, std::vector<Cone> maximal_cones);

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const IntVector& ray(std::size_t i) const { return rays_.at(i); }
  const std::vector<Cone>& maximal_cones() const { return cones_; }

  friend bool operator==(const Fan& a, const Fan& b);

 private:
  std::size_t dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<Cone> cones_;
};

struct FanReport {
  bool simplicial = false;
  bool smooth = false;
  bool complete = false;
  /// First reason a property failed, empty if all hold.
  std::string detail;
};

FanReport validate(const Fan& fan);

/// f_j = number of j-dimensional cones; f_0 = 1.
using FVector = std::vector<std::int64_t>;

/// All faces of all maximal cones, deduplicated and sorted, indexed by
/// dimension. Throws ValidationError for non-simplicial fans.
std::vector<std::vector<Cone>> faces_by_dimension(const Fan& fan);
FVector f_vector(const Fan& fan);

/// b_{2k} = sum_{i>=k} (-1)^{i-k} C(i,k) f_{n-i}. Requires a smooth complete fan.
GradedCount betti_numbers(const Fan& fan);

/// True iff <chi, r> has one sign (allowing zero) on the rays of every maximal cone.
bool equal_sign_holds(const Fan& fan, const IntVector& chi);

/// The cones of `fan` lying in V_Gamma = Gamma^perp, written in a basis of the
/// lattice V_Gamma ∩ Z^n.
struct SubFan {
  Fan fan;
  /// Ray i of `fan` is ray parent_rays[i] of the parent.
  std::vector<std::size_t> parent_rays;
  /// Rows form the basis used for the new coordinates.
  Sublattice coordinate_lattice;
};

/// Throws ValidationError if gamma is not a split summand or the restricted
/// fan fails to be smooth and complete (which happens when gamma has no
/// equal-sign basis).
SubFan subfan(const Fan& fan, const Sublattice& gamma);

/// Fan of the Weyl chambers of A_{n-1} in R^n / R(1,...,1), in the
/// coordinates v -> (v_j - v_{j+1})_j. Ray k (0-based) is the image of
/// sum_{i in S} e_i where S has bitmask k+1 (bit i-1 set for i in S).
/// Maximal cones follow permutations in lexicographic order.
Fan weyl_fan_A(std::size_t n);

/// Monomial in the ray variables C_r: (ray index, exponent), sorted by index.
using RayMonomial = std::vector<std::pair<std::size_t, unsigned>>;

std::string to_string(const RayMonomial& m, std::size_t index_offset = 1);

/// Monomials whose classes form a Z-basis of H^{2k}(X_fan, Z), for each k.
/// Candidates are square-free face monomials first, then the rest, each in
/// lexicographic order of ray indices; the result is the first basis in that
/// order all of whose prefixes span direct summands. Requires a smooth
/// complete fan.
std::vector<std::vector<RayMonomial>> cohomology_basis(const Fan& fan);

}  // namespace toric
