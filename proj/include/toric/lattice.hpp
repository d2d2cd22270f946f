#pragma once

// Exact integer linear algebra: matrices over Z, Smith and Hermite normal
// forms, and sublattices of Z^n with a canonical basis.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace toric {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long> values);
Integer dot(const IntVector& a, const IntVector& b);
std::string to_string(const IntVector& v);

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  /// All rows must have length `cols`.
  static IntegerMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;
  std::vector<IntVector> to_rows() const;
  void append_row(const IntVector& row);
  IntegerMatrix transpose() const;
  bool is_zero() const;

  // Elementary operations; used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator<(const IntegerMatrix& a, const IntegerMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntVector operator*(const IntVector& row, const IntegerMatrix& m);
std::string to_string(const IntegerMatrix& m);

/// left * A * right = diag(diagonal), with diagonal[i] | diagonal[i+1]
/// among the nonzero entries and all entries nonnegative.
struct SmithDecomposition {
  std::vector<Integer> diagonal;  // length min(rows, cols)
  IntegerMatrix left;
  IntegerMatrix right;
  IntegerMatrix right_inverse;

  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& a);

/// transform * A = form, where form is the row-style Hermite normal form:
/// echelon, positive pivots, entries above each pivot reduced into [0, pivot).
/// Rows at index >= rank are zero.
struct HermiteDecomposition {
  IntegerMatrix form;
  IntegerMatrix transform;
  std::size_t rank = 0;
};

HermiteDecomposition hermite_normal_form(const IntegerMatrix& a);

/// Determinant of a square matrix (fraction-free elimination).
Integer determinant(const IntegerMatrix& a);

/// Depth-first search, in the given order of indices into `vectors`, for
/// `rank` vectors forming a Z-basis of Z^rank. A partial choice is kept only
/// while its span is a direct summand. The first `forced` indices of `order`
/// are always taken. Returns nullopt if no such basis exists or the node
/// limit is reached.
std::optional<std::vector<std::size_t>> first_unimodular_subset(
    const std::vector<IntVector>& vectors, const std::vector<std::size_t>& order, std::size_t rank,
    std::size_t forced = 0, std::size_t node_limit = 2000000);

/// A subgroup of Z^n, stored by its Hermite basis so that equal lattices
/// compare equal.
class Sublattice {
 public:
  explicit Sublattice(std::size_t ambient_rank = 0);
  /// Lattice generated by the rows of `generators` (ambient rank = cols).
  explicit Sublattice(const IntegerMatrix& generators);
  Sublattice(const std::vector<IntVector>& generators, std::size_t ambient_rank);

  static Sublattice full(std::size_t n);

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  /// Hermite basis, one row per basis vector.
  const IntegerMatrix& basis() const { return basis_; }

  bool contains(const IntVector& v) const;
  bool contains(const Sublattice& other) const;
  /// Coefficients x with x * basis() == v, if v lies in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;

  /// Largest lattice of the same rank containing this one with finite index.
  Sublattice saturation() const;
  bool is_split_summand() const;
  /// Order of the torsion subgroup of Z^n / this.
  Integer quotient_torsion_order() const;
  Sublattice sum(const Sublattice& other) const;
  /// {v in Z^n : <chi, v> = 0 for all chi in this lattice}.
  Sublattice annihilator() const;

  friend bool operator==(const Sublattice& a, const Sublattice& b);
  friend bool operator!=(const Sublattice& a, const Sublattice& b) { return !(a == b); }
  friend bool operator<(const Sublattice& a, const Sublattice& b);

 private:
  std::size_t ambient_;
  IntegerMatrix basis_;
};

}  // namespace toric
