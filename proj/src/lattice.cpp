#include "toric/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "toric/error.hpp"

namespace toric {

IntVector make_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw MathError("dot: dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// IntegerMatrix

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw MathError("IntegerMatrix: ragged initializer");
    for (long x : r) data_.emplace_back(x);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntegerMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

IntVector IntegerMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntegerMatrix::col(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVector> IntegerMatrix::to_rows() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

void IntegerMatrix::append_row(const IntVector& row) {
  if (row.size() != cols_) throw MathError("append_row: length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw MathError("matrix product: dimension mismatch");
  IntegerMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += x * b(k, j);
    }
  return p;
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool operator<(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(),
                                      b.data_.end());
}

IntVector operator*(const IntVector& row, const IntegerMatrix& m) {
  if (row.size() != m.rows()) throw MathError("vector-matrix product: dimension mismatch");
  IntVector out(m.cols(), Integer(0));
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (row[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += row[k] * m(k, j);
  }
  return out;
}

std::string to_string(const IntegerMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) os << (r ? "," : "") << to_string(m.row(r));
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form

std::size_t SmithDecomposition::rank() const {
  return static_cast<std::size_t>(
      std::count_if(diagonal.begin(), diagonal.end(), [](const Integer& d) { return d != 0; }));
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntegerMatrix d = a;
  IntegerMatrix left = IntegerMatrix::identity(m);
  IntegerMatrix right = IntegerMatrix::identity(n);
  IntegerMatrix right_inv = IntegerMatrix::identity(n);

  // Column operation col[dst] += k * col[src] on d and right; the inverse
  // acts on right_inv as row[src] -= k * row[dst].
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
    d.add_col_multiple(dst, src, k);
    right.add_col_multiple(dst, src, k);
    right_inv.add_row_multiple(src, dst, -k);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    d.swap_cols(x, y);
    right.swap_cols(x, y);
    right_inv.swap_rows(x, y);
  };
  auto row_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
    d.add_row_multiple(dst, src, k);
    left.add_row_multiple(dst, src, k);
  };

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    bool any = false;
    while (true) {
      // Pivot: smallest nonzero absolute value, first in row-major order.
      std::size_t pi = 0, pj = 0;
      any = false;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const Integer& x = d(i, j);
          if (x == 0) continue;
          if (!any || abs(x) < best) {
            best = abs(x);
            pi = i;
            pj = j;
            any = true;
          }
        }
      if (!any) break;
      d.swap_rows(t, pi);
      left.swap_rows(t, pi);
      col_swap(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        row_op(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        col_op(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            row_op(t, i, 1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (!any) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      left.negate_row(t);
    }
  }

  SmithDecomposition out;
  out.diagonal.resize(steps);
  for (std::size_t i = 0; i < steps; ++i) out.diagonal[i] = d(i, i);
  out.left = std::move(left);
  out.right = std::move(right);
  out.right_inverse = std::move(right_inv);
  return out;
}

// ---------------------------------------------------------------------------
// Hermite normal form

HermiteDecomposition hermite_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntegerMatrix h = a;
  IntegerMatrix u = IntegerMatrix::identity(m);

  // Replace rows (r, i) by (s*r + t*i, -(b/g)*r + (a/g)*i); determinant 1.
  auto combine = [](IntegerMatrix& mat, std::size_t r, std::size_t i, const Integer& s,
                    const Integer& t, const Integer& x, const Integer& y) {
    for (std::size_t c = 0; c < mat.cols(); ++c) {
      Integer top = s * mat(r, c) + t * mat(i, c);
      Integer bottom = x * mat(r, c) + y * mat(i, c);
      mat(r, c) = std::move(top);
      mat(i, c) = std::move(bottom);
    }
  };

  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    for (std::size_t i = row + 1; i < m; ++i) {
      if (h(i, col) == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(row, col).get_mpz_t(),
                 h(i, col).get_mpz_t());
      Integer x = -h(i, col) / g;
      Integer y = h(row, col) / g;
      combine(h, row, i, s, t, x, y);
      combine(u, row, i, s, t, x, y);
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      h.negate_row(row);
      u.negate_row(row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      if (h(i, col) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(row, col).get_mpz_t());
      h.add_row_multiple(i, row, -q);
      u.add_row_multiple(i, row, -q);
    }
    ++row;
  }
  return HermiteDecomposition{std::move(h), std::move(u), row};
}

Integer determinant(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) throw MathError("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntegerMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::optional<std::vector<std::size_t>> first_unimodular_subset(
    const std::vector<IntVector>& vectors, const std::vector<std::size_t>& order, std::size_t rank,
    std::size_t forced, std::size_t node_limit) {
  // quotients.back() maps Z^rank onto Z^rank / span(chosen); a vector v keeps
  // the span a direct summand iff its image is primitive.
  std::vector<std::size_t> chosen;
  std::vector<IntegerMatrix> quotients{IntegerMatrix::identity(rank)};
  std::vector<std::size_t> next{0};
  std::size_t nodes = 0;
  while (chosen.size() < rank) {
    if (++nodes > node_limit) return std::nullopt;
    std::size_t& pos = next.back();
    const bool exhausted = pos >= order.size() || order.size() - pos < rank - chosen.size() ||
                           (chosen.size() < forced && pos > chosen.size());
    if (exhausted) {
      if (chosen.size() <= forced) return std::nullopt;
      chosen.pop_back();
      quotients.pop_back();
      next.pop_back();
      continue;
    }
    const std::size_t idx = order[pos++];
    const IntegerMatrix& q = quotients.back();
    IntVector w = vectors.at(idx) * q;
    Integer g = 0;
    for (const Integer& x : w) g = gcd(g, x);
    if (g != 1) continue;
    IntegerMatrix row(0, w.size());
    row.append_row(w);
    IntegerMatrix qr = q * smith_normal_form(row).right;
    IntegerMatrix reduced(q.rows(), q.cols() - 1);
    for (std::size_t r = 0; r < q.rows(); ++r)
      for (std::size_t c = 1; c < q.cols(); ++c) reduced(r, c - 1) = qr(r, c);
    chosen.push_back(idx);
    quotients.push_back(std::move(reduced));
    next.push_back(pos);
  }
  return chosen;
}

// ---------------------------------------------------------------------------
// Sublattice

namespace {

IntegerMatrix leading_rows(const IntegerMatrix& m, std::size_t count) {
  IntegerMatrix out(0, m.cols());
  for (std::size_t r = 0; r < count; ++r) out.append_row(m.row(r));
  return out;
}

}  // namespace

Sublattice::Sublattice(std::size_t ambient_rank) : ambient_(ambient_rank), basis_(0, ambient_rank) {}

Sublattice::Sublattice(const IntegerMatrix& generators) : ambient_(generators.cols()) {
  HermiteDecomposition h = hermite_normal_form(generators);
  basis_ = leading_rows(h.form, h.rank);
}

Sublattice::Sublattice(const std::vector<IntVector>& generators, std::size_t ambient_rank)
    : Sublattice(IntegerMatrix::from_rows(generators, ambient_rank)) {}

Sublattice Sublattice::full(std::size_t n) { return Sublattice(IntegerMatrix::identity(n)); }

std::optional<IntVector> Sublattice::coordinates(const IntVector& v) const {
  if (v.size() != ambient_) throw MathError("coordinates: dimension mismatch");
  IntVector rest = v;
  IntVector x(rank(), Integer(0));
  std::size_t col = 0;
  for (std::size_t r = 0; r < rank(); ++r) {
    while (basis_(r, col) == 0) {
      if (rest[col] != 0) return std::nullopt;
      ++col;
    }
    if (!mpz_divisible_p(rest[col].get_mpz_t(), basis_(r, col).get_mpz_t())) return std::nullopt;
    x[r] = rest[col] / basis_(r, col);
    for (std::size_t c = col; c < ambient_; ++c) rest[c] -= x[r] * basis_(r, c);
    ++col;
  }
  for (const Integer& e : rest)
    if (e != 0) return std::nullopt;
  return x;
}

bool Sublattice::contains(const IntVector& v) const { return coordinates(v).has_value(); }

bool Sublattice::contains(const Sublattice& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t r = 0; r < other.rank(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Sublattice Sublattice::saturation() const {
  if (rank() == 0) return *this;
  SmithDecomposition s = smith_normal_form(basis_);
  return Sublattice(leading_rows(s.right_inverse, s.rank()));
}

bool Sublattice::is_split_summand() const { return quotient_torsion_order() == 1; }

Integer Sublattice::quotient_torsion_order() const {
  Integer order = 1;
  if (rank() == 0) return order;
  for (const Integer& d : smith_normal_form(basis_).diagonal)
    if (d != 0) order *= d;
  return order;
}

Sublattice Sublattice::sum(const Sublattice& other) const {
  if (other.ambient_ != ambient_) throw MathError("sum: ambient rank mismatch");
  IntegerMatrix g = basis_;
  for (std::size_t r = 0; r < other.rank(); ++r) g.append_row(other.basis_.row(r));
  return Sublattice(g);
}

Sublattice Sublattice::annihilator() const {
  if (rank() == 0) return full(ambient_);
  SmithDecomposition s = smith_normal_form(basis_);
  IntegerMatrix k(0, ambient_);
  for (std::size_t c = s.rank(); c < ambient_; ++c) k.append_row(s.right.col(c));
  return Sublattice(k);
}

bool operator==(const Sublattice& a, const Sublattice& b) {
  return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

bool operator<(const Sublattice& a, const Sublattice& b) {
  if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
  return a.basis_ < b.basis_;
}

}  // namespace toric
