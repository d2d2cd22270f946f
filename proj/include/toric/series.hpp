#pragma once

// Truncated exponential generating functions in t whose coefficients are
// polynomials in q with exact rational coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace toric {

/// Polynomial in q; coefficient k multiplies q^k. Trailing zeros trimmed.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long constant);
  explicit QPoly(std::vector<mpq_class> coefficients);
  static QPoly q();

  const std::vector<mpq_class>& coefficients() const { return c_; }
  mpq_class operator[](std::size_t k) const { return k < c_.size() ? c_[k] : mpq_class(0); }
  bool is_zero() const { return c_.empty(); }
  bool is_integral() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator-(const QPoly& a) { return QPoly(0) - a; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const mpq_class& s);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  /// "1 + 5q + q^2"
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// a_0 + a_1 t + a_2 t^2/2! + ... + a_N t^N/N!, storing a_n.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order = 0);
  TruncatedSeries(std::size_t order, std::vector<QPoly> egf_coefficients);
  /// The series c*t.
  static TruncatedSeries t(std::size_t order, const QPoly& c = QPoly(1));

  std::size_t order() const { return order_; }
  /// a_n (EGF normalization); zero beyond the stored terms.
  const QPoly& coefficient(std::size_t n) const;
  void set_coefficient(std::size_t n, QPoly value);
  TruncatedSeries truncated(std::size_t order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  /// Binomial convolution; the result has the smaller order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const QPoly& s, const TruncatedSeries& a);
  /// Equal through the smaller of the two orders.
  friend bool agree(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  std::size_t order_;
  std::vector<QPoly> c_;
};

/// exp(f); throws MathError unless f has zero constant term.
TruncatedSeries exp_series(const TruncatedSeries& f);
/// d/dt; the order drops by one.
TruncatedSeries derivative_t(const TruncatedSeries& f);
/// sum_k outer_k g^k / k!; throws MathError unless g has zero constant term.
TruncatedSeries compose_in_t(const TruncatedSeries& outer, const TruncatedSeries& inner);

}  // namespace toric
