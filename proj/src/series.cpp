#include "toric/series.hpp"

#include <sstream>

#include "toric/error.hpp"

namespace toric {

namespace {

mpq_class binom(std::size_t n, std::size_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return mpq_class(r);
}

mpq_class factorial(std::size_t n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return mpq_class(r);
}

}  // namespace

// ---------------------------------------------------------------------------
// QPoly

QPoly::QPoly(long constant) : c_{mpq_class(constant)} { trim(); }

QPoly::QPoly(std::vector<mpq_class> coefficients) : c_(std::move(coefficients)) {
  for (mpq_class& x : c_) x.canonicalize();
  trim();
}

QPoly QPoly::q() { return QPoly({0, 1}); }

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool QPoly::is_integral() const {
  for (const mpq_class& x : c_)
    if (x.get_den() != 1) return false;
  return true;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(r));
}

QPoly operator*(const QPoly& a, const mpq_class& s) {
  std::vector<mpq_class> r = a.c_;
  for (mpq_class& x : r) x *= s;
  return QPoly(std::move(r));
}

std::string QPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    mpq_class a = abs(c_[k]);
    os << (first ? (c_[k] < 0 ? "-" : "") : (c_[k] < 0 ? " - " : " + "));
    first = false;
    if (k == 0 || a != 1) os << a.get_str();
    if (k >= 1) os << 'q';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// TruncatedSeries

TruncatedSeries::TruncatedSeries(std::size_t order) : order_(order), c_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<QPoly> egf_coefficients)
    : order_(order), c_(std::move(egf_coefficients)) {
  c_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::t(std::size_t order, const QPoly& c) {
  TruncatedSeries s(order);
  if (order >= 1) s.c_[1] = c;
  return s;
}

const QPoly& TruncatedSeries::coefficient(std::size_t n) const {
  static const QPoly zero;
  return n <= order_ ? c_[n] : zero;
}

void TruncatedSeries::set_coefficient(std::size_t n, QPoly value) {
  if (n > order_) throw MathError("series coefficient beyond the truncation order");
  c_[n] = std::move(value);
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > order_) throw MathError("cannot extend a truncated series");
  return TruncatedSeries(order, std::vector<QPoly>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (std::size_t n = 0; n <= order_; ++n) c_[n] += o.c_[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (std::size_t n = 0; n <= order_; ++n) c_[n] -= o.c_[n];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order_, b.order_);
  TruncatedSeries r(order);
  for (std::size_t n = 0; n <= order; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      if (!a.c_[k].is_zero() && !b.c_[n - k].is_zero()) r.c_[n] += (a.c_[k] * b.c_[n - k]) * binom(n, k);
  return r;
}

TruncatedSeries operator*(const QPoly& s, const TruncatedSeries& a) {
  TruncatedSeries r(a.order_);
  for (std::size_t n = 0; n <= a.order_; ++n) r.c_[n] = s * a.c_[n];
  return r;
}

bool agree(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order_, b.order_);
  for (std::size_t n = 0; n <= order; ++n)
    if (a.c_[n] != b.c_[n]) return false;
  return true;
}

TruncatedSeries exp_series(const TruncatedSeries& f) {
  if (!f.coefficient(0).is_zero()) throw MathError("exp_series: constant term must vanish");
  const std::size_t order = f.order();
  std::vector<QPoly> g(order + 1);
  g[0] = QPoly(1);
  // g' = f' g, i.e. g_{n+1} = sum_k C(n,k) f_{k+1} g_{n-k}.
  for (std::size_t n = 0; n + 1 <= order; ++n) {
    QPoly s;
    for (std::size_t k = 0; k <= n; ++k) s += (f.coefficient(k + 1) * g[n - k]) * binom(n, k);
    g[n + 1] = s;
  }
  return TruncatedSeries(order, std::move(g));
}

TruncatedSeries derivative_t(const TruncatedSeries& f) {
  if (f.order() == 0) throw MathError("derivative_t: series of order 0");
  std::vector<QPoly> c;
  for (std::size_t n = 1; n <= f.order(); ++n) c.push_back(f.coefficient(n));
  return TruncatedSeries(f.order() - 1, std::move(c));
}

TruncatedSeries compose_in_t(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (!inner.coefficient(0).is_zero()) throw MathError("compose_in_t: inner series must have zero constant term");
  const std::size_t order = inner.order();
  TruncatedSeries result(order);
  TruncatedSeries power(order);
  power.set_coefficient(0, QPoly(1));
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0) power = power * inner;
    const QPoly& a = outer.coefficient(k);
    if (!a.is_zero()) result += (a * mpq_class(1 / factorial(k))) * power;
  }
  return result;
}

}  // namespace toric
