#include "toric/graded.hpp"

#include <numeric>
#include <sstream>
#include <utility>

namespace toric {

GradedCount::GradedCount(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void GradedCount::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t GradedCount::total() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), std::int64_t{0});
}

bool GradedCount::is_palindromic() const {
  std::size_t lo = 0;
  while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
  for (std::size_t i = lo, j = coeffs_.size(); i < j; ++i, --j)
    if (coeffs_[i] != coeffs_[j - 1]) return false;
  return true;
}

GradedCount GradedCount::shifted(std::size_t k) const {
  if (coeffs_.empty()) return {};
  std::vector<std::int64_t> c(k, 0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return GradedCount(std::move(c));
}

GradedCount& GradedCount::operator+=(const GradedCount& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

bool operator==(const GradedCount& a, const GradedCount& b) { return a.coeffs_ == b.coeffs_; }

std::string GradedCount::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? ", " : "") << coeffs_[i];
  os << ')';
  return os.str();
}

}  // namespace toric
