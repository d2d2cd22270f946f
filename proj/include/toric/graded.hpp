#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace toric {

/// Polynomial in q with nonnegative integer coefficients; in cohomology q has
/// degree 2, so coefficient k is the rank of H^{2k}.
class GradedCount {
 public:
  GradedCount() = default;
  explicit GradedCount(std::vector<std::int64_t> coefficients);

  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  std::int64_t operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
  std::size_t size() const { return coeffs_.size(); }
  std::int64_t total() const;
  bool is_palindromic() const;

  /// Multiply by q^k.
  GradedCount shifted(std::size_t k) const;
  GradedCount& operator+=(const GradedCount& other);
  friend GradedCount operator+(GradedCount a, const GradedCount& b) { return a += b; }
  friend bool operator==(const GradedCount& a, const GradedCount& b);
  friend bool operator!=(const GradedCount& a, const GradedCount& b) { return !(a == b); }

  /// "(1, 69, 69, 1)"
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

}  // namespace toric
