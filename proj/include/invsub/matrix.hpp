#pragma once

#include <string>
#include <vector>

#include "invsub/numeric.hpp"

namespace invsub {

/// Square n x n matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  /// Zero matrix of size n.
  explicit RationalMatrix(std::size_t n);
  /// Throws std::invalid_argument unless `rows` is square and nonempty.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  /// Row-major entries, n*n of them.
  const std::vector<Rational>& entries() const { return data_; }

  Rational trace() const;
  bool is_zero() const;

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  RationalMatrix& operator*=(const Rational& c);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& c) { return a *= c; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

/// Gauss-Jordan inverse; throws std::domain_error when singular.
RationalMatrix inverse(const RationalMatrix& a);

Rational determinant(const RationalMatrix& a);

std::string to_string(const RationalMatrix& a);

}  // namespace invsub
