#pragma once

#include "kodim/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace kodim {

/// Dense row-major integer matrix. Arithmetic is overflow-checked.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  /// Row list; all rows must have equal length.
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<std::vector<std::int64_t>> to_rows() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Throws PreconditionError on shape mismatch or int64 overflow.
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

IntMatrix power(const IntMatrix& m, unsigned k);

/// Exact determinant (Bareiss elimination).
BigInt determinant(const IntMatrix& m);

/// Inverse of a matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Coefficients c_0..c_n of det(t I - m), c_n = 1.
std::vector<BigInt> characteristic_polynomial(const IntMatrix& m);

std::string to_string(const IntMatrix& m);

}  // namespace kodim
