#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "linedig/numeric.hpp"

namespace linedig {

/// Dense square-or-rectangular matrix of exact integers. Small by design:
/// quotient matrices have a handful of cells, adjacency matrices a few
/// hundred rows; all arithmetic is arbitrary precision.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;  // throws DimensionMismatch
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  /// Sum of all entries.
  Int total() const;

  /// Row vector times matrix; v.size() must equal rows().
  std::vector<Int> row_apply(const std::vector<Int>& v) const;

  /// Per-row sums, i.e. M applied to the all-ones column vector.
  std::vector<Int> row_sums() const;

  const std::vector<Int>& flat() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Exact B^k by binary powering; B must be square, k >= 0.
IntMatrix mat_pow(const IntMatrix& base, unsigned long k);

/// s . B^k . j^T with j the all-ones column vector. Throws DimensionMismatch
/// when s does not match B.
Int sandwich(const std::vector<Int>& s, const IntMatrix& b, unsigned long k);

}  // namespace linedig
