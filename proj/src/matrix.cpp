#include "linedig/matrix.hpp"

#include "linedig/errors.hpp"

namespace linedig {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged initializer for IntMatrix");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw DimensionMismatch("matrix product: " + std::to_string(cols_) + " columns vs " +
                            std::to_string(rhs.rows_) + " rows");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) += a * rhs.at(k, j);
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum shape");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix difference shape");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Int IntMatrix::total() const {
  Int sum = 0;
  for (const Int& v : data_) sum += v;
  return sum;
}

std::vector<Int> IntMatrix::row_apply(const std::vector<Int>& v) const {
  if (v.size() != rows_) throw DimensionMismatch("row vector length vs matrix rows");
  std::vector<Int> out(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < cols_; ++j) out[j] += v[i] * at(i, j);
  }
  return out;
}

std::vector<Int> IntMatrix::row_sums() const {
  std::vector<Int> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int sum = 0;
    for (std::size_t j = 0; j < cols_; ++j) sum += at(i, j);
    out[i] = sum;
  }
  return out;
}

IntMatrix mat_pow(const IntMatrix& base, unsigned long k) {
  if (base.rows() != base.cols()) throw DimensionMismatch("mat_pow needs a square matrix");
  IntMatrix result = IntMatrix::identity(base.rows());
  IntMatrix sq = base;
  while (k > 0) {
    if (k & 1UL) result = result * sq;
    k >>= 1UL;
    if (k > 0) sq = sq * sq;
  }
  return result;
}

Int sandwich(const std::vector<Int>& s, const IntMatrix& b, unsigned long k) {
  if (b.rows() != b.cols() || s.size() != b.rows())
    throw DimensionMismatch("sandwich: size vector does not match matrix");
  std::vector<Int> v = s;
  for (unsigned long step = 0; step < k; ++step) v = b.row_apply(v);
  Int sum = 0;
  for (const Int& x : v) sum += x;
  return sum;
}

}  // namespace linedig
