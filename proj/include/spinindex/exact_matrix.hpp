#pragma once
// Dense matrices over Q(tau)(i) with exact Gaussian elimination.

#include <cstddef>
#include <string>
#include <vector>

#include "spinindex/golden.hpp"

namespace spinindex {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<std::vector<GoldenComplex>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  GoldenComplex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const GoldenComplex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  GoldenComplex trace() const;
  ExactMatrix transpose() const;
  /// Entrywise tau -> 1 - tau.
  ExactMatrix galois() const;
  bool is_zero() const;

  /// Basis of {x : A x = 0}, one column vector per element.
  std::vector<std::vector<GoldenComplex>> nullspace() const;
  std::size_t rank() const;
  /// Throws DivisionByZero for singular input.
  ExactMatrix inverse() const;

  ExactMatrix operator-() const;
  ExactMatrix& operator+=(const ExactMatrix& y);
  ExactMatrix& operator-=(const ExactMatrix& y);

  friend ExactMatrix operator+(ExactMatrix x, const ExactMatrix& y) { return x += y; }
  friend ExactMatrix operator-(ExactMatrix x, const ExactMatrix& y) { return x -= y; }
  friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);
  friend ExactMatrix operator*(const GoldenComplex& s, const ExactMatrix& x);
  friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }
  friend bool operator!=(const ExactMatrix& x, const ExactMatrix& y) { return !(x == y); }

  std::string to_string() const;

 private:
  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> reduce();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GoldenComplex> data_;
};

ExactMatrix kronecker(const ExactMatrix& x, const ExactMatrix& y);

}  // namespace spinindex
