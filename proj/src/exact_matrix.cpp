#include "spinindex/exact_matrix.hpp"

#include <utility>

#include "spinindex/error.hpp"

namespace spinindex {

namespace {

std::size_t height(const BigRational& x) {
  return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}

std::size_t height(const GoldenComplex& z) {
  return height(z.re().a()) + height(z.re().b()) + height(z.im().a()) + height(z.im().b());
}

}  // namespace

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = 1;
  return r;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<GoldenComplex>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix r(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InconsistentInput("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) r(i, j) = rows[i][j];
  }
  return r;
}

GoldenComplex ExactMatrix::trace() const {
  if (!is_square()) throw InconsistentInput("trace of a non-square matrix");
  GoldenComplex t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  }
  return r;
}

ExactMatrix ExactMatrix::galois() const {
  ExactMatrix r = *this;
  for (auto& e : r.data_) e = e.galois();
  return r;
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : data_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::vector<std::size_t> ExactMatrix::reduce() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    // Prefer short, sparse pivot rows to limit coefficient growth.
    std::size_t p = rows_;
    std::size_t best = 0;
    for (std::size_t r = row; r < rows_; ++r) {
      if ((*this)(r, col).is_zero()) continue;
      std::size_t cost = height((*this)(r, col));
      for (std::size_t j = col; j < cols_; ++j) cost += (*this)(r, j).is_zero() ? 0 : 1;
      if (p == rows_ || cost < best) {
        p = r;
        best = cost;
      }
    }
    if (p == rows_) continue;
    if (p != row) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(row, j));
    }
    const GoldenComplex inv = (*this)(row, col).inverse();
    for (std::size_t j = col; j < cols_; ++j) {
      if (!(*this)(row, j).is_zero()) (*this)(row, j) *= inv;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || (*this)(r, col).is_zero()) continue;
      const GoldenComplex f = (*this)(r, col);
      for (std::size_t j = col; j < cols_; ++j) {
        if (!(*this)(row, j).is_zero()) (*this)(r, j) -= f * (*this)(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<GoldenComplex>> ExactMatrix::nullspace() const {
  ExactMatrix r = *this;
  const auto pivots = r.reduce();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<GoldenComplex>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<GoldenComplex> v(cols_);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t ExactMatrix::rank() const {
  ExactMatrix r = *this;
  return r.reduce().size();
}

ExactMatrix ExactMatrix::inverse() const {
  if (!is_square()) throw InconsistentInput("inverse of a non-square matrix");
  const std::size_t n = rows_;
  ExactMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = aug.reduce();
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw DivisionByZero("singular matrix");
  ExactMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  }
  return r;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix r = *this;
  for (auto& e : r.data_) e = -e;
  return r;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& y) {
  if (rows_ != y.rows_ || cols_ != y.cols_) throw InconsistentInput("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += y.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& y) {
  if (rows_ != y.rows_ || cols_ != y.cols_) throw InconsistentInput("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= y.data_[k];
  return *this;
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.cols_ != y.rows_) throw InconsistentInput("matrix shape mismatch");
  ExactMatrix r(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i) {
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const GoldenComplex& a = x(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) {
        if (!y(k, j).is_zero()) r(i, j) += a * y(k, j);
      }
    }
  }
  return r;
}

ExactMatrix operator*(const GoldenComplex& s, const ExactMatrix& x) {
  ExactMatrix r = x;
  for (auto& e : r.data_) e = s * e;
  return r;
}

std::string ExactMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).to_compact();
    }
    out += "]";
  }
  return out + "]";
}

ExactMatrix kronecker(const ExactMatrix& x, const ExactMatrix& y) {
  ExactMatrix r(x.rows() * y.rows(), x.cols() * y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (x(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < y.rows(); ++k) {
        for (std::size_t l = 0; l < y.cols(); ++l) r(i * y.rows() + k, j * y.cols() + l) = x(i, j) * y(k, l);
      }
    }
  }
  return r;
}

}  // namespace spinindex
