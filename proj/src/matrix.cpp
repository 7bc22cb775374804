#include "bratteli/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace bratteli {

Matrix::Matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
    for (long long x : r) data_.emplace_back(x);
  }
}

Matrix Matrix::zeros(std::size_t rows, std::size_t cols) {
  Matrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_.assign(rows * cols, BigInt(0));
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column(const Vector& v) {
  Matrix m = zeros(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

BigInt Matrix::row_sum(std::size_t i) const {
  BigInt s = 0;
  for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j);
  return s;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
  Vector out(rows_, BigInt(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t = zeros(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::strictly_positive() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x > 0; });
}

bool Matrix::nonnegative() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x >= 0; });
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: dimension mismatch");
  Matrix c = Matrix::zeros(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix power(const Matrix& m, std::size_t k) {
  if (!m.square()) throw std::invalid_argument("power: non-square matrix");
  Matrix result = Matrix::identity(m.rows());
  Matrix base = m;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x.is_zero(); });
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector difference: dimension mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector sum: dimension mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector operator*(const BigInt& s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ']';
  return os.str();
}

std::size_t rank(const Matrix& m) {
  // Bareiss elimination keeps every intermediate entry integral.
  Matrix a = m;
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, c).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(r, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j)
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

std::optional<Vector> solve_integer(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  // Column-style Hermite reduction: h = a * u with u unimodular and h lower
  // echelon. Then h * y = b is solved by forward substitution and x = u * y.
  Matrix h = a;
  Matrix u = Matrix::identity(n);
  auto swap_cols = [&](std::size_t p, std::size_t q) {
    for (std::size_t i = 0; i < m; ++i) std::swap(h(i, p), h(i, q));
    for (std::size_t i = 0; i < n; ++i) std::swap(u(i, p), u(i, q));
  };
  auto axpy_col = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t i = 0; i < m; ++i) h(i, dst) -= q * h(i, src);
    for (std::size_t i = 0; i < n; ++i) u(i, dst) -= q * u(i, src);
  };

  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t col = 0;
  for (std::size_t row = 0; row < m && col < n; ++row) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t j = col; j < n; ++j)
        if (!h(row, j).is_zero() && (best == n || abs(h(row, j)) < abs(h(row, best)))) best = j;
      if (best == n) break;
      if (best != col) swap_cols(best, col);
      bool done = true;
      for (std::size_t j = col + 1; j < n; ++j) {
        if (h(row, j).is_zero()) continue;
        axpy_col(j, col, h(row, j) / h(row, col));
        if (!h(row, j).is_zero()) done = false;
      }
      if (done) break;
    }
    if (!h(row, col).is_zero()) {
      pivots.emplace_back(row, col);
      ++col;
    }
  }

  Vector y(n, BigInt(0));
  std::size_t next_pivot = 0;
  for (std::size_t row = 0; row < m; ++row) {
    BigInt residual = b[row];
    for (std::size_t j = 0; j < col; ++j) residual -= h(row, j) * y[j];
    if (next_pivot < pivots.size() && pivots[next_pivot].first == row) {
      const std::size_t pc = pivots[next_pivot].second;
      // Columns >= pc are zero in this row apart from the pivot, and y[pc] is
      // still 0, so residual already excludes the pivot term.
      if (residual % h(row, pc) != 0) return std::nullopt;
      y[pc] = residual / h(row, pc);
      ++next_pivot;
    } else if (!residual.is_zero()) {
      return std::nullopt;
    }
  }
  return u.apply(y);
}

}  // namespace bratteli
