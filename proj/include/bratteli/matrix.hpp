#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace bratteli {

using BigInt = boost::multiprecision::cpp_int;
using Vector = std::vector<BigInt>;

/// Dense row-major matrix over arbitrary-precision integers.
///
/// Incidence matrices follow the t_n x t_{n-1} convention: they act on column
/// vectors indexed by the previous level.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::initializer_list<std::initializer_list<long long>> rows);

  static Matrix zeros(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix column(const Vector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  BigInt row_sum(std::size_t i) const;
  Vector apply(const Vector& v) const;
  Matrix transpose() const;

  bool strictly_positive() const;
  bool nonnegative() const;

  std::string to_string() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

Matrix power(const Matrix& m, std::size_t k);

bool is_zero(const Vector& v);
Vector operator-(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator*(const BigInt& s, const Vector& v);
std::string to_string(const Vector& v);

/// Rank over the rationals (fraction-free elimination).
std::size_t rank(const Matrix& m);

/// Some integer solution of a * x = b, or nullopt when none exists.
std::optional<Vector> solve_integer(const Matrix& a, const Vector& b);

}  // namespace bratteli
