#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lie/parallel.hpp"
#include "lie/rational.hpp"

namespace lie {

using Vec = std::vector<Rat>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const Rat& t);
bool vec_is_zero(const Vec& a);
Rat vec_dot(const Vec& a, const Vec& b);

/// Dense matrix over Q, row major. Elimination is plain Gauss-Jordan with
/// exact pivots; the per-pivot row updates are the data-parallel kernel.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const = default;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Rat& t) const;
  Vec apply(const Vec& x) const;

  Matrix transpose() const;
  Rat trace() const;
  bool is_zero() const;

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  std::vector<Vec> rows_list() const;

  /// Canonical reduced row echelon form (pivots 1, pivot columns cleared).
  Matrix rref(Exec exec = Exec::serial) const;
  std::size_t rank(Exec exec = Exec::serial) const;
  /// Basis of the right null space, one vector per row (possibly 0 rows).
  Matrix kernel(Exec exec = Exec::serial) const;
  std::optional<Matrix> inverse(Exec exec = Exec::serial) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

/// Coefficients expressing v as a combination of the given rows, if any.
std::optional<Vec> solve_rows(const Matrix& rows, const Vec& v);

}  // namespace lie
