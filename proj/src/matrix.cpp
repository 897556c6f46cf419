#include "lie/matrix.hpp"

#include <utility>

namespace lie {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec vec_scaled(const Vec& a, const Rat& t) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * t;
  return out;
}

bool vec_is_zero(const Vec& a) {
  for (const Rat& x : a)
    if (!rat_is_zero(x)) return false;
  return true;
}

Rat vec_dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch");
  Rat out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("dimension mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("dimension mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("dimension mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("dimension mismatch");
  Matrix m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& f = at(i, k);
      if (rat_is_zero(f)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, j) += f * o.at(k, j);
    }
  return m;
}

Matrix Matrix::scaled(const Rat& t) const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * t;
  return m;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw Error("dimension mismatch");
  Vec out(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (rat_is_zero(x[j])) continue;
    for (std::size_t i = 0; i < rows_; ++i) out[i] += at(i, j) * x[j];
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Rat Matrix::trace() const {
  if (rows_ != cols_) throw Error("dimension mismatch");
  Rat t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const Rat& x : a_)
    if (!rat_is_zero(x)) return false;
  return true;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

std::vector<Vec> Matrix::rows_list() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

Matrix Matrix::rref(Exec exec) const {
  Matrix r = *this;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
    std::size_t p = lead;
    while (p < rows_ && rat_is_zero(r.at(p, c))) ++p;
    if (p == rows_) continue;
    if (p != lead)
      for (std::size_t j = c; j < cols_; ++j)
        std::swap(r.at(p, j), r.at(lead, j));
    if (r.at(lead, c) != 1) {
      const Rat inv = Rat(1) / r.at(lead, c);
      for (std::size_t j = c; j < cols_; ++j) r.at(lead, j) *= inv;
    }
    // Clear the pivot column in every other row; rows are independent.
    parallel_for(exec, rows_, [&](std::size_t i) {
      if (i == lead) return;
      const Rat f = r.at(i, c);
      if (rat_is_zero(f)) return;
      for (std::size_t j = c; j < cols_; ++j) r.at(i, j) -= f * r.at(lead, j);
    });
    ++lead;
  }
  return r;
}

std::size_t Matrix::rank(Exec exec) const {
  Matrix r = rref(exec);
  std::size_t rk = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!rat_is_zero(r.at(i, j))) {
        nonzero = true;
        break;
      }
    if (nonzero) ++rk;
  }
  return rk;
}

Matrix Matrix::kernel(Exec exec) const {
  Matrix r = rref(exec);
  std::vector<long> pivot_of_col(cols_, -1);
  std::size_t rk = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    std::size_t j = 0;
    while (j < cols_ && rat_is_zero(r.at(i, j))) ++j;
    if (j == cols_) break;
    pivot_of_col[j] = static_cast<long>(i);
    ++rk;
  }
  Matrix out(cols_ - rk, cols_);
  std::size_t row_idx = 0;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (pivot_of_col[f] >= 0) continue;
    out.at(row_idx, f) = 1;
    for (std::size_t c = 0; c < cols_; ++c)
      if (pivot_of_col[c] >= 0)
        out.at(row_idx, c) = -r.at(static_cast<std::size_t>(pivot_of_col[c]), f);
    ++row_idx;
  }
  return out;
}

std::optional<Matrix> Matrix::inverse(Exec exec) const {
  if (rows_ != cols_) throw Error("dimension mismatch");
  Matrix aug(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  Matrix r = aug.rref(exec);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((i == j && r.at(i, j) != 1) || (i != j && !rat_is_zero(r.at(i, j))))
        return std::nullopt;
  Matrix inv(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = r.at(i, cols_ + j);
  return inv;
}

std::optional<Vec> solve_rows(const Matrix& rows, const Vec& v) {
  // Coefficients x with x^T * rows = v, via the transposed augmented system.
  if (v.size() != rows.cols()) throw Error("dimension mismatch");
  const std::size_t n = rows.cols(), k = rows.rows();
  Matrix aug(n, k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug.at(i, j) = rows.at(j, i);
    aug.at(i, k) = v[i];
  }
  Matrix r = aug.rref();
  Vec x(k);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = 0;
    while (j <= k && rat_is_zero(r.at(i, j))) ++j;
    if (j == k) return std::nullopt;  // inconsistent row 0 ... 0 | 1
    if (j > k) continue;
    x[j] = r.at(i, k);  // free coefficients stay 0
  }
  return x;
}

}  // namespace lie
