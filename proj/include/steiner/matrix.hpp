#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "steiner/error.hpp"
#include "steiner/scalar.hpp"

namespace steiner {

// Dense row-major matrix over one Field.  All elimination routines pivot on
// the first nonzero entry in row-major scan order, never on magnitude, so
// results are bit-for-bit reproducible.
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}

  ExactMatrix(std::size_t rows, std::size_t cols, Field f = Field::rationals())
      : rows_(rows), cols_(cols), field_(f), e_(rows * cols, f.zero()) {}

  static ExactMatrix identity(std::size_t n, Field f = Field::rationals()) {
    ExactMatrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  bool operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

  ExactMatrix transpose() const {
    ExactMatrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  ExactMatrix operator*(const ExactMatrix& o) const {
    require(cols_ == o.rows_, "matrix product shape mismatch");
    ExactMatrix p(rows_, o.cols_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (at(r, k).is_zero()) continue;
        for (std::size_t c = 0; c < o.cols_; ++c)
          p.at(r, c) += at(r, k) * o.at(k, c);
      }
    return p;
  }

  ExactMatrix operator+(const ExactMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
    ExactMatrix s = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] += o.e_[i];
    return s;
  }

  ExactMatrix operator-(const ExactMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shape mismatch");
    ExactMatrix s = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] -= o.e_[i];
    return s;
  }

  ExactMatrix scaled(const Scalar& c) const {
    ExactMatrix s = *this;
    for (auto& x : s.e_) x *= c;
    return s;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
    require(v.size() == cols_, "matrix-vector shape mismatch");
    std::vector<Scalar> out(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
    return out;
  }

  // In-place reduced row echelon form; returns the pivot column of each
  // pivot row, in order.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = row;
      while (sel < rows_ && at(sel, col).is_zero()) ++sel;
      if (sel == rows_) continue;
      if (sel != row)
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(sel, c), at(row, c));
      Scalar inv = at(row, col).inverse();
      for (std::size_t c = col; c < cols_; ++c) at(row, c) *= inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || at(r, col).is_zero()) continue;
        Scalar f = at(r, col);
        for (std::size_t c = col; c < cols_; ++c) at(r, c) -= f * at(row, c);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

 private:
  std::size_t rows_, cols_;
  Field field_;
  std::vector<Scalar> e_;
};

struct RankKernel {
  std::size_t rank = 0;
  // Kernel basis vectors, one per free column in increasing column order.
  std::vector<std::vector<Scalar>> kernel;
};

// Rank and right kernel from the reduced echelon form.  The kernel vector for
// free column f has a 1 in slot f and the negated pivot-row entries above it.
inline RankKernel rank_and_right_kernel(const ExactMatrix& a) {
  ExactMatrix m = a;
  std::vector<std::size_t> pivots = m.rref();
  RankKernel out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(a.cols(), a.field().zero());
    v[f] = a.field().one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, f);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

inline std::size_t rank_of(const ExactMatrix& a) {
  ExactMatrix m = a;
  return m.rref().size();
}

// Exact determinant.  Over the rationals this is fraction-free Bareiss
// elimination (every division is exact); over F_p plain elimination with
// pivot products.  Row swaps use the first nonzero candidate.
inline Scalar determinant_exact(const ExactMatrix& a) {
  require(a.rows() == a.cols(), "determinant of a non-square matrix");
  std::size_t n = a.rows();
  const Field& f = a.field();
  if (n == 0) return f.one();
  ExactMatrix m = a;
  bool negate = false;

  if (f.is_rational()) {
    Scalar prev = f.one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m.at(k, k).is_zero()) {
        std::size_t sel = k + 1;
        while (sel < n && m.at(sel, k).is_zero()) ++sel;
        if (sel == n) return f.zero();
        for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(sel, c));
        negate = !negate;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      prev = m.at(k, k);
    }
    Scalar det = m.at(n - 1, n - 1);
    return negate ? -det : det;
  }

  Scalar det = f.one();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t sel = k;
    while (sel < n && m.at(sel, k).is_zero()) ++sel;
    if (sel == n) return f.zero();
    if (sel != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(sel, c));
      negate = !negate;
    }
    det *= m.at(k, k);
    Scalar inv = m.at(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m.at(i, k).is_zero()) continue;
      Scalar factor = m.at(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) m.at(i, j) -= factor * m.at(k, j);
    }
  }
  return negate ? -det : det;
}

// Particular solution of A x = b with free variables set to zero, or nullopt
// when the system is inconsistent.
inline std::optional<std::vector<Scalar>> solve_linear(const ExactMatrix& a,
                                                       const std::vector<Scalar>& b) {
  require(b.size() == a.rows(), "solve shape mismatch");
  ExactMatrix aug(a.rows(), a.cols() + 1, a.field());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  std::vector<std::size_t> pivots = aug.rref();
  for (std::size_t c : pivots)
    if (c == a.cols()) return std::nullopt;
  std::vector<Scalar> x(a.cols(), a.field().zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
  return x;
}

inline ExactMatrix inverse(const ExactMatrix& a) {
  require(a.rows() == a.cols(), "inverse of a non-square matrix");
  std::size_t n = a.rows();
  ExactMatrix aug(n, 2 * n, a.field());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, n + r) = a.field().one();
  }
  std::vector<std::size_t> pivots = aug.rref();
  if (pivots.size() != n || pivots.back() != n - 1)
    throw SingularMatrix("matrix is not invertible");
  ExactMatrix inv(n, n, a.field());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

// Basis of span(a) \cap span(b), from the kernel of [A | -B]: a kernel vector
// (u; v) has A u = B v, and A u is the intersection element.  The collected
// elements are reduced to echelon form so the output basis is canonical.
inline std::vector<std::vector<Scalar>> subspace_intersect(
    const std::vector<std::vector<Scalar>>& a, const std::vector<std::vector<Scalar>>& b) {
  if (a.empty() || b.empty()) return {};
  std::size_t dim = a[0].size();
  for (const auto& v : a) require(v.size() == dim, "ambient dimension mismatch");
  for (const auto& v : b) require(v.size() == dim, "ambient dimension mismatch");
  Field f = a[0][0].field();
  ExactMatrix cat(dim, a.size() + b.size(), f);
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t r = 0; r < dim; ++r) cat.at(r, j) = a[j][r];
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t r = 0; r < dim; ++r) cat.at(r, a.size() + j) = -b[j][r];
  RankKernel rk = rank_and_right_kernel(cat);
  if (rk.kernel.empty()) return {};
  ExactMatrix span(rk.kernel.size(), dim, f);
  for (std::size_t i = 0; i < rk.kernel.size(); ++i)
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t j = 0; j < a.size(); ++j)
        span.at(i, r) += a[j][r] * rk.kernel[i][j];
  std::vector<std::size_t> pivots = span.rref();
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    std::vector<Scalar> v(dim, f.zero());
    for (std::size_t r = 0; r < dim; ++r) v[r] = span.at(i, r);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Completes an independent family to a basis by appending standard basis
// vectors greedily in increasing index order.  Columns of the result are the
// input vectors followed by the chosen unit vectors.
inline ExactMatrix extend_to_basis(const std::vector<std::vector<Scalar>>& vecs,
                                   std::size_t dim, Field f = Field::rationals()) {
  for (const auto& v : vecs) require(v.size() == dim, "ambient dimension mismatch");
  ExactMatrix m(dim, vecs.size(), f);
  for (std::size_t j = 0; j < vecs.size(); ++j)
    for (std::size_t r = 0; r < dim; ++r) m.at(r, j) = vecs[j][r];
  if (rank_of(m) != vecs.size()) throw DomainError("input vectors are dependent");
  std::vector<std::vector<Scalar>> cols = vecs;
  for (std::size_t i = 0; i < dim && cols.size() < dim; ++i) {
    std::vector<Scalar> e(dim, f.zero());
    e[i] = f.one();
    ExactMatrix trial(dim, cols.size() + 1, f);
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t r = 0; r < dim; ++r) trial.at(r, j) = cols[j][r];
    for (std::size_t r = 0; r < dim; ++r) trial.at(r, cols.size()) = e[r];
    if (rank_of(trial) == cols.size() + 1) cols.push_back(std::move(e));
  }
  require(cols.size() == dim, "basis completion failed");
  ExactMatrix out(dim, dim, f);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t r = 0; r < dim; ++r) out.at(r, j) = cols[j][r];
  return out;
}

// Berkowitz division-free characteristic polynomial of det(t I - A),
// returned with ascending coefficients: c[0] + c[1] t + ... + c[n] t^n,
// c[n] = 1.  Works over any Field.
inline std::vector<Scalar> charpoly(const ExactMatrix& a) {
  require(a.rows() == a.cols(), "characteristic polynomial of a non-square matrix");
  std::size_t n = a.rows();
  const Field& f = a.field();
  if (n == 0) return {f.one()};
  // V holds the coefficients for the leading r x r block, descending degree.
  std::vector<Scalar> V = {f.one(), -a.at(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<Scalar> T(r + 2, f.zero());
    T[0] = f.one();
    T[1] = -a.at(r, r);
    std::vector<Scalar> w(r, f.zero());
    for (std::size_t i = 0; i < r; ++i) w[i] = a.at(i, r);
    for (std::size_t k = 2; k <= r + 1; ++k) {
      Scalar dot = f.zero();
      for (std::size_t i = 0; i < r; ++i) dot += a.at(r, i) * w[i];
      T[k] = -dot;
      if (k == r + 1) break;
      std::vector<Scalar> nw(r, f.zero());
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          if (!a.at(i, j).is_zero()) nw[i] += a.at(i, j) * w[j];
      w = std::move(nw);
    }
    std::vector<Scalar> NV(V.size() + 1, f.zero());
    for (std::size_t i = 0; i < NV.size(); ++i)
      for (std::size_t j = 0; j < T.size() && j <= i; ++j)
        if (i - j < V.size()) NV[i] += T[j] * V[i - j];
    V = std::move(NV);
  }
  std::vector<Scalar> asc(n + 1, f.zero());
  for (std::size_t i = 0; i < V.size(); ++i) asc[n - i] = V[i];
  return asc;
}

}  // namespace steiner
