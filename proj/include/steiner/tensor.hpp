#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "steiner/error.hpp"
#include "steiner/matrix.hpp"
#include "steiner/monomial.hpp"
#include "steiner/poly.hpp"
#include "steiner/scalar.hpp"

namespace steiner {

// Format of a (p+1)-way array with side lengths k_j + 1 and the boundary
// relation k_0 = k_1 + ... + k_p.  Index 0 is the large factor.
struct BoundaryFormat {
  std::vector<std::size_t> dims;

  std::size_t p() const { return dims.size() - 1; }
  std::size_t k(std::size_t j) const { return dims[j] - 1; }

  std::size_t cell_count() const {
    std::size_t n = 1;
    for (std::size_t d : dims) n *= d;
    return n;
  }

  bool operator==(const BoundaryFormat& o) const { return dims == o.dims; }
  bool operator!=(const BoundaryFormat& o) const { return !(*this == o); }
};

inline BoundaryFormat validate_format(const std::vector<std::size_t>& dims) {
  if (dims.size() < 3) throw NotBoundaryFormat("need at least three factors");
  for (std::size_t d : dims)
    if (d < 1) throw NotBoundaryFormat("every side length must be at least 1");
  std::size_t k0 = dims[0] - 1, sum = 0;
  for (std::size_t j = 1; j < dims.size(); ++j) sum += dims[j] - 1;
  if (k0 != sum)
    throw NotBoundaryFormat("side sums " + std::to_string(k0) + " != " + std::to_string(sum));
  return BoundaryFormat{dims};
}

// Odometer step through the index box, last coordinate fastest; returns false
// after the last index.  Matches the dense storage order below.
inline bool next_multi_index(std::vector<std::size_t>& idx, const std::vector<std::size_t>& dims) {
  for (std::size_t j = idx.size(); j-- > 0;) {
    if (++idx[j] < dims[j]) return true;
    idx[j] = 0;
  }
  return false;
}

// Dense (p+1)-way array of Scalars over one field, index 0 outermost.
class BoundaryTensor {
 public:
  BoundaryTensor() = default;

  explicit BoundaryTensor(BoundaryFormat fmt, Field f = Field::rationals())
      : format_(std::move(fmt)), field_(f) {
    strides_.assign(format_.dims.size(), 1);
    for (std::size_t j = format_.dims.size() - 1; j-- > 0;)
      strides_[j] = strides_[j + 1] * format_.dims[j + 1];
    e_.assign(format_.cell_count(), f.zero());
  }

  const BoundaryFormat& format() const { return format_; }
  const Field& field() const { return field_; }
  std::size_t size() const { return e_.size(); }

  std::size_t flat_index(const std::vector<std::size_t>& idx) const {
    require(idx.size() == format_.dims.size(), "tensor index arity mismatch");
    std::size_t f = 0;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      require(idx[j] < format_.dims[j], "tensor index out of range");
      f += idx[j] * strides_[j];
    }
    return f;
  }

  Scalar& at(const std::vector<std::size_t>& idx) { return e_[flat_index(idx)]; }
  const Scalar& at(const std::vector<std::size_t>& idx) const { return e_[flat_index(idx)]; }

  // Three-factor shorthand, the p = 2 workhorse.
  Scalar& at3(std::size_t i0, std::size_t i1, std::size_t i2) {
    return e_[i0 * strides_[0] + i1 * strides_[1] + i2];
  }
  const Scalar& at3(std::size_t i0, std::size_t i1, std::size_t i2) const {
    return e_[i0 * strides_[0] + i1 * strides_[1] + i2];
  }

  Scalar& entry(std::size_t flat) { return e_[flat]; }
  const Scalar& entry(std::size_t flat) const { return e_[flat]; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  BoundaryTensor scaled(const Scalar& c) const {
    BoundaryTensor out = *this;
    for (auto& x : out.e_) x *= c;
    return out;
  }

  bool operator==(const BoundaryTensor& o) const {
    return format_ == o.format_ && e_ == o.e_;
  }
  bool operator!=(const BoundaryTensor& o) const { return !(*this == o); }

 private:
  BoundaryFormat format_;
  Field field_;
  std::vector<std::size_t> strides_;
  std::vector<Scalar> e_;
};

inline std::size_t side_index_sum(const std::vector<std::size_t>& idx) {
  std::size_t s = 0;
  for (std::size_t j = 1; j < idx.size(); ++j) s += idx[j];
  return s;
}

// Zero-pattern predicates in the given coordinates; no basis search.
inline bool is_triangular_given_basis(const BoundaryTensor& a) {
  std::vector<std::size_t> idx(a.format().dims.size(), 0);
  do {
    if (idx[0] > side_index_sum(idx) && !a.at(idx).is_zero()) return false;
  } while (next_multi_index(idx, a.format().dims));
  return true;
}

inline bool is_diagonal_given_basis(const BoundaryTensor& a) {
  std::vector<std::size_t> idx(a.format().dims.size(), 0);
  do {
    if (idx[0] != side_index_sum(idx) && !a.at(idx).is_zero()) return false;
  } while (next_multi_index(idx, a.format().dims));
  return true;
}

inline bool is_identity_given_basis(const BoundaryTensor& a) {
  std::vector<std::size_t> idx(a.format().dims.size(), 0);
  do {
    const Scalar& v = a.at(idx);
    if (idx[0] == side_index_sum(idx)) {
      if (v != a.field().one()) return false;
    } else if (!v.is_zero()) {
      return false;
    }
  } while (next_multi_index(idx, a.format().dims));
  return true;
}

inline BoundaryTensor make_identity(const BoundaryFormat& fmt, Field f = Field::rationals()) {
  BoundaryTensor a(fmt, f);
  std::vector<std::size_t> idx(fmt.dims.size(), 0);
  do {
    if (idx[0] == side_index_sum(idx)) a.at(idx) = f.one();
  } while (next_multi_index(idx, fmt.dims));
  return a;
}

// The flattening as a (k1+1) x (k0+1) matrix whose entries are multilinear
// forms in the factors 2..p; the variable block of factor j starts at
// offset dims[2] + ... + dims[j-1].
inline PolyMatrix flatten_MA(const BoundaryTensor& a) {
  const auto& dims = a.format().dims;
  std::size_t nvars = 0;
  for (std::size_t j = 2; j < dims.size(); ++j) nvars += dims[j];
  PolyMatrix m(dims[1], dims[0], Poly::zero(nvars, MonomialOrder::Grevlex, a.field()));

  std::vector<std::size_t> idx(dims.size(), 0);
  do {
    const Scalar& v = a.at(idx);
    if (v.is_zero()) continue;
    Monomial mono(nvars);
    std::size_t off = 0;
    for (std::size_t j = 2; j < dims.size(); ++j) {
      mono.e[off + idx[j]] = 1;
      off += dims[j];
    }
    Poly term = Poly::from_terms({{mono, v}}, nvars, MonomialOrder::Grevlex, a.field());
    m.at(idx[1], idx[0]) = m.at(idx[1], idx[0]) + term;
  } while (next_multi_index(idx, dims));
  return m;
}

// Exchange of the two small factors: a'[i0][i2][i1] = a[i0][i1][i2].  An
// involution on three-factor tensors; the boundary relation is preserved.
inline BoundaryTensor gale_permute(const BoundaryTensor& a) {
  const auto& dims = a.format().dims;
  if (dims.size() != 3) throw DomainError("factor exchange needs exactly three factors");
  BoundaryFormat fmt{{dims[0], dims[2], dims[1]}};
  BoundaryTensor out(fmt, a.field());
  for (std::size_t i0 = 0; i0 < dims[0]; ++i0)
    for (std::size_t i1 = 0; i1 < dims[1]; ++i1)
      for (std::size_t i2 = 0; i2 < dims[2]; ++i2) out.at3(i0, i2, i1) = a.at3(i0, i1, i2);
  return out;
}

// Change of basis in every factor: out[j0..jp] = sum g0[j0][i0]...gp[jp][ip] a[i0..ip].
inline BoundaryTensor apply_group_element(const BoundaryTensor& a,
                                          const std::vector<ExactMatrix>& g) {
  const auto& dims = a.format().dims;
  if (g.size() != dims.size()) throw DomainError("one group element per factor required");
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (g[j].rows() != dims[j] || g[j].cols() != dims[j])
      throw DomainError("group element shape mismatch on factor " + std::to_string(j));
    if (g[j].field() != a.field()) throw FieldMismatch("group element over a different field");
    if (rank_of(g[j]) != dims[j])
      throw SingularMatrix("group element on factor " + std::to_string(j) + " is singular");
  }
  BoundaryTensor cur = a;
  for (std::size_t j = 0; j < g.size(); ++j) {
    BoundaryTensor next(a.format(), a.field());
    std::vector<std::size_t> idx(dims.size(), 0);
    do {
      const Scalar& v = cur.at(idx);
      if (v.is_zero()) continue;
      std::vector<std::size_t> target = idx;
      for (std::size_t jj = 0; jj < dims[j]; ++jj) {
        const Scalar& c = g[j].at(jj, idx[j]);
        if (c.is_zero()) continue;
        target[j] = jj;
        next.at(target) += c * v;
      }
    } while (next_multi_index(idx, dims));
    cur = std::move(next);
  }
  return cur;
}

// Multiplication map of a three-factor tensor in degree t: the space of
// column vectors is (factor 0) x {degree-t monomials}, the row space is
// (factor 2) x {degree-(t+1) monomials}, both monomial lists in the variables
// of factor 1, grevlex-descending.  Entry at ((i2, m'), (i0, m)) is the sum
// of a[i0][v][i2] over the v with x_v * m = m'.
inline ExactMatrix multiplication_map(const BoundaryTensor& a, unsigned t) {
  const auto& dims = a.format().dims;
  if (dims.size() != 3) throw DomainError("multiplication map needs exactly three factors");
  std::size_t nv = dims[1];
  std::vector<Monomial> cols_mon = monomials_of_degree(nv, t);
  std::vector<Monomial> rows_mon = monomials_of_degree(nv, t + 1);
  std::map<std::vector<unsigned>, std::size_t> row_index;
  for (std::size_t r = 0; r < rows_mon.size(); ++r) row_index[rows_mon[r].e] = r;

  ExactMatrix m(dims[2] * rows_mon.size(), dims[0] * cols_mon.size(), a.field());
  for (std::size_t w = 0; w < dims[0]; ++w) {
    for (std::size_t c = 0; c < cols_mon.size(); ++c) {
      std::size_t col = w * cols_mon.size() + c;
      for (std::size_t v = 0; v < nv; ++v) {
        Monomial shifted = cols_mon[c];
        shifted.e[v] += 1;
        std::size_t r = row_index.at(shifted.e);
        for (std::size_t i = 0; i < dims[2]; ++i) {
          const Scalar& x = a.at3(w, v, i);
          if (!x.is_zero()) m.at(i * rows_mon.size() + r, col) += x;
        }
      }
    }
  }
  return m;
}

// Degeneracy certificate: the determinant of the multiplication map in the
// critical degree k2 - 1, where the boundary relation makes it square.
// Nonzero exactly when the tensor is nondegenerate; the value itself is only
// pinned up to the normalization of the monomial bases.
inline Scalar hyperdet_certificate(const BoundaryTensor& a) {
  const auto& dims = a.format().dims;
  if (dims.size() != 3) throw DomainError("certificate needs exactly three factors");
  ExactMatrix m = multiplication_map(a, static_cast<unsigned>(dims[2] - 1));
  require(m.rows() == m.cols(), "critical multiplication map must be square");
  return determinant_exact(m);
}

}  // namespace steiner
