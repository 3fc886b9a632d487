#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "steiner/error.hpp"
#include "steiner/groebner.hpp"
#include "steiner/matrix.hpp"
#include "steiner/poly.hpp"
#include "steiner/rng.hpp"
#include "steiner/tensor.hpp"

namespace steiner {

// A hyperplane of the middle-factor projective space, stored by its dual
// coefficient vector, normalized so the first nonzero coordinate is 1.
struct Hyperplane {
  std::vector<BigRat> xi;

  static Hyperplane of(std::vector<BigRat> coeffs) {
    for (const BigRat& c : coeffs) {
      if (c != 0) {
        BigRat inv = c;
        for (BigRat& x : coeffs) x /= inv;
        return Hyperplane{std::move(coeffs)};
      }
    }
    throw DomainError("a hyperplane needs a nonzero coefficient vector");
  }

  bool operator==(const Hyperplane& o) const { return xi == o.xi; }
  bool operator!=(const Hyperplane& o) const { return !(*this == o); }
};

// The tensor as a linear map from the large factor into (middle x last),
// with the codomain coordinates ordered middle-major: row v*k + i, column w.
inline ExactMatrix slice_matrix(const BoundaryTensor& a) {
  const auto& dims = a.format().dims;
  require(dims.size() == 3, "slice matrix needs exactly three factors");
  ExactMatrix m(dims[1] * dims[2], dims[0], a.field());
  for (std::size_t w = 0; w < dims[0]; ++w)
    for (std::size_t v = 0; v < dims[1]; ++v)
      for (std::size_t i = 0; i < dims[2]; ++i) m.at(v * dims[2] + i, w) = a.at3(w, v, i);
  return m;
}

// The presentation matrix: k rows, n+k columns, entries linear in the
// homogeneous coordinates x_0..x_n of the middle factor.
inline PolyMatrix presentation_matrix(const BoundaryTensor& a) {
  const auto& dims = a.format().dims;
  if (dims.size() != 3) throw DomainError("presentation needs exactly three factors");
  std::size_t nv = dims[1];
  PolyMatrix m(dims[2], dims[0], Poly::zero(nv, MonomialOrder::Grevlex, a.field()));
  for (std::size_t i = 0; i < dims[2]; ++i)
    for (std::size_t w = 0; w < dims[0]; ++w) {
      Poly entry = Poly::zero(nv, MonomialOrder::Grevlex, a.field());
      for (std::size_t v = 0; v < nv; ++v) {
        const Scalar& c = a.at3(w, v, i);
        if (!c.is_zero()) entry = entry + Poly::variable(v, nv, MonomialOrder::Grevlex, a.field()).scaled(c);
      }
      m.at(i, w) = entry;
    }
  return m;
}

// Second, independent nondegeneracy route: the maximal minors of the
// presentation have no common projective zero, i.e. the affine dimension of
// the ideal they generate is at most zero.
inline bool nondegenerate_by_minors(const BoundaryTensor& a) {
  const auto& dims = a.format().dims;
  if (dims.size() != 3) throw DomainError("minor test needs exactly three factors");
  std::vector<Poly> minors = minors_ideal(presentation_matrix(a), dims[2]);
  GroebnerBasis gb = buchberger(minors, MonomialOrder::Grevlex);
  return affine_dimension(gb) <= 0;
}

// Necessary-condition smoke test: the presentation must have full rank at
// sample points.  The sequence of sample points is fixed, so runs agree.
inline bool constant_rank_sampled(const BoundaryTensor& a, std::size_t count = 0) {
  const auto& dims = a.format().dims;
  if (dims.size() != 3) throw DomainError("rank sampling needs exactly three factors");
  if (count == 0) count = 2 * dims[0];
  Field f = a.field();
  SplitMix64 rng(0x7ea5u);
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<Scalar> x(dims[1], f.zero());
    bool nonzero = false;
    for (auto& c : x) {
      long long v = rng.uniform(-19, 19);
      if (v != 0) nonzero = true;
      c = f.from_int(v);
    }
    if (!nonzero) {
      ++count;
      continue;
    }
    ExactMatrix m(dims[2], dims[0], f);
    for (std::size_t i = 0; i < dims[2]; ++i)
      for (std::size_t w = 0; w < dims[0]; ++w) {
        Scalar e = f.zero();
        for (std::size_t v = 0; v < dims[1]; ++v) e += a.at3(w, v, i) * x[v];
        m.at(i, w) = e;
      }
    if (rank_of(m) != dims[2]) return false;
  }
  return true;
}

// A kernel bundle on P^n presented by a nondegenerate tensor with role
// dimensions (n+k, n+1, k).
class SteinerBundle {
 public:
  static SteinerBundle create(BoundaryTensor a) {
    const auto& dims = a.format().dims;
    if (dims.size() != 3) throw DomainError("a bundle tensor has exactly three factors");
    if (dims[1] < 2) throw DomainError("the base projective space needs dimension at least 1");
    if (hyperdet_certificate(a).is_zero())
      throw DegenerateTensor("the tensor is degenerate and presents no bundle");
    return SteinerBundle(std::move(a));
  }

  std::size_t n() const { return tensor_.format().dims[1] - 1; }
  std::size_t k() const { return tensor_.format().dims[2]; }
  const BoundaryTensor& tensor() const { return tensor_; }
  const Field& field() const { return tensor_.field(); }

  PolyMatrix presentation() const { return presentation_matrix(tensor_); }

  // Matrix of the composite  xi (x) last-factor -> (middle (x) last) / image:
  // rows are the quotient coordinates (the non-pivot slots of the column
  // echelon of the image), columns the last-factor basis, entries linear in
  // the dual variables y_0..y_n.  A hyperplane is unstable exactly where this
  // matrix drops below full column rank.
  PolyMatrix quotient_pairing() const {
    std::size_t nv = n() + 1, kk = k(), amb = nv * kk;
    Field f = field();
    ExactMatrix img = slice_matrix(tensor_).transpose();
    std::vector<std::size_t> pivots = img.rref();
    require(pivots.size() == tensor_.format().dims[0], "bundle tensor slices must be independent");
    std::vector<bool> is_pivot(amb, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    PolyMatrix b(amb - pivots.size(), kk, Poly::zero(nv, MonomialOrder::Grevlex, f));
    for (std::size_t i = 0; i < kk; ++i) {
      // Symbolic vector xi (x) e_i, then one reduction pass against the
      // echelon rows.
      std::vector<Poly> u(amb, Poly::zero(nv, MonomialOrder::Grevlex, f));
      for (std::size_t v = 0; v < nv; ++v)
        u[v * kk + i] = Poly::variable(v, nv, MonomialOrder::Grevlex, f);
      std::vector<Poly> red = u;
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        const Poly& c = u[pivots[r]];
        if (c.is_zero()) continue;
        for (std::size_t col = 0; col < amb; ++col) {
          const Scalar& e = img.at(r, col);
          if (!e.is_zero()) red[col] = red[col] - c.scaled(e);
        }
      }
      std::size_t row = 0;
      for (std::size_t col = 0; col < amb; ++col) {
        if (is_pivot[col]) continue;
        b.at(row++, i) = red[col];
      }
    }
    return b;
  }

 private:
  explicit SteinerBundle(BoundaryTensor a) : tensor_(std::move(a)) {}
  BoundaryTensor tensor_;
};

// The bundle presented by the multiplication of binary forms of degrees n
// and k-1; its tensor is the identity tensor in the format (n+k, n+1, k).
inline SteinerBundle schwarzenberger(std::size_t n, std::size_t k, Field f = Field::rationals()) {
  if (n < 1 || k < 1) throw DomainError("the multiplication bundle needs n >= 1 and k >= 1");
  return SteinerBundle::create(make_identity(BoundaryFormat{{n + k, n + 1, k}}, f));
}

inline bool is_normal_crossing(const std::vector<Hyperplane>& hps) {
  if (hps.empty()) return true;
  std::size_t nv = hps[0].xi.size(), r = std::min(hps.size(), nv);
  for (const auto& h : hps)
    if (h.xi.size() != nv) throw DomainError("hyperplanes live in different spaces");
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  Field f = Field::rationals();
  for (;;) {
    ExactMatrix m(r, nv, f);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t v = 0; v < nv; ++v) m.at(i, v) = f.from_rat(hps[pick[i]].xi[v]);
    if (rank_of(m) != r) return false;
    // next r-subset in lexicographic order
    std::size_t i = r;
    while (i-- > 0) {
      if (pick[i] + (r - i) < hps.size()) {
        ++pick[i];
        for (std::size_t j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
        break;
      }
      if (i == 0) return true;
    }
  }
}

inline void check_normal_crossing(const std::vector<Hyperplane>& hps) {
  if (!is_normal_crossing(hps))
    throw NotNormalCrossing("the hyperplanes are not in general position");
}

// The bundle of every arrangement of m >= n+2 normal-crossing hyperplanes:
// columns of the presentation are the left-kernel columns of the coefficient
// matrix scaled by their own linear forms.  The columns over all m
// hyperplanes sum to zero, so the last one is dropped without losing the
// span, leaving the n+k slices of a boundary tensor with k = m - n - 1.
inline SteinerBundle logarithmic(const std::vector<Hyperplane>& hps, Field f = Field::rationals()) {
  if (hps.empty()) throw DomainError("no hyperplanes given");
  std::size_t m = hps.size(), nv = hps[0].xi.size();
  if (nv < 2) throw DomainError("the base projective space needs dimension at least 1");
  if (m < nv + 1) throw DomainError("need at least n + 2 hyperplanes");
  check_normal_crossing(hps);

  // Left kernel of the m x (n+1) coefficient matrix.
  ExactMatrix xt(nv, m, f);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t v = 0; v < nv; ++v) xt.at(v, j) = f.from_rat(hps[j].xi[v]);
  RankKernel rk = rank_and_right_kernel(xt);
  std::size_t kk = m - nv;
  require(rk.kernel.size() == kk, "normal crossing rows must have full rank");

  BoundaryTensor a(BoundaryFormat{{m - 1, nv, kk}}, f);
  for (std::size_t j = 0; j + 1 < m; ++j)
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t i = 0; i < kk; ++i) a.at3(j, v, i) = rk.kernel[i][j] * f.from_rat(hps[j].xi[v]);
  return SteinerBundle::create(std::move(a));
}

}  // namespace steiner
