#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "steiner/error.hpp"
#include "steiner/matrix.hpp"
#include "steiner/tensor.hpp"
#include "steiner/univariate.hpp"

namespace steiner {

// Connected symmetry type of a nondegenerate three-factor tensor, read off
// the Lie algebra of its projective stabilizer inside SL x SL x SL.
enum class StabilizerType { Trivial, Additive, Multiplicative, SL2, Anomaly };

inline const char* to_string(StabilizerType t) {
  switch (t) {
    case StabilizerType::Trivial: return "trivial";
    case StabilizerType::Additive: return "additive";
    case StabilizerType::Multiplicative: return "multiplicative";
    case StabilizerType::SL2: return "sl2";
    case StabilizerType::Anomaly: return "anomaly";
  }
  return "?";
}

struct StabilizerReport {
  std::size_t dimension = 0;
  StabilizerType type = StabilizerType::Trivial;
  // One generator of the algebra when the dimension is positive: trace-free
  // endomorphisms of the three factors acting by the scalar lambda.
  std::vector<ExactMatrix> generator;
  Scalar lambda;
  // For a one-dimensional semisimple stabilizer: the rational eigenvalues of
  // the middle-factor component, sorted, with multiplicity.
  std::vector<BigRat> v_weights;
};

// Minimal polynomial by the first linear dependence among the Krylov
// vectors vec(Y^0), vec(Y^1), ...; ascending coefficients, monic.
inline std::vector<Scalar> minimal_polynomial(const ExactMatrix& y) {
  require(y.rows() == y.cols(), "minimal polynomial needs a square matrix");
  std::size_t d = y.rows(), n2 = d * d;
  Field f = y.field();
  std::vector<std::vector<Scalar>> powers;
  ExactMatrix cur = ExactMatrix::identity(d, f);
  for (;;) {
    std::vector<Scalar> v;
    v.reserve(n2);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) v.push_back(cur.at(r, c));
    if (!powers.empty()) {
      ExactMatrix m(n2, powers.size(), f);
      for (std::size_t j = 0; j < powers.size(); ++j)
        for (std::size_t i = 0; i < n2; ++i) m.at(i, j) = powers[j][i];
      if (auto dep = solve_linear(m, v)) {
        std::vector<Scalar> coeffs;
        for (const Scalar& c : *dep) coeffs.push_back(-c);
        coeffs.push_back(f.one());
        return coeffs;
      }
    }
    require(powers.size() <= d, "matrix power dependence must appear by degree d");
    powers.push_back(std::move(v));
    cur = cur * y;
  }
}

namespace detail {

inline bool is_squarefree(const std::vector<Scalar>& p) {
  return uni::degree(uni::gcd(p, uni::derivative(p))) == 0;
}

inline bool is_nilpotent(const ExactMatrix& y) {
  ExactMatrix m = ExactMatrix::identity(y.rows(), y.field());
  for (std::size_t i = 0; i < y.rows(); ++i) m = m * y;
  return m.is_zero();
}

// Rational eigenvalues of y with multiplicity, sorted ascending.  Any
// irrational eigenvalues are simply absent from the list.
inline std::vector<BigRat> rational_eigenvalues(const ExactMatrix& y) {
  std::vector<Scalar> cp = charpoly(y);
  Field f = y.field();
  std::vector<Scalar> sf = uni::divmod(cp, uni::gcd(cp, uni::derivative(cp))).first;
  std::vector<BigRat> roots = rational_roots_squarefree(sf);
  std::vector<BigRat> out;
  for (const BigRat& r : roots) {
    std::vector<Scalar> lin{f.from_rat(-r), f.one()};
    for (;;) {
      auto [q, rem] = uni::divmod(cp, lin);
      if (!uni::is_zero(rem)) break;
      out.push_back(r);
      cp = q;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Classification of a one-dimensional stabilizer from the middle-factor
// component of its generator: semisimple generators come from a torus,
// nilpotent ones from an additive subgroup.
inline StabilizerType classify_generator(const ExactMatrix& y, std::vector<BigRat>& weights_out) {
  std::vector<Scalar> mp = minimal_polynomial(y);
  if (detail::is_squarefree(mp)) {
    weights_out = detail::rational_eigenvalues(y);
    return StabilizerType::Multiplicative;
  }
  if (detail::is_nilpotent(y)) return StabilizerType::Additive;
  return StabilizerType::Anomaly;
}

// Lie algebra of the stabilizer of the projective point [a] under the action
// of SL(d0) x SL(d1) x SL(d2): all trace-free triples (X, Y, Z) whose
// derivative action sends a to a scalar multiple lambda * a.  The linear
// system has one row per cell plus the three trace rows; the unknowns are the
// entries of X, Y, Z in row-major order followed by lambda.
inline StabilizerReport stabilizer_algebra(const BoundaryTensor& a) {
  const auto& dims = a.format().dims;
  if (dims.size() != 3) throw DomainError("stabilizer analysis needs exactly three factors");
  if (hyperdet_certificate(a).is_zero())
    throw DegenerateTensor("stabilizer analysis requires a nondegenerate tensor");

  Field f = a.field();
  std::size_t d0 = dims[0], d1 = dims[1], d2 = dims[2];
  std::size_t off_x = 0, off_y = d0 * d0, off_z = off_y + d1 * d1, off_l = off_z + d2 * d2;
  std::size_t cells = d0 * d1 * d2;
  ExactMatrix sys(cells + 3, off_l + 1, f);

  std::size_t row = 0;
  for (std::size_t j0 = 0; j0 < d0; ++j0)
    for (std::size_t j1 = 0; j1 < d1; ++j1)
      for (std::size_t j2 = 0; j2 < d2; ++j2, ++row) {
        for (std::size_t i = 0; i < d0; ++i) sys.at(row, off_x + j0 * d0 + i) += a.at3(i, j1, j2);
        for (std::size_t i = 0; i < d1; ++i) sys.at(row, off_y + j1 * d1 + i) += a.at3(j0, i, j2);
        for (std::size_t i = 0; i < d2; ++i) sys.at(row, off_z + j2 * d2 + i) += a.at3(j0, j1, i);
        sys.at(row, off_l) -= a.at3(j0, j1, j2);
      }
  for (std::size_t i = 0; i < d0; ++i) sys.at(row, off_x + i * d0 + i) = f.one();
  for (std::size_t i = 0; i < d1; ++i) sys.at(row + 1, off_y + i * d1 + i) = f.one();
  for (std::size_t i = 0; i < d2; ++i) sys.at(row + 2, off_z + i * d2 + i) = f.one();

  RankKernel rk = rank_and_right_kernel(sys);
  StabilizerReport rep;
  rep.dimension = rk.kernel.size();
  rep.lambda = f.zero();

  if (rep.dimension > 0) {
    const std::vector<Scalar>& v = rk.kernel.front();
    ExactMatrix x(d0, d0, f), y(d1, d1, f), z(d2, d2, f);
    for (std::size_t r = 0; r < d0; ++r)
      for (std::size_t c = 0; c < d0; ++c) x.at(r, c) = v[off_x + r * d0 + c];
    for (std::size_t r = 0; r < d1; ++r)
      for (std::size_t c = 0; c < d1; ++c) y.at(r, c) = v[off_y + r * d1 + c];
    for (std::size_t r = 0; r < d2; ++r)
      for (std::size_t c = 0; c < d2; ++c) z.at(r, c) = v[off_z + r * d2 + c];
    rep.generator = {x, y, z};
    rep.lambda = v[off_l];
  }

  switch (rep.dimension) {
    case 0: rep.type = StabilizerType::Trivial; break;
    case 1: rep.type = classify_generator(rep.generator[1], rep.v_weights); break;
    case 3: rep.type = StabilizerType::SL2; break;
    default: rep.type = StabilizerType::Anomaly; break;
  }
  return rep;
}

}  // namespace steiner
