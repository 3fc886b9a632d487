#pragma once

#include <vector>

#include "steiner/error.hpp"
#include "steiner/matrix.hpp"
#include "steiner/tensor.hpp"

namespace steiner {

enum class IsoVerdict { Iso, NotIso, Indeterminate };

inline const char* to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Iso: return "isomorphic";
    case IsoVerdict::NotIso: return "not-isomorphic";
    case IsoVerdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

struct IsoReport {
  IsoVerdict verdict = IsoVerdict::Indeterminate;
  std::size_t hom_dimension = 0;
  // When the verdict is Iso: an invertible intertwiner pair, phi_w on the
  // large factor and phi_i on the last factor, with the middle factor fixed.
  ExactMatrix phi_w;
  ExactMatrix phi_i;
};

// Decides whether two nondegenerate tensors of the same format present
// isomorphic kernels over a fixed middle factor.  The intertwiner equations
//
//   sum_i phi_i[i'][i] a[j0][v][i] = sum_m b[m][v][i'] phi_w[m][j0]
//
// are linear in (phi_w, phi_i); a one-dimensional solution space spanned by
// an invertible pair certifies an isomorphism, an empty one refutes it, and
// anything else is reported as indeterminate.
inline IsoReport iso_test(const BoundaryTensor& a, const BoundaryTensor& b) {
  const auto& dims = a.format().dims;
  if (dims.size() != 3) throw DomainError("isomorphism test needs exactly three factors");
  if (a.format() != b.format()) throw DomainError("isomorphism test needs matching formats");
  if (a.field() != b.field()) throw FieldMismatch("isomorphism test needs one field");
  if (hyperdet_certificate(a).is_zero() || hyperdet_certificate(b).is_zero())
    throw DegenerateTensor("isomorphism test requires nondegenerate tensors");

  Field f = a.field();
  std::size_t d0 = dims[0], d1 = dims[1], d2 = dims[2];
  std::size_t off_w = 0, off_i = d0 * d0;
  ExactMatrix sys(d0 * d1 * d2, off_i + d2 * d2, f);

  std::size_t row = 0;
  for (std::size_t j0 = 0; j0 < d0; ++j0)
    for (std::size_t v = 0; v < d1; ++v)
      for (std::size_t ip = 0; ip < d2; ++ip, ++row) {
        for (std::size_t i = 0; i < d2; ++i) sys.at(row, off_i + ip * d2 + i) += a.at3(j0, v, i);
        for (std::size_t m = 0; m < d0; ++m) sys.at(row, off_w + m * d0 + j0) -= b.at3(m, v, ip);
      }

  RankKernel rk = rank_and_right_kernel(sys);
  IsoReport rep;
  rep.hom_dimension = rk.kernel.size();
  if (rep.hom_dimension == 0) {
    rep.verdict = IsoVerdict::NotIso;
    return rep;
  }
  if (rep.hom_dimension != 1) {
    rep.verdict = IsoVerdict::Indeterminate;
    return rep;
  }

  const std::vector<Scalar>& sol = rk.kernel.front();
  ExactMatrix pw(d0, d0, f), pi(d2, d2, f);
  for (std::size_t r = 0; r < d0; ++r)
    for (std::size_t c = 0; c < d0; ++c) pw.at(r, c) = sol[off_w + r * d0 + c];
  for (std::size_t r = 0; r < d2; ++r)
    for (std::size_t c = 0; c < d2; ++c) pi.at(r, c) = sol[off_i + r * d2 + c];

  if (rank_of(pw) == d0 && rank_of(pi) == d2) {
    rep.verdict = IsoVerdict::Iso;
    rep.phi_w = pw;
    rep.phi_i = pi;
  } else {
    rep.verdict = IsoVerdict::Indeterminate;
  }
  return rep;
}

}  // namespace steiner
