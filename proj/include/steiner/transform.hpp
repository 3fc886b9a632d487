#pragma once

#include <vector>

#include "steiner/bundle.hpp"
#include "steiner/error.hpp"
#include "steiner/matrix.hpp"
#include "steiner/tensor.hpp"
#include "steiner/unstable.hpp"

namespace steiner {

// Unique representative of the orbit under changes of basis in the large
// factor: the slices are replaced by the reduced row echelon basis of their
// span, taken in the middle-major coordinate order.
inline BoundaryTensor column_normal_form(const BoundaryTensor& a) {
  const auto& dims = a.format().dims;
  if (dims.size() != 3) throw DomainError("normal form needs exactly three factors");
  ExactMatrix img = slice_matrix(a).transpose();
  std::vector<std::size_t> pivots = img.rref();
  if (pivots.size() != dims[0]) throw DomainError("tensor slices are dependent");
  BoundaryTensor out(a.format(), a.field());
  for (std::size_t w = 0; w < dims[0]; ++w)
    for (std::size_t v = 0; v < dims[1]; ++v)
      for (std::size_t i = 0; i < dims[2]; ++i) out.at3(w, v, i) = img.at(w, v * dims[2] + i);
  return out;
}

struct ElmReport {
  SteinerBundle result;
  MembershipReport membership;
};

// Elementary transformation at an unstable hyperplane: move the witness pair
// to the leading basis slots, check that the leading slice is exactly
// xi (x) e_0, and discard one dimension from each outer factor.  The result
// is again a bundle, one step smaller.
inline ElmReport elementary_transform(const SteinerBundle& s, const Hyperplane& h) {
  std::size_t nv = s.n() + 1, k = s.k(), d0 = nv + k - 1;
  if (k < 2) throw DomainError("the transform needs k >= 2 to have anywhere to go");
  MembershipReport mem = is_member(s, h);
  if (!mem.member) throw NonMemberHyperplane("the hyperplane is not unstable for this bundle");

  Field f = s.field();
  ExactMatrix gw = extend_to_basis({mem.witness_w}, d0, f).transpose();
  ExactMatrix gi = inverse(extend_to_basis({mem.witness_u}, k, f));
  BoundaryTensor moved = apply_group_element(
      s.tensor(), {gw, ExactMatrix::identity(nv, f), gi});

  // Leading slice: xi in the first last-factor slot, zeros in the others.
  std::vector<Scalar> xi(nv, f.zero());
  for (std::size_t v = 0; v < nv; ++v) xi[v] = f.from_rat(h.xi[v]);
  for (std::size_t v = 0; v < nv; ++v) {
    require(moved.at3(0, v, 0) == xi[v], "the leading slice must be the hyperplane itself");
    for (std::size_t i = 1; i < k; ++i)
      require(moved.at3(0, v, i).is_zero(), "the leading slice must vanish beyond slot zero");
  }

  BoundaryTensor cut(BoundaryFormat{{d0 - 1, nv, k - 1}}, f);
  for (std::size_t w = 1; w < d0; ++w)
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t i = 1; i < k; ++i) cut.at3(w - 1, v, i - 1) = moved.at3(w, v, i);

  return ElmReport{SteinerBundle::create(std::move(cut)), std::move(mem)};
}

}  // namespace steiner
