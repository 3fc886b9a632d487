#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steiner/bundle.hpp"
#include "steiner/error.hpp"
#include "steiner/groebner.hpp"
#include "steiner/matrix.hpp"
#include "steiner/tensor.hpp"
#include "steiner/zerodim.hpp"

namespace steiner {

// Scheme of unstable hyperplanes in the dual projective space, cut out by
// the maximal minors of the quotient pairing.
struct UnstableReport {
  bool infinite = false;
  std::size_t length = 0;
  std::vector<ProjPoint> points;
  // (degree, multiplicity) of non-rational point clusters.
  std::vector<std::pair<std::size_t, unsigned>> residual;
  std::uint64_t seed = 0;
  GroebnerBasis ideal;
};

struct MembershipReport {
  bool member = false;
  std::size_t h0 = 0;
  // For a member: a large-factor vector and a last-factor vector whose
  // slice equals xi (x) u.
  std::vector<Scalar> witness_w;
  std::vector<Scalar> witness_u;
};

// Sections in twist t: the kernel dimension of the degree-t multiplication
// map.  Vanishes through t = k-1 and jumps at t = k.
inline std::size_t sections_dim(const BoundaryTensor& a, unsigned t) {
  ExactMatrix m = multiplication_map(a, t);
  return m.cols() - rank_of(m);
}

inline std::size_t sections_dim(const SteinerBundle& s, unsigned t) {
  return sections_dim(s.tensor(), t);
}

// Exact membership of one hyperplane: h0 is the dimension of the overlap of
// the tensor image with xi (x) last factor.  Nondegeneracy keeps h0 at most
// one, so the witness is unique up to scale.
inline MembershipReport is_member(const SteinerBundle& s, const Hyperplane& h) {
  std::size_t nv = s.n() + 1, k = s.k();
  if (h.xi.size() != nv) throw DomainError("hyperplane lives in the wrong space");
  Field f = s.field();

  ExactMatrix am = slice_matrix(s.tensor());
  std::vector<std::vector<Scalar>> image;
  for (std::size_t w = 0; w < am.cols(); ++w) {
    std::vector<Scalar> col(am.rows(), f.zero());
    for (std::size_t r = 0; r < am.rows(); ++r) col[r] = am.at(r, w);
    image.push_back(std::move(col));
  }
  std::vector<Scalar> xi(nv, f.zero());
  for (std::size_t v = 0; v < nv; ++v) xi[v] = f.from_rat(h.xi[v]);
  std::vector<std::vector<Scalar>> slab;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Scalar> b(nv * k, f.zero());
    for (std::size_t v = 0; v < nv; ++v) b[v * k + i] = xi[v];
    slab.push_back(std::move(b));
  }

  std::vector<std::vector<Scalar>> meet = subspace_intersect(image, slab);
  MembershipReport rep;
  rep.h0 = meet.size();
  rep.member = rep.h0 >= 1;
  require(rep.h0 <= 1, "an unstable hyperplane of a bundle carries a single section");

  if (rep.member) {
    const std::vector<Scalar>& z = meet.front();
    auto w = solve_linear(am, z);
    require(w.has_value(), "intersection vector must lie in the image");
    rep.witness_w = *w;
    std::size_t vstar = 0;
    while (xi[vstar].is_zero()) ++vstar;
    rep.witness_u.assign(k, f.zero());
    for (std::size_t i = 0; i < k; ++i) rep.witness_u[i] = z[vstar * k + i] / xi[vstar];
  }
  return rep;
}

inline UnstableReport unstable_scheme(const SteinerBundle& s, std::uint64_t seed = 0) {
  if (!s.field().is_rational())
    throw DomainError("the unstable scheme is computed over the rationals");
  std::size_t k = s.k();
  UnstableReport rep;
  rep.seed = seed;

  PolyMatrix b = s.quotient_pairing();
  if (b.rows < k) {
    // Too few quotient coordinates for a maximal minor: every hyperplane is
    // unstable.
    rep.infinite = true;
    return rep;
  }
  std::vector<Poly> minors = minors_ideal(b, k);
  rep.ideal = buchberger(minors, MonomialOrder::Grevlex);

  ProjectiveReport pr = projective_length(rep.ideal, seed);
  rep.infinite = pr.infinite;
  rep.length = pr.length;
  rep.points = pr.points;
  rep.residual = pr.residual;

  // Cross-check every rational point against the direct membership route.
  for (const ProjPoint& p : rep.points) {
    MembershipReport m = is_member(s, Hyperplane::of(p.y));
    require(m.member, "a computed unstable hyperplane must pass the membership test");
  }
  return rep;
}

struct WInvariant {
  bool infinite = false;
  std::size_t value = 0;
};

// Length of the unstable scheme; finite values never exceed n + k + 1.
inline WInvariant w_invariant(const SteinerBundle& s, std::uint64_t seed = 0) {
  UnstableReport rep = unstable_scheme(s, seed);
  WInvariant w;
  w.infinite = rep.infinite;
  w.value = rep.length;
  require(w.infinite || w.value <= s.n() + s.k() + 1,
          "a finite unstable length beyond n+k+1 is impossible");
  return w;
}

enum class BundleClass { Schwarzenberger, Logarithmic, Plain };

inline const char* to_string(BundleClass c) {
  switch (c) {
    case BundleClass::Schwarzenberger: return "schwarzenberger";
    case BundleClass::Logarithmic: return "logarithmic";
    case BundleClass::Plain: return "plain";
  }
  return "?";
}

struct Classification {
  BundleClass kind = BundleClass::Plain;
  WInvariant w;
  UnstableReport scheme;
};

// Infinitely many unstable hyperplanes force the multiplication bundle; a
// full set of n+k+1 makes the bundle logarithmic for its own unstable
// arrangement; anything shorter is plain.
inline Classification classify(const SteinerBundle& s, std::uint64_t seed = 0) {
  Classification c;
  c.scheme = unstable_scheme(s, seed);
  c.w.infinite = c.scheme.infinite;
  c.w.value = c.scheme.length;
  require(c.w.infinite || c.w.value <= s.n() + s.k() + 1,
          "a finite unstable length beyond n+k+1 is impossible");
  if (c.w.infinite)
    c.kind = BundleClass::Schwarzenberger;
  else if (c.w.value >= s.n() + s.k() + 1)
    c.kind = BundleClass::Logarithmic;
  else
    c.kind = BundleClass::Plain;
  return c;
}

struct SegrePoint {
  std::vector<BigRat> w;   // point in the large-factor projective space
  std::vector<BigRat> xi;  // its rank-one slice, projected to the dual space
  std::size_t mult = 0;
};

struct SegreReport {
  bool infinite = false;
  std::size_t length = 0;
  std::vector<SegrePoint> points;
  std::vector<std::pair<std::size_t, unsigned>> residual;
  std::uint64_t seed = 0;
};

// Intersection of the slice span with the rank-one locus, computed in the
// large-factor coordinates: the two-by-two minors of the generic slice cut
// out the points whose slices factor as xi (x) u.  Projecting those slices
// recovers the reduced unstable scheme.
inline SegreReport segre_intersection(const SteinerBundle& s, std::uint64_t seed = 0) {
  if (!s.field().is_rational())
    throw DomainError("the rank-one intersection is computed over the rationals");
  const auto& dims = s.tensor().format().dims;
  std::size_t d0 = dims[0], nv = dims[1], k = dims[2];
  Field f = s.field();

  PolyMatrix slice(nv, k, Poly::zero(d0, MonomialOrder::Grevlex, f));
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t i = 0; i < k; ++i) {
      Poly e = Poly::zero(d0, MonomialOrder::Grevlex, f);
      for (std::size_t w = 0; w < d0; ++w) {
        const Scalar& c = s.tensor().at3(w, v, i);
        if (!c.is_zero()) e = e + Poly::variable(w, d0, MonomialOrder::Grevlex, f).scaled(c);
      }
      slice.at(v, i) = e;
    }

  SegreReport rep;
  rep.seed = seed;
  if (nv < 2 || k < 2) {
    // A one-row or one-column slice is everywhere rank at most one.
    rep.infinite = true;
    return rep;
  }
  GroebnerBasis gb = buchberger(minors_ideal(slice, 2), MonomialOrder::Grevlex);
  ProjectiveReport pr = projective_length(gb, seed);
  rep.infinite = pr.infinite;
  rep.length = pr.length;
  rep.residual = pr.residual;
  if (rep.infinite) return rep;

  for (const ProjPoint& p : pr.points) {
    ExactMatrix m(nv, k, f);
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t i = 0; i < k; ++i) {
        Scalar e = f.zero();
        for (std::size_t w = 0; w < d0; ++w) e += s.tensor().at3(w, v, i) * f.from_rat(p.y[w]);
        m.at(v, i) = e;
      }
    require(rank_of(m) == 1, "a rank-one intersection point must have a rank-one slice");
    std::vector<BigRat> xi(nv, BigRat(0));
    for (std::size_t i = 0; i < k; ++i) {
      bool any = false;
      for (std::size_t v = 0; v < nv; ++v)
        if (!m.at(v, i).is_zero()) any = true;
      if (!any) continue;
      for (std::size_t v = 0; v < nv; ++v) xi[v] = m.at(v, i).rat();
      break;
    }
    rep.points.push_back(SegrePoint{p.y, normalize_projective(xi), p.mult});
  }
  return rep;
}

}  // namespace steiner
