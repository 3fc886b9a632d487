#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "steiner/error.hpp"
#include "steiner/groebner.hpp"
#include "steiner/matrix.hpp"
#include "steiner/poly.hpp"
#include "steiner/rng.hpp"
#include "steiner/univariate.hpp"

namespace steiner {

struct AffinePoint {
  std::vector<BigRat> coords;
  std::size_t mult = 0;
};

struct ZeroDimReport {
  std::size_t length = 0;
  std::vector<Monomial> standard_monomials;  // ascending grevlex
  std::vector<AffinePoint> points;           // rational points, sorted by coordinates
  // Squarefree cluster data for the non-rational part: (degree, multiplicity).
  std::vector<std::pair<std::size_t, unsigned>> residual;
};

namespace detail {

inline bool rat_vec_less(const std::vector<BigRat>& a, const std::vector<BigRat>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

inline ExactMatrix matrix_power(const ExactMatrix& a, std::size_t e) {
  ExactMatrix r = ExactMatrix::identity(a.rows(), a.field());
  for (std::size_t i = 0; i < e; ++i) r = r * a;
  return r;
}

// Representation of M restricted to the span of the columns of B: solves
// M B = B R column by column; nullopt when the span is not invariant.
inline std::optional<ExactMatrix> restrict_to_subspace(const ExactMatrix& m,
                                                       const ExactMatrix& basis) {
  ExactMatrix r(basis.cols(), basis.cols(), m.field());
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    std::vector<Scalar> col(basis.rows(), m.field().zero());
    for (std::size_t i = 0; i < basis.rows(); ++i) col[i] = basis.at(i, j);
    std::vector<Scalar> img = m.apply(col);
    auto x = solve_linear(basis, img);
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < basis.cols(); ++i) r.at(i, j) = (*x)[i];
  }
  return r;
}

}  // namespace detail

// Multiplication matrices of the coordinate functions on the quotient
// algebra, in the standard-monomial basis.  Shared by the solver below and by
// callers that need the operators themselves.
struct QuotientAlgebra {
  std::vector<Monomial> standard;  // ascending grevlex
  std::vector<ExactMatrix> mult;   // one s x s matrix per variable
};

inline QuotientAlgebra quotient_algebra(const GroebnerBasis& gb) {
  require(!gb.basis.empty(), "quotient algebra of the zero ideal");
  std::size_t nvars = gb.nvars;
  QuotientAlgebra q;
  if (gb.is_unit()) return q;

  std::vector<unsigned> bound(nvars, 0);
  for (std::size_t i = 0; i < nvars; ++i) {
    unsigned best = 0;
    bool found = false;
    for (const Poly& p : gb.basis) {
      const Monomial& lm = p.leading().m;
      bool pure = true;
      for (std::size_t v = 0; v < nvars; ++v)
        if (v != i && lm.e[v] > 0) pure = false;
      if (pure && (!found || lm.e[i] < best)) {
        best = lm.e[i];
        found = true;
      }
    }
    if (!found) throw DomainError("ideal is not zero-dimensional");
    bound[i] = best;
  }

  Monomial cur(nvars);
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == nvars) {
      for (const Poly& p : gb.basis)
        if (p.leading().m.divides(cur)) return;
      q.standard.push_back(cur);
      return;
    }
    for (unsigned d = 0; d < bound[v]; ++d) {
      cur.e[v] = d;
      self(self, v + 1);
    }
    cur.e[v] = 0;
  };
  rec(rec, 0);
  std::sort(q.standard.begin(), q.standard.end(), [&](const Monomial& a, const Monomial& b) {
    return monomial_cmp(a, b, gb.order) < 0;
  });

  std::map<std::vector<unsigned>, std::size_t> index;
  for (std::size_t i = 0; i < q.standard.size(); ++i) index[q.standard[i].e] = i;
  std::size_t s = q.standard.size();
  for (std::size_t v = 0; v < nvars; ++v) {
    ExactMatrix m(s, s, gb.field);
    for (std::size_t j = 0; j < s; ++j) {
      Monomial shifted = q.standard[j];
      shifted.e[v] += 1;
      Poly f = Poly::from_terms({{shifted, gb.field.one()}}, nvars, gb.order, gb.field);
      Poly nf = normal_form(f, gb.basis);
      for (const Term& t : nf.terms()) {
        auto it = index.find(t.m.e);
        require(it != index.end(), "normal form left the standard basis");
        m.at(it->second, j) = t.c;
      }
    }
    q.mult.push_back(std::move(m));
  }
  return q;
}

// Solves a zero-dimensional ideal over the rationals.  Primary route: a
// seeded generic linear form, its characteristic polynomial on the quotient,
// Yun decomposition, rational eigenvalues, and coordinates read off as traces
// on the generalized eigenspaces; each candidate is verified by evaluating
// the basis and by nilpotency of the restricted operators, and a failed draw
// is retried with fresh coefficients (at most 8 draws).  Fallback: the same
// data per coordinate operator, with multiplicities from joint generalized
// kernels.  Multiplicity bookkeeping is asserted: rational multiplicities
// plus residual degree x multiplicity always sum to the length.
inline ZeroDimReport zero_dim_solve(const GroebnerBasis& gb, std::uint64_t seed = 0) {
  require(gb.field.is_rational(), "zero-dimensional solving works over the rationals");
  ZeroDimReport rep;
  if (gb.is_unit()) return rep;
  require(gb.nvars >= 1, "solver needs at least one variable");

  QuotientAlgebra q = quotient_algebra(gb);
  std::size_t s = q.standard.size();
  std::size_t nvars = gb.nvars;
  rep.length = s;
  rep.standard_monomials = q.standard;
  Field f = gb.field;

  auto verify_point = [&](const std::vector<BigRat>& coords) {
    std::vector<Scalar> pt;
    pt.reserve(coords.size());
    for (const auto& c : coords) pt.push_back(Scalar::rational(c));
    for (const Poly& g : gb.basis)
      if (!g.evaluate(pt).is_zero()) return false;
    return true;
  };

  SplitMix64 root(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    SplitMix64 rng = root.fork(static_cast<std::uint64_t>(attempt));
    ExactMatrix ml(s, s, f);
    for (std::size_t v = 0; v < nvars; ++v) {
      Scalar c = f.from_int(rng.uniform(-30, 30));
      ml = ml + q.mult[v].scaled(c);
    }
    std::vector<Scalar> cp = charpoly(ml);
    auto factors = uni::squarefree_decomposition(cp);

    std::vector<AffinePoint> points;
    std::vector<std::pair<std::size_t, unsigned>> residual;
    bool good = true;
    for (const auto& [fac, mult] : factors) {
      std::vector<BigRat> roots = rational_roots_squarefree(fac);
      std::size_t irrational = static_cast<std::size_t>(uni::degree(fac)) - roots.size();
      if (irrational > 0) residual.push_back({irrational, mult});
      for (const BigRat& lambda : roots) {
        ExactMatrix shifted = ml - ExactMatrix::identity(s, f).scaled(Scalar::rational(lambda));
        ExactMatrix power = detail::matrix_power(shifted, mult);
        RankKernel rk = rank_and_right_kernel(power);
        if (rk.kernel.size() != mult) {
          good = false;
          break;
        }
        ExactMatrix basis(s, rk.kernel.size(), f);
        for (std::size_t j = 0; j < rk.kernel.size(); ++j)
          for (std::size_t i = 0; i < s; ++i) basis.at(i, j) = rk.kernel[j][i];
        AffinePoint pt;
        pt.mult = mult;
        std::vector<ExactMatrix> restricted;
        for (std::size_t v = 0; v < nvars && good; ++v) {
          auto r = detail::restrict_to_subspace(q.mult[v], basis);
          if (!r) {
            good = false;
            break;
          }
          Scalar tr = f.zero();
          for (std::size_t i = 0; i < r->rows(); ++i) tr += r->at(i, i);
          pt.coords.push_back(tr.rat() / BigRat(mult));
          restricted.push_back(std::move(*r));
        }
        if (!good) break;
        // A genuine one-point cluster makes every restricted operator
        // (coordinate minus its value) nilpotent; a merged cluster cannot.
        for (std::size_t v = 0; v < nvars && good; ++v) {
          ExactMatrix dev = restricted[v] - ExactMatrix::identity(restricted[v].rows(), f)
                                                .scaled(Scalar::rational(pt.coords[v]));
          if (!detail::matrix_power(dev, restricted[v].rows()).is_zero()) good = false;
        }
        if (!good) break;
        if (!verify_point(pt.coords)) {
          good = false;
          break;
        }
        points.push_back(std::move(pt));
      }
      if (!good) break;
    }
    if (!good) continue;

    std::size_t total = 0;
    for (const auto& p : points) total += p.mult;
    for (const auto& [d, m] : residual) total += d * m;
    require(total == s, "multiplicity bookkeeping mismatch");
    std::sort(points.begin(), points.end(), [](const AffinePoint& a, const AffinePoint& b) {
      return detail::rat_vec_less(a.coords, b.coords);
    });
    rep.points = std::move(points);
    rep.residual = std::move(residual);
    return rep;
  }

  // Fallback: per-variable eigenvalues and joint generalized kernels.  The
  // residual, if any, is reported as one aggregate cluster.
  std::vector<std::vector<BigRat>> values(nvars);
  for (std::size_t v = 0; v < nvars; ++v) {
    auto factors = uni::squarefree_decomposition(charpoly(q.mult[v]));
    for (const auto& [fac, mult] : factors) {
      (void)mult;
      for (const BigRat& r : rational_roots_squarefree(fac)) values[v].push_back(r);
    }
    std::sort(values[v].begin(), values[v].end());
    values[v].erase(std::unique(values[v].begin(), values[v].end()), values[v].end());
  }
  std::vector<AffinePoint> points;
  std::vector<BigRat> coords(nvars);
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == nvars) {
      if (!verify_point(coords)) return;
      std::vector<std::vector<Scalar>> joint;
      for (std::size_t i = 0; i < nvars; ++i) {
        ExactMatrix shifted =
            q.mult[i] - ExactMatrix::identity(s, f).scaled(Scalar::rational(coords[i]));
        RankKernel rk = rank_and_right_kernel(detail::matrix_power(shifted, s));
        if (i == 0)
          joint = rk.kernel;
        else
          joint = subspace_intersect(joint, rk.kernel);
        if (joint.empty()) break;
      }
      require(!joint.empty(), "variety point with empty local algebra");
      points.push_back({coords, joint.size()});
      return;
    }
    for (const BigRat& val : values[v]) {
      coords[v] = val;
      self(self, v + 1);
    }
  };
  rec(rec, 0);
  std::sort(points.begin(), points.end(), [](const AffinePoint& a, const AffinePoint& b) {
    return detail::rat_vec_less(a.coords, b.coords);
  });
  std::size_t total = 0;
  for (const auto& p : points) total += p.mult;
  require(total <= s, "multiplicity bookkeeping mismatch");
  rep.points = std::move(points);
  if (total < s) rep.residual.push_back({s - total, 1});
  return rep;
}

struct ProjPoint {
  std::vector<BigRat> y;  // normalized: first nonzero coordinate is 1
  std::size_t mult = 0;
};

struct ProjectiveReport {
  bool infinite = false;
  std::size_t length = 0;
  std::vector<ProjPoint> points;
  std::vector<std::pair<std::size_t, unsigned>> residual;
  std::uint64_t seed = 0;
};

inline std::vector<BigRat> normalize_projective(std::vector<BigRat> y) {
  for (const auto& c : y) {
    if (c != 0) {
      BigRat inv = c;
      for (auto& x : y) x /= inv;
      return y;
    }
  }
  throw DomainError("zero vector has no projective normalization");
}

// Length (and rational points) of the finite projective scheme cut out by a
// homogeneous ideal.  Infinite when the affine cone has dimension >= 2.
// Otherwise: a seeded random coordinate change, dehomogenization at the first
// variable, and the affine solver; the other charts are solved too and must
// find no extra point; the Hilbert function of the input, which stabilizes at
// the scheme length, is an independent cross-check on the chart computation.
inline ProjectiveReport projective_length(const GroebnerBasis& gb, std::uint64_t seed = 0) {
  require(gb.field.is_rational(), "projective length works over the rationals");
  require(gb.nvars >= 2, "projective length needs at least two variables");
  for (const Poly& p : gb.basis) require(p.is_homogeneous(), "ideal is not homogeneous");

  ProjectiveReport rep;
  rep.seed = seed;
  int dim = affine_dimension(gb);
  if (dim >= 2) {
    rep.infinite = true;
    return rep;
  }
  if (dim <= 0) return rep;  // the cone is at most the origin

  // Hilbert function stabilization: nvars+2 consecutive equal values once the
  // generator degrees are passed.
  unsigned dmax = 0;
  for (const Poly& p : gb.basis) dmax = std::max(dmax, p.degree());
  std::size_t stable = 0;
  {
    std::vector<std::size_t> window;
    for (unsigned d = dmax;; ++d) {
      require(d < dmax + 80, "Hilbert function failed to stabilize");
      std::size_t h = hilbert_function(gb, d);
      window.push_back(h);
      std::size_t w = gb.nvars + 2;
      if (window.size() >= w) {
        bool flat = true;
        for (std::size_t i = window.size() - w; i < window.size(); ++i)
          if (window[i] != window.back()) flat = false;
        if (flat) {
          stable = window.back();
          break;
        }
      }
    }
  }

  SplitMix64 root(seed);
  for (int attempt = 0; attempt < 3; ++attempt) {
    SplitMix64 rng = root.fork(static_cast<std::uint64_t>(attempt) + 101);
    ExactMatrix c(gb.nvars, gb.nvars, gb.field);
    do {
      for (std::size_t i = 0; i < gb.nvars; ++i)
        for (std::size_t j = 0; j < gb.nvars; ++j)
          c.at(i, j) = gb.field.from_int(rng.uniform(-9, 9));
    } while (determinant_exact(c).is_zero());

    std::vector<Poly> images;
    for (std::size_t i = 0; i < gb.nvars; ++i) {
      Poly row = Poly::zero(gb.nvars, gb.order, gb.field);
      for (std::size_t j = 0; j < gb.nvars; ++j)
        row = row + Poly::variable(j, gb.nvars, gb.order, gb.field).scaled(c.at(i, j));
      images.push_back(row);
    }
    std::vector<Poly> moved;
    for (const Poly& p : gb.basis) moved.push_back(p.substitute(images));

    auto chart_solve = [&](std::size_t var, std::uint64_t chart_seed)
        -> std::optional<ZeroDimReport> {
      std::vector<Poly> chart;
      for (const Poly& p : moved) {
        Poly d = p.dehomogenize(var);
        if (!d.is_zero()) chart.push_back(d);
      }
      if (chart.empty()) return std::nullopt;  // the chart is everything: not finite
      GroebnerBasis cgb = buchberger(chart, MonomialOrder::Grevlex);
      try {
        return zero_dim_solve(cgb, chart_seed);
      } catch (const DomainError&) {
        return std::nullopt;  // chart not zero-dimensional: bad coordinate change
      }
    };

    auto main_chart = chart_solve(0, rng.next());
    if (!main_chart) continue;
    if (main_chart->length != stable) continue;  // a point escaped chart 0

    // Projectivize chart-0 data.
    std::vector<ProjPoint> points;
    for (const AffinePoint& p : main_chart->points) {
      std::vector<BigRat> primed;
      primed.push_back(BigRat(1));
      for (const auto& x : p.coords) primed.push_back(x);
      std::vector<BigRat> orig(gb.nvars, BigRat(0));
      for (std::size_t i = 0; i < gb.nvars; ++i)
        for (std::size_t j = 0; j < gb.nvars; ++j) orig[i] += c.at(i, j).rat() * primed[j];
      points.push_back({normalize_projective(std::move(orig)), p.mult});
    }

    // Every other chart must agree: same points, same multiplicities, and
    // nothing new.
    bool consistent = true;
    for (std::size_t var = 1; var < gb.nvars && consistent; ++var) {
      auto other = chart_solve(var, rng.next());
      if (!other) {
        consistent = false;
        break;
      }
      for (const AffinePoint& p : other->points) {
        std::vector<BigRat> primed;
        for (std::size_t i = 0, j = 0; i < gb.nvars; ++i) {
          if (i == var)
            primed.push_back(BigRat(1));
          else
            primed.push_back(p.coords[j++]);
        }
        std::vector<BigRat> orig(gb.nvars, BigRat(0));
        for (std::size_t i = 0; i < gb.nvars; ++i)
          for (std::size_t j = 0; j < gb.nvars; ++j) orig[i] += c.at(i, j).rat() * primed[j];
        std::vector<BigRat> norm = normalize_projective(std::move(orig));
        bool found = false;
        for (const ProjPoint& q2 : points) {
          if (q2.y == norm) {
            require(q2.mult == p.mult, "chart multiplicities disagree");
            found = true;
            break;
          }
        }
        if (!found) consistent = false;  // chart 0 missed a point
      }
    }
    if (!consistent) continue;

    std::sort(points.begin(), points.end(), [](const ProjPoint& a, const ProjPoint& b) {
      return detail::rat_vec_less(a.y, b.y);
    });
    rep.length = main_chart->length;
    rep.points = std::move(points);
    rep.residual = main_chart->residual;
    return rep;
  }
  throw InternalError("projective solve failed to find an adapted coordinate change");
}

}  // namespace steiner
