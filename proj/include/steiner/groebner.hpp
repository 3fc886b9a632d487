#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "steiner/error.hpp"
#include "steiner/monomial.hpp"
#include "steiner/poly.hpp"

namespace steiner {

// Full normal form: leading reducible terms are rewritten by the first basis
// element (in list order) whose leading monomial divides them; irreducible
// leading terms move to the remainder.  Deterministic for a fixed list.
inline Poly normal_form(const Poly& f, const std::vector<Poly>& basis) {
  Poly rem = Poly::zero(f.nvars(), f.order(), f.field());
  Poly h = f;
  while (!h.is_zero()) {
    const Term& lt = h.leading();
    bool reduced = false;
    for (const Poly& g : basis) {
      if (g.is_zero()) continue;
      const Term& glt = g.leading();
      if (glt.m.divides(lt.m)) {
        Scalar coef = lt.c / glt.c;
        h = h - g.times_term(glt.m.quotient_into(lt.m), coef);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem = rem + Poly::from_terms({lt}, f.nvars(), f.order(), f.field());
      Poly lead_only = Poly::from_terms({lt}, f.nvars(), f.order(), f.field());
      h = h - lead_only;
    }
  }
  return rem;
}

struct GroebnerBasis {
  std::size_t nvars = 0;
  MonomialOrder order = MonomialOrder::Grevlex;
  Field field;
  std::vector<Poly> generators;  // the input ideal, kept verbatim
  std::vector<Poly> basis;       // unique reduced basis: monic, sorted by
                                 // descending leading monomial

  bool is_unit() const {
    return basis.size() == 1 && !basis[0].is_zero() && basis[0].leading().m.is_one();
  }

  bool is_zero_ideal() const { return basis.empty(); }
};

// Buchberger's algorithm with the coprimality and chain criteria.  The S-pair
// queue is ordered by total degree of the lcm, then by the pair index, so
// runs are reproducible.  The final basis is interreduced and monic; it is
// the unique reduced basis of the ideal for the chosen order.
inline GroebnerBasis buchberger(const std::vector<Poly>& gens, MonomialOrder order) {
  require(!gens.empty(), "empty generator list");
  std::size_t nvars = gens[0].nvars();
  Field field = gens[0].field();
  GroebnerBasis out;
  out.nvars = nvars;
  out.order = order;
  out.field = field;
  out.generators = gens;

  std::vector<Poly> g;
  for (const Poly& p : gens) {
    require(p.nvars() == nvars, "generator arity mismatch");
    if (!p.is_zero()) g.push_back(p.with_order(order).monic());
  }
  if (g.empty()) return out;

  // Queue entries: (lcm degree, i, j) with i < j; `pending` mirrors the queue
  // so the chain criterion can ask whether a pair is still untreated.
  std::set<std::tuple<unsigned, std::size_t, std::size_t>> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    Monomial l = Monomial::lcm(g[i].leading().m, g[j].leading().m);
    queue.insert({l.degree(), i, j});
    pending.insert({i, j});
  };
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    const Monomial& mi = g[i].leading().m;
    const Monomial& mj = g[j].leading().m;
    if (Monomial::coprime(mi, mj)) continue;  // first criterion
    Monomial l = Monomial::lcm(mi, mj);
    bool chained = false;  // second criterion
    for (std::size_t k = 0; k < g.size() && !chained; ++k) {
      if (k == i || k == j) continue;
      if (!g[k].leading().m.divides(l)) continue;
      auto p1 = std::minmax(i, k);
      auto p2 = std::minmax(j, k);
      if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second}))
        chained = true;
    }
    if (chained) continue;
    Poly spair = g[i].times_term(mi.quotient_into(l), field.one()) -
                 g[j].times_term(mj.quotient_into(l), field.one());
    Poly r = normal_form(spair, g);
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    std::size_t m = g.size() - 1;
    for (std::size_t t = 0; t < m; ++t) push_pair(t, m);
  }

  // Minimalize: keep only elements whose leading monomial is not divisible by
  // another kept one (scanning by ascending leading monomial).
  std::vector<std::size_t> idx(g.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return monomial_cmp(g[a].leading().m, g[b].leading().m, order) < 0;
  });
  std::vector<Poly> minimal;
  for (std::size_t id : idx) {
    bool redundant = false;
    for (const Poly& kept : minimal)
      if (kept.leading().m.divides(g[id].leading().m)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g[id]);
  }
  // Reduce each element against the others.
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly r = others.empty() ? minimal[i] : normal_form(minimal[i], others);
    require(!r.is_zero(), "reduced basis element vanished");
    reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [order](const Poly& a, const Poly& b) {
    return monomial_cmp(a.leading().m, b.leading().m, order) > 0;
  });
  out.basis = std::move(reduced);
  return out;
}

inline bool ideal_membership(const Poly& f, const GroebnerBasis& gb) {
  if (f.is_zero()) return true;
  if (gb.basis.empty()) return false;
  return normal_form(f.with_order(gb.order), gb.basis).is_zero();
}

// Krull dimension of the affine variety: the largest size of a variable
// subset meeting no leading-monomial support, -1 for the unit ideal.
inline int affine_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return -1;
  std::size_t n = gb.nvars;
  std::vector<std::vector<bool>> supports;
  for (const Poly& p : gb.basis) {
    std::vector<bool> s(n, false);
    for (std::size_t i = 0; i < n; ++i) s[i] = p.leading().m.e[i] > 0;
    supports.push_back(std::move(s));
  }
  int best = -1;
  require(n <= 31, "too many variables for subset scan");
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    // The subset is independent when no leading monomial lives entirely on it.
    bool ok = true;
    for (const auto& s : supports) {
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i)
        if (s[i] && !(mask & (1u << i))) {
          inside = false;
          break;
        }
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, static_cast<int>(std::popcount(mask)));
  }
  return best;
}

// Number of degree-d monomials outside the leading term ideal.  For a
// homogeneous ideal this is the Hilbert function of the quotient.
inline std::size_t hilbert_function(const GroebnerBasis& gb, unsigned degree) {
  std::vector<Monomial> all = monomials_of_degree(gb.nvars, degree);
  std::size_t count = 0;
  for (const Monomial& m : all) {
    bool divisible = false;
    for (const Poly& p : gb.basis)
      if (p.leading().m.divides(m)) {
        divisible = true;
        break;
      }
    if (!divisible) ++count;
  }
  return count;
}

// All size x size minors of a polynomial matrix, rows and columns chosen in
// lexicographic subset order, each expanded by cofactors.
inline std::vector<Poly> minors_ideal(const PolyMatrix& m, std::size_t size) {
  if (size > std::min(m.rows, m.cols))
    throw DomainError("minor size exceeds matrix dimensions");
  require(!m.entries.empty(), "minors of an empty matrix");
  std::vector<Poly> out;
  std::vector<std::size_t> rows(size), cols(size);
  auto next_subset = [](std::vector<std::size_t>& s, std::size_t limit) {
    std::size_t k = s.size();
    for (std::size_t i = k; i-- > 0;) {
      if (s[i] + (k - i) <= limit) {
        ++s[i];
        for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
        return true;
      }
      if (i == 0) break;
    }
    return false;
  };
  for (std::size_t i = 0; i < size; ++i) rows[i] = i;
  do {
    for (std::size_t i = 0; i < size; ++i) cols[i] = i;
    do {
      out.push_back(poly_det(m, rows, cols));
    } while (next_subset(cols, m.cols - 1));
  } while (next_subset(rows, m.rows - 1));
  return out;
}

// Whether every product (generator of a) * (linear form) lies in b.
inline bool ideal_product_containment(const GroebnerBasis& a, const std::vector<Poly>& forms,
                                      const GroebnerBasis& b) {
  for (const Poly& g : a.basis)
    for (const Poly& l : forms)
      if (!ideal_membership(g * l, b)) return false;
  return true;
}

}  // namespace steiner
