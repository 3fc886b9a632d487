#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "steiner/error.hpp"

namespace steiner {

enum class MonomialOrder { Grevlex, Lex };

// Exponent vector of fixed arity.
struct Monomial {
  std::vector<unsigned> e;

  explicit Monomial(std::size_t nvars = 0) : e(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : e(std::move(exps)) {}

  std::size_t nvars() const { return e.size(); }

  unsigned degree() const {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
  }

  bool is_one() const { return degree() == 0; }

  bool operator==(const Monomial& o) const { return e == o.e; }

  Monomial operator*(const Monomial& o) const {
    require(e.size() == o.e.size(), "monomial arity mismatch");
    Monomial m(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) m.e[i] = e[i] + o.e[i];
    return m;
  }

  bool divides(const Monomial& o) const {
    require(e.size() == o.e.size(), "monomial arity mismatch");
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  // Quotient o / this; caller guarantees divisibility.
  Monomial quotient_into(const Monomial& o) const {
    Monomial m(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) m.e[i] = o.e[i] - e[i];
    return m;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    require(a.e.size() == b.e.size(), "monomial arity mismatch");
    Monomial m(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) m.e[i] = std::max(a.e[i], b.e[i]);
    return m;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
  }
};

// +1 when a > b, -1 when a < b.  Grevlex: compare total degree, then the
// rightmost differing exponent decides with the smaller exponent winning.
// Lex: leftmost differing exponent decides.
inline int monomial_cmp(const Monomial& a, const Monomial& b, MonomialOrder order) {
  require(a.nvars() == b.nvars(), "monomial arity mismatch");
  if (order == MonomialOrder::Grevlex) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.nvars(); i-- > 0;) {
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
  }
  return 0;
}

// All monomials of the given total degree, sorted descending in the order.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree,
                                                 MonomialOrder order = MonomialOrder::Grevlex) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == nvars) {
      cur.e[var] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned d = 0; d <= left; ++d) {
      cur.e[var] = d;
      self(self, var + 1, left - d);
    }
    cur.e[var] = 0;
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), [order](const Monomial& a, const Monomial& b) {
    return monomial_cmp(a, b, order) > 0;
  });
  return out;
}

}  // namespace steiner
