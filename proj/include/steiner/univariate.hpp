#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "steiner/error.hpp"
#include "steiner/scalar.hpp"

namespace steiner {

// Univariate polynomials as ascending coefficient vectors; the zero
// polynomial is the empty vector.  These are helpers for characteristic and
// minimal polynomials, so everything works over either field, while root
// extraction is rational-only.
namespace uni {

inline void normalize(std::vector<Scalar>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

inline int degree(const std::vector<Scalar>& c) {
  return static_cast<int>(c.size()) - 1;
}

inline bool is_zero(const std::vector<Scalar>& c) { return c.empty(); }

inline std::vector<Scalar> add(std::vector<Scalar> a, const std::vector<Scalar>& b) {
  if (a.size() < b.size()) a.resize(b.size(), b[0].field().zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  normalize(a);
  return a;
}

inline std::vector<Scalar> sub(std::vector<Scalar> a, const std::vector<Scalar>& b) {
  if (a.size() < b.size()) a.resize(b.size(), b[0].field().zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  normalize(a);
  return a;
}

inline std::vector<Scalar> mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  if (a.empty() || b.empty()) return {};
  Field f = a[0].field();
  std::vector<Scalar> out(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  normalize(out);
  return out;
}

inline std::vector<Scalar> scale(std::vector<Scalar> a, const Scalar& c) {
  for (auto& x : a) x *= c;
  normalize(a);
  return a;
}

inline std::vector<Scalar> monic(std::vector<Scalar> a) {
  require(!a.empty(), "monic of zero polynomial");
  Scalar lead_inv = a.back().inverse();
  return scale(std::move(a), lead_inv);
}

// Division with remainder over a field: a = q b + r.
inline std::pair<std::vector<Scalar>, std::vector<Scalar>> divmod(
    std::vector<Scalar> a, const std::vector<Scalar>& b) {
  require(!b.empty(), "division by zero polynomial");
  Field f = b[0].field();
  if (a.size() < b.size()) return {{}, std::move(a)};
  std::vector<Scalar> q(a.size() - b.size() + 1, f.zero());
  Scalar lead_inv = b.back().inverse();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    Scalar coef = a[i] * lead_inv;
    if (!coef.is_zero()) {
      q[i - b.size() + 1] = coef;
      for (std::size_t j = 0; j < b.size(); ++j) a[i - b.size() + 1 + j] -= coef * b[j];
    }
    if (i == 0) break;
  }
  normalize(a);
  normalize(q);
  return {std::move(q), std::move(a)};
}

inline std::vector<Scalar> derivative(const std::vector<Scalar>& a) {
  if (a.size() <= 1) return {};
  Field f = a[0].field();
  std::vector<Scalar> d(a.size() - 1, f.zero());
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * f.from_int(static_cast<long long>(i));
  normalize(d);
  return d;
}

inline Scalar eval(const std::vector<Scalar>& a, const Scalar& x) {
  Scalar r = x.field().zero();
  for (std::size_t i = a.size(); i-- > 0;) {
    r = r * x + a[i];
    if (i == 0) break;
  }
  return r;
}

// Monic gcd by the Euclidean algorithm.
inline std::vector<Scalar> gcd(std::vector<Scalar> a, std::vector<Scalar> b) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    auto [q, r] = divmod(std::move(a), b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = monic(std::move(a));
  return a;
}

inline std::vector<Scalar> lcm(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  if (a.empty() || b.empty()) return {};
  auto g = gcd(a, b);
  auto [q, r] = divmod(mul(a, b), g);
  require(r.empty(), "lcm division not exact");
  return monic(std::move(q));
}

// Yun squarefree decomposition over a characteristic-zero field:
// f = prod s_e^e with the s_e squarefree and pairwise coprime.  Returns the
// (s_e, e) pairs with nontrivial s_e, ascending in e.
inline std::vector<std::pair<std::vector<Scalar>, unsigned>> squarefree_decomposition(
    std::vector<Scalar> f) {
  require(!f.empty(), "squarefree decomposition of zero");
  require(f[0].field().is_rational(), "Yun decomposition needs characteristic zero");
  f = monic(std::move(f));
  std::vector<std::pair<std::vector<Scalar>, unsigned>> out;
  if (degree(f) == 0) return out;
  auto fp = derivative(f);
  auto g = gcd(f, fp);
  if (degree(g) == 0) {
    out.push_back({f, 1});
    return out;
  }
  auto w = divmod(f, g).first;
  auto y = divmod(fp, g).first;
  auto z = sub(y, derivative(w));
  unsigned i = 1;
  while (degree(w) > 0) {
    auto gi = gcd(w, z);
    if (degree(gi) > 0) out.push_back({gi, i});
    w = divmod(w, gi).first;
    y = divmod(z, gi).first;
    z = sub(y, derivative(w));
    ++i;
  }
  return out;
}

}  // namespace uni

// All rational roots of a squarefree rational polynomial, in increasing
// order.  No floating point: the primitive integer model is reduced modulo a
// small prime that keeps it squarefree, roots are found there exhaustively,
// Newton-lifted until the modulus passes the reconstruction bound
// 2 * max(|c_0|, |c_lead|)^2, and rationally reconstructed; every candidate
// is then verified by exact evaluation, which makes false positives
// impossible (and the bound makes misses impossible).
inline std::vector<BigRat> rational_roots_squarefree(const std::vector<Scalar>& poly) {
  require(!poly.empty(), "roots of the zero polynomial");
  require(poly[0].field().is_rational(), "rational root extraction needs rational input");
  if (uni::degree(poly) == 0) return {};

  // Integer primitive model.
  BigInt den_lcm = 1;
  for (const auto& c : poly) {
    BigInt d = boost::multiprecision::denominator(c.rat());
    den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, d) * d;
  }
  std::vector<BigInt> z(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    BigRat v = poly[i].rat() * BigRat(den_lcm);
    require(boost::multiprecision::denominator(v) == 1, "denominator clearing failed");
    z[i] = boost::multiprecision::numerator(v);
  }
  BigInt content = 0;
  for (const auto& c : z) content = boost::multiprecision::gcd(content, c);
  if (content > 1)
    for (auto& c : z) c /= content;

  std::vector<BigRat> roots;
  // A root 0 shows up as a vanishing constant term; squarefree input carries
  // it with multiplicity one.
  if (z[0] == 0) {
    roots.push_back(BigRat(0));
    z.erase(z.begin());
  }
  if (z.size() <= 1) return roots;

  BigInt bound_num = boost::multiprecision::abs(z.front());
  BigInt bound_den = boost::multiprecision::abs(z.back());
  BigInt target = 2 * (bound_num > bound_den ? bound_num : bound_den);
  target = target * target + 1;

  // Pick a prime that preserves degree and squarefreeness.
  std::uint64_t p = 0;
  std::vector<Scalar> fp_poly;
  for (std::uint64_t cand = 65537;; cand += 2) {
    if (!detail::is_prime_u64(cand)) continue;
    if (z.back() % cand == 0) continue;
    Field fp = Field::prime(cand);
    std::vector<Scalar> reduced(z.size(), fp.zero());
    for (std::size_t i = 0; i < z.size(); ++i)
      reduced[i] = Scalar::modular(detail::mod_of_bigint(z[i], cand), fp);
    uni::normalize(reduced);
    if (uni::degree(reduced) != static_cast<int>(z.size()) - 1) continue;
    auto g = uni::gcd(reduced, uni::derivative(reduced));
    if (uni::degree(g) != 0) continue;
    p = cand;
    fp_poly = std::move(reduced);
    break;
  }

  // Exhaustive roots in F_p, scanned with raw Horner evaluation.
  std::vector<std::uint64_t> zc(fp_poly.size());
  for (std::size_t i = 0; i < fp_poly.size(); ++i) zc[i] = fp_poly[i].residue();
  std::vector<std::uint64_t> modular_roots;
  for (std::uint64_t r = 0; r < p; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t i = zc.size(); i-- > 0;) {
      acc = (detail::mulmod_u64(acc, r, p) + zc[i]) % p;
      if (i == 0) break;
    }
    if (acc == 0) modular_roots.push_back(r);
  }

  auto eval_int = [&](const BigInt& x, const BigInt& mod) {
    BigInt r = 0;
    for (std::size_t i = z.size(); i-- > 0;) {
      r = (r * x + z[i]) % mod;
      if (i == 0) break;
    }
    if (r < 0) r += mod;
    return r;
  };
  auto eval_deriv_int = [&](const BigInt& x, const BigInt& mod) {
    BigInt r = 0;
    for (std::size_t i = z.size(); i-- > 1;) {
      r = (r * x + BigInt(i) * z[i]) % mod;
    }
    if (r < 0) r += mod;
    return r;
  };
  auto inv_mod = [](BigInt a, const BigInt& m) {
    BigInt t = 0, newt = 1, r = m, newr = a % m;
    if (newr < 0) newr += m;
    while (newr != 0) {
      BigInt q = r / newr;
      BigInt tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    require(r == 1, "Hensel direction not invertible");
    if (t < 0) t += m;
    return t;
  };

  for (std::uint64_t r0 : modular_roots) {
    // Newton lifting doubles the modulus each round.
    BigInt mod = p;
    BigInt r = r0;
    while (mod < target) {
      BigInt mod2 = mod * mod;
      BigInt fr = eval_int(r, mod2);
      BigInt dfr = eval_deriv_int(r, mod2);
      r = (r - fr * inv_mod(dfr, mod2)) % mod2;
      if (r < 0) r += mod2;
      mod = mod2;
    }
    // Rational reconstruction: find a/b with a = r b (mod m), |a| <= N, 0 < b <= D.
    BigInt u0 = mod, u1 = 0;
    BigInt v0 = r, v1 = 1;
    while (v0 > bound_num) {
      BigInt q = u0 / v0;
      BigInt t0 = u0 - q * v0, t1 = u1 - q * v1;
      u0 = v0;
      u1 = v1;
      v0 = t0;
      v1 = t1;
    }
    if (v1 == 0) continue;
    BigInt num = v0, den = v1;
    if (den < 0) {
      den = -den;
      num = -num;
    }
    if (den == 0 || den > bound_den) continue;
    BigRat cand(num, den);
    // Exact verification over the rationals.
    BigRat val = 0;
    for (std::size_t i = z.size(); i-- > 0;) {
      val = val * cand + BigRat(z[i]);
      if (i == 0) break;
    }
    if (val == 0) roots.push_back(cand);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace steiner
