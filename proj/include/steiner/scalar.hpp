#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>

#include "steiner/error.hpp"

namespace steiner {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs; the base set below is a proven
// witness set for n < 3.3e24.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DomainError("division by zero in F_p");
  __int128 t = 0, newt = 1;
  __int128 r = static_cast<__int128>(p), newr = static_cast<__int128>(a % p);
  while (newr != 0) {
    __int128 q = r / newr;
    __int128 tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw DomainError("non-invertible residue");
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

inline std::uint64_t mod_of_bigint(const BigInt& v, std::uint64_t p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

}  // namespace detail

class Scalar;

// The coefficient field: the rationals when p == 0, otherwise F_p for a fixed
// odd prime p < 2^62.  Values of different fields never mix silently.
struct Field {
  std::uint64_t p = 0;

  static Field rationals() { return Field{}; }

  static Field prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || p >= (1ull << 62) || !detail::is_prime_u64(p))
      throw DomainError("modulus must be an odd prime below 2^62");
    return Field{p};
  }

  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rat(const BigRat& v) const;
};

// One field element.  Rational values stay in lowest terms with positive
// denominator (the representation canonicalizes on every operation); modular
// values are residues in [0, p).
class Scalar {
 public:
  Scalar() : f_{}, r_(0) {}

  static Scalar rational(BigRat v) {
    Scalar s;
    s.q_ = std::move(v);
    return s;
  }

  static Scalar rational(long long num, long long den = 1) {
    if (den == 0) throw DomainError("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return rational(BigRat(BigInt(num), BigInt(den)));
  }

  static Scalar modular(std::uint64_t v, const Field& f) {
    require(!f.is_rational(), "modular scalar needs a prime field");
    Scalar s;
    s.f_ = f;
    s.r_ = v % f.p;
    return s;
  }

  const Field& field() const { return f_; }
  bool is_rational_field() const { return f_.is_rational(); }

  const BigRat& rat() const {
    require(f_.is_rational(), "rat() on a modular scalar");
    return q_;
  }

  std::uint64_t residue() const {
    require(!f_.is_rational(), "residue() on a rational scalar");
    return r_;
  }

  bool is_zero() const { return f_.is_rational() ? q_.is_zero() : r_ == 0; }
  bool is_one() const { return f_.is_rational() ? q_ == 1 : r_ == 1; }

  Scalar operator-() const {
    Scalar s = *this;
    if (f_.is_rational())
      s.q_ = -s.q_;
    else if (s.r_ != 0)
      s.r_ = f_.p - s.r_;
    return s;
  }

  Scalar& operator+=(const Scalar& o) {
    check(o);
    if (f_.is_rational()) {
      q_ += o.q_;
    } else {
      r_ += o.r_;
      if (r_ >= f_.p) r_ -= f_.p;
    }
    return *this;
  }

  Scalar& operator-=(const Scalar& o) {
    check(o);
    if (f_.is_rational()) {
      q_ -= o.q_;
    } else {
      r_ += f_.p - o.r_;
      if (r_ >= f_.p) r_ -= f_.p;
    }
    return *this;
  }

  Scalar& operator*=(const Scalar& o) {
    check(o);
    if (f_.is_rational())
      q_ *= o.q_;
    else
      r_ = detail::mulmod_u64(r_, o.r_, f_.p);
    return *this;
  }

  Scalar& operator/=(const Scalar& o) {
    check(o);
    if (o.is_zero()) throw DomainError("division by zero");
    if (f_.is_rational())
      q_ /= o.q_;
    else
      r_ = detail::mulmod_u64(r_, detail::invmod_u64(o.r_, f_.p), f_.p);
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    Scalar s = *this;
    if (f_.is_rational())
      s.q_ = BigRat(1) / q_;
    else
      s.r_ = detail::invmod_u64(r_, f_.p);
    return s;
  }

  bool operator==(const Scalar& o) const {
    check(o);
    return f_.is_rational() ? q_ == o.q_ : r_ == o.r_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // "num/den" in lowest terms, "num" when the denominator is 1; modular
  // values print as their residue.
  std::string str() const {
    if (!f_.is_rational()) return std::to_string(r_);
    BigInt num = boost::multiprecision::numerator(q_);
    BigInt den = boost::multiprecision::denominator(q_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }

 private:
  void check(const Scalar& o) const {
    if (f_ != o.f_) throw FieldMismatch("scalars from different fields");
  }

  Field f_;
  BigRat q_;
  std::uint64_t r_;
};

inline Scalar Field::zero() const {
  return is_rational() ? Scalar::rational(0) : Scalar::modular(0, *this);
}

inline Scalar Field::one() const {
  return is_rational() ? Scalar::rational(1) : Scalar::modular(1, *this);
}

inline Scalar Field::from_int(long long v) const {
  if (is_rational()) return Scalar::rational(v);
  BigInt b(v);
  return Scalar::modular(detail::mod_of_bigint(b, p), *this);
}

inline Scalar Field::from_rat(const BigRat& v) const {
  if (is_rational()) return Scalar::rational(v);
  std::uint64_t den = detail::mod_of_bigint(boost::multiprecision::denominator(v), p);
  if (den == 0) throw DomainError("denominator divisible by the modulus");
  std::uint64_t num = detail::mod_of_bigint(boost::multiprecision::numerator(v), p);
  return Scalar::modular(detail::mulmod_u64(num, detail::invmod_u64(den, p), p), *this);
}

// Strict rational grammar: -?digits(/digits)?, denominator nonzero.  This is
// the only accepted number syntax in files and CLI arguments.
inline BigRat parse_rational(const std::string& s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  auto digits = [&](BigInt& out) {
    std::size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == start) throw ParseError("expected digits in rational '" + s + "'");
    out = BigInt(s.substr(start, i - start));
  };
  BigInt num, den = 1;
  digits(num);
  if (i < s.size() && s[i] == '/') {
    ++i;
    digits(den);
    if (den == 0) throw ParseError("zero denominator in rational '" + s + "'");
  }
  if (i != s.size()) throw ParseError("trailing characters in rational '" + s + "'");
  BigRat q(num, den);
  if (neg) q = -q;
  return q;
}

inline std::string rational_str(const BigRat& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline bool rat_less(const BigRat& a, const BigRat& b) { return a < b; }

}  // namespace steiner
