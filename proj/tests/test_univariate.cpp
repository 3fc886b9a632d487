#include <catch_amalgamated.hpp>

#include "steiner/univariate.hpp"

using namespace steiner;

namespace {

// Ascending coefficients from integers.
std::vector<Scalar> U(const std::vector<long long>& c) {
  std::vector<Scalar> out;
  out.reserve(c.size());
  for (long long x : c) out.push_back(Scalar::rational(x));
  uni::normalize(out);
  return out;
}

std::vector<Scalar> linear_root(long long num, long long den) {
  // den*x - num, the monic-free model of the root num/den.
  return U({-num, den});
}

}  // namespace

TEST_CASE("univariate division recovers quotient and remainder") {
  // x^3 - 1 = (x - 1)(x^2 + x + 1).
  auto [q, r] = uni::divmod(U({-1, 0, 0, 1}), U({-1, 1}));
  CHECK(q == U({1, 1, 1}));
  CHECK(r.empty());

  // x^3 + 2x + 5 divided by x^2 + 1: quotient x, remainder x + 5.
  auto [q2, r2] = uni::divmod(U({5, 2, 0, 1}), U({1, 0, 1}));
  CHECK(q2 == U({0, 1}));
  CHECK(r2 == U({5, 1}));

  // Multiply back: a = q b + r as a property.
  auto a = U({3, -7, 0, 2, 1});
  auto b = U({2, 0, 1});
  auto [q3, r3] = uni::divmod(a, b);
  CHECK(uni::add(uni::mul(q3, b), r3) == a);
}

TEST_CASE("gcd and lcm are monic and divide correctly") {
  // gcd(x^2 - 1, x^3 - 1) = x - 1.
  auto g = uni::gcd(U({-1, 0, 1}), U({-1, 0, 0, 1}));
  CHECK(g == U({-1, 1}));
  // Coprime pair.
  CHECK(uni::gcd(U({1, 0, 1}), U({-2, 1})) == U({1}));
  // lcm(x-1, (x-1)(x+1)) = x^2 - 1.
  CHECK(uni::lcm(U({-1, 1}), U({-1, 0, 1})) == U({-1, 0, 1}));
}

TEST_CASE("derivative and evaluation") {
  auto p = U({5, 0, -3, 1});  // x^3 - 3x^2 + 5
  CHECK(uni::derivative(p) == U({0, -6, 3}));
  CHECK(uni::eval(p, Scalar::rational(2)).str() == "1");
  CHECK(uni::eval(p, Scalar::rational(1, 2)).str() == "35/8");
}

TEST_CASE("squarefree decomposition separates multiplicities") {
  // f = x (x - 1)^2 (x + 2)^3.
  auto f = U({0, 1});
  for (int i = 0; i < 2; ++i) f = uni::mul(f, U({-1, 1}));
  for (int i = 0; i < 3; ++i) f = uni::mul(f, U({2, 1}));
  auto parts = uni::squarefree_decomposition(f);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].first == U({0, 1}));
  CHECK(parts[0].second == 1);
  CHECK(parts[1].first == U({-1, 1}));
  CHECK(parts[1].second == 2);
  CHECK(parts[2].first == U({2, 1}));
  CHECK(parts[2].second == 3);

  // Already squarefree input comes back whole.
  auto sf = uni::squarefree_decomposition(U({-2, 0, 1}));
  REQUIRE(sf.size() == 1);
  CHECK(sf[0].first == U({-2, 0, 1}));
  CHECK(sf[0].second == 1);

  // A constant has no nontrivial part.
  CHECK(uni::squarefree_decomposition(U({7})).empty());
}

TEST_CASE("rational roots of squarefree polynomials") {
  // (2x - 1)(x + 3)(x - 5).
  auto f = uni::mul(uni::mul(linear_root(1, 2), linear_root(-3, 1)), linear_root(5, 1));
  auto roots = rational_roots_squarefree(f);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == BigRat(-3));
  CHECK(roots[1] == BigRat(1, 2));
  CHECK(roots[2] == BigRat(5));

  // Zero root travels through the constant-term shortcut.
  auto g = uni::mul(U({0, 1}), linear_root(3, 1));
  auto roots_g = rational_roots_squarefree(g);
  REQUIRE(roots_g.size() == 2);
  CHECK(roots_g[0] == BigRat(0));
  CHECK(roots_g[1] == BigRat(3));

  // Irrational factors contribute nothing.
  auto h = uni::mul(U({-2, 0, 1}), linear_root(2, 1));  // (x^2 - 2)(x - 2)
  auto roots_h = rational_roots_squarefree(h);
  REQUIRE(roots_h.size() == 1);
  CHECK(roots_h[0] == BigRat(2));
  CHECK(rational_roots_squarefree(U({-2, 0, 1})).empty());
  CHECK(rational_roots_squarefree(U({1, 0, 1})).empty());

  // Fractional coefficients and a root needing the lifting loop.
  auto big = uni::mul(linear_root(22, 7), U({-2, 0, 1}));
  auto scaled = uni::scale(big, Scalar::rational(1, 6));
  auto roots_big = rational_roots_squarefree(scaled);
  REQUIRE(roots_big.size() == 1);
  CHECK(roots_big[0] == BigRat(22, 7));

  // Large coprime numerator and denominator.
  auto wide = uni::mul(linear_root(1000003, 999983), linear_root(-4, 9));
  auto roots_wide = rational_roots_squarefree(wide);
  REQUIRE(roots_wide.size() == 2);
  CHECK(roots_wide[0] == BigRat(-4, 9));
  CHECK(roots_wide[1] == BigRat(1000003, 999983));
}
