#include <catch2/catch_amalgamated.hpp>

#include "steiner/bundle.hpp"
#include "steiner/random_gen.hpp"
#include "steiner/unstable.hpp"

using namespace steiner;

namespace {

BoundaryFormat fmt(std::initializer_list<std::size_t> dims) {
  return BoundaryFormat{std::vector<std::size_t>(dims)};
}

Poly P(const std::string& s, const std::vector<std::string>& names) {
  return parse_poly(s, names);
}

}  // namespace

TEST_CASE("hyperplane normalization") {
  Hyperplane h = Hyperplane::of({BigRat(0), BigRat(3), BigRat(-6)});
  CHECK(h.xi == std::vector<BigRat>{BigRat(0), BigRat(1), BigRat(-2)});

  Hyperplane same = Hyperplane::of({BigRat(0), BigRat(-1, 2), BigRat(1)});
  CHECK(h == same);
  CHECK(h != Hyperplane::of({BigRat(1), BigRat(0), BigRat(0)}));

  CHECK_THROWS_AS(Hyperplane::of({BigRat(0), BigRat(0)}), DomainError);
}

TEST_CASE("presentation matrix of the multiplication tensor") {
  auto names = default_names(2);

  // Two factors of binary forms: rows shift the variables one step.
  PolyMatrix m = presentation_matrix(make_identity(fmt({4, 2, 3})));
  REQUIRE(m.rows == 3);
  REQUIRE(m.cols == 4);
  const char* expect[3][4] = {{"x0", "x1", "0", "0"},
                              {"0", "x0", "x1", "0"},
                              {"0", "0", "x0", "x1"}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t w = 0; w < 4; ++w) CHECK(m.at(i, w) == P(expect[i][w], names));

  PolyMatrix m2 = presentation_matrix(make_identity(fmt({3, 2, 2})));
  REQUIRE(m2.rows == 2);
  REQUIRE(m2.cols == 3);
  CHECK(m2.at(0, 0) == P("x0", names));
  CHECK(m2.at(0, 2) == P("0", names));
  CHECK(m2.at(1, 2) == P("x1", names));
}

TEST_CASE("minor-ideal nondegeneracy agrees with the certificate") {
  for (auto dims : {std::vector<std::size_t>{3, 2, 2}, std::vector<std::size_t>{4, 3, 2},
                    std::vector<std::size_t>{4, 2, 3}}) {
    BoundaryFormat f{dims};
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      BoundaryTensor a = random_tensor(f, seed);
      CAPTURE(dims, seed);
      CHECK(nondegenerate_by_minors(a) == !hyperdet_certificate(a).is_zero());
    }
  }

  // Structurally degenerate tensors fail both routes.
  BoundaryFormat f{{4, 3, 2}};
  BoundaryTensor bad = degenerate_pattern_tensor(f, {1, 0}, 11);
  CHECK(hyperdet_certificate(bad).is_zero());
  CHECK_FALSE(nondegenerate_by_minors(bad));
}

TEST_CASE("sampled rank probe") {
  CHECK(constant_rank_sampled(make_identity(fmt({3, 2, 2}))));
  CHECK(constant_rank_sampled(make_identity(fmt({5, 3, 3}))));
  CHECK(constant_rank_sampled(random_nondegenerate(fmt({4, 3, 2}), 5)));

  // A tensor whose second presentation row doubles the first drops rank
  // everywhere, which sampling does notice.
  BoundaryTensor flat(fmt({3, 2, 2}), Field::rationals());
  SplitMix64 rng(17);
  Field f = Field::rationals();
  for (std::size_t w = 0; w < 3; ++w)
    for (std::size_t v = 0; v < 2; ++v) {
      flat.at3(w, v, 0) = f.from_int(rng.uniform(1, 9));
      flat.at3(w, v, 1) = flat.at3(w, v, 0) + flat.at3(w, v, 0);
    }
  CHECK_FALSE(constant_rank_sampled(flat));
  CHECK(hyperdet_certificate(flat).is_zero());
}

TEST_CASE("bundle creation guards") {
  CHECK_THROWS_AS(SteinerBundle::create(degenerate_pattern_tensor(fmt({3, 2, 2}), {1, 0}, 3)),
                  DegenerateTensor);
  CHECK_THROWS_AS(SteinerBundle::create(make_identity(fmt({4, 2, 2, 2}))), DomainError);
  // A one-dimensional middle factor leaves no base space.
  CHECK_THROWS_AS(SteinerBundle::create(make_identity(fmt({2, 1, 2}))), DomainError);

  SteinerBundle s = schwarzenberger(2, 3);
  CHECK(s.n() == 2);
  CHECK(s.k() == 3);
  CHECK(s.tensor() == make_identity(fmt({5, 3, 3})));
}

TEST_CASE("quotient pairing of small multiplication bundles") {
  auto y2 = default_names(2, 'y');
  PolyMatrix b1 = schwarzenberger(1, 2).quotient_pairing();
  REQUIRE(b1.rows == 1);
  REQUIRE(b1.cols == 2);
  CHECK(b1.at(0, 0) == P("y1", y2));
  CHECK(b1.at(0, 1) == P("-y0", y2));

  auto y3 = default_names(3, 'y');
  PolyMatrix b2 = schwarzenberger(2, 2).quotient_pairing();
  REQUIRE(b2.rows == 2);
  REQUIRE(b2.cols == 2);
  CHECK(b2.at(0, 0) == P("y1", y3));
  CHECK(b2.at(0, 1) == P("-y0", y3));
  CHECK(b2.at(1, 0) == P("y2", y3));
  CHECK(b2.at(1, 1) == P("-y1", y3));

  // Its determinant is the dual conic through the moment points.
  Poly det = poly_det(b2, {0, 1}, {0, 1});
  CHECK(det == P("-y1^2 + y0*y2", y3));
}

TEST_CASE("quotient pairing shape for a plain bundle") {
  SteinerBundle s = SteinerBundle::create(random_nondegenerate(fmt({5, 3, 3}), 2));
  PolyMatrix b = s.quotient_pairing();
  CHECK(b.rows == 4);  // n(k-1)
  CHECK(b.cols == 3);
  for (const Poly& e : b.entries) CHECK(e.degree() <= 1);
}

TEST_CASE("normal crossing detection") {
  auto line = [](long a, long b, long c) {
    return Hyperplane::of({BigRat(a), BigRat(b), BigRat(c)});
  };
  std::vector<Hyperplane> good = {line(1, 0, 0), line(0, 1, 0), line(0, 0, 1),
                                  line(1, 1, 1), line(1, 2, 3)};
  CHECK(is_normal_crossing(good));

  std::vector<Hyperplane> bad = {line(1, 0, 0), line(0, 1, 0), line(1, 1, 0),
                                 line(0, 0, 1), line(1, 2, 3)};
  CHECK_FALSE(is_normal_crossing(bad));
  CHECK_THROWS_AS(check_normal_crossing(bad), NotNormalCrossing);

  // Fewer hyperplanes than the ambient dimension: every subset must still be
  // independent.
  CHECK(is_normal_crossing({line(1, 0, 0), line(0, 1, 0)}));
  CHECK_FALSE(is_normal_crossing({line(1, 0, 0), line(2, 0, 0)}));
}

TEST_CASE("arrangement bundle construction") {
  auto line = [](long a, long b, long c) {
    return Hyperplane::of({BigRat(a), BigRat(b), BigRat(c)});
  };
  std::vector<Hyperplane> six = {line(1, 0, 0), line(0, 1, 0), line(0, 0, 1),
                                 line(1, 1, 1), line(1, 2, 3), line(1, 4, 9)};
  SteinerBundle s = logarithmic(six);
  CHECK(s.n() == 2);
  CHECK(s.k() == 3);

  std::vector<Hyperplane> five(six.begin(), six.begin() + 5);
  SteinerBundle s5 = logarithmic(five);
  CHECK(s5.n() == 2);
  CHECK(s5.k() == 2);

  CHECK_THROWS_AS(logarithmic({line(1, 0, 0), line(0, 1, 0), line(0, 0, 1)}), DomainError);
  std::vector<Hyperplane> dependent = {line(1, 0, 0), line(0, 1, 0), line(1, 1, 0),
                                       line(0, 0, 1), line(1, 2, 3)};
  CHECK_THROWS_AS(logarithmic(dependent), NotNormalCrossing);
}

TEST_CASE("membership on the dual conic") {
  SteinerBundle s = schwarzenberger(2, 2);
  auto pt = [](long a, long b, long c) {
    return Hyperplane::of({BigRat(a), BigRat(b), BigRat(c)});
  };

  // Unstable hyperplanes are exactly the points of y0*y2 = y1^2.
  for (auto& h : {pt(1, 0, 0), pt(0, 0, 1), pt(1, 1, 1), pt(1, 2, 4), pt(4, -2, 1)}) {
    MembershipReport m = is_member(s, h);
    CAPTURE(h.xi);
    CHECK(m.member);
    CHECK(m.h0 == 1);
  }
  for (auto& h : {pt(1, 1, 0), pt(0, 1, 0), pt(1, 0, 1)}) {
    MembershipReport m = is_member(s, h);
    CAPTURE(h.xi);
    CHECK_FALSE(m.member);
    CHECK(m.h0 == 0);
  }
}

TEST_CASE("membership witness factors the slice") {
  SteinerBundle s = schwarzenberger(2, 2);
  Hyperplane h = Hyperplane::of({BigRat(1), BigRat(2), BigRat(4)});
  MembershipReport m = is_member(s, h);
  REQUIRE(m.member);
  REQUIRE(m.witness_w.size() == 4);
  REQUIRE(m.witness_u.size() == 2);

  Field f = s.field();
  ExactMatrix am = slice_matrix(s.tensor());
  bool nonzero = false;
  for (std::size_t r = 0; r < am.rows(); ++r) {
    Scalar z = f.zero();
    for (std::size_t w = 0; w < am.cols(); ++w) z += am.at(r, w) * m.witness_w[w];
    std::size_t v = r / 2, i = r % 2;
    CHECK(z == f.from_rat(h.xi[v]) * m.witness_u[i]);
    if (!z.is_zero()) nonzero = true;
  }
  CHECK(nonzero);
}

TEST_CASE("membership wrong-space guard") {
  SteinerBundle s = schwarzenberger(2, 2);
  CHECK_THROWS_AS(is_member(s, Hyperplane::of({BigRat(1), BigRat(1)})), DomainError);
}

TEST_CASE("section dimensions across twists") {
  // Sections of the kernel bundle appear exactly from twist k on; the twist
  // k-1 count is the nondegeneracy certificate itself.
  SteinerBundle s2 = schwarzenberger(2, 2);
  CHECK(sections_dim(s2, 0) == 0);
  CHECK(sections_dim(s2, 1) == 0);
  CHECK(sections_dim(s2, 2) > 0);

  SteinerBundle s3 = SteinerBundle::create(random_nondegenerate(fmt({5, 3, 3}), 9));
  CHECK(sections_dim(s3, 0) == 0);
  CHECK(sections_dim(s3, 1) == 0);
  CHECK(sections_dim(s3, 2) == 0);
  CHECK(sections_dim(s3, 3) > 0);
}
