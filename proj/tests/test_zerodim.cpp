#include <catch_amalgamated.hpp>

#include "steiner/zerodim.hpp"

using namespace steiner;

namespace {

const std::vector<std::string> kXY = {"x", "y"};

GroebnerBasis ideal(const std::vector<std::string>& polys,
                    const std::vector<std::string>& names = kXY) {
  std::vector<Poly> gens;
  for (const auto& s : polys) gens.push_back(parse_poly(s, names));
  return buchberger(gens, MonomialOrder::Grevlex);
}

}  // namespace

TEST_CASE("quotient algebra of a fat origin") {
  auto q = quotient_algebra(ideal({"x^2", "y"}));
  REQUIRE(q.standard.size() == 2);
  CHECK(q.standard[0].e == std::vector<unsigned>{0, 0});
  CHECK(q.standard[1].e == std::vector<unsigned>{1, 0});
  REQUIRE(q.mult.size() == 2);
  // Multiplication by x sends 1 -> x -> 0; multiplication by y kills everything.
  CHECK(q.mult[0].at(0, 0).is_zero());
  CHECK(q.mult[0].at(1, 0).str() == "1");
  CHECK(q.mult[0].at(0, 1).is_zero());
  CHECK(q.mult[0].at(1, 1).is_zero());
  CHECK(q.mult[1].is_zero());
}

TEST_CASE("positive-dimensional ideals are refused") {
  CHECK_THROWS_AS(quotient_algebra(ideal({"x*y"})), DomainError);
  CHECK_THROWS_AS(zero_dim_solve(ideal({"x"})), DomainError);
}

TEST_CASE("empty variety reports zero length") {
  auto rep = zero_dim_solve(ideal({"x - 1", "x - 2"}));
  CHECK(rep.length == 0);
  CHECK(rep.points.empty());
  CHECK(rep.residual.empty());
}

TEST_CASE("double point at the origin") {
  auto rep = zero_dim_solve(ideal({"x^2", "y"}));
  CHECK(rep.length == 2);
  REQUIRE(rep.points.size() == 1);
  CHECK(rep.points[0].coords == std::vector<BigRat>{BigRat(0), BigRat(0)});
  CHECK(rep.points[0].mult == 2);
  CHECK(rep.residual.empty());
  REQUIRE(rep.standard_monomials.size() == 2);
  CHECK(rep.standard_monomials[1].e == std::vector<unsigned>{1, 0});
}

TEST_CASE("two simple points on a line") {
  auto rep = zero_dim_solve(ideal({"x^2 - 3*x + 2", "y - x"}));
  CHECK(rep.length == 2);
  REQUIRE(rep.points.size() == 2);
  CHECK(rep.points[0].coords == std::vector<BigRat>{BigRat(1), BigRat(1)});
  CHECK(rep.points[0].mult == 1);
  CHECK(rep.points[1].coords == std::vector<BigRat>{BigRat(2), BigRat(2)});
  CHECK(rep.points[1].mult == 1);
  CHECK(rep.residual.empty());
}

TEST_CASE("irrational pairs land in the residual") {
  auto rep = zero_dim_solve(ideal({"x^2 - 2", "y"}));
  CHECK(rep.length == 2);
  CHECK(rep.points.empty());
  REQUIRE(rep.residual.size() == 1);
  CHECK(rep.residual[0] == std::pair<std::size_t, unsigned>{2, 1});
}

TEST_CASE("rational and irrational parts split cleanly") {
  auto gb = ideal({"x^3 - x^2 - 2*x + 2", "y"});  // (x^2 - 2)(x - 1), y
  auto rep = zero_dim_solve(gb);
  CHECK(rep.length == 3);
  REQUIRE(rep.points.size() == 1);
  CHECK(rep.points[0].coords == std::vector<BigRat>{BigRat(1), BigRat(0)});
  CHECK(rep.points[0].mult == 1);
  REQUIRE(rep.residual.size() == 1);
  CHECK(rep.residual[0] == std::pair<std::size_t, unsigned>{2, 1});
}

TEST_CASE("affine solve is independent of the seed") {
  auto gb = ideal({"x^3 - x^2 - 2*x + 2", "y"});
  auto base = zero_dim_solve(gb, 0);
  for (std::uint64_t seed : {1ull, 77ull, 12345ull}) {
    auto rep = zero_dim_solve(gb, seed);
    CHECK(rep.length == base.length);
    REQUIRE(rep.points.size() == base.points.size());
    for (std::size_t i = 0; i < rep.points.size(); ++i) {
      CHECK(rep.points[i].coords == base.points[i].coords);
      CHECK(rep.points[i].mult == base.points[i].mult);
    }
    CHECK(rep.residual == base.residual);
  }
}

TEST_CASE("projective pair of coordinate points") {
  auto gb = ideal({"x0*x1"}, {"x0", "x1"});
  auto rep = projective_length(gb, 5);
  CHECK(!rep.infinite);
  CHECK(rep.length == 2);
  CHECK(rep.seed == 5);
  REQUIRE(rep.points.size() == 2);
  CHECK(rep.points[0].y == std::vector<BigRat>{BigRat(0), BigRat(1)});
  CHECK(rep.points[0].mult == 1);
  CHECK(rep.points[1].y == std::vector<BigRat>{BigRat(1), BigRat(0)});
  CHECK(rep.points[1].mult == 1);
  CHECK(rep.residual.empty());
}

TEST_CASE("projective double point") {
  auto rep = projective_length(ideal({"x0^2"}, {"x0", "x1"}));
  CHECK(rep.length == 2);
  REQUIRE(rep.points.size() == 1);
  CHECK(rep.points[0].y == std::vector<BigRat>{BigRat(0), BigRat(1)});
  CHECK(rep.points[0].mult == 2);
}

TEST_CASE("projective mixed multiplicities survive the chart check") {
  auto rep = projective_length(ideal({"x0^2*x1"}, {"x0", "x1"}));
  CHECK(rep.length == 3);
  REQUIRE(rep.points.size() == 2);
  CHECK(rep.points[0].y == std::vector<BigRat>{BigRat(0), BigRat(1)});
  CHECK(rep.points[0].mult == 2);
  CHECK(rep.points[1].y == std::vector<BigRat>{BigRat(1), BigRat(0)});
  CHECK(rep.points[1].mult == 1);
}

TEST_CASE("projective conjugate pair is counted but not listed") {
  auto rep = projective_length(ideal({"x1^2 - 2*x0^2"}, {"x0", "x1"}));
  CHECK(!rep.infinite);
  CHECK(rep.length == 2);
  CHECK(rep.points.empty());
  REQUIRE(rep.residual.size() == 1);
  CHECK(rep.residual[0].first == 2);
}

TEST_CASE("three coordinate points in the plane") {
  auto gb = ideal({"x0*x1", "x0*x2", "x1*x2"}, {"x0", "x1", "x2"});
  auto rep = projective_length(gb, 3);
  CHECK(rep.length == 3);
  REQUIRE(rep.points.size() == 3);
  CHECK(rep.points[0].y == std::vector<BigRat>{BigRat(0), BigRat(0), BigRat(1)});
  CHECK(rep.points[1].y == std::vector<BigRat>{BigRat(0), BigRat(1), BigRat(0)});
  CHECK(rep.points[2].y == std::vector<BigRat>{BigRat(1), BigRat(0), BigRat(0)});
  for (const auto& p : rep.points) CHECK(p.mult == 1);
}

TEST_CASE("positive-dimensional schemes are flagged infinite") {
  auto hyperplane = projective_length(ideal({"x0"}, {"x0", "x1", "x2"}));
  CHECK(hyperplane.infinite);
  auto conic = projective_length(ideal({"x0*x2 - x1^2"}, {"x0", "x1", "x2"}));
  CHECK(conic.infinite);
}

TEST_CASE("empty projective scheme") {
  auto rep = projective_length(ideal({"x0", "x1"}, {"x0", "x1"}));
  CHECK(!rep.infinite);
  CHECK(rep.length == 0);
  CHECK(rep.points.empty());
}

TEST_CASE("projective solve is independent of the seed") {
  auto gb = ideal({"x0*x1", "x0*x2", "x1*x2"}, {"x0", "x1", "x2"});
  auto base = projective_length(gb, 0);
  for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
    auto rep = projective_length(gb, seed);
    CHECK(rep.infinite == base.infinite);
    CHECK(rep.length == base.length);
    REQUIRE(rep.points.size() == base.points.size());
    for (std::size_t i = 0; i < rep.points.size(); ++i) {
      CHECK(rep.points[i].y == base.points[i].y);
      CHECK(rep.points[i].mult == base.points[i].mult);
    }
  }
}
