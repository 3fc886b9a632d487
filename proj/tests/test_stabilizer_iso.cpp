#include <catch2/catch_amalgamated.hpp>

#include "steiner/iso.hpp"
#include "steiner/random_gen.hpp"
#include "steiner/stabilizer.hpp"

using namespace steiner;

namespace {

BoundaryFormat fmt(std::initializer_list<std::size_t> dims) {
  return validate_format(std::vector<std::size_t>(dims));
}

Scalar Q(long long n, long long d = 1) { return Scalar::rational(n, d); }

ExactMatrix diag(std::initializer_list<long long> values) {
  std::vector<long long> v(values);
  ExactMatrix m(v.size(), v.size(), Field::rationals());
  for (std::size_t i = 0; i < v.size(); ++i) m.at(i, i) = Q(v[i]);
  return m;
}

// The intertwiner equations, checked cell by cell.
bool intertwines(const BoundaryTensor& a, const BoundaryTensor& b, const ExactMatrix& pw,
                 const ExactMatrix& pi) {
  const auto& dims = a.format().dims;
  for (std::size_t j0 = 0; j0 < dims[0]; ++j0)
    for (std::size_t v = 0; v < dims[1]; ++v)
      for (std::size_t ip = 0; ip < dims[2]; ++ip) {
        Scalar lhs = a.field().zero(), rhs = a.field().zero();
        for (std::size_t i = 0; i < dims[2]; ++i) lhs += pi.at(ip, i) * a.at3(j0, v, i);
        for (std::size_t m = 0; m < dims[0]; ++m) rhs += b.at3(m, v, ip) * pw.at(m, j0);
        if (lhs != rhs) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("minimal polynomials come out monic and ascending") {
  CHECK(minimal_polynomial(diag({1, 2})) == std::vector<Scalar>{Q(2), Q(-3), Q(1)});
  CHECK(minimal_polynomial(ExactMatrix::identity(3, Field::rationals())) ==
        std::vector<Scalar>{Q(-1), Q(1)});
  CHECK(minimal_polynomial(ExactMatrix(2, 2, Field::rationals())) ==
        std::vector<Scalar>{Q(0), Q(1)});

  ExactMatrix j2(2, 2, Field::rationals());
  j2.at(0, 1) = Q(1);
  CHECK(minimal_polynomial(j2) == std::vector<Scalar>{Q(0), Q(0), Q(1)});

  // Derogatory matrix: the minimal polynomial is strictly smaller than the
  // characteristic one.
  CHECK(minimal_polynomial(diag({3, 3, 3})) == std::vector<Scalar>{Q(-3), Q(1)});
}

TEST_CASE("one-dimensional generators split into torus, additive, and anomaly") {
  std::vector<BigRat> w;
  CHECK(classify_generator(diag({-2, 0, 2}), w) == StabilizerType::Multiplicative);
  CHECK(w == std::vector<BigRat>{-2, 0, 2});

  w.clear();
  CHECK(classify_generator(diag({2, -1, -1}), w) == StabilizerType::Multiplicative);
  CHECK(w == std::vector<BigRat>{-1, -1, 2});

  ExactMatrix j3(3, 3, Field::rationals());
  j3.at(0, 1) = Q(1);
  j3.at(1, 2) = Q(1);
  w.clear();
  CHECK(classify_generator(j3, w) == StabilizerType::Additive);

  // Neither semisimple nor nilpotent.
  ExactMatrix mixed = diag({1, 1, -2});
  mixed.at(0, 1) = Q(1);
  w.clear();
  CHECK(classify_generator(mixed, w) == StabilizerType::Anomaly);
}

TEST_CASE("the identity tensor is stabilized by a three-dimensional algebra") {
  for (auto dims : {std::vector<std::size_t>{3, 2, 2}, {4, 3, 2}, {5, 3, 3}}) {
    StabilizerReport rep = stabilizer_algebra(make_identity(validate_format(dims)));
    INFO("dims " << dims[0] << "," << dims[1] << "," << dims[2]);
    CHECK(rep.dimension == 3);
    CHECK(rep.type == StabilizerType::SL2);
    CHECK(rep.lambda.is_zero());
  }
}

TEST_CASE("a generic diagonal tensor keeps exactly the canonical torus") {
  StabilizerReport rep = stabilizer_algebra(random_diagonal(fmt({5, 3, 3}), 5));
  CHECK(rep.dimension == 1);
  CHECK(rep.type == StabilizerType::Multiplicative);
  CHECK(rep.lambda.is_zero());
  REQUIRE(rep.v_weights.size() == 3);
  CHECK(rep.v_weights[1] == 0);
  CHECK(rep.v_weights[0] == -rep.v_weights[2]);
  CHECK(rep.v_weights[2] > 0);
}

TEST_CASE("generic tensors have trivial stabilizer") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    StabilizerReport rep = stabilizer_algebra(random_nondegenerate(fmt({5, 3, 3}), seed));
    CHECK(rep.dimension == 0);
    CHECK(rep.type == StabilizerType::Trivial);
  }
}

TEST_CASE("stabilizer analysis rejects degenerate and non-ternary input") {
  CHECK_THROWS_AS(stabilizer_algebra(degenerate_pattern_tensor(fmt({3, 2, 2}), {1, 0}, 1)),
                  DegenerateTensor);
  CHECK_THROWS_AS(stabilizer_algebra(make_identity(fmt({4, 2, 2, 2}))), DomainError);
}

TEST_CASE("every tensor intertwines with itself by scalars") {
  BoundaryTensor a = random_nondegenerate(fmt({4, 3, 2}), 1);
  IsoReport rep = iso_test(a, a);
  CHECK(rep.verdict == IsoVerdict::Iso);
  CHECK(rep.hom_dimension == 1);
  Scalar c = rep.phi_w.at(0, 0);
  CHECK_FALSE(c.is_zero());
  CHECK(rep.phi_w == ExactMatrix::identity(4, a.field()).scaled(c));
  CHECK(rep.phi_i == ExactMatrix::identity(2, a.field()).scaled(c));
}

TEST_CASE("basis changes away from the middle factor preserve the kernel") {
  BoundaryTensor a = random_nondegenerate(fmt({4, 3, 2}), 2);
  std::vector<ExactMatrix> g{random_invertible(4, 10), ExactMatrix::identity(3, a.field()),
                             random_invertible(2, 11)};
  BoundaryTensor b = apply_group_element(a, g);
  IsoReport rep = iso_test(a, b);
  REQUIRE(rep.verdict == IsoVerdict::Iso);
  CHECK(intertwines(a, b, rep.phi_w, rep.phi_i));

  IsoReport back = iso_test(b, a);
  CHECK(back.verdict == IsoVerdict::Iso);
  CHECK(intertwines(b, a, back.phi_w, back.phi_i));
}

TEST_CASE("independent generic draws on the plane are not isomorphic") {
  BoundaryTensor a = random_nondegenerate(fmt({4, 3, 2}), 1);
  BoundaryTensor b = random_nondegenerate(fmt({4, 3, 2}), 2);
  IsoReport rep = iso_test(a, b);
  CHECK(rep.verdict == IsoVerdict::NotIso);
  CHECK(rep.hom_dimension == 0);
}

TEST_CASE("on the line all nondegenerate tensors present the same kernel") {
  // The pencil normal form has a single constant-rank orbit, so any two
  // nondegenerate draws intertwine invertibly.
  BoundaryTensor a = random_nondegenerate(fmt({3, 2, 2}), 1);
  BoundaryTensor b = random_nondegenerate(fmt({3, 2, 2}), 2);
  IsoReport rep = iso_test(a, b);
  REQUIRE(rep.verdict == IsoVerdict::Iso);
  CHECK(intertwines(a, b, rep.phi_w, rep.phi_i));
  CHECK(iso_test(a, make_identity(fmt({3, 2, 2}))).verdict == IsoVerdict::Iso);
}

TEST_CASE("moving the middle factor moves the kernel off itself") {
  BoundaryTensor a = random_nondegenerate(fmt({4, 3, 2}), 3);
  std::vector<ExactMatrix> g{ExactMatrix::identity(4, a.field()), random_invertible(3, 12),
                             ExactMatrix::identity(2, a.field())};
  IsoReport rep = iso_test(a, apply_group_element(a, g));
  CHECK(rep.verdict == IsoVerdict::NotIso);
}

TEST_CASE("the isomorphism test validates its inputs") {
  BoundaryTensor a = random_nondegenerate(fmt({3, 2, 2}), 1);
  BoundaryTensor b = random_nondegenerate(fmt({4, 3, 2}), 1);
  CHECK_THROWS_AS(iso_test(a, b), DomainError);
  CHECK_THROWS_AS(iso_test(a, degenerate_pattern_tensor(fmt({3, 2, 2}), {1, 0}, 1)),
                  DegenerateTensor);
  BoundaryTensor fp = random_tensor(fmt({3, 2, 2}), 1, -9, 9, Field::prime(65537));
  CHECK_THROWS_AS(iso_test(a, fp), FieldMismatch);
}
