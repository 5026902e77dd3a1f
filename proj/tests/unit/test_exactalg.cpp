#include "doctest.h"
#include "hksym/quaternion.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace hksym;

namespace {
const Field q3 = Field::quadratic(3);
const Scalar r3 = Scalar::sqrt(q3);
}  // namespace

TEST_CASE("scalar arithmetic in Q(sqrt3)") {
  CHECK(r3 * r3 == Scalar(3));
  CHECK((Scalar(1) + r3) * (Scalar(1) - r3) == Scalar(-2));
  const Scalar x = Scalar(2) + r3;
  CHECK(x * x.inverse() == Scalar(1));
  CHECK((x / x) == Scalar(1));
  CHECK(Scalar::fraction(6, -4) == Scalar::fraction(-3, 2));
  CHECK((Scalar::fraction(1, 2) + Scalar::fraction(1, 3)).to_string() == "5/6");
  CHECK(r3.field() == q3);
  CHECK((r3 * r3).is_rational());
}

TEST_CASE("scalar signs are exact") {
  // 7 - 4 sqrt3 = 0.0717...
  CHECK((Scalar(7) - Scalar(4) * r3).sign() == 1);
  CHECK((Scalar(-7) + Scalar(4) * r3).sign() == -1);
  CHECK((r3 - Scalar::fraction(17, 10)).sign() == 1);
  CHECK((r3 - Scalar::fraction(7, 4)).sign() == -1);
  CHECK(Scalar().sign() == 0);
  CHECK(Scalar::fraction(-1, 3) < Scalar());
  CHECK(r3 > Scalar::fraction(173, 100));
}

TEST_CASE("fields") {
  CHECK_THROWS_AS(Field::quadratic(4), std::invalid_argument);
  CHECK_THROWS_AS(Field::quadratic(1), std::invalid_argument);
  CHECK(Field::quadratic(6).radicand() == 6);
  const Scalar r2 = Scalar::sqrt(Field::quadratic(2));
  CHECK_THROWS_AS(r2 + r3, FieldMismatch);
  CHECK(join(Field::rational(), q3) == q3);
  CHECK_THROWS_AS(join(Field::quadratic(2), q3), FieldMismatch);
  CHECK_THROWS_AS(Scalar().inverse(), std::domain_error);
}

TEST_CASE("row reduction, rank and inverse") {
  Matrix m = Matrix::from_rows(3, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  CHECK_THROWS_AS(inverse(m), std::domain_error);
  Matrix a = Matrix::from_rows(3, {{2, 1, 0}, {0, r3, 1}, {1, 0, 1}});
  CHECK(a * inverse(a) == Matrix::identity(3));
  const auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  CHECK(is_zero(m * ker[0]));
}

TEST_CASE("subspaces are canonical") {
  const Subspace u = Subspace::span(3, {{1, 1, 0}, {0, 1, 1}});
  const Subspace v = Subspace::span(3, {{1, 2, 1}, {1, 0, -1}});
  CHECK(u == v);
  CHECK(u.contains(Vector{2, 3, 1}));
  CHECK_FALSE(u.contains(Vector{0, 0, 1}));
  const Subspace w = Subspace::coordinate(3, std::vector<int>{2});
  CHECK(sum(u, w).is_whole());
  CHECK(intersect(u, w).is_zero());
  CHECK(annihilator(u).dim() == 1);
  const Vector c = u.coordinates(Vector{2, 3, 1});
  CHECK(scaled(u.basis()[0], c[0]) + scaled(u.basis()[1], c[1]) == Vector{2, 3, 1});
  const Quotient qt = quotient(u);
  CHECK(qt.complement.size() == 1);
  CHECK(is_zero(qt.projection * Vector{1, 2, 1}));
}

TEST_CASE("dimension formula for sums and intersections") {
  testgen::Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 6;
    std::vector<Vector> gu, gv;
    for (int k = 0; k < rng.integer(0, 4); ++k) gu.push_back(rng.vector(n));
    for (int k = 0; k < rng.integer(0, 4); ++k) gv.push_back(rng.vector(n));
    const Subspace u = Subspace::span(n, gu), v = Subspace::span(n, gv);
    CHECK(sum(u, v).dim() + intersect(u, v).dim() == u.dim() + v.dim());
  }
}

TEST_CASE("signature convention is (negative, positive)") {
  const SymBilinearForm hyp(Matrix::from_rows(2, {{0, 1}, {1, 0}}));
  CHECK(signature(hyp) == Signature{1, 1, 0});
  const SymBilinearForm d(Matrix::from_rows(3, {{-1, 0, 0}, {0, -2, 0}, {0, 0, 0}}));
  CHECK(signature(d) == Signature{2, 0, 1});
  CHECK_FALSE(is_nondegenerate(d));
  CHECK(radical(d) == Subspace::coordinate(3, std::vector<int>{2}));
  const SymBilinearForm e(Matrix::from_rows(2, {{1, r3}, {r3, 2}}));  // det = -1
  CHECK(signature(e) == Signature{1, 1, 0});
  CHECK(signature(e) == oracle::signature(e.gram()));
  CHECK_THROWS_AS(SymBilinearForm(Matrix::from_rows(2, {{0, 1}, {2, 0}})), std::invalid_argument);
}

TEST_CASE("perp of a subspace") {
  const SymBilinearForm hyp(Matrix::from_rows(4, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}));
  const Subspace u = Subspace::span(4, {{1, 0, 0, 0}});
  CHECK(perp(u, hyp) == Subspace::span(4, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
}

TEST_CASE("quaternion product agrees with the multiplication table") {
  testgen::Rng rng(12);
  for (int t = 0; t < 50; ++t) {
    const Vector a = rng.vector(4, 8), b = rng.vector(4, 8);
    const Quaternion p = Quaternion::from_vector(a) * Quaternion::from_vector(b);
    const oracle::Quat o = oracle::qmul({a[0], a[1], a[2], a[3]}, {b[0], b[1], b[2], b[3]});
    CHECK(p.to_vector() == Vector{o[0], o[1], o[2], o[3]});
    CHECK(left_mult_matrix(Quaternion::from_vector(a)) * b == p.to_vector());
    CHECK(right_mult_matrix(Quaternion::from_vector(b)) * a == p.to_vector());
  }
  CHECK(Quaternion::i() * Quaternion::j() == Quaternion::k());
  CHECK(Quaternion::j() * Quaternion::i() == -Quaternion::k());
  const Quaternion q{1, 2, -1, 3};
  CHECK(q * q.inverse() == Quaternion::one());
  CHECK(real_inner(q, q) == q.norm());
}

TEST_CASE("lambda is the rotation v -> u v conj(u)") {
  CHECK(lambda_so3(Quaternion::one()) == Matrix::identity(3));
  const Quaternion i = Quaternion::i();
  CHECK(lambda_so3(i) == Matrix::from_rows(3, {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}));
  CHECK(lambda_so3(i) == oracle::rotation({0, 1, 0, 0}));
  CHECK_THROWS_AS(lambda_so3(Quaternion{1, 1, 0, 0}), std::invalid_argument);
  const Quaternion u{Scalar::fraction(1, 2), Scalar::fraction(1, 2), Scalar::fraction(1, 2), Scalar::fraction(1, 2)};
  CHECK(determinant3(lambda_so3(u)) == Scalar(1));
}
