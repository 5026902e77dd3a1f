#include "doctest.h"
#include "hksym/catalog.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace hksym;

namespace {

// Basis positions in l0 = (1, i, j, k, I, J, K).
constexpr int kOne = 0, kI = 1, kBigI = 4, kBigJ = 5, kBigK = 6;

}  // namespace

TEST_CASE("colex ranks and tuple enumeration") {
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(3, 5) == 0);
  const auto tuples = increasing_tuples(5, 3);
  REQUIRE(tuples.size() == 10);
  for (std::size_t r = 0; r < tuples.size(); ++r) CHECK(tuple_rank(tuples[r]) == r);
  CHECK(tuples.front() == std::vector<int>{0, 1, 2});
  CHECK(tuples.back() == std::vector<int>{2, 3, 4});
}

TEST_CASE("alternating forms apply the sorting sign") {
  AlternatingForm f(4, 3, 2);
  f.set({2, 0, 1}, Vector{1, 5});  // cyclic, so even
  CHECK(f.at(std::vector<int>{0, 1, 2}) == Vector{1, 5});
  CHECK(f.at(std::vector<int>{1, 0, 2}) == Vector{-1, -5});
  CHECK(is_zero(f.at(std::vector<int>{0, 0, 2})));
  AlternatingForm g(4, 3, 2);
  g.add(std::vector<int>{0, 1, 2}, Vector{1, 0});
  CHECK((f - g).at(std::vector<int>{0, 1, 2}) == Vector{0, 5});
  f.set({1, 0, 3}, Vector{2, 0});
  CHECK(f.at(std::vector<int>{0, 1, 3}) == Vector{-2, 0});
  CHECK((Scalar(2) * f).component(0, 1) == Scalar(10));
  CHECK_THROWS_AS(f += AlternatingForm(4, 2, 2), DimensionMismatch);
}

TEST_CASE("differential agrees with the defining sum") {
  testgen::Rng rng(21);
  const LieAlgebra l = quaternion_heisenberg().algebra;
  for (std::size_t p = 0; p <= 3; ++p) {
    const AlternatingForm c = rng.form(7, p, 2, 5);
    const AlternatingForm dc = differential(l, c);
    for (const auto& t : increasing_tuples(7, p + 1)) {
      std::vector<Vector> args;
      for (int k : t) args.push_back(unit_vector(7, static_cast<std::size_t>(k)));
      CHECK(dc.at(t) == oracle::differential_at(c, l, args));
    }
  }
}

TEST_CASE("wedge agrees with the full permutation sum") {
  testgen::Rng rng(22);
  const Matrix gram = Matrix::from_rows(2, {{2, -1}, {-1, 2}});
  for (auto [p, q] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    const AlternatingForm u = rng.form(5, p, 2, 6), v = rng.form(5, q, 2, 6);
    const AlternatingForm w = wedge_pair(u, v, SymBilinearForm(gram));
    for (const auto& t : increasing_tuples(5, p + q)) CHECK(w.scalar_at(t) == oracle::wedge_at(u, v, gram, t));
  }
}

TEST_CASE("alpha0 matches quaternion multiplication") {
  const ExtensionInput ex = example1();
  for (std::size_t x = 0; x < 7; ++x)
    for (std::size_t y = 0; y < 7; ++y) {
      if (x == y) continue;
      const int args[2] = {static_cast<int>(x), static_cast<int>(y)};
      CHECK(ex.cocycle.alpha.at(args) == oracle::alpha0(unit_vector(7, x), unit_vector(7, y)));
    }
  CHECK(ex.cocycle.gamma.scalar_at(std::vector<int>{kBigI, kBigJ, kBigK}) == Scalar(2));
  std::size_t nonzero = 0;
  ex.cocycle.gamma.for_each_nonzero([&](const std::vector<int>&, const Vector&) { ++nonzero; });
  CHECK(nonzero == 1);
}

TEST_CASE("cocycle identities of the first example") {
  const ExtensionInput ex = example1();
  const AlternatingForm dalpha = differential(ex.l.algebra, ex.cocycle.alpha);
  CHECK(dalpha.tuple_count() == 35);
  CHECK(dalpha.is_zero());
  const AlternatingForm dgamma = differential(ex.l.algebra, ex.cocycle.gamma);
  const AlternatingForm half = Scalar::fraction(1, 2) * wedge_pair(ex.cocycle.alpha, ex.cocycle.alpha, ex.a.form);
  CHECK(dgamma.tuple_count() == 35);
  CHECK(dgamma == half);
  CHECK(half.scalar_at(std::vector<int>{kOne, kI, kBigI, kBigJ}) == Scalar(0));
  CHECK(half.scalar_at(std::vector<int>{kOne, kI, kBigI, kBigK}) == Scalar(0));
  CHECK(half.scalar_at(std::vector<int>{kOne, kI, kBigJ, kBigK}) == Scalar(-2));
  CHECK(dgamma.scalar_at(std::vector<int>{kOne, kI, kBigJ, kBigK}) == Scalar(-2));
  const CocycleReport rep = check_cocycle(ex.l, ex.a, ex.cocycle);
  CHECK(rep.ok());
  CHECK_FALSE(rep.witness.has_value());
}

TEST_CASE("a corrupted gamma fails the cocycle check with a witness") {
  ExtensionInput ex = example1();
  ex.cocycle.gamma.set_scalar({kBigI, kBigJ, kBigK}, 3);
  const CocycleReport rep = check_cocycle(ex.l, ex.a, ex.cocycle);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.checks.find("d gamma = 1/2 <alpha ^ alpha>")->verdict.ok);
  CHECK(rep.witness.has_value());
}

TEST_CASE("invariance checks") {
  const ExtensionInput ex = example1();
  CHECK(check_sp1_invariant(ex.cocycle.alpha, ex.l.grading, ex.a.grading).ok);
  CHECK(check_sp1_invariant(ex.cocycle.gamma, ex.l.grading).ok);
  AlternatingForm bad(7, 1, 8);
  bad.set({kOne}, unit_vector(8, 0));
  CHECK_FALSE(check_sp1_invariant(bad, ex.l.grading, ex.a.grading).ok);
  QuadCochain1 c = QuadCochain1::identity(7, 8);
  c.tau = bad;
  CHECK_THROWS_AS(act(ex.l, ex.a, ex.cocycle, c), std::invalid_argument);
  for (const auto& f : invariant_basis(ex.l.grading, ex.a, 1))
    CHECK(check_sp1_invariant(f, ex.l.grading, ex.a.grading).ok);
}

TEST_CASE("group law on C^1") {
  testgen::Rng rng(23);
  const ExtensionInput ex = example1();
  const auto space = testgen::CochainSpace::of(ex);
  CHECK_FALSE(space.tau.empty());
  const QuadCochain1 c = space.sample(rng), e = QuadCochain1::identity(7, 8);
  CHECK(group_mul(c, e, ex.a) == c);
  CHECK(group_mul(e, c, ex.a) == c);
  CHECK(group_mul(group_inverse(c, ex.a), c, ex.a) == e);
}

TEST_CASE("pullback and value maps") {
  AlternatingForm f(2, 2, 1);
  f.set({0, 1}, Vector{1});
  // phi(e0) = e0 + e1, phi(e1) = 2 e1 on K^2
  const Matrix phi = Matrix::from_rows(2, {{1, 0}, {1, 2}});
  CHECK(pullback(f, phi).scalar_at(std::vector<int>{0, 1}) == Scalar(2));
  const Matrix m = Matrix::from_rows(1, {{3}});
  CHECK(map_values(f, m).scalar_at(std::vector<int>{0, 1}) == Scalar(3));
  const AlternatingForm s = direct_sum(f, f);
  CHECK(s.domain_dim() == 4);
  CHECK(s.coeff_dim() == 2);
  CHECK(s.at(std::vector<int>{2, 3}) == Vector{0, 1});
  CHECK(is_zero(s.at(std::vector<int>{0, 3})));
}

TEST_CASE("orthogonal modules") {
  CHECK(OrthogonalModule::trivial().validate().ok);
  CHECK(OrthogonalModule::zero().validate().ok);
  OrthogonalModule a = example1().a;
  CHECK(a.validate().ok);
  a.grading.ops[0] = Matrix::identity(8);
  CHECK_FALSE(a.validate().ok);
  const OrthogonalModule s = direct_sum(example1().a, OrthogonalModule::trivial());
  CHECK(s.dim() == 9);
  CHECK(s.validate().ok);
}
