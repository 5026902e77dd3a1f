#include "doctest.h"
#include "fixtures.hpp"
#include "hksym/catalog.hpp"
#include "oracles.hpp"

using namespace hksym;

TEST_CASE("quaternionic Heisenberg bracket matches Im(conj(q1) q2)") {
  const GradedLieAlgebra l0 = quaternion_heisenberg();
  REQUIRE(l0.algebra.dim() == 7);
  for (std::size_t x = 0; x < 7; ++x)
    for (std::size_t y = 0; y < 7; ++y) {
      const Vector ex = unit_vector(7, x), ey = unit_vector(7, y);
      CHECK(l0.algebra.bracket(ex, ey) == oracle::l0_bracket(ex, ey));
    }
  CHECK(check_jacobi(l0.algebra).ok);
  CHECK(center(l0.algebra) == Subspace::coordinate(7, std::vector<int>{4, 5, 6}));
  const LowerCentralSeries s = lower_central_series(l0.algebra);
  CHECK(s.nilpotent);
  CHECK(s.m == 1);
  CHECK(s.term(2).dim() == 3);
  CHECK(lcs_term(s, 3).is_zero());
}

TEST_CASE("Jacobi failure reports the basis triple") {
  LieAlgebra l(3, {"x", "y", "z"});
  l.set_bracket(0, 1, unit_vector(3, 1));
  l.set_bracket(0, 2, unit_vector(3, 2));
  l.set_bracket(1, 2, unit_vector(3, 0));
  const JacobiReport r = check_jacobi(l);
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness.has_value());
  // [[x,y],z] + [[y,z],x] + [[z,x],y] = 2x
  CHECK(r.value == Vector{2, 0, 0});
  CHECK(*r.witness == std::array<int, 3>{0, 1, 2});
}

TEST_CASE("bracket table stays antisymmetric") {
  LieAlgebra l(3);
  l.set_bracket(2, 0, Vector{0, 1, 0});
  CHECK(l.bracket_basis(0, 2) == to_sparse(Vector{0, -1, 0}));
  l.add_to_bracket(0, 2, to_sparse(Vector{0, 1, 0}));
  CHECK(l.is_abelian());
  CHECK_THROWS(l.set_bracket(1, 1, Vector{1, 0, 0}));
  CHECK(l.index_of("e2") == 1);
  CHECK(l.index_of("nope") == -1);
}

TEST_CASE("grading checks") {
  GradedLieAlgebra l0 = quaternion_heisenberg();
  CHECK(verify_grading(l0.algebra, l0.grading).ok);
  CHECK(check_proper(l0.algebra, l0.grading).ok);

  QuatGrading bad = l0.grading;
  bad.ops[2] = bad.ops[1];
  const CheckList c = verify_grading_checks(l0.algebra, bad);
  CHECK_FALSE(c.ok());
  CHECK(c.find("quaternion relations") != nullptr);
  CHECK_FALSE(c.find("quaternion relations")->verdict.ok);

  QuatGrading overlap = l0.grading;
  overlap.plus.push_back(0);
  CHECK_FALSE(verify_grading_checks(l0.algebra, overlap).find("partition")->verdict.ok);
}

TEST_CASE("properness needs [l-, l-] = l+") {
  GradedLieAlgebra l0 = quaternion_heisenberg();
  // [1,i] = -[j,k] both give I; removing one still leaves I in the span.
  l0.algebra.set_bracket(0, 1, SparseVector{});
  CHECK(bracket_span(l0.algebra, Subspace::coordinate(7, l0.grading.minus),
                     Subspace::coordinate(7, l0.grading.minus))
            .dim() == 3);
  l0.algebra.set_bracket(2, 3, SparseVector{});
  CHECK(bracket_span(l0.algebra, Subspace::coordinate(7, l0.grading.minus),
                     Subspace::coordinate(7, l0.grading.minus))
            .dim() == 2);
  CHECK_FALSE(check_proper(l0.algebra, l0.grading).ok);
}

TEST_CASE("flat quaternion triple") {
  const HyperKahlerTriple t = flat_quaternion_triple();
  CHECK(verify_triple(t).ok());
  CHECK(t.algebra.is_abelian());
  CHECK(signature_minus(t) == Signature{4, 0, 0});
  const Holonomy h = holonomy_algebra(t);
  CHECK(h.algebra.dim() == 0);
  CHECK(h.abelian);
}

TEST_CASE("verify_triple catches broken metrics") {
  HyperKahlerTriple t = build_extension(example1());
  REQUIRE(verify_triple(t).ok());
  Matrix g = t.metric.gram();
  g(0, 1) = g(1, 0) = 1;  // couples 1* and i*
  t.metric = SymBilinearForm(g);
  const CheckList c = verify_triple(t);
  CHECK_FALSE(c.ok());
  CHECK_FALSE(c.find("metric invariant")->verdict.ok);
}

TEST_CASE("tangent triples") {
  const HyperKahlerTriple flat = flat_quaternion_triple();
  const HyperKahlerTriple tf = tangent_triple(flat);
  CHECK(tf.dim() == 8);
  CHECK(verify_triple(tf).ok());
  CHECK(signature_minus(tf) == Signature{4, 4, 0});
  CHECK(tf.algebra.labels()[4] == "1'");

  const HyperKahlerTriple t1 = tangent_triple(build_extension(example1()));
  CHECK(t1.dim() == 44);
  CHECK(verify_triple(t1).ok());
  CHECK(signature_minus(t1) == Signature{16, 16, 0});
  CHECK_FALSE(holonomy_algebra(t1).abelian);
  CHECK(tangent_iterate(flat, 0).dim() == 4);
  CHECK(tangent_iterate(flat, 2).dim() == 16);
}

TEST_CASE("cotangent triples") {
  const GradedLieAlgebra h = abelian_quaternions(1);
  const HyperKahlerTriple th = cotangent_triple(h.algebra, h.grading);
  CHECK(th.dim() == 8);
  CHECK(verify_triple(th).ok());
  CHECK(signature_minus(th) == Signature{4, 4, 0});
  CHECK(th.algebra.labels()[0] == "1*");

  // The centre of l0 is its plus part, so l0 is rejected.
  const GradedLieAlgebra l0 = quaternion_heisenberg();
  CHECK_THROWS_AS(cotangent_triple(l0.algebra, l0.grading), InvalidTriple);

  const HyperKahlerTriple d = build_extension(example1());
  const HyperKahlerTriple td = cotangent_triple(d.algebra, d.grading);
  CHECK(td.dim() == 44);
  CHECK(verify_triple(td).ok());
}

TEST_CASE("holonomy of the two-dimensional centre algebra") {
  const GradedLieAlgebra l = fixtures::two_dim_center();
  CHECK(check_jacobi(l.algebra).ok);
  CHECK(verify_grading(l.algebra, l.grading).ok);
  CHECK(check_proper(l.algebra, l.grading).ok);
  CHECK(center(l.algebra) == Subspace::coordinate(6, std::vector<int>{4, 5}));
}

TEST_CASE("direct sums") {
  const LieAlgebra a = quaternion_heisenberg().algebra, b = abelian_quaternions(1).algebra;
  const LieAlgebra s = direct_sum(a, b);
  CHECK(s.dim() == 11);
  CHECK(check_jacobi(s).ok);
  CHECK(s.bracket_basis(0, 1) == a.bracket_basis(0, 1));
  CHECK(s.bracket_basis(7, 8).empty());
  CHECK(center(s).dim() == 7);
}
