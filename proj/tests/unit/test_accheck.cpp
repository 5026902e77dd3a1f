#include <algorithm>

#include "doctest.h"
#include "hksym/symplectic.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace hksym;
using namespace hksym::ac;

namespace {

const SymplecticSpace E(4);
const Scalar r3 = Scalar::sqrt(Field::quadratic(3));

int p(std::size_t i) { return E.p(i); }
int q(std::size_t i) { return E.q(i); }

oracle::Poly to_oracle(const SymPoly& s) {
  std::vector<std::pair<std::vector<int>, Scalar>> terms(s.terms().begin(), s.terms().end());
  return oracle::poly_from_monomials(s.space_dim(), terms);
}

bool same(const SymPoly& a, const oracle::Poly& b) { return to_oracle(a).terms == b.terms; }

SymPoly quad(std::initializer_list<std::pair<SymPoly::Monomial, Scalar>> terms) {
  SymPoly out(8, 2);
  for (const auto& [m, c] : terms) out.add_term(m, c);
  return out;
}

SymPoly quartic(std::initializer_list<std::pair<SymPoly::Monomial, Scalar>> terms) {
  SymPoly out(8, 4);
  for (const auto& [m, c] : terms) out.add_term(m, c);
  return out;
}

std::vector<SymPoly> generators_of_v() {
  return {quad({{{p(1), q(3)}, r3}, {{p(2), p(4)}, 1}}), quad({{{p(1), p(4)}, 1}, {{p(2), q(4)}, -1}}),
          quad({{{p(1), p(2)}, 1}}), quad({{{p(1), p(1)}, 1}}), quad({{{p(2), p(2)}, 1}})};
}

}  // namespace

TEST_CASE("symplectic space conventions") {
  CHECK(E.dim() == 8);
  CHECK(E.label(p(3)) == "p3");
  CHECK(E.label(q(1)) == "q1");
  CHECK(E.index_of("q4") == q(4));
  CHECK(E.index_of("p5") == -1);
  CHECK(E.omega(p(1), q(1)) == Scalar(1));
  CHECK(E.omega(q(1), p(1)) == Scalar(-1));
  CHECK(E.omega(p(1), q(2)) == Scalar(0));
  CHECK(E.gram() + E.gram().transpose() == Matrix(8, 8));
  CHECK(rank(E.gram()) == 8);
}

TEST_CASE("the built-in quartic") {
  const SymPoly s = ac_builtin();
  CHECK(s.degree() == 4);
  CHECK(s.terms().size() == 4);
  CHECK(s.coefficient({p(1), p(1), p(2), p(4)}) == r3);
  CHECK(s.coefficient({p(1), p(2), p(2), q(4)}) == -r3);
  CHECK(s.coefficient({p(1), p(1), p(1), q(3)}) == Scalar(1));
  CHECK(s.coefficient({p(2), p(2), p(2), p(3)}) == Scalar(-1));
  CHECK(s.field() == Field::quadratic(3));
}

TEST_CASE("contractions agree with monomial-wise differentiation") {
  const SymPoly s = ac_builtin();
  const oracle::Poly o = to_oracle(s);
  for (int k = 0; k < 8; ++k) {
    const Vector v = unit_vector(8, static_cast<std::size_t>(k));
    CHECK(same(contract(E, s, k), oracle::contract(o, v)));
  }
  CHECK(contract(E, s, p(1)).is_zero());
  CHECK(contract(E, s, p(2)).is_zero());
  // only the p3 monomial survives
  const SymPoly sq3 = contract(E, s, q(3));
  CHECK(sq3.terms().size() == 1);
  CHECK(sq3.coefficient({p(2), p(2), p(2)}) == Scalar(1));
  CHECK(contract(E, SymPoly(8, 4), q(2)).is_zero());
  testgen::Rng rng(31);
  for (int t = 0; t < 10; ++t) {
    const Vector v = rng.vector(8);
    CHECK(same(contract(E, s, v), oracle::contract(o, v)));
  }
}

TEST_CASE("contraction is symmetric in its slots") {
  const SymPoly s = ac_builtin();
  for (int v = 0; v < 8; ++v)
    for (int w = 0; w < 8; ++w) CHECK(contract(E, contract(E, s, v), w) == contract(E, contract(E, s, w), v));
}

TEST_CASE("h_S contains the quoted generators and they annihilate S") {
  const SymPoly s = ac_builtin();
  const HSpan h = span_hS(E, s);
  CHECK(h.dim() == 6);
  for (const SymPoly& g : generators_of_v()) {
    CHECK(h.span.contains(g.to_vector()));
    CHECK(act_quadratic(E, g, s).is_zero());
    CHECK(oracle::is_zero(oracle::act(to_oracle(g), to_oracle(s))));
  }
  const CruxVerdict c = check_crux(E, s);
  CHECK(c.ok);
  CHECK_FALSE(c.failing.has_value());
}

TEST_CASE("tameness of the built-in quartic") {
  const SymPoly s = ac_builtin();
  const TamenessResult t = tameness(E, s);
  CHECK(t.verdict == Tameness::not_tame);
  CHECK(to_string(t.verdict) == "not-tame");
  CHECK(t.annihilator.dim() == 2);
  CHECK(t.annihilator == Subspace::coordinate(8, std::vector<int>{p(1), p(2)}));
  const AbelianResult a = check_hS_abelian(E, s);
  CHECK_FALSE(a.abelian);
  REQUIRE(a.witness.has_value());
  CHECK_FALSE(act_quadratic(E, a.witness->first, a.witness->second).is_zero());
}

TEST_CASE("p1^4 is tame") {
  const SymPoly s = quartic({{{p(1), p(1), p(1), p(1)}, 1}});
  const HSpan h = span_hS(E, s);
  REQUIRE(h.dim() == 1);
  CHECK(Subspace::span(h.span.ambient_dim(), {quad({{{p(1), p(1)}, 1}}).to_vector()}) == h.span);
  CHECK(check_crux(E, s).ok);
  const TamenessResult t = tameness(E, s);
  CHECK(t.verdict == Tameness::tame_certified);
  CHECK(t.lagrangian.size() == 4);
  for (const auto& x : t.lagrangian)
    for (const auto& y : t.lagrangian) CHECK(E.omega(x, y).is_zero());
  CHECK(check_hS_abelian(E, s).abelian);
}

TEST_CASE("p1^3 q1 against the oracle") {
  const SymPoly s = quartic({{{p(1), p(1), p(1), q(1)}, 1}});
  const CruxVerdict c = check_crux(E, s);
  bool oracle_ok = true;
  for (const SymPoly& b : c.h.basis) oracle_ok = oracle_ok && oracle::is_zero(oracle::act(to_oracle(b), to_oracle(s)));
  CHECK(c.ok == oracle_ok);
  CHECK_FALSE(c.ok);
  CHECK(c.h.dim() == 2);
  CHECK(tameness(E, s).verdict == Tameness::not_tame);
  CHECK_THROWS_AS(check_hS_abelian(E, s), CruxNotSatisfied);
}

TEST_CASE("the zero quartic") {
  const SymPoly s(8, 4);
  CHECK(span_hS(E, s).dim() == 0);
  CHECK(check_crux(E, s).ok);
  CHECK(tameness(E, s).verdict == Tameness::tame_certified);
  CHECK(check_hS_abelian(E, s).abelian);
}

TEST_CASE("crux is invariant under rescaling") {
  const SymPoly s = ac_builtin();
  for (const Scalar& c : {Scalar(-2), Scalar::fraction(3, 7), r3}) {
    CHECK(check_crux(E, c * s).ok);
    CHECK(span_hS(E, c * s).span == span_hS(E, s).span);
  }
  const SymPoly t = quartic({{{p(1), p(1), p(1), q(1)}, 1}});
  CHECK_FALSE(check_crux(E, Scalar(5) * t).ok);
}

TEST_CASE("quartics on a Lagrangian coordinate subspace are solutions") {
  testgen::Rng rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    // Choose p_i or q_i for each i.
    std::vector<int> lag;
    for (std::size_t i = 1; i <= 4; ++i) lag.push_back(rng.coin() ? p(i) : q(i));
    SymPoly s(8, 4);
    for (int t = 0; t < 4; ++t) {
      SymPoly::Monomial m;
      for (int k = 0; k < 4; ++k) m.push_back(lag[static_cast<std::size_t>(rng.integer(0, 3))]);
      std::sort(m.begin(), m.end());
      s.add_term(m, rng.nonzero_rational());
    }
    CHECK(check_crux(E, s).ok);
    CHECK(tameness(E, s).verdict == Tameness::tame_certified);
  }
}

TEST_CASE("h_S from random vector pairs") {
  testgen::Rng rng(33);
  const SymPoly s = ac_builtin();
  const HSpan h = span_hS(E, s);
  std::vector<Vector> sample;
  for (int t = 0; t < 50; ++t) {
    const Vector v = rng.vector(8, 6), w = rng.vector(8, 6);
    sample.push_back(contract(E, contract(E, s, v), w).to_vector());
  }
  CHECK(Subspace::span(h.span.ambient_dim(), sample) == h.span);
}

TEST_CASE("the bracket on S^2 E is antisymmetric") {
  const auto gens = generators_of_v();
  for (const auto& a : gens)
    for (const auto& b : gens) CHECK(act_quadratic(E, a, b) == Scalar(-1) * act_quadratic(E, b, a));
}

TEST_CASE("polynomial containers") {
  CHECK(all_monomials(3, 2).size() == 6);
  CHECK(all_monomials(8, 4).size() == 330);
  SymPoly a(8, 2);
  CHECK_THROWS_AS(a.add_term({0, 1, 2}, 1), std::invalid_argument);
  CHECK_THROWS_AS(a.add_term({0, 9}, 1), std::invalid_argument);
  a.add_term({1, 0}, 2);
  CHECK(a.coefficient({0, 1}) == Scalar(2));
  CHECK(SymPoly::from_vector(8, 2, a.to_vector()) == a);
  CHECK(a.derivative(0) == SymPoly::monomial(8, {1}, 2));
  CHECK(a.times(0).coefficient({0, 0, 1}) == Scalar(2));
  CHECK(ac_builtin().to_string(E).find("p1^3") != std::string::npos);
}
