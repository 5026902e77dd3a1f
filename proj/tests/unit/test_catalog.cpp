#include <set>
#include <tuple>

#include "doctest.h"
#include "hksym/admissibility.hpp"
#include "hksym/catalog.hpp"
#include "hksym/serialize.hpp"

using namespace hksym;

namespace {

const PythagoreanAngle kAngle = PythagoreanAngle::make(Scalar::fraction(3, 5), Scalar::fraction(4, 5));

ExtensionInput input_named(const std::string& name) {
  if (name == "example1") return example1();
  if (name == "example2") return example2(std::size_t{1});
  if (name == "flat") return flat_input();
  const auto kind = parse_classification_kind(name);
  REQUIRE(kind.has_value());
  return classification_cocycle(*kind, kAngle);
}

std::string show(const Signature& s) { return "(" + std::to_string(s.negative) + "," + std::to_string(s.positive) + ")"; }

Matrix diag3(const Scalar& a, const Scalar& b, const Scalar& c) {
  Matrix m(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

}  // namespace

TEST_CASE("a0 carries the root form of A2") {
  const OrthogonalModule a = example1().a;
  CHECK(a.dim() == 8);
  CHECK(a.validate().ok);
  const Matrix& g = a.form.gram();
  CHECK(g(0, 0) == Scalar(2));
  CHECK(g(0, 4) == Scalar(-1));
  CHECK(g(4, 4) == Scalar(2));
  CHECK(g(0, 1) == Scalar(0));
  CHECK(signature(a.form) == Signature{0, 8, 0});
  CHECK(a.labels.front() == "A1");
}

TEST_CASE("second example input checks the matrix") {
  CHECK_THROWS_WITH_AS(example2({diag3(1, 1, 1)}), "matrix 1: A is not traceless", std::invalid_argument);
  Matrix asym = diag3(1, 1, -2);
  asym(0, 1) = 1;
  CHECK_THROWS_WITH_AS(example2({asym}), "matrix 1: A is not symmetric", std::invalid_argument);
  CHECK_THROWS_WITH_AS(example2({example2_default_matrix(), diag3(1, -1, 0)}), "matrix 2: A is singular",
                       std::invalid_argument);
  CHECK(example2_default_matrix() == diag3(1, 1, -2));
}

TEST_CASE("second example with n = 0 is the first example") {
  const ExtensionInput a = example2(std::size_t{0}), b = example1();
  CHECK(a.cocycle == b.cocycle);
  CHECK(a.a.form.gram() == b.a.form.gram());
  CHECK(a.l.grading == b.l.grading);
}

TEST_CASE("second example") {
  const ExtensionInput in = example2(std::size_t{1});
  CHECK(in.l_dim() == 11);
  CHECK(in.a_dim() == 14);
  CHECK(validate(in).ok());
  CHECK(check_admissible(in).admissible());
  const HyperKahlerTriple t = build_extension(in);
  CHECK(signature_minus(t) == Signature{8, 16, 0});
  CHECK_FALSE(holonomy_algebra(t).abelian);
  CHECK(in.l.algebra.labels()[7] == "1_1");
  CHECK(in.a.labels[8] == "Pi_1");
}

TEST_CASE("half wedge of alpha_+ is minus the trace") {
  const Scalar half = Scalar::fraction(1, 2);
  // ((1,0), (0,i), (0,j), (0,k)) in H + H
  const std::vector<int> args{0, 5, 6, 7};
  for (const Matrix& a : {example2_default_matrix(), diag3(3, -1, -2)}) {
    const OrthogonalModule m = module_a_A(a);
    CHECK((half * wedge_pair(alpha_plus(), alpha_plus(), m.form)).scalar_at(args) ==
          -(a(0, 0) + a(1, 1) + a(2, 2)));
  }
  const ExtensionInput in = example2(std::size_t{1});
  const AlternatingForm w = half * wedge_pair(in.cocycle.alpha, in.cocycle.alpha, in.a.form);
  CHECK(w.scalar_at(std::vector<int>{0, 8, 9, 10}) == Scalar(0));
}

TEST_CASE("classification rows") {
  for (const char* name : {"a-prime", "a-r", "a-s"}) {
    INFO(name);
    const ExtensionInput in = input_named(name);
    CHECK(wedge_pair(in.cocycle.alpha, in.cocycle.alpha, in.a.form).is_zero());
    CHECK(validate(in).ok());
    CHECK(check_admissible(in).admissible());
    CHECK(signature_minus(build_extension(in)) == Signature{4, 4, 0});
  }
  CHECK(signature(input_named("a-r").a.form) == Signature{1, 2, 0});
  CHECK(signature(input_named("a-s").a.form) == Signature{2, 1, 0});
  CHECK(signature_minus(flat_quaternion_triple()) == Signature{4, 0, 0});
}

TEST_CASE("angles") {
  CHECK_THROWS_AS(PythagoreanAngle::make(Scalar::fraction(1, 2), Scalar::fraction(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(PythagoreanAngle::make(Scalar::fraction(4, 5), Scalar::fraction(3, 5), true), std::invalid_argument);
  CHECK_NOTHROW(PythagoreanAngle::make(Scalar::fraction(4, 5), Scalar::fraction(3, 5)));
  const PythagoreanAngle a = PythagoreanAngle::from_parameter(Scalar::fraction(1, 3));
  CHECK(a.s * a.s + a.c * a.c == Scalar(1));
  CHECK(a.s == Scalar::fraction(3, 5));
  CHECK_THROWS_AS(classification_cocycle(ClassificationKind::a_r), std::invalid_argument);
  CHECK(parse_classification_kind("a-s") == ClassificationKind::a_s);
  CHECK_FALSE(parse_classification_kind("a-t").has_value());
  CHECK(to_string(ClassificationKind::a_prime) == "a-prime");
}

TEST_CASE("transformation law of the quaternion cocycle") {
  // pulling alpha back along x -> x q0 matches the transformed images
  const std::vector<Vector> images = {{1, 0}, {0, 1}, {0, 0}};
  const Quaternion u{Scalar::fraction(1, 2), Scalar::fraction(1, 2), Scalar::fraction(1, 2), Scalar::fraction(1, 2)};
  const Scalar r = Scalar(2);
  const Matrix phi = right_mult_matrix(Quaternion{r, 0, 0, 0} * u);
  CHECK(pullback(quaternion_cocycle(images), phi) == quaternion_cocycle(transformed_images(images, r, u)));
}

TEST_CASE("catalog expectations are reproduced") {
  for (const CatalogEntry& e : catalog_entries()) {
    INFO(e.name);
    const ExtensionInput in = input_named(e.name);
    const HyperKahlerTriple t = build_extension(in);
    CHECK(verify_triple(t).ok());
    for (const Expectation& x : e.expected) {
      INFO(x.property);
      if (x.property == "dim") CHECK(std::to_string(t.dim()) == x.value);
      else if (x.property == "signature") CHECK(show(signature_minus(t)) == x.value);
      else if (x.property == "admissible") CHECK((check_admissible(in).admissible() ? "true" : "false") == x.value);
      else if (x.property == "holonomy abelian") CHECK((holonomy_algebra(t).abelian ? "true" : "false") == x.value);
      else FAIL("unknown property " << x.property);
    }
  }
  CHECK(find_catalog_entry("example1") != nullptr);
  CHECK(find_catalog_entry("nope") == nullptr);
  CHECK(to_string(Basis::published) == "published");
}

TEST_CASE("classification rows are pairwise distinct") {
  // dim, signature and holonomy alone do not separate a-r from a-s; the
  // signature of a does.
  std::set<std::tuple<std::size_t, std::string, bool, std::string>> seen;
  const std::vector<std::string> names = {"example1", "a-prime", "a-r", "a-s", "flat"};
  for (const auto& name : names) {
    const ExtensionInput in = input_named(name);
    const HyperKahlerTriple t = build_extension(in);
    seen.emplace(t.dim(), show(signature_minus(t)), holonomy_algebra(t).abelian, show(signature(in.a.form)));
  }
  CHECK(seen.size() == names.size());
}

TEST_CASE("extension documents round-trip") {
  for (const char* name : {"example1", "example2", "a-r", "flat"}) {
    INFO(name);
    const ExtensionInput in = input_named(name);
    const std::string text = to_json(in);
    const ExtensionInput back = parse_extension(text);
    CHECK(back.cocycle == in.cocycle);
    CHECK(back.a.form.gram() == in.a.form.gram());
    CHECK(back.l.grading == in.l.grading);
    CHECK(back.l.algebra.labels() == in.l.algebra.labels());
    CHECK(to_json(back) == text);
    CHECK(parse_document(text).kind == DocumentKind::extension);
  }
}

TEST_CASE("triple documents round-trip") {
  const HyperKahlerTriple t = build_extension(example1());
  const std::string text = to_json(t);
  const HyperKahlerTriple back = parse_triple(text);
  CHECK(back.metric.gram() == t.metric.gram());
  CHECK(back.grading == t.grading);
  for (int x = 0; x < 22; ++x)
    for (int y = 0; y < 22; ++y) CHECK(back.algebra.bracket_basis(x, y) == t.algebra.bracket_basis(x, y));
  CHECK(parse_document(text).kind == DocumentKind::triple);
  CHECK_THROWS_AS(parse_extension(text), ParseError);
}

TEST_CASE("quartic documents round-trip") {
  const std::string text = to_json(ac::ac_builtin_space(), ac::ac_builtin());
  CHECK(text.find("\"Q(sqrt3)\"") != std::string::npos);
  const Document d = parse_document(text);
  CHECK(d.kind == DocumentKind::quartic);
  REQUIRE(d.quartic.has_value());
  CHECK(*d.quartic == ac::ac_builtin());
  CHECK(d.space->dim() == 8);
}

TEST_CASE("malformed documents") {
  const auto quartic_doc = [](const std::string& field, const std::string& coeff, const std::string& extra = "") {
    return R"({"scalar_field": ")" + field + R"(", "dimension": 2, "quartic": [{"monomial": ["p1", "p1", "p1", "q1"], "coeff": )" +
           coeff + "}]" + extra + "}";
  };
  CHECK(parse_document(quartic_doc("Q", "\"2/3\"")).quartic->coefficient({0, 0, 0, 1}) == Scalar::fraction(2, 3));
  CHECK(parse_document(quartic_doc("Q", "-4")).quartic->coefficient({0, 0, 0, 1}) == Scalar(-4));
  CHECK_THROWS_AS(parse_document(quartic_doc("Q", "\"1/0\"")), ParseError);
  CHECK_THROWS_AS(parse_document(quartic_doc("Q", "\"one\"")), ParseError);
  CHECK_THROWS_AS(parse_document(quartic_doc("Q", R"({"a": "0", "b": "1"})")), ParseError);
  CHECK(parse_document(quartic_doc("Q(sqrt3)", R"({"a": "0", "b": "1"})")).quartic->field() == Field::quadratic(3));
  CHECK_THROWS_AS(parse_document(quartic_doc("Q", "1", R"(, "colour": "red")")), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"scalar_field": "Q", "quartic": []})"), ParseError);
  CHECK_THROWS_AS(parse_document(quartic_doc("Q", "1").replace(0, 1, "[")), ParseError);

  try {
    parse_document("{\n  \"scalar_field\": \"Q\",\n  \"dimension\" 2\n}");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 0);
  }
  CHECK(parse_field("Q") == Field::rational());
  CHECK(parse_field("Q(sqrt3)") == Field::quadratic(3));
  CHECK_THROWS_AS(parse_field("R"), ParseError);
}
