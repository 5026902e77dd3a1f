#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "hksym/catalog.hpp"
#include "hksym/serialize.hpp"
#include "hksym_cli/cli.hpp"

using hksym::cli::run_cli;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::string catalog(const std::string& name) {
  const Run r = run({"catalog", name});
  REQUIRE(r.code == 0);
  return r.out;
}

std::string broken_jacobi_triple() {
  hksym::HyperKahlerTriple t;
  t.algebra = hksym::LieAlgebra(3, {"x", "y", "z"});
  t.algebra.set_bracket(0, 1, hksym::unit_vector(3, 1));
  t.algebra.set_bracket(0, 2, hksym::unit_vector(3, 2));
  t.algebra.set_bracket(1, 2, hksym::unit_vector(3, 0));
  t.grading = hksym::QuatGrading::trivial(3);
  t.metric = hksym::SymBilinearForm(hksym::Matrix::identity(3));
  return hksym::to_json(t);
}

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / ("hksym_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("verify the first example") {
  const Run r = run({"verify"}, catalog("example1"));
  CHECK(r.code == hksym::cli::exit_ok);
  CHECK(has(r.out, "signature: (4,12)"));
  CHECK(has(r.out, "holonomy: non-abelian"));
  CHECK(has(r.out, "result: ok"));
}

TEST_CASE("a broken Jacobi identity is a mathematical failure") {
  const Run r = run({"verify"}, broken_jacobi_triple());
  CHECK(r.code == hksym::cli::exit_failed);
  CHECK(has(r.out + r.err, "Jacobi identity fails on ("));
  CHECK(has(r.out + r.err, "x"));
}

TEST_CASE("malformed input") {
  const Run syntax = run({"verify"}, "{\n  \"scalar_field\": \"Q\",\n  oops\n}");
  CHECK(syntax.code == hksym::cli::exit_malformed);
  CHECK(has(syntax.err, "line 3"));
  CHECK(run({"frobnicate"}).code == hksym::cli::exit_malformed);
  CHECK(run({}).code == hksym::cli::exit_malformed);
  CHECK(run({"verify", "/nonexistent/input.json"}).code == hksym::cli::exit_malformed);
  CHECK(run({"catalog", "nope"}).code == hksym::cli::exit_malformed);
  CHECK(run({"catalog", "a-r", "--angle", "1/2,1/2"}).code == hksym::cli::exit_malformed);
  CHECK(run({"catalog", "example2", "--A", "1,0,0,0,1,0,0,0,1"}).code == hksym::cli::exit_malformed);
  CHECK(run({"catalog", "example2", "--A", "1,2,3"}).code == hksym::cli::exit_malformed);
  CHECK(run({"report", "--format", "xml"}, catalog("flat")).code == hksym::cli::exit_malformed);
}

TEST_CASE("accheck") {
  const Run r = run({"accheck", "--builtin"});
  CHECK(r.code == hksym::cli::exit_ok);
  CHECK(has(r.out, "crux: satisfied, tame: no"));
  CHECK(has(r.out, "ann(S): span{p1, p2}"));
  const Run doc = run({"accheck"}, catalog("ac-builtin"));
  CHECK(doc.code == hksym::cli::exit_ok);
  CHECK(has(doc.out, "crux: satisfied, tame: no"));
  const std::string failing =
      R"({"scalar_field": "Q", "dimension": 4, "quartic": [{"monomial": ["p1", "p1", "p1", "q1"], "coeff": "1"}]})";
  const Run bad = run({"accheck"}, failing);
  CHECK(bad.code == hksym::cli::exit_failed);
  CHECK(has(bad.out, "crux: violated"));
}

TEST_CASE("pipelines through files") {
  const TempDir dir;
  const std::string ext = (dir.path / "ex.json").string();
  const std::string tri = (dir.path / "triple.json").string();
  const std::string back = (dir.path / "back.json").string();
  REQUIRE(run({"catalog", "a-prime", "--out", ext}).code == 0);
  REQUIRE(run({"build", ext, "--out", tri}).code == 0);
  CHECK(hksym::parse_document([&] {
          std::ifstream f(tri);
          return std::string(std::istreambuf_iterator<char>(f), {});
        }())
            .kind == hksym::DocumentKind::triple);
  REQUIRE(run({"extract", tri, "--out", back}).code == 0);
  const Run adm = run({"admissible", back});
  CHECK(adm.code == 0);
  CHECK(has(adm.out, "admissible: yes"));
  const Run tan = run({"tangent", "-n", "1", tri});
  CHECK(tan.code == 0);
  CHECK(hksym::parse_triple(tan.out).dim() == 20);
}

TEST_CASE("inadmissible input exits with 1") {
  const Run r = run({"admissible"}, hksym::to_json([] {
                      hksym::ExtensionInput in;
                      in.l = hksym::abelian_quaternions(1);
                      in.a = hksym::OrthogonalModule::zero();
                      in.cocycle = hksym::QuadCocycle2::zero(4, 0);
                      return in;
                    }()));
  CHECK(r.code == hksym::cli::exit_failed);
  CHECK(has(r.out, "FAIL A0"));
}

TEST_CASE("catalog options") {
  const Run list = run({"catalog", "list"});
  CHECK(list.code == 0);
  for (const char* name : {"example1", "example2", "a-prime", "a-r", "a-s", "flat", "ac-builtin"}) CHECK(has(list.out, name));
  const Run two = run({"catalog", "example2", "--n", "2"});
  REQUIRE(two.code == 0);
  CHECK(hksym::parse_extension(two.out).l_dim() == 15);
  const Run a = run({"catalog", "example2", "--A", "3,0,0,0,-1,0,0,0,-2"});
  REQUIRE(a.code == 0);
  CHECK(hksym::parse_extension(a.out).a_dim() == 14);
  const Run angle = run({"catalog", "a-s", "--angle", "5/13,12/13"});
  REQUIRE(angle.code == 0);
  CHECK(run({"verify"}, angle.out).code == 0);
  CHECK(run({"catalog", "a-r", "--t", "1/2"}).code == 0);
}

TEST_CASE("json report") {
  const Run r = run({"report", "--format", "json"}, catalog("example1"));
  CHECK(r.code == 0);
  CHECK(has(r.out, "\"ok\": true"));
  CHECK(has(r.out, "\"sections\""));
  CHECK(has(r.out, "(4,12)"));
}
