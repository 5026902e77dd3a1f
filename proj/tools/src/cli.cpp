#include "hksym_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "hksym/catalog.hpp"
#include "hksym/extract.hpp"
#include "hksym/serialize.hpp"
#include "hksym_cli/report.hpp"

namespace hksym::cli {

namespace {

// Raised for unusable command line values and unreadable files.
class Malformed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Malformed("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_sink(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Malformed("cannot write '" + path + "'");
  f << text;
}

Scalar parse_rational(const std::string& s) {
  static const std::regex pattern(R"(\s*-?[0-9]+(/[0-9]+)?\s*)");
  if (!std::regex_match(s, pattern)) throw Malformed("malformed rational '" + s + "'");
  std::string t;
  for (char c : s)
    if (c != ' ') t += c;
  mpq_class q;
  const auto slash = t.find('/');
  q.get_num() = mpz_class(t.substr(0, slash));
  if (slash != std::string::npos) q.get_den() = mpz_class(t.substr(slash + 1));
  if (q.get_den() == 0) throw Malformed("zero denominator in '" + s + "'");
  q.canonicalize();
  return Scalar(q);
}

std::vector<Scalar> parse_list(const std::string& s) {
  std::vector<Scalar> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

std::string field_note(Field f) { return f.is_rational() ? "" : " over " + f.to_string(); }

// Extension data or a triple, with the triple built when needed.
struct Loaded {
  std::string name;
  std::optional<ExtensionInput> input;
  std::optional<HyperKahlerTriple> triple;
};

Loaded load(const std::string& path, std::istream& in) {
  Document d = parse_document(read_source(path, in));
  Loaded l;
  l.name = path == "-" ? "<stdin>" : path;
  if (d.kind == DocumentKind::quartic) throw Malformed("expected extension data or a triple, got a quartic");
  l.input = std::move(d.extension);
  l.triple = std::move(d.triple);
  return l;
}

// Builds the triple of extension data; returns false when the input fails its checks.
bool ensure_triple(Loaded& l, Report& r) {
  if (l.triple) return true;
  ReportSection s = input_section(*l.input);
  const bool ok = s.ok();
  r.sections.push_back(std::move(s));
  if (ok) l.triple = build_extension_unchecked(*l.input);
  return ok;
}

int emit(const Report& r, const std::string& format, std::ostream& out) {
  out << (format == "json" ? render_json(r) : render_text(r));
  return r.ok() ? exit_ok : exit_failed;
}

int cmd_verify(const std::string& file, const std::string& format, std::istream& in, std::ostream& out) {
  Loaded l = load(file, in);
  Report r{"verify " + l.name, {}};
  if (ensure_triple(l, r)) r.sections.push_back(triple_section(*l.triple));
  return emit(r, format, out);
}

int cmd_build(const std::string& file, const std::string& dest, std::istream& in, std::ostream& out,
              std::ostream& err) {
  Loaded l = load(file, in);
  if (!l.input) throw Malformed("build expects extension data");
  const CheckList c = validate(*l.input);
  if (const Check* f = c.first_failure()) {
    err << "build: " << f->name << ": " << f->verdict.detail << "\n";
    return exit_failed;
  }
  write_sink(dest, to_json(build_extension_unchecked(*l.input)), out);
  return exit_ok;
}

int cmd_admissible(const std::string& file, const std::string& format, std::istream& in, std::ostream& out) {
  Loaded l = load(file, in);
  Report r{"admissible " + l.name, {}};
  if (!l.input) {
    // A triple is first presented as an extension.
    ReportSection s = triple_section(*l.triple);
    const bool ok = s.ok();
    r.sections.push_back(std::move(s));
    if (!ok) return emit(r, format, out);
    l.input = extract_canonical(*l.triple);
  } else {
    ReportSection s = input_section(*l.input);
    const bool ok = s.ok();
    r.sections.push_back(std::move(s));
    if (!ok) return emit(r, format, out);
  }
  try {
    const AdmissibilityReport a = check_admissible(*l.input);
    r.sections.push_back(admissibility_section(a));
    if (a.admissible()) r.sections.push_back(indecomposability_section(check_indecomposable_sufficient(*l.input)));
  } catch (const std::invalid_argument& e) {
    r.sections.push_back({"admissibility", {{"nilpotent", Verdict::fail(e.what())}}, {}});
  }
  return emit(r, format, out);
}

int cmd_extract(const std::string& file, const std::string& dest, std::istream& in, std::ostream& out,
                std::ostream& err) {
  Loaded l = load(file, in);
  Report r{"extract " + l.name, {}};
  if (!ensure_triple(l, r)) {
    err << "extract: " << r.first_failure() << "\n";
    return exit_failed;
  }
  const CheckList c = verify_triple(*l.triple);
  if (const Check* f = c.first_failure()) {
    err << "extract: " << f->name << ": " << f->verdict.detail << "\n";
    return exit_failed;
  }
  try {
    write_sink(dest, to_json(extract_canonical(*l.triple)), out);
  } catch (const ExtractionError& e) {
    err << "extract: " << e.what() << "\n";
    return exit_failed;
  }
  return exit_ok;
}

int cmd_tangent(const std::string& file, int times, const std::string& dest, std::istream& in, std::ostream& out,
                std::ostream& err) {
  if (times < 0) throw Malformed("-n must be non-negative");
  Loaded l = load(file, in);
  Report r{"tangent " + l.name, {}};
  if (!ensure_triple(l, r)) {
    err << "tangent: " << r.first_failure() << "\n";
    return exit_failed;
  }
  write_sink(dest, to_json(tangent_iterate(*l.triple, times)), out);
  return exit_ok;
}

struct CatalogArgs {
  std::string name;
  std::optional<int> n;
  std::vector<std::string> a_list;
  std::string angle;
  std::string t;
  std::string out;
};

int cmd_catalog(const CatalogArgs& a, std::ostream& out) {
  if (a.name.empty() || a.name == "list") {
    for (const auto& e : catalog_entries()) {
      out << e.name << ": " << e.description;
      if (!e.parameters.empty()) out << " [" << e.parameters << "]";
      out << "\n";
    }
    out << "ac-builtin: the quartic p1^3 q3 + sqrt3 p1^2 p2 p4 - sqrt3 p1 p2^2 q4 - p2^3 p3\n";
    return exit_ok;
  }
  if (a.name == "ac-builtin") {
    write_sink(a.out, to_json(ac::ac_builtin_space(), ac::ac_builtin()), out);
    return exit_ok;
  }
  ExtensionInput in;
  try {
    if (a.name == "example1") {
      in = example1();
    } else if (a.name == "example2") {
      std::vector<Matrix> mats;
      for (const auto& s : a.a_list) {
        const auto v = parse_list(s);
        if (v.size() != 9) throw Malformed("--A expects 9 comma separated entries, got " + std::to_string(v.size()));
        Matrix m(3, 3);
        for (std::size_t i = 0; i < 9; ++i) m(i / 3, i % 3) = v[i];
        mats.push_back(m);
      }
      const int n = a.n.value_or(mats.empty() ? 1 : static_cast<int>(mats.size()));
      if (n < 0) throw Malformed("--n must be non-negative");
      if (mats.empty()) mats.assign(static_cast<std::size_t>(n), example2_default_matrix());
      if (mats.size() != static_cast<std::size_t>(n)) throw Malformed("--n differs from the number of --A matrices");
      in = example2(mats);
    } else if (auto kind = parse_classification_kind(a.name)) {
      std::optional<PythagoreanAngle> angle;
      if (*kind != ClassificationKind::a_prime) {
        if (!a.angle.empty() && !a.t.empty()) throw Malformed("give either --angle or --t");
        if (!a.t.empty()) {
          angle = PythagoreanAngle::from_parameter(parse_rational(a.t));
        } else if (!a.angle.empty()) {
          const auto v = parse_list(a.angle);
          if (v.size() != 2) throw Malformed("--angle expects s,c");
          angle = PythagoreanAngle::make(v[0], v[1]);
        } else {
          angle = PythagoreanAngle::make(Scalar::fraction(3, 5), Scalar::fraction(4, 5));
        }
      }
      in = classification_cocycle(*kind, angle);
    } else if (a.name == "flat") {
      in = flat_input();
    } else {
      throw Malformed("unknown catalog entry '" + a.name + "' (try 'catalog list')");
    }
  } catch (const std::invalid_argument& e) {
    throw Malformed(e.what());
  }
  write_sink(a.out, to_json(in), out);
  return exit_ok;
}

int cmd_accheck(const std::string& file, bool builtin, const std::string& format, std::istream& in,
                std::ostream& out) {
  ac::SymplecticSpace e = ac::ac_builtin_space();
  ac::SymPoly s = ac::ac_builtin();
  std::string name = "builtin quartic";
  if (!builtin) {
    if (file.empty()) throw Malformed("accheck needs --builtin or a file");
    Document d = parse_document(read_source(file, in));
    if (d.kind != DocumentKind::quartic) throw Malformed("accheck expects a quartic document");
    e = *d.space;
    s = *d.quartic;
    name = file == "-" ? "<stdin>" : file;
  }
  Report r{"accheck " + name + field_note(s.field()), {accheck_section(e, s)}};
  if (format == "json") {
    out << render_json(r);
  } else {
    out << render_text(r);
    const auto& items = r.sections[0].items;
    auto value = [&](const std::string& key) {
      for (const auto& it : items)
        if (it.key == key) return it.value;
      return std::string();
    };
    out << "crux: " << value("crux") << ", tame: " << value("tame") << "\n";
  }
  return r.ok() ? exit_ok : exit_failed;
}

int cmd_report(const std::string& file, const std::string& format, std::istream& in, std::ostream& out) {
  Loaded l = load(file, in);
  Report r{"report " + l.name, {}};
  if (!ensure_triple(l, r)) return emit(r, format, out);
  ReportSection ts = triple_section(*l.triple);
  const bool triple_ok = ts.ok();
  r.sections.push_back(std::move(ts));
  if (!triple_ok) return emit(r, format, out);
  if (!l.input) {
    try {
      l.input = extract_canonical(*l.triple);
      r.sections.push_back(
          {"extraction", {}, {{"dim l", std::to_string(l.input->l_dim())}, {"dim a", std::to_string(l.input->a_dim())}}});
    } catch (const ExtractionError& e) {
      r.sections.push_back({"extraction", {{"section", Verdict::fail(e.what())}}, {}});
      return emit(r, format, out);
    }
  }
  const AdmissibilityReport a = check_admissible(*l.input);
  r.sections.push_back(admissibility_section(a));
  if (a.admissible()) r.sections.push_back(indecomposability_section(check_indecomposable_sufficient(*l.input)));
  return emit(r, format, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and verification of hyper-Kahler symmetric triples", "hksym"};
  app.require_subcommand(1, 1);

  std::string file = "-", format = "text", dest;
  int times = 1;
  bool builtin = false;
  CatalogArgs cat;

  auto add_file = [&](CLI::App* c) { c->add_option("file", file, "input document, '-' for stdin"); };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* verify = app.add_subcommand("verify", "verify a triple or the triple built from extension data");
  add_file(verify);
  add_format(verify);
  auto* build = app.add_subcommand("build", "build the triple of extension data");
  add_file(build);
  build->add_option("--out", dest, "output file");
  auto* admissible = app.add_subcommand("admissible", "check (T), (A_k), (B_k)");
  add_file(admissible);
  add_format(admissible);
  auto* extract = app.add_subcommand("extract", "present a triple as extension data");
  add_file(extract);
  extract->add_option("--out", dest, "output file");
  auto* tangent = app.add_subcommand("tangent", "iterate the tangent construction");
  add_file(tangent);
  tangent->add_option("-n", times, "number of iterations")->required();
  tangent->add_option("--out", dest, "output file");
  auto* catalog = app.add_subcommand("catalog", "print a named input ('list' shows all)");
  catalog->add_option("name", cat.name, "entry name");
  catalog->add_option("--n", cat.n, "example2: number of H summands");
  catalog->add_option("--A", cat.a_list, "example2: 3x3 matrix, 9 comma separated rationals (repeatable)");
  catalog->add_option("--angle", cat.angle, "a-r / a-s: s,c with s^2 + c^2 = 1");
  catalog->add_option("--t", cat.t, "a-r / a-s: rational parameter of the angle");
  catalog->add_option("--out", cat.out, "output file");
  auto* accheck = app.add_subcommand("accheck", "crux condition and tameness of a quartic");
  accheck->add_option("file", file, "quartic document, '-' for stdin");
  accheck->add_flag("--builtin", builtin, "use the built-in quartic");
  add_format(accheck);
  auto* report = app.add_subcommand("report", "full report on a triple or extension data");
  add_file(report);
  add_format(report);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_malformed;
  }

  try {
    if (verify->parsed()) return cmd_verify(file, format, in, out);
    if (build->parsed()) return cmd_build(file, dest, in, out, err);
    if (admissible->parsed()) return cmd_admissible(file, format, in, out);
    if (extract->parsed()) return cmd_extract(file, dest, in, out, err);
    if (tangent->parsed()) return cmd_tangent(file, times, dest, in, out, err);
    if (catalog->parsed()) return cmd_catalog(cat, out);
    if (accheck->parsed()) {
      if (builtin && accheck->count("file") > 0) throw Malformed("give either --builtin or a file");
      return cmd_accheck(file, builtin, format, in, out);
    }
    if (report->parsed()) return cmd_report(file, format, in, out);
  } catch (const ParseError& e) {
    err << "malformed input: " << e.what() << "\n";
    return exit_malformed;
  } catch (const Malformed& e) {
    err << "error: " << e.what() << "\n";
    return exit_malformed;
  } catch (const DimensionMismatch& e) {
    err << "malformed input: " << e.what() << "\n";
    return exit_malformed;
  }
  err << "error: no command\n";
  return exit_malformed;
}

}  // namespace hksym::cli
