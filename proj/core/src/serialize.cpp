#include "hksym/serialize.hpp"

#include <algorithm>
#include <regex>
#include <set>

#include "json.hpp"

namespace hksym {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw ParseError(path + ": " + msg); }

void require_object(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [k, v] : j.items())
    if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; })) fail(path, "unknown key '" + k + "'");
  for (const char* k : keys)
    if (!j.contains(k)) fail(path, std::string("missing key '") + k + "'");
}

const json& require_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::size_t read_index(const json& j, std::size_t bound, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a non-negative integer");
  const auto v = j.get<unsigned long long>();
  if (v >= bound) fail(path, "index " + std::to_string(v) + " out of range (dimension " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(v);
}

mpq_class read_rational(const std::string& s, const std::string& path) {
  static const std::regex pattern("-?[0-9]+(/[0-9]+)?");
  if (!std::regex_match(s, pattern)) fail(path, "malformed rational '" + s + "'");
  mpq_class q;
  const std::size_t slash = s.find('/');
  q.get_num() = mpz_class(s.substr(0, slash));
  if (slash != std::string::npos) {
    q.get_den() = mpz_class(s.substr(slash + 1));
    if (q.get_den() == 0) fail(path, "zero denominator in '" + s + "'");
  }
  q.canonicalize();
  return q;
}

struct Reader {
  Field field;

  Scalar scalar(const json& j, const std::string& path) const {
    if (j.is_number_integer()) return Scalar(mpq_class(mpz_class(j.dump())));
    if (j.is_string()) return Scalar(read_rational(j.get<std::string>(), path));
    if (j.is_object()) {
      require_object(j, path, {"a", "b"});
      if (!j["a"].is_string() || !j["b"].is_string()) fail(path, "quadratic parts must be strings");
      if (field.is_rational()) fail(path, "quadratic scalar in a document over Q");
      return Scalar(read_rational(j["a"].get<std::string>(), path + ".a"),
                    read_rational(j["b"].get<std::string>(), path + ".b"), field);
    }
    fail(path, "expected a scalar");
  }

  Vector vector(const json& j, std::size_t n, const std::string& path) const {
    require_array(j, path);
    if (j.size() != n) fail(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = scalar(j[i], path + "[" + std::to_string(i) + "]");
    return v;
  }

  Matrix matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& path) const {
    require_array(j, path);
    if (j.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      Vector row = vector(j[r], cols, path + "[" + std::to_string(r) + "]");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
  }

  std::vector<std::string> labels(const json& j, const std::string& path) const {
    require_array(j, path);
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string p = path + "[" + std::to_string(i) + "]";
      if (!j[i].is_string() || j[i].get<std::string>().empty()) fail(p, "expected a non-empty label");
      if (!seen.insert(j[i].get<std::string>()).second) fail(p, "duplicate label '" + j[i].get<std::string>() + "'");
      out.push_back(j[i].get<std::string>());
    }
    return out;
  }

  LieAlgebra algebra(const json& j, const std::string& path) const {
    require_object(j, path, {"basis", "brackets"});
    const auto basis = labels(j["basis"], path + ".basis");
    LieAlgebra l(basis.size(), basis);
    auto label_index = [&](const json& x, const std::string& p) {
      if (!x.is_string()) fail(p, "expected a basis label");
      const int i = l.index_of(x.get<std::string>());
      if (i < 0) fail(p, "unknown label '" + x.get<std::string>() + "'");
      return i;
    };
    std::set<std::pair<int, int>> seen;
    const json& br = require_array(j["brackets"], path + ".brackets");
    for (std::size_t e = 0; e < br.size(); ++e) {
      const std::string p = path + ".brackets[" + std::to_string(e) + "]";
      require_object(br[e], p, {"x", "y", "out"});
      const int x = label_index(br[e]["x"], p + ".x");
      const int y = label_index(br[e]["y"], p + ".y");
      if (x == y) fail(p, "bracket of a basis vector with itself");
      if (!seen.insert({std::min(x, y), std::max(x, y)}).second) fail(p, "pair listed twice");
      if (!br[e]["out"].is_object()) fail(p + ".out", "expected an object of label: coefficient");
      Vector out = zero_vector(l.dim());
      for (const auto& [k, v] : br[e]["out"].items()) {
        const int t = l.index_of(k);
        if (t < 0) fail(p + ".out", "unknown label '" + k + "'");
        out[static_cast<std::size_t>(t)] = scalar(v, p + ".out." + k);
      }
      l.set_bracket(x, y, out);
    }
    return l;
  }

  QuatGrading grading(const json& j, std::size_t n, const std::string& path) const {
    require_object(j, path, {"plus", "minus", "I", "J", "K"});
    QuatGrading g;
    for (const char* part : {"plus", "minus"}) {
      const json& a = require_array(j[part], path + "." + part);
      auto& dst = std::string(part) == "plus" ? g.plus : g.minus;
      for (std::size_t i = 0; i < a.size(); ++i)
        dst.push_back(static_cast<int>(read_index(a[i], n, path + "." + part + "[" + std::to_string(i) + "]")));
    }
    const std::size_t m = g.minus.size();
    const char* names[3] = {"I", "J", "K"};
    for (std::size_t q = 0; q < 3; ++q) g.ops[q] = matrix(j[names[q]], m, m, path + "." + names[q]);
    return g;
  }

  AlternatingForm form(const json& j, std::size_t n, std::size_t degree, std::size_t r, bool scalar_valued,
                       const std::string& path) const {
    require_array(j, path);
    AlternatingForm f(n, degree, r);
    std::set<std::vector<int>> seen;
    for (std::size_t e = 0; e < j.size(); ++e) {
      const std::string p = path + "[" + std::to_string(e) + "]";
      require_object(j[e], p, {"indices", "value"});
      const json& idx = require_array(j[e]["indices"], p + ".indices");
      if (idx.size() != degree) fail(p + ".indices", "expected " + std::to_string(degree) + " indices");
      std::vector<int> t;
      for (std::size_t i = 0; i < degree; ++i)
        t.push_back(static_cast<int>(read_index(idx[i], n, p + ".indices[" + std::to_string(i) + "]")));
      if (!std::is_sorted(t.begin(), t.end()) || std::adjacent_find(t.begin(), t.end()) != t.end())
        fail(p + ".indices", "indices must be strictly increasing");
      if (!seen.insert(t).second) fail(p, "tuple listed twice");
      Vector v = scalar_valued ? Vector{scalar(j[e]["value"], p + ".value")} : vector(j[e]["value"], r, p + ".value");
      f.set(t, v);
    }
    return f;
  }

  OrthogonalModule module(const json& j, const std::string& path) const {
    require_object(j, path, {"basis", "form", "grading"});
    OrthogonalModule a;
    a.labels = labels(j["basis"], path + ".basis");
    const std::size_t r = a.labels.size();
    Matrix gram = matrix(j["form"], r, r, path + ".form");
    if (!gram.is_symmetric()) fail(path + ".form", "form is not symmetric");
    a.form = SymBilinearForm(std::move(gram));
    a.grading = grading(j["grading"], r, path + ".grading");
    return a;
  }
};

struct Writer {
  Field field;

  json scalar(const Scalar& x) {
    field = join(field, x.field());
    if (x.is_rational()) return x.rational_part().get_str();
    json o;
    o["a"] = x.rational_part().get_str();
    o["b"] = x.radical_part().get_str();
    return o;
  }

  json vector(const Vector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(scalar(x));
    return a;
  }

  json matrix(const Matrix& m) {
    json a = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vector(m.row(r)));
    return a;
  }

  json algebra(const LieAlgebra& l) {
    json o;
    o["basis"] = l.labels();
    json br = json::array();
    for (const auto& e : l.entries()) {
      json b;
      b["x"] = l.labels()[static_cast<std::size_t>(e.x)];
      b["y"] = l.labels()[static_cast<std::size_t>(e.y)];
      json out = json::object();
      for (const auto& [k, v] : e.out) out[l.labels()[static_cast<std::size_t>(k)]] = scalar(v);
      b["out"] = std::move(out);
      br.push_back(std::move(b));
    }
    o["brackets"] = std::move(br);
    return o;
  }

  json grading(const QuatGrading& g) {
    json o;
    o["plus"] = g.plus;
    o["minus"] = g.minus;
    o["I"] = matrix(g.ops[0]);
    o["J"] = matrix(g.ops[1]);
    o["K"] = matrix(g.ops[2]);
    return o;
  }

  json form(const AlternatingForm& f, bool scalar_valued) {
    json a = json::array();
    f.for_each_nonzero([&](const std::vector<int>& t, const Vector& v) {
      json e;
      e["indices"] = t;
      e["value"] = scalar_valued ? scalar(v[0]) : vector(v);
      a.push_back(std::move(e));
    });
    return a;
  }
};

std::string finish(json& doc, const Field& f) {
  doc["scalar_field"] = f.to_string();
  return doc.dump(2) + "\n";
}

std::vector<std::string> module_labels(const OrthogonalModule& a) {
  return a.labels.size() == a.dim() ? a.labels : default_labels(a.dim(), "A");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    const auto pos = msg.find("parse error");
    if (pos != std::string::npos) msg = msg.substr(pos);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg, line,
                     column);
  }
}

}  // namespace

Field parse_field(const std::string& text) {
  if (text == "Q") return Field::rational();
  static const std::regex pattern(R"(Q\(sqrt ?([0-9]+)\))");
  std::smatch m;
  if (!std::regex_match(text, m, pattern) || m[1].str().size() > 9)
    throw ParseError("scalar_field: expected \"Q\" or \"Q(sqrt d)\", got '" + text + "'");
  try {
    return Field::quadratic(std::stol(m[1].str()));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("scalar_field: ") + e.what());
  }
}

Document parse_document(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("document: expected an object");
  if (!doc.contains("scalar_field") || !doc["scalar_field"].is_string())
    throw ParseError("document: missing string key 'scalar_field'");
  Reader rd{parse_field(doc["scalar_field"].get<std::string>())};
  Document out;
  if (doc.contains("quartic")) {
    require_object(doc, "document", {"scalar_field", "dimension", "quartic"});
    const json& d = doc["dimension"];
    if (!d.is_number_integer() || d.get<long long>() < 2 || d.get<long long>() % 2 != 0 || d.get<long long>() > 64)
      fail("dimension", "expected an even integer between 2 and 64");
    const ac::SymplecticSpace e(static_cast<std::size_t>(d.get<long long>() / 2));
    ac::SymPoly s(e.dim(), 4);
    std::set<ac::SymPoly::Monomial> seen;
    const json& terms = require_array(doc["quartic"], "quartic");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string p = "quartic[" + std::to_string(t) + "]";
      require_object(terms[t], p, {"monomial", "coeff"});
      const json& mono = require_array(terms[t]["monomial"], p + ".monomial");
      if (mono.size() != 4) fail(p + ".monomial", "expected 4 labels");
      ac::SymPoly::Monomial m;
      for (const auto& lab : mono) {
        const int k = lab.is_string() ? e.index_of(lab.get<std::string>()) : -1;
        if (k < 0) fail(p + ".monomial", "unknown label " + lab.dump());
        m.push_back(k);
      }
      std::sort(m.begin(), m.end());
      if (!seen.insert(m).second) fail(p, "monomial listed twice");
      s.add_term(m, rd.scalar(terms[t]["coeff"], p + ".coeff"));
    }
    out.kind = DocumentKind::quartic;
    out.space = e;
    out.quartic = std::move(s);
    return out;
  }
  if (doc.contains("metric")) {
    require_object(doc, "document", {"scalar_field", "lie_algebra", "grading", "metric"});
    HyperKahlerTriple t;
    t.algebra = rd.algebra(doc["lie_algebra"], "lie_algebra");
    t.grading = rd.grading(doc["grading"], t.dim(), "grading");
    Matrix gram = rd.matrix(doc["metric"], t.dim(), t.dim(), "metric");
    if (!gram.is_symmetric()) fail("metric", "metric is not symmetric");
    t.metric = SymBilinearForm(std::move(gram));
    out.kind = DocumentKind::triple;
    out.triple = std::move(t);
    return out;
  }
  require_object(doc, "document", {"scalar_field", "lie_algebra", "grading", "module", "alpha", "gamma"});
  ExtensionInput in;
  in.l.algebra = rd.algebra(doc["lie_algebra"], "lie_algebra");
  in.l.grading = rd.grading(doc["grading"], in.l_dim(), "grading");
  in.a = rd.module(doc["module"], "module");
  in.cocycle.alpha = rd.form(doc["alpha"], in.l_dim(), 2, in.a_dim(), false, "alpha");
  in.cocycle.gamma = rd.form(doc["gamma"], in.l_dim(), 3, 1, true, "gamma");
  out.kind = DocumentKind::extension;
  out.extension = std::move(in);
  return out;
}

ExtensionInput parse_extension(std::string_view text) {
  Document d = parse_document(text);
  if (!d.extension) throw ParseError("document: expected extension data (lie_algebra, grading, module, alpha, gamma)");
  return std::move(*d.extension);
}

HyperKahlerTriple parse_triple(std::string_view text) {
  Document d = parse_document(text);
  if (!d.triple) throw ParseError("document: expected a triple (lie_algebra, grading, metric)");
  return std::move(*d.triple);
}

std::string to_json(const ExtensionInput& in) {
  Writer w;
  json doc;
  doc["scalar_field"] = nullptr;
  doc["lie_algebra"] = w.algebra(in.l.algebra);
  doc["grading"] = w.grading(in.l.grading);
  json mod;
  mod["basis"] = module_labels(in.a);
  mod["form"] = w.matrix(in.a.form.gram());
  mod["grading"] = w.grading(in.a.grading);
  doc["module"] = std::move(mod);
  doc["alpha"] = w.form(in.cocycle.alpha, false);
  doc["gamma"] = w.form(in.cocycle.gamma, true);
  return finish(doc, w.field);
}

std::string to_json(const HyperKahlerTriple& t) {
  Writer w;
  json doc;
  doc["scalar_field"] = nullptr;
  doc["lie_algebra"] = w.algebra(t.algebra);
  doc["grading"] = w.grading(t.grading);
  doc["metric"] = w.matrix(t.metric.gram());
  return finish(doc, w.field);
}

std::string to_json(const ac::SymplecticSpace& e, const ac::SymPoly& s) {
  Writer w;
  json doc;
  doc["scalar_field"] = nullptr;
  doc["dimension"] = e.dim();
  json terms = json::array();
  for (const auto& [m, c] : s.terms()) {
    json t;
    json labs = json::array();
    for (int k : m) labs.push_back(e.label(k));
    t["monomial"] = std::move(labs);
    t["coeff"] = w.scalar(c);
    terms.push_back(std::move(t));
  }
  doc["quartic"] = std::move(terms);
  return finish(doc, w.field);
}

}  // namespace hksym
