#include "hksym_cli/report.hpp"

#include <sstream>

#include "json.hpp"

namespace hksym::cli {

bool ReportSection::ok() const {
  for (const auto& c : checks)
    if (!c.verdict.ok) return false;
  return true;
}

bool Report::ok() const {
  for (const auto& s : sections)
    if (!s.ok()) return false;
  return true;
}

std::string Report::first_failure() const {
  for (const auto& s : sections)
    for (const auto& c : s.checks)
      if (!c.verdict.ok) return s.name + ": " + c.name + (c.verdict.detail.empty() ? "" : ": " + c.verdict.detail);
  return {};
}

std::string format_signature(const Signature& s) {
  return "(" + std::to_string(s.negative) + "," + std::to_string(s.positive) + ")";
}

namespace {

std::string vectors_to_string(const std::vector<Vector>& vs) {
  std::string out;
  for (const auto& v : vs) out += (out.empty() ? "" : " ") + to_string(v);
  return out;
}

}  // namespace

ReportSection input_section(const ExtensionInput& in) {
  ReportSection s{"input", validate(in).checks, {}};
  s.items.push_back({"dim l", std::to_string(in.l_dim())});
  s.items.push_back({"dim a", std::to_string(in.a_dim())});
  return s;
}

ReportSection triple_section(const HyperKahlerTriple& t) {
  ReportSection s{"triple", verify_triple(t).checks, {}};
  s.items.push_back({"dim", std::to_string(t.dim())});
  s.items.push_back({"dim plus", std::to_string(t.grading.plus.size())});
  s.items.push_back({"dim minus", std::to_string(t.grading.minus.size())});
  if (!s.ok()) return s;
  s.items.push_back({"signature", format_signature(signature_minus(t))});
  const Holonomy h = holonomy_algebra(t);
  s.items.push_back({"holonomy dim", std::to_string(h.algebra.dim())});
  s.items.push_back({"holonomy", h.abelian ? "abelian" : "non-abelian"});
  const LowerCentralSeries lcs = lower_central_series(t.algebra);
  s.items.push_back({"nilpotency m", std::to_string(lcs.m)});
  return s;
}

ReportSection admissibility_section(const AdmissibilityReport& r) {
  ReportSection s{"admissibility", {}, {}};
  s.items.push_back({"m", std::to_string(r.m)});
  for (const auto* c : r.all()) {
    s.checks.push_back({c->name, c->ok ? Verdict::pass() : Verdict::fail(c->detail)});
    if (!c->witness.empty()) s.items.push_back({c->name + " witness", vectors_to_string(c->witness)});
  }
  s.items.push_back({"admissible", r.admissible() ? "yes" : "no"});
  return s;
}

ReportSection indecomposability_section(const IndecomposabilityVerdict& v) {
  ReportSection s{"indecomposability", {}, {}};
  s.items.push_back({"verdict", v.verdict == Indecomposability::certified ? "certified" : "unknown"});
  s.items.push_back({"reason", v.reason});
  return s;
}

ReportSection accheck_section(const ac::SymplecticSpace& e, const ac::SymPoly& sp) {
  ReportSection s{"accheck", {}, {}};
  s.items.push_back({"S", sp.to_string(e)});
  const ac::CruxVerdict crux = ac::check_crux(e, sp);
  s.checks.push_back({"crux", crux.ok ? Verdict::pass()
                                      : Verdict::fail("P(S) != 0 for P = " + crux.failing->to_string(e))});
  s.items.push_back({"crux", crux.ok ? "satisfied" : "violated"});
  s.items.push_back({"dim h_S", std::to_string(crux.h.dim())});
  std::string basis;
  for (const auto& p : crux.h.basis) basis += (basis.empty() ? "" : "; ") + p.to_string(e);
  s.items.push_back({"h_S basis", basis});
  const ac::TamenessResult tame = ac::tameness(e, sp);
  s.items.push_back({"tame", tame.verdict == ac::Tameness::tame_certified ? "yes"
                             : tame.verdict == ac::Tameness::not_tame   ? "no"
                                                                        : "unknown"});
  s.items.push_back({"tameness", to_string(tame.verdict) + " (" + tame.reason + ")"});
  s.items.push_back({"dim ann(S)", std::to_string(tame.annihilator.dim())});
  std::string ann;
  for (const auto& v : tame.annihilator.basis()) {
    std::string term;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].is_zero()) continue;
      const std::string c = v[k] == Scalar(1) ? "" : "(" + v[k].to_string() + ")*";
      term += (term.empty() ? "" : " + ") + c + e.label(static_cast<int>(k));
    }
    ann += (ann.empty() ? "" : ", ") + term;
  }
  s.items.push_back({"ann(S)", "span{" + ann + "}"});
  if (crux.ok) {
    const ac::AbelianResult ab = ac::check_hS_abelian(e, sp);
    s.items.push_back({"h_S abelian", ab.abelian ? "yes" : "no"});
  }
  return s;
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "== " << r.subject << " ==\n";
  for (const auto& s : r.sections) {
    os << "[" << s.name << "]\n";
    for (const auto& c : s.checks) {
      os << "  " << (c.verdict.ok ? "PASS " : "FAIL ") << c.name;
      if (!c.verdict.ok && !c.verdict.detail.empty()) os << ": " << c.verdict.detail;
      os << "\n";
    }
    for (const auto& it : s.items) os << "  " << it.key << ": " << it.value << "\n";
  }
  os << "result: " << (r.ok() ? "ok" : "failed (" + r.first_failure() + ")") << "\n";
  return os.str();
}

std::string render_json(const Report& r) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["subject"] = r.subject;
  doc["ok"] = r.ok();
  if (!r.ok()) doc["first_failure"] = r.first_failure();
  json sections = json::array();
  for (const auto& s : r.sections) {
    json js;
    js["name"] = s.name;
    js["ok"] = s.ok();
    json checks = json::array();
    for (const auto& c : s.checks) {
      json jc;
      jc["name"] = c.name;
      jc["ok"] = c.verdict.ok;
      if (!c.verdict.detail.empty()) jc["detail"] = c.verdict.detail;
      checks.push_back(std::move(jc));
    }
    js["checks"] = std::move(checks);
    json items = json::object();
    for (const auto& it : s.items) items[it.key] = it.value;
    js["values"] = std::move(items);
    sections.push_back(std::move(js));
  }
  doc["sections"] = std::move(sections);
  return doc.dump(2) + "\n";
}

}  // namespace hksym::cli
