#pragma once

#include <string>
#include <vector>

#include "hksym/admissibility.hpp"
#include "hksym/symplectic.hpp"

namespace hksym::cli {

struct ReportItem {
  std::string key;
  std::string value;
};

struct ReportSection {
  std::string name;
  std::vector<Check> checks;
  std::vector<ReportItem> items;
  bool ok() const;
};

struct Report {
  std::string subject;
  std::vector<ReportSection> sections;
  bool ok() const;
  /// "section: check: detail" for the first failing check, empty when ok.
  std::string first_failure() const;
};

/// Input checks of extension data.
ReportSection input_section(const ExtensionInput& in);
/// verify_triple plus signature and holonomy when the triple is valid.
ReportSection triple_section(const HyperKahlerTriple& t);
ReportSection admissibility_section(const AdmissibilityReport& r);
ReportSection indecomposability_section(const IndecomposabilityVerdict& v);
/// Crux, tameness and (when crux holds) the abelian flag of h_S.
ReportSection accheck_section(const ac::SymplecticSpace& e, const ac::SymPoly& s);

std::string render_text(const Report& r);
std::string render_json(const Report& r);

std::string format_signature(const Signature& s);

}  // namespace hksym::cli
