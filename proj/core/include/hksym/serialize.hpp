#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hksym/extension.hpp"
#include "hksym/symplectic.hpp"

namespace hksym {

/// Malformed document. line/column are set for syntax errors, path for
/// structural ones.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

enum class DocumentKind { extension, triple, quartic };

/// Any of the three interchange documents, told apart by their keys:
/// "module" for extension data, "metric" for triples, "quartic" for S^4 E.
struct Document {
  DocumentKind kind = DocumentKind::extension;
  std::optional<ExtensionInput> extension;
  std::optional<HyperKahlerTriple> triple;
  std::optional<ac::SymplecticSpace> space;
  std::optional<ac::SymPoly> quartic;
};

Document parse_document(std::string_view text);
ExtensionInput parse_extension(std::string_view text);
HyperKahlerTriple parse_triple(std::string_view text);

/// Pretty-printed JSON with a trailing newline.
std::string to_json(const ExtensionInput& in);
std::string to_json(const HyperKahlerTriple& t);
std::string to_json(const ac::SymplecticSpace& e, const ac::SymPoly& s);

/// "Q" or "Q(sqrt d)".
Field parse_field(const std::string& text);

}  // namespace hksym
