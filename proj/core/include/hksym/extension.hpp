#pragma once

#include "hksym/cochain.hpp"
#include "hksym/triple.hpp"

namespace hksym {

/// Data of a quadratic extension: (l, Phi_l), (a, <,>_a, Phi_a), (alpha, gamma).
struct ExtensionInput {
  GradedLieAlgebra l;
  OrthogonalModule a;
  QuadCocycle2 cocycle;

  std::size_t l_dim() const { return l.algebra.dim(); }
  std::size_t a_dim() const { return a.dim(); }
};

class InvalidExtension : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Named checks: l grading, l proper, module, and the cocycle conditions.
CheckList validate(const ExtensionInput& in);

/// Index layout of d = l* + a + l.
struct ExtensionLayout {
  std::size_t n = 0;  // dim l
  std::size_t r = 0;  // dim a
  int z(std::size_t s) const { return static_cast<int>(s); }
  int a(std::size_t t) const { return static_cast<int>(n + t); }
  int l(std::size_t i) const { return static_cast<int>(n + r + i); }
  std::size_t dim() const { return 2 * n + r; }
};

/// Throws InvalidExtension naming the first violated condition.
HyperKahlerTriple build_extension(const ExtensionInput& in);
/// Assembles the bracket, metric and grading without validating.
HyperKahlerTriple build_extension_unchecked(const ExtensionInput& in);

/// (l1 + l2, a1 + a2, z1 + z2).
ExtensionInput direct_sum(const ExtensionInput& x, const ExtensionInput& y);

}  // namespace hksym
