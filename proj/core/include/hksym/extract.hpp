#pragma once

#include <stdexcept>

#include "hksym/extension.hpp"

namespace hksym {

class ExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Subspaces found on the way, in coordinates of the triple.
struct ExtractionData {
  Subspace isotropic_ideal;  // i = sum_{k>=2} g^k cap (g^k)^perp
  Subspace ideal_perp;       // i^perp
  std::vector<Vector> section;     // s(L_1..L_n), isotropic and graded
  std::vector<Vector> a_basis;     // basis of i^perp cap s(l)^perp
  std::vector<Vector> dual_basis;  // Z_1..Z_n in i with <Z_s, s(L_t)> = delta
};

/// Presents a valid triple as a quadratic extension of l = g / i^perp by
/// a = i^perp / i. Throws ExtractionError if no equivariant isotropic
/// section can be formed.
ExtensionInput extract_canonical(const HyperKahlerTriple& t, ExtractionData* data = nullptr);

}  // namespace hksym
