#pragma once

#include <string>
#include <vector>

#include "hksym/extension.hpp"

namespace hksym {

struct ConditionVerdict {
  std::string name;  // "T", "A0", "B1", ...
  bool ok = true;
  std::string detail;
  /// A_k: basis of the admissible L0 directions (in l coordinates).
  /// B_k: basis of the radical of <,>_a on the pushed-forward image.
  std::vector<Vector> witness;
};

struct AdmissibilityReport {
  int m = 0;  // minimal with l^{m+2} = 0
  ConditionVerdict T;
  std::vector<ConditionVerdict> A;  // k = 0..m
  std::vector<ConditionVerdict> B;  // k = 0..m
  bool admissible() const;
  /// T, then A_k and B_k interleaved by k.
  std::vector<const ConditionVerdict*> all() const;
  const ConditionVerdict* first_failure() const;
};

/// (T), (A_k), (B_k) for 0 <= k <= m. Throws std::invalid_argument if l
/// is not nilpotent.
AdmissibilityReport check_admissible(const ExtensionInput& in);

/// Kernel of the bracket map on pairs drawn from the given index set.
std::vector<Vector> bracket_kernel_pairs(const LieAlgebra& l, const std::vector<int>& indices,
                                         std::vector<std::pair<int, int>>& pairs);

enum class Indecomposability { certified, unknown };

struct IndecomposabilityVerdict {
  Indecomposability verdict = Indecomposability::unknown;
  std::string reason;
};

/// Sufficient criteria only; anything not covered is reported unknown.
IndecomposabilityVerdict check_indecomposable_sufficient(const ExtensionInput& in);

}  // namespace hksym
