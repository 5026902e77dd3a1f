#pragma once

#include <array>
#include <vector>

#include "hksym/lie_algebra.hpp"

namespace hksym {

/// Infinitesimal Sp(1)-action: a plus/minus split of the basis and the
/// operators I, J, K on the minus coordinates. Column c of each operator is
/// the image of the c-th minus basis vector.
struct QuatGrading {
  std::vector<int> plus;
  std::vector<int> minus;
  std::array<Matrix, 3> ops;  // I, J, K

  /// Everything in the plus part.
  static QuatGrading trivial(std::size_t n);
  /// Every basis vector minus; consecutive blocks of four are left
  /// H-modules with basis (1, i, j, k).
  static QuatGrading quaternionic(std::size_t blocks);

  std::size_t dim() const { return plus.size() + minus.size(); }
  const Matrix& op(int q) const { return ops.at(static_cast<std::size_t>(q)); }
  /// The operator on the full space, zero on the plus part.
  Matrix full_operator(int q) const;
  Vector apply(int q, const Vector& v) const;

  friend bool operator==(const QuatGrading&, const QuatGrading&) = default;
};

/// Left multiplication by i, j, k on H in the basis (1, i, j, k).
std::array<Matrix, 3> left_h_operators();
/// Block-diagonal copies of the given operators.
std::array<Matrix, 3> block_diagonal(const std::array<Matrix, 3>& ops, std::size_t copies);

/// Gradings of a direct sum (indices of b shifted by a.dim()).
QuatGrading direct_sum(const QuatGrading& a, const QuatGrading& b);

struct GradedLieAlgebra {
  LieAlgebra algebra;
  QuatGrading grading;
};

/// Partition, H-module relations and the derivation/containment rules.
CheckList verify_grading_checks(const LieAlgebra& l, const QuatGrading& g);
Verdict verify_grading(const LieAlgebra& l, const QuatGrading& g);
/// span [l-, l-] = l+.
Verdict check_proper(const LieAlgebra& l, const QuatGrading& g);

}  // namespace hksym
