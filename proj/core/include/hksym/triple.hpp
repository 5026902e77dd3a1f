#pragma once

#include <vector>

#include "hksym/grading.hpp"

namespace hksym {

/// Metric Lie algebra with a quaternionic grading.
struct HyperKahlerTriple {
  LieAlgebra algebra;
  QuatGrading grading;
  SymBilinearForm metric;

  std::size_t dim() const { return algebra.dim(); }
};

/// Thrown by constructions whose preconditions fail.
class InvalidTriple : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// <[x,y],z> + <y,[x,z]> = 0 on basis triples.
Verdict check_metric_invariant(const LieAlgebra& l, const SymBilinearForm& b);
/// <Qx,y> + <x,Qy> = 0 for Q in {I,J,K}.
Verdict check_metric_sp1_invariant(const QuatGrading& g, const SymBilinearForm& b);

/// Jacobi, metric, grading, properness, orthogonality of the parts and
/// nilpotency, in that order.
CheckList verify_triple(const HyperKahlerTriple& t);

/// Signature of the metric on the minus part. Throws std::domain_error when
/// the restriction is degenerate.
Signature signature_minus(const HyperKahlerTriple& t);

struct Holonomy {
  LieAlgebra algebra;        // on the plus part, basis in plus order
  std::vector<int> indices;  // plus indices in the triple
  bool abelian = true;
};
Holonomy holonomy_algebra(const HyperKahlerTriple& t);

/// g semidirect g with the pairing metric; the second copy carries
/// primed labels.
HyperKahlerTriple tangent_triple(const HyperKahlerTriple& t);
HyperKahlerTriple tangent_iterate(HyperKahlerTriple t, int times);

/// l semidirect l*, basis l* first then l, with the dual pairing metric.
/// Throws InvalidTriple unless the grading is valid and proper and the
/// center lies in the minus part.
HyperKahlerTriple cotangent_triple(const LieAlgebra& l, const QuatGrading& g);

}  // namespace hksym
