#include "fixtures.hpp"

namespace fixtures {

using namespace hksym;

GradedLieAlgebra two_dim_center() {
  LieAlgebra l(6, {"1", "i", "j", "k", "X", "Y"});
  l.set_bracket(0, 1, unit_vector(6, 4));
  l.set_bracket(2, 3, scaled(unit_vector(6, 4), -1));
  l.set_bracket(0, 2, unit_vector(6, 5));
  l.set_bracket(1, 3, unit_vector(6, 5));
  QuatGrading g;
  g.minus = {0, 1, 2, 3};
  g.plus = {4, 5};
  g.ops = left_h_operators();
  return {l, g};
}

ExtensionInput two_dim_center_input() {
  ExtensionInput in;
  in.l = two_dim_center();
  in.a = OrthogonalModule::zero();
  in.cocycle = QuadCocycle2::zero(6, 0);
  return in;
}

ExtensionInput zero_on_quaternions() {
  ExtensionInput in;
  in.l = abelian_quaternions(1);
  in.a = OrthogonalModule::zero();
  in.cocycle = QuadCocycle2::zero(4, 0);
  return in;
}

ExtensionInput with_cocycle(ExtensionInput in, QuadCocycle2 z) {
  in.cocycle = std::move(z);
  return in;
}

}  // namespace fixtures
