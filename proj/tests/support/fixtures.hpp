#pragma once

#include "hksym/catalog.hpp"

namespace fixtures {

/// H + span{X, Y} with [1,i] = X = -[j,k], [1,j] = Y = [i,k], [1,k] = 0.
hksym::GradedLieAlgebra two_dim_center();
/// two_dim_center() with a = 0 and the zero cocycle.
hksym::ExtensionInput two_dim_center_input();
/// Abelian H with a = 0 and the zero cocycle.
hksym::ExtensionInput zero_on_quaternions();
/// in with its cocycle replaced.
hksym::ExtensionInput with_cocycle(hksym::ExtensionInput in, hksym::QuadCocycle2 z);

}  // namespace fixtures
