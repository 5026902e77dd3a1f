#pragma once

// Reference computations written directly from the definitions. They share
// only Scalar, Vector and Matrix with the library.

#include <array>
#include <map>
#include <vector>

#include "hksym/cochain.hpp"
#include "hksym/linalg.hpp"

namespace oracle {

using hksym::Matrix;
using hksym::Scalar;
using hksym::Vector;

using Quat = std::array<Scalar, 4>;  // (1, i, j, k) coordinates

/// Hamilton product from the multiplication table of the units.
Quat qmul(const Quat& a, const Quat& b);
Quat qconj(const Quat& a);
Quat qunit(int idx);

/// [x, y] on H + Im H, coordinates (1, i, j, k, I, J, K): (0, Im(conj(q1) q2)).
Vector l0_bracket(const Vector& x, const Vector& y);

/// alpha0 on H + Im H with values in H (x) span{A1, A2}, coordinates
/// (A1, iA1, jA1, kA1, A2, ..., kA2); A3 = -A1 - A2.
Vector alpha0(const Vector& x, const Vector& y);

/// Matrix of v -> u v conj(u) on Im H, columns are images.
Matrix rotation(const Quat& u);

/// Multilinear value of a form on arbitrary vectors: sum over all index
/// tuples of products of coordinates.
Vector evaluate(const hksym::AlternatingForm& c, const std::vector<Vector>& args);

/// (dc)(x0..xp) from the defining sum on arbitrary vectors.
Vector differential_at(const hksym::AlternatingForm& c, const hksym::LieAlgebra& l, const std::vector<Vector>& args);

/// <u ^ v>(x_1..x_{p+q}) = 1/(p! q!) sum_sigma sgn(sigma) <u(..), v(..)>.
Scalar wedge_at(const hksym::AlternatingForm& u, const hksym::AlternatingForm& v, const Matrix& gram,
                const std::vector<int>& args);

/// Inertia from the characteristic polynomial (Faddeev-LeVerrier) and
/// Descartes' rule, exact because all roots of a symmetric matrix are real.
hksym::Signature signature(const Matrix& gram);

/// Polynomials on K^{2n} as exponent vectors; omega(p_i, q_i) = 1.
struct Poly {
  std::size_t n2 = 0;
  std::map<std::vector<int>, Scalar> terms;
};
Poly poly_from_monomials(std::size_t n2, const std::vector<std::pair<std::vector<int>, Scalar>>& terms);
/// S_v = derivative along omega(v, .).
Poly contract(const Poly& s, const Vector& v);
/// P(S) for P = sum c x y: sum c (x S_y + y S_x).
Poly act(const Poly& p, const Poly& s);
bool is_zero(const Poly& p);
/// Coefficient on the multiset of indices.
Scalar coefficient(const Poly& p, const std::vector<int>& multiset);

}  // namespace oracle
