#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hksym/extension.hpp"
#include "hksym/quaternion.hpp"

namespace hksym {

/// l0 = H + Im H with [q1, q2] = Im(conj(q1) q2); basis 1, i, j, k, I, J, K.
GradedLieAlgebra quaternion_heisenberg();
/// H with zero bracket and left multiplication.
GradedLieAlgebra abelian_quaternions(std::size_t copies = 1);

/// The input (l0, a0, alpha0, gamma0).
ExtensionInput example1();

/// l0 + H^n with a = a0 + a_{A_1} + ... + a_{A_n}. Each A must be a
/// symmetric, traceless, invertible 3x3 matrix.
ExtensionInput example2(const std::vector<Matrix>& a_list);
/// n copies of diag(1, 1, -2).
ExtensionInput example2(std::size_t n);
Matrix example2_default_matrix();

/// alpha_+ on H + H with values in Im H + Im H.
AlternatingForm alpha_plus();
/// Im H + Im H with <(P1,P2),(Q1,Q2)> = <P1,A Q2> + <Q1,A P2>, trivial grading.
OrthogonalModule module_a_A(const Matrix& a);
/// Throws std::invalid_argument naming the violated condition.
void validate_example2_matrix(const Matrix& a);

/// Exact pair (s, c) with s^2 + c^2 = 1.
struct PythagoreanAngle {
  Scalar s;
  Scalar c;
  /// Throws std::invalid_argument unless s^2 + c^2 = 1 (and 0 < s <= c
  /// when require_normal_range is set).
  static PythagoreanAngle make(Scalar s, Scalar c, bool require_normal_range = false);
  /// (2t / (1 + t^2), (1 - t^2) / (1 + t^2)).
  static PythagoreanAngle from_parameter(const Scalar& t);
};

enum class ClassificationKind { a_prime, a_r, a_s };
std::optional<ClassificationKind> parse_classification_kind(const std::string& name);
std::string to_string(ClassificationKind kind);

/// alpha(x, y) = sum_m Re(conj(x) y conj(e_m)) A'_m on l = H with
/// e = (i, j, k) and A'_m given as coordinate vectors in a.
AlternatingForm quaternion_cocycle(const std::vector<Vector>& images);

/// Images of the cocycle pulled back along x -> x q0 with q0 = r u, u a unit:
/// A_n -> r^2 sum_m lambda(u)_{nm} A_m.
std::vector<Vector> transformed_images(const std::vector<Vector>& images, const Scalar& r, const Quaternion& u);

/// Abelian l = H, a = a+ with the form of the given kind, alpha as listed.
/// Throws std::invalid_argument when the angle is missing for a-r / a-s.
ExtensionInput classification_cocycle(ClassificationKind kind, const std::optional<PythagoreanAngle>& angle = {});

/// (H, Phi_H, -Re(conj(p) q)).
HyperKahlerTriple flat_quaternion_triple();
/// l = 0 and a = H with the negative form: builds to the flat triple.
ExtensionInput flat_input();

/// How an expected value is known.
enum class Basis { published, derived, trivial };
std::string to_string(Basis b);

struct Expectation {
  std::string property;  // "dim", "signature", "admissible", "holonomy abelian"
  std::string value;
  Basis basis = Basis::derived;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::string parameters;  // human readable defaults
  std::vector<Expectation> expected;
};

/// All named inputs with their expected properties.
const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry* find_catalog_entry(const std::string& name);

}  // namespace hksym
