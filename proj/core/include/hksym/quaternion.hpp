#pragma once

#include <array>
#include <string>

#include "hksym/linalg.hpp"

namespace hksym {

/// w + x i + y j + z k over Scalar.
struct Quaternion {
  Scalar w, x, y, z;

  static Quaternion one() { return {1, 0, 0, 0}; }
  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }
  /// Basis element 1, i, j, k by index 0..3.
  static Quaternion unit(int index);
  static Quaternion from_vector(const Vector& v);  // length 4

  Quaternion conj() const { return {w, -x, -y, -z}; }
  /// q conj(q), a scalar.
  Scalar norm() const { return w * w + x * x + y * y + z * z; }
  Quaternion inverse() const;
  Quaternion real_part() const { return {w, 0, 0, 0}; }
  Quaternion imag_part() const { return {0, x, y, z}; }
  Vector to_vector() const { return {w, x, y, z}; }
  Vector imag_vector() const { return {x, y, z}; }
  bool is_zero() const { return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }
  std::string to_string() const;

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator*(const Scalar& s, const Quaternion& a) {
    return {s * a.w, s * a.x, s * a.y, s * a.z};
  }
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

/// Re(conj(p) q): the Euclidean form on R^4.
Scalar real_inner(const Quaternion& p, const Quaternion& q);

/// 4x4 matrix of v -> q v (resp. v q) in the basis (1, i, j, k).
Matrix left_mult_matrix(const Quaternion& q);
Matrix right_mult_matrix(const Quaternion& q);

/// Matrix of v -> q v conj(q) on Im H in the basis (i, j, k); columns are
/// images. Throws std::invalid_argument unless q conj(q) = 1 exactly.
Matrix lambda_so3(const Quaternion& q);

Scalar determinant3(const Matrix& m);

}  // namespace hksym
