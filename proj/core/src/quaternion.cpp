#include "hksym/quaternion.hpp"

#include <sstream>
#include <stdexcept>

namespace hksym {

Quaternion Quaternion::unit(int index) {
  switch (index) {
    case 0: return one();
    case 1: return i();
    case 2: return j();
    case 3: return k();
    default: throw std::out_of_range("quaternion basis index must be 0..3");
  }
}

Quaternion Quaternion::from_vector(const Vector& v) {
  if (v.size() != 4) throw DimensionMismatch("quaternion needs 4 coordinates");
  return {v[0], v[1], v[2], v[3]};
}

Quaternion Quaternion::inverse() const {
  const Scalar n = norm();
  if (n.is_zero()) throw std::domain_error("zero quaternion has no inverse");
  return n.inverse() * conj();
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

std::string Quaternion::to_string() const {
  std::ostringstream os;
  os << '(' << w << ", " << x << ", " << y << ", " << z << ')';
  return os.str();
}

Scalar real_inner(const Quaternion& p, const Quaternion& q) {
  return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

Matrix left_mult_matrix(const Quaternion& q) {
  Matrix m(4, 4);
  for (int c = 0; c < 4; ++c) {
    const Vector col = (q * Quaternion::unit(c)).to_vector();
    for (int r = 0; r < 4; ++r) m(r, c) = col[r];
  }
  return m;
}

Matrix right_mult_matrix(const Quaternion& q) {
  Matrix m(4, 4);
  for (int c = 0; c < 4; ++c) {
    const Vector col = (Quaternion::unit(c) * q).to_vector();
    for (int r = 0; r < 4; ++r) m(r, c) = col[r];
  }
  return m;
}

Matrix lambda_so3(const Quaternion& q) {
  if (q.norm() != Scalar(1)) {
    throw std::invalid_argument("lambda_so3: quaternion " + q.to_string() + " is not a unit");
  }
  Matrix m(3, 3);
  const Quaternion qc = q.conj();
  for (int c = 0; c < 3; ++c) {
    const Vector col = (q * Quaternion::unit(c + 1) * qc).imag_vector();
    for (int r = 0; r < 3; ++r) m(r, c) = col[r];
  }
  return m;
}

Scalar determinant3(const Matrix& m) {
  if (m.rows() != 3 || m.cols() != 3) throw DimensionMismatch("determinant3 needs a 3x3 matrix");
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

}  // namespace hksym
