#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hksym {

/// Raised when elements of two different quadratic fields meet.
class FieldMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The field of definition of a computation: Q (radicand 0) or Q(sqrt d)
/// for a squarefree integer d >= 2.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rational() { return Field(); }
  /// Throws std::invalid_argument unless d >= 2 is squarefree.
  static Field quadratic(long d);

  constexpr long radicand() const { return radicand_; }
  constexpr bool is_rational() const { return radicand_ == 0; }

  friend constexpr bool operator==(Field, Field) = default;

  /// "Q" or "Q(sqrt d)".
  std::string to_string() const;

 private:
  constexpr explicit Field(long d) : radicand_(d) {}
  long radicand_ = 0;
};

/// The smaller field containing both; rational fields are absorbed.
Field join(Field a, Field b);

/// Exact element a + b*sqrt(d) of Q or of a real quadratic field.
///
/// Scalars built from integers or rationals carry the rational tag and mix
/// freely with any field; two elements tagged with different radicands
/// cannot be combined.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
  Scalar(mpq_class a, mpq_class b, Field field);

  /// p/q as an exact rational.
  static Scalar fraction(long p, long q);
  /// sqrt(d) in Q(sqrt d).
  static Scalar sqrt(Field field);

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& radical_part() const { return b_; }
  Field field() const { return field_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// Exact sign of the real number a + b*sqrt(d), with sqrt(d) > 0.
  int sign() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  Scalar operator-() const;

  /// Value equality; the field tag does not take part.
  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

  /// Human readable form, e.g. "-3/2", "sqrt3", "1 - 2*sqrt3".
  std::string to_string() const;

 private:
  void adopt_field(const Scalar& o);

  mpq_class a_;
  mpq_class b_;
  Field field_;
};

/// Sign as a free function, matching the other scalar helpers.
inline int scalar_sign(const Scalar& x) { return x.sign(); }

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace hksym
