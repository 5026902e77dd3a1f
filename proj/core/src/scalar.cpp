#include "hksym/scalar.hpp"

#include <utility>

namespace hksym {

namespace {

bool is_squarefree(long d) {
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::quadratic(long d) {
  if (d < 2 || !is_squarefree(d)) {
    throw std::invalid_argument("radicand must be a squarefree integer >= 2, got " +
                                std::to_string(d));
  }
  return Field(d);
}

std::string Field::to_string() const {
  if (is_rational()) return "Q";
  return "Q(sqrt" + std::to_string(radicand_) + ")";
}

Field join(Field a, Field b) {
  if (a.is_rational()) return b;
  if (b.is_rational() || a == b) return a;
  throw FieldMismatch("cannot combine " + a.to_string() + " with " + b.to_string());
}

Scalar::Scalar(mpq_class a, mpq_class b, Field field)
    : a_(std::move(a)), b_(std::move(b)), field_(field) {
  a_.canonicalize();
  b_.canonicalize();
  if (field_.is_rational() && sgn(b_) != 0) {
    throw std::invalid_argument("nonzero radical part over Q");
  }
}

Scalar Scalar::fraction(long p, long q) {
  if (q == 0) throw std::domain_error("zero denominator");
  mpq_class r(p, q);
  r.canonicalize();
  return Scalar(std::move(r));
}

Scalar Scalar::sqrt(Field field) {
  if (field.is_rational()) throw std::invalid_argument("sqrt needs a quadratic field");
  return Scalar(mpq_class(0), mpq_class(1), field);
}

int Scalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 against b^2 d.
  const mpq_class lhs = a_ * a_;
  const mpq_class rhs = b_ * b_ * field_.radicand();
  const int c = cmp(lhs, rhs);
  if (c == 0) return 0;  // unreachable for squarefree d, kept total
  return c > 0 ? sa : sb;
}

void Scalar::adopt_field(const Scalar& o) { field_ = join(field_, o.field_); }

Scalar& Scalar::operator+=(const Scalar& o) {
  adopt_field(o);
  a_ += o.a_;
  if (sgn(o.b_) != 0) b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  adopt_field(o);
  a_ -= o.a_;
  if (sgn(o.b_) != 0) b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  adopt_field(o);
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  const mpq_class a = a_ * o.a_ + b_ * o.b_ * field_.radicand();
  const mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (sgn(b_) == 0) {
    Scalar r(*this);
    r.a_ = 1 / a_;
    return r;
  }
  const mpq_class norm = a_ * a_ - b_ * b_ * field_.radicand();
  return Scalar(a_ / norm, -b_ / norm, field_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (sgn(o.b_) == 0) {
    if (sgn(o.a_) == 0) throw std::domain_error("division by zero");
    adopt_field(o);
    a_ /= o.a_;
    if (sgn(b_) != 0) b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.a_ = -a_;
  r.b_ = -b_;
  return r;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  const std::string root = "sqrt" + std::to_string(field_.radicand());
  std::string radical;
  if (b_ == 1) {
    radical = root;
  } else if (b_ == -1) {
    radical = "-" + root;
  } else {
    radical = b_.get_str() + "*" + root;
  }
  if (sgn(a_) == 0) return radical;
  if (sgn(b_) < 0) {
    const mpq_class nb = -b_;
    return a_.get_str() + " - " + (nb == 1 ? root : nb.get_str() + "*" + root);
  }
  return a_.get_str() + " + " + radical;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

}  // namespace hksym
