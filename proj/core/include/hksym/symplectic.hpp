#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hksym/linalg.hpp"

namespace hksym::ac {

/// K^{2n} with basis p1..pn, q1..qn and omega(p_i, q_i) = 1.
class SymplecticSpace {
 public:
  explicit SymplecticSpace(std::size_t n = 4) : n_(n) {}
  std::size_t half_dim() const { return n_; }
  std::size_t dim() const { return 2 * n_; }
  int p(std::size_t i) const { return static_cast<int>(i - 1); }  // 1-based
  int q(std::size_t i) const { return static_cast<int>(n_ + i - 1); }
  std::string label(int k) const;
  /// -1 when the label is not of the form p<i> / q<i> in range.
  int index_of(const std::string& label) const;
  Scalar omega(int x, int y) const;
  Scalar omega(const Vector& x, const Vector& y) const;
  Matrix gram() const;

 private:
  std::size_t n_;
};

/// Homogeneous polynomial in the basis vectors of E, i.e. an element of S^d E.
class SymPoly {
 public:
  using Monomial = std::vector<int>;  // sorted basis indices, with repetition

  SymPoly() = default;
  SymPoly(std::size_t space_dim, std::size_t degree) : dim_(space_dim), degree_(degree) {}
  static SymPoly monomial(std::size_t space_dim, Monomial m, const Scalar& c = 1);

  std::size_t space_dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  Scalar coefficient(Monomial m) const;
  /// Adds c times the monomial; throws std::invalid_argument on a degree or index mismatch.
  void add_term(Monomial m, const Scalar& c);
  bool is_zero() const { return terms_.empty(); }
  Field field() const;

  /// Partial derivative along the k-th coordinate.
  SymPoly derivative(int k) const;
  SymPoly times(int k) const;

  /// Coefficients over all_monomials(space_dim, degree).
  Vector to_vector() const;
  static SymPoly from_vector(std::size_t space_dim, std::size_t degree, const Vector& v);

  std::string to_string(const SymplecticSpace& e) const;

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const Scalar& s, const SymPoly& p);
  friend bool operator==(const SymPoly&, const SymPoly&) = default;

 private:
  void require_compatible(const SymPoly& o) const;
  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  std::map<Monomial, Scalar> terms_;
};

/// Sorted multisets of the given size, in lexicographic order.
std::vector<SymPoly::Monomial> all_monomials(std::size_t space_dim, std::size_t degree);

/// S_v: derivative along the functional omega(v, .). Degree 0 maps to zero.
SymPoly contract(const SymplecticSpace& e, const SymPoly& s, const Vector& v);
SymPoly contract(const SymplecticSpace& e, const SymPoly& s, int basis_index);

/// Echelon span of all S_{v,w} over basis pairs, with a polynomial basis.
struct HSpan {
  Subspace span;                // in S^2 E coordinates
  std::vector<SymPoly> basis;   // polynomials of span.basis()
  std::size_t dim() const { return basis.size(); }
};
HSpan span_hS(const SymplecticSpace& e, const SymPoly& s);

/// P(S) = sum c_ab (e_a S_{e_b} + e_b S_{e_a}) for P = sum c_ab e_a e_b.
/// Works for S of any degree; on S^2 E it is the bracket of sp(E).
SymPoly act_quadratic(const SymplecticSpace& e, const SymPoly& p, const SymPoly& s);

struct CruxVerdict {
  bool ok = true;
  HSpan h;
  std::optional<SymPoly> failing;  // basis element P with P(S) != 0
};
/// S in (S^4 E)^{h_S}.
CruxVerdict check_crux(const SymplecticSpace& e, const SymPoly& s);

enum class Tameness { tame_certified, not_tame, unknown };
std::string to_string(Tameness t);

struct TamenessResult {
  Tameness verdict = Tameness::unknown;
  Subspace annihilator;             // {v : S_v = 0}
  std::vector<Vector> lagrangian;   // witness when tame
  std::string reason;
};
/// S lies in S^4 L for a Lagrangian L iff ann(S) is coisotropic, in which
/// case a Lagrangian inside ann(S) is returned.
TamenessResult tameness(const SymplecticSpace& e, const SymPoly& s);

class CruxNotSatisfied : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct AbelianResult {
  bool abelian = true;
  std::optional<std::pair<SymPoly, SymPoly>> witness;  // non-commuting pair
};
/// Throws CruxNotSatisfied when h_S is not known to be a subalgebra.
AbelianResult check_hS_abelian(const SymplecticSpace& e, const SymPoly& s);

/// p1^3 q3 + sqrt3 p1^2 p2 p4 - sqrt3 p1 p2^2 q4 - p2^3 p3 in dimension 8.
SymPoly ac_builtin();
SymplecticSpace ac_builtin_space();

}  // namespace hksym::ac
