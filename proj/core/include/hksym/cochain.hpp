#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hksym/grading.hpp"

namespace hksym {

/// Coefficient module: an orthogonally graded vector space (a, <,>_a, Phi_a).
/// The trivial module is one-dimensional with trivial grading.
struct OrthogonalModule {
  SymBilinearForm form;
  QuatGrading grading;
  std::vector<std::string> labels;

  static OrthogonalModule trivial();
  /// The zero module.
  static OrthogonalModule zero();
  std::size_t dim() const { return form.dim(); }
  /// Skew-compatibility of I, J, K with the form, plus grading shape.
  Verdict validate() const;
};

OrthogonalModule direct_sum(const OrthogonalModule& a, const OrthogonalModule& b);

/// Number of strictly increasing p-tuples from {0..n-1}.
std::size_t binomial(std::size_t n, std::size_t k);
/// Colex rank of a strictly increasing tuple.
std::size_t tuple_rank(std::span<const int> increasing);
/// All strictly increasing p-tuples in colex order (rank order).
std::vector<std::vector<int>> increasing_tuples(std::size_t n, std::size_t p);

/// p-linear alternating map on an n-dimensional space with values in a
/// coeff_dim-dimensional space. Stored only on increasing tuples.
class AlternatingForm {
 public:
  AlternatingForm() = default;
  AlternatingForm(std::size_t domain_dim, std::size_t degree, std::size_t coeff_dim = 1);

  std::size_t domain_dim() const { return n_; }
  std::size_t degree() const { return p_; }
  std::size_t coeff_dim() const { return r_; }
  std::size_t tuple_count() const { return binomial(n_, p_); }

  /// Value on arbitrary basis indices; sign of the sorting permutation is
  /// applied, repeated indices give zero.
  Vector at(std::span<const int> args) const;
  /// Scalar-valued forms only.
  Scalar scalar_at(std::span<const int> args) const;
  /// Component k of the value on an increasing tuple of given rank.
  const Scalar& component(std::size_t rank, std::size_t k) const { return values_[rank * r_ + k]; }
  Scalar& component(std::size_t rank, std::size_t k) { return values_[rank * r_ + k]; }

  /// Sets the value on distinct indices (reordered with sign).
  void set(std::span<const int> args, const Vector& value);
  void set(std::initializer_list<int> args, const Vector& value) {
    set(std::span<const int>(args.begin(), args.size()), value);
  }
  void add(std::span<const int> args, const Vector& value);
  void set_scalar(std::initializer_list<int> args, const Scalar& v) { set(args, Vector{v}); }

  /// Visits each increasing tuple with a nonzero value.
  void for_each_nonzero(const std::function<void(const std::vector<int>&, const Vector&)>& fn) const;
  bool is_zero() const { return hksym::is_zero(values_); }
  /// Smallest field containing all values.
  Field field() const;
  /// Raw storage: tuple rank major, coefficient minor.
  const std::vector<Scalar>& raw() const { return values_; }
  std::vector<Scalar>& raw() { return values_; }

  AlternatingForm& operator+=(const AlternatingForm& o);
  AlternatingForm& operator-=(const AlternatingForm& o);
  friend AlternatingForm operator+(AlternatingForm a, const AlternatingForm& b) { return a += b; }
  friend AlternatingForm operator-(AlternatingForm a, const AlternatingForm& b) { return a -= b; }
  friend AlternatingForm operator*(const Scalar& s, const AlternatingForm& a);
  friend bool operator==(const AlternatingForm&, const AlternatingForm&) = default;

 private:
  void require_compatible(const AlternatingForm& o) const;

  std::size_t n_ = 0;
  std::size_t p_ = 0;
  std::size_t r_ = 1;
  std::vector<Scalar> values_;
};

/// Chevalley-Eilenberg differential for a trivial module:
/// (dc)(x0..xp) = sum_{i<j} (-1)^{i+j} c([xi,xj], x0..^i..^j..xp).
AlternatingForm differential(const LieAlgebra& l, const AlternatingForm& c);

/// <u ^ v>: shuffle sum with shuffle parity, values paired through form.
AlternatingForm wedge_pair(const AlternatingForm& u, const AlternatingForm& v, const SymBilinearForm& form);

/// Infinitesimal invariance defect for operator q (0, 1, 2):
/// sum_t c(.., Q x_t, ..) - Q_a c(..).
AlternatingForm invariance_defect(const AlternatingForm& c, const QuatGrading& gl, const QuatGrading& ga, int q);
Verdict check_sp1_invariant(const AlternatingForm& c, const QuatGrading& gl, const QuatGrading& ga);
/// Scalar-valued forms.
Verdict check_sp1_invariant(const AlternatingForm& c, const QuatGrading& gl);

/// Basis of the Sp(1)-invariant forms of the given degree.
std::vector<AlternatingForm> invariant_basis(const QuatGrading& gl, const OrthogonalModule& a, std::size_t degree);

/// (tau, sigma): tau in C^1(l, a), sigma in C^2(l).
struct QuadCochain1 {
  AlternatingForm tau;
  AlternatingForm sigma;
  static QuadCochain1 identity(std::size_t l_dim, std::size_t a_dim);
  friend bool operator==(const QuadCochain1&, const QuadCochain1&) = default;
};

/// (alpha, gamma): alpha in C^2(l, a), gamma in C^3(l).
struct QuadCocycle2 {
  AlternatingForm alpha;
  AlternatingForm gamma;
  static QuadCocycle2 zero(std::size_t l_dim, std::size_t a_dim);
  friend bool operator==(const QuadCocycle2&, const QuadCocycle2&) = default;
};

struct CocycleReport {
  CheckList checks;
  std::optional<std::vector<int>> witness;  // first failing tuple
  bool ok() const { return checks.ok(); }
};

/// d alpha = 0, d gamma = 1/2 <alpha ^ alpha>, both Sp(1)-invariant.
CocycleReport check_cocycle(const GradedLieAlgebra& l, const OrthogonalModule& a, const QuadCocycle2& z);

/// (t1 + t2, s1 + s2 + 1/2 <t1 ^ t2>)
QuadCochain1 group_mul(const QuadCochain1& c1, const QuadCochain1& c2, const OrthogonalModule& a);
/// (-t, 1/2 <t ^ t> - s)
QuadCochain1 group_inverse(const QuadCochain1& c, const OrthogonalModule& a);

/// (alpha + d tau, gamma + d sigma + <(alpha + 1/2 d tau) ^ tau>). Throws
/// std::invalid_argument when an input is not Sp(1)-invariant.
QuadCocycle2 act(const GradedLieAlgebra& l, const OrthogonalModule& a, const QuadCocycle2& z, const QuadCochain1& c);
/// Same formula without the invariance checks.
QuadCocycle2 act_unchecked(const LieAlgebra& l, const OrthogonalModule& a, const QuadCocycle2& z,
                           const QuadCochain1& c);

/// Form on l1 + l2 with values in a1 + a2: f1 on the first summand, f2 on
/// the second, zero on mixed tuples.
AlternatingForm direct_sum(const AlternatingForm& f1, const AlternatingForm& f2);
QuadCocycle2 direct_sum(const QuadCocycle2& z1, const QuadCocycle2& z2);

/// phi^* c for phi: K^m -> K^n given as an n x m matrix.
AlternatingForm pullback(const AlternatingForm& c, const Matrix& phi);
/// Applies a linear map (r' x r matrix) to the values.
AlternatingForm map_values(const AlternatingForm& c, const Matrix& m);

}  // namespace hksym
