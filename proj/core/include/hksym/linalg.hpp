#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hksym/scalar.hpp"

namespace hksym {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Scalar dot(const Vector& x, const Vector& y);
/// y += a * x
void axpy(Vector& y, const Scalar& a, const Vector& x);
Vector scaled(const Vector& v, const Scalar& a);
Vector operator+(const Vector& x, const Vector& y);
Vector operator-(const Vector& x, const Vector& y);
std::string to_string(const Vector& v);

/// Sorted (index, value) pairs without zero values.
using SparseVector = std::vector<std::pair<int, Scalar>>;

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t n);
/// y += a * x over a dense accumulator.
void accumulate(Vector& y, const Scalar& a, const SparseVector& x);
SparseVector sparse_sum(const SparseVector& x, const SparseVector& y);
SparseVector sparse_scaled(const SparseVector& x, const Scalar& a);

/// Dense row-major matrix over Scalar.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length rows).
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& x);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form with deterministic first-nonzero pivoting.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};
RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
/// Throws std::domain_error if singular.
Matrix inverse(const Matrix& m);

/// A subspace of K^n stored as the rows of its reduced echelon basis, so
/// equal subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
  static Subspace whole(std::size_t n);
  static Subspace span(std::size_t n, const std::vector<Vector>& generators);
  /// Span of the given standard basis vectors.
  static Subspace coordinate(std::size_t n, std::span<const int> indices);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_whole() const { return basis_.size() == ambient_; }

  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v to the span; returns true when the dimension grew.
  bool insert(Vector v);
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// v minus its reduction against the basis; zero iff v is contained.
  Vector residual(Vector v) const;
  /// Coordinates with respect to basis(); requires contains(v).
  Vector coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

struct LinearSolution {
  std::optional<Vector> particular;  // empty when inconsistent
  std::vector<Vector> kernel;
};

/// Full affine solution set of m x = b.
LinearSolution solve_linear(const Matrix& m, const Vector& b);
std::vector<Vector> kernel_basis(const Matrix& m);
Subspace kernel(const Matrix& m);
/// Column space.
Subspace image(const Matrix& m);
/// {x : b . x = 0 for every b in u}, with the plain coordinate pairing.
Subspace annihilator(const Subspace& u);
Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

/// Complement of u spanned by standard basis vectors, plus the map taking
/// a vector to its coordinates in K^n / u along that complement.
struct Quotient {
  std::vector<std::size_t> complement;  // standard basis indices
  Matrix projection;                    // (n - dim u) x n
};
Quotient quotient(const Subspace& u);

/// Symmetric bilinear form given by its Gram matrix.
class SymBilinearForm {
 public:
  SymBilinearForm() = default;
  /// Throws std::invalid_argument when gram is not square and symmetric.
  explicit SymBilinearForm(Matrix gram);
  static SymBilinearForm zero(std::size_t n);

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return gram_(i, j); }
  Scalar operator()(const Vector& x, const Vector& y) const;

  /// The form pulled back to the span of the given vectors.
  SymBilinearForm restrict_to(const std::vector<Vector>& basis) const;
  SymBilinearForm restrict_to(std::span<const int> indices) const;

  friend bool operator==(const SymBilinearForm&, const SymBilinearForm&) = default;

 private:
  Matrix gram_;
};

/// Inertia counts. negative comes first: (p, q) = (negative, positive).
struct Signature {
  std::size_t negative = 0;
  std::size_t positive = 0;
  std::size_t radical = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Exact congruence diagonalization, no eigenvalues involved.
Signature signature(const SymBilinearForm& form);
bool is_nondegenerate(const SymBilinearForm& form);
Subspace radical(const SymBilinearForm& form);
/// {x : B(x, u) = 0 for all u in U}.
Subspace perp(const Subspace& u, const SymBilinearForm& form);

}  // namespace hksym
