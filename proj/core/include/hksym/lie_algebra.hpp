#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hksym/linalg.hpp"
#include "hksym/verdict.hpp"

namespace hksym {

/// [e_x, e_y] = out for a basis pair x < y.
struct BracketEntry {
  int x = 0;
  int y = 0;
  SparseVector out;
};

/// Finite-dimensional algebra given by structure constants. The bracket is
/// antisymmetric by construction; the Jacobi identity is checked, not assumed.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim, std::vector<std::string> labels = {});
  static LieAlgebra abelian(std::size_t dim, std::vector<std::string> labels = {});

  std::size_t dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  /// Index of a label, or -1.
  int index_of(const std::string& label) const;

  /// Sets [e_x, e_y] = v and [e_y, e_x] = -v. Requires x != y unless v = 0.
  void set_bracket(int x, int y, SparseVector v);
  void set_bracket(int x, int y, const Vector& v) { set_bracket(x, y, to_sparse(v)); }
  /// Adds v to [e_x, e_y].
  void add_to_bracket(int x, int y, const SparseVector& v);

  const SparseVector& bracket_basis(int x, int y) const {
    return table_[static_cast<std::size_t>(x) * n_ + static_cast<std::size_t>(y)];
  }
  Vector bracket(const Vector& x, const Vector& y) const;
  /// [e_x, v]
  Vector bracket_with_basis(int x, const Vector& v) const;

  /// Matrix of ad(e_x): column y is [e_x, e_y].
  Matrix ad_basis(int x) const;
  Matrix ad(const Vector& x) const;

  /// Nonzero brackets on pairs x < y.
  std::vector<BracketEntry> entries() const;
  bool is_abelian() const;
  /// Smallest field containing all structure constants.
  Field field() const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<SparseVector> table_;  // n*n, both orientations stored
};

/// Default labels e1..en.
std::vector<std::string> default_labels(std::size_t n, const std::string& stem = "e");

struct JacobiReport {
  bool ok = true;
  std::optional<std::array<int, 3>> witness;  // first failing basis triple
  Vector value;                               // cyclic sum on the witness
};
JacobiReport check_jacobi(const LieAlgebra& l);

struct LowerCentralSeries {
  std::vector<Subspace> terms;  // terms[k] is l^{k+1}; ends at the stable term
  bool nilpotent = false;
  /// Minimal m >= 0 with l^{m+2} = 0 (only meaningful when nilpotent).
  int m = 0;
  const Subspace& term(int k) const { return terms.at(static_cast<std::size_t>(k - 1)); }
};
LowerCentralSeries lower_central_series(const LieAlgebra& l);
/// l^k for k >= 1; zero past the end of a nilpotent series.
Subspace lcs_term(const LowerCentralSeries& s, int k);

/// {x : [x, u] = 0 for all u}.
Subspace center(const LieAlgebra& l);
/// span{[u, v] : u in U, v in V}
Subspace bracket_span(const LieAlgebra& l, const Subspace& u, const Subspace& v);

/// Kernel of the stacked linear maps given as rows, built incrementally.
Subspace kernel_of_rows(std::size_t n, const std::vector<Vector>& rows);

/// l1 + l2 with the first basis followed by the second.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace hksym
