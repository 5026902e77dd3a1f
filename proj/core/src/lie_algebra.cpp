#include "hksym/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hksym {

std::vector<std::string> default_labels(std::size_t n, const std::string& stem) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels)
    : n_(dim), table_(dim * dim) {
  set_labels(labels.empty() ? default_labels(dim) : std::move(labels));
}

LieAlgebra LieAlgebra::abelian(std::size_t dim, std::vector<std::string> labels) {
  return LieAlgebra(dim, std::move(labels));
}

void LieAlgebra::set_labels(std::vector<std::string> labels) {
  if (labels.size() != n_) throw DimensionMismatch("label count differs from dimension");
  std::map<std::string, int> seen;
  for (const auto& s : labels) {
    if (!seen.emplace(s, 0).second) throw std::invalid_argument("duplicate basis label '" + s + "'");
  }
  labels_ = std::move(labels);
}

int LieAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return -1;
}

void LieAlgebra::set_bracket(int x, int y, SparseVector v) {
  const auto n = static_cast<int>(n_);
  if (x < 0 || y < 0 || x >= n || y >= n) throw std::out_of_range("bracket index out of range");
  for (const auto& [i, c] : v) {
    (void)c;
    if (i < 0 || i >= n) throw std::out_of_range("bracket value index out of range");
  }
  std::erase_if(v, [](const auto& e) { return e.second.is_zero(); });
  if (x == y) {
    if (!v.empty()) throw std::invalid_argument("[e, e] must vanish");
    return;
  }
  table_[static_cast<std::size_t>(y) * n_ + static_cast<std::size_t>(x)] = sparse_scaled(v, Scalar(-1));
  table_[static_cast<std::size_t>(x) * n_ + static_cast<std::size_t>(y)] = std::move(v);
}

void LieAlgebra::add_to_bracket(int x, int y, const SparseVector& v) {
  set_bracket(x, y, sparse_sum(bracket_basis(x, y), v));
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != n_ || y.size() != n_) throw DimensionMismatch("bracket: vector length");
  Vector out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      accumulate(out, x[i] * y[j], table_[i * n_ + j]);
    }
  }
  return out;
}

Vector LieAlgebra::bracket_with_basis(int x, const Vector& v) const {
  if (v.size() != n_) throw DimensionMismatch("bracket: vector length");
  Vector out(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    if (!v[j].is_zero()) accumulate(out, v[j], bracket_basis(x, static_cast<int>(j)));
  }
  return out;
}

Matrix LieAlgebra::ad_basis(int x) const {
  Matrix m(n_, n_);
  for (std::size_t y = 0; y < n_; ++y)
    for (const auto& [t, c] : bracket_basis(x, static_cast<int>(y))) m(t, y) = c;
  return m;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t y = 0; y < n_; ++y)
      for (const auto& [t, c] : bracket_basis(static_cast<int>(i), static_cast<int>(y)))
        m(t, y) += x[i] * c;
  }
  return m;
}

std::vector<BracketEntry> LieAlgebra::entries() const {
  std::vector<BracketEntry> out;
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = x + 1; y < n_; ++y)
      if (!table_[x * n_ + y].empty())
        out.push_back({static_cast<int>(x), static_cast<int>(y), table_[x * n_ + y]});
  return out;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& v : table_)
    if (!v.empty()) return false;
  return true;
}

Field LieAlgebra::field() const {
  Field f;
  for (const auto& v : table_)
    for (const auto& [i, c] : v) {
      (void)i;
      f = join(f, c.field());
    }
  return f;
}

namespace {

// [[e_i, e_j], e_k] as a sparse vector.
SparseVector double_bracket(const LieAlgebra& l, int i, int j, int k) {
  SparseVector acc;
  for (const auto& [t, c] : l.bracket_basis(i, j)) {
    const auto& inner = l.bracket_basis(t, k);
    if (!inner.empty()) acc = sparse_sum(acc, sparse_scaled(inner, c));
  }
  return acc;
}

}  // namespace

JacobiReport check_jacobi(const LieAlgebra& l) {
  JacobiReport rep;
  const auto n = static_cast<int>(l.dim());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        SparseVector s = sparse_sum(double_bracket(l, i, j, k), double_bracket(l, j, k, i));
        s = sparse_sum(s, double_bracket(l, k, i, j));
        if (!s.empty()) {
          rep.ok = false;
          rep.witness = std::array<int, 3>{i, j, k};
          rep.value = to_dense(s, l.dim());
          return rep;
        }
      }
  return rep;
}

Subspace bracket_span(const LieAlgebra& l, const Subspace& u, const Subspace& v) {
  Subspace out(l.dim());
  for (const auto& a : u.basis())
    for (const auto& b : v.basis()) out.insert(l.bracket(a, b));
  return out;
}

LowerCentralSeries lower_central_series(const LieAlgebra& l) {
  LowerCentralSeries s;
  const Subspace whole = Subspace::whole(l.dim());
  s.terms.push_back(whole);
  while (!s.terms.back().is_zero()) {
    Subspace next(l.dim());
    // [l, l^k] is spanned by brackets of basis vectors with a basis of l^k.
    for (std::size_t x = 0; x < l.dim(); ++x)
      for (const auto& b : s.terms.back().basis())
        next.insert(l.bracket_with_basis(static_cast<int>(x), b));
    if (next == s.terms.back()) break;
    s.terms.push_back(std::move(next));
  }
  s.nilpotent = s.terms.back().is_zero();
  if (s.nilpotent) s.m = std::max(0, static_cast<int>(s.terms.size()) - 2);
  return s;
}

Subspace lcs_term(const LowerCentralSeries& s, int k) {
  if (k < 1) throw std::out_of_range("lower central series index starts at 1");
  if (static_cast<std::size_t>(k) <= s.terms.size()) return s.terms[static_cast<std::size_t>(k - 1)];
  if (s.nilpotent) return Subspace(s.terms.front().ambient_dim());
  return s.terms.back();
}

Subspace kernel_of_rows(std::size_t n, const std::vector<Vector>& rows) {
  Subspace row_space(n);
  for (const auto& r : rows) {
    if (row_space.is_whole()) break;
    if (!is_zero(r)) row_space.insert(r);
  }
  return annihilator(row_space);
}

Subspace center(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  // Row (y, t): x -> t-th coordinate of [x, e_y].
  std::map<std::pair<std::size_t, int>, Vector> rows;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& [t, c] : l.bracket_basis(static_cast<int>(x), static_cast<int>(y))) {
        auto [it, fresh] = rows.try_emplace({y, t}, Vector(n));
        (void)fresh;
        it->second[x] = c;
      }
  std::vector<Vector> list;
  list.reserve(rows.size());
  for (auto& [key, r] : rows) list.push_back(std::move(r));
  return kernel_of_rows(n, list);
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<std::string> labels = a.labels();
  for (const auto& s : b.labels()) {
    std::string t = s;
    while (std::find(labels.begin(), labels.end(), t) != labels.end()) t += "'";
    labels.push_back(t);
  }
  LieAlgebra out(a.dim() + b.dim(), std::move(labels));
  const auto off = static_cast<int>(a.dim());
  for (const auto& e : a.entries()) out.set_bracket(e.x, e.y, e.out);
  for (const auto& e : b.entries()) {
    SparseVector v;
    for (const auto& [i, c] : e.out) v.emplace_back(i + off, c);
    out.set_bracket(e.x + off, e.y + off, std::move(v));
  }
  return out;
}

}  // namespace hksym
