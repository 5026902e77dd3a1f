#include "hksym/grading.hpp"

#include <algorithm>
#include <string>

#include "hksym/quaternion.hpp"

namespace hksym {

namespace {

const char* const kOpName[3] = {"I", "J", "K"};

std::vector<int> position_map(const std::vector<int>& idx, std::size_t n) {
  std::vector<int> pos(n, -1);
  for (std::size_t c = 0; c < idx.size(); ++c) pos[static_cast<std::size_t>(idx[c])] = static_cast<int>(c);
  return pos;
}

// Q applied to a basis vector, as a sparse vector on the full space.
std::vector<SparseVector> images(const QuatGrading& g, int q) {
  std::vector<SparseVector> out(g.minus.size());
  const Matrix& m = g.op(q);
  for (std::size_t c = 0; c < g.minus.size(); ++c)
    for (std::size_t r = 0; r < g.minus.size(); ++r)
      if (!m(r, c).is_zero()) out[c].emplace_back(g.minus[r], m(r, c));
  for (auto& v : out) std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
  return out;
}

SparseVector bracket_sparse(const LieAlgebra& l, const SparseVector& x, int y) {
  SparseVector acc;
  for (const auto& [t, c] : x) {
    const auto& b = l.bracket_basis(t, y);
    if (!b.empty()) acc = sparse_sum(acc, sparse_scaled(b, c));
  }
  return acc;
}

// Q applied to an arbitrary vector in sparse form.
SparseVector apply_sparse(const std::vector<SparseVector>& img, const std::vector<int>& minus_pos,
                          const SparseVector& v) {
  SparseVector acc;
  for (const auto& [t, c] : v) {
    const int p = minus_pos[static_cast<std::size_t>(t)];
    if (p >= 0) acc = sparse_sum(acc, sparse_scaled(img[static_cast<std::size_t>(p)], c));
  }
  return acc;
}

std::string pair_name(const LieAlgebra& l, int x, int y) {
  return "[" + l.labels()[static_cast<std::size_t>(x)] + ", " + l.labels()[static_cast<std::size_t>(y)] + "]";
}

}  // namespace

QuatGrading QuatGrading::trivial(std::size_t n) {
  QuatGrading g;
  for (std::size_t i = 0; i < n; ++i) g.plus.push_back(static_cast<int>(i));
  return g;
}

QuatGrading QuatGrading::quaternionic(std::size_t blocks) {
  QuatGrading g;
  for (std::size_t i = 0; i < 4 * blocks; ++i) g.minus.push_back(static_cast<int>(i));
  g.ops = block_diagonal(left_h_operators(), blocks);
  return g;
}

Matrix QuatGrading::full_operator(int q) const {
  Matrix m(dim(), dim());
  const Matrix& o = op(q);
  for (std::size_t r = 0; r < minus.size(); ++r)
    for (std::size_t c = 0; c < minus.size(); ++c)
      m(static_cast<std::size_t>(minus[r]), static_cast<std::size_t>(minus[c])) = o(r, c);
  return m;
}

Vector QuatGrading::apply(int q, const Vector& v) const {
  Vector out(v.size());
  const Matrix& o = op(q);
  for (std::size_t c = 0; c < minus.size(); ++c) {
    const Scalar& x = v[static_cast<std::size_t>(minus[c])];
    if (x.is_zero()) continue;
    for (std::size_t r = 0; r < minus.size(); ++r)
      if (!o(r, c).is_zero()) out[static_cast<std::size_t>(minus[r])] += o(r, c) * x;
  }
  return out;
}

std::array<Matrix, 3> left_h_operators() {
  return {left_mult_matrix(Quaternion::i()), left_mult_matrix(Quaternion::j()),
          left_mult_matrix(Quaternion::k())};
}

std::array<Matrix, 3> block_diagonal(const std::array<Matrix, 3>& ops, std::size_t copies) {
  std::array<Matrix, 3> out;
  const std::size_t b = ops[0].rows();
  for (int q = 0; q < 3; ++q) {
    out[q] = Matrix(b * copies, b * copies);
    for (std::size_t k = 0; k < copies; ++k)
      for (std::size_t r = 0; r < b; ++r)
        for (std::size_t c = 0; c < b; ++c) out[q](k * b + r, k * b + c) = ops[q](r, c);
  }
  return out;
}

QuatGrading direct_sum(const QuatGrading& a, const QuatGrading& b) {
  QuatGrading g;
  const auto off = static_cast<int>(a.dim());
  g.plus = a.plus;
  for (int i : b.plus) g.plus.push_back(i + off);
  g.minus = a.minus;
  for (int i : b.minus) g.minus.push_back(i + off);
  const std::size_t ma = a.minus.size();
  const std::size_t mb = b.minus.size();
  for (int q = 0; q < 3; ++q) {
    g.ops[q] = Matrix(ma + mb, ma + mb);
    for (std::size_t r = 0; r < ma; ++r)
      for (std::size_t c = 0; c < ma; ++c) g.ops[q](r, c) = a.op(q)(r, c);
    for (std::size_t r = 0; r < mb; ++r)
      for (std::size_t c = 0; c < mb; ++c) g.ops[q](ma + r, ma + c) = b.op(q)(r, c);
  }
  return g;
}

CheckList verify_grading_checks(const LieAlgebra& l, const QuatGrading& g) {
  CheckList out;
  const std::size_t n = l.dim();
  const std::size_t m = g.minus.size();

  {
    std::vector<int> seen(n, 0);
    Verdict v;
    for (int i : g.plus) {
      if (i < 0 || static_cast<std::size_t>(i) >= n) { v = Verdict::fail("plus index out of range"); break; }
      ++seen[static_cast<std::size_t>(i)];
    }
    if (v.ok) for (int i : g.minus) {
      if (i < 0 || static_cast<std::size_t>(i) >= n) { v = Verdict::fail("minus index out of range"); break; }
      ++seen[static_cast<std::size_t>(i)];
    }
    if (v.ok && std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
      v = Verdict::fail("plus and minus indices do not partition the basis");
    if (v.ok && m % 4 != 0) v = Verdict::fail("minus dimension " + std::to_string(m) + " not divisible by 4");
    for (int q = 0; q < 3 && v.ok; ++q)
      if (g.op(q).rows() != m || g.op(q).cols() != m)
        v = Verdict::fail(std::string("operator ") + kOpName[q] + " has the wrong shape");
    out.add("partition", v);
    if (!v.ok) return out;
  }

  {
    const Matrix id = Matrix::identity(m);
    const Matrix minus_id = Scalar(-1) * id;
    Verdict v;
    for (int q = 0; q < 3 && v.ok; ++q)
      if (g.op(q) * g.op(q) != minus_id) v = Verdict::fail(std::string(kOpName[q]) + "^2 != -1");
    if (v.ok && g.op(0) * g.op(1) != g.op(2)) v = Verdict::fail("IJ != K");
    if (v.ok && g.op(1) * g.op(0) != Scalar(-1) * g.op(2)) v = Verdict::fail("JI != -K");
    out.add("quaternion relations", v);
  }

  const std::vector<int> minus_pos = position_map(g.minus, n);
  auto is_minus = [&](int i) { return minus_pos[static_cast<std::size_t>(i)] >= 0; };

  {
    Verdict v;
    for (int x = 0; x < static_cast<int>(n) && v.ok; ++x)
      for (int y = x + 1; y < static_cast<int>(n) && v.ok; ++y) {
        const bool target_minus = is_minus(x) != is_minus(y);
        for (const auto& [t, c] : l.bracket_basis(x, y)) {
          (void)c;
          if (is_minus(t) != target_minus) {
            v = Verdict::fail(pair_name(l, x, y) + " leaves the " +
                              (target_minus ? "minus" : "plus") + " part");
            break;
          }
        }
      }
    out.add("bracket parity", v);
  }

  std::array<std::vector<SparseVector>, 3> img = {images(g, 0), images(g, 1), images(g, 2)};

  {
    Verdict v;
    for (int q = 0; q < 3 && v.ok; ++q)
      for (std::size_t a = 0; a < m && v.ok; ++a)
        for (std::size_t b = a + 1; b < m && v.ok; ++b) {
          const int x = g.minus[a];
          const int y = g.minus[b];
          SparseVector s = bracket_sparse(l, img[q][a], y);
          s = sparse_sum(s, sparse_scaled(bracket_sparse(l, img[q][b], x), Scalar(-1)));
          if (!s.empty())
            v = Verdict::fail(std::string(kOpName[q]) + " is not a derivation on " + pair_name(l, x, y));
        }
    out.add("derivation on minus pairs", v);
  }

  {
    Verdict v;
    for (int q = 0; q < 3 && v.ok; ++q)
      for (std::size_t a = 0; a < m && v.ok; ++a)
        for (int y : g.plus) {
          const int x = g.minus[a];
          const SparseVector lhs = apply_sparse(img[q], minus_pos, l.bracket_basis(x, y));
          const SparseVector rhs = bracket_sparse(l, img[q][a], y);
          if (lhs != rhs) {
            v = Verdict::fail(std::string(kOpName[q]) + " does not commute with ad on " + pair_name(l, x, y));
            break;
          }
        }
    out.add("equivariance on minus-plus pairs", v);
  }
  return out;
}

Verdict verify_grading(const LieAlgebra& l, const QuatGrading& g) {
  const CheckList c = verify_grading_checks(l, g);
  if (const Check* f = c.first_failure()) return Verdict::fail(f->name + ": " + f->verdict.detail);
  return Verdict::pass();
}

Verdict check_proper(const LieAlgebra& l, const QuatGrading& g) {
  Subspace span(l.dim());
  for (std::size_t a = 0; a < g.minus.size(); ++a)
    for (std::size_t b = a + 1; b < g.minus.size(); ++b)
      span.insert(to_dense(l.bracket_basis(g.minus[a], g.minus[b]), l.dim()));
  const Subspace plus = Subspace::coordinate(l.dim(), g.plus);
  if (span == plus) return Verdict::pass();
  return Verdict::fail("[l-, l-] has dimension " + std::to_string(span.dim()) + ", l+ has dimension " +
                       std::to_string(plus.dim()));
}

}  // namespace hksym
