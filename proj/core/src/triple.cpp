#include "hksym/triple.hpp"

#include <algorithm>
#include <string>

namespace hksym {

namespace {

std::vector<SparseVector> sparse_columns(const Matrix& m) {
  std::vector<SparseVector> cols(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) cols[c].emplace_back(static_cast<int>(r), m(r, c));
  return cols;
}

SparseVector shifted(const SparseVector& v, int off) {
  SparseVector out;
  out.reserve(v.size());
  for (const auto& [i, c] : v) out.emplace_back(i + off, c);
  return out;
}

std::vector<std::string> suffixed(const std::vector<std::string>& base, const std::vector<std::string>& taken,
                                  const std::string& suffix) {
  std::vector<std::string> out;
  for (const auto& s : base) {
    std::string t = s + suffix;
    while (std::find(taken.begin(), taken.end(), t) != taken.end() ||
           std::find(out.begin(), out.end(), t) != out.end())
      t += suffix;
    out.push_back(t);
  }
  return out;
}

const std::string& label(const LieAlgebra& l, int i) { return l.labels()[static_cast<std::size_t>(i)]; }

}  // namespace

Verdict check_metric_invariant(const LieAlgebra& l, const SymBilinearForm& b) {
  const std::size_t n = l.dim();
  if (b.dim() != n) return Verdict::fail("metric dimension differs from algebra dimension");
  const std::vector<SparseVector> gcols = sparse_columns(b.gram());
  for (std::size_t x = 0; x < n; ++x) {
    // w[y] = G [e_x, e_y]; invariance says w[y][z] + w[z][y] = 0.
    std::vector<Vector> w(n);
    for (std::size_t y = 0; y < n; ++y) {
      w[y] = Vector(n);
      for (const auto& [t, c] : l.bracket_basis(static_cast<int>(x), static_cast<int>(y)))
        accumulate(w[y], c, gcols[static_cast<std::size_t>(t)]);
    }
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = y; z < n; ++z)
        if (!(w[y][z] + w[z][y]).is_zero())
          return Verdict::fail("<[" + label(l, int(x)) + ", " + label(l, int(y)) + "], " + label(l, int(z)) +
                               "> + <" + label(l, int(y)) + ", [" + label(l, int(x)) + ", " + label(l, int(z)) +
                               "]> != 0");
  }
  return Verdict::pass();
}

Verdict check_metric_sp1_invariant(const QuatGrading& g, const SymBilinearForm& b) {
  if (b.dim() != g.dim()) return Verdict::fail("metric dimension differs from grading dimension");
  const char* names[3] = {"I", "J", "K"};
  for (int q = 0; q < 3; ++q) {
    const Matrix qm = g.full_operator(q);
    const Matrix s = qm.transpose() * b.gram() + b.gram() * qm;
    if (!s.is_zero()) return Verdict::fail(std::string(names[q]) + " is not skew for the metric");
  }
  return Verdict::pass();
}

CheckList verify_triple(const HyperKahlerTriple& t) {
  CheckList out;
  const LieAlgebra& l = t.algebra;
  if (t.metric.dim() != l.dim() || t.grading.dim() != l.dim()) {
    out.add("shape", Verdict::fail("algebra, metric and grading dimensions differ"));
    return out;
  }

  const JacobiReport jac = check_jacobi(l);
  if (jac.ok) {
    out.add("jacobi", Verdict::pass());
  } else {
    const auto& w = *jac.witness;
    out.add("jacobi", Verdict::fail("Jacobi identity fails on (" + label(l, w[0]) + ", " + label(l, w[1]) + ", " +
                                    label(l, w[2]) + ")"));
  }

  out.add("metric nondegenerate",
          is_nondegenerate(t.metric) ? Verdict::pass()
                                     : Verdict::fail("radical of dimension " +
                                                     std::to_string(radical(t.metric).dim())));
  out.add("metric invariant", check_metric_invariant(l, t.metric));

  const CheckList g = verify_grading_checks(l, t.grading);
  for (const auto& c : g.checks) out.add("grading " + c.name, c.verdict);
  const bool grading_ok = g.ok();

  if (grading_ok) {
    out.add("metric Sp(1)-invariant", check_metric_sp1_invariant(t.grading, t.metric));
    out.add("grading proper", check_proper(l, t.grading));
    Verdict orth;
    for (int p : t.grading.plus) {
      for (int m : t.grading.minus)
        if (!t.metric(static_cast<std::size_t>(p), static_cast<std::size_t>(m)).is_zero()) {
          orth = Verdict::fail("<" + label(l, p) + ", " + label(l, m) + "> != 0");
          break;
        }
      if (!orth.ok) break;
    }
    out.add("plus/minus orthogonal", orth);
  }

  const LowerCentralSeries lcs = lower_central_series(l);
  out.add("nilpotent", lcs.nilpotent ? Verdict::pass()
                                     : Verdict::fail("lower central series stabilises at dimension " +
                                                     std::to_string(lcs.terms.back().dim())));
  return out;
}

Signature signature_minus(const HyperKahlerTriple& t) {
  const Signature s = signature(t.metric.restrict_to(t.grading.minus));
  if (s.radical != 0) throw std::domain_error("metric is degenerate on the minus part");
  return s;
}

Holonomy holonomy_algebra(const HyperKahlerTriple& t) {
  Holonomy h;
  h.indices = t.grading.plus;
  const std::size_t n = t.dim();
  std::vector<int> pos(n, -1);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < h.indices.size(); ++a) {
    pos[static_cast<std::size_t>(h.indices[a])] = static_cast<int>(a);
    labels.push_back(label(t.algebra, h.indices[a]));
  }
  h.algebra = LieAlgebra(h.indices.size(), labels);
  for (std::size_t a = 0; a < h.indices.size(); ++a)
    for (std::size_t b = a + 1; b < h.indices.size(); ++b) {
      SparseVector v;
      for (const auto& [k, c] : t.algebra.bracket_basis(h.indices[a], h.indices[b])) {
        const int p = pos[static_cast<std::size_t>(k)];
        if (p < 0) throw std::domain_error("plus part is not a subalgebra");
        v.emplace_back(p, c);
      }
      std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      h.algebra.set_bracket(static_cast<int>(a), static_cast<int>(b), std::move(v));
    }
  h.abelian = h.algebra.is_abelian();
  return h;
}

HyperKahlerTriple tangent_triple(const HyperKahlerTriple& t) {
  const std::size_t n = t.dim();
  const int off = static_cast<int>(n);
  std::vector<std::string> labels = t.algebra.labels();
  const std::vector<std::string> second = suffixed(labels, labels, "'");
  labels.insert(labels.end(), second.begin(), second.end());

  HyperKahlerTriple out;
  out.algebra = LieAlgebra(2 * n, std::move(labels));
  for (int x = 0; x < off; ++x)
    for (int y = 0; y < off; ++y) {
      const SparseVector& v = t.algebra.bracket_basis(x, y);
      if (v.empty()) continue;
      if (x < y) out.algebra.set_bracket(x, y, v);
      out.algebra.set_bracket(x, y + off, shifted(v, off));
    }

  Matrix g(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g(i, n + j) = t.metric(i, j);
      g(n + j, i) = t.metric(i, j);
    }
  out.metric = SymBilinearForm(std::move(g));

  out.grading.plus = t.grading.plus;
  for (int i : t.grading.plus) out.grading.plus.push_back(i + off);
  out.grading.minus = t.grading.minus;
  for (int i : t.grading.minus) out.grading.minus.push_back(i + off);
  out.grading.ops = block_diagonal(t.grading.ops, 2);
  return out;
}

HyperKahlerTriple tangent_iterate(HyperKahlerTriple t, int times) {
  for (int k = 0; k < times; ++k) t = tangent_triple(t);
  return t;
}

HyperKahlerTriple cotangent_triple(const LieAlgebra& l, const QuatGrading& g) {
  if (const Verdict v = verify_grading(l, g); !v.ok) throw InvalidTriple("invalid grading: " + v.detail);
  if (const Verdict v = check_proper(l, g); !v.ok) throw InvalidTriple("grading not proper: " + v.detail);
  const Subspace z = center(l);
  if (!Subspace::coordinate(l.dim(), g.minus).contains(z)) {
    throw InvalidTriple("center of l is not contained in l-");
  }

  const std::size_t n = l.dim();
  const int off = static_cast<int>(n);
  std::vector<std::string> labels = suffixed(l.labels(), l.labels(), "*");
  labels.insert(labels.end(), l.labels().begin(), l.labels().end());

  HyperKahlerTriple out;
  out.algebra = LieAlgebra(2 * n, std::move(labels));
  for (int i = 0; i < off; ++i)
    for (int j = 0; j < off; ++j) {
      const SparseVector& v = l.bracket_basis(i, j);
      if (v.empty()) continue;
      if (i < j) out.algebra.set_bracket(i + off, j + off, shifted(v, off));
      // [L_i, Z_s] = -sum_k c_{ik}^s Z_k, collected per s.
      for (const auto& [s, c] : v) out.algebra.add_to_bracket(i + off, s, SparseVector{{j, -c}});
    }

  Matrix gram(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    gram(i, n + i) = 1;
    gram(n + i, i) = 1;
  }
  out.metric = SymBilinearForm(std::move(gram));

  out.grading.plus = g.plus;
  for (int i : g.plus) out.grading.plus.push_back(i + off);
  out.grading.minus = g.minus;
  for (int i : g.minus) out.grading.minus.push_back(i + off);
  const std::size_t m = g.minus.size();
  for (int q = 0; q < 3; ++q) {
    Matrix op(2 * m, 2 * m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        op(r, c) = -g.op(q)(c, r);
        op(m + r, m + c) = g.op(q)(r, c);
      }
    out.grading.ops[static_cast<std::size_t>(q)] = std::move(op);
  }
  return out;
}

}  // namespace hksym
