#include "hksym/admissibility.hpp"

#include <stdexcept>

namespace hksym {

bool AdmissibilityReport::admissible() const { return first_failure() == nullptr; }

std::vector<const ConditionVerdict*> AdmissibilityReport::all() const {
  std::vector<const ConditionVerdict*> out{&T};
  for (std::size_t k = 0; k < A.size(); ++k) {
    out.push_back(&A[k]);
    out.push_back(&B[k]);
  }
  return out;
}

const ConditionVerdict* AdmissibilityReport::first_failure() const {
  for (const auto* c : all())
    if (!c->ok) return c;
  return nullptr;
}

namespace {

// alpha(e_i, e_j) for all i, j.
std::vector<std::vector<Vector>> alpha_table(const AlternatingForm& alpha) {
  const std::size_t n = alpha.domain_dim();
  std::vector<std::vector<Vector>> t(n, std::vector<Vector>(n, Vector(alpha.coeff_dim())));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        const int args[2] = {static_cast<int>(i), static_cast<int>(j)};
        t[i][j] = alpha.at(args);
      }
  return t;
}

// alpha(e_i, x)
Vector alpha_with(const std::vector<std::vector<Vector>>& at, std::size_t i, const Vector& x, std::size_t r) {
  Vector out(r);
  for (std::size_t j = 0; j < x.size(); ++j)
    if (!x[j].is_zero()) axpy(out, x[j], at[i][j]);
  return out;
}

// gamma(e_i, x, y)
Scalar gamma_with(const AlternatingForm& gamma, std::size_t i, const Vector& x, const Vector& y) {
  Scalar out;
  int args[3] = {static_cast<int>(i), 0, 0};
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j].is_zero() || j == i) continue;
    for (std::size_t k = 0; k < y.size(); ++k) {
      if (y[k].is_zero() || k == i || k == j) continue;
      args[1] = static_cast<int>(j);
      args[2] = static_cast<int>(k);
      const Scalar g = gamma.scalar_at(args);
      if (!g.is_zero()) out += x[j] * y[k] * g;
    }
  }
  return out;
}

ConditionVerdict condition_T(const ExtensionInput& in, const std::vector<std::vector<Vector>>& at) {
  ConditionVerdict v;
  v.name = "T";
  const std::size_t r = in.a_dim();
  std::vector<std::pair<int, int>> pairs;
  const auto kern = bracket_kernel_pairs(in.l.algebra, in.l.grading.minus, pairs);
  Subspace image(r);
  for (const auto& x : kern) {
    Vector a(r);
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (!x[p].is_zero()) axpy(a, x[p], at[static_cast<std::size_t>(pairs[p].first)][static_cast<std::size_t>(pairs[p].second)]);
    image.insert(std::move(a));
  }
  const Subspace a_plus = Subspace::coordinate(r, in.a.grading.plus);
  if (image != a_plus) {
    v.ok = false;
    v.detail = "alpha(ker [,] on l-) has dimension " + std::to_string(image.dim()) + (a_plus.contains(image) ? " inside" : " not inside") +
               " a+ of dimension " + std::to_string(a_plus.dim());
  }
  return v;
}

ConditionVerdict condition_A(const ExtensionInput& in, int k, const Subspace& w, const Subspace& z,
                             const std::vector<std::vector<Vector>>& at) {
  ConditionVerdict v;
  v.name = "A" + std::to_string(k);
  const LieAlgebra& l = in.l.algebra;
  const std::size_t n = l.dim();
  const std::size_t r = in.a_dim();
  const Subspace zw = intersect(z, w);
  const std::size_t e = zw.dim();
  if (e == 0) return v;
  const std::size_t d = w.dim();
  const std::size_t unknowns = e + r + d;
  const auto& b = zw.basis();
  const auto& f = w.basis();

  std::vector<Vector> rows;
  // (i) alpha(e_i, L0) = 0
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vector> cols;
    for (std::size_t u = 0; u < e; ++u) cols.push_back(alpha_with(at, i, b[u], r));
    for (std::size_t s = 0; s < r; ++s) {
      Vector row(unknowns);
      for (std::size_t u = 0; u < e; ++u) row[u] = cols[u][s];
      rows.push_back(std::move(row));
    }
  }
  // (ii) gamma(e_i, L0, f_v) + <A0, alpha(e_i, f_v)> - Z0([e_i, f_v]) = 0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t vv = 0; vv < d; ++vv) {
      Vector row(unknowns);
      for (std::size_t u = 0; u < e; ++u) row[u] = gamma_with(in.cocycle.gamma, i, b[u], f[vv]);
      const Vector ga = in.a.form.gram() * alpha_with(at, i, f[vv], r);
      for (std::size_t s = 0; s < r; ++s) row[e + s] = ga[s];
      const Vector br = l.bracket_with_basis(static_cast<int>(i), f[vv]);
      const Vector coord = w.coordinates(br);
      for (std::size_t t = 0; t < d; ++t)
        if (!coord[t].is_zero()) row[e + r + t] = -coord[t];
      rows.push_back(std::move(row));
    }

  const Subspace sol = kernel_of_rows(unknowns, rows);
  Subspace l0(n);
  for (const auto& s : sol.basis()) {
    Vector x(n);
    for (std::size_t u = 0; u < e; ++u) axpy(x, s[u], b[u]);
    l0.insert(std::move(x));
  }
  if (!l0.is_zero()) {
    v.ok = false;
    v.witness = l0.basis();
    v.detail = "nonzero L0 in z(l) and l^" + std::to_string(k + 1) + " satisfies (i) and (ii); " +
               std::to_string(l0.dim()) + " independent directions";
  }
  return v;
}

ConditionVerdict condition_B(const ExtensionInput& in, int k, const Subspace& w,
                             const std::vector<std::vector<Vector>>& at) {
  ConditionVerdict v;
  v.name = "B" + std::to_string(k);
  const LieAlgebra& l = in.l.algebra;
  const std::size_t n = l.dim();
  const std::size_t r = in.a_dim();
  const std::size_t d = w.dim();
  if (d == 0 || r == 0) return v;
  // Kernel of x_{i,v} -> sum x_{i,v} [e_i, f_v].
  Matrix m(n, n * d);
  std::vector<Vector> alphas(n * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t vv = 0; vv < d; ++vv) {
      const Vector br = l.bracket_with_basis(static_cast<int>(i), w.basis()[vv]);
      for (std::size_t t = 0; t < n; ++t) m(t, i * d + vv) = br[t];
      alphas[i * d + vv] = alpha_with(at, i, w.basis()[vv], r);
    }
  Subspace image(r);
  for (const auto& x : kernel_basis(m)) {
    if (image.is_whole()) break;
    Vector a(r);
    for (std::size_t c = 0; c < x.size(); ++c)
      if (!x[c].is_zero()) axpy(a, x[c], alphas[c]);
    image.insert(std::move(a));
  }
  if (image.is_zero()) return v;
  const SymBilinearForm restricted = in.a.form.restrict_to(image.basis());
  const Subspace rad = radical(restricted);
  if (!rad.is_zero()) {
    v.ok = false;
    for (const auto& c : rad.basis()) {
      Vector a(r);
      for (std::size_t t = 0; t < c.size(); ++t) axpy(a, c[t], image.basis()[t]);
      v.witness.push_back(std::move(a));
    }
    v.detail = "<,>_a is degenerate on the image (dimension " + std::to_string(image.dim()) + ", radical " +
               std::to_string(rad.dim()) + ")";
  }
  return v;
}

}  // namespace

std::vector<Vector> bracket_kernel_pairs(const LieAlgebra& l, const std::vector<int>& indices,
                                         std::vector<std::pair<int, int>>& pairs) {
  pairs.clear();
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = a + 1; b < indices.size(); ++b) pairs.emplace_back(indices[a], indices[b]);
  Matrix m(l.dim(), pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (const auto& [t, c] : l.bracket_basis(pairs[p].first, pairs[p].second)) m(static_cast<std::size_t>(t), p) = c;
  return kernel_basis(m);
}

AdmissibilityReport check_admissible(const ExtensionInput& in) {
  const LieAlgebra& l = in.l.algebra;
  const LowerCentralSeries lcs = lower_central_series(l);
  if (!lcs.nilpotent) throw std::invalid_argument("admissibility needs a nilpotent l");
  AdmissibilityReport rep;
  rep.m = lcs.m;
  const auto at = alpha_table(in.cocycle.alpha);
  rep.T = condition_T(in, at);
  const Subspace z = center(l);
  for (int k = 0; k <= rep.m; ++k) {
    const Subspace w = lcs_term(lcs, k + 1);
    rep.A.push_back(condition_A(in, k, w, z, at));
    rep.B.push_back(condition_B(in, k, w, at));
  }
  return rep;
}

IndecomposabilityVerdict check_indecomposable_sufficient(const ExtensionInput& in) {
  const LieAlgebra& l = in.l.algebra;
  const QuatGrading& g = in.l.grading;
  const std::size_t n = l.dim();
  const std::size_t r = in.a_dim();
  IndecomposabilityVerdict out;
  if (n == 0) {
    out.reason = "l = 0: no sufficient criterion applies";
    return out;
  }
  const auto at = alpha_table(in.cocycle.alpha);

  std::vector<int> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
  std::vector<std::pair<int, int>> pairs;
  Subspace alpha_k(r);
  for (const auto& x : bracket_kernel_pairs(l, all, pairs)) {
    Vector a(r);
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (!x[p].is_zero()) axpy(a, x[p], at[static_cast<std::size_t>(pairs[p].first)][static_cast<std::size_t>(pairs[p].second)]);
    alpha_k.insert(std::move(a));
  }
  if (!alpha_k.is_whole()) {
    out.reason = "alpha(ker [,]) is a proper subspace of a";
    return out;
  }

  if (g.minus.size() == 4) {
    out.verdict = Indecomposability::certified;
    out.reason = "dim l- = 4 and alpha(ker [,]) = a";
    return out;
  }

  // R = {x in l- : [x, l-] = 0}
  std::vector<Vector> rows;
  const std::size_t m = g.minus.size();
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t t = 0; t < n; ++t) {
      Vector row(m);
      bool any = false;
      for (std::size_t a = 0; a < m; ++a) {
        for (const auto& [s, c] : l.bracket_basis(g.minus[a], g.minus[b]))
          if (static_cast<std::size_t>(s) == t) {
            row[a] = c;
            any = true;
          }
      }
      if (any) rows.push_back(std::move(row));
    }
  const std::size_t dim_r = kernel_of_rows(m, rows).dim();
  if (g.plus.empty() || m - dim_r != 4) {
    out.reason = "no sufficient criterion applies (dim l- = " + std::to_string(m) + ", dim l-/R = " +
                 std::to_string(m - dim_r) + ")";
    return out;
  }

  const Subspace zminus = intersect(center(l), Subspace::coordinate(n, g.minus));
  Subspace s(r);
  for (const auto& x : zminus.basis())
    for (const auto& y : zminus.basis()) {
      Vector a(r);
      for (std::size_t i = 0; i < n; ++i)
        if (!x[i].is_zero()) axpy(a, x[i], alpha_with(at, i, y, r));
      s.insert(std::move(a));
    }
  for (const auto& u : s.basis())
    for (const auto& v : s.basis())
      if (!in.a.form(u, v).is_zero()) {
        out.reason = "alpha(z-, z-) is not totally isotropic";
        return out;
      }
  Subspace images(n * r);
  for (const auto& x : zminus.basis()) {
    Vector big(n * r);
    for (std::size_t j = 0; j < n; ++j) {
      Vector a(r);
      for (std::size_t i = 0; i < n; ++i)
        if (!x[i].is_zero()) axpy(a, x[i], at[i][j]);
      std::copy(a.begin(), a.end(), big.begin() + static_cast<std::ptrdiff_t>(j * r));
    }
    images.insert(std::move(big));
  }
  if (images.dim() != zminus.dim()) {
    out.reason = "L -> alpha(L, .) is not injective on z-";
    return out;
  }
  out.verdict = Indecomposability::certified;
  out.reason = "dim l-/R = 4, alpha(ker [,]) = a, alpha(z-, z-) isotropic and alpha(L, .) injective on z-";
  return out;
}

}  // namespace hksym
