#include "hksym/extension.hpp"

#include <algorithm>

namespace hksym {

CheckList validate(const ExtensionInput& in) {
  CheckList out;
  const Verdict g = verify_grading(in.l.algebra, in.l.grading);
  out.add("l grading", g);
  if (g.ok) out.add("l grading proper", check_proper(in.l.algebra, in.l.grading));
  out.add("module", in.a.validate());
  if (!g.ok) return out;
  const CocycleReport c = check_cocycle(in.l, in.a, in.cocycle);
  for (const auto& chk : c.checks.checks) out.add("cocycle " + chk.name, chk.verdict);
  return out;
}

HyperKahlerTriple build_extension(const ExtensionInput& in) {
  const CheckList v = validate(in);
  if (const Check* f = v.first_failure()) throw InvalidExtension(f->name + ": " + f->verdict.detail);
  return build_extension_unchecked(in);
}

HyperKahlerTriple build_extension_unchecked(const ExtensionInput& in) {
  const LieAlgebra& l = in.l.algebra;
  const ExtensionLayout lay{l.dim(), in.a.dim()};
  const std::size_t n = lay.n;
  const std::size_t r = lay.r;
  const AlternatingForm& alpha = in.cocycle.alpha;
  const AlternatingForm& gamma = in.cocycle.gamma;

  std::vector<std::string> labels;
  for (const auto& s : l.labels()) labels.push_back(s + "*");
  const std::vector<std::string> a_labels = in.a.labels.empty() ? default_labels(r, "A") : in.a.labels;
  for (const auto& s : a_labels) labels.push_back(s);
  for (const auto& s : l.labels()) labels.push_back(s);
  // Keep labels distinct even if the inputs collide.
  for (std::size_t i = 0; i < labels.size(); ++i)
    while (std::find(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(i), labels[i]) !=
           labels.begin() + static_cast<std::ptrdiff_t>(i))
      labels[i] += "~";

  HyperKahlerTriple t;
  t.algebra = LieAlgebra(lay.dim(), std::move(labels));

  // G alpha(L_i, L_k) for the [L, A] brackets.
  std::vector<std::vector<Vector>> g_alpha(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (i != k) {
        const int args[2] = {static_cast<int>(i), static_cast<int>(k)};
        g_alpha[i][k] = in.a.form.gram() * alpha.at(args);
      } else {
        g_alpha[i][k] = Vector(r);
      }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      SparseVector v;
      for (std::size_t k = 0; k < n; ++k) {
        const int args[3] = {static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)};
        const Scalar g = gamma.scalar_at(args);
        if (!g.is_zero()) v.emplace_back(lay.z(k), g);
      }
      const int pair[2] = {static_cast<int>(i), static_cast<int>(j)};
      const Vector a = alpha.at(pair);
      for (std::size_t s = 0; s < r; ++s)
        if (!a[s].is_zero()) v.emplace_back(lay.a(s), a[s]);
      for (const auto& [k, c] : l.bracket_basis(static_cast<int>(i), static_cast<int>(j)))
        v.emplace_back(lay.l(static_cast<std::size_t>(k)), c);
      t.algebra.set_bracket(lay.l(i), lay.l(j), std::move(v));
    }
    // [L_i, A_s] = -sum_k <A_s, alpha(L_i, L_k)> Z_k
    for (std::size_t s = 0; s < r; ++s) {
      SparseVector v;
      for (std::size_t k = 0; k < n; ++k)
        if (!g_alpha[i][k][s].is_zero()) v.emplace_back(lay.z(k), -g_alpha[i][k][s]);
      t.algebra.set_bracket(lay.l(i), lay.a(s), std::move(v));
    }
    // [L_i, Z_s] = -sum_k c_{ik}^s Z_k
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& [s, c] : l.bracket_basis(static_cast<int>(i), static_cast<int>(k)))
        t.algebra.add_to_bracket(lay.l(i), lay.z(static_cast<std::size_t>(s)), SparseVector{{lay.z(k), -c}});
  }

  Matrix gram(lay.dim(), lay.dim());
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t u = 0; u < r; ++u) gram(static_cast<std::size_t>(lay.a(s)), static_cast<std::size_t>(lay.a(u))) = in.a.form(s, u);
  for (std::size_t i = 0; i < n; ++i) {
    gram(static_cast<std::size_t>(lay.z(i)), static_cast<std::size_t>(lay.l(i))) = 1;
    gram(static_cast<std::size_t>(lay.l(i)), static_cast<std::size_t>(lay.z(i))) = 1;
  }
  t.metric = SymBilinearForm(std::move(gram));

  const QuatGrading& gl = in.l.grading;
  const QuatGrading& ga = in.a.grading;
  for (int i : gl.plus) t.grading.plus.push_back(lay.z(static_cast<std::size_t>(i)));
  for (int i : ga.plus) t.grading.plus.push_back(lay.a(static_cast<std::size_t>(i)));
  for (int i : gl.plus) t.grading.plus.push_back(lay.l(static_cast<std::size_t>(i)));
  for (int i : gl.minus) t.grading.minus.push_back(lay.z(static_cast<std::size_t>(i)));
  for (int i : ga.minus) t.grading.minus.push_back(lay.a(static_cast<std::size_t>(i)));
  for (int i : gl.minus) t.grading.minus.push_back(lay.l(static_cast<std::size_t>(i)));
  const std::size_t ml = gl.minus.size();
  const std::size_t ma = ga.minus.size();
  for (int q = 0; q < 3; ++q) {
    Matrix op(2 * ml + ma, 2 * ml + ma);
    for (std::size_t x = 0; x < ml; ++x)
      for (std::size_t y = 0; y < ml; ++y) {
        op(x, y) = -gl.op(q)(y, x);  // dual action on l*
        op(ml + ma + x, ml + ma + y) = gl.op(q)(x, y);
      }
    for (std::size_t x = 0; x < ma; ++x)
      for (std::size_t y = 0; y < ma; ++y) op(ml + x, ml + y) = ga.op(q)(x, y);
    t.grading.ops[static_cast<std::size_t>(q)] = std::move(op);
  }
  return t;
}

ExtensionInput direct_sum(const ExtensionInput& x, const ExtensionInput& y) {
  ExtensionInput out;
  out.l.algebra = direct_sum(x.l.algebra, y.l.algebra);
  out.l.grading = direct_sum(x.l.grading, y.l.grading);
  out.a = direct_sum(x.a, y.a);
  out.cocycle = direct_sum(x.cocycle, y.cocycle);
  return out;
}

}  // namespace hksym
