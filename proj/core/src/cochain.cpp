#include "hksym/cochain.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hksym {

// ------------------------------------------------------------ module

OrthogonalModule OrthogonalModule::trivial() {
  OrthogonalModule m;
  m.form = SymBilinearForm(Matrix::identity(1));
  m.grading = QuatGrading::trivial(1);
  m.labels = {"1"};
  return m;
}

OrthogonalModule OrthogonalModule::zero() {
  OrthogonalModule m;
  m.form = SymBilinearForm::zero(0);
  m.grading = QuatGrading::trivial(0);
  return m;
}

Verdict OrthogonalModule::validate() const {
  if (grading.dim() != dim()) return Verdict::fail("module grading and form dimensions differ");
  if (!labels.empty() && labels.size() != dim()) return Verdict::fail("module label count differs from dimension");
  const CheckList g = verify_grading_checks(LieAlgebra::abelian(dim()), grading);
  if (const Check* f = g.first_failure()) return Verdict::fail("module grading " + f->name + ": " + f->verdict.detail);
  if (!is_nondegenerate(form)) return Verdict::fail("module form is degenerate");
  const char* names[3] = {"I", "J", "K"};
  for (int q = 0; q < 3; ++q) {
    const Matrix m = grading.full_operator(q);
    if (!(m.transpose() * form.gram() + form.gram() * m).is_zero())
      return Verdict::fail(std::string("module operator ") + names[q] + " is not skew for the form");
  }
  return Verdict::pass();
}

OrthogonalModule direct_sum(const OrthogonalModule& a, const OrthogonalModule& b) {
  const std::size_t n = a.dim() + b.dim();
  Matrix g(n, n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) g(i, j) = a.form(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) g(a.dim() + i, a.dim() + j) = b.form(i, j);
  OrthogonalModule m;
  m.form = SymBilinearForm(std::move(g));
  m.grading = direct_sum(a.grading, b.grading);
  std::vector<std::string> la = a.labels.empty() ? default_labels(a.dim(), "a") : a.labels;
  std::vector<std::string> lb = b.labels.empty() ? default_labels(b.dim(), "b") : b.labels;
  for (auto& s : lb) {
    while (std::find(la.begin(), la.end(), s) != la.end()) s += "'";
    la.push_back(s);
  }
  m.labels = std::move(la);
  return m;
}

// ------------------------------------------------------------- tuples

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t tuple_rank(std::span<const int> increasing) {
  std::size_t r = 0;
  for (std::size_t t = 0; t < increasing.size(); ++t)
    r += binomial(static_cast<std::size_t>(increasing[t]), t + 1);
  return r;
}

std::vector<std::vector<int>> increasing_tuples(std::size_t n, std::size_t p) {
  if (p == 0) return {{}};
  std::vector<std::vector<int>> out;
  out.reserve(binomial(n, p));
  for (std::size_t last = p - 1; last < n; ++last) {
    for (auto& t : increasing_tuples(last, p - 1)) {
      t.push_back(static_cast<int>(last));
      out.push_back(std::move(t));
    }
  }
  return out;
}

namespace {

// Sorts in place; returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(std::vector<int>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
      if (v[j - 1] == v[j]) return 0;
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] == v[i]) return 0;
  return sign;
}

std::vector<SparseVector> sparse_columns(const Matrix& m) {
  std::vector<SparseVector> cols(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) cols[c].emplace_back(static_cast<int>(r), m(r, c));
  return cols;
}

}  // namespace

// ------------------------------------------------------ AlternatingForm

AlternatingForm::AlternatingForm(std::size_t domain_dim, std::size_t degree, std::size_t coeff_dim)
    : n_(domain_dim), p_(degree), r_(coeff_dim), values_(binomial(domain_dim, degree) * coeff_dim) {}

void AlternatingForm::require_compatible(const AlternatingForm& o) const {
  if (n_ != o.n_ || p_ != o.p_ || r_ != o.r_) throw DimensionMismatch("alternating forms of different shape");
}

Vector AlternatingForm::at(std::span<const int> args) const {
  if (args.size() != p_) throw DimensionMismatch("form evaluated on the wrong number of arguments");
  std::vector<int> v(args.begin(), args.end());
  for (int i : v)
    if (i < 0 || static_cast<std::size_t>(i) >= n_) throw std::out_of_range("form argument out of range");
  const int s = sort_with_sign(v);
  Vector out(r_);
  if (s == 0) return out;
  const std::size_t base = tuple_rank(v) * r_;
  for (std::size_t k = 0; k < r_; ++k) {
    const Scalar& x = values_[base + k];
    if (!x.is_zero()) out[k] = s > 0 ? x : -x;
  }
  return out;
}

Scalar AlternatingForm::scalar_at(std::span<const int> args) const {
  if (r_ != 1) throw DimensionMismatch("scalar_at on a vector-valued form");
  return at(args)[0];
}

void AlternatingForm::set(std::span<const int> args, const Vector& value) {
  if (args.size() != p_ || value.size() != r_) throw DimensionMismatch("form set: shape");
  std::vector<int> v(args.begin(), args.end());
  for (int i : v)
    if (i < 0 || static_cast<std::size_t>(i) >= n_) throw std::out_of_range("form argument out of range");
  const int s = sort_with_sign(v);
  if (s == 0) throw std::invalid_argument("alternating form set on repeated arguments");
  const std::size_t base = tuple_rank(v) * r_;
  for (std::size_t k = 0; k < r_; ++k) values_[base + k] = s > 0 ? value[k] : -value[k];
}

void AlternatingForm::add(std::span<const int> args, const Vector& value) {
  Vector cur = at(args);
  axpy(cur, Scalar(1), value);
  set(args, cur);
}

void AlternatingForm::for_each_nonzero(
    const std::function<void(const std::vector<int>&, const Vector&)>& fn) const {
  const auto tuples = increasing_tuples(n_, p_);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    Vector v(values_.begin() + static_cast<std::ptrdiff_t>(t * r_),
             values_.begin() + static_cast<std::ptrdiff_t>((t + 1) * r_));
    if (!hksym::is_zero(v)) fn(tuples[t], v);
  }
}

Field AlternatingForm::field() const {
  Field f;
  for (const auto& x : values_) f = join(f, x.field());
  return f;
}

AlternatingForm& AlternatingForm::operator+=(const AlternatingForm& o) {
  require_compatible(o);
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!o.values_[i].is_zero()) values_[i] += o.values_[i];
  return *this;
}

AlternatingForm& AlternatingForm::operator-=(const AlternatingForm& o) {
  require_compatible(o);
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!o.values_[i].is_zero()) values_[i] -= o.values_[i];
  return *this;
}

AlternatingForm operator*(const Scalar& s, const AlternatingForm& a) {
  AlternatingForm out = a;
  for (auto& x : out.values_)
    if (!x.is_zero()) x *= s;
  return out;
}

// --------------------------------------------------------- differential

AlternatingForm differential(const LieAlgebra& l, const AlternatingForm& c) {
  if (c.domain_dim() != l.dim()) throw DimensionMismatch("differential: form and algebra dimensions differ");
  const std::size_t p = c.degree();
  const std::size_t r = c.coeff_dim();
  AlternatingForm out(l.dim(), p + 1, r);
  if (p == 0) return out;  // trivial module: d of a constant vanishes
  const auto tuples = increasing_tuples(l.dim(), p + 1);
  std::vector<int> args(p);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const auto& x = tuples[t];
    Vector acc(r);
    for (std::size_t i = 0; i <= p; ++i)
      for (std::size_t j = i + 1; j <= p; ++j) {
        const SparseVector& b = l.bracket_basis(x[i], x[j]);
        if (b.empty()) continue;
        std::size_t pos = 1;
        for (std::size_t k = 0; k <= p; ++k)
          if (k != i && k != j) args[pos++] = x[k];
        const Scalar sign = ((i + j) % 2 == 0) ? Scalar(1) : Scalar(-1);
        for (const auto& [s, coef] : b) {
          args[0] = s;
          axpy(acc, sign * coef, c.at(args));
        }
      }
    for (std::size_t k = 0; k < r; ++k) out.component(t, k) = acc[k];
  }
  return out;
}

AlternatingForm wedge_pair(const AlternatingForm& u, const AlternatingForm& v, const SymBilinearForm& form) {
  if (u.domain_dim() != v.domain_dim()) throw DimensionMismatch("wedge_pair: domain mismatch");
  if (u.coeff_dim() != form.dim() || v.coeff_dim() != form.dim())
    throw std::invalid_argument("wedge_pair: module mismatch");
  const std::size_t p = u.degree();
  const std::size_t q = v.degree();
  const std::size_t r = form.dim();
  AlternatingForm out(u.domain_dim(), p + q, 1);
  const std::vector<SparseVector> g = sparse_columns(form.gram());
  const auto splits = increasing_tuples(p + q, p);
  const auto tuples = increasing_tuples(u.domain_dim(), p + q);
  std::vector<int> left(p);
  std::vector<int> right(q);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const auto& x = tuples[t];
    Scalar acc;
    for (const auto& s : splits) {
      std::size_t li = 0;
      std::size_t ri = 0;
      std::size_t pos_sum = 0;
      for (std::size_t k = 0; k < p + q; ++k) {
        if (li < p && static_cast<std::size_t>(s[li]) == k) {
          left[li++] = x[k];
          pos_sum += k;
        } else {
          right[ri++] = x[k];
        }
      }
      const std::size_t ru = tuple_rank(left) * r;
      const std::size_t rv = tuple_rank(right) * r;
      Scalar pair;
      for (std::size_t b = 0; b < r; ++b) {
        const Scalar& vb = v.raw()[rv + b];
        if (vb.is_zero()) continue;
        for (const auto& [a, gab] : g[b]) {
          const Scalar& ua = u.raw()[ru + static_cast<std::size_t>(a)];
          if (!ua.is_zero()) pair += ua * gab * vb;
        }
      }
      if (pair.is_zero()) continue;
      // Shuffle parity: inversions between the chosen and the remaining slots.
      const std::size_t inversions = pos_sum - p * (p - 1) / 2;
      if (inversions % 2 == 0) {
        acc += pair;
      } else {
        acc -= pair;
      }
    }
    out.component(t, 0) = acc;
  }
  return out;
}

// ----------------------------------------------------------- invariance

AlternatingForm invariance_defect(const AlternatingForm& c, const QuatGrading& gl, const QuatGrading& ga, int q) {
  if (gl.dim() != c.domain_dim()) throw DimensionMismatch("invariance: grading of l has the wrong dimension");
  if (ga.dim() != c.coeff_dim()) throw DimensionMismatch("invariance: grading of the module has the wrong dimension");
  const std::vector<SparseVector> cols = sparse_columns(gl.full_operator(q));
  const std::size_t p = c.degree();
  const std::size_t r = c.coeff_dim();
  AlternatingForm out(c.domain_dim(), p, r);
  const auto tuples = increasing_tuples(c.domain_dim(), p);
  std::vector<int> args;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const auto& x = tuples[t];
    Vector acc(r);
    for (std::size_t slot = 0; slot < p; ++slot) {
      for (const auto& [s, m] : cols[static_cast<std::size_t>(x[slot])]) {
        args = x;
        args[slot] = s;
        axpy(acc, m, c.at(args));
      }
    }
    const Vector self(c.raw().begin() + static_cast<std::ptrdiff_t>(t * r),
                      c.raw().begin() + static_cast<std::ptrdiff_t>((t + 1) * r));
    axpy(acc, Scalar(-1), ga.apply(q, self));
    for (std::size_t k = 0; k < r; ++k) out.component(t, k) = acc[k];
  }
  return out;
}

Verdict check_sp1_invariant(const AlternatingForm& c, const QuatGrading& gl, const QuatGrading& ga) {
  const char* names[3] = {"I", "J", "K"};
  for (int q = 0; q < 3; ++q) {
    const AlternatingForm d = invariance_defect(c, gl, ga, q);
    if (d.is_zero()) continue;
    std::string where;
    d.for_each_nonzero([&](const std::vector<int>& t, const Vector&) {
      if (!where.empty()) return;
      where = "(";
      for (std::size_t k = 0; k < t.size(); ++k) where += (k ? "," : "") + std::to_string(t[k]);
      where += ")";
    });
    return Verdict::fail(std::string("not invariant under ") + names[q] + " at " + where);
  }
  return Verdict::pass();
}

Verdict check_sp1_invariant(const AlternatingForm& c, const QuatGrading& gl) {
  return check_sp1_invariant(c, gl, QuatGrading::trivial(1));
}

std::vector<AlternatingForm> invariant_basis(const QuatGrading& gl, const OrthogonalModule& a, std::size_t degree) {
  const std::size_t n = gl.dim();
  const std::size_t r = a.dim();
  const AlternatingForm shape(n, degree, r);
  const std::size_t unknowns = shape.raw().size();
  const std::size_t eq = 3 * unknowns;
  Matrix m(eq, unknowns);
  for (std::size_t u = 0; u < unknowns; ++u) {
    AlternatingForm e = shape;
    e.raw()[u] = 1;
    for (int q = 0; q < 3; ++q) {
      const AlternatingForm d = invariance_defect(e, gl, a.grading, q);
      for (std::size_t k = 0; k < unknowns; ++k)
        if (!d.raw()[k].is_zero()) m(static_cast<std::size_t>(q) * unknowns + k, u) = d.raw()[k];
    }
  }
  std::vector<AlternatingForm> out;
  for (const auto& k : kernel_basis(m)) {
    AlternatingForm f = shape;
    f.raw() = k;
    out.push_back(std::move(f));
  }
  return out;
}

// ------------------------------------------------------ cochain group

QuadCochain1 QuadCochain1::identity(std::size_t l_dim, std::size_t a_dim) {
  return {AlternatingForm(l_dim, 1, a_dim), AlternatingForm(l_dim, 2, 1)};
}

QuadCocycle2 QuadCocycle2::zero(std::size_t l_dim, std::size_t a_dim) {
  return {AlternatingForm(l_dim, 2, a_dim), AlternatingForm(l_dim, 3, 1)};
}

namespace {

std::optional<std::vector<int>> first_nonzero(const AlternatingForm& f) {
  std::optional<std::vector<int>> out;
  f.for_each_nonzero([&](const std::vector<int>& t, const Vector&) {
    if (!out) out = t;
  });
  return out;
}

std::string tuple_string(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "," : "") + std::to_string(t[k]);
  return s + ")";
}

}  // namespace

CocycleReport check_cocycle(const GradedLieAlgebra& l, const OrthogonalModule& a, const QuadCocycle2& z) {
  CocycleReport rep;
  const std::size_t n = l.algebra.dim();
  if (z.alpha.domain_dim() != n || z.alpha.degree() != 2 || z.alpha.coeff_dim() != a.dim() ||
      z.gamma.domain_dim() != n || z.gamma.degree() != 3 || z.gamma.coeff_dim() != 1) {
    rep.checks.add("shape", Verdict::fail("alpha must lie in C^2(l,a) and gamma in C^3(l)"));
    return rep;
  }
  const AlternatingForm da = differential(l.algebra, z.alpha);
  if (auto w = first_nonzero(da)) {
    rep.checks.add("d alpha = 0", Verdict::fail("d alpha != 0 at " + tuple_string(*w)));
    rep.witness = w;
  } else {
    rep.checks.add("d alpha = 0", Verdict::pass());
  }
  const AlternatingForm dg = differential(l.algebra, z.gamma);
  const AlternatingForm half_aa = Scalar::fraction(1, 2) * wedge_pair(z.alpha, z.alpha, a.form);
  if (auto w = first_nonzero(dg - half_aa)) {
    rep.checks.add("d gamma = 1/2 <alpha ^ alpha>",
                   Verdict::fail("d gamma != 1/2 <alpha ^ alpha> at " + tuple_string(*w)));
    if (!rep.witness) rep.witness = w;
  } else {
    rep.checks.add("d gamma = 1/2 <alpha ^ alpha>", Verdict::pass());
  }
  rep.checks.add("alpha Sp(1)-invariant", check_sp1_invariant(z.alpha, l.grading, a.grading));
  rep.checks.add("gamma Sp(1)-invariant", check_sp1_invariant(z.gamma, l.grading));
  return rep;
}

QuadCochain1 group_mul(const QuadCochain1& c1, const QuadCochain1& c2, const OrthogonalModule& a) {
  return {c1.tau + c2.tau,
          c1.sigma + c2.sigma + Scalar::fraction(1, 2) * wedge_pair(c1.tau, c2.tau, a.form)};
}

QuadCochain1 group_inverse(const QuadCochain1& c, const OrthogonalModule& a) {
  return {Scalar(-1) * c.tau, Scalar::fraction(1, 2) * wedge_pair(c.tau, c.tau, a.form) - c.sigma};
}

QuadCocycle2 act_unchecked(const LieAlgebra& l, const OrthogonalModule& a, const QuadCocycle2& z,
                           const QuadCochain1& c) {
  const AlternatingForm dtau = differential(l, c.tau);
  const AlternatingForm mixed = z.alpha + Scalar::fraction(1, 2) * dtau;
  return {z.alpha + dtau, z.gamma + differential(l, c.sigma) + wedge_pair(mixed, c.tau, a.form)};
}

QuadCocycle2 act(const GradedLieAlgebra& l, const OrthogonalModule& a, const QuadCocycle2& z, const QuadCochain1& c) {
  const std::pair<const char*, Verdict> checks[] = {
      {"alpha", check_sp1_invariant(z.alpha, l.grading, a.grading)},
      {"gamma", check_sp1_invariant(z.gamma, l.grading)},
      {"tau", check_sp1_invariant(c.tau, l.grading, a.grading)},
      {"sigma", check_sp1_invariant(c.sigma, l.grading)},
  };
  for (const auto& [name, v] : checks)
    if (!v.ok) throw std::invalid_argument(std::string("act: ") + name + " " + v.detail);
  return act_unchecked(l.algebra, a, z, c);
}

// ---------------------------------------------------------- direct sums

AlternatingForm direct_sum(const AlternatingForm& f1, const AlternatingForm& f2) {
  if (f1.degree() != f2.degree()) throw DimensionMismatch("direct sum of forms of different degree");
  const auto off = static_cast<int>(f1.domain_dim());
  const std::size_t r1 = f1.coeff_dim();
  AlternatingForm out(f1.domain_dim() + f2.domain_dim(), f1.degree(), r1 + f2.coeff_dim());
  f1.for_each_nonzero([&](const std::vector<int>& t, const Vector& v) {
    Vector w(out.coeff_dim());
    std::copy(v.begin(), v.end(), w.begin());
    out.set(t, w);
  });
  f2.for_each_nonzero([&](const std::vector<int>& t, const Vector& v) {
    std::vector<int> s = t;
    for (int& i : s) i += off;
    Vector w(out.coeff_dim());
    std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(r1));
    out.set(s, w);
  });
  return out;
}

namespace {

// pr1^* f1 + pr2^* f2 for forms with values in the same space.
AlternatingForm direct_sum_same_values(const AlternatingForm& f1, const AlternatingForm& f2) {
  if (f1.degree() != f2.degree() || f1.coeff_dim() != f2.coeff_dim())
    throw DimensionMismatch("direct sum of scalar forms: shape");
  const auto off = static_cast<int>(f1.domain_dim());
  AlternatingForm out(f1.domain_dim() + f2.domain_dim(), f1.degree(), f1.coeff_dim());
  f1.for_each_nonzero([&](const std::vector<int>& t, const Vector& v) { out.set(t, v); });
  f2.for_each_nonzero([&](const std::vector<int>& t, const Vector& v) {
    std::vector<int> s = t;
    for (int& i : s) i += off;
    out.set(s, v);
  });
  return out;
}

}  // namespace

QuadCocycle2 direct_sum(const QuadCocycle2& z1, const QuadCocycle2& z2) {
  return {direct_sum(z1.alpha, z2.alpha), direct_sum_same_values(z1.gamma, z2.gamma)};
}

AlternatingForm pullback(const AlternatingForm& c, const Matrix& phi) {
  if (phi.rows() != c.domain_dim()) throw DimensionMismatch("pullback: map target differs from form domain");
  const std::size_t m = phi.cols();
  const std::size_t p = c.degree();
  const std::size_t r = c.coeff_dim();
  const std::vector<SparseVector> cols = sparse_columns(phi);
  AlternatingForm out(m, p, r);
  const auto tuples = increasing_tuples(m, p);
  std::vector<int> args(p);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const auto& y = tuples[t];
    Vector acc(r);
    // Expand multilinearly over the sparse images of the arguments.
    std::function<void(std::size_t, const Scalar&)> expand = [&](std::size_t slot, const Scalar& w) {
      if (slot == p) {
        axpy(acc, w, c.at(args));
        return;
      }
      for (const auto& [i, x] : cols[static_cast<std::size_t>(y[slot])]) {
        args[slot] = i;
        expand(slot + 1, w * x);
      }
    };
    expand(0, Scalar(1));
    for (std::size_t k = 0; k < r; ++k) out.component(t, k) = acc[k];
  }
  return out;
}

AlternatingForm map_values(const AlternatingForm& c, const Matrix& m) {
  if (m.cols() != c.coeff_dim()) throw DimensionMismatch("map_values: matrix width differs from value dimension");
  AlternatingForm out(c.domain_dim(), c.degree(), m.rows());
  c.for_each_nonzero([&](const std::vector<int>& t, const Vector& v) { out.set(t, m * v); });
  return out;
}

}  // namespace hksym
