#include "hksym/catalog.hpp"

#include <stdexcept>

namespace hksym {

namespace {

const std::vector<std::string> kHLabels = {"1", "i", "j", "k"};

// Coordinates of q in a0 = H (x) span{A1, A2} for the element q (x) (x1 A1 + x2 A2).
Vector a0_vector(const Quaternion& q, const Scalar& x1, const Scalar& x2) {
  const Vector h = q.to_vector();
  Vector v(8);
  for (std::size_t t = 0; t < 4; ++t) {
    v[t] = x1 * h[t];
    v[4 + t] = x2 * h[t];
  }
  return v;
}

OrthogonalModule module_a0() {
  OrthogonalModule a;
  // <A1,A1> = <A2,A2> = 2, <A1,A2> = -1; tensored with Re(conj(p) q).
  const Scalar g[2][2] = {{2, -1}, {-1, 2}};
  Matrix gram(8, 8);
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y)
      for (std::size_t t = 0; t < 4; ++t) gram(4 * x + t, 4 * y + t) = g[x][y];
  a.form = SymBilinearForm(std::move(gram));
  a.grading = QuatGrading::quaternionic(2);
  a.labels = {"A1", "iA1", "jA1", "kA1", "A2", "iA2", "jA2", "kA2"};
  return a;
}

Matrix embedding(std::size_t total, std::size_t offset, std::size_t width) {
  Matrix m(total, width);
  for (std::size_t t = 0; t < width; ++t) m(offset + t, t) = 1;
  return m;
}

}  // namespace

GradedLieAlgebra quaternion_heisenberg() {
  GradedLieAlgebra g;
  g.algebra = LieAlgebra(7, {"1", "i", "j", "k", "I", "J", "K"});
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      const Vector im = (Quaternion::unit(a).conj() * Quaternion::unit(b)).imag_vector();
      SparseVector v;
      for (int t = 0; t < 3; ++t)
        if (!im[static_cast<std::size_t>(t)].is_zero()) v.emplace_back(4 + t, im[static_cast<std::size_t>(t)]);
      g.algebra.set_bracket(a, b, std::move(v));
    }
  g.grading.minus = {0, 1, 2, 3};
  g.grading.plus = {4, 5, 6};
  g.grading.ops = left_h_operators();
  return g;
}

GradedLieAlgebra abelian_quaternions(std::size_t copies) {
  GradedLieAlgebra g;
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < copies; ++c)
    for (const auto& s : kHLabels) labels.push_back(copies == 1 ? s : s + "_" + std::to_string(c + 1));
  g.algebra = LieAlgebra(4 * copies, std::move(labels));
  g.grading = QuatGrading::quaternionic(copies);
  return g;
}

ExtensionInput example1() {
  ExtensionInput in;
  in.l = quaternion_heisenberg();
  in.a = module_a0();
  in.cocycle = QuadCocycle2::zero(7, 8);
  for (int c = 0; c < 4; ++c) {
    const Quaternion q = Quaternion::unit(c);
    in.cocycle.alpha.set({c, 4}, a0_vector(q * Quaternion::i(), 1, 0));
    in.cocycle.alpha.set({c, 5}, a0_vector(q * Quaternion::j(), 0, 1));
    // A3 = -A1 - A2
    in.cocycle.alpha.set({c, 6}, a0_vector(q * Quaternion::k(), -1, -1));
  }
  in.cocycle.gamma.set_scalar({4, 5, 6}, 2);
  return in;
}

Matrix example2_default_matrix() {
  Matrix a(3, 3);
  a(0, 0) = 1;
  a(1, 1) = 1;
  a(2, 2) = -2;
  return a;
}

void validate_example2_matrix(const Matrix& a) {
  if (a.rows() != 3 || a.cols() != 3) throw std::invalid_argument("A must be a 3x3 matrix");
  if (!a.is_symmetric()) throw std::invalid_argument("A is not symmetric");
  if (!(a(0, 0) + a(1, 1) + a(2, 2)).is_zero()) throw std::invalid_argument("A is not traceless");
  if (determinant3(a).is_zero()) throw std::invalid_argument("A is singular");
}

AlternatingForm alpha_plus() {
  AlternatingForm f(8, 2, 6);
  // Basis vector x < 4 is (e_x, 0); otherwise (0, e_{x-4}).
  auto split = [](int x) {
    Quaternion p{}, q{};
    (x < 4 ? p : q) = Quaternion::unit(x % 4);
    return std::pair{p, q};
  };
  for (int x = 0; x < 8; ++x)
    for (int y = x + 1; y < 8; ++y) {
      const auto [p, q] = split(x);
      const auto [r, s] = split(y);
      const Vector first = (p.conj() * s + q.conj() * r).imag_vector();
      const Vector second = (q.conj() * s).imag_vector();
      Vector v(6);
      for (std::size_t t = 0; t < 3; ++t) {
        v[t] = first[t];
        v[3 + t] = second[t];
      }
      f.set({x, y}, v);
    }
  return f;
}

OrthogonalModule module_a_A(const Matrix& a) {
  validate_example2_matrix(a);
  Matrix gram(6, 6);
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) {
      gram(x, 3 + y) = a(x, y);
      gram(3 + y, x) = a(x, y);
    }
  OrthogonalModule m;
  m.form = SymBilinearForm(std::move(gram));
  m.grading = QuatGrading::trivial(6);
  m.labels = {"Pi", "Pj", "Pk", "Qi", "Qj", "Qk"};
  return m;
}

ExtensionInput example2(const std::vector<Matrix>& a_list) {
  const std::size_t n = a_list.size();
  for (std::size_t k = 0; k < n; ++k) {
    try {
      validate_example2_matrix(a_list[k]);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("matrix " + std::to_string(k + 1) + ": " + e.what());
    }
  }
  const ExtensionInput base = example1();
  ExtensionInput in;
  in.l = base.l;
  in.a = base.a;
  for (std::size_t k = 0; k < n; ++k) {
    const GradedLieAlgebra h = abelian_quaternions(1);
    GradedLieAlgebra renamed = h;
    std::vector<std::string> labels;
    for (const auto& s : kHLabels) labels.push_back(s + "_" + std::to_string(k + 1));
    renamed.algebra.set_labels(labels);
    in.l.algebra = direct_sum(in.l.algebra, renamed.algebra);
    in.l.grading = direct_sum(in.l.grading, renamed.grading);
    OrthogonalModule ak = module_a_A(a_list[k]);
    for (auto& s : ak.labels) s += "_" + std::to_string(k + 1);
    in.a = direct_sum(in.a, ak);
  }
  const std::size_t dim_l = 7 + 4 * n;
  const std::size_t dim_a = 8 + 6 * n;

  Matrix phi0(7, dim_l);
  for (std::size_t t = 0; t < 7; ++t) phi0(t, t) = 1;
  AlternatingForm alpha = map_values(pullback(base.cocycle.alpha, phi0), embedding(dim_a, 0, 8));
  const AlternatingForm ap = alpha_plus();
  for (std::size_t k = 0; k < n; ++k) {
    Matrix phik(8, dim_l);
    for (std::size_t t = 0; t < 4; ++t) {
      phik(t, t) = 1;
      phik(4 + t, 7 + 4 * k + t) = 1;
    }
    alpha += map_values(pullback(ap, phik), embedding(dim_a, 8 + 6 * k, 6));
  }
  in.cocycle.alpha = std::move(alpha);
  in.cocycle.gamma = pullback(base.cocycle.gamma, phi0);
  return in;
}

ExtensionInput example2(std::size_t n) {
  return example2(std::vector<Matrix>(n, example2_default_matrix()));
}

PythagoreanAngle PythagoreanAngle::make(Scalar s, Scalar c, bool require_normal_range) {
  if (s * s + c * c != Scalar(1)) {
    throw std::invalid_argument("angle: s^2 + c^2 = " + (s * s + c * c).to_string() + ", expected 1");
  }
  if (require_normal_range && !(s.sign() > 0 && s <= c)) {
    throw std::invalid_argument("angle: expected 0 < s <= c");
  }
  return {std::move(s), std::move(c)};
}

PythagoreanAngle PythagoreanAngle::from_parameter(const Scalar& t) {
  const Scalar d = Scalar(1) + t * t;
  return make(Scalar(2) * t / d, (Scalar(1) - t * t) / d);
}

std::optional<ClassificationKind> parse_classification_kind(const std::string& name) {
  if (name == "a-prime") return ClassificationKind::a_prime;
  if (name == "a-r") return ClassificationKind::a_r;
  if (name == "a-s") return ClassificationKind::a_s;
  return std::nullopt;
}

std::string to_string(ClassificationKind kind) {
  switch (kind) {
    case ClassificationKind::a_prime: return "a-prime";
    case ClassificationKind::a_r: return "a-r";
    case ClassificationKind::a_s: return "a-s";
  }
  return "?";
}

AlternatingForm quaternion_cocycle(const std::vector<Vector>& images) {
  if (images.size() != 3) throw std::invalid_argument("quaternion_cocycle needs three images");
  const std::size_t r = images[0].size();
  AlternatingForm f(4, 2, r);
  for (int x = 0; x < 4; ++x)
    for (int y = x + 1; y < 4; ++y) {
      Vector v(r);
      const Quaternion prod = Quaternion::unit(x).conj() * Quaternion::unit(y);
      for (int m = 0; m < 3; ++m) {
        const Scalar c = (prod * Quaternion::unit(m + 1).conj()).w;
        axpy(v, c, images[static_cast<std::size_t>(m)]);
      }
      f.set({x, y}, v);
    }
  return f;
}

std::vector<Vector> transformed_images(const std::vector<Vector>& images, const Scalar& r, const Quaternion& u) {
  if (images.size() != 3) throw std::invalid_argument("three images expected");
  const Matrix lam = lambda_so3(u);
  std::vector<Vector> out;
  for (std::size_t n = 0; n < 3; ++n) {
    Vector v = zero_vector(images[0].size());
    for (std::size_t m = 0; m < 3; ++m) axpy(v, r * r * lam(n, m), images[m]);
    out.push_back(std::move(v));
  }
  return out;
}

ExtensionInput classification_cocycle(ClassificationKind kind, const std::optional<PythagoreanAngle>& angle) {
  if (kind != ClassificationKind::a_prime && !angle) {
    throw std::invalid_argument(to_string(kind) + " needs an angle (s, c)");
  }
  std::vector<Scalar> diag;
  std::vector<Vector> images;
  switch (kind) {
    case ClassificationKind::a_prime:
      diag = {-1, 1};
      images = {{1, 0}, {0, 1}, {0, 0}};
      break;
    case ClassificationKind::a_r:
      diag = {-1, 1, 1};
      images = {{1, 0, 0}, {0, angle->s, 0}, {0, 0, angle->c}};
      break;
    case ClassificationKind::a_s:
      diag = {-1, -1, 1};
      images = {{angle->s, 0, 0}, {0, angle->c, 0}, {0, 0, 1}};
      break;
  }
  ExtensionInput in;
  in.l = abelian_quaternions(1);
  Matrix gram(diag.size(), diag.size());
  for (std::size_t t = 0; t < diag.size(); ++t) gram(t, t) = diag[t];
  in.a.form = SymBilinearForm(std::move(gram));
  in.a.grading = QuatGrading::trivial(diag.size());
  in.a.labels = default_labels(diag.size(), "A");
  in.cocycle.alpha = quaternion_cocycle(images);
  in.cocycle.gamma = AlternatingForm(4, 3, 1);
  return in;
}

HyperKahlerTriple flat_quaternion_triple() {
  const GradedLieAlgebra h = abelian_quaternions(1);
  return {h.algebra, h.grading, SymBilinearForm(Scalar(-1) * Matrix::identity(4))};
}

ExtensionInput flat_input() {
  ExtensionInput in;
  in.l.algebra = LieAlgebra(0);
  in.l.grading = QuatGrading::trivial(0);
  in.a.form = SymBilinearForm(Scalar(-1) * Matrix::identity(4));
  in.a.grading = QuatGrading::quaternionic(1);
  in.a.labels = kHLabels;
  in.cocycle = QuadCocycle2::zero(0, 4);
  return in;
}

std::string to_string(Basis b) {
  switch (b) {
    case Basis::published: return "published";
    case Basis::derived: return "derived";
    case Basis::trivial: return "trivial";
  }
  return "?";
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"example1", "l0 = H + Im H with a0 = H (x) a_R and (alpha0, gamma0)", "",
       {{"dim", "22", Basis::derived},
        {"signature", "(4,12)", Basis::published},
        {"admissible", "true", Basis::published},
        {"holonomy abelian", "false", Basis::published}}},
      {"example2", "l0 + H^n with a0 + a_A, alpha = alpha0 + alpha_+", "n=1, A=diag(1,1,-2)",
       {{"dim", "36", Basis::derived},
        {"signature", "(8,16)", Basis::published},
        {"admissible", "true", Basis::published},
        {"holonomy abelian", "false", Basis::published}}},
      {"a-prime", "abelian H, a = R^{1,1}, alpha' = (A1, A2, 0)", "",
       {{"dim", "10", Basis::derived},
        {"signature", "(4,4)", Basis::derived},
        {"admissible", "true", Basis::derived},
        {"holonomy abelian", "true", Basis::derived}}},
      {"a-r", "abelian H, a = R^{1,2}, alpha_r = (A1, s A2, c A3)", "s=3/5, c=4/5",
       {{"dim", "11", Basis::derived},
        {"signature", "(4,4)", Basis::derived},
        {"admissible", "true", Basis::derived},
        {"holonomy abelian", "true", Basis::derived}}},
      {"a-s", "abelian H, a = R^{2,1}, alpha_s = (s A1, c A2, A3)", "s=3/5, c=4/5",
       {{"dim", "11", Basis::derived},
        {"signature", "(4,4)", Basis::derived},
        {"admissible", "true", Basis::derived},
        {"holonomy abelian", "true", Basis::derived}}},
      {"flat", "l = 0, a = H with -Re(conj(p) q)", "",
       {{"dim", "4", Basis::trivial},
        {"signature", "(4,0)", Basis::derived},
        {"admissible", "true", Basis::trivial},
        {"holonomy abelian", "true", Basis::trivial}}},
  };
  return entries;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace hksym
