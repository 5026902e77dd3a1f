#include "hksym/extract.hpp"

#include <string>

namespace hksym {

namespace {

// Restriction of Q to an invariant span, in the coordinates of that span.
Matrix restricted_operator(const QuatGrading& g, int q, const std::vector<Vector>& vecs, const Matrix& to_coords,
                           std::size_t offset) {
  const std::size_t m = vecs.size();
  Matrix out(m, m);
  for (std::size_t c = 0; c < m; ++c) {
    Vector w = to_coords * g.apply(q, vecs[c]);
    for (std::size_t r = 0; r < m; ++r) out(r, c) = w[offset + r];
  }
  return out;
}

}  // namespace

ExtensionInput extract_canonical(const HyperKahlerTriple& t, ExtractionData* data) {
  const std::size_t dim = t.dim();
  const LieAlgebra& g = t.algebra;
  const SymBilinearForm& metric = t.metric;
  const QuatGrading& phi = t.grading;

  const LowerCentralSeries lcs = lower_central_series(g);
  if (!lcs.nilpotent) throw ExtractionError("algebra is not nilpotent");

  Subspace iso(dim);
  for (std::size_t k = 1; k < lcs.terms.size(); ++k) {
    const Subspace& gk = lcs.terms[k];
    iso = sum(iso, intersect(gk, perp(gk, metric)));
  }
  const Subspace iso_perp = perp(iso, metric);

  // Graded complement of i^perp: plus basis vectors, then H-blocks on the minus side.
  Subspace acc = iso_perp;
  std::vector<Vector> comp;
  std::vector<bool> comp_minus;
  for (int p : phi.plus) {
    Vector e = unit_vector(dim, static_cast<std::size_t>(p));
    if (acc.insert(e)) {
      comp.push_back(std::move(e));
      comp_minus.push_back(false);
    }
  }
  for (int p : phi.minus) {
    Vector e = unit_vector(dim, static_cast<std::size_t>(p));
    if (acc.contains(e)) continue;
    std::vector<Vector> block{e, phi.apply(0, e), phi.apply(1, e), phi.apply(2, e)};
    for (auto& v : block) {
      if (!acc.insert(v)) throw ExtractionError("minus part is not a free H-module modulo i^perp");
      comp.push_back(std::move(v));
      comp_minus.push_back(true);
    }
  }

  const std::size_t n = comp.size();
  if (iso.dim() != n)
    throw ExtractionError("dim i = " + std::to_string(iso.dim()) + " but dim g/i^perp = " + std::to_string(n));

  // pair(t, c) = <i_t, c_c>; transposed inverse solves for elements of i.
  Matrix pair_t(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) pair_t(c, a) = metric(iso.basis()[a], comp[c]);
  Matrix solve;
  try {
    solve = inverse(pair_t);
  } catch (const std::domain_error&) {
    throw ExtractionError("i does not pair nondegenerately with g/i^perp");
  }
  auto in_iso = [&](const Vector& rhs) {
    Vector x = solve * rhs;
    Vector v = zero_vector(dim);
    for (std::size_t a = 0; a < n; ++a) axpy(v, x[a], iso.basis()[a]);
    return v;
  };

  std::vector<Vector> section;
  std::vector<Vector> dual;
  for (std::size_t c = 0; c < n; ++c) {
    Vector rhs(n);
    for (std::size_t c2 = 0; c2 < n; ++c2) rhs[c2] = Scalar::fraction(-1, 2) * metric(comp[c], comp[c2]);
    section.push_back(comp[c] + in_iso(rhs));
    dual.push_back(in_iso(unit_vector(n, c)));
  }

  const Subspace a_space = intersect(iso_perp, perp(Subspace::span(dim, section), metric));
  const Subspace a_plus = intersect(a_space, Subspace::coordinate(dim, phi.plus));
  const Subspace a_minus = intersect(a_space, Subspace::coordinate(dim, phi.minus));
  if (a_plus.dim() + a_minus.dim() != a_space.dim()) throw ExtractionError("a is not graded");
  std::vector<Vector> a_basis = a_plus.basis();
  a_basis.insert(a_basis.end(), a_minus.basis().begin(), a_minus.basis().end());
  const std::size_t r = a_basis.size();

  const ExtensionLayout lay{n, r};
  std::vector<Vector> cols = dual;
  cols.insert(cols.end(), a_basis.begin(), a_basis.end());
  cols.insert(cols.end(), section.begin(), section.end());
  Matrix to_coords;
  try {
    to_coords = inverse(Matrix::from_columns(dim, cols));
  } catch (const std::domain_error&) {
    throw ExtractionError("i + a + s(l) does not span g");
  }

  ExtensionInput in;
  in.l.algebra = LieAlgebra(n, default_labels(n, "L"));
  in.cocycle = QuadCocycle2::zero(n, r);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector w = to_coords * g.bracket(section[i], section[j]);
      const int ii = static_cast<int>(i), jj = static_cast<int>(j);
      Vector lpart(w.begin() + lay.l(0), w.end());
      in.l.algebra.set_bracket(ii, jj, lpart);
      Vector apart(w.begin() + lay.a(0), w.begin() + lay.l(0));
      in.cocycle.alpha.set({ii, jj}, apart);
      for (std::size_t k = j + 1; k < n; ++k)
        in.cocycle.gamma.set_scalar({ii, jj, static_cast<int>(k)}, w[static_cast<std::size_t>(lay.z(k))]);
    }
  }

  std::vector<Vector> l_minus_vecs;
  for (std::size_t c = 0; c < n; ++c) {
    if (comp_minus[c]) {
      in.l.grading.minus.push_back(static_cast<int>(c));
      l_minus_vecs.push_back(section[c]);
    } else {
      in.l.grading.plus.push_back(static_cast<int>(c));
    }
  }
  // Minus sections sit in order inside the L block, so extract by position.
  for (int q = 0; q < 3; ++q) {
    const std::size_t m = l_minus_vecs.size();
    Matrix op(m, m);
    for (std::size_t c = 0; c < m; ++c) {
      const Vector w = to_coords * phi.apply(q, l_minus_vecs[c]);
      for (std::size_t rr = 0; rr < m; ++rr)
        op(rr, c) = w[static_cast<std::size_t>(lay.l(static_cast<std::size_t>(in.l.grading.minus[rr])))];
    }
    in.l.grading.ops[static_cast<std::size_t>(q)] = std::move(op);
  }

  in.a.form = metric.restrict_to(a_basis);
  in.a.labels = default_labels(r, "A");
  for (std::size_t s = 0; s < a_plus.dim(); ++s) in.a.grading.plus.push_back(static_cast<int>(s));
  for (std::size_t s = a_plus.dim(); s < r; ++s) in.a.grading.minus.push_back(static_cast<int>(s));
  for (int q = 0; q < 3; ++q)
    in.a.grading.ops[static_cast<std::size_t>(q)] =
        restricted_operator(phi, q, a_minus.basis(), to_coords, static_cast<std::size_t>(lay.a(a_plus.dim())));

  if (data != nullptr) {
    data->isotropic_ideal = iso;
    data->ideal_perp = iso_perp;
    data->section = std::move(section);
    data->a_basis = std::move(a_basis);
    data->dual_basis = std::move(dual);
  }
  return in;
}

}  // namespace hksym
