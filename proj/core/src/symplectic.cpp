#include "hksym/symplectic.hpp"

#include <algorithm>
#include <functional>

namespace hksym::ac {

std::string SymplecticSpace::label(int k) const {
  const auto u = static_cast<std::size_t>(k);
  return u < n_ ? "p" + std::to_string(u + 1) : "q" + std::to_string(u - n_ + 1);
}

int SymplecticSpace::index_of(const std::string& label) const {
  if (label.size() < 2 || (label[0] != 'p' && label[0] != 'q')) return -1;
  const std::string digits = label.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      digits[0] == '0' || digits.size() > 6)
    return -1;
  const auto i = static_cast<std::size_t>(std::stoul(digits));
  if (i < 1 || i > n_) return -1;
  return label[0] == 'p' ? p(i) : q(i);
}

Scalar SymplecticSpace::omega(int x, int y) const {
  const auto n = static_cast<int>(n_);
  if (x < n && y == x + n) return 1;
  if (y < n && x == y + n) return -1;
  return 0;
}

Scalar SymplecticSpace::omega(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("omega: vector length");
  Scalar s;
  for (std::size_t i = 0; i < n_; ++i) s += x[i] * y[n_ + i] - x[n_ + i] * y[i];
  return s;
}

Matrix SymplecticSpace::gram() const {
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < n_; ++i) {
    m(i, n_ + i) = 1;
    m(n_ + i, i) = -1;
  }
  return m;
}

SymPoly SymPoly::monomial(std::size_t space_dim, Monomial m, const Scalar& c) {
  SymPoly p(space_dim, m.size());
  p.add_term(std::move(m), c);
  return p;
}

Scalar SymPoly::coefficient(Monomial m) const {
  std::sort(m.begin(), m.end());
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

void SymPoly::add_term(Monomial m, const Scalar& c) {
  if (m.size() != degree_) throw std::invalid_argument("monomial degree differs from polynomial degree");
  for (int k : m)
    if (k < 0 || static_cast<std::size_t>(k) >= dim_) throw std::invalid_argument("monomial index out of range");
  if (c.is_zero()) return;
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Field SymPoly::field() const {
  Field f;
  for (const auto& [m, c] : terms_) f = join(f, c.field());
  return f;
}

SymPoly SymPoly::derivative(int k) const {
  SymPoly out(dim_, degree_ == 0 ? 0 : degree_ - 1);
  for (const auto& [m, c] : terms_) {
    const auto mult = std::count(m.begin(), m.end(), k);
    if (mult == 0) continue;
    Monomial rest = m;
    rest.erase(std::find(rest.begin(), rest.end(), k));
    out.add_term(std::move(rest), c * Scalar(static_cast<long>(mult)));
  }
  return out;
}

SymPoly SymPoly::times(int k) const {
  SymPoly out(dim_, degree_ + 1);
  for (const auto& [m, c] : terms_) {
    Monomial longer = m;
    longer.push_back(k);
    out.add_term(std::move(longer), c);
  }
  return out;
}

std::vector<SymPoly::Monomial> all_monomials(std::size_t space_dim, std::size_t degree) {
  std::vector<SymPoly::Monomial> out;
  SymPoly::Monomial cur;
  std::function<void(int)> rec = [&](int from) {
    if (cur.size() == degree) {
      out.push_back(cur);
      return;
    }
    for (int k = from; k < static_cast<int>(space_dim); ++k) {
      cur.push_back(k);
      rec(k);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

Vector SymPoly::to_vector() const {
  const auto mons = all_monomials(dim_, degree_);
  Vector v(mons.size());
  for (const auto& [m, c] : terms_) {
    auto it = std::lower_bound(mons.begin(), mons.end(), m);
    v[static_cast<std::size_t>(it - mons.begin())] = c;
  }
  return v;
}

SymPoly SymPoly::from_vector(std::size_t space_dim, std::size_t degree, const Vector& v) {
  const auto mons = all_monomials(space_dim, degree);
  if (v.size() != mons.size()) throw DimensionMismatch("SymPoly::from_vector: length");
  SymPoly p(space_dim, degree);
  for (std::size_t i = 0; i < mons.size(); ++i) p.add_term(mons[i], v[i]);
  return p;
}

std::string SymPoly::to_string(const SymplecticSpace& e) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      if (!mono.empty()) mono += "*";
      mono += e.label(m[i]);
      if (j - i > 1) mono += "^" + std::to_string(j - i);
      i = j;
    }
    std::string coeff = c.to_string();
    const bool neg = c.sign() < 0;
    if (neg) coeff = (-c).to_string();
    if (coeff.find(' ') != std::string::npos) coeff = "(" + coeff + ")";
    std::string term = mono.empty() ? coeff : (coeff == "1" ? mono : coeff + "*" + mono);
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += neg ? " - " + term : " + " + term;
  }
  return out;
}

void SymPoly::require_compatible(const SymPoly& o) const {
  if (dim_ != o.dim_ || degree_ != o.degree_) throw DimensionMismatch("SymPoly: shape mismatch");
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SymPoly operator*(const Scalar& s, const SymPoly& p) {
  SymPoly out(p.dim_, p.degree_);
  for (const auto& [m, c] : p.terms_) out.add_term(m, s * c);
  return out;
}

SymPoly contract(const SymplecticSpace& e, const SymPoly& s, const Vector& v) {
  if (v.size() != e.dim() || s.space_dim() != e.dim()) throw DimensionMismatch("contract: dimension");
  SymPoly out(e.dim(), s.degree() == 0 ? 0 : s.degree() - 1);
  if (s.degree() == 0) return out;
  // omega(v, .) has coordinates omega(v, e_k).
  for (std::size_t k = 0; k < e.dim(); ++k) {
    Scalar f = e.omega(v, unit_vector(e.dim(), k));
    if (!f.is_zero()) out += f * s.derivative(static_cast<int>(k));
  }
  return out;
}

SymPoly contract(const SymplecticSpace& e, const SymPoly& s, int basis_index) {
  return contract(e, s, unit_vector(e.dim(), static_cast<std::size_t>(basis_index)));
}

HSpan span_hS(const SymplecticSpace& e, const SymPoly& s) {
  if (s.degree() != 4) throw std::invalid_argument("span_hS: quartic expected");
  HSpan h;
  h.span = Subspace(all_monomials(e.dim(), 2).size());
  for (std::size_t v = 0; v < e.dim(); ++v) {
    const SymPoly sv = contract(e, s, static_cast<int>(v));
    for (std::size_t w = v; w < e.dim(); ++w) h.span.insert(contract(e, sv, static_cast<int>(w)).to_vector());
  }
  for (const auto& b : h.span.basis()) h.basis.push_back(SymPoly::from_vector(e.dim(), 2, b));
  return h;
}

SymPoly act_quadratic(const SymplecticSpace& e, const SymPoly& p, const SymPoly& s) {
  if (p.degree() != 2) throw std::invalid_argument("act_quadratic: P must be quadratic");
  SymPoly out(e.dim(), s.degree());
  if (s.degree() == 0) return out;
  for (const auto& [m, c] : p.terms()) {
    const int a = m[0], b = m[1];
    out += c * contract(e, s, b).times(a);
    out += c * contract(e, s, a).times(b);
  }
  return out;
}

CruxVerdict check_crux(const SymplecticSpace& e, const SymPoly& s) {
  CruxVerdict v;
  v.h = span_hS(e, s);
  for (const auto& p : v.h.basis) {
    if (!act_quadratic(e, p, s).is_zero()) {
      v.ok = false;
      v.failing = p;
      break;
    }
  }
  return v;
}

std::string to_string(Tameness t) {
  switch (t) {
    case Tameness::tame_certified: return "tame-certified";
    case Tameness::not_tame: return "not-tame";
    case Tameness::unknown: break;
  }
  return "unknown";
}

TamenessResult tameness(const SymplecticSpace& e, const SymPoly& s) {
  TamenessResult r;
  const std::size_t n = e.dim();
  // Column k holds S_{e_k}; ann(S) is the kernel.
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < n; ++k) cols.push_back(contract(e, s, static_cast<int>(k)).to_vector());
  const std::size_t rows = cols.empty() ? 0 : cols[0].size();
  r.annihilator = kernel(Matrix::from_columns(rows, cols));
  if (r.annihilator.dim() < e.half_dim()) {
    r.verdict = Tameness::not_tame;
    r.reason = "annihilator has dimension " + std::to_string(r.annihilator.dim()) + " < " +
               std::to_string(e.half_dim());
    return r;
  }
  // ann(S) = W^omega for the smallest W with S in S^4 W, so tame iff W is isotropic.
  auto omega_perp = [&](const Subspace& u) {
    std::vector<Vector> rows_w;
    for (const auto& b : u.basis()) rows_w.push_back(e.gram().transpose() * b);
    return kernel(Matrix::from_rows(n, rows_w));
  };
  const Subspace w = omega_perp(r.annihilator);
  if (!r.annihilator.contains(w)) {
    r.verdict = Tameness::not_tame;
    r.reason = "annihilator is not coisotropic";
    return r;
  }
  Subspace l = w;
  while (l.dim() < e.half_dim()) {
    const Subspace cand = omega_perp(l);
    bool grew = false;
    for (const auto& b : cand.basis())
      if (l.insert(b)) {
        grew = true;
        break;
      }
    if (!grew) break;
  }
  bool lagrangian = l.dim() == e.half_dim() && r.annihilator.contains(l);
  for (const auto& x : l.basis())
    for (const auto& y : l.basis()) lagrangian = lagrangian && e.omega(x, y).is_zero();
  if (!lagrangian) {
    r.reason = "no Lagrangian found inside the annihilator";
    return r;
  }
  r.verdict = Tameness::tame_certified;
  r.lagrangian = l.basis();
  r.reason = "annihilator contains a Lagrangian subspace";
  return r;
}

AbelianResult check_hS_abelian(const SymplecticSpace& e, const SymPoly& s) {
  const CruxVerdict crux = check_crux(e, s);
  if (!crux.ok) throw CruxNotSatisfied("crux condition fails, h_S is not known to be a subalgebra");
  AbelianResult r;
  const auto& b = crux.h.basis;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!act_quadratic(e, b[i], b[j]).is_zero()) {
        r.abelian = false;
        r.witness = std::make_pair(b[i], b[j]);
        return r;
      }
  return r;
}

SymplecticSpace ac_builtin_space() { return SymplecticSpace(4); }

SymPoly ac_builtin() {
  const SymplecticSpace e = ac_builtin_space();
  const Scalar r3 = Scalar::sqrt(Field::quadratic(3));
  const int p1 = e.p(1), p2 = e.p(2), p3 = e.p(3), p4 = e.p(4), q3 = e.q(3), q4 = e.q(4);
  SymPoly s(e.dim(), 4);
  s.add_term({p1, p1, p1, q3}, 1);
  s.add_term({p1, p1, p2, p4}, r3);
  s.add_term({p1, p2, p2, q4}, -r3);
  s.add_term({p2, p2, p2, p3}, -1);
  return s;
}

}  // namespace hksym::ac
