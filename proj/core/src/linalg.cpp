#include "hksym/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace hksym {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DimensionMismatch(what);
}

}  // namespace

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

Scalar dot(const Vector& x, const Vector& y) {
  require(x.size() == y.size(), "dot: length mismatch");
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i];
  }
  return s;
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  require(x.size() == y.size(), "axpy: length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
}

Vector scaled(const Vector& v, const Scalar& a) {
  Vector r(v.size());
  if (a.is_zero()) return r;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) r[i] = v[i] * a;
  }
  return r;
}

Vector operator+(const Vector& x, const Vector& y) {
  Vector r = x;
  axpy(r, Scalar(1), y);
  return r;
}

Vector operator-(const Vector& x, const Vector& y) {
  Vector r = x;
  axpy(r, Scalar(-1), y);
  return r;
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ')';
  return os.str();
}

SparseVector to_sparse(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) s.emplace_back(static_cast<int>(i), v[i]);
  }
  return s;
}

Vector to_dense(const SparseVector& v, std::size_t n) {
  Vector d(n);
  for (const auto& [i, x] : v) {
    require(i >= 0 && static_cast<std::size_t>(i) < n, "to_dense: index out of range");
    d[i] += x;
  }
  return d;
}

void accumulate(Vector& y, const Scalar& a, const SparseVector& x) {
  if (a.is_zero()) return;
  for (const auto& [i, v] : x) y.at(i) += a * v;
}

SparseVector sparse_sum(const SparseVector& x, const SparseVector& y) {
  SparseVector r;
  r.reserve(x.size() + y.size());
  auto a = x.begin();
  auto b = y.begin();
  while (a != x.end() || b != y.end()) {
    if (b == y.end() || (a != x.end() && a->first < b->first)) {
      r.push_back(*a++);
    } else if (a == x.end() || b->first < a->first) {
      r.push_back(*b++);
    } else {
      Scalar s = a->second + b->second;
      if (!s.is_zero()) r.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  return r;
}

SparseVector sparse_scaled(const SparseVector& x, const Scalar& a) {
  SparseVector r;
  if (a.is_zero()) return r;
  r.reserve(x.size());
  for (const auto& [i, v] : x) r.emplace_back(i, v * a);
  return r;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require(cols[c].size() == rows, "from_columns: column length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, "from_rows: row length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return hksym::is_zero(data_); }

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.rows_, "matrix product: inner dimension");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
      }
    }
  }
  return m;
}

Vector operator*(const Matrix& a, const Vector& x) {
  require(a.cols_ == x.size(), "matrix-vector product: length");
  Vector y(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!x[k].is_zero() && !a(i, k).is_zero()) y[i] += a(i, k) * x[k];
    }
  }
  return y;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum: shape");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference: shape");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix m = a;
  for (auto& x : m.data_) x *= s;
  return m;
}

// --------------------------------------------------------- elimination

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    }
    const Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse: matrix not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
    throw std::domain_error("inverse: singular matrix");
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

// -------------------------------------------------------------- Subspace

Subspace Subspace::whole(std::size_t n) {
  Subspace s(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.basis_.push_back(unit_vector(n, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(std::size_t n, const std::vector<Vector>& generators) {
  Subspace s(n);
  for (const auto& g : generators) {
    require(g.size() == n, "span: generator length");
    s.insert(g);
  }
  return s;
}

Subspace Subspace::coordinate(std::size_t n, std::span<const int> indices) {
  Subspace s(n);
  for (int i : indices) s.insert(unit_vector(n, static_cast<std::size_t>(i)));
  return s;
}

Vector Subspace::residual(Vector v) const {
  require(v.size() == ambient_, "subspace: vector length");
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Scalar f = v[pivots_[r]];
    if (!f.is_zero()) axpy(v, -f, basis_[r]);
  }
  return v;
}

bool Subspace::insert(Vector v) {
  v = residual(std::move(v));
  auto it = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return !x.is_zero(); });
  if (it == v.end()) return false;
  const auto p = static_cast<std::size_t>(it - v.begin());
  v = scaled(v, v[p].inverse());
  for (auto& row : basis_) {
    const Scalar f = row[p];
    if (!f.is_zero()) axpy(row, -f, v);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  basis_.insert(basis_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

bool Subspace::contains(const Vector& v) const { return hksym::is_zero(residual(v)); }

bool Subspace::contains(const Subspace& other) const {
  require(other.ambient_ == ambient_, "subspace containment: ambient dimension");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vector& v) { return contains(v); });
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw std::invalid_argument("coordinates: vector not in subspace");
  Vector c(basis_.size());
  for (std::size_t r = 0; r < basis_.size(); ++r) c[r] = v[pivots_[r]];
  return c;
}

// ------------------------------------------------------------- solving

LinearSolution solve_linear(const Matrix& m, const Vector& b) {
  require(b.size() == m.rows(), "solve_linear: right-hand side length");
  const std::size_t n = m.cols();
  Matrix aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  RowEchelon e = row_reduce(std::move(aug));
  LinearSolution sol;
  const bool inconsistent = !e.pivots.empty() && e.pivots.back() == n;
  std::vector<bool> is_pivot(n, false);
  std::size_t rank = e.pivots.size() - (inconsistent ? 1 : 0);
  for (std::size_t r = 0; r < rank; ++r) is_pivot[e.pivots[r]] = true;
  if (!inconsistent) {
    Vector x(n);
    for (std::size_t r = 0; r < rank; ++r) x[e.pivots[r]] = e.reduced(r, n);
    sol.particular = std::move(x);
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector k(n);
    k[f] = 1;
    for (std::size_t r = 0; r < rank; ++r) {
      if (!e.reduced(r, f).is_zero()) k[e.pivots[r]] = -e.reduced(r, f);
    }
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  return solve_linear(m, Vector(m.rows())).kernel;
}

Subspace kernel(const Matrix& m) { return Subspace::span(m.cols(), kernel_basis(m)); }

Subspace image(const Matrix& m) {
  Subspace s(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) s.insert(m.column(c));
  return s;
}

Subspace annihilator(const Subspace& u) {
  return kernel(Matrix::from_rows(u.ambient_dim(), u.basis()));
}

Subspace sum(const Subspace& u, const Subspace& v) {
  require(u.ambient_dim() == v.ambient_dim(), "sum: ambient dimension");
  Subspace s = u;
  for (const auto& b : v.basis()) s.insert(b);
  return s;
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  require(u.ambient_dim() == v.ambient_dim(), "intersect: ambient dimension");
  const std::size_t n = u.ambient_dim();
  if (u.is_zero() || v.is_zero()) return Subspace(n);
  // Solve sum a_i u_i - sum b_j v_j = 0 and map the a-part back.
  const std::size_t du = u.dim();
  Matrix m(n, du + v.dim());
  for (std::size_t c = 0; c < du; ++c)
    for (std::size_t r = 0; r < n; ++r) m(r, c) = u.basis()[c][r];
  for (std::size_t c = 0; c < v.dim(); ++c)
    for (std::size_t r = 0; r < n; ++r) m(r, du + c) = -v.basis()[c][r];
  Subspace out(n);
  for (const auto& k : kernel_basis(m)) {
    Vector x(n);
    for (std::size_t c = 0; c < du; ++c) axpy(x, k[c], u.basis()[c]);
    out.insert(std::move(x));
  }
  return out;
}

Quotient quotient(const Subspace& u) {
  const std::size_t n = u.ambient_dim();
  Quotient q;
  std::vector<bool> is_pivot(n, false);
  for (auto p : u.pivots()) is_pivot[p] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) q.complement.push_back(i);
  q.projection = Matrix(q.complement.size(), n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector r = u.residual(unit_vector(n, j));
    for (std::size_t k = 0; k < q.complement.size(); ++k) q.projection(k, j) = r[q.complement[k]];
  }
  return q;
}

// ------------------------------------------------------- bilinear forms

SymBilinearForm::SymBilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_symmetric()) throw std::invalid_argument("bilinear form: Gram matrix not symmetric");
}

SymBilinearForm SymBilinearForm::zero(std::size_t n) { return SymBilinearForm(Matrix(n, n)); }

Scalar SymBilinearForm::operator()(const Vector& x, const Vector& y) const {
  return dot(x, gram_ * y);
}

SymBilinearForm SymBilinearForm::restrict_to(const std::vector<Vector>& basis) const {
  const Matrix b = Matrix::from_columns(dim(), basis);
  return SymBilinearForm(b.transpose() * gram_ * b);
}

SymBilinearForm SymBilinearForm::restrict_to(std::span<const int> indices) const {
  Matrix m(indices.size(), indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < indices.size(); ++j) m(i, j) = gram_(indices[i], indices[j]);
  return SymBilinearForm(std::move(m));
}

Signature signature(const SymBilinearForm& form) {
  Matrix b = form.gram();
  const std::size_t n = b.rows();
  Signature sig;
  auto swap_index = [&](std::size_t x, std::size_t y) {
    for (std::size_t t = 0; t < n; ++t) std::swap(b(x, t), b(y, t));
    for (std::size_t t = 0; t < n; ++t) std::swap(b(t, x), b(t, y));
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (b(k, k).is_zero()) {
      std::size_t j = k + 1;
      while (j < n && b(j, j).is_zero()) ++j;
      if (j < n) {
        swap_index(k, j);
      } else {
        // All remaining diagonal entries vanish: add a partner row/col.
        j = k + 1;
        while (j < n && b(k, j).is_zero()) ++j;
        if (j == n) {
          ++sig.radical;
          continue;
        }
        for (std::size_t t = 0; t < n; ++t) b(k, t) += b(j, t);
        for (std::size_t t = 0; t < n; ++t) b(t, k) += b(t, j);
      }
    }
    const Scalar pivot = b(k, k);
    const Scalar inv = pivot.inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (b(i, k).is_zero()) continue;
      const Scalar f = b(i, k) * inv;
      for (std::size_t t = k; t < n; ++t) {
        if (!b(k, t).is_zero()) b(i, t) -= f * b(k, t);
      }
      for (std::size_t t = k; t < n; ++t) {
        if (!b(t, k).is_zero()) b(t, i) -= f * b(t, k);
      }
    }
    if (pivot.sign() < 0) {
      ++sig.negative;
    } else {
      ++sig.positive;
    }
  }
  return sig;
}

bool is_nondegenerate(const SymBilinearForm& form) { return rank(form.gram()) == form.dim(); }

Subspace radical(const SymBilinearForm& form) { return kernel(form.gram()); }

Subspace perp(const Subspace& u, const SymBilinearForm& form) {
  require(u.ambient_dim() == form.dim(), "perp: ambient dimension");
  std::vector<Vector> rows;
  rows.reserve(u.dim());
  for (const auto& v : u.basis()) rows.push_back(form.gram().transpose() * v);
  return kernel(Matrix::from_rows(form.dim(), rows));
}

}  // namespace hksym
