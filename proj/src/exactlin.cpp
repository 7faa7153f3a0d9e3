#include "kleinjet/exactlin.hpp"

#include <string>
#include <utility>

#include "kleinjet/errors.hpp"

namespace kleinjet {

namespace {

void require_same_length(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionError("subspace ambient mismatch: " + std::to_string(a.ambient_dim()) +
                         " vs " + std::to_string(b.ambient_dim()));
  }
}

void require_operators(std::span<const Matrix> operators, std::size_t n) {
  for (const Matrix& op : operators) {
    if (op.rows() != n || op.cols() != n) {
      throw DimensionError("operator is " + std::to_string(op.rows()) + "x" +
                           std::to_string(op.cols()) + ", expected " + std::to_string(n) +
                           "x" + std::to_string(n));
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Vector

Vector Vector::unit(std::size_t dim, std::size_t index) {
  Vector v(dim);
  v[index] = 1;
  return v;
}

bool Vector::is_zero() const {
  for (const Rational& x : entries_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector& Vector::operator+=(const Vector& o) {
  require_same_length(*this, o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  require_same_length(*this, o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& s) {
  for (Rational& x : entries_) x *= s;
  return *this;
}

Vector& Vector::add_scaled(const Rational& s, const Vector& o) {
  require_same_length(*this, o);
  if (s.is_zero()) return *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!o.entries_[i].is_zero()) entries_[i] += s * o.entries_[i];
  }
  return *this;
}

Rational dot(const Vector& a, const Vector& b) {
  require_same_length(a, b);
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionError("row " + std::to_string(r) + " has length " +
                           std::to_string(rows[r].size()) + ", expected " +
                           std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<Vector> vs;
  for (const auto& r : rows) vs.emplace_back(r);
  return from_rows(vs, vs.empty() ? 0 : vs.front().size());
}

bool Matrix::is_zero() const {
  for (const Rational& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector Matrix::row(std::size_t r) const {
  Vector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vector Matrix::flatten() const { return Vector(data_); }

Matrix& Matrix::operator+=(const Matrix& o) { return add_scaled(1, o); }

Matrix& Matrix::operator-=(const Matrix& o) { return add_scaled(-1, o); }

Matrix& Matrix::operator*=(const Rational& s) {
  for (Rational& x : data_) x *= s;
  return *this;
}

Matrix& Matrix::add_scaled(const Rational& s, const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  if (s.is_zero()) return *this;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] += s * o.data_[i];
  }
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
      }
    }
  }
  return p;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------
// Elimination

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    const Rational inv = Rational(1) / a(r, c);
    for (std::size_t j = c; j < cols; ++j) {
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = std::move(a(i, j));
  }
  return {std::move(out), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

Subspace::Subspace(std::size_t ambient_dim, RrefResult reduced)
    : ambient_dim_(ambient_dim),
      basis_(reduced.matrix.row_vectors()),
      pivots_(std::move(reduced.pivots)) {}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vector> units;
  for (std::size_t i = 0; i < ambient_dim; ++i) units.push_back(Vector::unit(ambient_dim, i));
  return span(units, ambient_dim);
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(basis_, ambient_dim_); }

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim_) {
    throw DimensionError("vector of length " + std::to_string(v.size()) +
                         " tested against subspace of Q^" + std::to_string(ambient_dim_));
  }
  // In RREF, the only candidate combination uses the pivot entries of v.
  Vector w(ambient_dim_);
  for (std::size_t j = 0; j < basis_.size(); ++j) w.add_scaled(v[pivots_[j]], basis_[j]);
  return w == v;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw PreconditionError("vector is not in the subspace");
  Vector c(basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j) c[j] = v[pivots_[j]];
  return c;
}

Subspace span(std::span<const Vector> vectors, std::size_t ambient_dim) {
  std::vector<Vector> rows(vectors.begin(), vectors.end());
  return Subspace(ambient_dim, rref(Matrix::from_rows(rows, ambient_dim)));
}

bool contains(const Subspace& s, const Vector& v) { return s.contains(v); }

bool leq(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  if (a.dim() > b.dim()) return false;
  for (const Vector& v : a.basis()) {
    if (!b.contains(v)) return false;
  }
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  std::vector<Vector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return span(all, a.ambient_dim());
}

Subspace annihilator(const Subspace& s) { return kernel(s.basis_matrix()); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return annihilator(sum(annihilator(a), annihilator(b)));
}

Subspace kernel(const Matrix& m) {
  const RrefResult red = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector x(n);
    x[f] = 1;
    for (std::size_t j = 0; j < red.pivots.size(); ++j) x[red.pivots[j]] = -red.matrix(j, f);
    gens.push_back(std::move(x));
  }
  return span(gens, n);
}

Subspace image_under(const Subspace& s, std::span<const Matrix> operators) {
  require_operators(operators, s.ambient_dim());
  std::vector<Vector> images;
  images.reserve(operators.size() * s.dim());
  for (const Matrix& op : operators) {
    for (const Vector& b : s.basis()) images.push_back(op * b);
  }
  return span(images, s.ambient_dim());
}

Subspace relative_invariant(const Subspace& s, std::span<const Matrix> operators,
                            const Subspace& t) {
  require_same_ambient(s, t);
  require_operators(operators, s.ambient_dim());
  if (s.is_zero() || operators.empty()) return s;
  const Subspace functionals = annihilator(t);
  if (functionals.is_zero()) return s;

  // x = sum_j c_j s_j lies in the answer iff phi(A x) = 0 for every
  // functional phi vanishing on t and every operator A: linear in c.
  const std::size_t k = s.dim();
  std::vector<Vector> constraints;
  for (const Matrix& op : operators) {
    std::vector<Vector> moved;
    moved.reserve(k);
    for (const Vector& b : s.basis()) moved.push_back(op * b);
    for (const Vector& phi : functionals.basis()) {
      Vector row(k);
      for (std::size_t j = 0; j < k; ++j) row[j] = dot(phi, moved[j]);
      if (!row.is_zero()) constraints.push_back(std::move(row));
    }
  }
  const Subspace coeffs = kernel(Matrix::from_rows(constraints, k));
  std::vector<Vector> members;
  for (const Vector& c : coeffs.basis()) {
    Vector x(s.ambient_dim());
    for (std::size_t j = 0; j < k; ++j) x.add_scaled(c[j], s.basis()[j]);
    members.push_back(std::move(x));
  }
  return span(members, s.ambient_dim());
}

Subspace invariant_hull(const Subspace& s, std::span<const Matrix> operators) {
  require_operators(operators, s.ambient_dim());
  Subspace current = s;
  while (true) {
    Subspace next = sum(current, image_under(current, operators));
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

}  // namespace kleinjet
