#ifndef KLEINJET_EXACTLIN_HPP
#define KLEINJET_EXACTLIN_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "kleinjet/rational.hpp"

namespace kleinjet {

/// Dense vector of exact rationals. The ambient dimension is its length.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : entries_(dim) {}
  explicit Vector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  Vector(std::initializer_list<Rational> entries) : entries_(entries) {}

  /// Standard basis vector e_index of the given dimension.
  static Vector unit(std::size_t dim, std::size_t index);

  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] bool is_zero() const;

  Rational& operator[](std::size_t i) { return entries_[i]; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  [[nodiscard]] std::span<const Rational> entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Rational& s);
  /// this += s * o, skipping the work when s is zero.
  Vector& add_scaled(const Rational& s, const Vector& o);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Rational& s, Vector v) { return v *= s; }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Rational> entries_;
};

/// Euclidean pairing sum a_i b_i (used for functionals acting on vectors).
Rational dot(const Vector& a, const Vector& b);

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Rows must share a common length; `cols` is used when `rows` is empty.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }
  [[nodiscard]] bool is_zero() const;

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] Vector row(std::size_t r) const;
  [[nodiscard]] Vector col(std::size_t c) const;
  [[nodiscard]] std::vector<Vector> row_vectors() const;
  [[nodiscard]] Matrix transpose() const;
  /// Row-major flattening, used to report matrix discrepancies as vectors.
  [[nodiscard]] Vector flatten() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);
  Matrix& add_scaled(const Rational& s, const Matrix& o);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& s, Matrix m) { return m *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix matrix;                    // nonzero rows only
  std::vector<std::size_t> pivots;  // strictly increasing
};

/// Reduced row-echelon form with zero rows dropped.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A linear subspace of Q^n held by its unique reduced row-echelon basis, so
/// structural equality is subspace equality.
class Subspace {
 public:
  /// The zero subspace of Q^ambient_dim.
  explicit Subspace(std::size_t ambient_dim);

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim);

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] bool is_zero() const { return basis_.empty(); }
  [[nodiscard]] bool is_full() const { return basis_.size() == ambient_dim_; }
  [[nodiscard]] const std::vector<Vector>& basis() const { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Basis as a dim x ambient_dim matrix.
  [[nodiscard]] Matrix basis_matrix() const;

  /// Exact membership; throws DimensionError on length mismatch.
  [[nodiscard]] bool contains(const Vector& v) const;
  /// Coordinates of v in the stored basis; v must be a member.
  [[nodiscard]] Vector coordinates(const Vector& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend Subspace span(std::span<const Vector> vectors, std::size_t ambient_dim);
  Subspace(std::size_t ambient_dim, RrefResult reduced);

  std::size_t ambient_dim_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical span; throws DimensionError if any vector is not of length ambient_dim.
Subspace span(std::span<const Vector> vectors, std::size_t ambient_dim);
inline Subspace span(std::initializer_list<Vector> vectors, std::size_t ambient_dim) {
  return span(std::span<const Vector>(vectors.begin(), vectors.size()), ambient_dim);
}

bool contains(const Subspace& s, const Vector& v);
/// a is contained in b.
bool leq(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// Null space {x : m x = 0} as a subspace of Q^cols.
Subspace kernel(const Matrix& m);
/// The functionals vanishing on s, written as vectors of the same ambient space.
Subspace annihilator(const Subspace& s);
/// Span of the images of the basis of s under every operator.
Subspace image_under(const Subspace& s, std::span<const Matrix> operators);

/// { x in s : A x in t for every operator A }.
Subspace relative_invariant(const Subspace& s, std::span<const Matrix> operators,
                            const Subspace& t);

/// Smallest subspace containing s that every operator maps into itself.
Subspace invariant_hull(const Subspace& s, std::span<const Matrix> operators);

}  // namespace kleinjet

#endif  // KLEINJET_EXACTLIN_HPP
