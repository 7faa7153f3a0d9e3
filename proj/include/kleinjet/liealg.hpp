#ifndef KLEINJET_LIEALG_HPP
#define KLEINJET_LIEALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kleinjet/exactlin.hpp"

namespace kleinjet {

/// One nonzero bracket [b_i, b_j] = sum_k coeffs[k] b_k with i < j.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::map<std::size_t, Rational> coeffs;
};

/// Finite-dimensional Lie algebra over Q given by dense structure constants
/// c[i][j][k], meaning [b_i, b_j] = sum_k c[i][j][k] b_k.
///
/// Construction does not enforce the Jacobi identity; validate_lie() reports
/// on it, and operations that need a Lie algebra call require_valid_lie().
class LieAlgebra {
 public:
  /// Dense constants, taken as given (antisymmetry is checked, not imposed).
  LieAlgebra(std::vector<std::string> basis_names, std::vector<Rational> constants);

  /// Sparse upper-triangular brackets (i < j); the antisymmetric completion
  /// is synthesized. Throws DimensionError on out-of-range or i >= j entries.
  static LieAlgebra from_brackets(std::vector<std::string> basis_names,
                                  const std::vector<BracketEntry>& brackets);
  static LieAlgebra abelian(std::size_t dim);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<std::string>& basis_names() const { return names_; }
  [[nodiscard]] const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }
  /// [b_i, b_j] as a coordinate vector.
  [[nodiscard]] Vector bracket_basis(std::size_t i, std::size_t j) const;
  /// The upper-triangular nonzero brackets, in (i, j) order.
  [[nodiscard]] std::vector<BracketEntry> brackets() const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::size_t dim_;
  std::vector<std::string> names_;
  std::vector<Rational> constants_;
};

/// A Lie algebra together with one d x d matrix per basis element.
class Representation {
 public:
  Representation(LieAlgebra algebra, std::vector<Matrix> matrices);

  [[nodiscard]] const LieAlgebra& algebra() const { return algebra_; }
  [[nodiscard]] std::size_t space_dim() const { return space_dim_; }
  [[nodiscard]] const std::vector<Matrix>& matrices() const { return matrices_; }
  [[nodiscard]] const Matrix& matrix(std::size_t i) const { return matrices_[i]; }
  /// rho(x) = sum_i x_i rho(b_i).
  [[nodiscard]] Matrix act(const Vector& x) const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  LieAlgebra algebra_;
  std::size_t space_dim_;
  std::vector<Matrix> matrices_;
};

struct Violation {
  std::string identity;              // "antisymmetry", "jacobi" or "homomorphism"
  std::vector<std::size_t> indices;  // basis indices involved
  Vector discrepancy;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  enum class Subject { algebra, representation };
  Subject subject = Subject::algebra;
  bool passed = true;
  std::vector<Violation> violations;  // lexicographic in indices
};

ValidationReport validate_lie(const LieAlgebra& algebra);
ValidationReport validate_rep(const Representation& rep);
/// Throw PreconditionError carrying the first violation when validation fails.
void require_valid_lie(const LieAlgebra& algebra);
void require_valid_rep(const Representation& rep);

Vector bracket(const LieAlgebra& algebra, const Vector& x, const Vector& y);
/// Span of all [x, y] with x, y running over the bases of a and b.
Subspace bracket_span(const LieAlgebra& algebra, const Subspace& a, const Subspace& b);

/// Operators ad(b_i) : x -> [b_i, x], one per basis element.
std::vector<Matrix> ad_operators(const LieAlgebra& algebra);
Representation adjoint(const LieAlgebra& algebra);

Subspace subalgebra_closure(const LieAlgebra& algebra, std::span<const Vector> vectors);
bool is_subalgebra(const LieAlgebra& algebra, const Subspace& s);
bool is_ideal(const LieAlgebra& algebra, const Subspace& s);
bool is_abelian(const LieAlgebra& algebra, const Subspace& s);
/// S, [S,S], [[S,S],[S,S]], ... down to its stable term (inclusive).
std::vector<Subspace> derived_series(const LieAlgebra& algebra, const Subspace& s);
bool is_solvable(const LieAlgebra& algebra, const Subspace& s);

/// The largest ideal of the algebra contained in s. Computed on the dual side:
/// the annihilator of the smallest ad-transpose-stable space of functionals
/// containing the annihilator of s.
Subspace largest_ideal_in(const LieAlgebra& algebra, const Subspace& s);

/// { x in g : rho(x) v0 is contained in v0 }.
Subspace stabilizer_in_g(const Representation& rep, const Subspace& v0);

/// Smallest rho(g)-invariant subspace containing v. Throws on v = 0.
Subspace invariant_closure(const Representation& rep, const Vector& v);

struct IrreducibilityVerdict {
  bool reducible = false;
  std::optional<Subspace> witness;  // proper nonzero invariant subspace
};

/// Tries each standard basis vector, then the extra candidates; reports the
/// first proper invariant closure found. Never certifies irreducibility.
IrreducibilityVerdict irreducibility_scan(const Representation& rep,
                                          std::span<const Vector> extra_candidates = {});

}  // namespace kleinjet

#endif  // KLEINJET_LIEALG_HPP
