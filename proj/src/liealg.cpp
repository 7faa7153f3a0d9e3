#include "kleinjet/liealg.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "kleinjet/errors.hpp"

namespace kleinjet {

namespace {

std::string describe(const Violation& v) {
  std::string out = v.identity + " violated at (";
  for (std::size_t i = 0; i < v.indices.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v.indices[i]);
  }
  return out + ")";
}

void require_length(const LieAlgebra& algebra, const Vector& x) {
  if (x.size() != algebra.dim()) {
    throw DimensionError("vector of length " + std::to_string(x.size()) +
                         " in a Lie algebra of dimension " + std::to_string(algebra.dim()));
  }
}

void require_ambient(const LieAlgebra& algebra, const Subspace& s) {
  if (s.ambient_dim() != algebra.dim()) {
    throw DimensionError("subspace of Q^" + std::to_string(s.ambient_dim()) +
                         " in a Lie algebra of dimension " + std::to_string(algebra.dim()));
  }
}

// [u, b_k] for an arbitrary coordinate vector u.
Vector bracket_with_basis(const LieAlgebra& algebra, const Vector& u, std::size_t k) {
  const std::size_t n = algebra.dim();
  Vector out(n);
  for (std::size_t l = 0; l < n; ++l) {
    if (u[l].is_zero()) continue;
    for (std::size_t m = 0; m < n; ++m) {
      const Rational& c = algebra.c(l, k, m);
      if (!c.is_zero()) out[m] += u[l] * c;
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// LieAlgebra / Representation

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names, std::vector<Rational> constants)
    : dim_(basis_names.size()), names_(std::move(basis_names)), constants_(std::move(constants)) {
  if (dim_ == 0) throw DimensionError("Lie algebra must have positive dimension");
  if (constants_.size() != dim_ * dim_ * dim_) {
    throw DimensionError("expected " + std::to_string(dim_ * dim_ * dim_) +
                         " structure constants, got " + std::to_string(constants_.size()));
  }
}

LieAlgebra LieAlgebra::from_brackets(std::vector<std::string> basis_names,
                                     const std::vector<BracketEntry>& brackets) {
  const std::size_t n = basis_names.size();
  std::vector<Rational> dense(n * n * n);
  for (const BracketEntry& b : brackets) {
    if (b.i >= b.j || b.j >= n) {
      throw DimensionError("bracket entry (" + std::to_string(b.i) + "," + std::to_string(b.j) +
                           ") must satisfy i < j < " + std::to_string(n));
    }
    for (const auto& [k, value] : b.coeffs) {
      if (k >= n) throw DimensionError("bracket coefficient index " + std::to_string(k));
      dense[(b.i * n + b.j) * n + k] = value;
      dense[(b.j * n + b.i) * n + k] = -value;
    }
  }
  return LieAlgebra(std::move(basis_names), std::move(dense));
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("b" + std::to_string(i + 1));
  return LieAlgebra(std::move(names), std::vector<Rational>(dim * dim * dim));
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vector out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = c(i, j, k);
  return out;
}

std::vector<BracketEntry> LieAlgebra::brackets() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      BracketEntry e{i, j, {}};
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!c(i, j, k).is_zero()) e.coeffs.emplace(k, c(i, j, k));
      }
      if (!e.coeffs.empty()) out.push_back(std::move(e));
    }
  }
  return out;
}

Representation::Representation(LieAlgebra algebra, std::vector<Matrix> matrices)
    : algebra_(std::move(algebra)), space_dim_(0), matrices_(std::move(matrices)) {
  if (matrices_.size() != algebra_.dim()) {
    throw DimensionError("representation needs " + std::to_string(algebra_.dim()) +
                         " matrices, got " + std::to_string(matrices_.size()));
  }
  space_dim_ = matrices_.front().rows();
  if (space_dim_ == 0) throw DimensionError("representation space must be nonzero");
  for (std::size_t i = 0; i < matrices_.size(); ++i) {
    if (matrices_[i].rows() != space_dim_ || matrices_[i].cols() != space_dim_) {
      throw DimensionError("matrix " + std::to_string(i) + " is not " +
                           std::to_string(space_dim_) + "x" + std::to_string(space_dim_));
    }
  }
}

Matrix Representation::act(const Vector& x) const {
  require_length(algebra_, x);
  Matrix out(space_dim_, space_dim_);
  for (std::size_t i = 0; i < matrices_.size(); ++i) out.add_scaled(x[i], matrices_[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate_lie(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  ValidationReport report;
  report.subject = ValidationReport::Subject::algebra;

  bool antisymmetric = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Vector d = algebra.bracket_basis(i, j) + algebra.bracket_basis(j, i);
      if (i == j) d = algebra.bracket_basis(i, i);
      if (!d.is_zero()) {
        antisymmetric = false;
        report.violations.push_back({"antisymmetry", {i, j}, std::move(d)});
      }
    }
  }

  // With antisymmetry the Jacobiator is alternating, so sorted distinct
  // triples are exhaustive; otherwise every ordered triple is checked.
  auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
    Vector jac = bracket_with_basis(algebra, algebra.bracket_basis(i, j), k);
    jac += bracket_with_basis(algebra, algebra.bracket_basis(j, k), i);
    jac += bracket_with_basis(algebra, algebra.bracket_basis(k, i), j);
    if (!jac.is_zero()) report.violations.push_back({"jacobi", {i, j, k}, std::move(jac)});
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = antisymmetric ? i + 1 : 0; j < n; ++j) {
      for (std::size_t k = antisymmetric ? j + 1 : 0; k < n; ++k) check(i, j, k);
    }
  }
  report.passed = report.violations.empty();
  return report;
}

ValidationReport validate_rep(const Representation& rep) {
  const LieAlgebra& g = rep.algebra();
  const std::size_t n = g.dim();
  ValidationReport report;
  report.subject = ValidationReport::Subject::representation;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix lhs = rep.act(g.bracket_basis(i, j));
      lhs -= commutator(rep.matrix(i), rep.matrix(j));
      if (!lhs.is_zero()) report.violations.push_back({"homomorphism", {i, j}, lhs.flatten()});
    }
  }
  report.passed = report.violations.empty();
  return report;
}

void require_valid_lie(const LieAlgebra& algebra) {
  const ValidationReport r = validate_lie(algebra);
  if (!r.passed) throw PreconditionError("invalid Lie algebra: " + describe(r.violations.front()));
}

void require_valid_rep(const Representation& rep) {
  require_valid_lie(rep.algebra());
  const ValidationReport r = validate_rep(rep);
  if (!r.passed) throw PreconditionError("invalid representation: " + describe(r.violations.front()));
}

// ---------------------------------------------------------------------------
// Brackets and subalgebras

Vector bracket(const LieAlgebra& algebra, const Vector& x, const Vector& y) {
  require_length(algebra, x);
  require_length(algebra, y);
  const std::size_t n = algebra.dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero() || i == j) continue;
      const Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = algebra.c(i, j, k);
        if (!c.is_zero()) out[k] += w * c;
      }
    }
  }
  return out;
}

Subspace bracket_span(const LieAlgebra& algebra, const Subspace& a, const Subspace& b) {
  require_ambient(algebra, a);
  require_ambient(algebra, b);
  std::vector<Vector> products;
  for (const Vector& x : a.basis()) {
    for (const Vector& y : b.basis()) products.push_back(bracket(algebra, x, y));
  }
  return span(products, algebra.dim());
}

std::vector<Matrix> ad_operators(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  std::vector<Matrix> ops;
  ops.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) m(k, j) = algebra.c(i, j, k);
    }
    ops.push_back(std::move(m));
  }
  return ops;
}

Representation adjoint(const LieAlgebra& algebra) {
  require_valid_lie(algebra);
  return Representation(algebra, ad_operators(algebra));
}

Subspace subalgebra_closure(const LieAlgebra& algebra, std::span<const Vector> vectors) {
  Subspace current = span(vectors, algebra.dim());
  while (true) {
    Subspace next = sum(current, bracket_span(algebra, current, current));
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

bool is_subalgebra(const LieAlgebra& algebra, const Subspace& s) {
  return leq(bracket_span(algebra, s, s), s);
}

bool is_ideal(const LieAlgebra& algebra, const Subspace& s) {
  return leq(bracket_span(algebra, Subspace::full(algebra.dim()), s), s);
}

bool is_abelian(const LieAlgebra& algebra, const Subspace& s) {
  return bracket_span(algebra, s, s).is_zero();
}

std::vector<Subspace> derived_series(const LieAlgebra& algebra, const Subspace& s) {
  if (!is_subalgebra(algebra, s)) throw PreconditionError("derived series needs a subalgebra");
  std::vector<Subspace> series{s};
  while (!series.back().is_zero()) {
    Subspace next = bracket_span(algebra, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const LieAlgebra& algebra, const Subspace& s) {
  return derived_series(algebra, s).back().is_zero();
}

Subspace largest_ideal_in(const LieAlgebra& algebra, const Subspace& s) {
  require_ambient(algebra, s);
  std::vector<Matrix> transposed;
  for (const Matrix& ad : ad_operators(algebra)) transposed.push_back(ad.transpose());
  return annihilator(invariant_hull(annihilator(s), transposed));
}

Subspace stabilizer_in_g(const Representation& rep, const Subspace& v0) {
  if (v0.ambient_dim() != rep.space_dim()) {
    throw DimensionError("subspace is not in the representation space");
  }
  const std::size_t n = rep.algebra().dim();
  const Subspace functionals = annihilator(v0);
  std::vector<Vector> constraints;
  for (const Vector& w : v0.basis()) {
    std::vector<Vector> moved;
    for (std::size_t i = 0; i < n; ++i) moved.push_back(rep.matrix(i) * w);
    for (const Vector& phi : functionals.basis()) {
      Vector row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = dot(phi, moved[i]);
      if (!row.is_zero()) constraints.push_back(std::move(row));
    }
  }
  Subspace stab = kernel(Matrix::from_rows(constraints, n));
  if (!is_subalgebra(rep.algebra(), stab)) {
    throw std::logic_error("stabilizer is not closed under the bracket; is the representation valid?");
  }
  return stab;
}

Subspace invariant_closure(const Representation& rep, const Vector& v) {
  if (v.size() != rep.space_dim()) throw DimensionError("vector is not in the representation space");
  if (v.is_zero()) throw PreconditionError("invariant closure of the zero vector");
  return invariant_hull(span({v}, rep.space_dim()), rep.matrices());
}

IrreducibilityVerdict irreducibility_scan(const Representation& rep,
                                          std::span<const Vector> extra_candidates) {
  const std::size_t d = rep.space_dim();
  std::vector<Vector> candidates;
  for (std::size_t i = 0; i < d; ++i) candidates.push_back(Vector::unit(d, i));
  candidates.insert(candidates.end(), extra_candidates.begin(), extra_candidates.end());
  for (const Vector& v : candidates) {
    if (v.size() != d) throw DimensionError("candidate is not in the representation space");
    if (v.is_zero()) continue;
    Subspace closure = invariant_closure(rep, v);
    if (!closure.is_full()) return {true, std::move(closure)};
  }
  return {false, std::nullopt};
}

}  // namespace kleinjet
