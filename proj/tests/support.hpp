// Shared helpers for the unit tests and the acceptance binary: seeded
// generators, a few small Lie algebras, and brute-force oracles that do not
// reuse the library's subspace algorithms.
#ifndef KLEINJET_TESTS_SUPPORT_HPP
#define KLEINJET_TESTS_SUPPORT_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kleinjet/catalog.hpp"
#include "kleinjet/exactlin.hpp"
#include "kleinjet/liealg.hpp"

namespace kleinjet::testing {

/// Seeded source of small integers; avoids std distributions so sequences are
/// identical across standard libraries.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long range(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }

  bool chance(int percent) { return range(0, 99) < percent; }

  Vector vector(std::size_t dim, long bound = 3) {
    Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = range(-bound, bound);
    return v;
  }

  Vector nonzero_vector(std::size_t dim, long bound = 3) {
    for (;;) {
      Vector v = vector(dim, bound);
      if (!v.is_zero()) return v;
    }
  }

  Matrix matrix(std::size_t rows, std::size_t cols, long bound = 3, int zero_percent = 0) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        m(r, c) = chance(zero_percent) ? 0 : range(-bound, bound);
      }
    }
    return m;
  }

  std::vector<Vector> vectors(std::size_t count, std::size_t dim, long bound = 3) {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(vector(dim, bound));
    return out;
  }

  Subspace subspace(std::size_t dim, long bound = 3) {
    const auto count = static_cast<std::size_t>(range(0, static_cast<long>(dim)));
    return span(vectors(count, dim, bound), dim);
  }

  /// Invertible matrix as a product of random elementary operations.
  Matrix invertible(std::size_t n) {
    Matrix m = Matrix::identity(n);
    for (int step = 0; step < 12 && n > 1; ++step) {
      const auto a = static_cast<std::size_t>(range(0, static_cast<long>(n) - 1));
      auto b = static_cast<std::size_t>(range(0, static_cast<long>(n) - 2));
      if (b >= a) ++b;
      const Rational s = range(-2, 2);
      for (std::size_t c = 0; c < n; ++c) m(a, c) += s * m(b, c);
    }
    return m;
  }

 private:
  std::mt19937_64 engine_;
};

inline Vector vec(std::initializer_list<long> entries) {
  Vector v(entries.size());
  std::size_t i = 0;
  for (long x : entries) v[i++] = x;
  return v;
}

/// Plain Gaussian elimination rank, written separately from the library's rref.
inline std::size_t naive_rank(std::vector<Vector> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Membership by rank comparison: v lies in span(gens) iff appending it keeps the rank.
inline bool naive_in_span(const std::vector<Vector>& gens, const Vector& v) {
  std::vector<Vector> with = gens;
  with.push_back(v);
  return naive_rank(gens) == naive_rank(with);
}

/// Every vector of the grid {-bound..bound}^dim, the zero vector excluded.
inline std::vector<Vector> grid_vectors(std::size_t dim, long bound) {
  std::vector<Vector> out;
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = -bound;
  for (;;) {
    if (!v.is_zero()) out.push_back(v);
    std::size_t i = 0;
    while (i < dim && v[i] == Rational(bound)) v[i++] = -bound;
    if (i == dim) break;
    v[i] += 1;
  }
  return out;
}

/// All subspaces whose reduced row echelon basis has free entries in {-1, 0, 1}.
/// Built directly from pivot patterns, so no elimination is involved.
inline std::vector<std::vector<Vector>> echelon_grid(std::size_t dim) {
  std::vector<std::vector<Vector>> out;
  for (std::uint32_t mask = 0; mask < (1u << dim); ++mask) {
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < dim; ++i) {
      if (mask & (1u << i)) pivots.push_back(i);
    }
    // Free slots: positions after a row's pivot that are not pivot columns.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      for (std::size_t c = pivots[r] + 1; c < dim; ++c) {
        if (!(mask & (1u << c))) slots.emplace_back(r, c);
      }
    }
    std::size_t combos = 1;
    for (std::size_t s = 0; s < slots.size(); ++s) combos *= 3;
    for (std::size_t code = 0; code < combos; ++code) {
      std::vector<Vector> basis(pivots.size(), Vector(dim));
      for (std::size_t r = 0; r < pivots.size(); ++r) basis[r][pivots[r]] = 1;
      std::size_t rest = code;
      for (const auto& [r, c] : slots) {
        basis[r][c] = static_cast<long>(rest % 3) - 1;
        rest /= 3;
      }
      out.push_back(std::move(basis));
    }
  }
  return out;
}

inline bool naive_subset(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  for (const Vector& v : a) {
    if (!naive_in_span(b, v)) return false;
  }
  return true;
}

inline Vector apply(const Matrix& m, const Vector& v) {
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  }
  return out;
}

/// Bracket from structure constants, written out without the library helper.
inline Vector naive_bracket(const LieAlgebra& L, const Vector& x, const Vector& y) {
  Vector out(L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < L.dim(); ++j) {
      if (y[j].is_zero()) continue;
      for (std::size_t k = 0; k < L.dim(); ++k) out[k] += x[i] * y[j] * L.c(i, j, k);
    }
  }
  return out;
}

inline bool naive_is_ideal(const LieAlgebra& L, const std::vector<Vector>& basis) {
  for (std::size_t i = 0; i < L.dim(); ++i) {
    const Vector b = Vector::unit(L.dim(), i);
    for (const Vector& w : basis) {
      if (!naive_in_span(basis, naive_bracket(L, b, w))) return false;
    }
  }
  return true;
}

/// Small Lie algebras of dimension at most 4 with integer constants.
inline std::vector<std::pair<std::string, LieAlgebra>> small_algebras() {
  std::vector<std::pair<std::string, LieAlgebra>> out;
  out.emplace_back("abelian3", LieAlgebra::abelian(3));
  out.emplace_back("sl2", sl2());
  out.emplace_back("aff1", LieAlgebra::from_brackets({"x", "y"}, {{0, 1, {{1, 1}}}}));
  out.emplace_back("heisenberg", LieAlgebra::from_brackets({"p", "q", "z"}, {{0, 1, {{2, 1}}}}));
  out.emplace_back("gl2", LieAlgebra::from_brackets(
                              {"e", "f", "h", "z"},
                              {{0, 1, {{2, 1}}}, {0, 2, {{0, -2}}}, {1, 2, {{1, 2}}}}));
  out.emplace_back("filiform4", LieAlgebra::from_brackets(
                                    {"x1", "x2", "x3", "x4"},
                                    {{0, 1, {{2, 1}}}, {0, 2, {{3, 1}}}}));
  out.emplace_back("aff1+aff1", LieAlgebra::from_brackets(
                                    {"x", "y", "u", "w"}, {{0, 1, {{1, 1}}}, {2, 3, {{3, 1}}}}));
  return out;
}

}  // namespace kleinjet::testing

#endif  // KLEINJET_TESTS_SUPPORT_HPP
