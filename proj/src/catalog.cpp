#include "kleinjet/catalog.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <thread>
#include <map>
#include <utility>

#include "kleinjet/errors.hpp"
#include "kleinjet/jetfilt.hpp"
#include "kleinjet/klein.hpp"

namespace kleinjet {

const char* const kOrderDiscrepancyNote =
    "ord_abelian is computed directly from h_{i+1} = {x in h_i : [x,h] in h_i} and equals k for "
    "the degree-k family (anchors: ord 1 at k=1, ord 2 at k=2). The stated value k+1 (column "
    "ord_stated) counts the k+1 descending terms V_0..V_k, while the ascending chain has only k "
    "proper terms; the off-by-one is reported, not corrected.";

namespace {

// Coordinates of `target` in terms of linearly independent `vectors`.
Vector solve_in_basis(const std::vector<Vector>& vectors, const Vector& target) {
  const std::size_t n = target.size();
  std::vector<Vector> cols = vectors;
  cols.push_back(-1 * target);
  const Subspace sol = kernel(Matrix::from_rows(cols, n).transpose());
  for (const Vector& s : sol.basis()) {
    if (!s[vectors.size()].is_zero()) {
      Vector c(vectors.size());
      for (std::size_t i = 0; i < vectors.size(); ++i) c[i] = s[i] / s[vectors.size()];
      return c;
    }
  }
  throw std::logic_error("target is not in the span");
}

// Homogeneous polynomial in x, y: (x exponent, y exponent) -> coefficient.
using Polynomial = std::map<std::pair<int, int>, Rational>;

Polynomial x_d_dy(const Polynomial& p) {
  Polynomial out;
  for (const auto& [exps, c] : p) {
    const auto [a, b] = exps;
    if (b > 0) out[{a + 1, b - 1}] += c * Rational(b);
  }
  return out;
}

Polynomial y_d_dx(const Polynomial& p) {
  Polynomial out;
  for (const auto& [exps, c] : p) {
    const auto [a, b] = exps;
    if (a > 0) out[{a - 1, b + 1}] += c * Rational(a);
  }
  return out;
}

Polynomial euler_difference(const Polynomial& p) {
  Polynomial out;
  for (const auto& [exps, c] : p) out[exps] += c * Rational(exps.first - exps.second);
  return out;
}

// v_{a+1} = x^a y^(k-a).
Vector monomial_coordinates(const Polynomial& p, int k) {
  Vector v(static_cast<std::size_t>(k + 1));
  for (const auto& [exps, c] : p) {
    if (exps.first + exps.second != k) throw std::logic_error("polynomial is not homogeneous");
    v[static_cast<std::size_t>(exps.first)] += c;
  }
  return v;
}

}  // namespace

LieAlgebra sl2() {
  const std::array<Matrix, 3> gens = {
      Matrix::from_rows({{0, 1}, {0, 0}}),   // e
      Matrix::from_rows({{0, 0}, {1, 0}}),   // f
      Matrix::from_rows({{1, 0}, {0, -1}}),  // h
  };
  std::vector<Vector> flat;
  for (const Matrix& m : gens) flat.push_back(m.flatten());
  std::vector<BracketEntry> brackets;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      const Vector c = solve_in_basis(flat, commutator(gens[i], gens[j]).flatten());
      BracketEntry entry{i, j, {}};
      for (std::size_t k = 0; k < 3; ++k) {
        if (!c[k].is_zero()) entry.coeffs.emplace(k, c[k]);
      }
      brackets.push_back(std::move(entry));
    }
  }
  return LieAlgebra::from_brackets({"e", "f", "h"}, brackets);
}

Representation sympower(int k) {
  if (k < 1) throw std::invalid_argument("symmetric power degree must be at least 1");
  const auto d = static_cast<std::size_t>(k + 1);
  std::array<Matrix, 3> mats = {Matrix(d, d), Matrix(d, d), Matrix(d, d)};
  for (int a = 0; a <= k; ++a) {
    const Polynomial v{{{a, k - a}, Rational(1)}};
    const std::array<Polynomial, 3> images = {x_d_dy(v), y_d_dx(v), euler_difference(v)};
    for (std::size_t op = 0; op < 3; ++op) {
      const Vector col = monomial_coordinates(images[op], k);
      for (std::size_t r = 0; r < d; ++r) mats[op](r, static_cast<std::size_t>(a)) = col[r];
    }
  }
  return Representation(sl2(), {mats[0], mats[1], mats[2]});
}

NamedSubalgebra parse_named_subalgebra(std::string_view name) {
  if (name == "cartan") return NamedSubalgebra::cartan;
  if (name == "borel_upper") return NamedSubalgebra::borel_upper;
  if (name == "borel_lower") return NamedSubalgebra::borel_lower;
  throw std::invalid_argument("unknown subalgebra name '" + std::string(name) + "'");
}

std::string_view to_string(NamedSubalgebra which) {
  switch (which) {
    case NamedSubalgebra::cartan: return "cartan";
    case NamedSubalgebra::borel_upper: return "borel_upper";
    case NamedSubalgebra::borel_lower: return "borel_lower";
  }
  return "";
}

Subspace named_subalgebra(NamedSubalgebra which) {
  const Vector e = Vector::unit(3, 0);
  const Vector f = Vector::unit(3, 1);
  const Vector h = Vector::unit(3, 2);
  switch (which) {
    case NamedSubalgebra::cartan: return span({h}, 3);
    case NamedSubalgebra::borel_upper: return span({e, h}, 3);
    case NamedSubalgebra::borel_lower: return span({f, h}, 3);
  }
  throw std::invalid_argument("unknown subalgebra");
}

FamilyRow family_row(int k) {
  const Representation rep = sympower(k);
  FamilyRow row;
  row.k = k;
  row.ord_stated = k + 1;

  const JetSearchResult search = jet_order_search(rep, BasisStrategy{}, false);
  row.jet_length = search.best_length;
  row.certified = search.certified_maximal;
  row.witness_is_v1 = search.witness == Vector::unit(rep.space_dim(), 0);

  const GreedyChain chain = greedy_chain(rep, search.witness);
  const KleinPair abelian = build_klein_pair(rep, chain.filtration, AbelianOption{});
  const KleinPair stab = build_klein_pair(
      rep, chain.filtration, StabilizerOption{named_subalgebra(NamedSubalgebra::borel_lower)});

  const WeissfeilerResult wa = weissfeiler(abelian.h(), abelian.h0());
  const WeissfeilerResult ws = weissfeiler(stab.h(), stab.h0());
  row.ord_abelian = wa.ord;
  row.ord_stabilizer = ws.ord;
  row.weissfeiler_dims_abelian = wa.chain.dims();
  row.weissfeiler_dims_stabilizer = ws.chain.dims();
  row.effective = wa.effective && ws.effective && is_effective(abelian.h(), abelian.h0()) &&
                  is_effective(stab.h(), stab.h0());
  row.half_tail = half_tail_report(abelian.h(), wa).passed() && half_tail_report(stab.h(), ws).passed();
  return row;
}

FamilyReport verify_family(int k_max, bool parallel) {
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  FamilyReport report;
  report.discrepancy_note = kOrderDiscrepancyNote;
  if (parallel) {
    const int batch = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    for (int start = 1; start <= k_max; start += batch) {
      std::vector<std::future<FamilyRow>> jobs;
      for (int k = start; k <= std::min(k_max, start + batch - 1); ++k) {
        jobs.push_back(std::async(std::launch::async, family_row, k));
      }
      for (auto& job : jobs) report.rows.push_back(job.get());
    }
  } else {
    for (int k = 1; k <= k_max; ++k) report.rows.push_back(family_row(k));
  }

  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const FamilyRow& row = report.rows[i];
    std::string failure;
    if (row.jet_length != static_cast<std::size_t>(row.k)) failure = "jet length differs from k";
    else if (!row.certified) failure = "jet order not certified";
    else if (!row.effective) failure = "Klein pair not effective";
    else if (!row.half_tail) failure = "half-tail clause failed";
    else if (i > 0 && row.ord_abelian <= report.rows[i - 1].ord_abelian) failure = "ord not strictly increasing";
    if (!failure.empty()) {
      FamilyReport partial{{report.rows.begin(), report.rows.begin() + static_cast<long>(i) + 1},
                           report.discrepancy_note};
      throw FamilyCheckError("k=" + std::to_string(row.k) + ": " + failure, row, std::move(partial));
    }
  }
  return report;
}

}  // namespace kleinjet
