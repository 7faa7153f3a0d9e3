#include "kleinjet/klein.hpp"

#include <stdexcept>
#include <utility>

#include "kleinjet/errors.hpp"

namespace kleinjet {

// ---------------------------------------------------------------------------
// Semidirect product

Vector SemidirectAlgebra::embed_g(const Vector& x) const {
  if (x.size() != base_dim()) throw DimensionError("vector is not in g");
  Vector out(total.dim());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i];
  return out;
}

Vector SemidirectAlgebra::embed_v(const Vector& v) const {
  if (v.size() != space_dim()) throw DimensionError("vector is not in V");
  Vector out(total.dim());
  for (std::size_t a = 0; a < v.size(); ++a) out[base_dim() + a] = v[a];
  return out;
}

Subspace SemidirectAlgebra::embed_g(const Subspace& s) const {
  std::vector<Vector> gens;
  for (const Vector& b : s.basis()) gens.push_back(embed_g(b));
  return span(gens, total.dim());
}

Subspace SemidirectAlgebra::embed_v(const Subspace& s) const {
  std::vector<Vector> gens;
  for (const Vector& b : s.basis()) gens.push_back(embed_v(b));
  return span(gens, total.dim());
}

SemidirectAlgebra semidirect(const Representation& rep) {
  require_valid_rep(rep);
  const LieAlgebra& g = rep.algebra();
  const std::size_t n = g.dim();
  const std::size_t d = rep.space_dim();
  const std::size_t total_dim = n + d;

  std::vector<std::string> names = g.basis_names();
  for (std::size_t a = 0; a < d; ++a) names.push_back("v" + std::to_string(a + 1));

  std::vector<Rational> c(total_dim * total_dim * total_dim);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& {
    return c[(i * total_dim + j) * total_dim + k];
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) at(i, j, k) = g.c(i, j, k);
    }
    // [b_i, v_a] = rho(b_i) v_a; the V-V block stays zero.
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        const Rational& entry = rep.matrix(i)(b, a);
        if (entry.is_zero()) continue;
        at(i, n + a, n + b) = entry;
        at(n + a, i, n + b) = -entry;
      }
    }
  }
  return {g, rep, LieAlgebra(std::move(names), std::move(c))};
}

// ---------------------------------------------------------------------------
// Klein pairs

KleinPair::KleinPair(LieAlgebra h, Subspace h0, std::optional<KleinProvenance> provenance)
    : h_(std::move(h)), h0_(std::move(h0)), provenance_(std::move(provenance)) {
  if (h0_.ambient_dim() != h_.dim()) throw DimensionError("h0 is not a subspace of h");
  if (h0_.is_full()) throw PreconditionError("h0 must be a proper subspace of h");
  if (!is_subalgebra(h_, h0_)) throw PreconditionError("h0 is not a subalgebra of h");
}

KleinPair build_klein_pair(const Representation& rep, const Filtration& f,
                           const StabilizerChoice& choice) {
  if (!validate_jet_filtration(rep, f)) throw PreconditionError("filtration is not a jet-filtration");
  if (f.empty()) throw PreconditionError("filtration has no proper terms");
  const SemidirectAlgebra sd = semidirect(rep);
  // Top term of the descending relabel is the largest ascending term.
  const Subspace v0 = to_descending(f)[0];
  Subspace h0 = sd.embed_v(v0);
  std::optional<Subspace> stabilizer;
  if (const auto* opt = std::get_if<StabilizerOption>(&choice)) {
    const Subspace& r = opt->subalgebra;
    if (r.ambient_dim() != rep.algebra().dim()) throw DimensionError("stabilizer is not a subspace of g");
    if (!is_subalgebra(rep.algebra(), r)) throw PreconditionError("stabilizer choice is not a subalgebra of g");
    for (const Vector& x : r.basis()) {
      if (!leq(image_under(v0, std::vector<Matrix>{rep.act(x)}), v0)) {
        throw PreconditionError("stabilizer choice does not preserve V0");
      }
    }
    h0 = sum(sd.embed_g(r), h0);
    stabilizer = r;
  }
  return KleinPair(sd.total, std::move(h0), KleinProvenance{f, std::move(stabilizer)});
}

// ---------------------------------------------------------------------------
// Weissfeiler filtration

const Subspace& WeissfeilerResult::term(std::size_t t) const {
  return t < chain.length() ? chain[t] : stabilized_at;
}

WeissfeilerResult weissfeiler(const LieAlgebra& h, const Subspace& h0) {
  if (h0.ambient_dim() != h.dim()) throw DimensionError("h0 is not a subspace of h");
  if (!is_subalgebra(h, h0)) throw PreconditionError("h0 is not a subalgebra of h");
  if (h0.is_full()) throw PreconditionError("h0 must be a proper subspace of h");

  const std::vector<Matrix> ad = ad_operators(h);
  std::vector<Subspace> terms;
  Subspace current = h0;
  while (!current.is_zero()) {
    terms.push_back(current);
    Subspace next = relative_invariant(current, ad, current);
    if (next == current) break;
    if (next.dim() >= current.dim()) throw std::logic_error("Weissfeiler chain failed to decrease");
    current = std::move(next);
  }

  WeissfeilerResult out{Filtration(Direction::descending, h.dim(), std::move(terms)), -1, 0,
                        Subspace(h.dim()), true};
  out.m = static_cast<int>(out.chain.length()) - 1;
  out.ord = out.m + 1;
  out.stabilized_at = current;
  out.effective = current.is_zero();
  return out;
}

HalfTailReport half_tail_report(const LieAlgebra& h, const WeissfeilerResult& w) {
  HalfTailReport report;
  if (w.m < 0) return report;
  const auto m = static_cast<std::size_t>(w.m);
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = i; j <= m; ++j) {
      if (!leq(bracket_span(h, w.term(i), w.term(j)), w.term(i + j))) report.graded = false;
    }
  }
  const Subspace& h0 = w.term(0);
  for (std::size_t i = 0; i <= m + 1; ++i) {
    if (2 * i < m + 1) continue;
    const Subspace& hi = w.term(i);
    if (!is_abelian(h, hi)) report.abelian_tail = false;
    if (!leq(bracket_span(h, h0, hi), hi)) report.tail_ideals = false;
  }
  return report;
}

bool is_effective(const LieAlgebra& h, const Subspace& h0) {
  if (h0.ambient_dim() != h.dim()) throw DimensionError("h0 is not a subspace of h");
  if (!is_subalgebra(h, h0)) throw PreconditionError("h0 is not a subalgebra of h");
  return largest_ideal_in(h, h0).is_zero();
}

// ---------------------------------------------------------------------------
// Stiffening

StiffeningResult is_stiffening(const LieAlgebra& g_prime, const Subspace& h_prime,
                               const Subspace& g, const Subspace& h) {
  for (const Subspace* s : {&h_prime, &g, &h}) {
    if (s->ambient_dim() != g_prime.dim()) throw DimensionError("subspace is not in g'");
    if (!is_subalgebra(g_prime, *s)) throw PreconditionError("stiffening inputs must be subalgebras");
  }
  StiffeningResult r;
  r.sum_is_everything = sum(g, h_prime).is_full();
  r.intersection_matches = intersect(g, h_prime) == h;
  r.stiffening = r.sum_is_everything && r.intersection_matches;
  r.dimension_identity = g.dim() + h_prime.dim() == g_prime.dim() + h.dim();
  return r;
}

}  // namespace kleinjet
