#include "kleinjet/jetfilt.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <thread>
#include <utility>

#include "kleinjet/errors.hpp"

namespace kleinjet {

// ---------------------------------------------------------------------------
// Filtration

Filtration::Filtration(Direction direction, std::size_t ambient_dim, std::vector<Subspace> subspaces,
                       std::optional<std::string> rep_id)
    : direction_(direction),
      ambient_dim_(ambient_dim),
      subspaces_(std::move(subspaces)),
      rep_id_(std::move(rep_id)) {
  for (std::size_t i = 0; i < subspaces_.size(); ++i) {
    const Subspace& s = subspaces_[i];
    if (s.ambient_dim() != ambient_dim_) throw DimensionError("filtration term in wrong ambient space");
    if (s.is_zero() || s.is_full()) {
      throw PreconditionError("filtration term " + std::to_string(i) + " is not proper and nonzero");
    }
    if (i == 0) continue;
    const Subspace& prev = subspaces_[i - 1];
    const bool nested = direction_ == Direction::ascending
                            ? (prev.dim() < s.dim() && leq(prev, s))
                            : (s.dim() < prev.dim() && leq(s, prev));
    if (!nested) {
      throw PreconditionError("filtration terms " + std::to_string(i - 1) + " and " +
                              std::to_string(i) + " are not strictly nested");
    }
  }
}

std::vector<std::size_t> Filtration::dims() const {
  std::vector<std::size_t> out;
  for (const Subspace& s : subspaces_) out.push_back(s.dim());
  return out;
}

Filtration to_descending(const Filtration& f) {
  if (f.direction() != Direction::ascending) throw PreconditionError("expected an ascending filtration");
  std::vector<Subspace> terms(f.subspaces().rbegin(), f.subspaces().rend());
  return Filtration(Direction::descending, f.ambient_dim(), std::move(terms), f.rep_id());
}

Filtration to_ascending(const Filtration& f) {
  if (f.direction() != Direction::descending) throw PreconditionError("expected a descending filtration");
  std::vector<Subspace> terms(f.subspaces().rbegin(), f.subspaces().rend());
  return Filtration(Direction::ascending, f.ambient_dim(), std::move(terms), f.rep_id());
}

// ---------------------------------------------------------------------------
// Greedy construction

Subspace image_span(const Representation& rep, const Subspace& s) {
  if (s.ambient_dim() != rep.space_dim()) throw DimensionError("subspace is not in the representation space");
  return image_under(s, rep.matrices());
}

GreedyChain greedy_chain(const Representation& rep, const Vector& v) {
  const std::size_t d = rep.space_dim();
  if (v.size() != d) throw DimensionError("start vector is not in the representation space");
  if (v.is_zero()) throw PreconditionError("greedy chain needs a nonzero start vector");

  std::vector<Subspace> terms;
  Subspace current = span({v}, d);
  // rho(g)V_{i-1} already lies in V_i, so only images of a complement of V_{i-1}
  // in V_i can be new. The reduced rows of V_i at pivots that V_{i-1} lacks form
  // such a complement.
  std::vector<Vector> frontier{v};
  bool stalled = false;
  while (!current.is_full()) {
    terms.push_back(current);
    std::vector<Vector> gens = current.basis();
    for (const Matrix& m : rep.matrices()) {
      for (const Vector& w : frontier) gens.push_back(m * w);
    }
    Subspace next = span(gens, d);
    if (next.dim() == current.dim()) {
      stalled = true;
      break;
    }
    frontier.clear();
    const auto& old_pivots = current.pivots();
    for (std::size_t r = 0; r < next.dim(); ++r) {
      if (!std::binary_search(old_pivots.begin(), old_pivots.end(), next.pivots()[r])) {
        frontier.push_back(next.basis()[r]);
      }
    }
    current = std::move(next);
  }
  GreedyChain out{Filtration(Direction::ascending, d, std::move(terms)), stalled, std::nullopt};
  if (stalled) out.stall_witness = out.filtration.subspaces().back();
  return out;
}

JetFiltrationCheck check_jet_filtration(const Representation& rep, const Filtration& f) {
  if (f.direction() != Direction::ascending) throw PreconditionError("jet-filtrations are ascending");
  if (f.ambient_dim() != rep.space_dim()) throw DimensionError("filtration is not in the representation space");
  JetFiltrationCheck check;
  const Subspace whole = Subspace::full(rep.space_dim());
  for (std::size_t i = 0; i < f.length(); ++i) {
    const Subspace image = image_span(rep, f[i]);
    const Subspace& next = i + 1 < f.length() ? f[i + 1] : whole;
    check.grows = check.grows && !leq(image, f[i]);
    check.image_contained = check.image_contained && leq(image, next);
    check.image_covers_term = check.image_covers_term && leq(f[i], image);
  }
  return check;
}

bool validate_jet_filtration(const Representation& rep, const Filtration& f) {
  return check_jet_filtration(rep, f).valid();
}

bool is_maximally_refined(const Representation& rep, const Filtration& f) {
  if (!validate_jet_filtration(rep, f)) throw PreconditionError("not a jet-filtration");
  const Subspace whole = Subspace::full(rep.space_dim());
  for (std::size_t i = 0; i < f.length(); ++i) {
    const Subspace& next = i + 1 < f.length() ? f[i + 1] : whole;
    if (sum(f[i], image_span(rep, f[i])) != next) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Search

std::vector<Vector> search_candidates(std::size_t space_dim, const SearchStrategy& strategy) {
  if (const auto* explicit_list = std::get_if<ExplicitStrategy>(&strategy)) {
    return explicit_list->vectors;
  }
  std::vector<Vector> out;
  for (std::size_t i = 0; i < space_dim; ++i) out.push_back(Vector::unit(space_dim, i));
  if (const auto* random = std::get_if<RandomStrategy>(&strategy)) {
    // mt19937_64 output is fixed by the standard; reduce it by hand rather
    // than through a distribution, whose mapping is implementation-defined.
    std::mt19937_64 gen(random->seed);
    while (out.size() < space_dim + random->count) {
      Vector v(space_dim);
      for (std::size_t i = 0; i < space_dim; ++i) v[i] = static_cast<long>(gen() % 5) - 2;
      if (!v.is_zero()) out.push_back(std::move(v));
    }
  }
  return out;
}

JetSearchResult jet_order_search(const Representation& rep, const SearchStrategy& strategy,
                                 bool parallel) {
  const std::size_t d = rep.space_dim();
  std::vector<Vector> candidates = search_candidates(d, strategy);
  if (candidates.empty()) throw PreconditionError("empty candidate set");
  for (const Vector& c : candidates) {
    if (c.size() != d) throw DimensionError("candidate is not in the representation space");
    if (c.is_zero()) throw PreconditionError("zero candidate vector");
  }

  std::vector<CandidateOutcome> outcomes(candidates.size());
  auto evaluate = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const GreedyChain chain = greedy_chain(rep, candidates[i]);
      outcomes[i] = {candidates[i], chain.stalled ? 0 : chain.filtration.length(), chain.stalled};
    }
  };
  const std::size_t workers =
      parallel ? std::min<std::size_t>(candidates.size(), std::max(1U, std::thread::hardware_concurrency()))
               : 1;
  if (workers <= 1) {
    evaluate(0, candidates.size());
  } else {
    std::vector<std::future<void>> jobs;
    const std::size_t chunk = (candidates.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < candidates.size(); begin += chunk) {
      jobs.push_back(std::async(std::launch::async, evaluate, begin,
                                std::min(candidates.size(), begin + chunk)));
    }
    for (auto& job : jobs) job.get();
  }

  JetSearchResult result;
  std::size_t best_index = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].length > outcomes[best_index].length) best_index = i;
  }
  result.best_length = outcomes[best_index].length;
  result.witness = outcomes[best_index].candidate;
  result.certified_maximal = result.best_length + 1 == d;
  result.per_candidate = std::move(outcomes);
  return result;
}

}  // namespace kleinjet
