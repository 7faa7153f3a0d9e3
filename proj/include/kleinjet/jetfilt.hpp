#ifndef KLEINJET_JETFILT_HPP
#define KLEINJET_JETFILT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kleinjet/exactlin.hpp"
#include "kleinjet/liealg.hpp"

namespace kleinjet {

enum class Direction { ascending, descending };

/// A strictly nested chain of proper nonzero subspaces of Q^ambient_dim.
/// Ascending chains sit between {0} and V; descending ones between V and {0}.
class Filtration {
 public:
  /// Throws PreconditionError if nesting is not strict in the given direction
  /// or some term is zero or the whole space.
  Filtration(Direction direction, std::size_t ambient_dim, std::vector<Subspace> subspaces,
             std::optional<std::string> rep_id = std::nullopt);

  [[nodiscard]] Direction direction() const { return direction_; }
  [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
  [[nodiscard]] const std::vector<Subspace>& subspaces() const { return subspaces_; }
  [[nodiscard]] std::size_t length() const { return subspaces_.size(); }
  [[nodiscard]] bool empty() const { return subspaces_.empty(); }
  [[nodiscard]] const Subspace& operator[](std::size_t i) const { return subspaces_[i]; }
  [[nodiscard]] const std::optional<std::string>& rep_id() const { return rep_id_; }
  [[nodiscard]] std::vector<std::size_t> dims() const;

  friend bool operator==(const Filtration&, const Filtration&) = default;

 private:
  Direction direction_;
  std::size_t ambient_dim_;
  std::vector<Subspace> subspaces_;
  std::optional<std::string> rep_id_;
};

/// Span of rho(b_i) w over algebra basis elements b_i and basis vectors w of s.
Subspace image_span(const Representation& rep, const Subspace& s);

struct GreedyChain {
  Filtration filtration;
  /// The chain reached a rho(g)-invariant proper subspace before V.
  bool stalled = false;
  std::optional<Subspace> stall_witness;
};

/// V1 = span{v}, V_{i+1} = V_i + image_span(V_i), until V is reached (V is not
/// stored) or the chain stalls. Throws PreconditionError on v = 0.
GreedyChain greedy_chain(const Representation& rep, const Vector& v);

/// Clause-by-clause verdict for an ascending chain, with V_{k+1} = V.
struct JetFiltrationCheck {
  bool grows = true;            // image_span(V_i) is not inside V_i
  bool image_contained = true;  // image_span(V_i) inside V_{i+1}
  /// V_i inside image_span(V_i) itself. Informational: not part of validity.
  bool image_covers_term = true;
  [[nodiscard]] bool valid() const { return grows && image_contained; }
};

JetFiltrationCheck check_jet_filtration(const Representation& rep, const Filtration& f);
bool validate_jet_filtration(const Representation& rep, const Filtration& f);
/// Every V_{i+1} equals V_i + image_span(V_i). Throws on an invalid filtration.
bool is_maximally_refined(const Representation& rep, const Filtration& f);

struct BasisStrategy {};
struct RandomStrategy {
  std::uint64_t seed = 0;
  std::size_t count = 0;
};
struct ExplicitStrategy {
  std::vector<Vector> vectors;
};
using SearchStrategy = std::variant<BasisStrategy, RandomStrategy, ExplicitStrategy>;

/// Candidate start vectors in search order. RandomStrategy yields the basis
/// vectors followed by `count` nonzero vectors with entries in {-2,...,2}.
std::vector<Vector> search_candidates(std::size_t space_dim, const SearchStrategy& strategy);

struct CandidateOutcome {
  Vector candidate;
  std::size_t length = 0;  // 0 when the chain stalls
  bool stalled = false;
};

struct JetSearchResult {
  std::size_t best_length = 0;
  Vector witness;
  bool certified_maximal = false;  // best_length == space_dim - 1
  std::vector<CandidateOutcome> per_candidate;
};

/// Greedy chains from every candidate; the witness is the first candidate
/// attaining the best length. Candidates are evaluated concurrently when
/// `parallel` is set; the result does not depend on scheduling.
JetSearchResult jet_order_search(const Representation& rep, const SearchStrategy& strategy,
                                 bool parallel = true);

Filtration to_descending(const Filtration& f);
Filtration to_ascending(const Filtration& f);

}  // namespace kleinjet

#endif  // KLEINJET_JETFILT_HPP
