#ifndef KLEINJET_KLEIN_HPP
#define KLEINJET_KLEIN_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kleinjet/exactlin.hpp"
#include "kleinjet/jetfilt.hpp"
#include "kleinjet/liealg.hpp"

namespace kleinjet {

/// g x_rho V with basis ordered as the g-basis followed by the V-basis.
struct SemidirectAlgebra {
  LieAlgebra base;
  Representation rep;
  LieAlgebra total;

  [[nodiscard]] std::size_t base_dim() const { return base.dim(); }
  [[nodiscard]] std::size_t space_dim() const { return rep.space_dim(); }
  [[nodiscard]] Vector embed_g(const Vector& x) const;
  [[nodiscard]] Vector embed_v(const Vector& v) const;
  [[nodiscard]] Subspace embed_g(const Subspace& s) const;
  [[nodiscard]] Subspace embed_v(const Subspace& s) const;
};

/// Throws PreconditionError if the representation is not a homomorphism.
SemidirectAlgebra semidirect(const Representation& rep);

struct AbelianOption {};
/// h0 = r x_rho V0 for a subalgebra r of g that preserves V0.
struct StabilizerOption {
  Subspace subalgebra;
};
using StabilizerChoice = std::variant<AbelianOption, StabilizerOption>;

struct KleinProvenance {
  Filtration filtration;  // the ascending jet-filtration used
  std::optional<Subspace> stabilizer;
};

/// (h, h0) with h0 a proper subalgebra of h.
class KleinPair {
 public:
  KleinPair(LieAlgebra h, Subspace h0, std::optional<KleinProvenance> provenance = std::nullopt);

  [[nodiscard]] const LieAlgebra& h() const { return h_; }
  [[nodiscard]] const Subspace& h0() const { return h0_; }
  [[nodiscard]] const std::optional<KleinProvenance>& provenance() const { return provenance_; }

 private:
  LieAlgebra h_;
  Subspace h0_;
  std::optional<KleinProvenance> provenance_;
};

/// h = g x_rho V and h0 = the largest term of the filtration (abelian option)
/// or r (+) that term (stabilizer option).
KleinPair build_klein_pair(const Representation& rep, const Filtration& f,
                           const StabilizerChoice& choice);

struct WeissfeilerResult {
  /// Nonzero terms h0 > h1 > ... ; if the iteration stabilizes at a nonzero
  /// subspace, that subspace is the last term.
  Filtration chain;
  int m = -1;  // index of the last stored term
  int ord = 0;
  Subspace stabilized_at;
  bool effective = true;

  /// h_t, extended past the stored chain by the fixpoint.
  [[nodiscard]] const Subspace& term(std::size_t t) const;
};

/// h_{i+1} = { x in h_i : [x, h] in h_i }, iterated to its fixpoint.
WeissfeilerResult weissfeiler(const LieAlgebra& h, const Subspace& h0);

struct HalfTailReport {
  bool graded = true;        // [h_i, h_j] in h_{i+j} for 0 <= i, j <= m
  bool abelian_tail = true;  // h_i abelian whenever 2i >= m + 1
  bool tail_ideals = true;   // those h_i are ideals of h0
  [[nodiscard]] bool passed() const { return graded && abelian_tail && tail_ideals; }
};

HalfTailReport half_tail_report(const LieAlgebra& h, const WeissfeilerResult& w);

/// largest_ideal_in(h, h0) == {0}.
bool is_effective(const LieAlgebra& h, const Subspace& h0);

struct StiffeningResult {
  bool stiffening = false;
  bool sum_is_everything = false;  // g + h' = g'
  bool intersection_matches = false;  // g cap h' = h
  /// dim g - dim h == dim g' - dim h'; meaningful when stiffening holds.
  bool dimension_identity = false;
};

/// Algebraic stiffening of (g', h') by (g, h): g + h' = g' and g cap h' = h.
StiffeningResult is_stiffening(const LieAlgebra& g_prime, const Subspace& h_prime,
                               const Subspace& g, const Subspace& h);

}  // namespace kleinjet

#endif  // KLEINJET_KLEIN_HPP
