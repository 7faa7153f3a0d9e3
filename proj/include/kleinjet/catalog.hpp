#ifndef KLEINJET_CATALOG_HPP
#define KLEINJET_CATALOG_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kleinjet/exactlin.hpp"
#include "kleinjet/liealg.hpp"

namespace kleinjet {

/// sl(2) with basis (e, f, h); the structure constants are read off the
/// commutators of the defining 2x2 matrices.
LieAlgebra sl2();

/// Action of sl(2) on homogeneous polynomials of degree k in x, y, basis
/// v_i = y^(k-i+1) x^(i-1), with e = x d/dy, f = y d/dx, h = x d/dx - y d/dy.
/// Matrices come from differentiating monomials. Throws on k < 1.
Representation sympower(int k);

enum class NamedSubalgebra { cartan, borel_upper, borel_lower };

/// Throws std::invalid_argument on an unknown name.
NamedSubalgebra parse_named_subalgebra(std::string_view name);
std::string_view to_string(NamedSubalgebra which);
/// cartan = span{h}, borel_upper = span{e,h}, borel_lower = span{f,h}.
Subspace named_subalgebra(NamedSubalgebra which);

struct FamilyRow {
  int k = 0;
  std::size_t jet_length = 0;
  bool certified = false;
  bool witness_is_v1 = false;
  int ord_abelian = 0;
  int ord_stabilizer = 0;
  int ord_stated = 0;  // the k + 1 claimed for the abelian pair
  bool effective = false;
  bool half_tail = false;
  std::vector<std::size_t> weissfeiler_dims_abelian;
  std::vector<std::size_t> weissfeiler_dims_stabilizer;
};

struct FamilyReport {
  std::vector<FamilyRow> rows;
  std::string discrepancy_note;
};

/// A row failed one of the family assertions.
class FamilyCheckError : public std::runtime_error {
 public:
  FamilyCheckError(const std::string& what, FamilyRow row, FamilyReport partial)
      : std::runtime_error(what), row_(std::move(row)), partial_(std::move(partial)) {}
  [[nodiscard]] const FamilyRow& row() const { return row_; }
  [[nodiscard]] const FamilyReport& partial() const { return partial_; }

 private:
  FamilyRow row_;
  FamilyReport partial_;
};

/// One row of the sl(2) family check for a single k (no assertions).
FamilyRow family_row(int k);

/// Rows for k = 1..k_max, asserting jet length k, certification,
/// effectiveness, the half-tail clauses and strictly increasing order.
FamilyReport verify_family(int k_max, bool parallel = true);

extern const char* const kOrderDiscrepancyNote;

}  // namespace kleinjet

#endif  // KLEINJET_CATALOG_HPP
