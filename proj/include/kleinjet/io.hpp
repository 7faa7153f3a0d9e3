#ifndef KLEINJET_IO_HPP
#define KLEINJET_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kleinjet/catalog.hpp"
#include "kleinjet/errors.hpp"
#include "kleinjet/exactlin.hpp"
#include "kleinjet/jetfilt.hpp"
#include "kleinjet/klein.hpp"
#include "kleinjet/liealg.hpp"

namespace kleinjet::io {

using Json = nlohmann::ordered_json;

/// Input that parsed but failed its algebraic validation.
class InvalidObjectError : public InputError {
 public:
  InvalidObjectError(const std::string& what, ValidationReport report)
      : InputError(what), report_(std::move(report)) {}
  [[nodiscard]] const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Where a JSON value came from, for error messages ("file.json: /a/0/b").
struct Location {
  std::string source;
  std::string pointer;

  [[nodiscard]] Location at(const std::string& key) const { return {source, pointer + "/" + key}; }
  [[nodiscard]] Location at(std::size_t index) const { return at(std::to_string(index)); }
  [[noreturn]] void fail(const std::string& message) const;
};

// Scalars and arrays ---------------------------------------------------------

Json to_json(const Rational& r);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Subspace& s);

Rational rational_from_json(const Json& j, const Location& loc);
Vector vector_from_json(const Json& j, const Location& loc,
                        std::optional<std::size_t> expected_dim = std::nullopt);
Matrix matrix_from_json(const Json& j, const Location& loc, std::size_t rows, std::size_t cols);
/// Accepts {"ambient_dim": d, "basis": [...]} or a bare array of vectors; the
/// result is re-canonicalized.
Subspace subspace_from_json(const Json& j, const Location& loc,
                            std::optional<std::size_t> expected_ambient = std::nullopt);

// Algebras and representations -----------------------------------------------

Json to_json(const LieAlgebra& algebra);
Json to_json(const Representation& rep);

/// Parses without checking the Jacobi identity.
LieAlgebra parse_algebra(const Json& j, const Location& loc);
/// Parses without checking the homomorphism property. A string "algebra"
/// field is a file path resolved against `base_dir`.
Representation parse_representation(const Json& j, const Location& loc,
                                    const std::filesystem::path& base_dir);

/// Parse and validate; throws InvalidObjectError with the violations.
LieAlgebra load_algebra(const Json& j, const Location& loc);
Representation load_representation(const Json& j, const Location& loc,
                                   const std::filesystem::path& base_dir);

Json read_json_file(const std::filesystem::path& path);
LieAlgebra load_algebra_file(const std::filesystem::path& path);
Representation load_representation_file(const std::filesystem::path& path);

// Reports ----------------------------------------------------------------------

Json to_json(const ValidationReport& report);
ValidationReport validation_report_from_json(const Json& j, const Location& loc);

struct FiltrationReport {
  Filtration filtration;
  bool valid = false;
  bool maximally_refined = false;
  bool stalled = false;
};

FiltrationReport make_filtration_report(const Representation& rep, const GreedyChain& chain);
Json to_json(const FiltrationReport& report);
FiltrationReport filtration_report_from_json(const Json& j, const Location& loc);

Json to_json(const JetSearchResult& result);
JetSearchResult jet_search_from_json(const Json& j, const Location& loc);

struct KleinReport {
  std::size_t h_dim = 0;
  std::size_t h0_dim = 0;
  bool h0_abelian = false;
  bool h0_solvable = false;
  std::vector<std::size_t> weissfeiler_dims;
  int m = -1;
  int ord = 0;
  bool effective = false;
  HalfTailReport half_tail;
  Json provenance = Json::object();
};

KleinReport make_klein_report(const LieAlgebra& h, const Subspace& h0, Json provenance);
Json to_json(const KleinReport& report);
KleinReport klein_report_from_json(const Json& j, const Location& loc);

Json to_json(const FamilyReport& report);
FamilyReport family_report_from_json(const Json& j, const Location& loc);

Json to_json(const StiffeningResult& result);
StiffeningResult stiffening_from_json(const Json& j, const Location& loc);

/// Canonical serialization: two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace kleinjet::io

#endif  // KLEINJET_IO_HPP
