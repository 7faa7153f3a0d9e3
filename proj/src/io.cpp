#include "kleinjet/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace kleinjet::io {

namespace {

const Json& field(const Json& j, const Location& loc, const std::string& key) {
  if (!j.is_object()) loc.fail("expected an object");
  const auto it = j.find(key);
  if (it == j.end()) loc.at(key).fail("missing field");
  return *it;
}

const Json& array_at(const Json& j, const Location& loc) {
  if (!j.is_array()) loc.fail("expected an array");
  return j;
}

bool bool_at(const Json& j, const Location& loc) {
  if (!j.is_boolean()) loc.fail("expected a boolean");
  return j.get<bool>();
}

long long integer_at(const Json& j, const Location& loc) {
  if (!j.is_number_integer()) loc.fail("expected an integer");
  return j.get<long long>();
}

std::size_t count_at(const Json& j, const Location& loc) {
  const long long v = integer_at(j, loc);
  if (v < 0) loc.fail("expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

std::string string_at(const Json& j, const Location& loc) {
  if (!j.is_string()) loc.fail("expected a string");
  return j.get<std::string>();
}

std::vector<std::size_t> counts_at(const Json& j, const Location& loc) {
  std::vector<std::size_t> out;
  const Json& arr = array_at(j, loc);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(count_at(arr[i], loc.at(i)));
  return out;
}

Json basis_json(const Subspace& s) {
  Json rows = Json::array();
  for (const Vector& v : s.basis()) rows.push_back(to_json(v));
  return rows;
}

std::string describe_violations(const ValidationReport& r) {
  std::string out;
  for (const Violation& v : r.violations) {
    if (!out.empty()) out += "; ";
    out += v.identity + " at (";
    for (std::size_t i = 0; i < v.indices.size(); ++i) out += (i ? "," : "") + std::to_string(v.indices[i]);
    out += ")";
  }
  return out;
}

}  // namespace

void Location::fail(const std::string& message) const {
  throw InputError(source + ": " + (pointer.empty() ? "/" : pointer) + ": " + message);
}

// ---------------------------------------------------------------------------
// Scalars and arrays

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const Rational& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const Subspace& s) {
  Json out;
  out["ambient_dim"] = s.ambient_dim();
  out["basis"] = basis_json(s);
  return out;
}

Rational rational_from_json(const Json& j, const Location& loc) {
  if (j.is_number_integer()) return Rational::parse(std::to_string(j.get<long long>()));
  if (!j.is_string()) loc.fail("expected a rational string \"p\" or \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    loc.fail(e.what());
  }
}

Vector vector_from_json(const Json& j, const Location& loc, std::optional<std::size_t> expected_dim) {
  const Json& arr = array_at(j, loc);
  if (expected_dim && arr.size() != *expected_dim) {
    loc.fail("expected " + std::to_string(*expected_dim) + " entries, got " + std::to_string(arr.size()));
  }
  Vector v(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) v[i] = rational_from_json(arr[i], loc.at(i));
  return v;
}

Matrix matrix_from_json(const Json& j, const Location& loc, std::size_t rows, std::size_t cols) {
  const Json& arr = array_at(j, loc);
  if (arr.size() != rows) loc.fail("expected " + std::to_string(rows) + " rows, got " + std::to_string(arr.size()));
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vector row = vector_from_json(arr[r], loc.at(r), cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

Subspace subspace_from_json(const Json& j, const Location& loc, std::optional<std::size_t> expected_ambient) {
  std::optional<std::size_t> ambient = expected_ambient;
  const Json* rows = &j;
  Location rows_loc = loc;
  if (j.is_object()) {
    const std::size_t declared = count_at(field(j, loc, "ambient_dim"), loc.at("ambient_dim"));
    if (expected_ambient && declared != *expected_ambient) {
      loc.at("ambient_dim").fail("expected ambient dimension " + std::to_string(*expected_ambient));
    }
    ambient = declared;
    rows = &field(j, loc, "basis");
    rows_loc = loc.at("basis");
  }
  const Json& arr = array_at(*rows, rows_loc);
  if (!ambient) {
    if (arr.empty()) loc.fail("cannot infer the ambient dimension of an empty basis");
    ambient = array_at(arr[0], rows_loc.at(0)).size();
  }
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < arr.size(); ++i) gens.push_back(vector_from_json(arr[i], rows_loc.at(i), *ambient));
  return span(gens, *ambient);
}

// ---------------------------------------------------------------------------
// Algebras and representations

Json to_json(const LieAlgebra& algebra) {
  Json out;
  out["dim"] = algebra.dim();
  out["basis_names"] = algebra.basis_names();
  Json brackets = Json::array();
  for (const BracketEntry& b : algebra.brackets()) {
    Json coeffs = Json::object();
    for (const auto& [k, v] : b.coeffs) coeffs[std::to_string(k)] = to_json(v);
    brackets.push_back(Json{{"i", b.i}, {"j", b.j}, {"coeffs", coeffs}});
  }
  out["brackets"] = brackets;
  return out;
}

Json to_json(const Representation& rep) {
  Json out;
  out["algebra"] = to_json(rep.algebra());
  out["space_dim"] = rep.space_dim();
  Json mats = Json::array();
  for (const Matrix& m : rep.matrices()) mats.push_back(to_json(m));
  out["matrices"] = mats;
  return out;
}

LieAlgebra parse_algebra(const Json& j, const Location& loc) {
  const std::size_t n = count_at(field(j, loc, "dim"), loc.at("dim"));
  if (n == 0) loc.at("dim").fail("dimension must be positive");
  std::vector<std::string> names;
  if (j.contains("basis_names")) {
    const Json& arr = array_at(j["basis_names"], loc.at("basis_names"));
    if (arr.size() != n) loc.at("basis_names").fail("expected " + std::to_string(n) + " names");
    for (std::size_t i = 0; i < n; ++i) names.push_back(string_at(arr[i], loc.at("basis_names").at(i)));
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back("b" + std::to_string(i + 1));
  }
  std::vector<BracketEntry> entries;
  const Location bl = loc.at("brackets");
  const Json& arr = array_at(field(j, loc, "brackets"), bl);
  std::vector<bool> seen(n * n, false);
  for (std::size_t e = 0; e < arr.size(); ++e) {
    const Location el = bl.at(e);
    BracketEntry entry;
    entry.i = count_at(field(arr[e], el, "i"), el.at("i"));
    entry.j = count_at(field(arr[e], el, "j"), el.at("j"));
    if (entry.i >= entry.j || entry.j >= n) el.fail("need 0 <= i < j < dim");
    if (seen[entry.i * n + entry.j]) el.fail("duplicate bracket entry");
    seen[entry.i * n + entry.j] = true;
    const Location cl = el.at("coeffs");
    const Json& coeffs = field(arr[e], el, "coeffs");
    if (!coeffs.is_object()) cl.fail("expected an object of index -> rational");
    for (const auto& [key, value] : coeffs.items()) {
      std::size_t k = 0;
      try {
        std::size_t used = 0;
        k = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        cl.at(key).fail("coefficient key must be a basis index");
      }
      if (k >= n) cl.at(key).fail("basis index out of range");
      entry.coeffs.emplace(k, rational_from_json(value, cl.at(key)));
    }
    entries.push_back(std::move(entry));
  }
  return LieAlgebra::from_brackets(std::move(names), entries);
}

Representation parse_representation(const Json& j, const Location& loc,
                                    const std::filesystem::path& base_dir) {
  const Json& alg = field(j, loc, "algebra");
  LieAlgebra algebra = [&] {
    if (alg.is_string()) {
      const std::filesystem::path ref = base_dir / alg.get<std::string>();
      return load_algebra(read_json_file(ref), Location{ref.string(), ""});
    }
    return parse_algebra(alg, loc.at("algebra"));
  }();
  const std::size_t d = count_at(field(j, loc, "space_dim"), loc.at("space_dim"));
  if (d == 0) loc.at("space_dim").fail("space dimension must be positive");
  const Location ml = loc.at("matrices");
  const Json& mats = array_at(field(j, loc, "matrices"), ml);
  if (mats.size() != algebra.dim()) ml.fail("expected one matrix per basis element (" + std::to_string(algebra.dim()) + ")");
  std::vector<Matrix> matrices;
  for (std::size_t i = 0; i < mats.size(); ++i) matrices.push_back(matrix_from_json(mats[i], ml.at(i), d, d));
  return Representation(std::move(algebra), std::move(matrices));
}

LieAlgebra load_algebra(const Json& j, const Location& loc) {
  LieAlgebra algebra = parse_algebra(j, loc);
  ValidationReport report = validate_lie(algebra);
  if (!report.passed) {
    const std::string message = loc.source + ": invalid Lie algebra: " + describe_violations(report);
    throw InvalidObjectError(message, std::move(report));
  }
  return algebra;
}

Representation load_representation(const Json& j, const Location& loc, const std::filesystem::path& base_dir) {
  Representation rep = parse_representation(j, loc, base_dir);
  ValidationReport lie = validate_lie(rep.algebra());
  if (!lie.passed) {
    const std::string message = loc.source + ": invalid Lie algebra: " + describe_violations(lie);
    throw InvalidObjectError(message, std::move(lie));
  }
  ValidationReport report = validate_rep(rep);
  if (!report.passed) {
    const std::string message = loc.source + ": invalid representation: " + describe_violations(report);
    throw InvalidObjectError(message, std::move(report));
  }
  return rep;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": malformed JSON: " + e.what());
  }
}

LieAlgebra load_algebra_file(const std::filesystem::path& path) {
  return load_algebra(read_json_file(path), Location{path.string(), ""});
}

Representation load_representation_file(const std::filesystem::path& path) {
  return load_representation(read_json_file(path), Location{path.string(), ""}, path.parent_path());
}

// ---------------------------------------------------------------------------
// Reports

Json to_json(const ValidationReport& report) {
  Json out;
  out["subject"] = report.subject == ValidationReport::Subject::algebra ? "algebra" : "representation";
  out["passed"] = report.passed;
  Json vs = Json::array();
  for (const Violation& v : report.violations) {
    vs.push_back(Json{{"identity", v.identity}, {"indices", v.indices}, {"discrepancy", to_json(v.discrepancy)}});
  }
  out["violations"] = vs;
  return out;
}

ValidationReport validation_report_from_json(const Json& j, const Location& loc) {
  ValidationReport r;
  const std::string subject = string_at(field(j, loc, "subject"), loc.at("subject"));
  if (subject == "algebra") r.subject = ValidationReport::Subject::algebra;
  else if (subject == "representation") r.subject = ValidationReport::Subject::representation;
  else loc.at("subject").fail("unknown subject");
  r.passed = bool_at(field(j, loc, "passed"), loc.at("passed"));
  const Location vl = loc.at("violations");
  const Json& vs = array_at(field(j, loc, "violations"), vl);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Location l = vl.at(i);
    r.violations.push_back({string_at(field(vs[i], l, "identity"), l.at("identity")),
                            counts_at(field(vs[i], l, "indices"), l.at("indices")),
                            vector_from_json(field(vs[i], l, "discrepancy"), l.at("discrepancy"))});
  }
  if (r.passed != r.violations.empty()) loc.fail("passed must agree with an empty violation list");
  return r;
}

FiltrationReport make_filtration_report(const Representation& rep, const GreedyChain& chain) {
  FiltrationReport r{chain.filtration, false, false, chain.stalled};
  r.valid = validate_jet_filtration(rep, chain.filtration);
  r.maximally_refined = r.valid && is_maximally_refined(rep, chain.filtration);
  return r;
}

Json to_json(const FiltrationReport& report) {
  const Filtration& f = report.filtration;
  Json out;
  out["direction"] = f.direction() == Direction::ascending ? "ascending" : "descending";
  out["ambient_dim"] = f.ambient_dim();
  Json subs = Json::array();
  for (const Subspace& s : f.subspaces()) subs.push_back(basis_json(s));
  out["subspaces"] = subs;
  out["dims"] = f.dims();
  out["length"] = f.length();
  out["valid"] = report.valid;
  out["maximally_refined"] = report.maximally_refined;
  out["stalled"] = report.stalled;
  return out;
}

FiltrationReport filtration_report_from_json(const Json& j, const Location& loc) {
  const std::string dir = string_at(field(j, loc, "direction"), loc.at("direction"));
  if (dir != "ascending" && dir != "descending") loc.at("direction").fail("unknown direction");
  const std::size_t d = count_at(field(j, loc, "ambient_dim"), loc.at("ambient_dim"));
  const Location sl = loc.at("subspaces");
  const Json& subs = array_at(field(j, loc, "subspaces"), sl);
  std::vector<Subspace> terms;
  for (std::size_t i = 0; i < subs.size(); ++i) terms.push_back(subspace_from_json(subs[i], sl.at(i), d));
  const std::size_t length = count_at(field(j, loc, "length"), loc.at("length"));
  if (length != terms.size()) loc.at("length").fail("length disagrees with the subspace list");
  try {
    Filtration f(dir == "ascending" ? Direction::ascending : Direction::descending, d, std::move(terms));
    return {std::move(f), bool_at(field(j, loc, "valid"), loc.at("valid")),
            bool_at(field(j, loc, "maximally_refined"), loc.at("maximally_refined")),
            bool_at(field(j, loc, "stalled"), loc.at("stalled"))};
  } catch (const std::invalid_argument& e) {
    sl.fail(e.what());
  }
}

Json to_json(const JetSearchResult& result) {
  Json out;
  out["best_length"] = result.best_length;
  out["witness"] = to_json(result.witness);
  out["certified_maximal"] = result.certified_maximal;
  Json per = Json::array();
  for (const CandidateOutcome& c : result.per_candidate) {
    per.push_back(Json{{"candidate", to_json(c.candidate)}, {"length", c.length}, {"stalled", c.stalled}});
  }
  out["per_candidate"] = per;
  return out;
}

JetSearchResult jet_search_from_json(const Json& j, const Location& loc) {
  JetSearchResult r;
  r.best_length = count_at(field(j, loc, "best_length"), loc.at("best_length"));
  r.witness = vector_from_json(field(j, loc, "witness"), loc.at("witness"));
  r.certified_maximal = bool_at(field(j, loc, "certified_maximal"), loc.at("certified_maximal"));
  const Location pl = loc.at("per_candidate");
  const Json& per = array_at(field(j, loc, "per_candidate"), pl);
  for (std::size_t i = 0; i < per.size(); ++i) {
    const Location l = pl.at(i);
    r.per_candidate.push_back({vector_from_json(field(per[i], l, "candidate"), l.at("candidate")),
                               count_at(field(per[i], l, "length"), l.at("length")),
                               bool_at(field(per[i], l, "stalled"), l.at("stalled"))});
  }
  return r;
}

KleinReport make_klein_report(const LieAlgebra& h, const Subspace& h0, Json provenance) {
  const WeissfeilerResult w = weissfeiler(h, h0);
  KleinReport r;
  r.h_dim = h.dim();
  r.h0_dim = h0.dim();
  r.h0_abelian = is_abelian(h, h0);
  r.h0_solvable = is_solvable(h, h0);
  r.weissfeiler_dims = w.chain.dims();
  r.m = w.m;
  r.ord = w.ord;
  r.effective = w.effective;
  r.half_tail = half_tail_report(h, w);
  r.provenance = std::move(provenance);
  return r;
}

Json to_json(const KleinReport& report) {
  Json out;
  out["h_dim"] = report.h_dim;
  out["h0_dim"] = report.h0_dim;
  out["h0_abelian"] = report.h0_abelian;
  out["h0_solvable"] = report.h0_solvable;
  out["weissfeiler_dims"] = report.weissfeiler_dims;
  out["m"] = report.m;
  out["ord"] = report.ord;
  out["effective"] = report.effective;
  out["half_tail"] = Json{{"graded", report.half_tail.graded},
                          {"abelian_tail", report.half_tail.abelian_tail},
                          {"tail_ideals", report.half_tail.tail_ideals}};
  out["provenance"] = report.provenance;
  return out;
}

KleinReport klein_report_from_json(const Json& j, const Location& loc) {
  KleinReport r;
  r.h_dim = count_at(field(j, loc, "h_dim"), loc.at("h_dim"));
  r.h0_dim = count_at(field(j, loc, "h0_dim"), loc.at("h0_dim"));
  r.h0_abelian = bool_at(field(j, loc, "h0_abelian"), loc.at("h0_abelian"));
  r.h0_solvable = bool_at(field(j, loc, "h0_solvable"), loc.at("h0_solvable"));
  r.weissfeiler_dims = counts_at(field(j, loc, "weissfeiler_dims"), loc.at("weissfeiler_dims"));
  r.m = static_cast<int>(integer_at(field(j, loc, "m"), loc.at("m")));
  r.ord = static_cast<int>(integer_at(field(j, loc, "ord"), loc.at("ord")));
  r.effective = bool_at(field(j, loc, "effective"), loc.at("effective"));
  const Location hl = loc.at("half_tail");
  const Json& ht = field(j, loc, "half_tail");
  r.half_tail.graded = bool_at(field(ht, hl, "graded"), hl.at("graded"));
  r.half_tail.abelian_tail = bool_at(field(ht, hl, "abelian_tail"), hl.at("abelian_tail"));
  r.half_tail.tail_ideals = ht.contains("tail_ideals") ? bool_at(ht["tail_ideals"], hl.at("tail_ideals")) : true;
  r.provenance = field(j, loc, "provenance");
  return r;
}

Json to_json(const FamilyReport& report) {
  Json out;
  out["family"] = "sl2-sympower";
  Json rows = Json::array();
  for (const FamilyRow& row : report.rows) {
    Json r;
    r["k"] = row.k;
    r["jet_length"] = row.jet_length;
    r["certified"] = row.certified;
    r["witness_is_v1"] = row.witness_is_v1;
    r["ord_abelian"] = row.ord_abelian;
    r["ord_stabilizer"] = row.ord_stabilizer;
    r["ord_stated"] = row.ord_stated;
    r["effective"] = row.effective;
    r["half_tail"] = row.half_tail;
    r["weissfeiler_dims_abelian"] = row.weissfeiler_dims_abelian;
    r["weissfeiler_dims_stabilizer"] = row.weissfeiler_dims_stabilizer;
    rows.push_back(std::move(r));
  }
  out["rows"] = rows;
  out["order_discrepancy_note"] = report.discrepancy_note;
  return out;
}

FamilyReport family_report_from_json(const Json& j, const Location& loc) {
  FamilyReport report;
  report.discrepancy_note = string_at(field(j, loc, "order_discrepancy_note"), loc.at("order_discrepancy_note"));
  const Location rl = loc.at("rows");
  const Json& rows = array_at(field(j, loc, "rows"), rl);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Location l = rl.at(i);
    const Json& r = rows[i];
    FamilyRow row;
    row.k = static_cast<int>(integer_at(field(r, l, "k"), l.at("k")));
    row.jet_length = count_at(field(r, l, "jet_length"), l.at("jet_length"));
    row.certified = bool_at(field(r, l, "certified"), l.at("certified"));
    row.witness_is_v1 = bool_at(field(r, l, "witness_is_v1"), l.at("witness_is_v1"));
    row.ord_abelian = static_cast<int>(integer_at(field(r, l, "ord_abelian"), l.at("ord_abelian")));
    row.ord_stabilizer = static_cast<int>(integer_at(field(r, l, "ord_stabilizer"), l.at("ord_stabilizer")));
    row.ord_stated = static_cast<int>(integer_at(field(r, l, "ord_stated"), l.at("ord_stated")));
    row.effective = bool_at(field(r, l, "effective"), l.at("effective"));
    row.half_tail = bool_at(field(r, l, "half_tail"), l.at("half_tail"));
    row.weissfeiler_dims_abelian = counts_at(field(r, l, "weissfeiler_dims_abelian"), l.at("weissfeiler_dims_abelian"));
    row.weissfeiler_dims_stabilizer =
        counts_at(field(r, l, "weissfeiler_dims_stabilizer"), l.at("weissfeiler_dims_stabilizer"));
    report.rows.push_back(std::move(row));
  }
  return report;
}

Json to_json(const StiffeningResult& result) {
  Json out;
  out["stiffening"] = result.stiffening;
  out["sum_is_everything"] = result.sum_is_everything;
  out["intersection_matches"] = result.intersection_matches;
  out["dimension_identity"] = result.dimension_identity;
  return out;
}

StiffeningResult stiffening_from_json(const Json& j, const Location& loc) {
  StiffeningResult r;
  r.stiffening = bool_at(field(j, loc, "stiffening"), loc.at("stiffening"));
  r.sum_is_everything = bool_at(field(j, loc, "sum_is_everything"), loc.at("sum_is_everything"));
  r.intersection_matches = bool_at(field(j, loc, "intersection_matches"), loc.at("intersection_matches"));
  r.dimension_identity = bool_at(field(j, loc, "dimension_identity"), loc.at("dimension_identity"));
  return r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace kleinjet::io
