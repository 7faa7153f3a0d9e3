#include "kleinjet/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "kleinjet/catalog.hpp"
#include "kleinjet/errors.hpp"
#include "kleinjet/io.hpp"
#include "kleinjet/jetfilt.hpp"
#include "kleinjet/klein.hpp"

namespace kleinjet::cli {

namespace {

using io::Json;
namespace fs = std::filesystem;

constexpr const char* kLineStartNote =
    "jet order is maximized over greedy chains started from lines; chains whose first term has "
    "dimension > 1 are not searched. Uncertified values are lower bounds.";

struct Outcome {
  Json report;
  int code = kOk;
};

// ---------------------------------------------------------------------------
// Human-readable rendering

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_flat(const Json& j) {
  if (j.is_array()) return std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
  return j.is_primitive();
}

std::string inline_text(const Json& j) {
  if (j.is_primitive()) return scalar_text(j);
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + inline_text(j[i]);
    return s + "]";
  }
  std::string s = "{";
  bool first = true;
  for (const auto& [k, v] : j.items()) {
    s += (first ? "" : ", ") + k + ": " + inline_text(v);
    first = false;
  }
  return s + "}";
}

void render_table(const Json& rows, std::ostream& os, const std::string& indent) {
  std::vector<std::string> cols;
  for (const auto& [k, v] : rows.front().items()) cols.push_back(k);
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  std::vector<std::vector<std::string>> cells;
  for (const Json& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      line.push_back(row.contains(cols[c]) ? inline_text(row[cols[c]]) : "");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    os << indent;
    for (std::size_t c = 0; c < line.size(); ++c) {
      os << std::left << std::setw(static_cast<int>(width[c])) << line[c] << (c + 1 < line.size() ? "  " : "");
    }
    os << "\n";
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
}

void render(const Json& j, std::ostream& os, const std::string& indent) {
  std::size_t key_width = 0;
  for (const auto& [k, v] : j.items()) key_width = std::max(key_width, k.size());
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      os << indent << k << ":\n";
      render(v, os, indent + "  ");
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << indent << k << ":\n";
      render_table(v, os, indent + "  ");
    } else if (is_flat(v) || v.empty()) {
      os << indent << std::left << std::setw(static_cast<int>(key_width)) << k << "  " << inline_text(v) << "\n";
    } else {
      os << indent << k << ":\n";
      for (const Json& item : v) os << indent << "  " << inline_text(item) << "\n";
    }
  }
}

// ---------------------------------------------------------------------------
// Shared loading helpers

Json error_report(const std::string& kind, const std::string& message) {
  return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

Subspace load_subspace(const std::string& path, std::size_t ambient) {
  return io::subspace_from_json(io::read_json_file(path), io::Location{path, ""}, ambient);
}

Subspace stabilizer_choice(const std::string& spec, const Representation& rep) {
  if (spec == "cartan" || spec == "borel_upper" || spec == "borel_lower") {
    if (rep.algebra().dim() != 3) throw PreconditionError("named subalgebras are defined for sl(2) only");
    return named_subalgebra(parse_named_subalgebra(spec));
  }
  return load_subspace(spec, rep.algebra().dim());
}

Outcome klein_from_rep(const std::string& rep_path, const std::string& h0_spec) {
  const Representation rep = io::load_representation_file(rep_path);
  StabilizerChoice choice = AbelianOption{};
  Json option = "abelian";
  if (h0_spec.rfind("stabilizer:", 0) == 0) {
    const std::string arg = h0_spec.substr(std::string("stabilizer:").size());
    choice = StabilizerOption{stabilizer_choice(arg, rep)};
    option = "stabilizer";
  } else if (h0_spec != "abelian") {
    throw InputError("--h0 must be 'abelian' or 'stabilizer:<file|name>', got '" + h0_spec + "'");
  }

  const JetSearchResult search = jet_order_search(rep, BasisStrategy{});
  const GreedyChain chain = greedy_chain(rep, search.witness);
  if (chain.stalled) {
    Json report = error_report("stalled", "greedy chain from the search witness stalls at a proper invariant subspace");
    report["error"]["stall_dims"] = chain.filtration.dims();
    return {report, kCheckFailed};
  }
  const KleinPair pair = build_klein_pair(rep, chain.filtration, choice);

  Json prov;
  prov["source"] = "representation";
  prov["h0_option"] = option;
  if (const auto& p = pair.provenance(); p && p->stabilizer) prov["stabilizer_basis"] = io::to_json(*p->stabilizer)["basis"];
  prov["start_vector"] = io::to_json(search.witness);
  prov["filtration_dims"] = chain.filtration.dims();
  prov["jet_length"] = chain.filtration.length();
  prov["ord_stated"] = chain.filtration.length() + 1;
  prov["order_note"] = kOrderDiscrepancyNote;
  const io::KleinReport report = io::make_klein_report(pair.h(), pair.h0(), prov);
  return {io::to_json(report), report.half_tail.passed() ? kOk : kCheckFailed};
}

// ---------------------------------------------------------------------------
// Commands

Outcome cmd_validate(const std::string& path) {
  const Json j = io::read_json_file(path);
  const io::Location loc{path, ""};
  Json out;
  std::vector<ValidationReport> reports;
  if (j.is_object() && j.contains("matrices")) {
    out["kind"] = "representation";
    const Representation rep = io::parse_representation(j, loc, fs::path(path).parent_path());
    reports.push_back(validate_lie(rep.algebra()));
    if (reports.back().passed) reports.push_back(validate_rep(rep));
  } else {
    out["kind"] = "algebra";
    reports.push_back(validate_lie(io::parse_algebra(j, loc)));
  }
  bool passed = true;
  Json arr = Json::array();
  for (const ValidationReport& r : reports) {
    passed = passed && r.passed;
    arr.push_back(io::to_json(r));
  }
  out["passed"] = passed;
  out["reports"] = arr;
  return {out, passed ? kOk : kCheckFailed};
}

Outcome cmd_catalog(const std::string& entry, int k, const std::string& name, const std::string& out_path) {
  Json payload;
  if (entry == "sl2-sympower") {
    if (k < 1) throw InputError("--k must be a positive integer");
    payload = io::to_json(sympower(k));
  } else if (entry == "sl2") {
    payload = io::to_json(sl2());
  } else if (entry == "sl2-subalgebra") {
    try {
      payload = io::to_json(named_subalgebra(parse_named_subalgebra(name)));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--name: ") + e.what());
    }
  } else {
    throw InputError("unknown catalog entry '" + entry + "'");
  }
  if (out_path.empty()) return {payload, kOk};
  std::ofstream file(out_path);
  if (!file) throw InputError(out_path + ": cannot open for writing");
  file << io::dump(payload);
  return {Json{{"catalog", entry}, {"written", out_path}}, kOk};
}

Outcome cmd_jet_filtration(const std::string& rep_path, const std::string& vector_path) {
  const Representation rep = io::load_representation_file(rep_path);
  Json vj = io::read_json_file(vector_path);
  io::Location loc{vector_path, ""};
  if (vj.is_object()) {
    if (!vj.contains("vector")) loc.at("vector").fail("missing field");
    vj = vj["vector"];
    loc = loc.at("vector");
  }
  const Vector v = io::vector_from_json(vj, loc, rep.space_dim());
  if (v.is_zero()) loc.fail("start vector must be nonzero");
  const GreedyChain chain = greedy_chain(rep, v);
  const io::FiltrationReport report = io::make_filtration_report(rep, chain);
  Json out = io::to_json(report);
  return {out, (report.stalled || (report.valid && report.maximally_refined)) ? kOk : kCheckFailed};
}

Outcome cmd_jet_order(const std::string& rep_path, const std::string& strategy, std::uint64_t seed,
                      std::size_t random_count, const std::string& vectors_path) {
  const Representation rep = io::load_representation_file(rep_path);
  SearchStrategy s;
  Json sj;
  sj["name"] = strategy;
  if (strategy == "basis") {
    s = BasisStrategy{};
  } else if (strategy == "random") {
    s = RandomStrategy{seed, random_count};
    sj["seed"] = seed;
    sj["random_count"] = random_count;
  } else if (strategy == "file") {
    if (vectors_path.empty()) throw InputError("--strategy file requires --vectors");
    Json vj = io::read_json_file(vectors_path);
    io::Location loc{vectors_path, ""};
    if (vj.is_object()) {
      if (!vj.contains("vectors")) loc.at("vectors").fail("missing field");
      vj = vj["vectors"];
      loc = loc.at("vectors");
    }
    if (!vj.is_array() || vj.empty()) loc.fail("expected a nonempty array of vectors");
    ExplicitStrategy e;
    for (std::size_t i = 0; i < vj.size(); ++i) {
      e.vectors.push_back(io::vector_from_json(vj[i], loc.at(i), rep.space_dim()));
      if (e.vectors.back().is_zero()) loc.at(i).fail("candidate vectors must be nonzero");
    }
    s = std::move(e);
    sj["count"] = vj.size();
  } else {
    throw InputError("unknown strategy '" + strategy + "'");
  }
  const JetSearchResult result = jet_order_search(rep, s);
  Json out;
  out["space_dim"] = rep.space_dim();
  out["strategy"] = sj;
  const Json body = io::to_json(result);
  for (const auto& [key, value] : body.items()) out[key] = value;
  out["lower_bound_only"] = !result.certified_maximal;
  out["note"] = kLineStartNote;
  return {out, kOk};
}

Outcome cmd_weissfeiler_algebra(const std::string& algebra_path, const std::string& h0_path) {
  const LieAlgebra h = io::load_algebra_file(algebra_path);
  const Subspace h0 = load_subspace(h0_path, h.dim());
  const io::KleinReport report = io::make_klein_report(h, h0, Json{{"source", "algebra"}});
  return {io::to_json(report), report.half_tail.passed() ? kOk : kCheckFailed};
}

Outcome cmd_stiffening(const std::string& ambient, const std::string& g, const std::string& h_prime,
                       const std::string& h) {
  const LieAlgebra gp = io::load_algebra_file(ambient);
  const Subspace gs = load_subspace(g, gp.dim());
  const Subspace hps = load_subspace(h_prime, gp.dim());
  const Subspace hs = load_subspace(h, gp.dim());
  const StiffeningResult r = is_stiffening(gp, hps, gs, hs);
  Json out = io::to_json(r);
  out["dims"] = Json{{"g_prime", gp.dim()}, {"h_prime", hps.dim()}, {"g", gs.dim()}, {"h", hs.dim()}};
  return {out, kOk};
}

Outcome cmd_verify(const std::string& family, int k_max) {
  if (family != "sl2-sympower") throw InputError("unknown family '" + family + "'");
  if (k_max < 1) throw InputError("--k-max must be a positive integer");
  try {
    return {io::to_json(verify_family(k_max)), kOk};
  } catch (const FamilyCheckError& e) {
    Json out = io::to_json(e.partial());
    out["failure"] = Json{{"k", e.row().k}, {"message", e.what()}};
    return {out, kCheckFailed};
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"kleinjet: jet-filtrations and Klein pairs from Lie algebra representations", "kleinjet"};
  app.require_subcommand(1);
  // "-h" would collide with the stiffening option --h.
  app.set_help_flag("--help", "print this help message and exit");
  app.fallthrough();
  bool pretty = false;
  auto* fmt = app.add_flag("--pretty", pretty, "aligned human-readable output");
  app.add_flag("--json", "machine-readable JSON output (default)")->excludes(fmt);

  std::string file, rep_path, vector_path, vectors_path, strategy = "basis", h0_spec, algebra_path,
      h0_basis, ambient, g_path, h_prime_path, h_path, family, entry, out_path, name;
  int k = 0;
  int k_max = 0;
  std::uint64_t seed = 0;
  std::size_t random_count = 16;

  auto* validate = app.add_subcommand("validate", "check a Lie algebra or representation file");
  validate->add_option("file", file)->required();

  auto* catalog = app.add_subcommand("catalog", "emit a catalog object as JSON");
  catalog->add_option("entry", entry, "sl2-sympower | sl2 | sl2-subalgebra")->required();
  catalog->add_option("--k", k, "degree of the symmetric power");
  catalog->add_option("--name", name, "cartan | borel_upper | borel_lower");
  catalog->add_option("--out", out_path, "write to this file instead of stdout");

  auto* jetf = app.add_subcommand("jet-filtration", "greedy jet-filtration from a start vector");
  jetf->add_option("rep,--rep", rep_path)->required();
  jetf->add_option("--vector", vector_path)->required();

  auto* jeto = app.add_subcommand("jet-order", "search start vectors for the longest greedy chain");
  jeto->add_option("rep,--rep", rep_path)->required();
  jeto->add_option("--strategy", strategy)->check(CLI::IsMember({"basis", "random", "file"}));
  jeto->add_option("--seed", seed);
  jeto->add_option("--random-count", random_count);
  jeto->add_option("--vectors", vectors_path);

  auto* kp = app.add_subcommand("klein-pair", "build and analyze the Klein pair of a representation");
  kp->add_option("rep,--rep", rep_path)->required();
  kp->add_option("--h0", h0_spec, "abelian | stabilizer:<file|name>")->default_val("abelian");

  auto* wf = app.add_subcommand("weissfeiler", "Weissfeiler filtration and infinitesimal order");
  auto* wf_alg = wf->add_option("--algebra", algebra_path);
  auto* wf_basis = wf->add_option("--h0-basis", h0_basis);
  auto* wf_rep = wf->add_option("--rep", rep_path);
  wf->add_option("--h0", h0_spec, "abelian | stabilizer:<file|name>")->default_val("abelian");
  wf_alg->needs(wf_basis)->excludes(wf_rep);
  wf_basis->needs(wf_alg);

  auto* st = app.add_subcommand("stiffening", "test g + h' = g' and g cap h' = h");
  st->add_option("--ambient", ambient)->required();
  st->add_option("--g", g_path)->required();
  st->add_option("--h-prime", h_prime_path)->required();
  st->add_option("--h", h_path)->required();

  auto* vf = app.add_subcommand("verify", "run the family verification harness");
  vf->add_option("--family", family)->required();
  vf->add_option("--k-max", k_max)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadInput;
  }

  Outcome outcome;
  try {
    if (*validate) outcome = cmd_validate(file);
    else if (*catalog) outcome = cmd_catalog(entry, k, name, out_path);
    else if (*jetf) outcome = cmd_jet_filtration(rep_path, vector_path);
    else if (*jeto) outcome = cmd_jet_order(rep_path, strategy, seed, random_count, vectors_path);
    else if (*kp) outcome = klein_from_rep(rep_path, h0_spec);
    else if (*wf) {
      if (!algebra_path.empty()) outcome = cmd_weissfeiler_algebra(algebra_path, h0_basis);
      else if (!rep_path.empty()) outcome = klein_from_rep(rep_path, h0_spec);
      else throw InputError("weissfeiler needs --algebra/--h0-basis or --rep");
    } else if (*st) outcome = cmd_stiffening(ambient, g_path, h_prime_path, h_path);
    else if (*vf) outcome = cmd_verify(family, k_max);
  } catch (const io::InvalidObjectError& e) {
    outcome = {error_report("invalid_object", e.what()), kBadInput};
    outcome.report["error"]["violations"] = io::to_json(e.report());
  } catch (const InputError& e) {
    outcome = {error_report("input", e.what()), kBadInput};
  } catch (const DimensionError& e) {
    outcome = {error_report("dimension", e.what()), kBadInput};
  } catch (const PreconditionError& e) {
    outcome = {error_report("precondition", e.what()), kBadInput};
  } catch (const std::exception& e) {
    outcome = {error_report("internal", e.what()), kBadInput};
  }

  if (pretty) {
    render(outcome.report, out, "");
  } else {
    out << io::dump(outcome.report);
  }
  return outcome.code;
}

}  // namespace kleinjet::cli
