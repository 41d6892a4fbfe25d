#include "liekit/formats.hpp"

#include <fstream>
#include <sstream>

#include "liekit/errors.hpp"
#include "liekit/linalg.hpp"

namespace liekit {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("expected a rational scalar string");
  return Rational::from_string(j.get<std::string>());
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix: expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j.at(i).size() != cols) throw ParseError("matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(j.at(i).at(c));
  }
  return m;
}

Json to_json(const Subspace& s) {
  Json j;
  j["ambient_dim"] = s.ambient_dim();
  j["basis"] = to_json(s.basis());
  return j;
}

Subspace subspace_from_json(const Json& j) {
  const std::size_t ambient = j.at("ambient_dim").get<std::size_t>();
  const Matrix basis = matrix_from_json(j.at("basis"));
  if (basis.rows() == 0) return Subspace::zero(ambient);
  if (basis.cols() != ambient) throw ParseError("subspace: basis width != ambient_dim");
  return Subspace::span(basis);
}

Json structure_constants_to_json(const LieAlgebra& g) {
  Json j;
  j["dim"] = g.dim();
  Json labels = Json::array();
  for (const auto& l : g.labels()) labels.push_back(l);
  j["labels"] = std::move(labels);
  Json brackets = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t jj = i + 1; jj < g.dim(); ++jj) {
      Json terms = Json::array();
      for (std::size_t k = 0; k < g.dim(); ++k) {
        if (g.c(i, jj, k).is_zero()) continue;
        Json term;
        term["k"] = k;
        term["c"] = to_json(g.c(i, jj, k));
        terms.push_back(std::move(term));
      }
      if (terms.empty()) continue;
      Json entry;
      entry["i"] = i;
      entry["j"] = jj;
      entry["terms"] = std::move(terms);
      brackets.push_back(std::move(entry));
    }
  j["brackets"] = std::move(brackets);
  return j;
}

LieAlgebra structure_constants_from_json(const Json& j) {
  if (!j.contains("dim")) throw ParseError("structure constants: missing \"dim\"");
  const std::size_t d = j.at("dim").get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
  }
  std::vector<Rational> c(d * d * d);
  if (j.contains("brackets")) {
    for (const auto& entry : j.at("brackets")) {
      const std::size_t i = entry.at("i").get<std::size_t>();
      const std::size_t jj = entry.at("j").get<std::size_t>();
      if (i >= jj || jj >= d) {
        throw ParseError("structure constants: bracket indices must satisfy i < j < dim");
      }
      for (const auto& term : entry.at("terms")) {
        const std::size_t k = term.at("k").get<std::size_t>();
        if (k >= d) throw ParseError("structure constants: term index out of range");
        const Rational value = rational_from_json(term.at("c"));
        c[(i * d + jj) * d + k] = value;
        c[(jj * d + i) * d + k] = -value;
      }
    }
  }
  return LieAlgebra(d, std::move(c), std::move(labels));  // validates the axioms
}

Json family_to_json(const std::vector<Matrix>& family) {
  Json j;
  j["dim"] = family.empty() ? 0 : family.front().rows();
  Json mats = Json::array();
  for (const auto& m : family) mats.push_back(to_json(m));
  j["matrices"] = std::move(mats);
  return j;
}

std::vector<Matrix> family_from_json(const Json& j) {
  const std::size_t n = j.at("dim").get<std::size_t>();
  std::vector<Matrix> family;
  for (const auto& mj : j.at("matrices")) {
    Matrix m = matrix_from_json(mj);
    if (m.rows() != n || m.cols() != n) {
      throw ParseError("matrix family: entries must be dim x dim");
    }
    family.push_back(std::move(m));
  }
  return family;
}

Json to_json(const TrialConfig& c) {
  Json j;
  j["algebra"] = c.algebra_name;
  j["params"] = c.algebra_params;
  j["seed"] = c.seed;
  j["trials"] = c.trials;
  j["max_generators"] = c.max_generators;
  j["coefficient_bound"] = c.coefficient_bound;
  return j;
}

TrialConfig trial_config_from_json(const Json& j) {
  TrialConfig c;
  c.algebra_name = j.at("algebra").get<std::string>();
  c.algebra_params = j.at("params").get<std::vector<long>>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.trials = j.at("trials").get<std::size_t>();
  c.max_generators = j.at("max_generators").get<std::size_t>();
  c.coefficient_bound = j.at("coefficient_bound").get<long>();
  return c;
}

namespace {

Json vec_to_json(const Vec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

Vec vec_from_json(const Json& j) {
  Vec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

}  // namespace

Json to_json(const TrialReport& r, bool include_wall_time) {
  Json j;
  j["config"] = to_json(r.config);
  j["total"] = r.total;
  j["nondegenerate_hits"] = r.nondegenerate_hits;
  j["reductive_confirmed"] = r.reductive_confirmed;
  j["degenerate_skipped"] = r.degenerate_skipped;
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json vj;
    vj["trial_index"] = v.trial_index;
    vj["trial_seed"] = v.trial_seed;
    Json gens = Json::array();
    for (const auto& g : v.generators) gens.push_back(vec_to_json(g));
    vj["generators"] = std::move(gens);
    vj["detail"] = v.detail;
    violations.push_back(std::move(vj));
  }
  j["violations"] = std::move(violations);
  if (include_wall_time) j["wall_time_seconds"] = r.wall_time_seconds;
  return j;
}

TrialReport trial_report_from_json(const Json& j) {
  TrialReport r;
  r.config = trial_config_from_json(j.at("config"));
  r.total = j.at("total").get<std::size_t>();
  r.nondegenerate_hits = j.at("nondegenerate_hits").get<std::size_t>();
  r.reductive_confirmed = j.at("reductive_confirmed").get<std::size_t>();
  r.degenerate_skipped = j.at("degenerate_skipped").get<std::size_t>();
  for (const auto& vj : j.at("violations")) {
    Violation v;
    v.trial_index = vj.at("trial_index").get<std::size_t>();
    v.trial_seed = vj.at("trial_seed").get<std::uint64_t>();
    for (const auto& g : vj.at("generators")) v.generators.push_back(vec_from_json(g));
    v.detail = vj.at("detail").get<std::string>();
    r.violations.push_back(std::move(v));
  }
  return r;
}

Json to_json(const CenterQuotientReport& r) {
  Json j;
  Json results = Json::array();
  for (const auto& res : r.results) {
    Json rj;
    rj["algebra"] = res.algebra;
    rj["dim"] = res.dim;
    rj["center_dim"] = res.center_dim;
    rj["descent_ok"] = res.descent_ok;
    rj["subalgebra_dim"] = res.subalgebra_dim;
    rj["injectivity_ok"] = res.injectivity_ok;
    results.push_back(std::move(rj));
  }
  j["results"] = std::move(results);
  j["all_ok"] = r.all_ok();
  return j;
}

CenterQuotientReport center_quotient_report_from_json(const Json& j) {
  CenterQuotientReport r;
  for (const auto& rj : j.at("results")) {
    CenterQuotientResult res;
    res.algebra = rj.at("algebra").get<std::string>();
    res.dim = rj.at("dim").get<std::size_t>();
    res.center_dim = rj.at("center_dim").get<std::size_t>();
    res.descent_ok = rj.at("descent_ok").get<bool>();
    res.subalgebra_dim = rj.at("subalgebra_dim").get<std::size_t>();
    res.injectivity_ok = rj.at("injectivity_ok").get<bool>();
    r.results.push_back(std::move(res));
  }
  return r;
}

Json to_json(const DecompositionReport& r, bool include_wall_time) {
  Json j;
  j["seed"] = r.config.seed;
  j["families"] = r.config.families;
  j["max_dim"] = r.config.max_dim;
  j["independence_trials"] = r.config.independence_trials;
  j["families_run"] = r.families_run;
  j["commuting_pairs_checked"] = r.commuting_pairs_checked;
  j["invariance_checks"] = r.invariance_checks;
  j["independence_checks"] = r.independence_checks;
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json fj;
    fj["family_index"] = f.family_index;
    fj["family_seed"] = f.family_seed;
    fj["family"] = family_to_json(f.family);
    fj["detail"] = f.detail;
    failures.push_back(std::move(fj));
  }
  j["failures"] = std::move(failures);
  if (include_wall_time) j["wall_time_seconds"] = r.wall_time_seconds;
  return j;
}

DecompositionReport decomposition_report_from_json(const Json& j) {
  DecompositionReport r;
  r.config.seed = j.at("seed").get<std::uint64_t>();
  r.config.families = j.at("families").get<std::size_t>();
  r.config.max_dim = j.at("max_dim").get<std::size_t>();
  r.config.independence_trials = j.at("independence_trials").get<std::size_t>();
  r.families_run = j.at("families_run").get<std::size_t>();
  r.commuting_pairs_checked = j.at("commuting_pairs_checked").get<std::size_t>();
  r.invariance_checks = j.at("invariance_checks").get<std::size_t>();
  r.independence_checks = j.at("independence_checks").get<std::size_t>();
  for (const auto& fj : j.at("failures")) {
    DecompositionFailure f;
    f.family_index = fj.at("family_index").get<std::size_t>();
    f.family_seed = fj.at("family_seed").get<std::uint64_t>();
    f.family = family_from_json(fj.at("family"));
    f.detail = fj.at("detail").get<std::string>();
    r.failures.push_back(std::move(f));
  }
  return r;
}

Json to_json(const CounterexampleReport& r) {
  Json j;
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json cj;
    cj["name"] = c.name;
    cj["nondegenerate"] = c.nondegenerate;
    cj["reductive"] = c.reductive;
    cj["expected_nondegenerate"] = c.expected_nondegenerate;
    cj["expected_reductive"] = c.expected_reductive;
    cj["pass"] = c.pass();
    cases.push_back(std::move(cj));
  }
  j["cases"] = std::move(cases);
  j["all_pass"] = r.all_pass();
  return j;
}

CounterexampleReport counterexample_report_from_json(const Json& j) {
  CounterexampleReport r;
  for (const auto& cj : j.at("cases")) {
    CounterexampleCase c;
    c.name = cj.at("name").get<std::string>();
    c.nondegenerate = cj.at("nondegenerate").get<bool>();
    c.reductive = cj.at("reductive").get<bool>();
    c.expected_nondegenerate = cj.at("expected_nondegenerate").get<bool>();
    c.expected_reductive = cj.at("expected_reductive").get<bool>();
    r.cases.push_back(std::move(c));
  }
  return r;
}

Json to_json(const JointDecomposition& d) {
  Json j;
  j["generic_element"] = to_json(d.generic_element);
  Json blocks = Json::array();
  for (const auto& b : d.blocks) blocks.push_back(to_json(b));
  j["blocks"] = std::move(blocks);
  Json table = Json::array();
  for (const auto& row : d.eigenvalue_table) table.push_back(vec_to_json(row));
  j["eigenvalue_table"] = std::move(table);
  return j;
}

Json analysis_to_json(const std::string& source_name, const LieAlgebra& g) {
  Json j;
  j["source"] = source_name;
  j["algebra"] = structure_constants_to_json(g);

  const BilinearForm killing = killing_form(g);
  const Subalgebra whole = Subalgebra::full(g);
  const ReductivityCertificate cert = reductivity_certificate(whole);

  Json a;
  a["dim"] = g.dim();
  a["killing_gram"] = to_json(killing.gram());
  a["killing_rank"] = rank(killing.gram());
  a["center_dim"] = cert.center.dim();
  a["derived_dim"] = cert.derived.dim();
  a["radical_dim"] = cert.radical.dim();
  a["is_solvable"] = is_solvable(whole);
  a["is_nilpotent"] = is_nilpotent(whole);
  Json checks;
  checks["radical_equals_center"] = cert.checks.radical_equals_center;
  checks["direct_sum_center_derived"] = cert.checks.direct_sum_center_derived;
  checks["derived_killing_nondegenerate"] = cert.checks.derived_killing_nondegenerate;
  checks["center_acts_trivially"] = cert.checks.center_acts_trivially;
  Json certificate;
  certificate["checks"] = std::move(checks);
  certificate["reductive"] = cert.reductive();
  a["certificate"] = std::move(certificate);
  j["analysis"] = std::move(a);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path);
  out << contents;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace liekit
