// liekit command-line tool: ingest structure-constant files, analyze
// algebras, run theorem campaigns, decompose commuting families, and take
// center quotients.
//
// Exit codes: 0 success, 1 mathematical finding (theorem violation,
// non-commuting family, unsupported spectrum), 2 usage or parse error.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "liekit/catalog.hpp"
#include "liekit/errors.hpp"
#include "liekit/formats.hpp"
#include "liekit/harness.hpp"
#include "liekit/lie_algebra.hpp"
#include "liekit/spectra.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitFinding = 1;
constexpr int kExitUsage = 2;

struct AlgebraSource {
  std::string input_path;
  std::vector<std::string> catalog_spec;  // name followed by integer parameters
};

liekit::CatalogEntry parse_catalog_spec(const std::vector<std::string>& spec) {
  if (spec.empty()) throw liekit::InvalidParamsError("--catalog requires an algebra name");
  std::vector<long> params;
  for (std::size_t i = 1; i < spec.size(); ++i) {
    try {
      params.push_back(std::stol(spec[i]));
    } catch (const std::exception&) {
      throw liekit::InvalidParamsError("--catalog parameter is not an integer: " + spec[i]);
    }
  }
  return liekit::catalog::make(spec[0], params);
}

// Loads either --input FILE (validated on load) or --catalog NAME PARAMS.
std::pair<std::string, liekit::LieAlgebra> load_algebra(const AlgebraSource& src) {
  if (!src.input_path.empty() && !src.catalog_spec.empty()) {
    throw liekit::InvalidParamsError("use either --input or --catalog, not both");
  }
  if (!src.input_path.empty()) {
    const liekit::Json j = liekit::parse_json(liekit::read_file(src.input_path));
    return {src.input_path, liekit::structure_constants_from_json(j)};
  }
  if (!src.catalog_spec.empty()) {
    liekit::CatalogEntry entry = parse_catalog_spec(src.catalog_spec);
    std::string name = entry.name;
    for (long p : entry.parameters) name += " " + std::to_string(p);
    return {name, std::move(entry.algebra)};
  }
  throw liekit::InvalidParamsError("one of --input or --catalog is required");
}

void emit(const liekit::Json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  std::cout << text;
  if (!out_path.empty()) liekit::write_file(out_path, text);
}

unsigned threads_from_env() {
  const char* raw = std::getenv("LIE_KIT_THREADS");
  if (raw == nullptr) return 1;
  const long value = std::atol(raw);
  return value >= 1 ? static_cast<unsigned>(value) : 1;
}

int run_analyze(const AlgebraSource& src, const std::string& out_path) {
  const auto [name, algebra] = load_algebra(src);
  emit(liekit::analysis_to_json(name, algebra), out_path);
  return kExitSuccess;
}

int run_check_theorem(const std::vector<std::string>& catalog_spec, std::uint64_t seed,
                      std::size_t trials, std::size_t max_gens, long bound,
                      const std::string& out_path) {
  liekit::TrialConfig config;
  {
    const liekit::CatalogEntry entry = parse_catalog_spec(catalog_spec);
    config.algebra_name = catalog_spec[0];
    config.algebra_params = entry.parameters;
  }
  config.seed = seed;
  config.trials = trials;
  config.max_generators = max_gens;
  config.coefficient_bound = bound;
  liekit::validate(config);

  const liekit::TrialReport report = liekit::run_theorem_campaign(config, threads_from_env());
  emit(liekit::to_json(report), out_path);
  std::cerr << "theorem campaign: " << report.total << " trials, " << report.nondegenerate_hits
            << " non-degenerate, " << report.reductive_confirmed << " reductive, "
            << report.degenerate_skipped << " degenerate skipped, " << report.violations.size()
            << " violations (" << report.wall_time_seconds << "s)\n";
  return report.violations.empty() ? kExitSuccess : kExitFinding;
}

int run_decompose(const std::string& input_path, const std::string& out_path) {
  const liekit::Json j = liekit::parse_json(liekit::read_file(input_path));
  const std::vector<liekit::Matrix> family = liekit::family_from_json(j);
  const liekit::JointDecomposition decomposition = liekit::joint_decomposition(family);
  liekit::Json doc;
  doc["source"] = input_path;
  doc["input"] = liekit::family_to_json(family);
  doc["decomposition"] = liekit::to_json(decomposition);
  emit(doc, out_path);
  return kExitSuccess;
}

int run_quotient_center(const AlgebraSource& src, bool iterate, const std::string& out_path) {
  const auto [name, algebra] = load_algebra(src);
  liekit::LieAlgebra current = algebra;
  liekit::Matrix projection = liekit::Matrix::identity(algebra.dim());
  std::size_t iterations = 0;
  while (!liekit::center(current).is_zero()) {
    liekit::CenterQuotient step = liekit::quotient_by_center(current);
    projection = step.projection * projection;
    current = std::move(step.quotient);
    ++iterations;
    if (!iterate) break;
  }
  liekit::Json doc;
  doc["source"] = name;
  doc["input_dim"] = algebra.dim();
  doc["iterations"] = iterations;
  doc["descent_verified"] = true;  // quotient_by_center raises otherwise
  doc["projection"] = liekit::to_json(projection);
  doc["algebra"] = liekit::structure_constants_to_json(current);
  emit(doc, out_path);
  return kExitSuccess;
}

int run_catalog_export(const std::vector<std::string>& catalog_spec, const std::string& out_path) {
  const liekit::CatalogEntry entry = parse_catalog_spec(catalog_spec);
  liekit::Json doc = liekit::structure_constants_to_json(entry.algebra);
  emit(doc, out_path);
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"liekit: exact-arithmetic Lie algebra toolkit"};
  app.require_subcommand(1);

  AlgebraSource analyze_src;
  std::string analyze_out;
  CLI::App* analyze = app.add_subcommand("analyze", "structural analysis of an algebra");
  analyze->add_option("--input", analyze_src.input_path, "structure-constant JSON file");
  analyze->add_option("--catalog", analyze_src.catalog_spec, "catalog name and parameters")
      ->expected(-1);
  analyze->add_option("--out", analyze_out, "also write the document here");

  std::vector<std::string> theorem_catalog;
  std::uint64_t theorem_seed = 1;
  std::size_t theorem_trials = 1000;
  std::size_t theorem_max_gens = 3;
  long theorem_bound = 3;
  std::string theorem_out;
  CLI::App* check = app.add_subcommand("check-theorem", "randomized reductivity campaign");
  check->add_option("--catalog", theorem_catalog, "catalog name and parameters")
      ->expected(-1)
      ->required();
  check->add_option("--trials", theorem_trials, "number of trials");
  check->add_option("--seed", theorem_seed, "campaign seed");
  check->add_option("--max-gens", theorem_max_gens, "maximum generators per subalgebra");
  check->add_option("--bound", theorem_bound, "coefficient bound for generators");
  check->add_option("--out", theorem_out, "also write the report here");

  std::string decompose_input, decompose_out;
  CLI::App* decompose = app.add_subcommand("decompose", "joint decomposition of a commuting family");
  decompose->add_option("--input", decompose_input, "matrix-family JSON file")->required();
  decompose->add_option("--out", decompose_out, "also write the document here");

  AlgebraSource quotient_src;
  bool quotient_iterate = false;
  std::string quotient_out;
  CLI::App* quotient = app.add_subcommand("quotient-center", "quotient by the center");
  quotient->add_option("--input", quotient_src.input_path, "structure-constant JSON file");
  quotient->add_option("--catalog", quotient_src.catalog_spec, "catalog name and parameters")
      ->expected(-1);
  quotient->add_flag("--iterate", quotient_iterate, "repeat until centerless");
  quotient->add_option("--out", quotient_out, "also write the document here");

  std::vector<std::string> export_catalog;
  std::string export_out;
  CLI::App* export_cmd = app.add_subcommand("catalog-export", "emit a structure-constant file");
  export_cmd->add_option("--catalog", export_catalog, "catalog name and parameters")
      ->expected(-1)
      ->required();
  export_cmd->add_option("--out", export_out, "also write the document here");

  try {
    app.parse(argc, argv);
    if (analyze->parsed()) return run_analyze(analyze_src, analyze_out);
    if (check->parsed()) {
      return run_check_theorem(theorem_catalog, theorem_seed, theorem_trials, theorem_max_gens,
                               theorem_bound, theorem_out);
    }
    if (decompose->parsed()) return run_decompose(decompose_input, decompose_out);
    if (quotient->parsed()) return run_quotient_center(quotient_src, quotient_iterate, quotient_out);
    if (export_cmd->parsed()) return run_catalog_export(export_catalog, export_out);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const liekit::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const liekit::AxiomViolationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const liekit::InvalidParamsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const liekit::DimensionMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const liekit::AmbientMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const liekit::Error& e) {
    // Mathematical findings: non-commuting families, irrational spectra, and
    // any verification raise.
    std::cerr << "finding: " << e.what() << "\n";
    return kExitFinding;
  }
}
