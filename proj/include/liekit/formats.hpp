#ifndef LIEKIT_FORMATS_HPP
#define LIEKIT_FORMATS_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "liekit/catalog.hpp"
#include "liekit/harness.hpp"
#include "liekit/lie_algebra.hpp"
#include "liekit/matrix.hpp"
#include "liekit/spectra.hpp"

namespace liekit {

using Json = nlohmann::ordered_json;

// Scalars serialize as "p/q" ("p" when q = 1) everywhere.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

// Structure-constant document: {"dim", "labels", "brackets": [{"i","j",
// "terms": [{"k","c"}]}]} with i < j only; antisymmetric completion is
// implied and unlisted pairs bracket to zero. Loading validates the axioms.
Json structure_constants_to_json(const LieAlgebra& g);
LieAlgebra structure_constants_from_json(const Json& j);

// Matrix-family document: {"dim": n, "matrices": [...]}, row-major entries.
Json family_to_json(const std::vector<Matrix>& family);
std::vector<Matrix> family_from_json(const Json& j);

// Reports. Wall time is excluded from the canonical form so identical
// configurations serialize byte-identically.
Json to_json(const TrialConfig& c);
TrialConfig trial_config_from_json(const Json& j);
Json to_json(const TrialReport& r, bool include_wall_time = false);
TrialReport trial_report_from_json(const Json& j);

Json to_json(const CenterQuotientReport& r);
CenterQuotientReport center_quotient_report_from_json(const Json& j);

Json to_json(const DecompositionReport& r, bool include_wall_time = false);
DecompositionReport decomposition_report_from_json(const Json& j);

Json to_json(const CounterexampleReport& r);
CounterexampleReport counterexample_report_from_json(const Json& j);

Json to_json(const JointDecomposition& d);

// Whole-algebra analysis document (used by the CLI `analyze` verb); embeds
// the structure-constant document so the output re-parses with the loader.
Json analysis_to_json(const std::string& source_name, const LieAlgebra& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);
Json parse_json(const std::string& text);

}  // namespace liekit

#endif
