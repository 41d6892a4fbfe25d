#ifndef LIEKIT_HARNESS_HPP
#define LIEKIT_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "liekit/catalog.hpp"
#include "liekit/lie_algebra.hpp"
#include "liekit/rng.hpp"

namespace liekit {

struct TrialConfig {
  std::string algebra_name;
  std::vector<long> algebra_params;
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::size_t max_generators = 3;
  long coefficient_bound = 3;
};

// Throws InvalidParamsError unless trials >= 1, max_generators >= 1,
// coefficient_bound >= 1.
void validate(const TrialConfig& config);

struct Violation {
  std::size_t trial_index = 0;
  std::uint64_t trial_seed = 0;
  std::vector<Vec> generators;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct TrialReport {
  TrialConfig config;
  std::size_t total = 0;
  std::size_t nondegenerate_hits = 0;
  std::size_t reductive_confirmed = 0;
  std::size_t degenerate_skipped = 0;
  std::vector<Violation> violations;
  double wall_time_seconds = 0;  // excluded from the canonical serialization
};

// The generators drawn for one trial: 1..max_generators vectors with entries
// uniform in [-bound, bound].
std::vector<Vec> random_generators(Rng& rng, std::size_t dim, std::size_t max_generators,
                                   long coefficient_bound);

Subalgebra random_subalgebra(const LieAlgebra& g, Rng& rng, std::size_t max_generators,
                             long coefficient_bound);

// For each trial: draw a random subalgebra h, restrict the ambient Killing
// form, and on a non-degenerate restriction require the reductivity
// certificate plus the two corollaries (the radical of h is abelian, and the
// ambient form restricted to the radical is non-degenerate). Failures are
// recorded as violations with a full reproducer, never thrown.
// Trials use partitioned seed streams, so any thread count yields the same
// report.
TrialReport run_theorem_campaign(const TrialConfig& config, unsigned threads = 1);

struct CenterQuotientResult {
  std::string algebra;
  std::size_t dim = 0;
  std::size_t center_dim = 0;
  bool descent_ok = false;
  std::size_t subalgebra_dim = 0;  // harness-chosen non-degenerate subalgebra
  bool injectivity_ok = false;

  friend bool operator==(const CenterQuotientResult&, const CenterQuotientResult&) = default;
};

struct CenterQuotientReport {
  std::vector<CenterQuotientResult> results;

  bool all_ok() const;
};

CenterQuotientReport run_center_quotient_campaign(const std::vector<CatalogEntry>& algebras);

struct DecompositionConfig {
  std::uint64_t seed = 1;
  std::size_t families = 200;
  std::size_t max_dim = 6;
  std::size_t independence_trials = 10;
};

struct DecompositionFailure {
  std::size_t family_index = 0;
  std::uint64_t family_seed = 0;
  std::vector<Matrix> family;
  std::string detail;

  friend bool operator==(const DecompositionFailure&, const DecompositionFailure&) = default;
};

struct DecompositionReport {
  DecompositionConfig config;
  std::size_t families_run = 0;
  std::size_t commuting_pairs_checked = 0;
  std::size_t invariance_checks = 0;
  std::size_t independence_checks = 0;
  std::vector<DecompositionFailure> failures;
  double wall_time_seconds = 0;
};

// Generates commuting families (polynomials in a split matrix with nilpotent
// blocks, and conjugated block-scalar families), then runs the joint
// decomposition with its verifications, the independence check, and
// commutant invariance over every (generator pair, eigenvalue, power).
DecompositionReport run_decomposition_campaign(const DecompositionConfig& config);

struct CounterexampleCase {
  std::string name;
  bool nondegenerate = false;
  bool reductive = false;
  bool expected_nondegenerate = false;
  bool expected_reductive = false;

  bool pass() const {
    return nondegenerate == expected_nondegenerate && reductive == expected_reductive;
  }
  friend bool operator==(const CounterexampleCase&, const CounterexampleCase&) = default;
};

struct CounterexampleReport {
  std::vector<CounterexampleCase> cases;

  bool all_pass() const;
};

// Curated boundary cases: the borel of sl2 (degenerate, not reductive), a
// single nilpotent line (degenerate yet reductive, so the converse fails),
// the diagonal Cartan of sl3, and sl2 embedded in the corner of gl3.
CounterexampleReport counterexample_suite();

}  // namespace liekit

#endif
