#include "liekit/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <thread>

#include "liekit/errors.hpp"
#include "liekit/linalg.hpp"
#include "liekit/spectra.hpp"

namespace liekit {

void validate(const TrialConfig& config) {
  if (config.trials < 1) throw InvalidParamsError("TrialConfig: trials >= 1 required");
  if (config.max_generators < 1) {
    throw InvalidParamsError("TrialConfig: max_generators >= 1 required");
  }
  if (config.coefficient_bound < 1) {
    throw InvalidParamsError("TrialConfig: coefficient_bound >= 1 required");
  }
}

std::vector<Vec> random_generators(Rng& rng, std::size_t dim, std::size_t max_generators,
                                   long coefficient_bound) {
  const std::size_t count =
      static_cast<std::size_t>(rng.uniform_int(1, static_cast<long>(max_generators)));
  std::vector<Vec> generators(count, Vec(dim));
  for (auto& g : generators)
    for (auto& x : g) x = Rational(rng.uniform_int(-coefficient_bound, coefficient_bound));
  return generators;
}

Subalgebra random_subalgebra(const LieAlgebra& g, Rng& rng, std::size_t max_generators,
                             long coefficient_bound) {
  return subalgebra_closure(g, random_generators(rng, g.dim(), max_generators, coefficient_bound));
}

namespace {

std::string carrier_key(const Subspace& s) {
  std::ostringstream os;
  os << s.dim();
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.ambient_dim(); ++j) os << "," << s.basis()(i, j).str();
  return os.str();
}

struct TrialVerdict {
  bool nondegenerate = false;
  bool ok = true;  // certificate and corollaries, when non-degenerate
  std::string detail;
};

// The per-carrier work of a theorem trial. Pure in the carrier, so results
// are memoized: random generators revisit the same canonical subalgebras
// constantly.
TrialVerdict evaluate_carrier(const LieAlgebra& g, const BilinearForm& killing,
                              const Subspace& carrier) {
  TrialVerdict verdict;
  const Matrix restricted = restrict_form(killing, carrier);
  verdict.nondegenerate = is_nondegenerate(restricted);
  if (!verdict.nondegenerate) return verdict;

  const Subalgebra sub(g, carrier);
  const ReductivityCertificate cert = reductivity_certificate(sub);
  std::ostringstream failed;
  if (!cert.reductive()) {
    failed << "certificate:";
    if (!cert.checks.radical_equals_center) failed << " radical!=center";
    if (!cert.checks.direct_sum_center_derived) failed << " no-direct-sum";
    if (!cert.checks.derived_killing_nondegenerate) failed << " derived-form-degenerate";
    if (!cert.checks.center_acts_trivially) failed << " center-acts";
    failed << ";";
  }

  // Corollaries of the theorem: the radical is abelian and the ambient form
  // stays non-degenerate on it.
  bool radical_abelian = true;
  for (std::size_t i = 0; i < cert.radical.dim() && radical_abelian; ++i)
    for (std::size_t j = i + 1; j < cert.radical.dim() && radical_abelian; ++j) {
      if (!is_zero_vec(g.bracket(cert.radical.basis_row(i), cert.radical.basis_row(j)))) {
        radical_abelian = false;
      }
    }
  if (!radical_abelian) failed << " radical-not-abelian;";
  if (!is_nondegenerate(restrict_form(killing, cert.radical))) {
    failed << " form-degenerate-on-radical;";
  }

  verdict.detail = failed.str();
  verdict.ok = verdict.detail.empty();
  return verdict;
}

struct WorkerResult {
  std::size_t nondegenerate_hits = 0;
  std::size_t reductive_confirmed = 0;
  std::size_t degenerate_skipped = 0;
  std::vector<Violation> violations;
};

void run_trials(const LieAlgebra& g, const BilinearForm& killing, const TrialConfig& config,
                std::size_t first, std::size_t stride, WorkerResult& out) {
  std::map<std::string, TrialVerdict> cache;
  for (std::size_t t = first; t < config.trials; t += stride) {
    const std::uint64_t trial_seed = mix_seed(config.seed, t);
    Rng rng(trial_seed);
    const std::vector<Vec> generators =
        random_generators(rng, g.dim(), config.max_generators, config.coefficient_bound);
    const Subalgebra h = subalgebra_closure(g, generators);

    const std::string key = carrier_key(h.carrier());
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, evaluate_carrier(g, killing, h.carrier())).first;
    }
    const TrialVerdict& verdict = it->second;

    if (!verdict.nondegenerate) {
      ++out.degenerate_skipped;
      continue;
    }
    ++out.nondegenerate_hits;
    if (verdict.ok) {
      ++out.reductive_confirmed;
    } else {
      out.violations.push_back(Violation{t, trial_seed, generators, verdict.detail});
    }
  }
}

}  // namespace

TrialReport run_theorem_campaign(const TrialConfig& config, unsigned threads) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();

  const CatalogEntry entry = catalog::make(config.algebra_name, config.algebra_params);
  const LieAlgebra& g = entry.algebra;
  const BilinearForm killing = killing_form(g);

  TrialReport report;
  report.config = config;
  report.total = config.trials;

  const unsigned worker_count = std::max(1u, threads);
  std::vector<WorkerResult> results(worker_count);
  if (worker_count == 1) {
    run_trials(g, killing, config, 0, 1, results[0]);
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < worker_count; ++w) {
      workers.emplace_back(
          [&, w] { run_trials(g, killing, config, w, worker_count, results[w]); });
    }
    for (auto& th : workers) th.join();
  }
  for (const WorkerResult& r : results) {
    report.nondegenerate_hits += r.nondegenerate_hits;
    report.reductive_confirmed += r.reductive_confirmed;
    report.degenerate_skipped += r.degenerate_skipped;
    report.violations.insert(report.violations.end(), r.violations.begin(), r.violations.end());
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) { return a.trial_index < b.trial_index; });

  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool CenterQuotientReport::all_ok() const {
  for (const auto& r : results) {
    if (!r.descent_ok || !r.injectivity_ok) return false;
  }
  return true;
}

CenterQuotientReport run_center_quotient_campaign(const std::vector<CatalogEntry>& algebras) {
  CenterQuotientReport report;
  for (const CatalogEntry& entry : algebras) {
    const LieAlgebra& g = entry.algebra;
    CenterQuotientResult result;
    result.algebra = entry.name;
    result.dim = g.dim();
    const Subspace z = center(g);
    result.center_dim = z.dim();

    // quotient_by_center verifies the descent identity internally.
    const CenterQuotient qc = quotient_by_center(g);
    result.descent_ok = true;

    // A non-degenerate subalgebra must miss the center entirely; search a few
    // seeded draws for a positive-dimensional one, falling back to the
    // (vacuously injective) zero subalgebra.
    const BilinearForm killing = killing_form(g);
    Subspace chosen = Subspace::zero(g.dim());
    Rng rng(0x11EB1u + g.dim());
    for (int attempt = 0; attempt < 64; ++attempt) {
      const Subalgebra h = random_subalgebra(g, rng, 3, 3);
      if (h.dim() == 0) continue;
      if (is_nondegenerate(restrict_form(killing, h.carrier()))) {
        chosen = h.carrier();
        break;
      }
    }
    result.subalgebra_dim = chosen.dim();
    // ker(projection) = Z(g), so injectivity on h is h meeting Z trivially.
    result.injectivity_ok = chosen.intersect(z).is_zero() && kernel(qc.projection) == z;
    report.results.push_back(std::move(result));
  }
  return report;
}

namespace {

Matrix random_unimodular(Rng& rng, std::size_t n) {
  Matrix p = Matrix::identity(n);
  const std::size_t shears = 2 * n;
  for (std::size_t s = 0; s < shears; ++s) {
    const std::size_t i = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    const Rational coeff(rng.uniform_int(-1, 1));
    if (coeff.is_zero()) continue;
    for (std::size_t col = 0; col < n; ++col) p(i, col) += coeff * p(j, col);
  }
  return p;
}

// A split matrix with prescribed eigenvalues and nilpotent parts inside the
// repeated-eigenvalue blocks, conjugated by a random unimodular matrix.
Matrix random_split_matrix(Rng& rng, std::size_t n, const Matrix& p, const Matrix& p_inv) {
  Vec diag(n);
  for (auto& d : diag) d = Rational(rng.uniform_int(-3, 3));
  std::sort(diag.begin(), diag.end());
  Matrix jordan = Matrix::diagonal(diag);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (diag[i] == diag[i + 1] && rng.uniform_int(0, 1) == 1) {
      jordan(i, i + 1) = Rational(1);
    }
  }
  return p * jordan * p_inv;
}

std::vector<Matrix> random_commuting_family(Rng& rng, std::size_t n) {
  const Matrix p = random_unimodular(rng, n);
  const Matrix p_inv = inverse(p);
  std::vector<Matrix> family;
  const std::size_t count = static_cast<std::size_t>(rng.uniform_int(2, 3));
  if (rng.uniform_int(0, 1) == 0) {
    // Polynomials in a common split matrix.
    const Matrix m = random_split_matrix(rng, n, p, p_inv);
    for (std::size_t i = 0; i < count; ++i) {
      Matrix poly(n, n);
      Matrix power = Matrix::identity(n);
      for (int deg = 0; deg <= 2; ++deg) {
        const Rational coeff(rng.uniform_int(-2, 2));
        if (!coeff.is_zero()) poly += coeff * power;
        power = power * m;
      }
      family.push_back(std::move(poly));
    }
  } else {
    // Conjugated block-scalar generators with a shared block structure.
    std::vector<std::size_t> sizes;
    std::size_t left = n;
    while (left > 0) {
      const std::size_t s =
          static_cast<std::size_t>(rng.uniform_int(1, static_cast<long>(std::min<std::size_t>(left, 3))));
      sizes.push_back(s);
      left -= s;
    }
    for (std::size_t i = 0; i < count; ++i) {
      Matrix d(n, n);
      std::size_t at = 0;
      for (const std::size_t s : sizes) {
        const Rational value(rng.uniform_int(-3, 3));
        for (std::size_t r = 0; r < s; ++r) d(at + r, at + r) = value;
        at += s;
      }
      family.push_back(p * d * p_inv);
    }
  }
  return family;
}

std::string family_failure_detail(const char* stage, const std::exception& e) {
  return std::string(stage) + ": " + e.what();
}

}  // namespace

DecompositionReport run_decomposition_campaign(const DecompositionConfig& config) {
  if (config.families < 1 || config.max_dim < 2 || config.independence_trials < 1) {
    throw InvalidParamsError("DecompositionConfig: families >= 1, max_dim >= 2, trials >= 1");
  }
  const auto start = std::chrono::steady_clock::now();
  DecompositionReport report;
  report.config = config;

  for (std::size_t f = 0; f < config.families; ++f) {
    const std::uint64_t family_seed = mix_seed(config.seed, f);
    Rng rng(family_seed);
    const std::size_t n =
        static_cast<std::size_t>(rng.uniform_int(2, static_cast<long>(config.max_dim)));
    const std::vector<Matrix> family = random_commuting_family(rng, n);
    ++report.families_run;

    const auto record_failure = [&](const std::string& detail) {
      report.failures.push_back(DecompositionFailure{f, family_seed, family, detail});
    };

    try {
      joint_decomposition(family);
    } catch (const VerificationFailureError& e) {
      record_failure(family_failure_detail("joint_decomposition", e));
      continue;
    }

    try {
      if (!decomposition_independence_check(family, config.independence_trials,
                                            mix_seed(family_seed, 1))) {
        record_failure("independence: block sets differ across generic choices");
      }
      ++report.independence_checks;
    } catch (const VerificationFailureError& e) {
      record_failure(family_failure_detail("independence", e));
    }

    for (std::size_t a = 0; a < family.size(); ++a) {
      const Spectrum sa = spectrum(family[a]);
      for (std::size_t c = 0; c < family.size(); ++c) {
        if (a != c) ++report.commuting_pairs_checked;
        for (const Rational& lambda : sa.values()) {
          for (std::size_t k = 1; k <= n; ++k) {
            ++report.invariance_checks;
            if (!check_commutant_invariance(family[a], family[c], lambda, k)) {
              std::ostringstream os;
              os << "commutant invariance fails: generators " << a << "," << c << " lambda "
                 << lambda << " k " << k;
              record_failure(os.str());
            }
          }
        }
      }
    }
  }

  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool CounterexampleReport::all_pass() const {
  for (const auto& c : cases) {
    if (!c.pass()) return false;
  }
  return true;
}

namespace {

// sl2 with basis order (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra sl2_ehf() {
  const std::size_t d = 3;
  std::vector<Rational> c(d * d * d);
  const auto put = [&](std::size_t i, std::size_t j, std::size_t k, long v) {
    c[(i * d + j) * d + k] = Rational(v);
    c[(j * d + i) * d + k] = Rational(-v);
  };
  put(1, 0, 0, 2);   // [h, e] = 2e
  put(1, 2, 2, -2);  // [h, f] = -2f
  put(0, 2, 1, 1);   // [e, f] = h
  return LieAlgebra(d, std::move(c), {"e", "h", "f"});
}

CounterexampleCase run_case(const std::string& name, const LieAlgebra& g,
                            const std::vector<Vec>& carrier_rows, bool expect_nondeg,
                            bool expect_reductive) {
  const Subalgebra sub(g, Subspace::span(g.dim(), carrier_rows));
  CounterexampleCase result;
  result.name = name;
  result.expected_nondegenerate = expect_nondeg;
  result.expected_reductive = expect_reductive;
  result.nondegenerate = is_nondegenerate(restrict_form(killing_form(g), sub.carrier()));
  result.reductive = reductivity_certificate(sub).reductive();
  return result;
}

Vec unit_vec(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v[i] = Rational(1);
  return v;
}

}  // namespace

CounterexampleReport counterexample_suite() {
  CounterexampleReport report;
  const LieAlgebra sl2 = sl2_ehf();

  // (a) Borel span{h, e}: degenerate restriction and not reductive.
  report.cases.push_back(
      run_case("borel_in_sl2", sl2, {unit_vec(3, 1), unit_vec(3, 0)}, false, false));

  // (b) The nilpotent line span{e}: degenerate restriction, yet reductive as
  // an abelian algebra. The converse of the theorem fails.
  report.cases.push_back(run_case("nilpotent_line_in_sl2", sl2, {unit_vec(3, 0)}, false, true));

  // (c) Diagonal Cartan subalgebra of sl3: non-degenerate and reductive.
  const CatalogEntry sl3 = catalog::sl(3);
  report.cases.push_back(run_case("cartan_in_sl3", sl3.algebra,
                                  {unit_vec(8, 6), unit_vec(8, 7)}, true, true));

  // (d) sl2 in the top-left corner of gl3: non-degenerate and reductive.
  const CatalogEntry gl3 = catalog::gl(3);
  Vec h(9);
  h[0] = Rational(1);   // E11
  h[4] = Rational(-1);  // E22
  report.cases.push_back(run_case("sl2_corner_of_gl3", gl3.algebra,
                                  {unit_vec(9, 1), unit_vec(9, 3), h}, true, true));
  return report;
}

}  // namespace liekit
