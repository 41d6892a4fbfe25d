#include "liekit/spectra.hpp"

#include <algorithm>

#include "liekit/errors.hpp"
#include "liekit/linalg.hpp"
#include "liekit/polynomial.hpp"
#include "liekit/rng.hpp"

namespace liekit {

std::vector<Rational> Spectrum::values() const {
  std::vector<Rational> v;
  v.reserve(eigenvalues.size());
  for (const auto& [value, mult] : eigenvalues) v.push_back(value);
  return v;
}

namespace {

void require_square(const Matrix& a, const char* what) {
  if (!a.is_square()) throw NonSquareError(std::string(what) + ": matrix is not square");
}

void require_commuting(const Matrix& a, const Matrix& c, const char* what) {
  if (a.rows() != c.rows() || a.cols() != c.cols()) {
    throw DimensionMismatchError(std::string(what) + ": sizes differ");
  }
  if (!commutator(a, c).is_zero()) {
    throw NotCommutingError(std::string(what) + ": matrices do not commute");
  }
}

Matrix shifted(const Matrix& a, const Rational& lambda) {
  Matrix s = a;
  for (std::size_t i = 0; i < a.rows(); ++i) s(i, i) -= lambda;
  return s;
}

Spectrum spectrum_from_roots(const RootList& roots) {
  Spectrum s;
  s.eigenvalues = roots.roots;
  s.splits = roots.splits;
  return s;
}

// Spectrum when all eigenvalues are known to lie in `candidates`; the sums
// rule for commuting split matrices guarantees this along the generic fold.
Spectrum spectrum_among(const Matrix& a, const std::vector<Rational>& candidates) {
  const Spectrum s = spectrum_from_roots(rational_roots_among(charpoly(a), candidates));
  if (!s.splits) {
    throw InternalInconsistencyError("spectrum_among: candidate eigenvalues incomplete");
  }
  return s;
}

AvoidanceSet tau_from_spectra(const Spectrum& sa, const Spectrum& sc) {
  AvoidanceSet tau;
  const auto va = sa.values();
  const auto vc = sc.values();
  for (std::size_t i = 0; i < va.size(); ++i)
    for (std::size_t j = 0; j < va.size(); ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < vc.size(); ++k)
        for (std::size_t l = 0; l < vc.size(); ++l) {
          if (k == l) continue;
          tau.values.insert((va[i] - va[j]) / (vc[k] - vc[l]));
        }
    }
  return tau;
}

Rational smallest_positive_integer_outside(const AvoidanceSet& tau) {
  Rational x(1);
  while (tau.contains(x)) x += Rational(1);
  return x;
}

GenericCombination combine_with_spectra(const Matrix& a, const Spectrum& sa, const Matrix& c,
                                        const Spectrum& sc, Spectrum* combined_spectrum) {
  const AvoidanceSet tau = tau_from_spectra(sa, sc);
  const Rational x = smallest_positive_integer_outside(tau);
  const Matrix combined = a + x * c;

  std::vector<Rational> candidates;
  for (const auto& [la, ma] : sa.eigenvalues)
    for (const auto& [lc, mc] : sc.eigenvalues) candidates.push_back(la + x * lc);
  const Spectrum s = spectrum_among(combined, candidates);
  if (s.distinct_count() < std::max(sa.distinct_count(), sc.distinct_count())) {
    throw InternalInconsistencyError(
        "generic_combination: eigenvalue count dropped below the inputs");
  }
  if (combined_spectrum != nullptr) *combined_spectrum = s;
  return GenericCombination{x, combined};
}

Spectrum split_spectrum_checked(const Matrix& a, const char* what) {
  const Spectrum s = spectrum(a);
  if (!s.splits) {
    throw IrrationalSpectrumError(std::string(what) +
                                  ": characteristic polynomial does not split over Q");
  }
  return s;
}

void require_family(const std::vector<Matrix>& family, const char* what) {
  if (family.empty()) throw InvalidParamsError(std::string(what) + ": empty family");
  for (const auto& m : family) require_square(m, what);
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      require_commuting(family[i], family[j], what);
    }
}

Matrix generic_element_with_spectrum(const std::vector<Matrix>& family, Spectrum* out_spectrum) {
  Matrix generic = family.front();
  Spectrum spec = split_spectrum_checked(generic, "find_generic_element");
  for (std::size_t i = 1; i < family.size(); ++i) {
    const Spectrum next = split_spectrum_checked(family[i], "find_generic_element");
    Spectrum combined_spec;
    const GenericCombination combo =
        combine_with_spectra(generic, spec, family[i], next, &combined_spec);
    generic = combo.combined;
    spec = combined_spec;
  }
  if (out_spectrum != nullptr) *out_spectrum = spec;
  return generic;
}

// Blocks of the maximal extended eigenspaces of `generic`, sorted by
// eigenvalue, with the direct-sum verification.
std::vector<Subspace> blocks_of(const Matrix& generic, const Spectrum& spec, const char* what) {
  const std::size_t n = generic.rows();
  std::vector<Subspace> blocks;
  std::size_t dim_sum = 0;
  Subspace running = Subspace::zero(n);
  for (const auto& [lambda, mult] : spec.eigenvalues) {
    Subspace block = maximal_extended_eigenspace(generic, lambda);
    dim_sum += block.dim();
    running = running.sum(block);
    blocks.push_back(std::move(block));
  }
  if (dim_sum != n || !running.is_full()) {
    throw VerificationFailureError(std::string(what) + ": blocks do not sum directly to the space");
  }
  return blocks;
}

}  // namespace

Subspace extended_eigenspace(const Matrix& a, const Rational& lambda, std::size_t k) {
  require_square(a, "extended_eigenspace");
  if (k == 0) return Subspace::zero(a.rows());
  return kernel(shifted(a, lambda).power(k));
}

Subspace maximal_extended_eigenspace(const Matrix& a, const Rational& lambda) {
  require_square(a, "maximal_extended_eigenspace");
  return extended_eigenspace(a, lambda, a.rows());
}

bool check_commutant_invariance(const Matrix& a, const Matrix& c, const Rational& lambda,
                                std::size_t k) {
  require_square(a, "check_commutant_invariance");
  require_commuting(a, c, "check_commutant_invariance");
  const Subspace space = extended_eigenspace(a, lambda, k);
  for (std::size_t i = 0; i < space.dim(); ++i) {
    if (!space.contains(c * space.basis_row(i))) return false;
  }
  return true;
}

Spectrum spectrum(const Matrix& a) {
  require_square(a, "spectrum");
  return spectrum_from_roots(rational_roots(charpoly(a)));
}

AvoidanceSet tau_set(const Matrix& a, const Matrix& c) {
  const Spectrum sa = split_spectrum_checked(a, "tau_set");
  const Spectrum sc = split_spectrum_checked(c, "tau_set");
  return tau_from_spectra(sa, sc);
}

GenericCombination generic_combination(const Matrix& a, const Matrix& c) {
  require_commuting(a, c, "generic_combination");
  const Spectrum sa = split_spectrum_checked(a, "generic_combination");
  const Spectrum sc = split_spectrum_checked(c, "generic_combination");
  return combine_with_spectra(a, sa, c, sc, nullptr);
}

Matrix find_generic_element(const std::vector<Matrix>& family) {
  require_family(family, "find_generic_element");
  Spectrum spec;
  const Matrix generic = generic_element_with_spectrum(family, &spec);
  // Certify maximality: every generator must act with a single eigenvalue on
  // each block of the induced decomposition.
  const std::vector<Subspace> blocks = blocks_of(generic, spec, "find_generic_element");
  for (const Matrix& m : family) {
    const Spectrum sm = split_spectrum_checked(m, "find_generic_element");
    for (const Subspace& block : blocks) {
      const Matrix r = restrict_to_invariant(m, block);
      const Spectrum sr = spectrum_among(r, sm.values());
      if (sr.distinct_count() != 1 && block.dim() > 0) {
        throw VerificationFailureError(
            "find_generic_element: a generator has several eigenvalues on a block");
      }
    }
  }
  return generic;
}

JointDecomposition joint_decomposition(const std::vector<Matrix>& family) {
  require_family(family, "joint_decomposition");
  Spectrum spec;
  JointDecomposition out;
  out.generic_element = generic_element_with_spectrum(family, &spec);
  out.blocks = blocks_of(out.generic_element, spec, "joint_decomposition");

  out.eigenvalue_table.resize(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Spectrum si = split_spectrum_checked(family[i], "joint_decomposition");
    for (const Subspace& block : out.blocks) {
      const Matrix r = restrict_to_invariant(family[i], block);  // throws if not invariant
      const Spectrum sr = spectrum_among(r, si.values());
      if (sr.distinct_count() != 1) {
        throw VerificationFailureError(
            "joint_decomposition: a generator has several eigenvalues on a block");
      }
      out.eigenvalue_table[i].push_back(sr.eigenvalues.front().first);
    }
  }
  return out;
}

bool decomposition_independence_check(const std::vector<Matrix>& family, std::size_t trials,
                                      std::uint64_t seed) {
  const JointDecomposition reference = joint_decomposition(family);
  const std::size_t max_count = reference.blocks.size();
  const std::size_t n = family.front().rows();

  const auto same_block_set = [&](const std::vector<Subspace>& blocks) {
    if (blocks.size() != reference.blocks.size()) return false;
    for (const Subspace& b : blocks) {
      if (std::find(reference.blocks.begin(), reference.blocks.end(), b) ==
          reference.blocks.end()) {
        return false;
      }
    }
    return true;
  };

  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Rational> coeffs(family.size());
    for (auto& c : coeffs) c = Rational(rng.uniform_int(-9, 9));
    Matrix m(n, n);
    for (std::size_t i = 0; i < family.size(); ++i) m += coeffs[i] * family[i];

    // Eigenvalues of the combination are the per-block weighted sums.
    std::vector<Rational> candidates;
    for (std::size_t j = 0; j < max_count; ++j) {
      Rational sum;
      for (std::size_t i = 0; i < family.size(); ++i) {
        sum += coeffs[i] * reference.eigenvalue_table[i][j];
      }
      candidates.push_back(sum);
    }
    const Spectrum sm = spectrum_among(m, candidates);
    if (sm.distinct_count() < max_count) continue;  // not a generic choice

    std::vector<Subspace> blocks;
    for (const auto& [lambda, mult] : sm.eigenvalues) {
      blocks.push_back(maximal_extended_eigenspace(m, lambda));
    }
    if (!same_block_set(blocks)) return false;
  }
  return true;
}

Matrix restrict_to_invariant(const Matrix& m, const Subspace& block) {
  if (m.cols() != block.ambient_dim()) {
    throw AmbientMismatchError("restrict_to_invariant: ambient dims differ");
  }
  const std::size_t r = block.dim();
  Matrix restricted(r, r);
  for (std::size_t a = 0; a < r; ++a) {
    const auto coords = block.coordinates_of(m * block.basis_row(a));
    if (!coords) {
      throw VerificationFailureError("restrict_to_invariant: subspace is not invariant");
    }
    for (std::size_t b = 0; b < r; ++b) restricted(b, a) = (*coords)[b];
  }
  return restricted;
}

namespace {

// --- simultaneous triangularization ---------------------------------------

std::vector<Vec> vectorize_all(const std::vector<Matrix>& mats) {
  std::vector<Vec> rows;
  rows.reserve(mats.size());
  for (const Matrix& m : mats) {
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    rows.push_back(std::move(v));
  }
  return rows;
}

Matrix unvectorize(const Vec& v, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

// Basis of the span of the matrices, as matrices.
std::vector<Matrix> span_basis(const std::vector<Matrix>& mats, std::size_t n) {
  const Subspace s = Subspace::span(n * n, vectorize_all(mats));
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < s.dim(); ++i) basis.push_back(unvectorize(s.basis_row(i), n));
  return basis;
}

// Closure of the span under the matrix commutator.
std::vector<Matrix> bracket_closure(const std::vector<Matrix>& mats, std::size_t n) {
  std::vector<Matrix> basis = span_basis(mats, n);
  while (true) {
    std::vector<Matrix> extended = basis;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        extended.push_back(commutator(basis[i], basis[j]));
      }
    std::vector<Matrix> next = span_basis(extended, n);
    if (next.size() == basis.size()) return basis;
    basis = std::move(next);
  }
}

bool span_is_solvable(std::vector<Matrix> basis, std::size_t n) {
  while (!basis.empty()) {
    std::vector<Matrix> brackets;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        brackets.push_back(commutator(basis[i], basis[j]));
      }
    std::vector<Matrix> next = span_basis(brackets, n);
    if (next.size() == basis.size()) return false;
    basis = std::move(next);
  }
  return true;
}

// Common eigenvector of a solvable matrix Lie algebra (Lie's theorem,
// constructive form). `generators` span the algebra acting on Q^n.
Vec common_eigenvector(const std::vector<Matrix>& generators, std::size_t n) {
  const std::vector<Matrix> algebra = span_basis(generators, n);
  if (algebra.empty()) {
    Vec e(n);
    e[0] = Rational(1);
    return e;
  }

  // Split off a codimension-1 ideal containing the derived algebra; any
  // such subspace is automatically an ideal.
  std::vector<Matrix> derived;
  for (std::size_t i = 0; i < algebra.size(); ++i)
    for (std::size_t j = i + 1; j < algebra.size(); ++j) {
      derived.push_back(commutator(algebra[i], algebra[j]));
    }
  Subspace running = Subspace::span(n * n, vectorize_all(derived));
  if (running.dim() >= algebra.size()) {
    throw InternalInconsistencyError("common_eigenvector: derived algebra did not shrink");
  }
  for (const Matrix& m : algebra) {
    if (running.dim() + 1 == algebra.size()) break;
    const Vec v = vectorize_all({m}).front();
    if (!running.contains(v)) running = running.sum(Subspace::span(n * n, {v}));
  }
  std::vector<Matrix> ideal_basis;
  for (std::size_t i = 0; i < running.dim(); ++i) {
    ideal_basis.push_back(unvectorize(running.basis_row(i), n));
  }
  Matrix outside(0, 0);
  for (const Matrix& m : algebra) {
    if (!running.contains(vectorize_all({m}).front())) {
      outside = m;
      break;
    }
  }
  if (outside.rows() == 0) {
    throw InternalInconsistencyError("common_eigenvector: no element outside the ideal");
  }

  const Vec v0 = common_eigenvector(ideal_basis, n);

  // Joint eigenspace W for the weight carried by v0; it is invariant under
  // the whole algebra (char 0), so the outside element restricts to it.
  Subspace w = Subspace::full(n);
  for (const Matrix& m : ideal_basis) {
    const Vec mv = m * v0;
    // eigenvalue of m at v0: mv = lambda v0 with v0 != 0
    std::size_t pivot = 0;
    while (v0[pivot].is_zero()) ++pivot;
    const Rational lambda = mv[pivot] / v0[pivot];
    w = w.intersect(kernel(shifted(m, lambda)));
  }
  if (w.is_zero()) {
    throw InternalInconsistencyError("common_eigenvector: empty joint eigenspace");
  }

  Matrix restricted(w.dim(), w.dim());
  try {
    restricted = restrict_to_invariant(outside, w);
  } catch (const VerificationFailureError&) {
    throw InternalInconsistencyError("common_eigenvector: weight space is not invariant");
  }
  const RootList roots = rational_roots(charpoly(restricted));
  if (roots.roots.empty()) {
    throw IrrationalSpectrumError(
        "triangularize_solvable: a common eigenvalue is not rational");
  }
  const Rational mu = roots.roots.front().first;
  const Subspace eig = kernel(shifted(restricted, mu));
  const Vec y = eig.basis_row(0);
  Vec result(n);
  for (std::size_t a = 0; a < w.dim(); ++a) {
    if (y[a].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) result[j] += y[a] * w.basis()(a, j);
  }
  return result;
}

// Completes v (nonzero) to a basis of Q^n using unit vectors off its pivot.
Matrix basis_through(const Vec& v, std::size_t n) {
  std::size_t pivot = 0;
  while (v[pivot].is_zero()) ++pivot;
  Matrix q(n, n);
  for (std::size_t i = 0; i < n; ++i) q(i, 0) = v[i];
  std::size_t col = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == pivot) continue;
    q(j, col) = Rational(1);
    ++col;
  }
  return q;
}

Matrix triangularize_recursive(const std::vector<Matrix>& algebra, std::size_t n) {
  if (n <= 1) return Matrix::identity(n);
  const Vec v = common_eigenvector(algebra, n);
  const Matrix q = basis_through(v, n);
  const Matrix q_inv = inverse(q);

  // In the new basis every element has first column (mu, 0, ..., 0)^T;
  // recurse on the lower-right block.
  std::vector<Matrix> tail;
  tail.reserve(algebra.size());
  for (const Matrix& m : algebra) {
    const Matrix t = q_inv * m * q;
    Matrix block(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 1; j < n; ++j) block(i - 1, j - 1) = t(i, j);
    tail.push_back(std::move(block));
  }
  const Matrix p_tail = triangularize_recursive(tail, n - 1);
  Matrix embedded = Matrix::identity(n);
  for (std::size_t i = 0; i < n - 1; ++i)
    for (std::size_t j = 0; j < n - 1; ++j) embedded(i + 1, j + 1) = p_tail(i, j);
  return q * embedded;
}

}  // namespace

Matrix triangularize_solvable(const std::vector<Matrix>& family) {
  if (family.empty()) throw InvalidParamsError("triangularize_solvable: empty family");
  const std::size_t n = family.front().rows();
  for (const Matrix& m : family) {
    require_square(m, "triangularize_solvable");
    if (m.rows() != n) throw DimensionMismatchError("triangularize_solvable: sizes differ");
  }
  const std::vector<Matrix> algebra = bracket_closure(family, n);
  if (!span_is_solvable(algebra, n)) {
    throw NotSolvableError("triangularize_solvable: the family generates a non-solvable algebra");
  }
  const Matrix p = triangularize_recursive(algebra, n);
  const Matrix p_inv = inverse(p);
  for (const Matrix& m : family) {
    if (!(p_inv * m * p).is_upper_triangular()) {
      throw VerificationFailureError("triangularize_solvable: conjugation is not triangular");
    }
  }
  return p;
}

}  // namespace liekit
