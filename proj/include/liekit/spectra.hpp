#ifndef LIEKIT_SPECTRA_HPP
#define LIEKIT_SPECTRA_HPP

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "liekit/matrix.hpp"
#include "liekit/rational.hpp"
#include "liekit/subspace.hpp"

namespace liekit {

struct Spectrum {
  std::vector<std::pair<Rational, std::size_t>> eigenvalues;  // sorted, with multiplicity
  bool splits = false;

  std::size_t distinct_count() const { return eigenvalues.size(); }
  std::vector<Rational> values() const;
};

// Finite set of difference ratios to avoid when forming A + xC.
struct AvoidanceSet {
  std::set<Rational> values;

  bool contains(const Rational& x) const { return values.count(x) > 0; }
};

// ker(A - lambda I)^k; k = 0 gives the zero subspace.
Subspace extended_eigenspace(const Matrix& a, const Rational& lambda, std::size_t k);

// ker(A - lambda I)^d, where the chain has stabilized.
Subspace maximal_extended_eigenspace(const Matrix& a, const Rational& lambda);

// True iff C maps ker(A - lambda I)^k into itself. A and C must commute
// (NotCommutingError otherwise); for commuting inputs this always holds, the
// operation exists as a test oracle.
bool check_commutant_invariance(const Matrix& a, const Matrix& c, const Rational& lambda,
                                std::size_t k);

// Rational eigenvalues with algebraic multiplicity; splits is false when the
// characteristic polynomial has an irrational factor.
Spectrum spectrum(const Matrix& a);

// { (l_i^A - l_j^A) / (l_k^C - l_l^C) } over distinct eigenvalues, nonzero
// differences only. Throws IrrationalSpectrumError unless both spectra split.
AvoidanceSet tau_set(const Matrix& a, const Matrix& c);

struct GenericCombination {
  Rational x;       // smallest positive integer outside tau(A, C)
  Matrix combined;  // A + xC
};

// A + xC for the smallest admissible positive integer x. The result has at
// least as many distinct eigenvalues as either input (asserted).
GenericCombination generic_combination(const Matrix& a, const Matrix& c);

// Element of the family's span with the maximal number of distinct
// eigenvalues, by folding generic_combination over the generators.
Matrix find_generic_element(const std::vector<Matrix>& family);

struct JointDecomposition {
  std::vector<Subspace> blocks;  // the V_j, ordered by the generic eigenvalue
  Matrix generic_element;
  // eigenvalue_table[i][j]: the single eigenvalue of family[i] on blocks[j].
  std::vector<std::vector<Rational>> eigenvalue_table;
};

// Decomposes the space into the maximal extended eigenspaces of a generic
// element of the commuting family, and verifies the three block properties
// (direct sum, invariance, single eigenvalue per generator per block).
JointDecomposition joint_decomposition(const std::vector<Matrix>& family);

// Recomputes the decomposition from several random generic combinations and
// checks all block sets agree.
bool decomposition_independence_check(const std::vector<Matrix>& family, std::size_t trials,
                                      std::uint64_t seed);

// Invertible P with P^-1 M P upper-triangular for every M in the family.
// The bracket closure of the family's span must be solvable
// (NotSolvableError); eigenvalues met along the way must be rational
// (IrrationalSpectrumError).
Matrix triangularize_solvable(const std::vector<Matrix>& family);

// Matrix of m acting on an m-invariant subspace, in the canonical basis.
Matrix restrict_to_invariant(const Matrix& m, const Subspace& block);

}  // namespace liekit

#endif
