#ifndef LIEKIT_LINALG_HPP
#define LIEKIT_LINALG_HPP

#include <cstddef>
#include <vector>

#include "liekit/matrix.hpp"
#include "liekit/polynomial.hpp"
#include "liekit/subspace.hpp"

namespace liekit {

struct RrefResult {
  Matrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

// Reduced row-echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Null space {v : m v = 0} with canonical basis.
Subspace kernel(const Matrix& m);

// Exact determinant via fraction-free (Bareiss) elimination on a
// denominator-cleared integer copy. Throws NonSquareError.
Rational det(const Matrix& m);

// Characteristic polynomial det(tI - m), monic, via Faddeev-LeVerrier.
// Throws NonSquareError.
Polynomial charpoly(const Matrix& m);

// Inverse; throws NonSquareError, or Error if singular.
Matrix inverse(const Matrix& m);

}  // namespace liekit

#endif
