// Independent test oracles. These deliberately avoid the library's own
// computation paths: the determinant expands cofactors recursively, expected
// characteristic polynomials are expanded from their roots, and the Killing
// gram is assembled with raw loops straight from the structure constants.
#ifndef LIEKIT_TESTS_ORACLES_HPP
#define LIEKIT_TESTS_ORACLES_HPP

#include <vector>

#include "liekit/lie_algebra.hpp"
#include "liekit/matrix.hpp"
#include "liekit/polynomial.hpp"
#include "liekit/rng.hpp"

namespace oracle {

inline liekit::Rational cofactor_det(const liekit::Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return liekit::Rational(1);
  if (n == 1) return m(0, 0);
  liekit::Rational result;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    liekit::Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    const liekit::Rational term = m(0, j) * cofactor_det(minor);
    result += (j % 2 == 0) ? term : -term;
  }
  return result;
}

// (t - r_1)(t - r_2)... expanded term by term.
inline liekit::Polynomial poly_from_roots(const std::vector<liekit::Rational>& roots) {
  liekit::Polynomial p({liekit::Rational(1)});
  for (const auto& r : roots) p = p * liekit::Polynomial({-r, liekit::Rational(1)});
  return p;
}

// Killing gram by brute force: ad matrices read off the structure constants
// and traces of products summed entry by entry.
inline liekit::Matrix killing_gram_bruteforce(const liekit::LieAlgebra& g) {
  const std::size_t d = g.dim();
  std::vector<liekit::Matrix> ad(d, liekit::Matrix(d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) ad[i](k, j) = g.c(i, j, k);
  liekit::Matrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      liekit::Rational trace;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) trace += ad[i](a, b) * ad[j](b, a);
      gram(i, j) = trace;
    }
  return gram;
}

inline liekit::Matrix random_matrix(liekit::Rng& rng, std::size_t n, long lo, long hi) {
  liekit::Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = liekit::Rational(rng.uniform_int(lo, hi));
  return m;
}

}  // namespace oracle

#endif
