#ifndef LIEKIT_POLYNOMIAL_HPP
#define LIEKIT_POLYNOMIAL_HPP

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "liekit/matrix.hpp"
#include "liekit/rational.hpp"

namespace liekit {

// Univariate rational polynomial, coefficients lowest degree first.
// The zero polynomial has an empty coefficient list; otherwise the leading
// coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  // t - r
  static Polynomial linear_root(const Rational& r) { return Polynomial({-r, Rational(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is undefined; callers must check is_zero().
  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }
  Rational coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
  }

  Rational operator()(const Rational& x) const;
  // p(M) with Horner's scheme; M square.
  Matrix operator()(const Matrix& m) const;

  Polynomial derivative() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;

  // Quotient and remainder of division by (t - r).
  std::pair<Polynomial, Rational> divide_linear(const Rational& r) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct RootList {
  std::vector<std::pair<Rational, std::size_t>> roots;  // (root, multiplicity), sorted by root
  bool splits = false;  // degree equals the sum of multiplicities
};

// All rational roots of p with multiplicity. Throws ZeroPolynomialError on
// the zero polynomial.
RootList rational_roots(const Polynomial& p);

// Rational roots when the root set is known to be contained in `candidates`,
// e.g. eigenvalue sums of commuting split matrices. Skips divisor search.
RootList rational_roots_among(const Polynomial& p, const std::vector<Rational>& candidates);

}  // namespace liekit

#endif
