#ifndef LIEKIT_LIE_ALGEBRA_HPP
#define LIEKIT_LIE_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liekit/matrix.hpp"
#include "liekit/subspace.hpp"

namespace liekit {

struct AxiomViolation {
  bool antisymmetry;                    // false means Jacobi
  std::array<std::size_t, 4> indices;   // (i,j,k,-) for antisymmetry, (i,j,k,l) for Jacobi
  std::string describe() const;
};

// Finite-dimensional Lie algebra over Q given by structure constants
// c_{ij}^k, meaning [e_i, e_j] = sum_k c_{ij}^k e_k. Antisymmetry and the
// Jacobi identity are enforced at construction.
class LieAlgebra {
 public:
  LieAlgebra(std::size_t dim, std::vector<Rational> structure_constants,
             std::vector<std::string> basis_labels = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Rational>& structure_constants() const { return c_; }

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  Vec bracket(const Vec& x, const Vec& y) const;
  // Matrix of ad_x = [x, .] in the defining basis.
  Matrix adjoint(const Vec& x) const;

 private:
  std::size_t dim_;
  std::vector<Rational> c_;
  std::vector<std::string> labels_;
};

// First axiom violation in raw structure constants, if any.
std::optional<AxiomViolation> check_axioms(std::size_t dim, const std::vector<Rational>& c);
// Throws AxiomViolationError naming the first violating index tuple.
void validate(std::size_t dim, const std::vector<Rational>& c);

// Bracket-closed subspace of a parent algebra. Owns a copy of the parent;
// all values here are small and immutable.
class Subalgebra {
 public:
  Subalgebra(LieAlgebra parent, Subspace carrier);

  const LieAlgebra& parent() const { return parent_; }
  const Subspace& carrier() const { return carrier_; }
  std::size_t dim() const { return carrier_.dim(); }

  static Subalgebra full(const LieAlgebra& g);

 private:
  LieAlgebra parent_;
  Subspace carrier_;
};

// Symmetric bilinear form in a chosen basis.
class BilinearForm {
 public:
  BilinearForm(Matrix gram);

  std::size_t ambient_dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  Rational operator()(const Vec& x, const Vec& y) const;

 private:
  Matrix gram_;
};

// trace(A C) with A, C square of equal size.
Rational trace_form(const Matrix& a, const Matrix& c);

// Killing form B(x, y) = trace(ad_x ad_y) on the defining basis.
BilinearForm killing_form(const LieAlgebra& g);

// Gram matrix of f on the canonical basis of s.
Matrix restrict_form(const BilinearForm& f, const Subspace& s);

// det != 0; the empty 0x0 gram is non-degenerate.
bool is_nondegenerate(const Matrix& symmetric_gram);

// Radical of the form: {v : gram v = 0}.
Subspace form_radical(const Matrix& symmetric_gram);

// {v in within : f(v, s) = 0}.
Subspace orthogonal_complement(const BilinearForm& f, const Subspace& s, const Subspace& within);

// Smallest bracket-closed subspace containing the generators.
Subalgebra subalgebra_closure(const LieAlgebra& g, const std::vector<Vec>& generators);

Subspace center(const LieAlgebra& g);
Subspace center(const Subalgebra& sub);

Subspace derived(const Subalgebra& sub);
std::vector<Subspace> derived_series(const Subalgebra& sub);
std::vector<Subspace> lower_central_series(const Subalgebra& sub);
bool is_solvable(const Subalgebra& sub);
bool is_nilpotent(const Subalgebra& sub);

// The subalgebra as a standalone algebra in the coordinates of its canonical
// carrier basis.
LieAlgebra intrinsic_algebra(const Subalgebra& sub);

// Maximal solvable ideal, via the characteristic-zero identity
// rad(h) = {x in h : B_h(x, [h,h]) = 0} with B_h the intrinsic Killing form.
// The result is asserted solvable.
Subspace radical(const Subalgebra& sub);

struct ReductivityChecks {
  bool radical_equals_center = false;
  bool direct_sum_center_derived = false;
  bool derived_killing_nondegenerate = false;
  bool center_acts_trivially = false;
};

struct ReductivityCertificate {
  Subspace carrier;
  Subspace center;    // Z(h), ambient coordinates
  Subspace derived;   // [h,h]
  Subspace radical;   // rad(h)
  ReductivityChecks checks;

  bool reductive() const {
    return checks.radical_equals_center && checks.direct_sum_center_derived &&
           checks.derived_killing_nondegenerate && checks.center_acts_trivially;
  }
};

ReductivityCertificate reductivity_certificate(const Subalgebra& sub);

struct CenterQuotient {
  LieAlgebra quotient;
  Matrix projection;  // (dim - dim Z) x dim, maps onto the pivot complement of Z
};

// Quotient by the center with the echelon-pivot complement basis. Verifies
// exactly that the Killing form descends: B_g(x,y) = B_q(pi x, pi y) on all
// basis pairs; DescentFailureError otherwise.
CenterQuotient quotient_by_center(const LieAlgebra& g);

// Applies quotient_by_center until the center is zero.
LieAlgebra iterated_center_reduction(const LieAlgebra& g);

// The 2d-dimensional realification of g tensor C, basis {e_1..e_d, ie_1..ie_d}.
// The Killing form of the result restricted to the first d vectors equals
// twice the Killing form of g.
LieAlgebra complexify_as_real(const LieAlgebra& g);

}  // namespace liekit

#endif
