#ifndef LIEKIT_SUBSPACE_HPP
#define LIEKIT_SUBSPACE_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "liekit/matrix.hpp"

namespace liekit {

// Linear subspace of Q^n in canonical form: the basis rows are in reduced
// row-echelon form, so two subspaces are equal iff their basis matrices are
// identical.
class Subspace {
 public:
  // The zero subspace of the given ambient dimension.
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim);
  // Row space of the given vectors, canonicalized.
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static Subspace span(const Matrix& rows);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_row(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  // Coefficients of v in the canonical basis, or nullopt if v is outside.
  std::optional<Vec> coordinates_of(const Vec& v) const;

  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  // Orthogonal complement under the standard dot product.
  Subspace perp() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Subspace& s);

 private:
  std::size_t ambient_;
  Matrix basis_;                      // dim x ambient, reduced row-echelon form
  std::vector<std::size_t> pivots_;   // pivot column of each basis row
};

}  // namespace liekit

#endif
