#include "liekit/subspace.hpp"

#include <ostream>

#include "liekit/errors.hpp"
#include "liekit/linalg.hpp"

namespace liekit {

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Matrix::identity(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw AmbientMismatchError("span: vector length != ambient dim");
  }
  return span(Matrix::from_rows(ambient_dim, vectors));
}

Subspace Subspace::span(const Matrix& rows) {
  const RrefResult r = rref(rows);
  Subspace s(rows.cols());
  Matrix basis(r.rank, rows.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    for (std::size_t j = 0; j < rows.cols(); ++j) basis(i, j) = r.rref(i, j);
  }
  s.basis_ = std::move(basis);
  s.pivots_ = r.pivots;
  return s;
}

bool Subspace::contains(const Vec& v) const { return coordinates_of(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw AmbientMismatchError("contains: ambient dims differ");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_row(i))) return false;
  }
  return true;
}

std::optional<Vec> Subspace::coordinates_of(const Vec& v) const {
  if (v.size() != ambient_) throw AmbientMismatchError("coordinates_of: length != ambient dim");
  // Rows are in RREF, so the coefficient of basis row i is v at its pivot.
  Vec coords(dim());
  Vec residual = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    coords[i] = residual[pivots_[i]];
    if (coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) residual[j] -= coords[i] * basis_(i, j);
  }
  if (!is_zero_vec(residual)) return std::nullopt;
  return coords;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw AmbientMismatchError("intersect: ambient dims differ");
  // Each subspace is the kernel of its perp's basis; stack the constraints.
  const Subspace pa = perp();
  const Subspace pb = other.perp();
  Matrix stacked(pa.dim() + pb.dim(), ambient_);
  for (std::size_t i = 0; i < pa.dim(); ++i) stacked.set_row(i, pa.basis_row(i));
  for (std::size_t i = 0; i < pb.dim(); ++i) stacked.set_row(pa.dim() + i, pb.basis_row(i));
  return kernel(stacked);
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw AmbientMismatchError("sum: ambient dims differ");
  Matrix stacked(dim() + other.dim(), ambient_);
  for (std::size_t i = 0; i < dim(); ++i) stacked.set_row(i, basis_row(i));
  for (std::size_t i = 0; i < other.dim(); ++i) stacked.set_row(dim() + i, other.basis_row(i));
  return span(stacked);
}

Subspace Subspace::perp() const { return kernel(basis_); }

std::ostream& operator<<(std::ostream& os, const Subspace& s) {
  return os << "Subspace(dim " << s.dim() << " of " << s.ambient_dim() << ")\n" << s.basis();
}

}  // namespace liekit
