#include "liekit/lie_algebra.hpp"

#include <sstream>
#include <utility>

#include "liekit/errors.hpp"
#include "liekit/linalg.hpp"

namespace liekit {

std::string AxiomViolation::describe() const {
  std::ostringstream os;
  if (antisymmetry) {
    os << "antisymmetry fails at (i,j,k) = (" << indices[0] << "," << indices[1] << ","
       << indices[2] << ")";
  } else {
    os << "Jacobi identity fails at (i,j,k,l) = (" << indices[0] << "," << indices[1] << ","
       << indices[2] << "," << indices[3] << ")";
  }
  return os.str();
}

std::optional<AxiomViolation> check_axioms(std::size_t dim, const std::vector<Rational>& c) {
  if (c.size() != dim * dim * dim) {
    throw DimensionMismatchError("check_axioms: expected dim^3 structure constants");
  }
  const auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rational& {
    return c[(i * dim + j) * dim + k];
  };
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (at(i, j, k) != -at(j, i, k)) {
          return AxiomViolation{true, {i, j, k, 0}};
        }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = j + 1; k < dim; ++k)
        for (std::size_t l = 0; l < dim; ++l) {
          Rational s;
          for (std::size_t m = 0; m < dim; ++m) {
            s += at(i, j, m) * at(m, k, l);
            s += at(j, k, m) * at(m, i, l);
            s += at(k, i, m) * at(m, j, l);
          }
          if (!s.is_zero()) return AxiomViolation{false, {i, j, k, l}};
        }
  return std::nullopt;
}

void validate(std::size_t dim, const std::vector<Rational>& c) {
  if (auto violation = check_axioms(dim, c)) {
    throw AxiomViolationError(violation->describe(), violation->indices,
                              violation->antisymmetry);
  }
}

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<Rational> structure_constants,
                       std::vector<std::string> basis_labels)
    : dim_(dim), c_(std::move(structure_constants)), labels_(std::move(basis_labels)) {
  validate(dim_, c_);
  if (!labels_.empty() && labels_.size() != dim_) {
    throw DimensionMismatchError("LieAlgebra: label count != dim");
  }
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) {
    throw DimensionMismatchError("bracket: vector length != dim");
  }
  Vec z(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& ck = c(i, j, k);
        if (!ck.is_zero()) z[k] += xy * ck;
      }
    }
  }
  return z;
}

Matrix LieAlgebra::adjoint(const Vec& x) const {
  if (x.size() != dim_) throw DimensionMismatchError("adjoint: vector length != dim");
  Matrix ad(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& ck = c(i, j, k);
        if (!ck.is_zero()) ad(k, j) += x[i] * ck;
      }
  }
  return ad;
}

namespace {

// Coordinates of v in the carrier's canonical basis; NotBracketClosed if v
// falls outside.
Vec carrier_coordinates(const Subspace& carrier, const Vec& v, const char* what) {
  auto coords = carrier.coordinates_of(v);
  if (!coords) {
    throw NotBracketClosedError(std::string(what) + ": bracket leaves the carrier");
  }
  return *coords;
}

}  // namespace

Subalgebra::Subalgebra(LieAlgebra parent, Subspace carrier)
    : parent_(std::move(parent)), carrier_(std::move(carrier)) {
  if (carrier_.ambient_dim() != parent_.dim()) {
    throw AmbientMismatchError("Subalgebra: carrier ambient != parent dim");
  }
  for (std::size_t a = 0; a < carrier_.dim(); ++a)
    for (std::size_t b = a + 1; b < carrier_.dim(); ++b) {
      const Vec w = parent_.bracket(carrier_.basis_row(a), carrier_.basis_row(b));
      if (!carrier_.contains(w)) {
        throw NotBracketClosedError("Subalgebra: carrier is not closed under the bracket");
      }
    }
}

Subalgebra Subalgebra::full(const LieAlgebra& g) {
  return Subalgebra(g, Subspace::full(g.dim()));
}

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square()) throw NonSquareError("BilinearForm: gram must be square");
  if (!gram_.is_symmetric()) throw Error("BilinearForm: gram must be symmetric");
}

Rational BilinearForm::operator()(const Vec& x, const Vec& y) const {
  if (x.size() != ambient_dim() || y.size() != ambient_dim()) {
    throw DimensionMismatchError("BilinearForm: vector length != ambient dim");
  }
  return dot(x, gram_ * y);
}

Rational trace_form(const Matrix& a, const Matrix& c) {
  if (!a.is_square() || !c.is_square() || a.rows() != c.rows()) {
    throw DimensionMismatchError("trace_form: matrices must be square of equal size");
  }
  Rational s;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * c(j, i);
  return s;
}

BilinearForm killing_form(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  std::vector<Matrix> ad(d);
  for (std::size_t i = 0; i < d; ++i) {
    Vec e(d);
    e[i] = Rational(1);
    ad[i] = g.adjoint(e);
  }
  Matrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      gram(i, j) = trace_form(ad[i], ad[j]);
      gram(j, i) = gram(i, j);
    }
  return BilinearForm(std::move(gram));
}

Matrix restrict_form(const BilinearForm& f, const Subspace& s) {
  if (s.ambient_dim() != f.ambient_dim()) {
    throw AmbientMismatchError("restrict_form: ambient dims differ");
  }
  const Matrix& b = s.basis();
  return b * f.gram() * b.transpose();
}

bool is_nondegenerate(const Matrix& symmetric_gram) {
  if (!symmetric_gram.is_square()) throw NonSquareError("is_nondegenerate: not square");
  return !det(symmetric_gram).is_zero();
}

Subspace form_radical(const Matrix& symmetric_gram) {
  if (!symmetric_gram.is_square()) throw NonSquareError("form_radical: not square");
  return kernel(symmetric_gram);
}

Subspace orthogonal_complement(const BilinearForm& f, const Subspace& s, const Subspace& within) {
  if (s.ambient_dim() != f.ambient_dim() || within.ambient_dim() != f.ambient_dim()) {
    throw AmbientMismatchError("orthogonal_complement: ambient dims differ");
  }
  if (within.dim() == 0) return Subspace::zero(f.ambient_dim());
  // v = y W must satisfy (W G S^T) y^T = 0 for the basis rows of s.
  const Matrix constraints = s.basis() * f.gram() * within.basis().transpose();
  const Subspace y_space = kernel(constraints);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < y_space.dim(); ++i) {
    Vec y = y_space.basis_row(i);
    Vec v(f.ambient_dim());
    for (std::size_t a = 0; a < within.dim(); ++a) {
      if (y[a].is_zero()) continue;
      for (std::size_t j = 0; j < f.ambient_dim(); ++j) v[j] += y[a] * within.basis()(a, j);
    }
    rows.push_back(std::move(v));
  }
  return Subspace::span(f.ambient_dim(), rows);
}

Subalgebra subalgebra_closure(const LieAlgebra& g, const std::vector<Vec>& generators) {
  for (const auto& v : generators) {
    if (v.size() != g.dim()) throw DimensionMismatchError("subalgebra_closure: generator length");
  }
  Subspace current = Subspace::span(g.dim(), generators);
  while (true) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < current.dim(); ++i) rows.push_back(current.basis_row(i));
    const std::size_t old_dim = current.dim();
    std::vector<Vec> extended = rows;
    for (std::size_t a = 0; a < old_dim; ++a)
      for (std::size_t b = a + 1; b < old_dim; ++b) {
        Vec w = g.bracket(rows[a], rows[b]);
        if (!current.contains(w)) extended.push_back(std::move(w));
      }
    if (extended.size() == rows.size()) break;
    current = Subspace::span(g.dim(), extended);
    if (current.dim() == old_dim) break;
  }
  return Subalgebra(g, current);
}

Subspace center(const LieAlgebra& g) { return center(Subalgebra::full(g)); }

Subspace center(const Subalgebra& sub) {
  const LieAlgebra& g = sub.parent();
  const Subspace& carrier = sub.carrier();
  const std::size_t r = carrier.dim();
  if (r == 0) return Subspace::zero(g.dim());
  // x = y C with [x, u] = 0 for every carrier basis row u: stack the maps
  // y -> [sum_a y_a C_a, u] and take the kernel.
  Matrix constraints(r * g.dim(), r);
  for (std::size_t u = 0; u < r; ++u) {
    const Vec urow = carrier.basis_row(u);
    for (std::size_t a = 0; a < r; ++a) {
      const Vec w = g.bracket(carrier.basis_row(a), urow);
      for (std::size_t k = 0; k < g.dim(); ++k) constraints(u * g.dim() + k, a) = w[k];
    }
  }
  const Subspace y_space = kernel(constraints);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < y_space.dim(); ++i) {
    const Vec y = y_space.basis_row(i);
    Vec v(g.dim());
    for (std::size_t a = 0; a < r; ++a) {
      if (y[a].is_zero()) continue;
      for (std::size_t j = 0; j < g.dim(); ++j) v[j] += y[a] * carrier.basis()(a, j);
    }
    rows.push_back(std::move(v));
  }
  return Subspace::span(g.dim(), rows);
}

Subspace derived(const Subalgebra& sub) {
  const LieAlgebra& g = sub.parent();
  const Subspace& carrier = sub.carrier();
  std::vector<Vec> rows;
  for (std::size_t a = 0; a < carrier.dim(); ++a)
    for (std::size_t b = a + 1; b < carrier.dim(); ++b) {
      rows.push_back(g.bracket(carrier.basis_row(a), carrier.basis_row(b)));
    }
  return Subspace::span(g.dim(), rows);
}

namespace {

// Span of [a, b] over basis pairs of two subspaces.
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      rows.push_back(g.bracket(a.basis_row(i), b.basis_row(j)));
    }
  return Subspace::span(g.dim(), rows);
}

}  // namespace

std::vector<Subspace> derived_series(const Subalgebra& sub) {
  std::vector<Subspace> series{sub.carrier()};
  while (true) {
    const Subspace& last = series.back();
    Subspace next = bracket_span(sub.parent(), last, last);
    if (next == last) break;
    series.push_back(std::move(next));
    if (series.back().is_zero()) break;
  }
  return series;
}

std::vector<Subspace> lower_central_series(const Subalgebra& sub) {
  std::vector<Subspace> series{sub.carrier()};
  while (true) {
    const Subspace& last = series.back();
    Subspace next = bracket_span(sub.parent(), sub.carrier(), last);
    if (next == last) break;
    series.push_back(std::move(next));
    if (series.back().is_zero()) break;
  }
  return series;
}

bool is_solvable(const Subalgebra& sub) { return derived_series(sub).back().is_zero(); }

bool is_nilpotent(const Subalgebra& sub) { return lower_central_series(sub).back().is_zero(); }

LieAlgebra intrinsic_algebra(const Subalgebra& sub) {
  const LieAlgebra& g = sub.parent();
  const Subspace& carrier = sub.carrier();
  const std::size_t r = carrier.dim();
  std::vector<Rational> c(r * r * r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b) {
      const Vec w = g.bracket(carrier.basis_row(a), carrier.basis_row(b));
      const Vec coords = carrier_coordinates(carrier, w, "intrinsic_algebra");
      for (std::size_t k = 0; k < r; ++k) {
        c[(a * r + b) * r + k] = coords[k];
        c[(b * r + a) * r + k] = -coords[k];
      }
    }
  return LieAlgebra(r, std::move(c));
}

namespace {

// Rows of an intrinsic-coordinate subspace mapped back to ambient coordinates.
Subspace to_ambient(const Subspace& intrinsic, const Subspace& carrier) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < intrinsic.dim(); ++i) {
    const Vec y = intrinsic.basis_row(i);
    Vec v(carrier.ambient_dim());
    for (std::size_t a = 0; a < carrier.dim(); ++a) {
      if (y[a].is_zero()) continue;
      for (std::size_t j = 0; j < carrier.ambient_dim(); ++j) {
        v[j] += y[a] * carrier.basis()(a, j);
      }
    }
    rows.push_back(std::move(v));
  }
  return Subspace::span(carrier.ambient_dim(), rows);
}

}  // namespace

Subspace radical(const Subalgebra& sub) {
  const Subspace& carrier = sub.carrier();
  if (carrier.dim() == 0) return Subspace::zero(carrier.ambient_dim());
  const LieAlgebra h = intrinsic_algebra(sub);
  const BilinearForm bh = killing_form(h);
  const Subspace dh = derived(Subalgebra::full(h));
  const Subspace rad_intrinsic = orthogonal_complement(bh, dh, Subspace::full(h.dim()));
  const Subspace rad = to_ambient(rad_intrinsic, carrier);
  if (!is_solvable(Subalgebra(sub.parent(), rad))) {
    throw InternalInconsistencyError("radical: computed radical is not solvable");
  }
  return rad;
}

ReductivityCertificate reductivity_certificate(const Subalgebra& sub) {
  const LieAlgebra& g = sub.parent();
  const Subspace& carrier = sub.carrier();

  ReductivityCertificate cert{carrier, center(sub), derived(sub), radical(sub), {}};

  cert.checks.radical_equals_center = cert.radical == cert.center;

  cert.checks.direct_sum_center_derived =
      cert.center.sum(cert.derived) == carrier && cert.center.intersect(cert.derived).is_zero();

  // Cartan criterion on [h,h] with its own Killing form.
  const Subalgebra derived_sub(g, cert.derived);
  const LieAlgebra derived_alg = intrinsic_algebra(derived_sub);
  cert.checks.derived_killing_nondegenerate = is_nondegenerate(killing_form(derived_alg).gram());

  bool trivially = true;
  for (std::size_t i = 0; i < cert.center.dim() && trivially; ++i)
    for (std::size_t j = 0; j < carrier.dim() && trivially; ++j) {
      if (!is_zero_vec(g.bracket(cert.center.basis_row(i), carrier.basis_row(j)))) {
        trivially = false;
      }
    }
  cert.checks.center_acts_trivially = trivially;

  return cert;
}

CenterQuotient quotient_by_center(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  const Subspace z = center(g);
  const std::size_t q_dim = d - z.dim();

  // Echelon-pivot complement: the standard basis vectors at non-pivot columns.
  std::vector<bool> is_pivot(d, false);
  for (std::size_t p : z.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t j = 0; j < d; ++j)
    if (!is_pivot[j]) complement.push_back(j);

  // T rows: center basis then complement unit vectors; coordinates of x in
  // this basis are T^-T x, and the projection keeps the complement part.
  Matrix t(d, d);
  for (std::size_t i = 0; i < z.dim(); ++i) t.set_row(i, z.basis_row(i));
  for (std::size_t i = 0; i < q_dim; ++i) t(z.dim() + i, complement[i]) = Rational(1);
  const Matrix t_inv = inverse(t.transpose());
  Matrix projection(q_dim, d);
  for (std::size_t i = 0; i < q_dim; ++i)
    for (std::size_t j = 0; j < d; ++j) projection(i, j) = t_inv(z.dim() + i, j);

  std::vector<Rational> qc(q_dim * q_dim * q_dim);
  for (std::size_t a = 0; a < q_dim; ++a)
    for (std::size_t b = a + 1; b < q_dim; ++b) {
      Vec ea(d), eb(d);
      ea[complement[a]] = Rational(1);
      eb[complement[b]] = Rational(1);
      const Vec image = projection * g.bracket(ea, eb);
      for (std::size_t k = 0; k < q_dim; ++k) {
        qc[(a * q_dim + b) * q_dim + k] = image[k];
        qc[(b * q_dim + a) * q_dim + k] = -image[k];
      }
    }
  LieAlgebra quotient(q_dim, std::move(qc));

  // Descent check: B_g = P^T B_q P entrywise.
  const Matrix bg = killing_form(g).gram();
  const Matrix bq = killing_form(quotient).gram();
  if (bg != projection.transpose() * bq * projection) {
    throw DescentFailureError("quotient_by_center: Killing form does not descend");
  }
  return CenterQuotient{std::move(quotient), std::move(projection)};
}

LieAlgebra iterated_center_reduction(const LieAlgebra& g) {
  LieAlgebra current = g;
  while (!center(current).is_zero()) {
    current = quotient_by_center(current).quotient;
  }
  return current;
}

LieAlgebra complexify_as_real(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  const std::size_t n = 2 * d;
  std::vector<Rational> c(n * n * n);
  const auto put = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    c[(i * n + j) * n + k] = v;
  };
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t k = 0; k < d; ++k) {
        const Rational& v = g.c(a, b, k);
        if (v.is_zero()) continue;
        put(a, b, k, v);              // [e_a, e_b] = sum c e_k
        put(a, d + b, d + k, v);      // [e_a, i e_b] = sum c (i e_k)
        put(d + a, b, d + k, v);      // [i e_a, e_b] = sum c (i e_k)
        put(d + a, d + b, k, -v);     // [i e_a, i e_b] = -sum c e_k
      }
  LieAlgebra result(n, std::move(c));

  const Matrix big = killing_form(g).gram();
  const Matrix bres = killing_form(result).gram();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (bres(i, j) != Rational(2) * big(i, j)) {
        throw InternalInconsistencyError(
            "complexify_as_real: restricted Killing form is not twice the original");
      }
    }
  return result;
}

}  // namespace liekit
