#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liekit/catalog.hpp"
#include "liekit/errors.hpp"
#include "liekit/lie_algebra.hpp"
#include "liekit/linalg.hpp"
#include "liekit/rng.hpp"
#include "oracles.hpp"

using namespace liekit;

namespace {

// sl2 with basis order (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra sl2_ehf() {
  const std::size_t d = 3;
  std::vector<Rational> c(d * d * d);
  const auto put = [&](std::size_t i, std::size_t j, std::size_t k, long v) {
    c[(i * d + j) * d + k] = Rational(v);
    c[(j * d + i) * d + k] = Rational(-v);
  };
  put(1, 0, 0, 2);
  put(1, 2, 2, -2);
  put(0, 2, 1, 1);
  return LieAlgebra(d, std::move(c), {"e", "h", "f"});
}

Vec unit(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v[i] = Rational(1);
  return v;
}

Vec int_vec(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

}  // namespace

TEST_CASE("axiom validation") {
  CHECK_NOTHROW(sl2_ehf());
  CHECK_NOTHROW(LieAlgebra(3, std::vector<Rational>(27)));  // abelian

  // c_{01}^0 = c_{10}^0 = 1 breaks antisymmetry.
  std::vector<Rational> bad(8);
  bad[(0 * 2 + 1) * 2 + 0] = Rational(1);
  bad[(1 * 2 + 0) * 2 + 0] = Rational(1);
  const auto violation = check_axioms(2, bad);
  REQUIRE(violation.has_value());
  CHECK(violation->antisymmetry);
  CHECK_THROWS_AS(LieAlgebra(2, bad), AxiomViolationError);

  // Antisymmetric but non-Jacobi: [e0,e1] = e2, [e0,e2] = e0.
  std::vector<Rational> nonjacobi(27);
  const auto put = [&](std::size_t i, std::size_t j, std::size_t k, long v) {
    nonjacobi[(i * 3 + j) * 3 + k] = Rational(v);
    nonjacobi[(j * 3 + i) * 3 + k] = Rational(-v);
  };
  put(0, 1, 2, 1);
  put(0, 2, 0, 1);
  const auto jviolation = check_axioms(3, nonjacobi);
  REQUIRE(jviolation.has_value());
  CHECK(!jviolation->antisymmetry);
  CHECK_THROWS_AS(validate(3, nonjacobi), AxiomViolationError);
}

TEST_CASE("bracket and adjoint") {
  const LieAlgebra sl2 = sl2_ehf();
  CHECK(sl2.bracket(unit(3, 1), unit(3, 0)) == Rational(2) * unit(3, 0));  // [h,e] = 2e
  CHECK(sl2.bracket(unit(3, 0), unit(3, 2)) == unit(3, 1));                // [e,f] = h

  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    Vec x(3);
    for (auto& v : x) v = Rational(rng.uniform_int(-5, 5));
    CHECK(is_zero_vec(sl2.bracket(x, x)));
  }

  const Matrix ad_h = sl2.adjoint(unit(3, 1));
  CHECK(ad_h == Matrix::diagonal(int_vec({2, 0, -2})));
  CHECK(sl2.adjoint(Vec(3)).is_zero());

  const CatalogEntry h3 = catalog::heisenberg(3);
  CHECK(h3.algebra.bracket(unit(3, 0), unit(3, 1)) == unit(3, 2));  // [x,y] = z
  CHECK(h3.algebra.adjoint(unit(3, 2)).is_zero());                  // z central

  CHECK_THROWS_AS(sl2.bracket(unit(3, 0), unit(2, 0)), DimensionMismatchError);
}

TEST_CASE("trace form on matrix units") {
  Matrix e12(2, 2), e21(2, 2);
  e12(0, 1) = Rational(1);
  e21(1, 0) = Rational(1);
  CHECK(trace_form(e12, e21) == Rational(1));
  CHECK(trace_form(e12, e12) == Rational(0));
  CHECK(trace_form(Matrix::identity(5), Matrix::identity(5)) == Rational(5));
  CHECK_THROWS_AS(trace_form(Matrix(2, 2), Matrix(3, 3)), DimensionMismatchError);

  Rng rng(12);
  for (int t = 0; t < 30; ++t) {
    const Matrix a = oracle::random_matrix(rng, 4, -5, 5);
    const Matrix c = oracle::random_matrix(rng, 4, -5, 5);
    CHECK(trace_form(a, c) == trace_form(c, a));
  }
}

TEST_CASE("Killing form golden values") {
  const LieAlgebra sl2 = sl2_ehf();
  const Matrix gram = killing_form(sl2).gram();
  CHECK(gram(1, 1) == Rational(8));  // B(h,h)
  CHECK(gram(0, 2) == Rational(4));  // B(e,f)
  CHECK(gram(2, 0) == Rational(4));
  CHECK(gram(0, 0) == Rational(0));
  CHECK(gram(2, 2) == Rational(0));
  CHECK(gram(0, 1) == Rational(0));
  CHECK(gram(1, 2) == Rational(0));
  CHECK(gram == oracle::killing_gram_bruteforce(sl2));
  CHECK(det(gram) == Rational(-128));

  CHECK(killing_form(catalog::heisenberg(3).algebra).gram().is_zero());
  CHECK(killing_form(catalog::abelian(4).algebra).gram().is_zero());
}

TEST_CASE("Killing form is ad-invariant") {
  for (const LieAlgebra& g : {sl2_ehf(), catalog::heisenberg(3).algebra, catalog::gl(2).algebra}) {
    const BilinearForm b = killing_form(g);
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j)
        for (std::size_t k = 0; k < g.dim(); ++k) {
          const Vec x = unit(g.dim(), i), y = unit(g.dim(), j), z = unit(g.dim(), k);
          CHECK(b(g.bracket(x, y), z) + b(y, g.bracket(x, z)) == Rational(0));
        }
  }
}

TEST_CASE("form restriction and non-degeneracy") {
  const LieAlgebra sl2 = sl2_ehf();
  const BilinearForm b = killing_form(sl2);

  CHECK(restrict_form(b, Subspace::span(3, {unit(3, 1)})) == Matrix{{Rational(8)}});
  CHECK(restrict_form(b, Subspace::span(3, {unit(3, 0)})) == Matrix{{Rational(0)}});

  // span{h, e} canonicalizes to basis order (e, h).
  const Subspace borel = Subspace::span(3, {unit(3, 1), unit(3, 0)});
  const Matrix on_borel = restrict_form(b, borel);
  CHECK(on_borel == Matrix{{Rational(0), Rational(0)}, {Rational(0), Rational(8)}});

  CHECK(is_nondegenerate(Matrix{{Rational(8)}}));
  CHECK(!is_nondegenerate(on_borel));
  CHECK(is_nondegenerate(Matrix(0, 0)));  // empty subalgebra

  CHECK(form_radical(on_borel) == Subspace::span(2, {unit(2, 0)}));
  CHECK(form_radical(restrict_form(b, Subspace::full(3))).is_zero());
  CHECK(form_radical(Matrix(2, 2)) == Subspace::full(2));
}

TEST_CASE("orthogonal complements") {
  const LieAlgebra sl2 = sl2_ehf();
  const BilinearForm b = killing_form(sl2);
  const Subspace full = Subspace::full(3);

  const Subspace e_perp = orthogonal_complement(b, Subspace::span(3, {unit(3, 0)}), full);
  CHECK(e_perp == Subspace::span(3, {unit(3, 0), unit(3, 1)}));

  CHECK(orthogonal_complement(b, Subspace::zero(3), full) == full);

  const Subspace h_line = Subspace::span(3, {unit(3, 1)});
  CHECK(h_line.dim() + orthogonal_complement(b, h_line, full).dim() == 3);
}

TEST_CASE("subalgebra closure") {
  const LieAlgebra sl2 = sl2_ehf();
  CHECK(subalgebra_closure(sl2, {unit(3, 0), unit(3, 2)}).carrier() == Subspace::full(3));
  CHECK(subalgebra_closure(sl2, {unit(3, 1)}).carrier() == Subspace::span(3, {unit(3, 1)}));
  CHECK(subalgebra_closure(sl2, {}).carrier().is_zero());
  CHECK(subalgebra_closure(sl2, {Vec(3)}).carrier().is_zero());  // zero generator

  // A single generator always spans an abelian line.
  CHECK(subalgebra_closure(sl2, {int_vec({1, 0, 1})}).dim() == 1);  // e + f

  // span{e, f} itself is not bracket-closed.
  CHECK_THROWS_AS(Subalgebra(sl2, Subspace::span(3, {unit(3, 0), unit(3, 2)})),
                  NotBracketClosedError);
}

TEST_CASE("center") {
  CHECK(center(catalog::heisenberg(3).algebra) == Subspace::span(3, {unit(3, 2)}));
  CHECK(center(sl2_ehf()).is_zero());
  CHECK(center(catalog::abelian(4).algebra) == Subspace::full(4));
}

TEST_CASE("derived series and solvability") {
  const LieAlgebra sl2 = sl2_ehf();
  const Subalgebra whole = Subalgebra::full(sl2);
  CHECK(derived(whole) == Subspace::full(3));
  CHECK(!is_solvable(whole));
  CHECK(!is_nilpotent(whole));

  const Subalgebra borel(sl2, Subspace::span(3, {unit(3, 1), unit(3, 0)}));
  const auto series = derived_series(borel);
  REQUIRE(series.size() == 3);  // b, span{e}, 0
  CHECK(series[1] == Subspace::span(3, {unit(3, 0)}));
  CHECK(series[2].is_zero());
  CHECK(is_solvable(borel));
  CHECK(!is_nilpotent(borel));

  const Subalgebra h3 = Subalgebra::full(catalog::heisenberg(3).algebra);
  CHECK(is_nilpotent(h3));
  CHECK(lower_central_series(h3).size() == 3);  // h, span{z}, 0
}

TEST_CASE("radical") {
  const LieAlgebra sl2 = sl2_ehf();
  CHECK(radical(Subalgebra::full(sl2)).is_zero());

  const Subspace borel_carrier = Subspace::span(3, {unit(3, 1), unit(3, 0)});
  CHECK(radical(Subalgebra(sl2, borel_carrier)) == borel_carrier);

  const LieAlgebra ab = catalog::abelian(3).algebra;
  CHECK(radical(Subalgebra::full(ab)) == Subspace::full(3));
}

TEST_CASE("reductivity certificates") {
  const LieAlgebra sl2 = sl2_ehf();

  const ReductivityCertificate whole = reductivity_certificate(Subalgebra::full(sl2));
  CHECK(whole.reductive());
  CHECK(whole.center.is_zero());
  CHECK(whole.derived == Subspace::full(3));

  const ReductivityCertificate borel =
      reductivity_certificate(Subalgebra(sl2, Subspace::span(3, {unit(3, 1), unit(3, 0)})));
  CHECK(!borel.reductive());
  CHECK(!borel.checks.radical_equals_center);
  CHECK(borel.radical.dim() == 2);
  CHECK(borel.center.is_zero());

  // Degenerate restriction yet reductive: the converse of the theorem fails.
  const Subspace e_line = Subspace::span(3, {unit(3, 0)});
  CHECK(!is_nondegenerate(restrict_form(killing_form(sl2), e_line)));
  CHECK(reductivity_certificate(Subalgebra(sl2, e_line)).reductive());

  // The empty subalgebra counts as reductive and non-degenerate.
  const ReductivityCertificate empty = reductivity_certificate(Subalgebra(sl2, Subspace::zero(3)));
  CHECK(empty.reductive());
}

TEST_CASE("quotient by the center") {
  const CatalogEntry h3 = catalog::heisenberg(3);
  const CenterQuotient hq = quotient_by_center(h3.algebra);
  CHECK(hq.quotient.dim() == 2);
  bool all_zero = true;
  for (const auto& c : hq.quotient.structure_constants()) all_zero = all_zero && c.is_zero();
  CHECK(all_zero);
  CHECK(killing_form(hq.quotient).gram().is_zero());

  const LieAlgebra sl2 = sl2_ehf();
  const CenterQuotient sq = quotient_by_center(sl2);
  CHECK(sq.quotient.dim() == 3);
  CHECK(sq.projection == Matrix::identity(3));
  CHECK(sq.quotient.structure_constants() == sl2.structure_constants());

  // gl2 has scalar center; the quotient carries sl2 structure.
  const CatalogEntry gl2 = catalog::gl(2);
  const CenterQuotient gq = quotient_by_center(gl2.algebra);
  CHECK(gq.quotient.dim() == 3);
  CHECK(center(gq.quotient).is_zero());
  CHECK(rank(killing_form(gq.quotient).gram()) == 3);
  CHECK(derived(Subalgebra::full(gq.quotient)) == Subspace::full(3));

  // Descent equality, recomputed here on top of the internal verification.
  const Matrix bg = killing_form(gl2.algebra).gram();
  const Matrix bq = killing_form(gq.quotient).gram();
  CHECK(bg == gq.projection.transpose() * bq * gq.projection);

  // ker(projection) is exactly the center.
  CHECK(kernel(gq.projection) == center(gl2.algebra));
}

TEST_CASE("iterated center reduction") {
  CHECK(iterated_center_reduction(catalog::heisenberg(3).algebra).dim() == 0);
  CHECK(iterated_center_reduction(sl2_ehf()).dim() == 3);
  CHECK(iterated_center_reduction(catalog::gl(2).algebra).dim() == 3);
}

TEST_CASE("complexification doubles the Killing form") {
  const LieAlgebra sl2 = sl2_ehf();
  const LieAlgebra sl2c = complexify_as_real(sl2);
  CHECK(sl2c.dim() == 6);
  const Matrix bc = killing_form(sl2c).gram();
  CHECK(bc(1, 1) == Rational(16));  // 2 * B(h,h)
  const Matrix b = killing_form(sl2).gram();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(bc(i, j) == Rational(2) * b(i, j));

  const LieAlgebra abc = complexify_as_real(catalog::abelian(2).algebra);
  CHECK(abc.dim() == 4);
  CHECK(killing_form(abc).gram().is_zero());

  const LieAlgebra h3c = complexify_as_real(catalog::heisenberg(3).algebra);
  CHECK(h3c.dim() == 6);
  CHECK(is_nilpotent(Subalgebra::full(h3c)));
  CHECK(killing_form(h3c).gram().is_zero());
}
