#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liekit/catalog.hpp"
#include "liekit/errors.hpp"
#include "liekit/linalg.hpp"
#include "oracles.hpp"

using namespace liekit;

TEST_CASE("catalog entries carry self-checked facts") {
  // Construction re-verifies every recorded fact, so building is the test;
  // the checks below freeze the expected values.
  const CatalogEntry sl2 = catalog::sl(2);
  CHECK(sl2.algebra.dim() == 3);
  CHECK(sl2.facts.killing_rank == 3);
  CHECK(sl2.facts.center_dim == 0);
  CHECK(sl2.facts.is_semisimple);
  CHECK(!sl2.facts.is_solvable);

  const CatalogEntry h3 = catalog::heisenberg(3);
  CHECK(h3.algebra.dim() == 3);
  CHECK(h3.facts.killing_rank == 0);
  CHECK(h3.facts.center_dim == 1);
  CHECK(h3.facts.is_nilpotent);

  const CatalogEntry ab4 = catalog::abelian(4);
  CHECK(ab4.algebra.dim() == 4);
  CHECK(ab4.facts.killing_rank == 0);
  CHECK(ab4.facts.is_solvable);
  CHECK(ab4.facts.is_nilpotent);
}

TEST_CASE("the whole catalog validates") {
  CHECK_NOTHROW(catalog::abelian(1));
  CHECK_NOTHROW(catalog::abelian(5));
  CHECK_NOTHROW(catalog::heisenberg(5));
  CHECK_NOTHROW(catalog::heisenberg(7));
  CHECK_NOTHROW(catalog::sl(3));
  CHECK_NOTHROW(catalog::gl(3));
  CHECK_NOTHROW(catalog::so(2));
  CHECK_NOTHROW(catalog::so(3));
  CHECK_NOTHROW(catalog::so(4));
  CHECK_NOTHROW(catalog::sp(2));
  CHECK_NOTHROW(catalog::sp(4));
  CHECK_NOTHROW(catalog::upper_triangular(3));
  CHECK_NOTHROW(catalog::strictly_upper(3));
  CHECK_NOTHROW(catalog::make("sl2_plus_heisenberg3", {}));
  CHECK_NOTHROW(catalog::make("semidirect_solvable", {}));
  CHECK_NOTHROW(catalog::make("semidirect_heisenberg_graded", {}));
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(catalog::abelian(0), InvalidParamsError);
  CHECK_THROWS_AS(catalog::heisenberg(4), InvalidParamsError);
  CHECK_THROWS_AS(catalog::heisenberg(1), InvalidParamsError);
  CHECK_THROWS_AS(catalog::sl(1), InvalidParamsError);
  CHECK_THROWS_AS(catalog::sp(3), InvalidParamsError);
  CHECK_THROWS_AS(catalog::make("sl", {}), InvalidParamsError);
  CHECK_THROWS_AS(catalog::make("sl", {2, 3}), InvalidParamsError);
  CHECK_THROWS_AS(catalog::make("nosuch", {1}), InvalidParamsError);
}

TEST_CASE("gl(n) Killing form closed formula") {
  // B(E_ij, E_kl) = 2n d_jk d_il - 2 d_ij d_kl on matrix units, n <= 3 here.
  for (long n : {1L, 2L, 3L}) {
    const CatalogEntry gl = catalog::gl(n);
    const Matrix gram = killing_form(gl.algebra).gram();
    CHECK(gram == oracle::killing_gram_bruteforce(gl.algebra));
    const std::size_t nn = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t j = 0; j < nn; ++j)
        for (std::size_t k = 0; k < nn; ++k)
          for (std::size_t l = 0; l < nn; ++l) {
            const Rational expected = Rational(2 * n) * Rational(j == k && i == l ? 1 : 0) -
                                      Rational(2) * Rational(i == j && k == l ? 1 : 0);
            CHECK(gram(i * nn + j, k * nn + l) == expected);
          }
  }
}

TEST_CASE("classical families are semisimple at desk scale") {
  for (long n : {2L, 3L}) CHECK(catalog::sl(n).facts.is_semisimple);
  CHECK(catalog::so(3).facts.is_semisimple);
  CHECK(catalog::so(4).facts.is_semisimple);
  CHECK(catalog::so(5).facts.is_semisimple);
  CHECK(catalog::sp(2).facts.is_semisimple);
  CHECK(catalog::sp(4).facts.is_semisimple);
  CHECK(catalog::sp(2).facts.killing_rank == 3);
  CHECK(catalog::sp(4).algebra.dim() == 10);
}

TEST_CASE("triangular families") {
  const CatalogEntry t3 = catalog::upper_triangular(3);
  CHECK(t3.algebra.dim() == 6);
  CHECK(t3.facts.is_solvable);
  CHECK(!t3.facts.is_nilpotent);
  CHECK(t3.facts.killing_rank == 2);
  CHECK(t3.facts.center_dim == 1);

  const CatalogEntry n3 = catalog::strictly_upper(3);
  CHECK(n3.algebra.dim() == 3);
  CHECK(n3.facts.is_nilpotent);
  CHECK(n3.facts.killing_rank == 0);
}

TEST_CASE("direct sums compose facts") {
  const CatalogEntry sum = catalog::direct_sum(catalog::sl(2), catalog::heisenberg(3));
  CHECK(sum.algebra.dim() == 6);
  CHECK(sum.facts.killing_rank == 3);
  CHECK(sum.facts.center_dim == 1);
  CHECK(!sum.facts.is_solvable);
  CHECK(!sum.facts.is_semisimple);

  // Brackets across the two summands vanish.
  Vec left(6), right(6);
  left[0] = Rational(1);
  right[4] = Rational(1);
  CHECK(is_zero_vec(sum.algebra.bracket(left, right)));
}

TEST_CASE("semidirect extensions") {
  // The scaling action on the abelian plane: solvable, not nilpotent.
  const CatalogEntry solv = catalog::make("semidirect_solvable", {});
  CHECK(solv.algebra.dim() == 3);
  CHECK(solv.facts.is_solvable);
  CHECK(!solv.facts.is_nilpotent);
  CHECK(solv.facts.killing_rank == 1);

  const CatalogEntry graded = catalog::make("semidirect_heisenberg_graded", {});
  CHECK(graded.algebra.dim() == 4);
  CHECK(graded.facts.is_solvable);
  CHECK(!graded.facts.is_nilpotent);

  // The identity map is not a derivation of heisenberg(3).
  CHECK_THROWS_AS(catalog::semidirect(catalog::heisenberg(3), Matrix::identity(3)),
                  NotADerivationError);
  CHECK_THROWS_AS(catalog::semidirect(catalog::abelian(2), Matrix::identity(3)),
                  InvalidParamsError);
}

TEST_CASE("Killing forms are ad-invariant across the catalog") {
  const std::vector<CatalogEntry> entries{
      catalog::abelian(3),          catalog::heisenberg(5),
      catalog::sl(2),               catalog::sl(3),
      catalog::gl(2),               catalog::so(3),
      catalog::so(4),               catalog::sp(4),
      catalog::upper_triangular(3), catalog::strictly_upper(3),
      catalog::make("sl2_plus_heisenberg3", {}),
      catalog::make("semidirect_solvable", {}),
      catalog::make("semidirect_heisenberg_graded", {}),
  };
  for (const CatalogEntry& entry : entries) {
    const LieAlgebra& g = entry.algebra;
    const BilinearForm b = killing_form(g);
    const std::size_t d = g.dim();
    bool invariant = true;
    for (std::size_t i = 0; i < d && invariant; ++i)
      for (std::size_t j = 0; j < d && invariant; ++j)
        for (std::size_t k = 0; k < d && invariant; ++k) {
          Vec x(d), y(d), z(d);
          x[i] = y[j] = z[k] = Rational(1);
          invariant = b(g.bracket(x, y), z) + b(y, g.bracket(x, z)) == Rational(0);
        }
    CHECK_MESSAGE(invariant, entry.name);
  }
}

TEST_CASE("t(2) derived series reaches zero in two steps") {
  const CatalogEntry t2 = catalog::upper_triangular(2);
  const auto series = derived_series(Subalgebra::full(t2.algebra));
  REQUIRE(series.size() == 3);
  CHECK(series[1].dim() == 1);
  CHECK(series[2].is_zero());
  CHECK(t2.facts.is_solvable);
  CHECK(!t2.facts.is_nilpotent);
}

TEST_CASE("make dispatch matches the direct constructors") {
  CHECK(catalog::make("sl", {2}).algebra.structure_constants() ==
        catalog::sl(2).algebra.structure_constants());
  CHECK(catalog::make("so", {4}).algebra.dim() == 6);
  CHECK(!catalog::names().empty());
}
