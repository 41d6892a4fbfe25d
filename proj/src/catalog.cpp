#include "liekit/catalog.hpp"

#include <sstream>
#include <utility>

#include "liekit/errors.hpp"
#include "liekit/linalg.hpp"

namespace liekit {
namespace catalog {

namespace {

Vec vectorize(const Matrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

// Structure constants of the span of linearly independent matrices closed
// under the commutator, by re-expressing each commutator in the given basis.
LieAlgebra from_matrix_basis(const std::vector<Matrix>& basis,
                             std::vector<std::string> labels) {
  const std::size_t d = basis.size();
  if (d == 0) return LieAlgebra(0, {});
  const std::size_t n = basis.front().rows();

  // Columns of this system are the vectorized basis elements.
  Matrix system(n * n, d);
  std::vector<Vec> vectorized;
  for (std::size_t b = 0; b < d; ++b) {
    vectorized.push_back(vectorize(basis[b]));
    for (std::size_t r = 0; r < n * n; ++r) system(r, b) = vectorized.back()[r];
  }
  if (Subspace::span(n * n, vectorized).dim() != d) {
    throw InvalidParamsError("from_matrix_basis: basis matrices are dependent");
  }

  // Solve system * x = w for each commutator via one shared elimination.
  std::vector<Rational> c(d * d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      const Vec w = vectorize(commutator(basis[a], basis[b]));
      Matrix aug(n * n, d + 1);
      for (std::size_t r = 0; r < n * n; ++r) {
        for (std::size_t col = 0; col < d; ++col) aug(r, col) = system(r, col);
        aug(r, d) = w[r];
      }
      const RrefResult rr = rref(aug);
      if (!rr.pivots.empty() && rr.pivots.back() == d) {
        throw InvalidParamsError("from_matrix_basis: commutator escapes the span");
      }
      Vec x(d);
      for (std::size_t row = 0; row < rr.rank; ++row) x[rr.pivots[row]] = rr.rref(row, d);
      for (std::size_t k = 0; k < d; ++k) {
        c[(a * d + b) * d + k] = x[k];
        c[(b * d + a) * d + k] = -x[k];
      }
    }
  return LieAlgebra(d, std::move(c), std::move(labels));
}

Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = Rational(1);
  return m;
}

std::string idx_label(const std::string& prefix, std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << prefix << i + 1 << j + 1;
  return os.str();
}

KnownFacts computed_facts(const LieAlgebra& g) {
  KnownFacts f;
  f.killing_rank = rank(killing_form(g).gram());
  f.center_dim = center(g).dim();
  const Subalgebra whole = Subalgebra::full(g);
  f.is_solvable = is_solvable(whole);
  f.is_nilpotent = is_nilpotent(whole);
  f.is_semisimple = g.dim() > 0 && f.killing_rank == g.dim();
  return f;
}

CatalogEntry finish(std::string name, std::vector<long> params, LieAlgebra algebra,
                    const KnownFacts& expected) {
  const KnownFacts actual = computed_facts(algebra);
  if (actual.killing_rank != expected.killing_rank || actual.center_dim != expected.center_dim ||
      actual.is_solvable != expected.is_solvable || actual.is_nilpotent != expected.is_nilpotent ||
      actual.is_semisimple != expected.is_semisimple) {
    throw InternalInconsistencyError("catalog: computed facts disagree with the recorded ones for " +
                                     name);
  }
  return CatalogEntry{std::move(name), std::move(params), std::move(algebra), actual};
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw InvalidParamsError(msg);
}

}  // namespace

CatalogEntry abelian(long n) {
  require(n >= 1, "abelian: n >= 1 required");
  const std::size_t d = static_cast<std::size_t>(n);
  LieAlgebra g(d, std::vector<Rational>(d * d * d));
  KnownFacts f{0, d, true, true, false};
  return finish("abelian", {n}, std::move(g), f);
}

CatalogEntry heisenberg(long n) {
  require(n >= 3 && n % 2 == 1, "heisenberg: odd n >= 3 required");
  const std::size_t d = static_cast<std::size_t>(n);
  const std::size_t k = (d - 1) / 2;
  std::vector<Rational> c(d * d * d);
  const auto put = [&](std::size_t i, std::size_t j, std::size_t l, long v) {
    c[(i * d + j) * d + l] = Rational(v);
  };
  // [x_i, y_i] = z with basis order x_1..x_k, y_1..y_k, z.
  for (std::size_t i = 0; i < k; ++i) {
    put(i, k + i, d - 1, 1);
    put(k + i, i, d - 1, -1);
  }
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= k; ++i) labels.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= k; ++i) labels.push_back("y" + std::to_string(i));
  labels.push_back("z");
  LieAlgebra g(d, std::move(c), std::move(labels));
  KnownFacts f{0, 1, true, true, false};
  return finish("heisenberg", {n}, std::move(g), f);
}

CatalogEntry sl(long n) {
  require(n >= 2, "sl: n >= 2 required");
  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j) {
      if (i == j) continue;
      basis.push_back(unit(nn, i, j));
      labels.push_back(idx_label("E", i, j));
    }
  for (std::size_t i = 0; i + 1 < nn; ++i) {
    basis.push_back(unit(nn, i, i) - unit(nn, i + 1, i + 1));
    labels.push_back("H" + std::to_string(i + 1));
  }
  LieAlgebra g = from_matrix_basis(basis, std::move(labels));
  KnownFacts f{nn * nn - 1, 0, false, false, true};
  return finish("sl", {n}, std::move(g), f);
}

CatalogEntry gl(long n) {
  require(n >= 1, "gl: n >= 1 required");
  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j) {
      basis.push_back(unit(nn, i, j));
      labels.push_back(idx_label("E", i, j));
    }
  LieAlgebra g = from_matrix_basis(basis, std::move(labels));
  KnownFacts f{nn * nn - 1, 1, n == 1, n == 1, false};
  return finish("gl", {n}, std::move(g), f);
}

CatalogEntry so(long n) {
  require(n >= 2, "so: n >= 2 required");
  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = i + 1; j < nn; ++j) {
      basis.push_back(unit(nn, i, j) - unit(nn, j, i));
      labels.push_back(idx_label("A", i, j));
    }
  LieAlgebra g = from_matrix_basis(basis, std::move(labels));
  const std::size_t d = nn * (nn - 1) / 2;
  KnownFacts f;
  if (n == 2) {
    f = KnownFacts{0, 1, true, true, false};
  } else {
    f = KnownFacts{d, 0, false, false, true};
  }
  return finish("so", {n}, std::move(g), f);
}

CatalogEntry sp(long m) {
  require(m >= 2 && m % 2 == 0, "sp: even m >= 2 required");
  const std::size_t k = static_cast<std::size_t>(m) / 2;
  const std::size_t nn = 2 * k;
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  // Block form [[A, B], [C, -A^T]] with B, C symmetric.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Matrix x(nn, nn);
      x(i, j) = Rational(1);
      x(k + j, k + i) = Rational(-1);
      basis.push_back(std::move(x));
      labels.push_back(idx_label("A", i, j));
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Matrix x(nn, nn);
      x(i, k + j) = Rational(1);
      x(j, k + i) = Rational(1);
      basis.push_back(std::move(x));
      labels.push_back(idx_label("B", i, j));
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Matrix x(nn, nn);
      x(k + i, j) = Rational(1);
      x(k + j, i) = Rational(1);
      basis.push_back(std::move(x));
      labels.push_back(idx_label("C", i, j));
    }
  LieAlgebra g = from_matrix_basis(basis, std::move(labels));
  KnownFacts f{k * (2 * k + 1), 0, false, false, true};
  return finish("sp", {m}, std::move(g), f);
}

CatalogEntry upper_triangular(long n) {
  require(n >= 1, "upper_triangular: n >= 1 required");
  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = i; j < nn; ++j) {
      basis.push_back(unit(nn, i, j));
      labels.push_back(idx_label("E", i, j));
    }
  LieAlgebra g = from_matrix_basis(basis, std::move(labels));
  KnownFacts f{nn - 1, 1, true, n == 1, false};
  return finish("upper_triangular", {n}, std::move(g), f);
}

CatalogEntry strictly_upper(long n) {
  require(n >= 2, "strictly_upper: n >= 2 required");
  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = i + 1; j < nn; ++j) {
      basis.push_back(unit(nn, i, j));
      labels.push_back(idx_label("E", i, j));
    }
  LieAlgebra g = from_matrix_basis(basis, std::move(labels));
  KnownFacts f{0, 1, true, true, false};
  return finish("strictly_upper", {n}, std::move(g), f);
}

CatalogEntry direct_sum(const CatalogEntry& a, const CatalogEntry& b) {
  const std::size_t da = a.algebra.dim(), db = b.algebra.dim();
  const std::size_t d = da + db;
  std::vector<Rational> c(d * d * d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < da; ++k) c[(i * d + j) * d + k] = a.algebra.c(i, j, k);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < db; ++k) {
        c[((da + i) * d + (da + j)) * d + (da + k)] = b.algebra.c(i, j, k);
      }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < da; ++i) {
    labels.push_back("a." + (a.algebra.labels().empty() ? "e" + std::to_string(i + 1)
                                                        : a.algebra.labels()[i]));
  }
  for (std::size_t i = 0; i < db; ++i) {
    labels.push_back("b." + (b.algebra.labels().empty() ? "e" + std::to_string(i + 1)
                                                        : b.algebra.labels()[i]));
  }
  LieAlgebra g(d, std::move(c), std::move(labels));
  KnownFacts f{a.facts.killing_rank + b.facts.killing_rank,
               a.facts.center_dim + b.facts.center_dim,
               a.facts.is_solvable && b.facts.is_solvable,
               a.facts.is_nilpotent && b.facts.is_nilpotent,
               a.facts.is_semisimple && b.facts.is_semisimple};
  return finish(a.name + "+" + b.name, {}, std::move(g), f);
}

CatalogEntry semidirect(const CatalogEntry& a, const Matrix& derivation) {
  const std::size_t da = a.algebra.dim();
  if (!derivation.is_square() || derivation.rows() != da) {
    throw InvalidParamsError("semidirect: derivation must be dim(a) x dim(a)");
  }
  // Leibniz identity on basis pairs: D[x,y] = [Dx,y] + [x,Dy].
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = i + 1; j < da; ++j) {
      Vec ei(da), ej(da);
      ei[i] = Rational(1);
      ej[j] = Rational(1);
      const Vec lhs = derivation * a.algebra.bracket(ei, ej);
      const Vec rhs =
          a.algebra.bracket(derivation * ei, ej) + a.algebra.bracket(ei, derivation * ej);
      if (lhs != rhs) {
        throw NotADerivationError("semidirect: Leibniz identity fails at basis pair (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }

  const std::size_t d = da + 1;
  std::vector<Rational> c(d * d * d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < da; ++k) c[(i * d + j) * d + k] = a.algebra.c(i, j, k);
  for (std::size_t j = 0; j < da; ++j) {
    for (std::size_t k = 0; k < da; ++k) {
      c[(da * d + j) * d + k] = derivation(k, j);   // [t, e_j] = D e_j
      c[(j * d + da) * d + k] = -derivation(k, j);  // [e_j, t]
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < da; ++i) {
    labels.push_back(a.algebra.labels().empty() ? "e" + std::to_string(i + 1)
                                                : a.algebra.labels()[i]);
  }
  labels.push_back("t");
  LieAlgebra g(d, std::move(c), std::move(labels));
  const KnownFacts f = computed_facts(g);
  return finish("semidirect(" + a.name + ")", {}, std::move(g), f);
}

CatalogEntry make(const std::string& name, const std::vector<long>& params) {
  const auto one_param = [&]() -> long {
    if (params.size() != 1) {
      throw InvalidParamsError("catalog: " + name + " expects exactly one integer parameter");
    }
    return params[0];
  };
  const auto no_params = [&] {
    if (!params.empty()) {
      throw InvalidParamsError("catalog: " + name + " takes no parameters");
    }
  };
  if (name == "abelian") return abelian(one_param());
  if (name == "heisenberg") return heisenberg(one_param());
  if (name == "sl") return sl(one_param());
  if (name == "gl") return gl(one_param());
  if (name == "so") return so(one_param());
  if (name == "sp") return sp(one_param());
  if (name == "upper_triangular") return upper_triangular(one_param());
  if (name == "strictly_upper") return strictly_upper(one_param());
  if (name == "sl2_plus_heisenberg3") {
    no_params();
    return direct_sum(sl(2), heisenberg(3));
  }
  if (name == "semidirect_solvable") {
    // abelian(2) extended by the diagonal derivation diag(1, 2): solvable,
    // not nilpotent.
    no_params();
    return semidirect(abelian(2), Matrix{{Rational(1), Rational(0)}, {Rational(0), Rational(2)}});
  }
  if (name == "semidirect_heisenberg_graded") {
    // heisenberg(3) extended by its grading derivation diag(1, 1, 2).
    no_params();
    Matrix d(3, 3);
    d(0, 0) = Rational(1);
    d(1, 1) = Rational(1);
    d(2, 2) = Rational(2);
    return semidirect(heisenberg(3), d);
  }
  throw InvalidParamsError("catalog: unknown algebra name \"" + name + "\"");
}

std::vector<std::string> names() {
  return {"abelian",        "heisenberg",           "sl",
          "gl",             "so",                   "sp",
          "upper_triangular", "strictly_upper",     "sl2_plus_heisenberg3",
          "semidirect_solvable", "semidirect_heisenberg_graded"};
}

}  // namespace catalog
}  // namespace liekit
