#ifndef LIEKIT_CATALOG_HPP
#define LIEKIT_CATALOG_HPP

#include <string>
#include <vector>

#include "liekit/lie_algebra.hpp"

namespace liekit {

struct KnownFacts {
  std::size_t killing_rank = 0;
  std::size_t center_dim = 0;
  bool is_solvable = false;
  bool is_nilpotent = false;
  bool is_semisimple = false;
};

// A named, validated algebra with self-checked structural facts.
struct CatalogEntry {
  std::string name;
  std::vector<long> parameters;
  LieAlgebra algebra;
  KnownFacts facts;
};

namespace catalog {

CatalogEntry abelian(long n);
// Heisenberg algebra of odd dimension n = 2k+1 >= 3.
CatalogEntry heisenberg(long n);
CatalogEntry sl(long n);
CatalogEntry gl(long n);
CatalogEntry so(long n);
// Symplectic algebra on m = 2k coordinates, dim k(2k+1).
CatalogEntry sp(long m);
CatalogEntry upper_triangular(long n);
CatalogEntry strictly_upper(long n);

CatalogEntry direct_sum(const CatalogEntry& a, const CatalogEntry& b);
// a extended by one outer element acting by the given derivation
// (NotADerivationError if the Leibniz identity fails on basis pairs).
CatalogEntry semidirect(const CatalogEntry& a, const Matrix& derivation);

// Name-based dispatch, as used by the CLI:
//   abelian n | heisenberg n | sl n | gl n | so n | sp m |
//   upper_triangular n | strictly_upper n |
//   sl2_plus_heisenberg3 | semidirect_solvable | semidirect_heisenberg_graded
CatalogEntry make(const std::string& name, const std::vector<long>& params);

std::vector<std::string> names();

}  // namespace catalog

}  // namespace liekit

#endif
