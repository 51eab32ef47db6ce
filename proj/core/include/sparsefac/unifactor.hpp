#pragma once

#include <vector>

#include "sparsefac/unipoly.hpp"

namespace sparsefac {

struct UniFactor {
  UniPoly poly;
  unsigned multiplicity = 1;
};

/// unit * prod(poly^multiplicity); factors monic, canonically ordered.
struct UniFactorization {
  Elem unit;
  std::vector<UniFactor> factors;
};

/// Squarefree decomposition of a nonconstant polynomial: monic, squarefree,
/// pairwise coprime parts with f = lc(f) * prod(part^mult). Parts are ordered
/// by multiplicity.
std::vector<UniFactor> squarefree_decompose(const UniPoly& f);

/// Distinct-degree split of a monic squarefree polynomial: pairs
/// (product of all irreducible factors of degree d, d), by increasing d.
std::vector<std::pair<UniPoly, unsigned>> distinct_degree(const UniPoly& f);

/// Splits a monic squarefree product of irreducibles into its irreducible
/// factors (Berlekamp subalgebra with deterministic trace splitting).
std::vector<UniPoly> berlekamp_split(const UniPoly& f);

/// Complete factorization into monic irreducibles. Constant input yields an
/// empty factor list; zero throws ZeroPolynomial.
UniFactorization factor_univariate(const UniPoly& f);

/// unit * prod(factor^mult).
UniPoly expand(const Field& field, const UniFactorization& fz);

/// Irreducibility test by full factorization.
bool is_irreducible(const UniPoly& f);

}  // namespace sparsefac
