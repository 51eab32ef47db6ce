#pragma once

#include <vector>

#include "sparsefac/bipoly.hpp"
#include "sparsefac/unifactor.hpp"

namespace sparsefac {

struct BiFactor {
  BiPoly poly;
  unsigned multiplicity = 1;
};

/// unit * prod(poly^multiplicity); each factor has lexicographic leading
/// coefficient one; canonical order.
struct BiFactorization {
  Elem unit;
  std::vector<BiFactor> factors;
};

struct HenselPair {
  BiPoly g;
  BiPoly h;
};

/// Lifts f(y, t0) = g0 * h0 to G * H = f mod (t - t0)^precision. The results
/// are monic in y with t-degree below `precision`. Throws NotCoprime when
/// gcd(g0, h0) != 1 and Error when the inputs are inconsistent.
HenselPair hensel_lift(const BiPoly& f, const UniPoly& g0, const UniPoly& h0, Elem t0,
                       unsigned precision);

/// Complete factorization over the coefficient field. Throws ZeroPolynomial
/// for zero and FieldTooSmall when no good specialization point exists.
BiFactorization factor_bivariate(const BiPoly& f);

BiPoly expand(const Field& field, const BiFactorization& fz);

}  // namespace sparsefac
