#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sparsefac/bifactor.hpp"
#include "sparsefac/hitting.hpp"
#include "sparsefac/polytope.hpp"
#include "sparsefac/sparse_poly.hpp"

namespace sparsefac {

struct Factor {
  SparsePoly poly;
  unsigned multiplicity = 1;
};

/// unit * prod(poly^multiplicity). Factors produced by factor() are
/// irreducible, pairwise coprime, have lexicographic leading coefficient one
/// and come in canonical order.
struct Factorization {
  Elem unit;
  std::vector<Factor> factors;
};

SparsePoly expand(const Field& field, std::size_t nvars, const Factorization& fz);

struct FactorConfig {
  SBConfig sb;
  /// Strategy for generic hitting sets (anchors always use the grid).
  HittingStrategy strategy = HittingStrategy::grid;
  AnchorConfig anchors;
  /// Retry over an extension field when the base field is too small.
  bool auto_extend = true;
  /// Worker threads for the per-line bivariate factorizations (1 = serial).
  unsigned parallel = 1;
};

/// One enumeration state of the monic driver.
struct Guess {
  std::vector<Elem> anchor;
  /// Monic irreducible factors of f(y, anchor), listed with multiplicity.
  std::vector<UniPoly> uni_factors;
  /// Parts A_i as index lists into uni_factors (disjoint).
  std::vector<std::vector<std::size_t>> parts;
  /// Exponent e_i of each part.
  std::vector<unsigned> exps;

  long long phi() const;
};

/// All guesses at an anchor, in enumeration order: set partitions of the
/// distinct irreducible factors of f(y, anchor) (restricted-growth order),
/// then exponents per part in increasing order. Only guesses consistent with
/// f(y, anchor) = prod_i (prod_{j in A_i} g_j)^{e_i} are produced.
std::vector<Guess> enumerate_guesses(const SparsePoly& f, std::span<const Elem> anchor);

/// Black-box evaluation of the guessed factors at b: restricts f to the line
/// through (anchor, b), factors the restriction, and returns h_i(y, b) for
/// each part. Throws GuessInvalid when the guess is inconsistent there.
std::vector<UniPoly> blackbox_eval(const SparsePoly& f, const Guess& guess, std::span<const Elem> b);

/// Same, with the bivariate factorization of the line restriction supplied.
std::vector<UniPoly> blackbox_assign(const BiFactorization& line, const Guess& guess);

using PointOracle = std::function<Elem(std::span<const Elem>)>;

/// Dense tensor-grid interpolation of a polynomial of individual degree at
/// most degs[i] in variable i, from values on {a_0..a_{degs[i]}}, a_j the
/// j-th field element. Returns nullopt when the result has more than cap
/// terms. Throws FieldTooSmall if a grid axis does not fit in the field.
std::optional<SparsePoly> reconstruct_sparse(const PointOracle& oracle, const Field& field,
                                             std::span<const unsigned> degs, std::uint64_t cap);
std::optional<SparsePoly> reconstruct_sparse(const PointOracle& oracle, const Field& field, std::size_t n,
                                             unsigned d, std::uint64_t cap);

/// Exact check unit * prod(factor^mult) == f, giving up (false) as soon as
/// an intermediate product has more than cap^2 terms.
bool verify_factorization(const SparsePoly& f, const Factorization& candidate, std::uint64_t cap);

/// Factorization of a polynomial monic in y (variable 0) into monic,
/// pairwise coprime irreducible factors with multiplicities; unit one.
Factorization factor_monic(const SparsePoly& f, const FactorConfig& cfg = {});

/// Complete factorization of a nonzero polynomial. Constants give an empty
/// factor list. Throws ZeroPolynomial for zero and FieldTooSmall when the
/// field is too small and auto_extend is off (or the extension would exceed
/// the supported field size).
Factorization factor(const SparsePoly& f, const FactorConfig& cfg = {});

}  // namespace sparsefac
