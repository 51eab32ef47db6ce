#include "sparsefac/examples.hpp"

#include <limits>

#include "sparsefac/errors.hpp"
#include "sparsefac/polytope.hpp"

namespace sparsefac {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_arity(std::size_t n) {
  if (n == 0 || n > ExpVec::kMaxVars) throw ShapeMismatch("example needs between 1 and 16 variables");
}

bool exact_divides(const SparsePoly& f, const SparsePoly& g) {
  return sparse_divide(f, g, std::numeric_limits<std::size_t>::max()).has_value();
}

}  // namespace

SparsityExample cyclotomic_product_example(const Field& field, std::size_t n, unsigned d) {
  check_arity(n);
  if (d < 2) throw Error("cyclotomic product example needs d >= 2");
  SparsityExample ex;
  ex.f = SparsePoly::constant(field, n, field.one());
  ex.g = ex.f;
  for (std::size_t i = 0; i < n; ++i) {
    ExpVec e(n);
    e.set(i, d);
    const SparsePoly one = SparsePoly::constant(field, n, field.one());
    ex.f = ex.f * (SparsePoly::monomial(field, field.one(), e) - one);
    SparsePoly geo(field, n);
    for (unsigned j = 0; j < d; ++j) {
      ExpVec ej(n);
      ej.set(i, j);
      geo = geo + SparsePoly::monomial(field, field.one(), ej);
    }
    ex.g = ex.g * geo;
  }
  ex.divides = exact_divides(ex.f, ex.g);
  ex.expected_f = saturating_pow(2, n);
  ex.expected_g = saturating_pow(d, n);
  return ex;
}

SparsityExample frobenius_example(const Field& field, std::size_t n, unsigned d) {
  check_arity(n);
  const unsigned p = field.characteristic();
  if (d == 0 || d >= p) throw Error("Frobenius example needs 0 < d < p");
  SparsityExample ex;
  ex.f = SparsePoly(field, n);
  SparsePoly lin(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    ExpVec e(n);
    e.set(i, p);
    ex.f = ex.f + SparsePoly::monomial(field, field.one(), e);
    lin = lin + SparsePoly::variable(field, n, i);
  }
  ex.g = lin.pow(d);
  ex.divides = exact_divides(ex.f, ex.g);
  ex.expected_f = n;
  ex.expected_g = binomial(n + d - 1, d);
  return ex;
}

}  // namespace sparsefac
