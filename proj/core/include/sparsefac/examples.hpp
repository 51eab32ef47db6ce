#pragma once

#include <cstdint>

#include "sparsefac/sparse_poly.hpp"

namespace sparsefac {

/// A sparse polynomial f with a much denser factor g.
struct SparsityExample {
  SparsePoly f;
  SparsePoly g;
  /// g divides f (checked by exact sparse division).
  bool divides = false;
  /// Closed-form sparsities the construction is expected to have.
  std::uint64_t expected_f = 0;
  std::uint64_t expected_g = 0;
};

/// f = prod_i (x_i^d - 1), g = prod_i (1 + x_i + ... + x_i^{d-1}):
/// 2^n terms against d^n. Needs n >= 1 and d >= 2.
SparsityExample cyclotomic_product_example(const Field& field, std::size_t n, unsigned d);

/// f = x_1^p + ... + x_n^p, g = (x_1 + ... + x_n)^d over a field of
/// characteristic p: n terms against C(n+d-1, d). Needs 0 < d < p.
SparsityExample frobenius_example(const Field& field, std::size_t n, unsigned d);

}  // namespace sparsefac
