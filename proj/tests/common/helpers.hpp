#pragma once

#include <random>
#include <string>

#include "sparsefac/sparse_poly.hpp"

namespace testutil {

using namespace sparsefac;

inline SparsePoly X(const Field& f, const std::string& s, std::size_t n = 0) {
  return parse_polynomial(s, f, n).poly;
}

inline SparsePoly Y(const Field& f, const std::string& s, std::size_t n = 0) {
  return parse_polynomial(s, f, n, VarStyle::y_first).poly;
}

inline SparsePoly random_sparse(const Field& f, std::size_t n, std::size_t terms, unsigned d,
                                std::mt19937_64& rng) {
  std::vector<Term> t;
  for (std::size_t k = 0; k < terms; ++k) {
    ExpVec e(n);
    for (std::size_t i = 0; i < n; ++i) e.set(i, static_cast<unsigned>(rng() % (d + 1)));
    t.push_back(Term{e, Elem{static_cast<std::uint32_t>(1 + rng() % (f.order() - 1))}});
  }
  return SparsePoly(f, n, std::move(t));
}

inline std::vector<Elem> random_point(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::vector<Elem> p(n);
  for (auto& x : p) x = Elem{static_cast<std::uint32_t>(rng() % f.order())};
  return p;
}

}  // namespace testutil
