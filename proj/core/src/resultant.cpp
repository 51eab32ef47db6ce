#include "sparsefac/resultant.hpp"

namespace sparsefac {

ElemMatrix sylvester_matrix(const UniPoly& f, const UniPoly& g) {
  if (f.degree() < 1 || g.degree() < 1) throw DegreeZero();
  const Field& fld = f.field();
  const auto d = static_cast<std::size_t>(f.degree());
  const auto e = static_cast<std::size_t>(g.degree());
  const std::size_t n = d + e;
  ElemMatrix m(n, std::vector<Elem>(n, fld.zero()));
  for (std::size_t r = 0; r < e; ++r)
    for (std::size_t i = 0; i <= d; ++i) m[r][r + i] = f.coeff(d - i);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t i = 0; i <= e; ++i) m[e + r][r + i] = g.coeff(e - i);
  return m;
}

Elem determinant(const Field& field, ElemMatrix m) {
  const std::size_t n = m.size();
  Elem det = field.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) return field.zero();
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = field.neg(det);
    }
    det = field.mul(det, m[c][c]);
    const Elem inv = field.inv(m[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      const Elem factor = field.mul(m[r][c], inv);
      for (std::size_t k = c; k < n; ++k) m[r][k] = field.sub(m[r][k], field.mul(factor, m[c][k]));
    }
  }
  return det;
}

Elem resultant_univariate(const UniPoly& f, const UniPoly& g) {
  return determinant(f.field(), sylvester_matrix(f, g));
}

UniPoly project_to_y(const SparsePoly& f, std::span<const Elem> a) {
  if (f.nvars() == 0 || a.size() + 1 != f.nvars())
    throw ShapeMismatch("point must have one entry per non-y variable");
  std::vector<std::size_t> xs(a.size());
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = i + 1;
  return to_unipoly(evaluate_partial(f, xs, a), 0);
}

Elem resultant_at_point(const SparsePoly& f, const SparsePoly& g, std::span<const Elem> a) {
  if (!lead_and_degrees(f, 0).lc.is_one() || !lead_and_degrees(g, 0).lc.is_one()) throw NotMonic();
  return resultant_univariate(project_to_y(f, a), project_to_y(g, a));
}

}  // namespace sparsefac
