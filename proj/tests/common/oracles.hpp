#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sparsefac/bipoly.hpp"

namespace testutil {

using namespace sparsefac;

/// Exhaustive search for a proper divisor of f in F[y, t]. Every divisor g
/// has a cofactor h whose degree box complements g's, so it suffices to
/// enumerate the smaller of the two boxes. Candidates are normalized to
/// lexicographic leading coefficient one.
inline bool brute_force_irreducible(const BiPoly& f) {
  if (f.is_zero()) return false;
  const int dy = f.deg_y(), dt = f.deg_t();
  if (dy + dt == 0) return false;
  const Field& fld = f.field();
  const std::uint64_t q = fld.order();
  for (int a = 0; a <= dy; ++a) {
    for (int b = 0; b <= dt; ++b) {
      if (a + b == 0 || (a == dy && b == dt)) continue;
      const int box = (a + 1) * (b + 1);
      if (box > (dy - a + 1) * (dt - b + 1)) continue;
      std::uint64_t count = 1;
      for (int i = 0; i < box - 1; ++i) count *= q;
      // Leading coefficient of y^a t^b fixed to one; the other box entries vary.
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t x = idx;
        std::vector<UniPoly> c;
        for (int j = 0; j <= a; ++j) {
          std::vector<Elem> row(static_cast<std::size_t>(b) + 1, fld.zero());
          for (int k = 0; k <= b; ++k) {
            if (j == a && k == b) {
              row[static_cast<std::size_t>(k)] = fld.one();
              continue;
            }
            row[static_cast<std::size_t>(k)] = fld.at(x % q);
            x /= q;
          }
          c.emplace_back(fld, std::move(row));
        }
        const BiPoly g(fld, std::move(c));
        if (g.deg_y() != a || g.deg_t() != b) continue;
        if (exact_div(f, g)) return false;
      }
    }
  }
  return true;
}

}  // namespace testutil

#include <gmpxx.h>

#include "sparsefac/polytope.hpp"

namespace testutil {

/// Solves sum_j lambda_j q_j = p, sum_j lambda_j = 1 for an affinely
/// independent subset; returns false for dependent or inconsistent subsets.
inline bool barycentric_nonnegative(const Point& p, const std::vector<Point>& subset) {
  const std::size_t k = subset.size(), rows = p.size() + 1;
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(k + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < k; ++j) a[r][j] = r < p.size() ? subset[j][r] : 1;
    a[r][k] = r < p.size() ? p[r] : 1;
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) return false;  // dependent columns
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t j = c; j <= k; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (a[r][k] != 0) return false;
  for (std::size_t j = 0; j < k; ++j)
    if (a[j][k] / a[j][j] < 0) return false;
  return true;
}

/// Vertex enumeration through Caratheodory: p is a non-vertex iff it is a
/// nonnegative barycentric combination of some affinely independent subset of
/// the other points of size at most dim + 1.
inline std::vector<Point> brute_force_vertices(const Support& e) {
  std::vector<Point> out;
  const auto& pts = e.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Point> others;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    bool inside = false;
    const std::size_t m = others.size();
    for (std::uint64_t mask = 1; mask < (1ull << m) && !inside; ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) > e.dim() + 1) continue;
      std::vector<Point> sub;
      for (std::size_t j = 0; j < m; ++j)
        if ((mask >> j) & 1) sub.push_back(others[j]);
      inside = barycentric_nonnegative(pts[i], sub);
    }
    if (!inside) out.push_back(pts[i]);
  }
  return out;
}

inline Support random_support(std::size_t n, unsigned d, std::size_t count, std::mt19937_64& rng) {
  std::vector<Point> pts;
  for (std::size_t k = 0; k < count; ++k) {
    Point p(n);
    for (auto& x : p) x = static_cast<long>(rng() % (d + 1));
    pts.push_back(std::move(p));
  }
  return Support(n, std::move(pts));
}

}  // namespace testutil
