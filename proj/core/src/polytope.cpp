#include "sparsefac/polytope.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace sparsefac {

Support::Support(std::size_t dim, std::vector<Point> points) : dim_(dim), points_(std::move(points)) {
  for (const auto& p : points_)
    if (p.size() != dim_) throw ShapeMismatch("point dimension differs from support dimension");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

Support support_of(const SparsePoly& f) {
  std::vector<Point> pts;
  for (const auto& t : f.terms()) {
    Point p(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) p[i] = t.exps[i];
    pts.push_back(std::move(p));
  }
  return Support(f.nvars(), std::move(pts));
}

bool in_convex_hull(const Point& p, const std::vector<Point>& points) {
  if (points.empty()) return false;
  const std::size_t dim = p.size();
  const std::size_t m = points.size();
  const std::size_t rows = dim + 1;
  // Columns: m lambdas, then one artificial per row, then the right-hand side.
  const std::size_t cols = m + rows + 1;
  std::vector<std::vector<mpq_class>> tab(rows, std::vector<mpq_class>(cols, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    const long rhs = r < dim ? p[r] : 1;
    const int sign = rhs < 0 ? -1 : 1;
    for (std::size_t j = 0; j < m; ++j) tab[r][j] = sign * (r < dim ? points[j][r] : 1L);
    tab[r][m + r] = 1;
    tab[r][cols - 1] = sign * rhs;
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = m + r;
  // Objective: minimize the sum of artificials; reduced costs of column j are
  // -sum over rows of tab[r][j] for non-artificial columns.
  std::vector<mpq_class> cost(cols, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    if (j >= m && j < m + rows) continue;
    for (std::size_t r = 0; r < rows; ++r) cost[j] -= tab[r][j];
  }
  while (true) {
    // Bland: smallest index with negative reduced cost.
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = rows;
    mpq_class best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (tab[r][enter] <= 0) continue;
      mpq_class ratio = tab[r][cols - 1] / tab[r][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        best = ratio;
        leave = r;
      }
    }
    if (leave == rows) break;  // unbounded cannot happen in phase one
    const mpq_class piv = tab[leave][enter];
    for (auto& x : tab[leave]) x /= piv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || tab[r][enter] == 0) continue;
      const mpq_class f = tab[r][enter];
      for (std::size_t j = 0; j < cols; ++j) tab[r][j] -= f * tab[leave][j];
    }
    const mpq_class f = cost[enter];
    for (std::size_t j = 0; j < cols; ++j) cost[j] -= f * tab[leave][j];
    basis[leave] = enter;
  }
  // Objective value is -cost[rhs]; feasible iff it is zero.
  return cost[cols - 1] == 0;
}

VertexSet newton_vertices(const Support& e) {
  if (e.empty()) throw EmptySupport();
  VertexSet out;
  const auto& pts = e.points();
  if (pts.size() == 1) return {pts};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Point> others;
    others.reserve(pts.size() - 1);
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    if (!in_convex_hull(pts[i], others)) out.vertices.push_back(pts[i]);
  }
  return out;
}

Support minkowski_sum(const Support& a, const Support& b) {
  if (a.dim() != b.dim()) throw ShapeMismatch("supports of different dimension");
  std::vector<Point> pts;
  pts.reserve(a.size() * b.size());
  for (const auto& p : a.points())
    for (const auto& q : b.points()) {
      Point s(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) s[i] = p[i] + q[i];
      pts.push_back(std::move(s));
    }
  return Support(a.dim(), std::move(pts));
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base == 0) return 0;
    if (r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    r *= base;
    if (base == 1) break;
  }
  return r;
}

std::uint64_t sb_exponent(std::uint64_t n, std::uint64_t d, const SBConfig& cfg) {
  const std::uint64_t m = std::max<std::uint64_t>(n, 2);
  if ((m & (m - 1)) == 0) {
    std::uint64_t lg = 0;
    while ((1ull << lg) < m) ++lg;
    const std::uint64_t num = cfg.c_num * d * d * lg;
    return (num + cfg.c_den - 1) / cfg.c_den;
  }
  const long double v = static_cast<long double>(cfg.c_num) / static_cast<long double>(cfg.c_den) *
                        static_cast<long double>(d * d) * std::log2(static_cast<long double>(m));
  return static_cast<std::uint64_t>(std::ceil(v));
}

std::uint64_t sparsity_cap(std::uint64_t n, std::uint64_t s, std::uint64_t d, const SBConfig& cfg) {
  std::uint64_t cap = saturating_pow(s, sb_exponent(n, d, cfg));
  cap = std::min(cap, saturating_pow(d + 1, n));
  if (cfg.user_cap) cap = std::min(cap, *cfg.user_cap);
  return cap;
}

namespace {

/// Smallest k such that every point of E is within 1/(3d) of a k-uniform
/// average of vertices, i.e. 3d |S_i - k u_i| <= k for some k-fold sum S.
std::optional<unsigned> uniform_search(const Support& e, const std::vector<Point>& verts, unsigned d,
                                       const UniformApproxOptions& opt) {
  std::set<Point> sums;
  sums.insert(Point(e.dim(), 0));
  for (unsigned k = 1; k <= opt.max_k; ++k) {
    std::set<Point> next;
    for (const auto& s : sums)
      for (const auto& v : verts) {
        Point t(s);
        for (std::size_t i = 0; i < t.size(); ++i) t[i] += v[i];
        next.insert(std::move(t));
        if (next.size() > opt.max_sums) return std::nullopt;
      }
    sums = std::move(next);
    std::set<Point> used;
    bool all = true;
    for (const auto& u : e.points()) {
      bool found = false;
      for (const auto& s : sums) {
        bool close = true;
        for (std::size_t i = 0; i < u.size() && close; ++i) {
          const long diff = std::labs(s[i] - static_cast<long>(k) * u[i]);
          close = 3L * static_cast<long>(d) * diff <= static_cast<long>(k);
        }
        if (close && !used.count(s)) {
          used.insert(s);
          found = true;
          break;
        }
      }
      if (!found) {
        all = false;
        break;
      }
    }
    if (all) return k;
  }
  return std::nullopt;
}

}  // namespace

CaratheodoryReport caratheodory_check(const Support& e, unsigned d, const SBConfig& cfg,
                                      std::optional<UniformApproxOptions> uniform) {
  const VertexSet v = newton_vertices(e);
  CaratheodoryReport rep;
  rep.points = e.size();
  rep.vertices = v.vertices.size();
  rep.exponent = sb_exponent(e.dim(), d, cfg);
  rep.bound_holds = saturating_pow(rep.vertices, rep.exponent) >= rep.points;
  if (!rep.bound_holds)
    throw BoundViolation("vertex count " + std::to_string(rep.vertices) + " raised to " +
                         std::to_string(rep.exponent) + " is below |E| = " + std::to_string(rep.points));
  if (uniform) rep.uniform_k = uniform_search(e, v.vertices, std::max(d, 1u), *uniform);
  return rep;
}

HadamardReport hadamard_example(unsigned m) {
  if (m == 0 || m > 4) throw Error("hadamard_example supports 1 <= m <= 4");
  const std::size_t n = std::size_t{1} << m;
  auto dot = [](std::size_t x, std::size_t y) { return __builtin_popcountll(x & y) & 1; };

  std::vector<Point> columns;
  for (std::size_t y = 0; y < n; ++y) {
    Point c(n);
    for (std::size_t x = 0; x < n; ++x) c[x] = dot(x, y) ? -1 : 1;
    columns.push_back(std::move(c));
  }
  // Subspaces of F_2^m as bitmasks over the n vectors, found by closing spans.
  std::set<std::uint64_t> subspaces;
  for (std::uint64_t gens = 0; gens < (1ull << n); ++gens) {
    if (__builtin_popcountll(gens) > static_cast<int>(m)) continue;
    std::uint64_t span = 1;  // contains 0
    for (std::size_t g = 0; g < n; ++g) {
      if (!((gens >> g) & 1)) continue;
      std::uint64_t add = 0;
      for (std::size_t v = 0; v < n; ++v)
        if ((span >> v) & 1) add |= 1ull << (v ^ g);
      span |= add;
    }
    subspaces.insert(span);
  }
  HadamardReport rep;
  rep.m = m;
  rep.n = n;
  rep.subspaces = subspaces.size();

  std::vector<Point> sub_points;
  for (auto s : subspaces) {
    Point p(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      bool perp = true;
      for (std::size_t y = 0; y < n && perp; ++y)
        if (((s >> y) & 1) && dot(x, y)) perp = false;
      p[x] = perp ? 1 : 0;
    }
    sub_points.push_back(std::move(p));
  }
  std::set<Point> distinct(sub_points.begin(), sub_points.end());
  rep.distinct_subspace_points = distinct.size();
  rep.all_in_hull = std::all_of(sub_points.begin(), sub_points.end(),
                                [&](const Point& p) { return in_convex_hull(p, columns); });

  std::vector<Point> all;
  for (auto pts : {columns, sub_points})
    for (auto p : pts) {
      for (auto& x : p) x += 1;
      all.push_back(std::move(p));
    }
  rep.points = Support(n, std::move(all));
  rep.vertices = newton_vertices(rep.points);
  return rep;
}

}  // namespace sparsefac
