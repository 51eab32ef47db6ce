#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sparsefac/sparse_poly.hpp"

namespace sparsefac {

/// Integer lattice point.
using Point = std::vector<long>;

/// Finite set of lattice points of a fixed dimension, kept sorted and unique.
class Support {
 public:
  Support() = default;
  Support(std::size_t dim, std::vector<Point> points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<Point>& points() const { return points_; }

 private:
  std::size_t dim_ = 0;
  std::vector<Point> points_;
};

Support support_of(const SparsePoly& f);

struct VertexSet {
  std::vector<Point> vertices;  // sorted
};

/// Exact test: is p a convex combination of `points`? Phase-one simplex over
/// the rationals with Bland's rule.
bool in_convex_hull(const Point& p, const std::vector<Point>& points);

/// Vertices of conv(E): the points not in the hull of the others.
VertexSet newton_vertices(const Support& e);

/// All pairwise sums a + b.
Support minkowski_sum(const Support& a, const Support& b);

/// Parameters of the factor-sparsity cap.
struct SBConfig {
  /// Constant C as the rational c_num / c_den.
  std::uint64_t c_num = 5;
  std::uint64_t c_den = 1;
  std::optional<std::uint64_t> user_cap;
};

/// ceil(C * d^2 * log2(max(n, 2))).
std::uint64_t sb_exponent(std::uint64_t n, std::uint64_t d, const SBConfig& cfg);

/// min(s^sb_exponent, (d+1)^n, user cap), saturating at UINT64_MAX.
std::uint64_t sparsity_cap(std::uint64_t n, std::uint64_t s, std::uint64_t d, const SBConfig& cfg = {});

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

struct UniformApproxOptions {
  /// Largest number of vertices in a uniform combination to try.
  unsigned max_k = 12;
  /// Cap on the number of distinct k-fold vertex sums kept in memory.
  std::size_t max_sums = 200000;
};

struct CaratheodoryReport {
  std::size_t points = 0;    // |E|
  std::size_t vertices = 0;  // t
  std::uint64_t exponent = 0;
  bool bound_holds = false;
  /// Smallest k for which every point of E lies within 1/(3d) (sup norm) of
  /// a distinct k-uniform vertex average; empty when not searched or not
  /// found within the budget.
  std::optional<unsigned> uniform_k;
};

/// Checks t^exponent >= |E| with t the vertex count of conv(E). Throws
/// BoundViolation if it fails. With `uniform` set, also searches for the
/// uniform-combination certificate.
CaratheodoryReport caratheodory_check(const Support& e, unsigned d, const SBConfig& cfg = {},
                                      std::optional<UniformApproxOptions> uniform = std::nullopt);

struct HadamardReport {
  unsigned m = 0;
  std::size_t n = 0;            // 2^m
  std::size_t subspaces = 0;    // subspaces of F_2^m
  Support points;               // columns and subspace points, shifted by +1
  VertexSet vertices;
  std::size_t distinct_subspace_points = 0;
  bool all_in_hull = false;     // every subspace point certified in conv(columns)
};

/// Hadamard construction for m <= 4: columns of the 2^m Sylvester-Hadamard
/// matrix plus, for every linear subspace S of F_2^m, the average of the
/// columns indexed by S (the indicator of S-perp). Coordinates are shifted by
/// +1 so all points are nonnegative.
HadamardReport hadamard_example(unsigned m);

}  // namespace sparsefac
