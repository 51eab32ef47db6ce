#pragma once

#include <cstdint>
#include <vector>

#include "sparsefac/field.hpp"
#include "sparsefac/polytope.hpp"

namespace sparsefac {

enum class HittingStrategy { grid, ks };

struct HittingParams {
  std::uint64_t n = 0;
  std::uint64_t s = 0;
  std::uint64_t d = 0;
  std::uint64_t k = 0;
  HittingStrategy strategy = HittingStrategy::grid;
};

/// Deterministic, lazily enumerated point set in F^n.
///
/// The grid strategy is the tensor grid {a_0..a_D}^n with D = k*d and a_i
/// the first D+1 field elements; points come in lexicographic order with
/// variable 0 most significant. The ks strategy lists the points
/// (t^{w_1}, ..., t^{w_n}) with w_i = (D+1)^{i-1} mod r over a list of primes r.
class HittingSet {
 public:
  const Field& field() const { return field_; }
  const HittingParams& params() const { return params_; }
  std::uint64_t size() const;
  std::vector<Elem> at(std::uint64_t index) const;
  std::vector<std::vector<Elem>> points() const;
  /// Distinct values per axis of the grid strategy.
  std::uint64_t axis_size() const { return axis_; }

 private:
  friend HittingSet gen_hitting_set(const Field&, const HittingParams&);

  Field field_;
  HittingParams params_;
  std::uint64_t axis_ = 0;
  std::vector<std::vector<Elem>> explicit_points_;  // ks strategy
};

/// Throws FieldTooSmall when the field cannot host the construction.
HittingSet gen_hitting_set(const Field& field, const HittingParams& params);

enum class AnchorPolicy {
  /// Grid parameters (n, (2d SB)^{2d}, 2d^2, d^2): D = 2 d^4.
  wide,
  /// Grid with D = deg_y * deg_x, which bounds the individual degree of the
  /// product of all pairwise resultants of the monic factors.
  degree,
};

struct AnchorConfig {
  AnchorPolicy policy = AnchorPolicy::degree;
  SBConfig sb;
};

/// Anchor candidates for a monic polynomial in n variables besides y with
/// sparsity s and individual degree d.
HittingSet gen_anchor_set(const Field& field, std::uint64_t n, std::uint64_t s, std::uint64_t d,
                          const AnchorConfig& cfg = {});

/// Degree-policy anchors from the y-degree and the largest x-degree.
HittingSet gen_anchor_set_degrees(const Field& field, std::uint64_t n, std::uint64_t deg_y,
                                  std::uint64_t deg_x);

}  // namespace sparsefac
