#include "sparsefac/hitting.hpp"

#include <cmath>
#include <set>

namespace sparsefac {
namespace {

std::uint64_t checked_pow(std::uint64_t b, std::uint64_t e) {
  const std::uint64_t r = saturating_pow(b, e);
  if (r == UINT64_MAX) throw FieldTooSmall(UINT64_MAX, "hitting set too large to enumerate");
  return r;
}

std::vector<std::uint64_t> first_primes(std::uint64_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t c = 2; out.size() < count; ++c)
    if (is_prime(c)) out.push_back(c);
  return out;
}

}  // namespace

std::uint64_t HittingSet::size() const {
  if (params_.strategy == HittingStrategy::ks) return explicit_points_.size();
  return checked_pow(axis_, params_.n);
}

std::vector<Elem> HittingSet::at(std::uint64_t index) const {
  if (params_.strategy == HittingStrategy::ks) return explicit_points_.at(index);
  std::vector<Elem> p(params_.n);
  for (std::size_t i = params_.n; i-- > 0;) {
    p[i] = field_.at(index % axis_);
    index /= axis_;
  }
  return p;
}

std::vector<std::vector<Elem>> HittingSet::points() const {
  std::vector<std::vector<Elem>> out;
  const std::uint64_t n = size();
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(at(i));
  return out;
}

HittingSet gen_hitting_set(const Field& field, const HittingParams& params) {
  HittingSet hs;
  hs.field_ = field;
  hs.params_ = params;
  const std::uint64_t D = params.k * params.d;
  if (params.strategy == HittingStrategy::grid) {
    if (D + 1 > field.order()) throw FieldTooSmall(D + 1, "hitting grid needs D+1 values per axis");
    hs.axis_ = D + 1;
    (void)hs.size();
    return hs;
  }
  // Kronecker-style substitution. The product has at most S monomials; a fixed
  // monomial collides with another one for at most n*log2(D+1) primes, so
  // (S-1)*ceil(n*log2(D+1)) + 1 primes contain one without collisions.
  const std::uint64_t n = params.n;
  const std::uint64_t S = std::min(saturating_pow(params.s, params.k), saturating_pow(D + 1, n));
  const auto bits = static_cast<std::uint64_t>(std::ceil(static_cast<double>(n) * std::log2(static_cast<double>(D + 1))));
  const std::uint64_t nprimes = (S - 1) * std::max<std::uint64_t>(bits, 1) + 1;
  if (nprimes > 100000) throw FieldTooSmall(UINT64_MAX, "ks hitting set too large");
  const auto primes = first_primes(nprimes);
  const std::uint64_t degree = D * n * (primes.back() - 1);
  if (degree + 1 > field.order()) throw FieldTooSmall(degree + 1, "ks hitting set needs more evaluation points");
  std::set<std::vector<Elem>> seen;
  for (auto r : primes) {
    std::vector<std::uint64_t> w(n);
    std::uint64_t acc = 1 % r;
    for (std::uint64_t i = 0; i < n; ++i) {
      w[i] = acc;
      acc = acc * ((D + 1) % r) % r;
    }
    for (std::uint64_t ti = 0; ti <= degree; ++ti) {
      const Elem t = field.at(ti);
      std::vector<Elem> p(n);
      for (std::uint64_t i = 0; i < n; ++i) p[i] = field.pow(t, w[i]);
      if (seen.insert(p).second) hs.explicit_points_.push_back(std::move(p));
    }
  }
  return hs;
}

HittingSet gen_anchor_set(const Field& field, std::uint64_t n, std::uint64_t s, std::uint64_t d,
                          const AnchorConfig& cfg) {
  if (cfg.policy == AnchorPolicy::degree) return gen_anchor_set_degrees(field, n, d, d);
  const std::uint64_t sb = sparsity_cap(n, s, d, cfg.sb);
  const std::uint64_t sparsity = saturating_pow(2 * d * sb, 2 * d);
  return gen_hitting_set(field, {n, sparsity, 2 * d * d, d * d, HittingStrategy::grid});
}

HittingSet gen_anchor_set_degrees(const Field& field, std::uint64_t n, std::uint64_t deg_y,
                                  std::uint64_t deg_x) {
  return gen_hitting_set(field, {n, 1, std::max<std::uint64_t>(deg_y * deg_x, 0), 1, HittingStrategy::grid});
}

}  // namespace sparsefac
