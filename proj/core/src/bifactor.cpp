#include "sparsefac/bifactor.hpp"

#include <algorithm>
#include <map>

namespace sparsefac {
namespace {

/// Truncated power series in t whose coefficients are polynomials in y.
using TSeries = std::vector<UniPoly>;

TSeries to_series(const BiPoly& f, unsigned precision) {
  const Field& fld = f.field();
  TSeries s(precision, UniPoly(fld));
  for (unsigned k = 0; k < precision; ++k) {
    std::vector<Elem> c(f.coeffs().size(), fld.zero());
    for (std::size_t j = 0; j < f.coeffs().size(); ++j) c[j] = f.coeff(j).coeff(k);
    s[k] = UniPoly(fld, std::move(c));
  }
  return s;
}

BiPoly from_series(const Field& fld, const TSeries& s) {
  std::size_t dy = 0;
  for (const auto& c : s) dy = std::max(dy, c.coeffs().size());
  std::vector<std::vector<Elem>> raw(dy, std::vector<Elem>(s.size(), fld.zero()));
  for (std::size_t k = 0; k < s.size(); ++k)
    for (std::size_t j = 0; j < s[k].coeffs().size(); ++j) raw[j][k] = s[k].coeffs()[j];
  std::vector<UniPoly> c;
  for (auto& r : raw) c.emplace_back(fld, std::move(r));
  return BiPoly(fld, std::move(c));
}

TSeries series_mul(const TSeries& a, const TSeries& b, unsigned precision) {
  const Field& fld = a[0].field().valid() ? a[0].field() : b[0].field();
  TSeries out(precision, UniPoly(fld));
  for (unsigned i = 0; i < precision && i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (unsigned j = 0; i + j < precision && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Linear Hensel lifting of F = g0 * h0 (mod t) to precision terms; F given
/// as a series monic in y of degree deg g0 + deg h0.
std::pair<TSeries, TSeries> lift_series(const TSeries& F, const UniPoly& g0, const UniPoly& h0,
                                        unsigned precision) {
  const Field& fld = g0.field();
  const ExtGcd eg = ext_gcd(g0, h0);
  if (!eg.g.is_one()) throw NotCoprime();
  TSeries G(precision, UniPoly(fld)), H(precision, UniPoly(fld));
  G[0] = g0;
  H[0] = h0;
  for (unsigned k = 1; k < precision; ++k) {
    UniPoly e = k < F.size() ? F[k] : UniPoly(fld);
    for (unsigned i = 1; i < k; ++i) e -= G[i] * H[k - i];
    if (e.is_zero()) continue;
    // Solve Gk * h0 + Hk * g0 = e with deg Gk < deg g0.
    UniPoly Gk = (e * eg.t) % g0;
    UniPoly Hk = (e - Gk * h0) / g0;
    G[k] = std::move(Gk);
    H[k] = std::move(Hk);
  }
  return {std::move(G), std::move(H)};
}

/// Power series inverse of c(t) modulo t^precision; c(0) != 0.
UniPoly series_inverse(const UniPoly& c, unsigned precision) {
  const Field& fld = c.field();
  std::vector<Elem> inv(precision, fld.zero());
  const Elem c0inv = fld.inv(c.coeff(0));
  inv[0] = c0inv;
  for (unsigned k = 1; k < precision; ++k) {
    Elem acc = fld.zero();
    for (unsigned i = 1; i <= k; ++i) acc = fld.add(acc, fld.mul(c.coeff(i), inv[k - i]));
    inv[k] = fld.neg(fld.mul(c0inv, acc));
  }
  return UniPoly(fld, std::move(inv));
}

using FactorList = std::vector<std::pair<BiPoly, unsigned>>;

/// Irreducible factors of a primitive, squarefree polynomial that is
/// separable in y, with t0 already chosen so that z(y, 0) keeps its degree
/// and stays squarefree.
std::vector<BiPoly> factor_shifted(const BiPoly& z, const std::vector<UniPoly>& locals) {
  const Field& fld = z.field();
  const unsigned dt = static_cast<unsigned>(std::max(z.deg_t(), 0));
  const unsigned precision = 2 * dt + 1;
  const UniPoly lc = z.lc_y();
  const UniPoly lc_inv = series_inverse(lc, precision);

  // Monic series Z = z / lc(z) and multifactor lift.
  std::vector<UniPoly> zc;
  for (const auto& c : z.coeffs()) zc.push_back((c * lc_inv).truncated(precision));
  TSeries rest = to_series(BiPoly(fld, zc), precision);
  std::vector<TSeries> lifted;
  for (std::size_t i = 0; i + 1 < locals.size(); ++i) {
    UniPoly others = UniPoly::constant(fld, fld.one());
    for (std::size_t j = i + 1; j < locals.size(); ++j) others = others * locals[j];
    auto [G, H] = lift_series(rest, locals[i], others, precision);
    lifted.push_back(std::move(G));
    rest = std::move(H);
  }
  lifted.push_back(std::move(rest));

  std::vector<BiPoly> found;
  std::vector<std::size_t> pool(lifted.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
  BiPoly remaining = z;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      TSeries prod = to_series(BiPoly::from_t(remaining.lc_y()), precision);
      for (auto i : idx) prod = series_mul(prod, lifted[pool[i]], precision);
      BiPoly cand = primitive_part(from_series(fld, prod));
      if (cand.deg_t() <= static_cast<int>(dt)) {
        if (auto q = exact_div(remaining, cand)) {
          found.push_back(cand);
          remaining = *q;
          std::vector<std::size_t> next;
          for (std::size_t i = 0; i < pool.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(pool[i]);
          pool = std::move(next);
          hit = true;
          break;
        }
      }
      // Next s-subset in lexicographic order.
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == pool.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t i = k; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (remaining.deg_y() > 0) found.push_back(primitive_part(remaining));
  return found;
}

std::vector<BiPoly> factor_squarefree(const BiPoly& z) {
  const Field& fld = z.field();
  if (z.deg_y() <= 1) return {z};
  if (z.deg_t() == 0) {
    std::vector<Elem> c;
    for (const auto& x : z.coeffs()) c.push_back(x.coeff(0));
    std::vector<BiPoly> out;
    for (const auto& fac : factor_univariate(UniPoly(fld, c)).factors) out.push_back(BiPoly::from_y(fac.poly));
    return out;
  }
  const UniPoly lc = z.lc_y();
  for (std::uint64_t i = 0; i < fld.order(); ++i) {
    const Elem t0 = fld.at(i);
    if (lc.eval(t0).is_zero()) continue;
    const UniPoly u = z.eval_t(t0);
    if (!gcd(u, u.derivative()).is_one()) continue;
    const auto fz = factor_univariate(u);
    if (fz.factors.size() == 1) return {z};
    std::vector<UniPoly> locals;
    for (const auto& f : fz.factors) locals.push_back(f.poly);
    std::vector<BiPoly> out;
    for (auto& f : factor_shifted(z.shift_t(t0), locals)) out.push_back(f.shift_t(fld.neg(t0)));
    return out;
  }
  const std::uint64_t need = (2 * static_cast<std::uint64_t>(z.deg_y()) - 1) * static_cast<std::uint64_t>(z.deg_t()) + 1;
  throw FieldTooSmall(need, "no squarefree specialization point for bivariate factoring");
}

/// Irreducible factors with multiplicities of a primitive polynomial of
/// positive y-degree.
FactorList factor_primitive(const BiPoly& P) {
  const Field& fld = P.field();
  const std::uint32_t p = fld.characteristic();
  FactorList out;
  const BiPoly dP = P.derivative_y();
  if (dP.is_zero()) {
    std::vector<UniPoly> sub;
    for (std::size_t j = 0; j < P.coeffs().size(); j += p) sub.push_back(P.coeff(j));
    for (auto& [w, e] : factor_primitive(BiPoly(fld, sub))) {
      bool pth_power = true;
      for (const auto& c : w.coeffs())
        for (std::size_t k = 0; k < c.coeffs().size(); ++k)
          if (k % p != 0 && !c.coeffs()[k].is_zero()) pth_power = false;
      if (pth_power) {
        std::vector<UniPoly> root;
        for (const auto& c : w.coeffs()) {
          std::vector<Elem> rc;
          for (std::size_t k = 0; k < c.coeffs().size(); k += p) rc.push_back(fld.pth_root(c.coeffs()[k]));
          root.emplace_back(fld, std::move(rc));
        }
        out.emplace_back(BiPoly(fld, std::move(root)), e * p);
      } else {
        std::vector<UniPoly> up(static_cast<std::size_t>(w.deg_y()) * p + 1, UniPoly(fld));
        for (std::size_t j = 0; j < w.coeffs().size(); ++j) up[j * p] = w.coeff(j);
        out.emplace_back(BiPoly(fld, std::move(up)), e);
      }
    }
    return out;
  }
  BiPoly c = gcd(P, dP);
  BiPoly w = *exact_div(P, c);
  unsigned i = 1;
  while (w.deg_y() > 0) {
    BiPoly y = gcd(w, c);
    BiPoly z = *exact_div(w, y);
    if (z.deg_y() > 0) {
      for (auto& f : factor_squarefree(primitive_part(z))) out.emplace_back(f, i);
    }
    ++i;
    w = std::move(y);
    c = *exact_div(c, w);
  }
  if (c.deg_y() > 0) {
    for (auto& fe : factor_primitive(primitive_part(c))) out.push_back(std::move(fe));
  }
  return out;
}

}  // namespace

HenselPair hensel_lift(const BiPoly& f, const UniPoly& g0, const UniPoly& h0, Elem t0, unsigned precision) {
  if (!f.is_monic_y()) throw NotMonic();
  if (!g0.is_monic() || !h0.is_monic()) throw Error("hensel_lift: starting factors must be monic");
  if (!gcd(g0, h0).is_one()) throw NotCoprime();
  if (!(g0 * h0 == f.eval_t(t0))) throw Error("hensel_lift: starting factors do not multiply to f(y, t0)");
  if (precision <= 1) return {BiPoly::from_y(g0), BiPoly::from_y(h0)};
  const Field& fld = f.field();
  const TSeries F = to_series(f.shift_t(t0), precision);
  auto [G, H] = lift_series(F, g0, h0, precision);
  const Elem back = fld.neg(t0);
  return {from_series(fld, G).shift_t(back), from_series(fld, H).shift_t(back)};
}

BiFactorization factor_bivariate(const BiPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  BiFactorization out{f.lex_lead(), {}};
  FactorList raw;
  const UniPoly content = content_y(f);
  if (content.degree() > 0) {
    for (const auto& fac : factor_univariate(content).factors)
      raw.emplace_back(BiPoly::from_t(fac.poly), fac.multiplicity);
  }
  const BiPoly prim = content.degree() > 0 ? f.divided_t(content) : f;
  if (prim.deg_y() > 0) {
    for (auto& fe : factor_primitive(prim)) raw.push_back(std::move(fe));
  }
  for (auto& [poly, mult] : raw) {
    BiPoly n = poly.normalized();
    auto it = std::find_if(out.factors.begin(), out.factors.end(), [&](const BiFactor& b) { return b.poly == n; });
    if (it != out.factors.end()) it->multiplicity += mult;
    else out.factors.push_back({std::move(n), mult});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const BiFactor& a, const BiFactor& b) { return canonical_less(a.poly, b.poly); });
  return out;
}

BiPoly expand(const Field& field, const BiFactorization& fz) {
  BiPoly acc = BiPoly::from_t(UniPoly::constant(field, fz.unit));
  for (const auto& fac : fz.factors)
    for (unsigned i = 0; i < fac.multiplicity; ++i) acc = acc * fac.poly;
  return acc;
}

}  // namespace sparsefac
