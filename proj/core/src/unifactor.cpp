#include "sparsefac/unifactor.hpp"

#include <algorithm>
#include <map>

namespace sparsefac {
namespace {

/// g(y) with g^p = f, for f whose exponents are all multiples of p.
UniPoly pth_root_poly(const UniPoly& f) {
  const Field& fld = f.field();
  const std::uint32_t p = fld.characteristic();
  std::vector<Elem> out(static_cast<std::size_t>(f.degree()) / p + 1, fld.zero());
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) out[i / p] = fld.pth_root(f.coeffs()[i]);
  return UniPoly(fld, std::move(out));
}

void sqf_rec(const UniPoly& f, unsigned scale, std::map<unsigned, UniPoly>& acc) {
  const Field& fld = f.field();
  auto push = [&](const UniPoly& part, unsigned m) {
    if (part.degree() <= 0) return;
    auto it = acc.find(m);
    if (it == acc.end()) acc.emplace(m, part);
    else it->second = it->second * part;
  };
  const UniPoly d = f.derivative();
  if (d.is_zero()) {
    sqf_rec(pth_root_poly(f), scale * fld.characteristic(), acc);
    return;
  }
  UniPoly c = gcd(f, d);
  UniPoly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    UniPoly y = gcd(w, c);
    push((w / y).monic(), i * scale);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) sqf_rec(pth_root_poly(c.monic()), scale * fld.characteristic(), acc);
}

/// Kernel basis of an n x n matrix given column-wise, by Gauss-Jordan.
std::vector<std::vector<Elem>> kernel(const Field& fld, std::vector<std::vector<Elem>> rows,
                                      std::size_t n) {
  std::vector<int> row_of_col(n, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const Elem inv = fld.inv(rows[r][c]);
    for (auto& x : rows[r]) x = fld.mul(x, inv);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c].is_zero()) continue;
      const Elem factor = rows[k][c];
      for (std::size_t j = 0; j < n; ++j) rows[k][j] = fld.sub(rows[k][j], fld.mul(factor, rows[r][j]));
    }
    row_of_col[c] = static_cast<int>(r);
    ++r;
  }
  std::vector<std::vector<Elem>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (row_of_col[free] >= 0) continue;
    std::vector<Elem> v(n, fld.zero());
    v[free] = fld.one();
    for (std::size_t c = 0; c < n; ++c) {
      if (row_of_col[c] < 0) continue;
      v[c] = fld.neg(rows[static_cast<std::size_t>(row_of_col[c])][free]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Absolute trace Tr_{F_q/F_p}(a) reduced mod m.
UniPoly trace_mod(const UniPoly& a, const UniPoly& m) {
  const Field& fld = m.field();
  UniPoly acc = a % m;
  UniPoly cur = acc;
  for (std::uint32_t i = 1; i < fld.degree(); ++i) {
    cur = powmod(cur, fld.characteristic(), m);
    acc += cur;
  }
  return acc;
}

}  // namespace

std::vector<UniFactor> squarefree_decompose(const UniPoly& f) {
  if (f.degree() <= 0) return {};
  std::map<unsigned, UniPoly> acc;
  sqf_rec(f.monic(), 1, acc);
  std::vector<UniFactor> out;
  for (auto& [m, part] : acc) out.push_back({part.monic(), m});
  return out;
}

std::vector<std::pair<UniPoly, unsigned>> distinct_degree(const UniPoly& f) {
  const Field& fld = f.field();
  std::vector<std::pair<UniPoly, unsigned>> out;
  UniPoly rest = f.monic();
  const UniPoly x = UniPoly::variable(fld);
  UniPoly h = x % rest;
  unsigned i = 1;
  while (rest.degree() >= 2 * static_cast<int>(i)) {
    h = powmod(h, fld.order(), rest);
    UniPoly g = gcd(h - x, rest);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      rest = rest / g;
      h = h % rest;
    }
    ++i;
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
  return out;
}

std::vector<UniPoly> berlekamp_split(const UniPoly& f) {
  const Field& fld = f.field();
  const UniPoly g = f.monic();
  const auto n = static_cast<std::size_t>(g.degree());
  if (n <= 1) return {g};

  // Column j of Q - I is x^{qj} mod g minus e_j; build it row-major.
  std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n, fld.zero()));
  const UniPoly xq = powmod(UniPoly::variable(fld), fld.order(), g);
  UniPoly col = UniPoly::constant(fld, fld.one());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) rows[i][j] = col.coeff(i);
    rows[j][j] = fld.sub(rows[j][j], fld.one());
    col = (col * xq) % g;
  }
  const auto basis = kernel(fld, std::move(rows), n);
  const std::size_t r = basis.size();
  std::vector<UniPoly> factors{g};
  if (r == 1) return factors;

  for (const auto& vec : basis) {
    const UniPoly v(fld, vec);
    if (v.degree() <= 0) continue;
    for (std::uint32_t k = 0; k < fld.degree() && factors.size() < r; ++k) {
      // beta = z^k has code p^k.
      std::uint32_t code = 1;
      for (std::uint32_t e = 0; e < k; ++e) code *= fld.characteristic();
      const UniPoly w = trace_mod(v.scaled(Elem{code}), g);
      if (w.degree() <= 0) continue;
      std::vector<UniPoly> next;
      for (const auto& u : factors) {
        if (u.degree() <= 1) {
          next.push_back(u);
          continue;
        }
        UniPoly rem = u;
        for (std::uint32_t c = 0; c < fld.characteristic() && rem.degree() > 0; ++c) {
          UniPoly d = gcd(rem, w - UniPoly::constant(fld, Elem{c}));
          if (d.degree() <= 0) continue;
          next.push_back(d);
          rem = rem / d;
        }
        if (rem.degree() > 0) next.push_back(rem.monic());
      }
      factors = std::move(next);
    }
    if (factors.size() == r) break;
  }
  std::sort(factors.begin(), factors.end(), canonical_less);
  return factors;
}

UniFactorization factor_univariate(const UniPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  UniFactorization out{f.lead(), {}};
  if (f.degree() == 0) return out;
  for (const auto& part : squarefree_decompose(f)) {
    for (const auto& [block, deg] : distinct_degree(part.poly)) {
      if (block.degree() == static_cast<int>(deg)) {
        out.factors.push_back({block, part.multiplicity});
        continue;
      }
      for (auto& irr : berlekamp_split(block)) out.factors.push_back({irr, part.multiplicity});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const UniFactor& a, const UniFactor& b) {
    if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
    return canonical_less(a.poly, b.poly);
  });
  return out;
}

UniPoly expand(const Field& field, const UniFactorization& fz) {
  UniPoly acc = UniPoly::constant(field, fz.unit);
  for (const auto& fac : fz.factors) acc = acc * pow(fac.poly, fac.multiplicity);
  return acc;
}

bool is_irreducible(const UniPoly& f) {
  if (f.degree() <= 0) return false;
  const auto fz = factor_univariate(f);
  return fz.factors.size() == 1 && fz.factors[0].multiplicity == 1;
}

}  // namespace sparsefac
