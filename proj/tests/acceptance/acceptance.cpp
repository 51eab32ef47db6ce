// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status
// when any criterion fails. Run a subset with `acceptance 1 3 5`.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "construct.hpp"
#include "oracles.hpp"
#include "sparsefac/bifactor.hpp"
#include "sparsefac/examples.hpp"
#include "sparsefac/factorizer.hpp"
#include "sparsefac/hitting.hpp"
#include "sparsefac/polytope.hpp"
#include "sparsefac/resultant.hpp"

using namespace sparsefac;
using namespace testutil;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

std::vector<Factor> normalized_sorted(std::vector<Factor> fs) {
  for (auto& f : fs) f.poly = lex_normalized(f.poly);
  std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) { return canonical_less(a.poly, b.poly); });
  return fs;
}

bool same_factors(const std::vector<Factor>& a, const std::vector<Factor>& b) {
  const auto x = normalized_sorted(a), y = normalized_sorted(b);
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i].poly == y[i].poly) || x[i].multiplicity != y[i].multiplicity) return false;
  return true;
}

// ---------------------------------------------------------------------------

Outcome round_trip_soundness() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20261019);
  const std::array<std::uint32_t, 3> primes{7, 11, 13};
  int exact = 0, matched = 0;
  const int total = 200;
  std::string first_bad;
  for (int i = 0; i < total; ++i) {
    const Field f = Field::make(primes[static_cast<std::size_t>(i) % primes.size()]);
    const std::size_t n = 2 + rng() % 3;
    const Construction c = random_construction(f, n, 3, 3, 2, rng);
    try {
      const Factorization fz = factor(c.poly);
      if (expand(f, n, fz) == c.poly) ++exact;
      if (same_factorization(fz, c)) {
        ++matched;
      } else if (first_bad.empty()) {
        first_bad = format_polynomial(c.poly);
      }
    } catch (const std::exception& e) {
      if (first_bad.empty()) first_bad = format_polynomial(c.poly) + " threw " + e.what();
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << exact << "/" << total << " re-multiply exactly, " << matched << "/" << total
     << " match the construction, " << fmt_seconds(secs) << " (budget 600s)";
  if (!first_bad.empty()) os << "; first failure: " << first_bad;
  return {exact == total && matched == total && secs <= 600.0, os.str()};
}

Outcome bivariate_oracle_equivalence() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(7);
  const std::array<std::uint32_t, 6> primes{2, 3, 5, 7, 11, 13};
  int agree = 0, extended = 0, brute_checked = 0, brute_ok = 0;
  const int total = 100;
  std::string first_bad;
  for (int i = 0; i < total; ++i) {
    const Field f = Field::make(primes[rng() % primes.size()]);
    SparsePoly g(f, 2);
    while (g.is_zero() || g.is_constant()) {
      const unsigned dy = rng() % 5, dt = rng() % 5;
      std::vector<Term> terms;
      for (unsigned a = 0; a <= dy; ++a)
        for (unsigned b = 0; b <= dt; ++b)
          if (rng() % 3 != 0) terms.push_back(Term{ExpVec{a, b}, Elem{static_cast<std::uint32_t>(rng() % f.order())}});
      g = SparsePoly(f, 2, std::move(terms));
    }
    bool ok = true;
    Factorization fz;
    try {
      fz = factor(g);
    } catch (const std::exception& e) {
      ok = false;
      if (first_bad.empty()) first_bad = format_polynomial(g) + " threw " + e.what();
    }
    if (ok) {
      try {
        const BiFactorization bf = factor_bivariate(BiPoly::from_sparse(g));
        std::vector<Factor> other;
        for (const auto& b : bf.factors) other.push_back(Factor{b.poly.to_sparse(), b.multiplicity});
        ok = bf.unit == fz.unit && same_factors(fz.factors, other);
      } catch (const FieldTooSmall&) {
        // The bivariate routine needs a larger field here; the full pipeline
        // extended the field. It must still round-trip exactly.
        ++extended;
        ok = expand(f, 2, fz) == g;
      }
      if (!ok && first_bad.empty()) first_bad = format_polynomial(g);
    }
    if (ok) ++agree;
    if (!ok) continue;
    for (const auto& fct : fz.factors) {
      const BiPoly b = BiPoly::from_sparse(fct.poly);
      if (b.deg_y() * b.deg_t() > 6) continue;
      ++brute_checked;
      if (brute_force_irreducible(b)) {
        ++brute_ok;
      } else if (first_bad.empty()) {
        first_bad = "reducible factor " + format_polynomial(fct.poly);
      }
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << agree << "/" << total << " agree (" << extended << " needed an extension field), " << brute_ok << "/"
     << brute_checked << " factors irreducible by exhaustive search, " << fmt_seconds(secs) << " (budget 300s)";
  if (!first_bad.empty()) os << "; first failure: " << first_bad;
  return {agree == total && brute_ok == brute_checked && secs <= 300.0, os.str()};
}

Outcome sparsity_examples() {
  std::ostringstream os;
  bool pass = true;
  const Field f7 = Field::make(7);
  const std::array<std::pair<std::size_t, unsigned>, 3> cases{{{2, 3}, {3, 2}, {4, 2}}};
  for (const auto& [n, d] : cases) {
    const SparsityExample ex = cyclotomic_product_example(f7, n, d);
    const std::uint64_t want_f = 1ull << n;
    std::uint64_t want_g = 1;
    for (std::size_t i = 0; i < n; ++i) want_g *= d;
    const bool ok = ex.divides && ex.f.sparsity() == want_f && ex.g.sparsity() == want_g;
    pass = pass && ok;
    os << "eg1(n=" << n << ",d=" << d << "): " << ex.f.sparsity() << "/" << ex.g.sparsity() << " ";
  }
  const SparsityExample ex2 = frobenius_example(Field::make(5), 3, 2);
  const bool ok2 = ex2.divides && ex2.f.sparsity() == 3 && ex2.g.sparsity() == 6;
  pass = pass && ok2;
  os << "eg2(F_5,n=3,d=2): " << ex2.f.sparsity() << "/" << ex2.g.sparsity();
  return {pass, os.str()};
}

Outcome corner_point_bound() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(99);
  int bound_ok = 0, exponent_ok = 0, brute = 0, brute_ok = 0;
  const int total = 500;
  std::string first_bad;
  for (int i = 0; i < total; ++i) {
    const std::size_t n = 1 + rng() % 6;
    const unsigned d = 1 + static_cast<unsigned>(rng() % 3);
    std::uint64_t box = 1;
    for (std::size_t j = 0; j < n; ++j) box *= d + 1;
    const std::size_t count = 1 + rng() % std::min<std::uint64_t>(40, box);
    const Support e = random_support(n, d, count, rng);
    const double log2n = std::log2(static_cast<double>(std::max<std::size_t>(n, 2)));
    const auto expected_exp = static_cast<std::uint64_t>(std::ceil(5.0 * d * d * log2n - 1e-9));
    try {
      const CaratheodoryReport r = caratheodory_check(e, d);
      if (r.exponent == expected_exp) ++exponent_ok;
      long double lhs = 1;
      for (std::uint64_t k = 0; k < r.exponent && lhs < 1e30L; ++k) lhs *= static_cast<long double>(r.vertices);
      if (r.bound_holds && lhs >= static_cast<long double>(e.size())) ++bound_ok;
    } catch (const BoundViolation& bv) {
      if (first_bad.empty()) first_bad = bv.what();
    }
    if (e.size() <= 10) {
      ++brute;
      if (newton_vertices(e).vertices == brute_force_vertices(e)) ++brute_ok;
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << bound_ok << "/" << total << " satisfy t^exponent >= |E|, " << exponent_ok << "/" << total
     << " exponents match ceil(5 d^2 log2 max(n,2)), " << brute_ok << "/" << brute
     << " vertex sets match the all-subsets oracle, " << fmt_seconds(secs) << " (budget 300s)";
  if (!first_bad.empty()) os << "; " << first_bad;
  return {bound_ok == total && exponent_ok == total && brute_ok == brute && secs <= 300.0, os.str()};
}

Outcome hadamard_tightness() {
  const HadamardReport r = hadamard_example(3);
  std::ostringstream os;
  os << r.vertices.vertices.size() << " hull vertices, " << r.subspaces << " subspaces, "
     << r.distinct_subspace_points << " distinct subspace points, all certified in hull: "
     << (r.all_in_hull ? "yes" : "no");
  const bool pass =
      r.vertices.vertices.size() == 8 && r.subspaces == 16 && r.distinct_subspace_points >= 16 && r.all_in_hull;
  return {pass, os.str()};
}

SparsePoly random_monic(const Field& f, std::size_t n, unsigned d, std::mt19937_64& rng) {
  const unsigned k = 1 + static_cast<unsigned>(rng() % d);
  ExpVec top(n + 1);
  top.set(0, k);
  std::vector<Term> terms{Term{top, f.one()}};
  const std::size_t extra = 1 + rng() % 5;
  for (std::size_t t = 0; t < extra; ++t) {
    ExpVec e(n + 1);
    e.set(0, static_cast<unsigned>(rng() % k));
    for (std::size_t l = 1; l <= n; ++l) e.set(l, static_cast<unsigned>(rng() % (d + 1)));
    terms.push_back(Term{e, Elem{static_cast<std::uint32_t>(1 + rng() % (f.order() - 1))}});
  }
  return SparsePoly(f, n + 1, std::move(terms));
}

bool share_factor(const SparsePoly& f, const SparsePoly& g) {
  const auto a = normalized_sorted(factor(f).factors), b = normalized_sorted(factor(g).factors);
  for (const auto& x : a)
    for (const auto& y : b)
      if (x.poly == y.poly) return true;
  return false;
}

Outcome resultant_identities() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(6);
  const Field f = Field::make(23);
  int pointwise_ok = 0, hitting_ok = 0, gcd_ok = 0;
  const int total = 100;
  std::string first_bad;
  for (int i = 0; i < total; ++i) {
    const std::size_t n = 1 + rng() % 3;
    SparsePoly a = random_monic(f, n, 3, rng), b = random_monic(f, n, 3, rng);
    if (i % 2 == 1) {
      // Planted common factor, keeping individual degrees at most 3.
      const SparsePoly h = random_monic(f, n, 1, rng);
      a = h * random_monic(f, n, 1, rng);
      b = h * random_monic(f, n, 1, rng);
    }
    const std::vector<unsigned> small_grid{0, 1, 2};
    bool pw = true, gcd_consistent = true;
    std::vector<Elem> pt(n);
    std::uint64_t combos = 1;
    for (std::size_t l = 0; l < n; ++l) combos *= small_grid.size();
    for (std::uint64_t c = 0; c < combos; ++c) {
      std::uint64_t rest = c;
      for (std::size_t l = 0; l < n; ++l) {
        pt[l] = f.from_int(small_grid[rest % small_grid.size()]);
        rest /= small_grid.size();
      }
      const UniPoly pa = project_to_y(a, pt), pb = project_to_y(b, pt);
      const Elem r = resultant_at_point(a, b, pt);
      pw = pw && r == resultant_univariate(pa, pb);
      gcd_consistent = gcd_consistent && (r.is_zero() == (gcd(pa, pb).degree() > 0));
    }
    if (pw) ++pointwise_ok;
    if (gcd_consistent) ++gcd_ok;

    unsigned dbound = 0;
    for (std::size_t l = 1; l <= n; ++l)
      dbound = std::max(dbound, a.degree_in(0) * b.degree_in(l) + b.degree_in(0) * a.degree_in(l));
    const HittingSet hs = gen_hitting_set(f, HittingParams{n, 1, std::max(1u, dbound), 1, HittingStrategy::grid});
    bool all_zero = true;
    for (std::uint64_t k = 0; k < hs.size() && all_zero; ++k) {
      const auto p = hs.at(k);
      all_zero = resultant_at_point(a, b, p).is_zero();
    }
    const bool common = share_factor(a, b);
    if (all_zero == common) {
      ++hitting_ok;
    } else if (first_bad.empty()) {
      first_bad = format_polynomial(a, VarStyle::y_first) + " , " + format_polynomial(b, VarStyle::y_first);
    }
  }
  // Hand cases: Res_y(y - x1, y - x2) = x1 - x2 and Res_y(y^2 - x1, y - x2) = x2^2 - x1.
  bool symbolic = true;
  {
    const SparsePoly a = parse_polynomial("y - x1", f, 3, VarStyle::y_first).poly;
    const SparsePoly b = parse_polynomial("y - x2", f, 3, VarStyle::y_first).poly;
    const SparsePoly c = parse_polynomial("y^2 - x1", f, 3, VarStyle::y_first).poly;
    for (int u = 0; u < 23; u += 3) {
      for (int v = 0; v < 23; v += 5) {
        const std::vector<Elem> p{f.from_int(u), f.from_int(v)};
        symbolic = symbolic && resultant_at_point(a, b, p) == f.from_int(u - v);
        symbolic = symbolic && resultant_at_point(c, b, p) == f.from_int(v * v - u);
      }
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << pointwise_ok << "/" << total << " pointwise equal, " << gcd_ok << "/" << total
     << " zero pattern matches projected gcds, " << hitting_ok << "/" << total
     << " (Res vanishes on the hitting grid) <=> (common factor), symbolic cases "
     << (symbolic ? "ok" : "wrong") << ", " << fmt_seconds(secs) << " (budget 120s)";
  if (!first_bad.empty()) os << "; first failure: " << first_bad;
  return {pointwise_ok == total && gcd_ok == total && hitting_ok == total && symbolic && secs <= 120.0, os.str()};
}

Outcome hitting_soundness() {
  const auto t0 = Clock::now();
  const Field f7 = Field::make(7);
  std::uint64_t checked = 0, hit = 0;
  for (std::size_t n = 1; n <= 2; ++n) {
    const HittingSet hs = gen_hitting_set(f7, HittingParams{n, n == 1 ? 3u : 9u, 2, 1, HittingStrategy::grid});
    const auto points = hs.points();
    std::vector<ExpVec> monos;
    for (unsigned a = 0; a <= 2; ++a) {
      if (n == 1) {
        monos.push_back(ExpVec{a});
        continue;
      }
      for (unsigned b = 0; b <= 2; ++b) monos.push_back(ExpVec{a, b});
    }
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < monos.size(); ++i) combos *= 3;
    for (std::uint64_t c = 1; c < combos; ++c) {
      std::vector<Term> terms;
      std::uint64_t rest = c;
      for (const auto& m : monos) {
        const auto coeff = static_cast<std::uint32_t>(rest % 3);
        rest /= 3;
        if (coeff) terms.push_back(Term{m, Elem{coeff}});
      }
      const SparsePoly p(f7, n, std::move(terms));
      ++checked;
      for (const auto& pt : points) {
        if (!evaluate(p, pt).is_zero()) {
          ++hit;
          break;
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << hit << "/" << checked << " nonzero polynomials have a nonzero point, " << fmt_seconds(secs)
     << " (budget 120s)";
  return {hit == checked && secs <= 120.0, os.str()};
}

Outcome make_monic_bounds() {
  std::mt19937_64 rng(8);
  const Field f = Field::make(11);
  int ok = 0;
  const int total = 200;
  std::uint64_t worst_ratio_num = 0, worst_ratio_den = 1;
  for (int i = 0; i < total; ++i) {
    const std::size_t n = 2 + rng() % 4;
    const unsigned d = 1 + static_cast<unsigned>(rng() % 3);
    const std::size_t s = 1 + rng() % 20;
    std::vector<Term> terms;
    ExpVec lead(n);
    lead.set(n - 1, 1 + static_cast<unsigned>(rng() % d));
    for (std::size_t l = 0; l + 1 < n; ++l) lead.set(l, static_cast<unsigned>(rng() % (d + 1)));
    terms.push_back(Term{lead, f.one()});
    for (std::size_t t = 1; t < s; ++t) {
      ExpVec e(n);
      for (std::size_t l = 0; l < n; ++l) e.set(l, static_cast<unsigned>(rng() % (d + 1)));
      terms.push_back(Term{e, Elem{static_cast<std::uint32_t>(1 + rng() % 10)}});
    }
    const SparsePoly g(f, n, std::move(terms));
    const std::uint64_t sg = g.sparsity();
    const unsigned dg = g.individual_degree();
    try {
      const MonicTransform mt = make_monic(g);
      const std::uint64_t bound = saturating_pow(sg, dg);
      if (mt.fhat.sparsity() <= bound && mt.fhat.individual_degree() <= dg * dg) ++ok;
      if (mt.fhat.sparsity() * worst_ratio_den > worst_ratio_num * bound) {
        worst_ratio_num = mt.fhat.sparsity();
        worst_ratio_den = bound;
      }
    } catch (const std::exception&) {
    }
  }
  std::ostringstream os;
  os << ok << "/" << total << " within ||fhat|| <= s^d and individual degree <= d^2 (tightest ratio "
     << worst_ratio_num << "/" << worst_ratio_den << ")";
  return {ok == total, os.str()};
}

/// Monic in y (variable 0), irreducible: constant leading coefficient in y
/// and an irreducible restriction of full degree at some point.
SparsePoly certified_monic_irreducible(const Field& f, std::size_t n, unsigned dy, unsigned dx,
                                       std::mt19937_64& rng) {
  while (true) {
    const unsigned k = 1 + static_cast<unsigned>(rng() % dy);
    ExpVec top(n + 1);
    top.set(0, k);
    std::vector<Term> terms{Term{top, f.one()}};
    const std::size_t extra = 1 + rng() % 4;
    for (std::size_t t = 0; t < extra; ++t) {
      ExpVec e(n + 1);
      e.set(0, static_cast<unsigned>(rng() % k));
      for (std::size_t l = 1; l <= n; ++l) e.set(l, static_cast<unsigned>(rng() % (dx + 1)));
      terms.push_back(Term{e, Elem{static_cast<std::uint32_t>(1 + rng() % (f.order() - 1))}});
    }
    const SparsePoly h(f, n + 1, std::move(terms));
    bool uses_x = false;
    for (std::size_t l = 1; l <= n; ++l) uses_x = uses_x || h.depends_on(l);
    if (!uses_x) continue;
    if (k == 1) return h;
    for (int attempt = 0; attempt < 16; ++attempt) {
      std::vector<Elem> pt(n);
      for (auto& x : pt) x = Elem{static_cast<std::uint32_t>(rng() % f.order())};
      if (is_irreducible(project_to_y(h, pt))) return h;
    }
  }
}

Outcome blackbox_consistency() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(9);
  int endpoint_ok = 0, lines_ok = 0, lines_total = 0;
  const int total = 50;
  std::string first_bad;
  for (int i = 0; i < total; ++i) {
    const Field f = Field::make(i % 2 == 0 ? 11 : 13);
    const std::size_t n = 1 + rng() % 3;
    const std::size_t parts = 1 + rng() % 3;
    std::vector<SparsePoly> hs;
    std::vector<unsigned> es;
    while (hs.size() < parts) {
      const SparsePoly h = certified_monic_irreducible(f, n, 2, 1, rng);
      if (std::find(hs.begin(), hs.end(), h) != hs.end()) continue;
      hs.push_back(h);
      es.push_back(1 + static_cast<unsigned>(rng() % 2));
    }
    SparsePoly prod = SparsePoly::constant(f, n + 1, f.one());
    for (std::size_t j = 0; j < parts; ++j) prod = prod * hs[j].pow(es[j]);

    // Anchor: first grid point where the parts stay pairwise coprime.
    std::vector<Elem> anchor;
    for (std::uint64_t idx = 0;; ++idx) {
      std::vector<Elem> a(n);
      std::uint64_t rest = idx;
      for (auto& x : a) {
        x = f.at(rest % f.order());
        rest /= f.order();
      }
      bool good = true;
      for (std::size_t p = 0; p < parts && good; ++p)
        for (std::size_t q = p + 1; q < parts && good; ++q) good = !resultant_at_point(hs[p], hs[q], a).is_zero();
      if (good) {
        anchor = a;
        break;
      }
    }
    const UniFactorization uf = factor_univariate(project_to_y(prod, anchor));
    Guess g;
    g.anchor = anchor;
    std::vector<std::size_t> next;
    for (const auto& u : uf.factors) {
      next.push_back(g.uni_factors.size());
      for (unsigned r = 0; r < u.multiplicity; ++r) g.uni_factors.push_back(u.poly);
    }
    std::vector<UniPoly> expected_at_anchor;
    for (std::size_t j = 0; j < parts; ++j) {
      const UniPoly hj = project_to_y(hs[j], anchor);
      expected_at_anchor.push_back(hj);
      std::vector<std::size_t> idx;
      for (const auto& piece : factor_univariate(hj).factors) {
        std::size_t k = 0;
        while (!(uf.factors[k].poly == piece.poly)) ++k;
        for (unsigned r = 0; r < piece.multiplicity; ++r) idx.push_back(next[k]++);
      }
      g.parts.push_back(idx);
      g.exps.push_back(es[j]);
    }
    try {
      const auto at_anchor = blackbox_eval(prod, g, anchor);
      if (at_anchor == expected_at_anchor) ++endpoint_ok;
      for (int r = 0; r < 3; ++r) {
        std::vector<Elem> b(n);
        for (auto& x : b) x = Elem{static_cast<std::uint32_t>(rng() % f.order())};
        ++lines_total;
        const auto out = blackbox_eval(prod, g, b);
        UniPoly acc = UniPoly::constant(f, f.one());
        bool each = true;
        for (std::size_t j = 0; j < parts; ++j) {
          acc = acc * pow(out[j], es[j]);
          each = each && out[j] == project_to_y(hs[j], b);
        }
        if (acc == project_to_y(prod, b) && each) ++lines_ok;
      }
    } catch (const std::exception& e) {
      if (first_bad.empty()) first_bad = format_polynomial(prod, VarStyle::y_first) + " threw " + e.what();
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << endpoint_ok << "/" << total << " anchor endpoints return the part products, " << lines_ok << "/"
     << lines_total << " random lines multiply back to f(y,b), " << fmt_seconds(secs) << " (budget 120s)";
  if (!first_bad.empty()) os << "; first failure: " << first_bad;
  return {endpoint_ok == total && lines_ok == 3 * total && secs <= 120.0, os.str()};
}

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

Outcome cli_determinism() {
  const std::string cli = SPARSEFAC_CLI_PATH;
  const std::string samples = SPARSEFAC_SAMPLES_PATH;
  const std::vector<std::string> suite{
      "factor --prime 7 --input " + samples,
      "factor --prime 7 --json --input " + samples,
      "factor --prime 2 --poly '(x1*x2 + x3 + 1)*(x1^2 + x1*x3 + x2)'",
      "factor --prime 3 --ext 2 --poly 'y^2 - [0,1]*x1^2'",
      "factor --prime 13 --parallel 2 --poly '(x1*x2 + x3^2 + 1)*(x3*x2 + x1 + 5)'",
      "verify --prime 7 --poly 'x1^2 + 6' --factor 'x1 + 1' --factor 'x1 + 6'",
      "verify --prime 7 --poly 'x1^2 + 6' --factor 'x1 + 1' --factor 'x1 + 5'",
      "polytope --prime 7 --uniform --poly 'x1^2*x2 + x2^3 + x1*x2 + 1'",
      "hitset --prime 11 --n 2 --d 2 --s 3",
      "hitset --prime 2 --ext 12 --strategy ks --n 2 --d 1 --s 2 --limit 10",
      "examples --which eg1 --n 3 --d 2 --prime 7",
      "examples --which eg2 --n 3 --d 2 --prime 5",
      "examples --which hadamard --m 3",
  };
  std::string first, second;
  int failures = 0;
  for (int round = 0; round < 2; ++round) {
    std::string& out = round == 0 ? first : second;
    for (const auto& args : suite) {
      int status = 0;
      out += "$ " + args + "\n" + run_capture(cli + " " + args, status);
      if (status != 0) ++failures;
    }
  }
  const bool same = first == second;
  std::ostringstream os;
  os << suite.size() << " CLI invocations run twice, outputs " << (same ? "byte-identical" : "DIFFER") << " ("
     << first.size() << " bytes), " << failures << " nonzero exits";
  return {same && failures == 0 && !first.empty(), os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"round-trip soundness", round_trip_soundness},
      {"bivariate oracle equivalence", bivariate_oracle_equivalence},
      {"sparsity-bound examples", sparsity_examples},
      {"corner-point bound", corner_point_bound},
      {"Hadamard tightness", hadamard_tightness},
      {"resultant identities", resultant_identities},
      {"hitting-set soundness", hitting_soundness},
      {"make-monic bounds", make_monic_bounds},
      {"black-box endpoint consistency", blackbox_consistency},
      {"determinism", cli_determinism},
  };
  std::set<std::size_t> selected;
  for (int i = 1; i < argc; ++i) selected.insert(static_cast<std::size_t>(std::stoul(argv[i])));

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!selected.empty() && !selected.count(i + 1)) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << (i + 1) << " [" << criteria[i].first << "]: " << (o.pass ? "PASS" : "FAIL") << " - "
              << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
