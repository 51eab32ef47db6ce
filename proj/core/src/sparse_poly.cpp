#include "sparsefac/sparse_poly.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace sparsefac {

// ---------------------------------------------------------------- ExpVec

ExpVec::ExpVec(std::size_t n) {
  if (n > kMaxVars) throw ShapeMismatch("at most 16 variables are supported");
  n_ = static_cast<std::uint8_t>(n);
}

ExpVec::ExpVec(std::initializer_list<unsigned> exps) : ExpVec(exps.size()) {
  std::size_t i = 0;
  for (auto e : exps) set(i++, e);
}

ExpVec::ExpVec(std::span<const unsigned> exps) : ExpVec(exps.size()) {
  for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

void ExpVec::set(std::size_t i, unsigned v) {
  if (v > std::numeric_limits<std::uint16_t>::max()) throw ShapeMismatch("exponent too large");
  e_[i] = static_cast<std::uint16_t>(v);
}

unsigned ExpVec::total() const {
  unsigned t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += e_[i];
  return t;
}

unsigned ExpVec::max_entry() const {
  unsigned m = 0;
  for (std::size_t i = 0; i < n_; ++i) m = std::max<unsigned>(m, e_[i]);
  return m;
}

std::vector<unsigned> ExpVec::to_vector() const { return {e_.begin(), e_.begin() + n_}; }

ExpVec operator+(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) r.set(i, static_cast<unsigned>(a.e_[i]) + b.e_[i]);
  return r;
}

ExpVec operator-(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = static_cast<std::uint16_t>(a.e_[i] - b.e_[i]);
  return r;
}

bool divides(const ExpVec& b, const ExpVec& a) {
  for (std::size_t i = 0; i < a.n_; ++i)
    if (b.e_[i] > a.e_[i]) return false;
  return true;
}

bool operator==(const ExpVec& a, const ExpVec& b) {
  if (a.n_ != b.n_) return false;
  for (std::size_t i = 0; i < a.n_; ++i)
    if (a.e_[i] != b.e_[i]) return false;
  return true;
}

bool lex_less(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < a.n_; ++i)
    if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i];
  return false;
}

bool grlex_greater(const ExpVec& a, const ExpVec& b) {
  const unsigned ta = a.total(), tb = b.total();
  if (ta != tb) return ta > tb;
  return lex_less(b, a);
}

namespace {

struct GrlexGreater {
  bool operator()(const ExpVec& a, const ExpVec& b) const { return grlex_greater(a, b); }
};

void check_same(const SparsePoly& f, const SparsePoly& g) {
  if (f.nvars() != g.nvars()) throw ShapeMismatch("polynomials have different numbers of variables");
  if (!(f.field() == g.field())) throw CtxMismatch();
}

std::uint64_t sat_pow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (b != 0 && r > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
    r *= b;
  }
  return r;
}

/// Powers base^0..base^max of a univariate polynomial.
std::vector<UniPoly> power_table(const UniPoly& base, unsigned max) {
  std::vector<UniPoly> out;
  out.reserve(max + 1);
  out.push_back(UniPoly::constant(base.field(), base.field().one()));
  for (unsigned i = 1; i <= max; ++i) out.push_back(out.back() * base);
  return out;
}

std::vector<Elem> elem_power_table(const Field& f, Elem base, unsigned max) {
  std::vector<Elem> out(max + 1);
  out[0] = f.one();
  for (unsigned i = 1; i <= max; ++i) out[i] = f.mul(out[i - 1], base);
  return out;
}

}  // namespace

// ------------------------------------------------------------ SparsePoly

SparsePoly::SparsePoly(Field field, std::size_t nvars) : field_(std::move(field)), n_(nvars) {
  if (nvars > ExpVec::kMaxVars) throw ShapeMismatch("at most 16 variables are supported");
}

SparsePoly::SparsePoly(Field field, std::size_t nvars, std::vector<Term> terms)
    : SparsePoly(std::move(field), nvars) {
  terms_ = std::move(terms);
  for (const auto& t : terms_)
    if (t.exps.size() != n_) throw ShapeMismatch("exponent vector length differs from arity");
  normalize();
}

void SparsePoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.exps, b.exps); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exps == t.exps) {
      merged.back().coeff = field_.add(merged.back().coeff, t.coeff);
    } else {
      if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
      merged.push_back(t);
    }
  }
  if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
  terms_ = std::move(merged);
}

SparsePoly SparsePoly::constant(const Field& f, std::size_t nvars, Elem c) {
  return SparsePoly(f, nvars, {Term{ExpVec(nvars), c}});
}

SparsePoly SparsePoly::variable(const Field& f, std::size_t nvars, std::size_t i) {
  ExpVec e(nvars);
  e.set(i, 1);
  return SparsePoly(f, nvars, {Term{e, f.one()}});
}

SparsePoly SparsePoly::monomial(const Field& f, Elem c, const ExpVec& e) {
  return SparsePoly(f, e.size(), {Term{e, c}});
}

bool SparsePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exps.total() == 0);
}

bool SparsePoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exps.total() == 0 && terms_[0].coeff == field_.one();
}

const Term& SparsePoly::leading_term() const {
  if (terms_.empty()) throw ZeroPolynomial();
  return terms_.front();
}

unsigned SparsePoly::degree_in(std::size_t i) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exps[i]);
  return d;
}

unsigned SparsePoly::individual_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exps.max_entry());
  return d;
}

unsigned SparsePoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().exps.total(); }

bool SparsePoly::depends_on(std::size_t i) const {
  return std::any_of(terms_.begin(), terms_.end(), [i](const Term& t) { return t.exps[i] > 0; });
}

Elem SparsePoly::coefficient(const ExpVec& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const ExpVec& v) { return grlex_greater(t.exps, v); });
  if (it != terms_.end() && it->exps == e) return it->coeff;
  return Elem{};
}

SparsePoly SparsePoly::scaled(Elem s) const {
  if (s.is_zero()) return SparsePoly(field_, n_);
  SparsePoly r = *this;
  for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, s);
  return r;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly result = constant(field_, n_, field_.one());
  SparsePoly b = *this;
  while (e) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  check_same(a, b);
  const Field& f = a.field_;
  SparsePoly r(f, a.n_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && grlex_greater(a.terms_[i].exps, b.terms_[j].exps))) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || grlex_greater(b.terms_[j].exps, a.terms_[i].exps)) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      const Elem c = f.add(a.terms_[i].coeff, b.terms_[j].coeff);
      if (!c.is_zero()) r.terms_.push_back(Term{a.terms_[i].exps, c});
      ++i;
      ++j;
    }
  }
  return r;
}

SparsePoly operator-(const SparsePoly& a) {
  SparsePoly r = a;
  for (auto& t : r.terms_) t.coeff = a.field_.neg(t.coeff);
  return r;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a + (-b); }

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  check_same(a, b);
  const Field& f = a.field_;
  if (a.is_zero() || b.is_zero()) return SparsePoly(f, a.n_);
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const SparsePoly& mono = a.terms_.size() == 1 ? a : b;
    const SparsePoly& other = a.terms_.size() == 1 ? b : a;
    SparsePoly r(f, a.n_);
    r.terms_.reserve(other.terms_.size());
    const Term& m = mono.terms_[0];
    // Multiplying by a monomial preserves graded-lex order.
    for (const auto& t : other.terms_) r.terms_.push_back(Term{t.exps + m.exps, f.mul(t.coeff, m.coeff)});
    return r;
  }
  std::vector<Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prods.push_back(Term{s.exps + t.exps, f.mul(s.coeff, t.coeff)});
  return SparsePoly(f, a.n_, std::move(prods));
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].exps == b.terms_[i].exps) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

// ------------------------------------------------------------ operations

SparsePoly combine(const SparsePoly& f, const SparsePoly& g, CombineKind kind) {
  check_same(f, g);
  return kind == CombineKind::add ? f + g : f * g;
}

Elem evaluate(const SparsePoly& f, std::span<const Elem> point) {
  if (point.size() != f.nvars()) throw ShapeMismatch("point length differs from arity");
  const Field& fld = f.field();
  std::vector<std::vector<Elem>> pw(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) pw[i] = elem_power_table(fld, point[i], f.degree_in(i));
  Elem acc = fld.zero();
  for (const auto& t : f.terms()) {
    Elem v = t.coeff;
    for (std::size_t i = 0; i < f.nvars() && !v.is_zero(); ++i) v = fld.mul(v, pw[i][t.exps[i]]);
    acc = fld.add(acc, v);
  }
  return acc;
}

SparsePoly substitute_values(const SparsePoly& f, std::span<const std::size_t> vars,
                             std::span<const Elem> values) {
  if (vars.size() != values.size()) throw ShapeMismatch("variable and value lists differ in length");
  const Field& fld = f.field();
  std::vector<std::vector<Elem>> pw(vars.size());
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (vars[k] >= f.nvars()) throw ShapeMismatch("variable index out of range");
    pw[k] = elem_power_table(fld, values[k], f.degree_in(vars[k]));
  }
  std::vector<Term> out;
  out.reserve(f.sparsity());
  for (const auto& t : f.terms()) {
    Term r = t;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      r.coeff = fld.mul(r.coeff, pw[k][t.exps[vars[k]]]);
      r.exps.set(vars[k], 0);
    }
    if (!r.coeff.is_zero()) out.push_back(r);
  }
  return SparsePoly(fld, f.nvars(), std::move(out));
}

SparsePoly evaluate_partial(const SparsePoly& f, std::span<const std::size_t> vars,
                            std::span<const Elem> values) {
  SparsePoly sub = substitute_values(f, vars, values);
  std::vector<bool> gone(f.nvars(), false);
  for (auto v : vars) gone[v] = true;
  std::vector<std::size_t> map(f.nvars(), 0);
  std::size_t next = 0;
  for (std::size_t i = 0; i < f.nvars(); ++i)
    if (!gone[i]) map[i] = next++;
  std::vector<Term> out;
  out.reserve(sub.sparsity());
  for (const auto& t : sub.terms()) {
    ExpVec e(next);
    for (std::size_t i = 0; i < f.nvars(); ++i)
      if (!gone[i]) e.set(map[i], t.exps[i]);
    out.push_back(Term{e, t.coeff});
  }
  return SparsePoly(f.field(), next, std::move(out));
}

std::vector<UniPoly> line_coefficients(const SparsePoly& f, std::span<const Elem> a,
                                       std::span<const Elem> b) {
  const std::size_t n = f.nvars() == 0 ? 0 : f.nvars() - 1;
  if (f.nvars() == 0 || a.size() != n || b.size() != n)
    throw ShapeMismatch("line endpoints must have one entry per non-y variable");
  const Field& fld = f.field();
  std::vector<std::vector<UniPoly>> pw(n);
  for (std::size_t i = 0; i < n; ++i) {
    const UniPoly lin(fld, {a[i], fld.sub(b[i], a[i])});
    pw[i] = power_table(lin, f.degree_in(i + 1));
  }
  std::vector<UniPoly> out(f.degree_in(0) + 1, UniPoly(fld));
  for (const auto& t : f.terms()) {
    UniPoly m = UniPoly::constant(fld, t.coeff);
    for (std::size_t i = 0; i < n; ++i)
      if (t.exps[i + 1] > 0) m = m * pw[i][t.exps[i + 1]];
    out[t.exps[0]] += m;
  }
  return out;
}

SparsePoly restrict_to_line(const SparsePoly& f, std::span<const Elem> a, std::span<const Elem> b) {
  const auto coeffs = line_coefficients(f, a, b);
  std::vector<Term> out;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const auto& c = coeffs[j].coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) out.push_back(Term{ExpVec{static_cast<unsigned>(j), static_cast<unsigned>(i)}, c[i]});
  }
  return SparsePoly(f.field(), 2, std::move(out));
}

std::vector<SparsePoly> coefficients_in(const SparsePoly& f, std::size_t i) {
  std::vector<std::vector<Term>> buckets(f.degree_in(i) + 1);
  for (const auto& t : f.terms()) {
    Term r = t;
    r.exps.set(i, 0);
    buckets[t.exps[i]].push_back(r);
  }
  std::vector<SparsePoly> out;
  out.reserve(buckets.size());
  for (auto& bucket : buckets) out.emplace_back(f.field(), f.nvars(), std::move(bucket));
  return out;
}

std::vector<SparsePoly> y_coefficients(const SparsePoly& f) {
  std::vector<std::size_t> map(f.nvars());
  for (std::size_t i = 1; i < f.nvars(); ++i) map[i] = i - 1;
  std::vector<SparsePoly> out;
  for (auto& c : coefficients_in(f, 0)) out.push_back(remap(c, f.nvars() - 1, map));
  return out;
}

LeadInfo lead_and_degrees(const SparsePoly& f, std::size_t i) {
  if (f.is_zero()) throw ZeroPolynomial();
  if (i >= f.nvars()) throw ShapeMismatch("variable index out of range");
  auto coeffs = coefficients_in(f, i);
  const unsigned deg = static_cast<unsigned>(coeffs.size() - 1);
  return {std::move(coeffs.back()), deg};
}

MonicTransform make_monic(const SparsePoly& f) {
  if (f.nvars() == 0) throw ZeroDegree();
  const std::size_t last = f.nvars() - 1;
  const unsigned k = f.degree_in(last);
  if (f.is_zero() || k == 0) throw ZeroDegree();
  const std::size_t n = last;  // number of remaining x variables
  const Field& fld = f.field();

  // Coefficients f_j as polynomials in (y, x_1..x_n) with y absent.
  std::vector<std::size_t> map(f.nvars());
  for (std::size_t i = 0; i < last; ++i) map[i] = i + 1;
  map[last] = 0;
  auto raw = coefficients_in(f, last);
  std::vector<SparsePoly> fj;
  fj.reserve(raw.size());
  for (auto& c : raw) fj.push_back(remap(c, n + 1, map));

  std::vector<SparsePoly> fk_pow{SparsePoly::constant(fld, n + 1, fld.one())};
  for (unsigned m = 1; m < k; ++m) fk_pow.push_back(fk_pow.back() * fj[k]);

  ExpVec yk(n + 1);
  yk.set(0, k);
  SparsePoly fhat = SparsePoly::monomial(fld, fld.one(), yk);
  for (unsigned j = 0; j < k; ++j) {
    if (fj[j].is_zero()) continue;
    ExpVec yj(n + 1);
    yj.set(0, j);
    fhat = fhat + fj[j] * fk_pow[k - 1 - j] * SparsePoly::monomial(fld, fld.one(), yj);
  }

  const std::uint64_t s = f.sparsity();
  const unsigned d = f.individual_degree();
  if (fhat.sparsity() > sat_pow(s, d)) throw std::logic_error("make_monic: sparsity bound violated");
  if (fhat.individual_degree() > d * d) throw std::logic_error("make_monic: degree bound violated");

  std::vector<std::size_t> down(n + 1);
  for (std::size_t i = 1; i <= n; ++i) down[i] = i - 1;
  SparsePoly fk = remap(fj[k], n, std::span<const std::size_t>(down).subspan(0, n + 1));
  return {std::move(fhat), std::move(fk), k};
}

std::optional<SparsePoly> sparse_divide(const SparsePoly& f, const SparsePoly& g, std::size_t cap) {
  check_same(f, g);
  if (g.is_zero()) throw DivByZero();
  const Field& fld = f.field();
  if (f.is_zero()) return SparsePoly(fld, f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i)
    if (g.degree_in(i) > f.degree_in(i)) return std::nullopt;

  std::map<ExpVec, Elem, GrlexGreater> rem;
  for (const auto& t : f.terms()) rem.emplace(t.exps, t.coeff);
  const Term& lg = g.leading_term();
  const Elem inv_lg = fld.inv(lg.coeff);
  std::vector<Term> quot;
  while (!rem.empty()) {
    const auto it = rem.begin();
    if (!divides(lg.exps, it->first)) return std::nullopt;
    if (quot.size() >= cap) return std::nullopt;
    const Term q{it->first - lg.exps, fld.mul(it->second, inv_lg)};
    quot.push_back(q);
    for (const auto& t : g.terms()) {
      const ExpVec e = t.exps + q.exps;
      const Elem c = fld.mul(t.coeff, q.coeff);
      auto [pos, inserted] = rem.emplace(e, fld.neg(c));
      if (!inserted) {
        pos->second = fld.sub(pos->second, c);
        if (pos->second.is_zero()) rem.erase(pos);
      }
    }
  }
  SparsePoly h(fld, f.nvars(), std::move(quot));
  if (!(g * h == f)) return std::nullopt;
  return h;
}

long long phi_score(std::span<const unsigned> e) {
  if (e.empty()) throw EmptyVector();
  long long sum = 0;
  for (auto x : e) sum += x;
  return 2 * sum - static_cast<long long>(e.size());
}

SparsePoly remap(const SparsePoly& f, std::size_t new_nvars, std::span<const std::size_t> map) {
  if (map.size() < f.nvars()) throw ShapeMismatch("variable map too short");
  std::vector<Term> out;
  out.reserve(f.sparsity());
  for (const auto& t : f.terms()) {
    ExpVec e(new_nvars);
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (t.exps[i] == 0) continue;
      if (map[i] >= new_nvars) throw ShapeMismatch("variable map target out of range");
      e.set(map[i], e[map[i]] + t.exps[i]);
    }
    out.push_back(Term{e, t.coeff});
  }
  return SparsePoly(f.field(), new_nvars, std::move(out));
}

SparsePoly scale_variable(const SparsePoly& f, std::size_t var, const SparsePoly& scale) {
  const auto coeffs = coefficients_in(f, var);
  SparsePoly acc(f.field(), f.nvars());
  SparsePoly power = SparsePoly::constant(f.field(), f.nvars(), f.field().one());
  ExpVec e(f.nvars());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (j > 0) power = power * scale;
    if (coeffs[j].is_zero()) continue;
    e.set(var, static_cast<unsigned>(j));
    acc = acc + coeffs[j] * power * SparsePoly::monomial(f.field(), f.field().one(), e);
  }
  return acc;
}

Elem lex_leading_coefficient(const SparsePoly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (lex_less(best->exps, t.exps)) best = &t;
  return best->coeff;
}

bool canonical_less(const SparsePoly& a, const SparsePoly& b) {
  if (a.nvars() != b.nvars()) return a.nvars() < b.nvars();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const std::size_t m = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (!(ta[i].exps == tb[i].exps)) return grlex_greater(tb[i].exps, ta[i].exps);
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
  }
  return ta.size() < tb.size();
}

UniPoly to_unipoly(const SparsePoly& f, std::size_t var) {
  const Field& fld = f.field();
  std::vector<Elem> c(f.is_zero() ? 0 : f.degree_in(var) + 1, fld.zero());
  for (const auto& t : f.terms()) {
    if (t.exps.total() != t.exps[var]) throw ShapeMismatch("polynomial involves other variables");
    c[t.exps[var]] = t.coeff;
  }
  return UniPoly(fld, std::move(c));
}

SparsePoly from_unipoly(const UniPoly& u, std::size_t nvars, std::size_t var) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
    if (u.coeffs()[i].is_zero()) continue;
    ExpVec e(nvars);
    e.set(var, static_cast<unsigned>(i));
    out.push_back(Term{e, u.coeffs()[i]});
  }
  return SparsePoly(u.field(), nvars, std::move(out));
}

std::vector<ExpVec> support(const SparsePoly& f) {
  std::vector<ExpVec> out;
  out.reserve(f.sparsity());
  for (const auto& t : f.terms()) out.push_back(t.exps);
  return out;
}

}  // namespace sparsefac
