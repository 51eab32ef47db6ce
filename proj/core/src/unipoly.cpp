#include "sparsefac/unipoly.hpp"

#include <algorithm>

namespace sparsefac {

UniPoly::UniPoly(Field field, std::vector<Elem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

UniPoly UniPoly::constant(const Field& f, Elem c) { return UniPoly(f, {c}); }

UniPoly UniPoly::monomial(const Field& f, Elem c, std::size_t deg) {
  std::vector<Elem> v(deg + 1, f.zero());
  v[deg] = c;
  return UniPoly(f, std::move(v));
}

UniPoly UniPoly::variable(const Field& f) { return monomial(f, f.one(), 1); }

UniPoly UniPoly::from_ints(const Field& f, const std::vector<std::int64_t>& coeffs) {
  std::vector<Elem> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(f.from_int(c));
  return UniPoly(f, std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Elem UniPoly::eval(Elem x) const {
  Elem acc = field_.valid() ? field_.zero() : Elem{};
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly(field_);
  std::vector<Elem> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    d[i - 1] = field_.mul(field_.from_int(static_cast<std::int64_t>(i)), c_[i]);
  return UniPoly(field_, std::move(d));
}

UniPoly UniPoly::monic() const {
  if (c_.empty() || c_.back() == field_.one()) return *this;
  return scaled(field_.inv(c_.back()));
}

UniPoly UniPoly::scaled(Elem s) const {
  if (s.is_zero()) return UniPoly(field_);
  std::vector<Elem> v(c_);
  for (auto& c : v) c = field_.mul(c, s);
  return UniPoly(field_, std::move(v));
}

UniPoly UniPoly::shifted(Elem c) const {
  // Horner in the shifted variable: sum a_i (t + c)^i.
  std::vector<Elem> out(c_.size(), field_.zero());
  for (std::size_t i = c_.size(); i-- > 0;) {
    // out = out * (t + c) + a_i
    for (std::size_t j = c_.size() - 1; j > 0; --j)
      out[j] = field_.add(out[j - 1], field_.mul(out[j], c));
    out[0] = field_.add(field_.mul(out[0], c), c_[i]);
  }
  return UniPoly(field_, std::move(out));
}

UniPoly UniPoly::truncated(std::size_t n) const {
  if (c_.size() <= n) return *this;
  return UniPoly(field_, std::vector<Elem>(c_.begin(), c_.begin() + static_cast<long>(n)));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (!field_.valid()) field_ = o.field_;
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Elem{});
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (!field_.valid()) field_ = o.field_;
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Elem{});
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  const Field& f = a.field_.valid() ? a.field_ : b.field_;
  if (a.c_.empty() || b.c_.empty()) return UniPoly(f);
  std::vector<Elem> out(a.c_.size() + b.c_.size() - 1, Elem{});
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out[i + j] = f.add(out[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  return UniPoly(f, std::move(out));
}

UniPoly operator-(const UniPoly& a) {
  std::vector<Elem> v(a.c_);
  for (auto& c : v) c = a.field_.neg(c);
  return UniPoly(a.field_, std::move(v));
}

bool canonical_less(const UniPoly& a, const UniPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DivByZero();
  const Field& f = b.field();
  if (a.degree() < b.degree()) return {UniPoly(f), a};
  std::vector<Elem> r(a.coeffs());
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Elem inv_lead = f.inv(bc.back());
  std::vector<Elem> q(r.size() - db, f.zero());
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i].is_zero()) continue;
    const Elem factor = f.mul(r[i], inv_lead);
    q[i - db] = factor;
    for (std::size_t j = 0; j <= db; ++j)
      r[i - db + j] = f.sub(r[i - db + j], f.mul(factor, bc[j]));
  }
  r.resize(db);
  return {UniPoly(f, std::move(q)), UniPoly(f, std::move(r))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).quotient; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).remainder; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b) {
  const Field& f = a.field().valid() ? a.field() : b.field();
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(f, f.one()), s1(f);
  UniPoly t0(f), t1 = UniPoly::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UniPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Elem inv = f.inv(r0.lead());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& mod) {
  const Field& f = mod.field();
  UniPoly result = UniPoly::constant(f, f.one()) % mod;
  UniPoly b = base % mod;
  while (e) {
    if (e & 1) result = (result * b) % mod;
    e >>= 1;
    if (e) b = (b * b) % mod;
  }
  return result;
}

UniPoly pow(const UniPoly& base, unsigned e) {
  const Field& f = base.field();
  UniPoly result = UniPoly::constant(f, f.one());
  UniPoly b = base;
  while (e) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

std::string to_string(const UniPoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const bool unit = c[i] == f.field().one();
    if (i == 0) {
      out += f.field().format(c[i]);
      continue;
    }
    if (!unit) out += f.field().format(c[i]) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace sparsefac
