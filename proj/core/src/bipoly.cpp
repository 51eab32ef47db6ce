#include "sparsefac/bipoly.hpp"

#include <algorithm>

namespace sparsefac {

BiPoly::BiPoly(Field field, std::vector<UniPoly> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto& c : c_)
    if (!c.field().valid()) c = UniPoly(field_);
  trim();
}

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::from_sparse(const SparsePoly& f) {
  if (f.nvars() != 2) throw ShapeMismatch("bivariate polynomial expected");
  const Field& fld = f.field();
  if (f.is_zero()) return BiPoly(fld);
  std::vector<std::vector<Elem>> raw(f.degree_in(0) + 1, std::vector<Elem>(f.degree_in(1) + 1, fld.zero()));
  for (const auto& t : f.terms()) raw[t.exps[0]][t.exps[1]] = t.coeff;
  std::vector<UniPoly> c;
  c.reserve(raw.size());
  for (auto& r : raw) c.emplace_back(fld, std::move(r));
  return BiPoly(fld, std::move(c));
}

BiPoly BiPoly::from_t(const UniPoly& c) { return BiPoly(c.field(), {c}); }

BiPoly BiPoly::from_y(const UniPoly& u) {
  std::vector<UniPoly> c;
  for (auto e : u.coeffs()) c.push_back(UniPoly::constant(u.field(), e));
  return BiPoly(u.field(), std::move(c));
}

SparsePoly BiPoly::to_sparse() const {
  std::vector<Term> terms;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    const auto& cc = c_[j].coeffs();
    for (std::size_t i = 0; i < cc.size(); ++i)
      if (!cc[i].is_zero()) terms.push_back(Term{ExpVec{static_cast<unsigned>(j), static_cast<unsigned>(i)}, cc[i]});
  }
  return SparsePoly(field_, 2, std::move(terms));
}

int BiPoly::deg_t() const {
  int d = -1;
  for (const auto& c : c_) d = std::max(d, c.degree());
  return d;
}

Elem BiPoly::lex_lead() const {
  if (c_.empty()) throw ZeroPolynomial();
  return c_.back().lead();
}

UniPoly BiPoly::eval_t(Elem t0) const {
  std::vector<Elem> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.eval(t0));
  return UniPoly(field_, std::move(out));
}

BiPoly BiPoly::derivative_y() const {
  std::vector<UniPoly> out;
  for (std::size_t j = 1; j < c_.size(); ++j)
    out.push_back(c_[j].scaled(field_.from_int(static_cast<std::int64_t>(j))));
  return BiPoly(field_, std::move(out));
}

BiPoly BiPoly::shift_t(Elem c) const {
  if (c.is_zero()) return *this;
  std::vector<UniPoly> out;
  out.reserve(c_.size());
  for (const auto& x : c_) out.push_back(x.shifted(c));
  return BiPoly(field_, std::move(out));
}

BiPoly BiPoly::scaled(Elem s) const {
  std::vector<UniPoly> out;
  for (const auto& x : c_) out.push_back(x.scaled(s));
  return BiPoly(field_, std::move(out));
}

BiPoly BiPoly::times_t(const UniPoly& c) const {
  std::vector<UniPoly> out;
  for (const auto& x : c_) out.push_back(x * c);
  return BiPoly(field_, std::move(out));
}

BiPoly BiPoly::divided_t(const UniPoly& c) const {
  std::vector<UniPoly> out;
  for (const auto& x : c_) out.push_back(x / c);
  return BiPoly(field_, std::move(out));
}

BiPoly BiPoly::normalized() const {
  if (c_.empty()) return *this;
  return scaled(field_.inv(lex_lead()));
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  const Field& f = a.field_.valid() ? a.field_ : b.field_;
  std::vector<UniPoly> out(std::max(a.c_.size(), b.c_.size()), UniPoly(f));
  for (std::size_t j = 0; j < a.c_.size(); ++j) out[j] += a.c_[j];
  for (std::size_t j = 0; j < b.c_.size(); ++j) out[j] += b.c_[j];
  return BiPoly(f, std::move(out));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  const Field& f = a.field_.valid() ? a.field_ : b.field_;
  std::vector<UniPoly> out(std::max(a.c_.size(), b.c_.size()), UniPoly(f));
  for (std::size_t j = 0; j < a.c_.size(); ++j) out[j] += a.c_[j];
  for (std::size_t j = 0; j < b.c_.size(); ++j) out[j] -= b.c_[j];
  return BiPoly(f, std::move(out));
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  const Field& f = a.field_.valid() ? a.field_ : b.field_;
  if (a.c_.empty() || b.c_.empty()) return BiPoly(f);
  std::vector<UniPoly> out(a.c_.size() + b.c_.size() - 1, UniPoly(f));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return BiPoly(f, std::move(out));
}

bool canonical_less(const BiPoly& a, const BiPoly& b) {
  if (a.deg_y() != b.deg_y()) return a.deg_y() < b.deg_y();
  for (std::size_t j = a.coeffs().size(); j-- > 0;) {
    if (a.coeff(j) == b.coeff(j)) continue;
    return canonical_less(a.coeff(j), b.coeff(j));
  }
  return false;
}

UniPoly content_y(const BiPoly& f) {
  UniPoly g(f.field());
  for (const auto& c : f.coeffs()) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

BiPoly primitive_part(const BiPoly& f) {
  if (f.is_zero()) return f;
  const UniPoly c = content_y(f);
  return c.is_one() ? f : f.divided_t(c);
}

std::optional<BiPoly> exact_div(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw DivByZero();
  const Field& f = b.field();
  if (a.is_zero()) return BiPoly(f);
  if (a.deg_y() < b.deg_y()) return std::nullopt;
  std::vector<UniPoly> r = a.coeffs();
  const auto db = static_cast<std::size_t>(b.deg_y());
  std::vector<UniPoly> q(r.size() - db, UniPoly(f));
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i].is_zero()) continue;
    auto [qt, rem] = divmod(r[i], b.lc_y());
    if (!rem.is_zero()) return std::nullopt;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= qt * b.coeff(j);
    q[i - db] = std::move(qt);
  }
  for (std::size_t i = 0; i < db; ++i)
    if (!r[i].is_zero()) return std::nullopt;
  return BiPoly(f, std::move(q));
}

namespace {

/// Pseudo-remainder up to F[t] scaling: enough for gcd computations.
BiPoly prem(BiPoly a, const BiPoly& b) {
  const Field& f = b.field();
  while (!a.is_zero() && a.deg_y() >= b.deg_y()) {
    const auto shift = static_cast<std::size_t>(a.deg_y() - b.deg_y());
    std::vector<UniPoly> sh(shift, UniPoly(f));
    for (const auto& c : b.coeffs()) sh.push_back(c * a.lc_y());
    a = a.times_t(b.lc_y()) - BiPoly(f, std::move(sh));
  }
  return a;
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  const UniPoly c = gcd(content_y(a), content_y(b));
  BiPoly A = primitive_part(a), B = primitive_part(b);
  if (A.deg_y() < B.deg_y()) std::swap(A, B);
  while (!B.is_zero()) {
    if (B.deg_y() == 0) {
      A = BiPoly::from_t(UniPoly::constant(a.field(), a.field().one()));
      break;
    }
    BiPoly R = prem(A, B);
    A = std::move(B);
    B = primitive_part(R);
  }
  return primitive_part(A).times_t(c).normalized();
}

std::string to_string(const BiPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const SparsePoly sp = f.to_sparse();
  for (const auto& t : sp.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < 2; ++i) {
      if (t.exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i == 0 ? "y" : "t";
      if (t.exps[i] > 1) mono += "^" + std::to_string(t.exps[i]);
    }
    if (mono.empty()) out += f.field().format(t.coeff);
    else if (t.coeff == f.field().one()) out += mono;
    else out += f.field().format(t.coeff) + "*" + mono;
  }
  return out;
}

}  // namespace sparsefac
