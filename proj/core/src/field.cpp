#include "sparsefac/field.hpp"

#include <algorithm>
#include <limits>

namespace sparsefac {

namespace {

constexpr std::uint32_t kZechZero = std::numeric_limits<std::uint32_t>::max();

using Residues = std::vector<std::uint32_t>;

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

void trim(Residues& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b, both over F_p.
Residues poly_rem(Residues a, const Residues& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + (p - lead) * b[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

Residues poly_mulmod(const Residues& a, const Residues& b, const Residues& m,
                     std::uint32_t p) {
  Residues prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_rem(std::move(prod), m, p);
}

Residues decode(std::uint32_t code, std::uint32_t p, std::uint32_t ell) {
  Residues r(ell, 0);
  for (std::uint32_t i = 0; i < ell; ++i) {
    r[i] = code % p;
    code /= p;
  }
  return r;
}

std::uint32_t encode(const Residues& r, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = r.size(); i-- > 0;) code = code * p + r[i];
  return code;
}

// Monic polynomials of the given degree, low to high, enumerated by code.
Residues monic_from_code(std::uint32_t code, std::uint32_t p, std::uint32_t deg) {
  Residues r = decode(code, p, deg);
  r.push_back(1);
  return r;
}

bool irreducible_over_prime(const Residues& m, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(m.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      if (poly_rem(m, monic_from_code(static_cast<std::uint32_t>(c), p, d), p).empty())
        return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::make(std::uint32_t p, std::uint32_t ell) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (ell == 0) throw Error("extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < ell; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw Error("field of order " + std::to_string(p) + "^" + std::to_string(ell) +
                  " exceeds the supported maximum 2^16");
    }
  }

  auto ctx = std::make_shared<FieldCtx>();
  ctx->p = p;
  ctx->ell = ell;
  ctx->q = static_cast<std::uint32_t>(q);

  if (ell == 1) {
    ctx->modulus = {0, 1};
    return Field(std::move(ctx));
  }

  const std::uint32_t qq = ctx->q;
  for (std::uint32_t code = 0; code < qq; ++code) {
    Residues cand = monic_from_code(code, p, ell);
    if (irreducible_over_prime(cand, p)) {
      ctx->modulus = std::move(cand);
      break;
    }
  }

  // Primitive element: smallest code whose order is q - 1.
  const auto factors = prime_factors(qq - 1);
  auto slow_pow = [&](std::uint32_t code, std::uint64_t e) {
    Residues base = decode(code, p, ell);
    Residues r{1};
    while (e) {
      if (e & 1) r = poly_mulmod(r, base, ctx->modulus, p);
      base = poly_mulmod(base, base, ctx->modulus, p);
      e >>= 1;
    }
    r.resize(ell, 0);
    return encode(r, p);
  };
  for (std::uint32_t code = 1; code < qq; ++code) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow_pow(code, (qq - 1) / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      ctx->generator = code;
      break;
    }
  }

  ctx->exp_table.assign(2 * (qq - 1), 0);
  ctx->log_table.assign(qq, 0);
  {
    const Residues g = decode(ctx->generator, p, ell);
    Residues cur{1};
    for (std::uint32_t i = 0; i < qq - 1; ++i) {
      Residues padded = cur;
      padded.resize(ell, 0);
      const std::uint32_t c = encode(padded, p);
      ctx->exp_table[i] = c;
      ctx->exp_table[i + qq - 1] = c;
      ctx->log_table[c] = i;
      cur = poly_mulmod(cur, g, ctx->modulus, p);
    }
  }

  ctx->neg_table.assign(qq, 0);
  for (std::uint32_t code = 0; code < qq; ++code) {
    Residues r = decode(code, p, ell);
    for (auto& c : r) c = c == 0 ? 0 : p - c;
    ctx->neg_table[code] = encode(r, p);
  }

  ctx->zech_table.assign(qq - 1, kZechZero);
  for (std::uint32_t i = 0; i < qq - 1; ++i) {
    Residues r = decode(ctx->exp_table[i], p, ell);
    r[0] = (r[0] + 1) % p;
    const std::uint32_t s = encode(r, p);
    ctx->zech_table[i] = s == 0 ? kZechZero : ctx->log_table[s];
  }
  return Field(std::move(ctx));
}

Elem Field::at(std::uint64_t index) const {
  if (index >= ctx_->q) throw Error("field element index out of range");
  return Elem{static_cast<std::uint32_t>(index)};
}

Elem Field::from_int(std::int64_t value) const {
  const std::int64_t p = ctx_->p;
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::from_residues(std::span<const std::uint32_t> residues) const {
  if (residues.size() > ctx_->ell) throw Error("residue vector longer than extension degree");
  Residues r(residues.begin(), residues.end());
  for (auto& c : r) c %= ctx_->p;
  r.resize(ctx_->ell, 0);
  return Elem{encode(r, ctx_->p)};
}

std::vector<std::uint32_t> Field::residues(Elem a) const {
  return decode(a.code(), ctx_->p, ctx_->ell);
}

Elem Field::add_ext(Elem a, Elem b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::uint32_t qm1 = ctx_->q - 1;
  const std::uint32_t la = ctx_->log_table[a.code()];
  const std::uint32_t lb = ctx_->log_table[b.code()];
  const std::uint32_t diff = lb >= la ? lb - la : lb + qm1 - la;
  const std::uint32_t z = ctx_->zech_table[diff];
  if (z == kZechZero) return zero();
  return Elem{ctx_->exp_table[la + z]};
}

Elem Field::inv(Elem a) const {
  if (a.is_zero()) throw DivByZero();
  if (ctx_->ell == 1) return Elem{mod_pow(a.code(), ctx_->p - 2, ctx_->p)};
  const std::uint32_t qm1 = ctx_->q - 1;
  const std::uint32_t la = ctx_->log_table[a.code()];
  return Elem{ctx_->exp_table[(qm1 - la) % qm1]};
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.is_zero()) return zero();
  if (ctx_->ell == 1) return Elem{mod_pow(a.code(), e, ctx_->p)};
  const std::uint64_t qm1 = ctx_->q - 1;
  const std::uint64_t l = ctx_->log_table[a.code()];
  return Elem{ctx_->exp_table[(l * (e % qm1)) % qm1]};
}

Elem Field::pth_root(Elem a) const {
  return pow(a, ctx_->q / ctx_->p);
}

std::string Field::format(Elem a) const {
  if (a.code() < ctx_->p) return std::to_string(a.code());
  std::string out = "[";
  const auto r = residues(a);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(r[i]);
  }
  return out + "]";
}

std::string Field::name() const {
  std::string s = "F_" + std::to_string(ctx_->p);
  if (ctx_->ell > 1) s += "^" + std::to_string(ctx_->ell);
  return s;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  if (!(a.field_ == b.field_)) throw CtxMismatch();
  return {a.field_, a.field_.add(a.value_, b.value_)};
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  if (!(a.field_ == b.field_)) throw CtxMismatch();
  return {a.field_, a.field_.sub(a.value_, b.value_)};
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  if (!(a.field_ == b.field_)) throw CtxMismatch();
  return {a.field_, a.field_.mul(a.value_, b.value_)};
}

FieldElem arith(const FieldElem& a, const FieldElem& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add:
      return a + b;
    case ArithKind::sub:
      return a - b;
    case ArithKind::mul:
      return a * b;
  }
  throw Error("unknown arithmetic kind");
}

FieldElem inverse(const FieldElem& a) { return a.inverse(); }

FieldEmbedding::FieldEmbedding(Field small, Field big)
    : small_(std::move(small)), big_(std::move(big)) {
  if (small_.characteristic() != big_.characteristic() ||
      big_.degree() % small_.degree() != 0) {
    throw Error("no embedding of " + small_.name() + " into " + big_.name());
  }
  const std::uint32_t qs = small_.order();
  image_.resize(qs);
  if (small_.degree() == big_.degree()) {
    for (std::uint32_t c = 0; c < qs; ++c) image_[c] = Elem{c};
  } else {
    // Root of small's modulus inside big; the modulus has prime-field coefficients.
    const auto& mod = small_.modulus();
    Elem root{};
    bool found = false;
    for (std::uint32_t c = 0; c < big_.order() && !found; ++c) {
      Elem acc = big_.zero();
      for (std::size_t i = mod.size(); i-- > 0;)
        acc = big_.add(big_.mul(acc, Elem{c}), Elem{mod[i]});
      if (acc.is_zero()) {
        root = Elem{c};
        found = true;
      }
    }
    if (!found) throw Error("modulus has no root in the extension");
    for (std::uint32_t c = 0; c < qs; ++c) {
      const auto r = small_.residues(Elem{c});
      Elem acc = big_.zero();
      for (std::size_t i = r.size(); i-- > 0;)
        acc = big_.add(big_.mul(acc, root), Elem{r[i]});
      image_[c] = acc;
    }
  }
  preimage_.assign(big_.order(), -1);
  for (std::uint32_t c = 0; c < qs; ++c) preimage_[image_[c].code()] = c;
}

bool FieldEmbedding::descend(Elem a, Elem& out) const {
  const std::int64_t v = preimage_[a.code()];
  if (v < 0) return false;
  out = Elem{static_cast<std::uint32_t>(v)};
  return true;
}

}  // namespace sparsefac
