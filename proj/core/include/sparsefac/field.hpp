#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sparsefac/errors.hpp"

namespace sparsefac {

/// Element of a finite field, stored as its enumeration code.
///
/// An element of F_{p^l} is the residue vector (c_0, ..., c_{l-1}) of
/// c_0 + c_1 z + ... + c_{l-1} z^{l-1} modulo the field's modulus. Its code is
/// c_0 + c_1 p + ... + c_{l-1} p^{l-1}; elements are enumerated in code order,
/// which is the lexicographic order of the residue vector read from the top
/// coefficient down. Prime-subfield elements are exactly the codes below p.
class Elem {
 public:
  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t code) : code_(code) {}

  constexpr std::uint32_t code() const noexcept { return code_; }
  constexpr bool is_zero() const noexcept { return code_ == 0; }

  friend constexpr auto operator<=>(Elem, Elem) = default;

 private:
  std::uint32_t code_ = 0;
};

/// Immutable description of F_q, q = p^l, plus the lookup tables used for
/// arithmetic. Built once by Field::make and shared by every handle.
struct FieldCtx {
  std::uint32_t p = 0;
  std::uint32_t ell = 0;
  std::uint32_t q = 0;
  /// Monic irreducible modulus, low to high, length ell + 1. For ell == 1 it is z.
  std::vector<std::uint32_t> modulus;
  /// Code of the primitive element used for the log tables.
  std::uint32_t generator = 0;
  // Extension fields only (ell > 1): Zech-logarithm arithmetic.
  std::vector<std::uint32_t> exp_table;   // size 2(q-1)
  std::vector<std::uint32_t> log_table;   // size q, log_table[0] unused
  std::vector<std::uint32_t> zech_table;  // log(1 + g^i), kZechZero when 1 + g^i = 0
  std::vector<std::uint32_t> neg_table;   // size q
};

/// Cheap, copyable handle on a shared FieldCtx.
class Field {
 public:
  /// Largest supported field size.
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Builds F_{p^ell} with the lexicographically smallest monic irreducible
  /// modulus of degree ell. Throws NotPrime for composite p.
  static Field make(std::uint32_t p, std::uint32_t ell = 1);

  Field() = default;

  std::uint32_t characteristic() const { return ctx_->p; }
  std::uint32_t degree() const { return ctx_->ell; }
  std::uint32_t order() const { return ctx_->q; }
  const std::vector<std::uint32_t>& modulus() const { return ctx_->modulus; }
  const FieldCtx& ctx() const { return *ctx_; }
  bool valid() const { return static_cast<bool>(ctx_); }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// The i-th element in enumeration order.
  Elem at(std::uint64_t index) const;
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t value) const;
  Elem from_residues(std::span<const std::uint32_t> residues) const;
  std::vector<std::uint32_t> residues(Elem a) const;
  bool in_prime_subfield(Elem a) const { return a.code() < ctx_->p; }

  Elem add(Elem a, Elem b) const {
    if (ctx_->ell == 1) {
      std::uint32_t s = a.code() + b.code();
      return Elem{s >= ctx_->p ? s - ctx_->p : s};
    }
    return add_ext(a, b);
  }
  Elem neg(Elem a) const {
    if (ctx_->ell == 1) return Elem{a.code() == 0 ? 0 : ctx_->p - a.code()};
    return Elem{ctx_->neg_table[a.code()]};
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (ctx_->ell == 1) {
      return Elem{static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(a.code()) * b.code() % ctx_->p)};
    }
    if (a.is_zero() || b.is_zero()) return zero();
    return Elem{ctx_->exp_table[ctx_->log_table[a.code()] + ctx_->log_table[b.code()]]};
  }
  /// Multiplicative inverse; throws DivByZero for zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// Frobenius a -> a^p.
  Elem frobenius(Elem a) const { return pow(a, ctx_->p); }
  /// The unique b with b^p = a (Frobenius is bijective on a finite field).
  Elem pth_root(Elem a) const;

  /// Text form: a plain integer for prime-subfield elements, otherwise the
  /// residue vector "[c0,c1,...]".
  std::string format(Elem a) const;

  friend bool operator==(const Field& a, const Field& b) {
    if (a.ctx_ == b.ctx_) return true;
    if (!a.ctx_ || !b.ctx_) return false;
    return a.ctx_->p == b.ctx_->p && a.ctx_->ell == b.ctx_->ell;
  }

  std::string name() const;

 private:
  explicit Field(std::shared_ptr<const FieldCtx> ctx) : ctx_(std::move(ctx)) {}
  Elem add_ext(Elem a, Elem b) const;

  std::shared_ptr<const FieldCtx> ctx_;
};

/// Field element bound to its field, for code that wants operator syntax and
/// context checking. Mixed-field arithmetic throws CtxMismatch.
class FieldElem {
 public:
  FieldElem(Field field, Elem value) : field_(std::move(field)), value_(value) {}

  const Field& field() const { return field_; }
  Elem value() const { return value_; }

  FieldElem inverse() const { return {field_, field_.inv(value_)}; }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  Field field_;
  Elem value_;
};

enum class ArithKind { add, sub, mul };

FieldElem arith(const FieldElem& a, const FieldElem& b, ArithKind kind);
FieldElem inverse(const FieldElem& a);

bool is_prime(std::uint64_t n);

/// Embedding of a subfield into a larger field of the same characteristic.
///
/// The image of the generator z of `small` is the first root (in enumeration
/// order) of small's modulus inside `big`.
class FieldEmbedding {
 public:
  FieldEmbedding(Field small, Field big);

  const Field& small() const { return small_; }
  const Field& big() const { return big_; }

  Elem lift(Elem a) const { return image_[a.code()]; }
  /// Inverse image; returns false when `a` lies outside the subfield.
  bool descend(Elem a, Elem& out) const;
  /// Generator of Gal(big / small): a -> a^{|small|}.
  Elem relative_frobenius(Elem a) const { return big_.pow(a, small_.order()); }

 private:
  Field small_;
  Field big_;
  std::vector<Elem> image_;
  std::vector<std::int64_t> preimage_;  // -1 outside the subfield
};

}  // namespace sparsefac
