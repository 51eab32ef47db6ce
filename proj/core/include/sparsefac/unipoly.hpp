#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sparsefac/field.hpp"

namespace sparsefac {

/// Dense univariate polynomial over a finite field; coefficients low to high,
/// trailing zeros trimmed. The zero polynomial has degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Field field) : field_(std::move(field)) {}
  UniPoly(Field field, std::vector<Elem> coeffs);

  static UniPoly constant(const Field& f, Elem c);
  static UniPoly monomial(const Field& f, Elem c, std::size_t deg);
  /// The polynomial y (or t): the variable itself.
  static UniPoly variable(const Field& f);
  /// Builds from small integers, mapped into the prime subfield.
  static UniPoly from_ints(const Field& f, const std::vector<std::int64_t>& coeffs);

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == field_.one(); }
  bool is_monic() const { return !c_.empty() && c_.back() == field_.one(); }

  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Elem{}; }
  Elem lead() const { return c_.empty() ? Elem{} : c_.back(); }
  const std::vector<Elem>& coeffs() const { return c_; }

  Elem eval(Elem x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly scaled(Elem s) const;
  /// Substitutes t -> t + c.
  UniPoly shifted(Elem c) const;
  /// Keeps terms of degree < n.
  UniPoly truncated(std::size_t n) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Canonical order: by degree, then coefficient codes from the top down.
  friend bool canonical_less(const UniPoly& a, const UniPoly& b);

 private:
  void trim();

  Field field_;
  std::vector<Elem> c_;
};

bool canonical_less(const UniPoly& a, const UniPoly& b);

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division; throws DivByZero for a zero divisor.
DivMod divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);

/// Monic gcd (zero only when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct ExtGcd {
  UniPoly g;  // monic gcd
  UniPoly s;  // s * a + t * b = g
  UniPoly t;
};
ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b);

UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& mod);
UniPoly pow(const UniPoly& base, unsigned e);

/// Renders as "y^2 + 3*y + 1" with the given variable name.
std::string to_string(const UniPoly& f, const std::string& var = "y");

}  // namespace sparsefac
