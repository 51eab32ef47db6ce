#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sparsefac/sparse_poly.hpp"
#include "sparsefac/unipoly.hpp"

namespace sparsefac {

/// Bivariate polynomial sum_j c_j(t) y^j stored densely by y-degree.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(Field field) : field_(std::move(field)) {}
  BiPoly(Field field, std::vector<UniPoly> coeffs);

  /// From a two-variable SparsePoly with y = variable 0 and t = variable 1.
  static BiPoly from_sparse(const SparsePoly& f);
  /// A polynomial in t alone.
  static BiPoly from_t(const UniPoly& c);
  /// A polynomial in y alone.
  static BiPoly from_y(const UniPoly& u);

  SparsePoly to_sparse() const;

  const Field& field() const { return field_; }
  int deg_y() const { return static_cast<int>(c_.size()) - 1; }
  int deg_t() const;
  bool is_zero() const { return c_.empty(); }
  const std::vector<UniPoly>& coeffs() const { return c_; }
  const UniPoly& coeff(std::size_t j) const { return c_[j]; }
  const UniPoly& lc_y() const { return c_.back(); }
  bool is_monic_y() const { return !c_.empty() && c_.back().is_one(); }
  /// Coefficient of the lexicographically largest monomial (y before t).
  Elem lex_lead() const;

  /// f(y, t0) as a polynomial in y.
  UniPoly eval_t(Elem t0) const;
  BiPoly derivative_y() const;
  /// Substitutes t -> t + c.
  BiPoly shift_t(Elem c) const;
  BiPoly scaled(Elem s) const;
  BiPoly times_t(const UniPoly& c) const;
  /// Divides every coefficient exactly by c (must divide).
  BiPoly divided_t(const UniPoly& c) const;
  /// Scales so the lexicographic leading coefficient is one.
  BiPoly normalized() const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();

  Field field_;
  std::vector<UniPoly> c_;
};

bool canonical_less(const BiPoly& a, const BiPoly& b);

/// Monic gcd of the y-coefficients (an element of F[t]).
UniPoly content_y(const BiPoly& f);
BiPoly primitive_part(const BiPoly& f);

/// Exact quotient a / b in F[t][y], or nullopt when b does not divide a.
std::optional<BiPoly> exact_div(const BiPoly& a, const BiPoly& b);

/// gcd normalized to lexicographic leading coefficient one.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

std::string to_string(const BiPoly& f);

}  // namespace sparsefac
