#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sparsefac/field.hpp"
#include "sparsefac/unipoly.hpp"

namespace sparsefac {

/// Exponent vector of a monomial in at most kMaxVars variables.
class ExpVec {
 public:
  static constexpr std::size_t kMaxVars = 16;

  ExpVec() = default;
  explicit ExpVec(std::size_t n);
  ExpVec(std::initializer_list<unsigned> exps);
  explicit ExpVec(std::span<const unsigned> exps);

  std::size_t size() const { return n_; }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned v);
  unsigned total() const;
  unsigned max_entry() const;
  std::vector<unsigned> to_vector() const;

  friend ExpVec operator+(const ExpVec& a, const ExpVec& b);
  /// True when every entry of b is at most the matching entry of a.
  friend bool divides(const ExpVec& b, const ExpVec& a);
  friend ExpVec operator-(const ExpVec& a, const ExpVec& b);
  friend bool operator==(const ExpVec& a, const ExpVec& b);
  /// Plain lexicographic order (variable 0 most significant).
  friend bool lex_less(const ExpVec& a, const ExpVec& b);

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
};

bool divides(const ExpVec& b, const ExpVec& a);
bool lex_less(const ExpVec& a, const ExpVec& b);
/// Graded-lex: total degree first, then lexicographic.
bool grlex_greater(const ExpVec& a, const ExpVec& b);

struct Term {
  ExpVec exps;
  Elem coeff;
};

/// Sparse multivariate polynomial: nonzero terms sorted by descending
/// graded-lex order. The zero polynomial has no terms but a definite arity.
class SparsePoly {
 public:
  SparsePoly() = default;
  SparsePoly(Field field, std::size_t nvars);
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  SparsePoly(Field field, std::size_t nvars, std::vector<Term> terms);

  static SparsePoly constant(const Field& f, std::size_t nvars, Elem c);
  static SparsePoly variable(const Field& f, std::size_t nvars, std::size_t i);
  static SparsePoly monomial(const Field& f, Elem c, const ExpVec& e);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return n_; }
  std::size_t sparsity() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const;

  unsigned degree_in(std::size_t i) const;
  unsigned individual_degree() const;
  unsigned total_degree() const;
  bool depends_on(std::size_t i) const;
  Elem coefficient(const ExpVec& e) const;

  SparsePoly scaled(Elem s) const;
  SparsePoly pow(unsigned e) const;

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a);
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend bool operator==(const SparsePoly& a, const SparsePoly& b);

 private:
  void normalize();

  Field field_;
  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

enum class CombineKind { add, mul };

/// Sum or product; throws ShapeMismatch on different arity and CtxMismatch
/// on different fields.
SparsePoly combine(const SparsePoly& f, const SparsePoly& g, CombineKind kind);

/// Full evaluation; point must have nvars entries.
Elem evaluate(const SparsePoly& f, std::span<const Elem> point);

/// Substitutes values for the listed variables; the result keeps only the
/// remaining variables, in their original relative order.
SparsePoly evaluate_partial(const SparsePoly& f, std::span<const std::size_t> vars,
                            std::span<const Elem> values);

/// Same as evaluate_partial, but keeps the arity (substituted variables
/// simply no longer occur).
SparsePoly substitute_values(const SparsePoly& f, std::span<const std::size_t> vars,
                             std::span<const Elem> values);

/// f(y, (1-t)a + t b) for f in (y, x_1..x_n) with y the variable 0. The result
/// has two variables: y (index 0) and t (index 1).
SparsePoly restrict_to_line(const SparsePoly& f, std::span<const Elem> a, std::span<const Elem> b);

/// Dense form of restrict_to_line: entry j is the coefficient of y^j as a
/// polynomial in t.
std::vector<UniPoly> line_coefficients(const SparsePoly& f, std::span<const Elem> a,
                                       std::span<const Elem> b);

struct LeadInfo {
  SparsePoly lc;  // same arity, free of the chosen variable
  unsigned degree = 0;
};
/// Leading coefficient and degree with respect to variable i.
LeadInfo lead_and_degrees(const SparsePoly& f, std::size_t i);

/// Coefficients f_j of f = sum_j f_j x_i^j, each free of x_i (same arity).
std::vector<SparsePoly> coefficients_in(const SparsePoly& f, std::size_t i);

/// For f monic in variable 0, coefficient polynomials in the other variables
/// with arity nvars - 1: f = sum_j c_j y^j.
std::vector<SparsePoly> y_coefficients(const SparsePoly& f);

struct MonicTransform {
  SparsePoly fhat;   // variables (y, x_1..x_n): y index 0
  SparsePoly fk;     // leading coefficient, variables x_1..x_n
  unsigned k = 0;
};

/// Make-monic transform eliminating the last variable x_{n+1}:
/// fhat = y^k + sum_{j<k} f_j f_k^{k-1-j} y^j.
MonicTransform make_monic(const SparsePoly& f);

/// Quotient f / g when it exists and has at most `cap` terms.
std::optional<SparsePoly> sparse_divide(const SparsePoly& f, const SparsePoly& g, std::size_t cap);

/// 2 * sum(e) - len(e); throws EmptyVector.
long long phi_score(std::span<const unsigned> e);

/// Arity change: variable i of f becomes variable map[i] of the result.
SparsePoly remap(const SparsePoly& f, std::size_t new_nvars, std::span<const std::size_t> map);

/// Substitutes x_var -> scale * x_var where scale is a polynomial free of x_var.
SparsePoly scale_variable(const SparsePoly& f, std::size_t var, const SparsePoly& scale);

/// Leading coefficient in plain lexicographic order.
Elem lex_leading_coefficient(const SparsePoly& f);

/// Canonical total order used to sort factor lists.
bool canonical_less(const SparsePoly& a, const SparsePoly& b);

/// Univariate view of a polynomial that only involves variable `var`.
UniPoly to_unipoly(const SparsePoly& f, std::size_t var);
SparsePoly from_unipoly(const UniPoly& u, std::size_t nvars, std::size_t var);

/// Exponent vectors of f in descending graded-lex order.
std::vector<ExpVec> support(const SparsePoly& f);

enum class VarStyle {
  x_only,   // variables x1, x2, ...
  y_first,  // variable 0 is y, variable i is xi
};

/// Parses "3*x1^2*x2 + [1,2]*y - 4". Variables are xi (i >= 1) and y. When y
/// occurs it becomes variable 0 and xi is variable i; otherwise xi is
/// variable i - 1. The arity is the largest index seen, at least min_vars.
struct ParsedPoly {
  SparsePoly poly;
  VarStyle style = VarStyle::x_only;
};
ParsedPoly parse_polynomial(const std::string& text, const Field& field, std::size_t min_vars = 0,
                            std::optional<VarStyle> force_style = std::nullopt);

std::string format_polynomial(const SparsePoly& f, VarStyle style = VarStyle::x_only);

}  // namespace sparsefac
