#pragma once

#include <span>
#include <vector>

#include "sparsefac/sparse_poly.hpp"
#include "sparsefac/unipoly.hpp"

namespace sparsefac {

/// Square matrix over a finite field, row-major.
using ElemMatrix = std::vector<std::vector<Elem>>;

/// Sylvester matrix of f (degree d) and g (degree e): e shifted copies of
/// f's coefficient vector followed by d shifted copies of g's, highest
/// coefficient first. Throws DegreeZero unless both degrees are positive.
ElemMatrix sylvester_matrix(const UniPoly& f, const UniPoly& g);

/// Determinant by Gaussian elimination (first nonzero pivot in row order).
Elem determinant(const Field& field, ElemMatrix m);

/// Res_y(f, g); zero exactly when f and g share a nonconstant factor.
Elem resultant_univariate(const UniPoly& f, const UniPoly& g);

/// Res_y(f(y, a), g(y, a)) for f, g in (y, x_1..x_n), y = variable 0, both
/// monic in y. Throws NotMonic otherwise.
Elem resultant_at_point(const SparsePoly& f, const SparsePoly& g, std::span<const Elem> a);

/// f(y, a) as a univariate polynomial in y (variable 0).
UniPoly project_to_y(const SparsePoly& f, std::span<const Elem> a);

}  // namespace sparsefac
