#pragma once

#include <vector>

#include "socle/polynomial.hpp"

namespace socle {

using Matrix = std::vector<std::vector<Scalar>>;

/// Reduced row echelon form in place over `field`; returns the pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(Matrix& m, const FieldSpec& field);

/// Basis of {v : m v = 0}. `cols` is needed when m has no rows.
std::vector<std::vector<Scalar>> nullspace(Matrix m, std::size_t cols, const FieldSpec& field);

/// Unique solution of the square system a x = b, or empty when a is singular.
std::vector<Scalar> solve(Matrix a, std::vector<Scalar> b, const FieldSpec& field);

/// A basis of the k-linear span of `polys`, in reduced echelon form with respect
/// to leading monomials (distinct leading monomials, monic, no zero entries).
std::vector<Polynomial> linear_basis(std::vector<Polynomial> polys);

}  // namespace socle
