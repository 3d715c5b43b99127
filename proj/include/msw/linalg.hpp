#pragma once

#include "msw/matrix.hpp"
#include "msw/vector_subspace.hpp"

#include <vector>

namespace msw {

struct RowEchelon {
    Matrix reduced;                  ///< R = transform * A, reduced row-echelon form
    std::size_t rank = 0;
    std::vector<std::size_t> pivots; ///< pivot column of each nonzero row
    Matrix transform;                ///< invertible, rows() x rows()
};

/// Gauss-Jordan elimination with leftmost-pivot, topmost-row choice.
RowEchelon rref(const Matrix& a);

/// Same elimination without tracking the transform.
Matrix rref_matrix(const Matrix& a, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Matrix& a);

Scalar determinant(const Matrix& a);

VectorSubspace kernel(const Matrix& a);

/// Throws Singular when a is not invertible and NotSquare when it is not square.
Matrix inverse(const Matrix& a);

bool is_invertible(const Matrix& a);

/// Every lambda in GF(p) with det(N - lambda I) = 0, ascending, found by
/// evaluating the determinant at each field element.
std::vector<Scalar> eigenvalues_in_field(const Matrix& n);

/// Smallest nonzero lambda with det(N - lambda I) = 0, or 0 when none exists.
Scalar first_nonzero_eigenvalue(const Matrix& n);

bool is_nilpotent(const Matrix& n);

Matrix power(const Matrix& a, std::size_t e);

} // namespace msw
