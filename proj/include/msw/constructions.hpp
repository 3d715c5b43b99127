#pragma once

#include "msw/matrix_space.hpp"
#include "msw/random.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace msw {

/// Pairs (i, j), i < j, in lexicographic order. Shared by every wedge and
/// alternating basis, and by the file formats.
std::vector<std::pair<std::size_t, std::size_t>> wedge_pairs(std::size_t n);

/// e_i e_j^T - e_j e_i^T
Matrix elementary_alternating(Field field, std::size_t n, std::size_t i, std::size_t j);
std::vector<Matrix> alternating_basis(Field field, std::size_t n);

/// E^T = -E with zero diagonal (the diagonal condition matters in characteristic 2).
bool is_alternating(const Matrix& e);

MatrixSpace alternating_space(std::size_t n, Field field);
MatrixSpace strict_upper_triangular_space(std::size_t n, Field field);

/// Matrix of x ∧ - from GF(p)^n to the wedge square, in the lexicographic
/// basis (e_i ∧ e_j)_{i<j}: row (i,j) is x^T (e_i e_j^T - e_j e_i^T).
Matrix wedge_operator(Field field, const Vector& x);
/// S(phi_n) inside Mat_{C(n,2), n}; requires n >= 2.
MatrixSpace wedge_space(std::size_t n, Field field);
/// Span over x of the stacks (x^T B_i P)_i. Throws NotABasis unless `alt_basis`
/// is a basis of Alt_n, Singular unless P is invertible.
MatrixSpace transformed_wedge_space(std::size_t n, Field field, const std::vector<Matrix>& alt_basis, const Matrix& p);

/// P Alt_n. Throws Singular.
MatrixSpace scaled_alternating_space(const Matrix& p);

/// X -> X^T P X with P invertible.
class QuadraticForm {
public:
    explicit QuadraticForm(Matrix p);
    const Matrix& matrix() const noexcept { return p_; }
    Scalar evaluate(const Vector& x) const;

private:
    Matrix p_;
};

struct IsotropyResult {
    bool isotropic = false;
    std::optional<Vector> witness;  ///< nonzero X with X^T P X = 0, normalized projectively
};

/// Exhaustive over projective points (the zero set is stable under scaling).
IsotropyResult is_isotropic(const QuadraticForm& q);

Matrix random_invertible(Rng& rng, Field field, std::size_t n);
/// Uniform-enough subspace of Mat_{rows,cols} with exactly `dim` dimensions.
MatrixSpace random_space(Rng& rng, Field field, std::size_t rows, std::size_t cols, std::size_t dim);
/// Random subspace of dimension `dim` inside `ambient`.
MatrixSpace random_subspace_of(Rng& rng, const MatrixSpace& ambient, std::size_t dim);
/// G applied to the canonical alternating basis for a random invertible G.
std::vector<Matrix> random_alt_basis(Rng& rng, Field field, std::size_t n);

} // namespace msw
