#pragma once

#include "msw/matrix_space.hpp"

#include <optional>

namespace msw {

/// The space of matrices of the bilinear forms (N, Y) -> Y^T N X on V x K^n,
/// one for each X. With basis (B_1..B_m) of V and a basis change P of K^n,
/// row i of M(X) is X^T B_i^T P.
struct DualSpace {
    MatrixSpace source;  ///< V inside Mat_n, basis B_1..B_m is its canonical basis
    Matrix basis_change; ///< P
    MatrixSpace space;   ///< span of all M(X), inside Mat_{m,n}

    Matrix at(const Vector& x) const;
};

/// Throws NotSquare, PreconditionViolated (dim V = 0) or Singular (P).
DualSpace dual_space(const MatrixSpace& v, const std::optional<Matrix>& p = std::nullopt);

enum class Block { A, B, C, D };

/// N = [[A, C], [B, D]] with A of size d x d; R1 = [A C], R2 = [B D].
struct BlockParts {
    Matrix a, b, c, d;

    Matrix reassemble() const;
};

BlockParts split_blocks(const Matrix& n, std::size_t d);

struct BlockDecomposition {
    std::size_t d = 0;
    std::vector<BlockParts> parts;  ///< one per canonical basis element
    MatrixSpace a_space, b_space, c_space, d_space;
};

/// Throws BadSplit unless 1 <= d <= n-1.
BlockDecomposition decompose(const MatrixSpace& v, std::size_t d);
/// Image of V under N -> block(N).
MatrixSpace block_space(const MatrixSpace& v, std::size_t d, Block which);

/// {N in V : the first d rows of N vanish}.
MatrixSpace kernel_of_first_rows(const MatrixSpace& v, std::size_t d);

/// P = [[I_d, 0], [R, I_{n-d}]] with R of size (n-d) x d.
class ShearTransform {
public:
    ShearTransform(std::size_t d, Matrix r);

    std::size_t split() const noexcept { return d_; }
    const Matrix& r() const noexcept { return r_; }
    Matrix matrix() const;
    Matrix inverse_matrix() const;

private:
    std::size_t d_;
    Matrix r_;
};

/// P N P^-1 assembled block by block:
///   [[A - C R, C], [B + R A - R C R - D R, D + R C]].
Matrix shear_conjugate(const Matrix& n, const ShearTransform& t);
MatrixSpace shear_conjugate(const MatrixSpace& v, const ShearTransform& t);

/// For C(N0) != 0: the first projective x with C(N0) x != 0, and R = x u^T / (u^T v)
/// where v = C(N0) x and u is the first standard functional with u^T v != 0, so
/// that R C(N0) x = x. Throws NotMember if N0 is not in V.
struct ShearWitness {
    ShearTransform transform;
    Vector x;
};
std::optional<ShearWitness> build_shear_witness(const MatrixSpace& v, std::size_t d, const Matrix& n0);

/// Conjugates V by a basis adapted to W (W's basis first) so that every element
/// becomes block upper triangular. Throws NotInvariant unless W is a proper,
/// nonzero, V-invariant subspace.
struct InvariantSplit {
    Matrix basis;            ///< G, columns = adapted basis; V_conj = G^-1 V G
    MatrixSpace conjugated;
    MatrixSpace a_space;     ///< upper-left, dim W square
    MatrixSpace b_space;     ///< lower-right
};
InvariantSplit split_along_invariant(const MatrixSpace& v, const VectorSubspace& w);

/// Similarity G V G^-1 whose first d row functionals are W's basis (rows of G
/// are W's basis followed by the lowest standard vectors completing it).
struct CoordinateSplit {
    Matrix change;  ///< G
    MatrixSpace conjugated;
};
CoordinateSplit move_row_functionals_first(const MatrixSpace& v, const VectorSubspace& w);

} // namespace msw
