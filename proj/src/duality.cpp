#include "msw/duality.hpp"

#include "msw/error.hpp"
#include "msw/grassmannian.hpp"
#include "msw/linalg.hpp"
#include "msw/spectral.hpp"

namespace msw {

Matrix DualSpace::at(const Vector& x) const {
    const std::size_t n = source.cols();
    if (x.size() != n) throw ShapeMismatch("dual space argument has the wrong length");
    Matrix out(source.field(), source.dim(), n);
    const Matrix xt = Matrix::row_vector(source.field(), x);
    for (std::size_t i = 0; i < source.dim(); ++i)
        out.set_block(i, 0, xt * source.basis()[i].transpose() * basis_change);
    return out;
}

DualSpace dual_space(const MatrixSpace& v, const std::optional<Matrix>& p) {
    if (!v.is_square()) throw NotSquare("dual space needs a space of square matrices");
    if (v.dim() == 0) throw PreconditionViolated("dual space needs dim V >= 1");
    const std::size_t n = v.cols();
    Matrix basis_change = p.value_or(Matrix::identity(v.field(), n));
    if (basis_change.rows() != n || !is_invertible(basis_change)) throw Singular("dual space basis change is singular");
    DualSpace out{v, std::move(basis_change), MatrixSpace::zero(v.field(), v.dim(), n)};
    std::vector<Matrix> gens;
    for (std::size_t k = 0; k < n; ++k) {
        Vector e(n, 0);
        e[k] = 1;
        gens.push_back(out.at(e));
    }
    out.space = MatrixSpace::span(v.field(), v.dim(), n, gens);
    return out;
}

Matrix BlockParts::reassemble() const {
    const std::size_t k = a.rows(), n = a.rows() + d.rows();
    Matrix out(a.field(), n, n);
    out.set_block(0, 0, a);
    out.set_block(0, k, c);
    out.set_block(k, 0, b);
    out.set_block(k, k, d);
    return out;
}

BlockParts split_blocks(const Matrix& n, std::size_t d) {
    if (!n.is_square()) throw NotSquare("block split needs a square matrix");
    const std::size_t size = n.rows();
    if (d < 1 || d >= size) throw BadSplit("split index must lie in [1, n-1]");
    const std::size_t e = size - d;
    return {n.block(0, 0, d, d), n.block(d, 0, e, d), n.block(0, d, d, e), n.block(d, d, e, e)};
}

MatrixSpace block_space(const MatrixSpace& v, std::size_t d, Block which) {
    if (!v.is_square()) throw NotSquare("block split needs square matrices");
    if (d < 1 || d >= v.rows()) throw BadSplit("split index must lie in [1, n-1]");
    const std::size_t e = v.rows() - d;
    switch (which) {
    case Block::A: return map_space(v, d, d, [&](const Matrix& b) { return b.block(0, 0, d, d); });
    case Block::B: return map_space(v, e, d, [&](const Matrix& b) { return b.block(d, 0, e, d); });
    case Block::C: return map_space(v, d, e, [&](const Matrix& b) { return b.block(0, d, d, e); });
    case Block::D: return map_space(v, e, e, [&](const Matrix& b) { return b.block(d, d, e, e); });
    }
    throw BadSplit("unknown block");
}

BlockDecomposition decompose(const MatrixSpace& v, std::size_t d) {
    BlockDecomposition out{d,
                           {},
                           block_space(v, d, Block::A),
                           block_space(v, d, Block::B),
                           block_space(v, d, Block::C),
                           block_space(v, d, Block::D)};
    for (const auto& b : v.basis()) out.parts.push_back(split_blocks(b, d));
    return out;
}

MatrixSpace kernel_of_first_rows(const MatrixSpace& v, std::size_t d) {
    if (!v.is_square()) throw NotSquare("block split needs square matrices");
    if (d < 1 || d >= v.rows()) throw BadSplit("split index must lie in [1, n-1]");
    // Coefficient vectors y with sum y_k R1(B_k) = 0.
    const std::size_t n = v.cols();
    Matrix r1(v.field(), d * n, v.dim());
    for (std::size_t k = 0; k < v.dim(); ++k)
        for (std::size_t i = 0; i < d * n; ++i) r1(i, k) = v.basis()[k].entries()[i];
    const auto ker = kernel(r1);
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < ker.dim(); ++i) gens.push_back(v.combination(ker.basis_vector(i)));
    return MatrixSpace::span(v.field(), n, n, gens);
}

ShearTransform::ShearTransform(std::size_t d, Matrix r) : d_(d), r_(std::move(r)) {
    if (r_.cols() != d_ || d_ == 0 || r_.rows() == 0) throw BadSplit("shear block R must be (n-d) x d with 1 <= d < n");
}

Matrix ShearTransform::matrix() const {
    const std::size_t n = d_ + r_.rows();
    Matrix p = Matrix::identity(r_.field(), n);
    p.set_block(d_, 0, r_);
    return p;
}

Matrix ShearTransform::inverse_matrix() const {
    const std::size_t n = d_ + r_.rows();
    Matrix p = Matrix::identity(r_.field(), n);
    p.set_block(d_, 0, r_.scaled(r_.field().neg(1)));
    return p;
}

Matrix shear_conjugate(const Matrix& n, const ShearTransform& t) {
    if (n.rows() != t.split() + t.r().rows()) throw BadSplit("shear size does not match matrix");
    const auto parts = split_blocks(n, t.split());
    const Matrix& r = t.r();
    const Matrix cr = parts.c * r;
    BlockParts out{parts.a - cr, parts.b + r * parts.a - r * cr - parts.d * r, parts.c, parts.d + r * parts.c};
    return out.reassemble();
}

MatrixSpace shear_conjugate(const MatrixSpace& v, const ShearTransform& t) {
    return map_space(v, v.rows(), v.cols(), [&](const Matrix& b) { return shear_conjugate(b, t); });
}

std::optional<ShearWitness> build_shear_witness(const MatrixSpace& v, std::size_t d, const Matrix& n0) {
    if (!v.contains(n0)) throw NotMember("N0 is not an element of V");
    const Matrix c = split_blocks(n0, d).c;
    if (c.is_zero()) return std::nullopt;
    const Field& f = v.field();
    const std::size_t e = v.rows() - d;
    std::optional<ShearWitness> out;
    for_each_projective_point(f, e, [&](const Vector& x) {
        const Vector cx = c * x;
        if (is_zero_vector(cx)) return true;
        std::size_t k = 0;
        while (cx[k] == 0) ++k;
        // R = x e_k^T / (e_k^T C x)
        const Scalar scale = f.inv(cx[k]);
        Matrix r(f, e, d);
        for (std::size_t i = 0; i < e; ++i) r(i, k) = f.mul(x[i], scale);
        out.emplace(ShearWitness{ShearTransform(d, std::move(r)), x});
        return false;
    });
    return out;
}

InvariantSplit split_along_invariant(const MatrixSpace& v, const VectorSubspace& w) {
    if (!v.is_square()) throw NotSquare("invariant split needs square matrices");
    if (w.is_zero() || w.is_full()) throw NotInvariant("invariant split needs a proper nonzero subspace");
    if (!is_invariant(v, w)) throw NotInvariant("subspace is not invariant under the space");
    const std::size_t k = w.dim();
    Matrix g = w.extend_to_basis().transpose();
    auto conj = transform_similar(v, inverse(g));
    auto a = block_space(conj, k, Block::A);
    auto b = block_space(conj, k, Block::D);
    return {std::move(g), std::move(conj), std::move(a), std::move(b)};
}

CoordinateSplit move_row_functionals_first(const MatrixSpace& v, const VectorSubspace& w) {
    Matrix g = w.extend_to_basis();
    auto conj = transform_similar(v, g);
    return {std::move(g), std::move(conj)};
}

} // namespace msw
