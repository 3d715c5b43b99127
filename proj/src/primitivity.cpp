#include "msw/primitivity.hpp"

#include "msw/error.hpp"
#include "msw/grassmannian.hpp"
#include "msw/linalg.hpp"

namespace msw {

namespace {

// Stack the basis matrices vertically; the kernel of the stack is the common kernel.
Matrix stack_basis(const MatrixSpace& s, bool transposed) {
    const std::size_t h = transposed ? s.cols() : s.rows();
    const std::size_t w = transposed ? s.rows() : s.cols();
    Matrix out(s.field(), h * s.dim(), w);
    for (std::size_t k = 0; k < s.dim(); ++k)
        out.set_block(k * h, 0, transposed ? s.basis()[k].transpose() : s.basis()[k]);
    return out;
}

KernelCondition common_kernel_condition(const MatrixSpace& s, bool transposed) {
    const auto ker = kernel(stack_basis(s, transposed));
    if (ker.is_zero()) return {};
    return {false, ker.basis_vector(0)};
}

template <class Compress>
HyperplaneCondition hyperplane_scan(const MatrixSpace& s, std::size_t ambient, std::uint64_t cap, Compress&& compress) {
    require_enumerable(s, cap);
    const std::size_t urk = upper_rank(s, cap).rank;
    Grassmannian hyperplanes(s.field(), ambient, ambient - 1);
    for (auto c = hyperplanes.cursor(); !c.done(); c.advance()) {
        auto h = c.subspace();
        if (!element_of_rank_at_least(compress(s, h), urk, cap)) return {false, std::move(h), false};
    }
    return {};
}

} // namespace

KernelCondition condition_i(const MatrixSpace& s) { return common_kernel_condition(s, false); }

KernelCondition condition_ii(const MatrixSpace& s) { return common_kernel_condition(s, true); }

HyperplaneCondition condition_iii(const MatrixSpace& s, std::uint64_t cap) {
    return hyperplane_scan(s, s.cols(), cap, restrict_columns);
}

HyperplaneCondition condition_iv(const MatrixSpace& s, std::uint64_t cap) {
    if (s.rows() == 1) return {true, std::nullopt, true};
    return hyperplane_scan(s, s.rows(), cap, compress_rows);
}

PrimitivityReport classify(const MatrixSpace& s, std::uint64_t cap) {
    PrimitivityReport r;
    r.cond_i = condition_i(s);
    r.cond_ii = condition_ii(s);
    r.cond_iii = condition_iii(s, cap);
    r.cond_iv = condition_iv(s, cap);
    r.upper_rank = upper_rank(s, cap).rank;
    return r;
}

std::optional<CompressionReport> minimal_degenerate_compression(const MatrixSpace& s, std::uint64_t cap) {
    if (!condition_i(s).holds || !condition_ii(s).holds)
        throw PreconditionViolated("minimal compression needs conditions (i) and (ii)");
    require_enumerable(s, cap);
    const Field& f = s.field();
    const std::size_t m = s.rows();
    for (std::size_t d = 1; d < s.cols(); ++d) {
        Grassmannian g(f, s.cols(), d);
        for (auto cur = g.cursor(); !cur.done(); cur.advance()) {
            auto w = cur.subspace();
            auto h = restrict_columns(s, w);
            if (element_of_rank_at_least(h, d, cap)) continue;

            CompressionReport out{d, std::move(w), std::move(h), 0, 0, Matrix(f, m, m), MatrixSpace::zero(f, 0, d)};
            std::vector<Vector> columns;
            for (const auto& b : out.restricted.basis())
                for (std::size_t j = 0; j < d; ++j) columns.push_back(b.column(j));
            const auto image = VectorSubspace::span(f, m, columns);
            const auto left_kernel = image.annihilator();
            out.c = image.dim();
            out.left_kernel_dim = left_kernel.dim();
            // Rows of T: a completion first, then the left kernel, so the last m - c rows of T H(M) vanish.
            const Matrix ext = left_kernel.extend_to_basis();
            out.row_basis_change.set_block(0, 0, ext.block(left_kernel.dim(), 0, out.c, m));
            out.row_basis_change.set_block(out.c, 0, ext.block(0, 0, left_kernel.dim(), m));
            const Matrix top = out.row_basis_change.block(0, 0, out.c, m);
            out.core = map_space(out.restricted, out.c, d, [&](const Matrix& b) { return top * b; });
            return out;
        }
    }
    return std::nullopt;
}

} // namespace msw
