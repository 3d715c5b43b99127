#pragma once

#include "msw/matrix_space.hpp"

#include <optional>

namespace msw {

/// Outcome of condition (i) or (ii): a common (left) kernel vector refutes it.
struct KernelCondition {
    bool holds = true;
    std::optional<Vector> witness;
};

/// Outcome of condition (iii) or (iv): a hyperplane on which the upper rank drops refutes it.
struct HyperplaneCondition {
    bool holds = true;
    std::optional<VectorSubspace> witness;
    bool vacuous = false;  ///< (iv) with a single row is taken to hold vacuously
};

struct PrimitivityReport {
    KernelCondition cond_i;
    KernelCondition cond_ii;
    HyperplaneCondition cond_iii;
    HyperplaneCondition cond_iv;
    std::size_t upper_rank = 0;

    bool is_reduced() const noexcept { return cond_i.holds && cond_ii.holds; }
    bool is_semi_primitive() const noexcept { return is_reduced() && cond_iii.holds; }
    bool is_primitive() const noexcept { return is_semi_primitive() && cond_iv.holds; }
};

/// (i): no nonzero vector is killed by every element, i.e. the space is not
/// equivalent to one whose last column vanishes identically.
KernelCondition condition_i(const MatrixSpace& s);
/// (ii): no nonzero row functional kills every element.
KernelCondition condition_ii(const MatrixSpace& s);
/// (iii): restricting to any column hyperplane keeps the upper rank.
HyperplaneCondition condition_iii(const MatrixSpace& s, std::uint64_t cap = kDefaultEnumerationCap);
/// (iv): compressing to any (m-1)-dimensional space of row functionals keeps
/// the upper rank. Holds vacuously when m = 1.
HyperplaneCondition condition_iv(const MatrixSpace& s, std::uint64_t cap = kDefaultEnumerationCap);

PrimitivityReport classify(const MatrixSpace& s, std::uint64_t cap = kDefaultEnumerationCap);

/// Minimal column compression of a reduced space whose upper rank falls below
/// the compressed width, followed by the row change isolating its core.
struct CompressionReport {
    std::size_t d = 0;                ///< minimal width with urk(S|W) < d
    VectorSubspace column_subspace;   ///< W, dim d
    MatrixSpace restricted;           ///< H(S) = S|W inside Mat_{m,d}
    std::size_t c = 0;                ///< dim of the span of all columns of H(S)
    std::size_t left_kernel_dim = 0;  ///< m - c: common left kernel of H(S)
    Matrix row_basis_change;          ///< T with T H(M) = [K(M); 0]
    MatrixSpace core;                 ///< K(S) inside Mat_{c,d}
};

/// Scans d = 1..n-1 and, for each d, the d-dimensional column subspaces in
/// Grassmannian order; the first W with urk(S|W) < d wins. Returns nullopt
/// when no such W exists. Throws PreconditionViolated unless (i) and (ii) hold.
std::optional<CompressionReport> minimal_degenerate_compression(const MatrixSpace& s,
                                                                std::uint64_t cap = kDefaultEnumerationCap);

} // namespace msw
