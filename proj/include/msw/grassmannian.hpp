#pragma once

#include "msw/matrix_space.hpp"
#include "msw/vector_subspace.hpp"

#include <cstdint>
#include <vector>

namespace msw {

/// Number of d-dimensional subspaces of GF(q)^n (product formula), saturating.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t d, std::uint64_t q);

/// All d-dimensional subspaces of GF(p)^n, each exactly once, in a fixed order
/// that is part of the scan-partitioning contract:
///   - pivot column sets in lexicographic order;
///   - within a pivot set, the free RREF entries (row-major) form a base-p
///     odometer whose first free entry varies fastest.
/// Any index range can be visited independently, so scans partition by index.
class Grassmannian {
public:
    Grassmannian(Field field, std::size_t n, std::size_t d);

    const Field& field() const noexcept { return field_; }
    std::size_t ambient_dim() const noexcept { return n_; }
    std::size_t dim() const noexcept { return d_; }

    /// Sum over pivot sets of p^(free entries), saturating at UINT64_MAX.
    std::uint64_t size() const noexcept { return size_; }

    class Cursor {
    public:
        bool done() const noexcept { return done_; }
        std::uint64_t index() const noexcept { return index_; }
        /// d x n canonical basis of the current subspace.
        const Matrix& basis() const noexcept { return basis_; }
        VectorSubspace subspace() const { return VectorSubspace::from_canonical_basis(basis_); }
        void advance();

    private:
        friend class Grassmannian;
        Cursor(const Grassmannian& g, std::uint64_t start);
        void load_pattern();
        bool next_pattern();

        Field field_;
        std::size_t n_;
        std::size_t d_;
        std::vector<std::size_t> pivots_;
        std::vector<std::pair<std::size_t, std::size_t>> free_;
        std::vector<Scalar> digits_;
        Matrix basis_;
        std::uint64_t index_ = 0;
        bool done_ = false;
    };

    Cursor cursor(std::uint64_t start = 0) const { return Cursor(*this, start); }
    VectorSubspace at(std::uint64_t index) const;

    /// fn(index, const Matrix& basis); visits [begin, min(end, size())).
    template <class Fn>
    void for_each(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
        for (auto c = cursor(begin); !c.done() && c.index() < end; c.advance()) fn(c.index(), c.basis());
    }

private:
    static std::size_t free_count(const std::vector<std::size_t>& pivots, std::size_t n);

    Field field_;
    std::size_t n_;
    std::size_t d_;
    std::uint64_t size_;
};

/// Subspaces of dimension d of Mat_{m,n}(GF(p)), via the Grassmannian of GF(p)^{mn}.
class MatrixGrassmannian {
public:
    MatrixGrassmannian(Field field, std::size_t rows, std::size_t cols, std::size_t d)
        : rows_(rows), cols_(cols), inner_(field, rows * cols, d) {}

    std::uint64_t size() const noexcept { return inner_.size(); }
    const Grassmannian& vectorized() const noexcept { return inner_; }
    MatrixSpace at(std::uint64_t index) const { return MatrixSpace::from_coordinates(rows_, cols_, inner_.at(index)); }

    /// fn(index, const MatrixSpace&)
    template <class Fn>
    void for_each(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
        inner_.for_each(begin, end, [&](std::uint64_t i, const Matrix& b) {
            fn(i, MatrixSpace::from_coordinates(rows_, cols_, VectorSubspace::from_canonical_basis(b)));
        });
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    Grassmannian inner_;
};

/// Projective points of GF(p)^n (vectors whose first nonzero entry is 1), in
/// the order of Grassmannian(n, 1). fn(const Vector&) returns false to stop.
template <class Fn>
void for_each_projective_point(Field field, std::size_t n, Fn&& fn) {
    Grassmannian g(field, n, 1);
    for (auto c = g.cursor(); !c.done(); c.advance())
        if (!fn(c.basis().row(0))) return;
}

} // namespace msw
