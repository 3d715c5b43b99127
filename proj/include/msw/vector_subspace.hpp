#pragma once

#include "msw/matrix.hpp"

#include <span>

namespace msw {

/// Subspace of GF(p)^n stored by its canonical basis: the nonzero rows of the
/// reduced row-echelon form of any spanning set. Two spans of the same set
/// therefore compare equal with plain `==`.
class VectorSubspace {
public:
    static VectorSubspace zero(Field field, std::size_t n);
    static VectorSubspace full(Field field, std::size_t n);
    static VectorSubspace span(Field field, std::size_t n, std::span<const Vector> vectors);
    static VectorSubspace row_space(const Matrix& m);
    /// Trusts that `basis` is already in reduced row-echelon form with no zero rows.
    static VectorSubspace from_canonical_basis(Matrix basis);

    const Field& field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    bool is_zero() const noexcept { return dim() == 0; }
    bool is_full() const noexcept { return dim() == ambient_dim(); }

    /// dim x n, rows are the canonical basis.
    const Matrix& basis() const noexcept { return basis_; }
    Vector basis_vector(std::size_t i) const { return basis_.row(i); }
    std::vector<Vector> basis_vectors() const;

    bool contains(const Vector& v) const;
    bool contains(const VectorSubspace& other) const;

    VectorSubspace sum(const VectorSubspace& other) const;
    VectorSubspace intersection(const VectorSubspace& other) const;
    /// {y : y . x = 0 for all x in this}
    VectorSubspace annihilator() const;

    /// n x n invertible matrix whose first dim() rows are this basis, followed by
    /// the lowest-index standard vectors that are not yet in the span.
    Matrix extend_to_basis() const;

    friend bool operator==(const VectorSubspace&, const VectorSubspace&) = default;

private:
    explicit VectorSubspace(Matrix basis) : basis_(std::move(basis)) {}
    Matrix basis_;
};

} // namespace msw
