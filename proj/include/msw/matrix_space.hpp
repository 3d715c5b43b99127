#pragma once

#include "msw/matrix.hpp"
#include "msw/vector_subspace.hpp"

#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

namespace msw {

/// Default ceiling on the number of elements any exhaustive enumeration visits.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 22;

/// Linear subspace of Mat_{m,n}(GF(p)). The basis is the canonical (RREF)
/// basis of the row-major vectorizations, so equal spaces compare equal.
class MatrixSpace {
public:
    /// Throws ShapeMismatch when the matrices disagree in field or shape.
    static MatrixSpace span(Field field, std::size_t rows, std::size_t cols, std::span<const Matrix> mats);
    static MatrixSpace zero(Field field, std::size_t rows, std::size_t cols);
    static MatrixSpace full(Field field, std::size_t rows, std::size_t cols);
    /// `coords` lives in GF(p)^{rows*cols}.
    static MatrixSpace from_coordinates(std::size_t rows, std::size_t cols, VectorSubspace coords);

    const Field& field() const noexcept { return coords_.field(); }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    bool is_square() const noexcept { return rows_ == cols_; }

    const std::vector<Matrix>& basis() const noexcept { return basis_; }
    const VectorSubspace& coordinates() const noexcept { return coords_; }

    bool contains(const Matrix& m) const;
    bool contains(const MatrixSpace& other) const;

    /// p^dim, saturating.
    std::uint64_t element_count() const noexcept;
    /// Element whose basis coefficients are the little-endian base-p digits of `index`.
    Matrix element(std::uint64_t index) const;
    Matrix combination(std::span<const Scalar> coeffs) const;
    /// Coefficients of m in the canonical basis; throws NotMember if m is outside.
    std::vector<Scalar> coefficients(const Matrix& m) const;

    MatrixSpace sum(const MatrixSpace& other) const;
    MatrixSpace intersection(const MatrixSpace& other) const;
    MatrixSpace transpose() const;

    friend bool operator==(const MatrixSpace&, const MatrixSpace&) = default;

private:
    MatrixSpace(std::size_t rows, std::size_t cols, VectorSubspace coords);

    std::size_t rows_;
    std::size_t cols_;
    VectorSubspace coords_;
    std::vector<Matrix> basis_;
};

Vector vectorize(const Matrix& m);
Matrix devectorize(Field field, std::size_t rows, std::size_t cols, std::span<const Scalar> v);

/// Visits all p^dim elements in index order. Each step adds one basis matrix
/// per carried digit, so advancing is O(rows*cols) amortized.
class ElementIterator {
public:
    using value_type = Matrix;
    using difference_type = std::ptrdiff_t;

    ElementIterator() = default;
    ElementIterator(const MatrixSpace& space, std::uint64_t start);

    const Matrix& operator*() const noexcept { return current_; }
    const Matrix* operator->() const noexcept { return &current_; }
    ElementIterator& operator++();
    void operator++(int) { ++*this; }
    std::uint64_t index() const noexcept { return index_; }

    friend bool operator==(const ElementIterator& it, std::default_sentinel_t) noexcept {
        return it.index_ >= it.count_;
    }

private:
    const MatrixSpace* space_ = nullptr;
    std::vector<Scalar> digits_;
    Matrix current_{Field(2), 0, 0};
    std::uint64_t index_ = 0;
    std::uint64_t count_ = 0;
};

class ElementRange {
public:
    ElementRange(const MatrixSpace& space, std::uint64_t start) : space_(&space), start_(start) {}
    ElementIterator begin() const { return ElementIterator(*space_, start_); }
    std::default_sentinel_t end() const noexcept { return {}; }

private:
    const MatrixSpace* space_;
    std::uint64_t start_;
};

/// Throws EnumerationTooLarge when p^dim > cap.
ElementRange elements(const MatrixSpace& space, std::uint64_t cap = kDefaultEnumerationCap);
void require_enumerable(const MatrixSpace& space, std::uint64_t cap);

struct UpperRank {
    std::size_t rank = 0;
    Matrix witness;
};

UpperRank upper_rank(const MatrixSpace& space, std::uint64_t cap = kDefaultEnumerationCap);

/// First element (in index order) of rank >= r, if any.
std::optional<Matrix> element_of_rank_at_least(const MatrixSpace& space, std::size_t r,
                                               std::uint64_t cap = kDefaultEnumerationCap);

/// counts[r] = number of elements of rank r, r = 0..min(rows, cols).
struct RankProfile {
    std::vector<std::uint64_t> counts;
    friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

RankProfile rank_profile(const MatrixSpace& space, std::uint64_t cap = kDefaultEnumerationCap);

/// span{P B Q}. Throws Singular when P or Q is not invertible.
MatrixSpace transform_equivalent(const MatrixSpace& space, const Matrix& p, const Matrix& q);
/// span{P B P^-1}.
MatrixSpace transform_similar(const MatrixSpace& space, const Matrix& p);

/// span{B Q_W} in Mat_{m,d}, Q_W the n x d matrix of W's canonical basis.
MatrixSpace restrict_columns(const MatrixSpace& space, const VectorSubspace& w);
/// span{P_U B} in Mat_{c,n}, P_U the c x m matrix whose rows are U's canonical basis.
MatrixSpace compress_rows(const MatrixSpace& space, const VectorSubspace& u);

/// Image of the linear map applied to every basis element.
template <class Fn>
MatrixSpace map_space(const MatrixSpace& space, std::size_t rows, std::size_t cols, Fn&& fn) {
    std::vector<Matrix> images;
    images.reserve(space.dim());
    for (const auto& b : space.basis()) images.push_back(fn(b));
    return MatrixSpace::span(space.field(), rows, cols, images);
}

} // namespace msw
