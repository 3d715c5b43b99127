#include "msw/matrix_space.hpp"

#include "msw/error.hpp"
#include "msw/linalg.hpp"

#include <algorithm>

namespace msw {

Vector vectorize(const Matrix& m) { return Vector(m.entries().begin(), m.entries().end()); }

Matrix devectorize(Field field, std::size_t rows, std::size_t cols, std::span<const Scalar> v) {
    return Matrix(field, rows, cols, std::vector<Scalar>(v.begin(), v.end()));
}

MatrixSpace::MatrixSpace(std::size_t rows, std::size_t cols, VectorSubspace coords)
    : rows_(rows), cols_(cols), coords_(std::move(coords)) {
    if (coords_.ambient_dim() != rows * cols) throw ShapeMismatch("coordinate space has the wrong ambient dimension");
    basis_.reserve(coords_.dim());
    const auto& b = coords_.basis();
    for (std::size_t i = 0; i < coords_.dim(); ++i)
        basis_.push_back(devectorize(field(), rows, cols, b.entries().subspan(i * b.cols(), b.cols())));
}

MatrixSpace MatrixSpace::span(Field field, std::size_t rows, std::size_t cols, std::span<const Matrix> mats) {
    Matrix stacked(field, mats.size(), rows * cols);
    for (std::size_t i = 0; i < mats.size(); ++i) {
        const auto& m = mats[i];
        if (m.field() != field || m.rows() != rows || m.cols() != cols)
            throw ShapeMismatch("span: matrix " + std::to_string(i) + " has shape " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                                std::to_string(cols));
        std::copy(m.entries().begin(), m.entries().end(),
                  stacked.entries().begin() + static_cast<std::ptrdiff_t>(i * rows * cols));
    }
    return MatrixSpace(rows, cols, VectorSubspace::row_space(stacked));
}

MatrixSpace MatrixSpace::zero(Field field, std::size_t rows, std::size_t cols) {
    return MatrixSpace(rows, cols, VectorSubspace::zero(field, rows * cols));
}

MatrixSpace MatrixSpace::full(Field field, std::size_t rows, std::size_t cols) {
    return MatrixSpace(rows, cols, VectorSubspace::full(field, rows * cols));
}

MatrixSpace MatrixSpace::from_coordinates(std::size_t rows, std::size_t cols, VectorSubspace coords) {
    return MatrixSpace(rows, cols, std::move(coords));
}

bool MatrixSpace::contains(const Matrix& m) const {
    if (m.field() != field() || m.rows() != rows_ || m.cols() != cols_) return false;
    return coords_.contains(vectorize(m));
}

bool MatrixSpace::contains(const MatrixSpace& other) const {
    if (other.field() != field() || other.rows_ != rows_ || other.cols_ != cols_) return false;
    return coords_.contains(other.coords_);
}

std::uint64_t MatrixSpace::element_count() const noexcept { return saturating_pow(field().p(), dim()); }

Matrix MatrixSpace::element(std::uint64_t index) const {
    std::vector<Scalar> coeffs(dim());
    for (auto& c : coeffs) {
        c = static_cast<Scalar>(index % field().p());
        index /= field().p();
    }
    return combination(coeffs);
}

Matrix MatrixSpace::combination(std::span<const Scalar> coeffs) const {
    if (coeffs.size() != dim()) throw ShapeMismatch("coefficient count does not match dimension");
    Matrix out(field(), rows_, cols_);
    for (std::size_t i = 0; i < dim(); ++i) out.add_scaled(coeffs[i], basis_[i]);
    return out;
}

std::vector<Scalar> MatrixSpace::coefficients(const Matrix& m) const {
    if (!contains(m)) throw NotMember("matrix is not an element of the space");
    // In RREF coordinates the coefficient of basis i is the entry at its pivot.
    std::vector<Scalar> out(dim());
    const auto& b = coords_.basis();
    const auto v = m.entries();
    for (std::size_t i = 0; i < dim(); ++i) {
        std::size_t piv = 0;
        while (b(i, piv) == 0) ++piv;
        out[i] = v[piv];
    }
    return out;
}

MatrixSpace MatrixSpace::sum(const MatrixSpace& other) const {
    if (other.rows_ != rows_ || other.cols_ != cols_) throw ShapeMismatch("sum of differently shaped spaces");
    return MatrixSpace(rows_, cols_, coords_.sum(other.coords_));
}

MatrixSpace MatrixSpace::intersection(const MatrixSpace& other) const {
    if (other.rows_ != rows_ || other.cols_ != cols_)
        throw ShapeMismatch("intersection of differently shaped spaces");
    return MatrixSpace(rows_, cols_, coords_.intersection(other.coords_));
}

MatrixSpace MatrixSpace::transpose() const {
    return map_space(*this, cols_, rows_, [](const Matrix& b) { return b.transpose(); });
}

ElementIterator::ElementIterator(const MatrixSpace& space, std::uint64_t start)
    : space_(&space), digits_(space.dim(), 0), current_(space.element(start)), index_(start),
      count_(space.element_count()) {
    std::uint64_t rest = start;
    for (auto& d : digits_) {
        d = static_cast<Scalar>(rest % space.field().p());
        rest /= space.field().p();
    }
}

ElementIterator& ElementIterator::operator++() {
    ++index_;
    if (index_ >= count_) return *this;
    const Scalar p = space_->field().p();
    // Incrementing digit k adds B_k; a wrap from p-1 to 0 also adds B_k since p*B_k = 0.
    for (std::size_t k = 0; k < digits_.size(); ++k) {
        current_ += space_->basis()[k];
        if (++digits_[k] < p) break;
        digits_[k] = 0;
    }
    return *this;
}

void require_enumerable(const MatrixSpace& space, std::uint64_t cap) {
    const auto count = space.element_count();
    if (count > cap) throw EnumerationTooLarge(count, cap);
}

ElementRange elements(const MatrixSpace& space, std::uint64_t cap) {
    require_enumerable(space, cap);
    return ElementRange(space, 0);
}

UpperRank upper_rank(const MatrixSpace& space, std::uint64_t cap) {
    const std::size_t ceiling = std::min(space.rows(), space.cols());
    UpperRank best{0, Matrix(space.field(), space.rows(), space.cols())};
    for (const Matrix& m : elements(space, cap)) {
        const std::size_t r = rank(m);
        if (r > best.rank) {
            best = {r, m};
            if (r == ceiling) break;
        }
    }
    return best;
}

std::optional<Matrix> element_of_rank_at_least(const MatrixSpace& space, std::size_t r, std::uint64_t cap) {
    if (r == 0) return Matrix(space.field(), space.rows(), space.cols());
    if (r > std::min(space.rows(), space.cols())) return std::nullopt;
    for (const Matrix& m : elements(space, cap))
        if (rank(m) >= r) return m;
    return std::nullopt;
}

RankProfile rank_profile(const MatrixSpace& space, std::uint64_t cap) {
    RankProfile out{std::vector<std::uint64_t>(std::min(space.rows(), space.cols()) + 1, 0)};
    for (const Matrix& m : elements(space, cap)) ++out.counts[rank(m)];
    return out;
}

MatrixSpace transform_equivalent(const MatrixSpace& space, const Matrix& p, const Matrix& q) {
    if (p.rows() != space.rows() || q.rows() != space.cols())
        throw ShapeMismatch("equivalence transform has the wrong size");
    if (!is_invertible(p) || !is_invertible(q)) throw Singular("equivalence transform is not invertible");
    return map_space(space, space.rows(), space.cols(), [&](const Matrix& b) { return p * b * q; });
}

MatrixSpace transform_similar(const MatrixSpace& space, const Matrix& p) {
    if (!space.is_square()) throw NotSquare("similarity requires a space of square matrices");
    if (p.rows() != space.rows()) throw ShapeMismatch("similarity transform has the wrong size");
    const Matrix pinv = inverse(p);
    return map_space(space, space.rows(), space.cols(), [&](const Matrix& b) { return p * b * pinv; });
}

MatrixSpace restrict_columns(const MatrixSpace& space, const VectorSubspace& w) {
    if (w.ambient_dim() != space.cols()) throw ShapeMismatch("column subspace has the wrong ambient dimension");
    const Matrix qw = w.basis().transpose();
    return map_space(space, space.rows(), w.dim(), [&](const Matrix& b) { return b * qw; });
}

MatrixSpace compress_rows(const MatrixSpace& space, const VectorSubspace& u) {
    if (u.ambient_dim() != space.rows()) throw ShapeMismatch("row functional space has the wrong ambient dimension");
    const Matrix& pu = u.basis();
    return map_space(space, u.dim(), space.cols(), [&](const Matrix& b) { return pu * b; });
}

} // namespace msw
