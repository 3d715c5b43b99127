#include "msw/vector_subspace.hpp"

#include "msw/error.hpp"
#include "msw/linalg.hpp"

namespace msw {

namespace {

Matrix canonical_rows(const Matrix& m) {
    std::vector<std::size_t> pivots;
    Matrix r = rref_matrix(m, &pivots);
    return r.block(0, 0, pivots.size(), m.cols());
}

} // namespace

VectorSubspace VectorSubspace::zero(Field field, std::size_t n) { return VectorSubspace(Matrix(field, 0, n)); }

VectorSubspace VectorSubspace::full(Field field, std::size_t n) {
    return VectorSubspace(Matrix::identity(field, n));
}

VectorSubspace VectorSubspace::span(Field field, std::size_t n, std::span<const Vector> vectors) {
    return VectorSubspace(canonical_rows(Matrix::from_row_vectors(field, n, vectors)));
}

VectorSubspace VectorSubspace::row_space(const Matrix& m) { return VectorSubspace(canonical_rows(m)); }

VectorSubspace VectorSubspace::from_canonical_basis(Matrix basis) { return VectorSubspace(std::move(basis)); }

std::vector<Vector> VectorSubspace::basis_vectors() const {
    std::vector<Vector> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
}

bool VectorSubspace::contains(const Vector& v) const {
    if (v.size() != ambient_dim()) throw ShapeMismatch("vector length does not match ambient dimension");
    // Reduce v against the RREF basis; pivot of row i is its first nonzero entry.
    const Field& f = field();
    Vector w = v;
    for (std::size_t i = 0; i < dim(); ++i) {
        std::size_t piv = 0;
        while (basis_(i, piv) == 0) ++piv;
        const Scalar s = w[piv];
        if (s == 0) continue;
        for (std::size_t c = piv; c < ambient_dim(); ++c) w[c] = f.sub(w[c], f.mul(s, basis_(i, c)));
    }
    return is_zero_vector(w);
}

bool VectorSubspace::contains(const VectorSubspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

VectorSubspace VectorSubspace::sum(const VectorSubspace& other) const {
    if (other.field() != field() || other.ambient_dim() != ambient_dim())
        throw ShapeMismatch("subspace sum across different ambient spaces");
    Matrix stacked(field(), dim() + other.dim(), ambient_dim());
    stacked.set_block(0, 0, basis_);
    stacked.set_block(dim(), 0, other.basis_);
    return row_space(stacked);
}

VectorSubspace VectorSubspace::intersection(const VectorSubspace& other) const {
    // U ∩ W = ann(ann U + ann W)
    return annihilator().sum(other.annihilator()).annihilator();
}

VectorSubspace VectorSubspace::annihilator() const { return kernel(basis_); }

Matrix VectorSubspace::extend_to_basis() const {
    const std::size_t n = ambient_dim();
    Matrix out(field(), n, n);
    out.set_block(0, 0, basis_);
    VectorSubspace current = *this;
    std::size_t next = dim();
    for (std::size_t k = 0; k < n && next < n; ++k) {
        Vector e(n, 0);
        e[k] = 1;
        if (current.contains(e)) continue;
        out(next++, k) = 1;
        const Vector single[] = {e};
        current = current.sum(VectorSubspace::span(field(), n, single));
    }
    return out;
}

} // namespace msw
