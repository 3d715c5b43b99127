#include "msw/constructions.hpp"

#include "msw/error.hpp"
#include "msw/grassmannian.hpp"
#include "msw/linalg.hpp"

namespace msw {

std::vector<std::pair<std::size_t, std::size_t>> wedge_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

Matrix elementary_alternating(Field field, std::size_t n, std::size_t i, std::size_t j) {
    Matrix a(field, n, n);
    a(i, j) = 1;
    a(j, i) = field.neg(1);
    return a;
}

std::vector<Matrix> alternating_basis(Field field, std::size_t n) {
    std::vector<Matrix> out;
    for (auto [i, j] : wedge_pairs(n)) out.push_back(elementary_alternating(field, n, i, j));
    return out;
}

bool is_alternating(const Matrix& e) {
    if (!e.is_square()) return false;
    const Field& f = e.field();
    for (std::size_t i = 0; i < e.rows(); ++i) {
        if (e(i, i) != 0) return false;
        for (std::size_t j = i + 1; j < e.cols(); ++j)
            if (e(i, j) != f.neg(e(j, i))) return false;
    }
    return true;
}

MatrixSpace alternating_space(std::size_t n, Field field) {
    return MatrixSpace::span(field, n, n, alternating_basis(field, n));
}

MatrixSpace strict_upper_triangular_space(std::size_t n, Field field) {
    std::vector<Matrix> basis;
    for (auto [i, j] : wedge_pairs(n)) basis.push_back(Matrix::unit(field, n, n, i, j));
    return MatrixSpace::span(field, n, n, basis);
}

Matrix wedge_operator(Field field, const Vector& x) {
    const std::size_t n = x.size();
    const auto pairs = wedge_pairs(n);
    Matrix m(field, pairs.size(), n);
    // x^T (e_i e_j^T - e_j e_i^T) = x_i e_j^T - x_j e_i^T
    for (std::size_t r = 0; r < pairs.size(); ++r) {
        auto [i, j] = pairs[r];
        m(r, j) = field.add(m(r, j), x[i]);
        m(r, i) = field.sub(m(r, i), x[j]);
    }
    return m;
}

MatrixSpace wedge_space(std::size_t n, Field field) {
    if (n < 2) throw PreconditionViolated("wedge space needs n >= 2");
    std::vector<Matrix> gens;
    for (std::size_t k = 0; k < n; ++k) {
        Vector e(n, 0);
        e[k] = 1;
        gens.push_back(wedge_operator(field, e));
    }
    return MatrixSpace::span(field, n * (n - 1) / 2, n, gens);
}

MatrixSpace transformed_wedge_space(std::size_t n, Field field, const std::vector<Matrix>& alt_basis, const Matrix& p) {
    const std::size_t m = n * (n - 1) / 2;
    if (alt_basis.size() != m) throw NotABasis("alternating basis must have C(n,2) elements");
    for (const auto& b : alt_basis)
        if (b.rows() != n || b.cols() != n || b.field() != field || !is_alternating(b))
            throw NotABasis("alternating basis contains a non-alternating matrix");
    if (MatrixSpace::span(field, n, n, alt_basis).dim() != m) throw NotABasis("alternating basis is dependent");
    if (p.rows() != n || !is_invertible(p)) throw Singular("transformed wedge space needs invertible P");
    std::vector<Matrix> gens;
    for (std::size_t k = 0; k < n; ++k) {
        Matrix g(field, m, n);
        for (std::size_t i = 0; i < m; ++i) {
            const Matrix bp = alt_basis[i] * p;
            for (std::size_t c = 0; c < n; ++c) g(i, c) = bp(k, c);  // e_k^T B_i P
        }
        gens.push_back(std::move(g));
    }
    return MatrixSpace::span(field, m, n, gens);
}

MatrixSpace scaled_alternating_space(const Matrix& p) {
    if (!is_invertible(p)) throw Singular("scaled alternating space needs invertible P");
    std::vector<Matrix> gens;
    for (const auto& a : alternating_basis(p.field(), p.rows())) gens.push_back(p * a);
    return MatrixSpace::span(p.field(), p.rows(), p.rows(), gens);
}

QuadraticForm::QuadraticForm(Matrix p) : p_(std::move(p)) {
    if (!is_invertible(p_)) throw Singular("quadratic form matrix must be invertible");
}

Scalar QuadraticForm::evaluate(const Vector& x) const {
    const Vector px = p_ * x;
    const Field& f = p_.field();
    Scalar s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s = f.fma(s, x[i], px[i]);
    return s;
}

IsotropyResult is_isotropic(const QuadraticForm& q) {
    IsotropyResult out;
    for_each_projective_point(q.matrix().field(), q.matrix().rows(), [&](const Vector& x) {
        if (q.evaluate(x) != 0) return true;
        out = {true, x};
        return false;
    });
    return out;
}

Matrix random_invertible(Rng& rng, Field field, std::size_t n) {
    while (true) {
        Matrix m = rng.matrix(field, n, n);
        if (is_invertible(m)) return m;
    }
}

MatrixSpace random_space(Rng& rng, Field field, std::size_t rows, std::size_t cols, std::size_t dim) {
    if (dim > rows * cols) throw ShapeMismatch("requested dimension exceeds ambient dimension");
    while (true) {
        std::vector<Matrix> gens;
        for (std::size_t i = 0; i < dim; ++i) gens.push_back(rng.matrix(field, rows, cols));
        auto s = MatrixSpace::span(field, rows, cols, gens);
        if (s.dim() == dim) return s;
    }
}

MatrixSpace random_subspace_of(Rng& rng, const MatrixSpace& ambient, std::size_t dim) {
    if (dim > ambient.dim()) throw ShapeMismatch("requested dimension exceeds ambient dimension");
    while (true) {
        std::vector<Matrix> gens;
        for (std::size_t i = 0; i < dim; ++i) gens.push_back(ambient.combination(rng.vector(ambient.field(), ambient.dim())));
        auto s = MatrixSpace::span(ambient.field(), ambient.rows(), ambient.cols(), gens);
        if (s.dim() == dim) return s;
    }
}

std::vector<Matrix> random_alt_basis(Rng& rng, Field field, std::size_t n) {
    const auto canonical = alternating_basis(field, n);
    const Matrix g = random_invertible(rng, field, canonical.size());
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < canonical.size(); ++i) {
        Matrix b(field, n, n);
        for (std::size_t k = 0; k < canonical.size(); ++k) b.add_scaled(g(i, k), canonical[k]);
        out.push_back(std::move(b));
    }
    return out;
}

} // namespace msw
