#include "msw/linalg.hpp"

#include "msw/error.hpp"

#include <algorithm>
#include <utility>

namespace msw {

namespace {

// In-place Gauss-Jordan on `a`, mirroring every row operation on `t` when given.
std::vector<std::size_t> eliminate(Matrix& a, Matrix* t) {
    const Field& f = a.field();
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    auto swap_rows = [](Matrix& x, std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < x.cols(); ++c) std::swap(x(i, c), x(j, c));
    };
    auto scale_row = [&f](Matrix& x, std::size_t i, Scalar s) {
        for (std::size_t c = 0; c < x.cols(); ++c) x(i, c) = f.mul(x(i, c), s);
    };
    // row_i -= s * row_j
    auto sub_row = [&f](Matrix& x, std::size_t i, std::size_t j, Scalar s, std::size_t from) {
        for (std::size_t c = from; c < x.cols(); ++c)
            if (x(j, c) != 0) x(i, c) = f.sub(x(i, c), f.mul(s, x(j, c)));
    };
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && a(piv, c) == 0) ++piv;
        if (piv == m) continue;
        if (piv != r) {
            swap_rows(a, piv, r);
            if (t) swap_rows(*t, piv, r);
        }
        const Scalar inv = f.inv(a(r, c));
        if (inv != 1) {
            scale_row(a, r, inv);
            if (t) scale_row(*t, r, inv);
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Scalar s = a(i, c);
            sub_row(a, i, r, s, c);
            if (t) sub_row(*t, i, r, s, 0);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

RowEchelon rref(const Matrix& a) {
    RowEchelon out{a, 0, {}, Matrix::identity(a.field(), a.rows())};
    out.pivots = eliminate(out.reduced, &out.transform);
    out.rank = out.pivots.size();
    return out;
}

Matrix rref_matrix(const Matrix& a, std::vector<std::size_t>* pivots) {
    Matrix r = a;
    auto piv = eliminate(r, nullptr);
    if (pivots) *pivots = std::move(piv);
    return r;
}

std::size_t rank(const Matrix& a) {
    Matrix r = a;
    return eliminate(r, nullptr).size();
}

Scalar determinant(const Matrix& a) {
    if (!a.is_square()) throw NotSquare("determinant of a non-square matrix");
    const Field& f = a.field();
    const std::size_t n = a.rows();
    Matrix m = a;
    Scalar det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t k = c; k < n; ++k) std::swap(m(piv, k), m(c, k));
            det = f.neg(det);
        }
        det = f.mul(det, m(c, c));
        const Scalar inv = f.inv(m(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            const Scalar s = f.mul(m(i, c), inv);
            for (std::size_t k = c; k < n; ++k) m(i, k) = f.sub(m(i, k), f.mul(s, m(c, k)));
        }
    }
    return det;
}

VectorSubspace kernel(const Matrix& a) {
    const Field& f = a.field();
    const std::size_t n = a.cols();
    std::vector<std::size_t> pivots;
    const Matrix r = rref_matrix(a, &pivots);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vector v(n, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free));
        basis.push_back(std::move(v));
    }
    return VectorSubspace::span(f, n, basis);
}

Matrix inverse(const Matrix& a) {
    if (!a.is_square()) throw NotSquare("inverse of a non-square matrix");
    auto e = rref(a);
    if (e.rank < a.rows()) throw Singular("matrix is singular (rank " + std::to_string(e.rank) + ")");
    return e.transform;
}

bool is_invertible(const Matrix& a) { return a.is_square() && rank(a) == a.rows(); }

std::vector<Scalar> eigenvalues_in_field(const Matrix& n) {
    if (!n.is_square()) throw NotSquare("eigenvalues of a non-square matrix");
    const Field& f = n.field();
    std::vector<Scalar> out;
    Matrix shifted = n;
    for (Scalar lambda = 0; lambda < f.p(); ++lambda) {
        for (std::size_t i = 0; i < n.rows(); ++i) shifted(i, i) = f.sub(n(i, i), lambda);
        if (determinant(shifted) == 0) out.push_back(lambda);
    }
    return out;
}

Scalar first_nonzero_eigenvalue(const Matrix& n) {
    if (!n.is_square()) throw NotSquare("eigenvalues of a non-square matrix");
    const Field& f = n.field();
    Matrix shifted = n;
    for (Scalar lambda = 1; lambda < f.p(); ++lambda) {
        for (std::size_t i = 0; i < n.rows(); ++i) shifted(i, i) = f.sub(n(i, i), lambda);
        if (determinant(shifted) == 0) return lambda;
    }
    return 0;
}

Matrix power(const Matrix& a, std::size_t e) {
    if (!a.is_square()) throw NotSquare("power of a non-square matrix");
    Matrix result = Matrix::identity(a.field(), a.rows());
    Matrix base = a;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool is_nilpotent(const Matrix& n) { return power(n, n.rows()).is_zero(); }

} // namespace msw
