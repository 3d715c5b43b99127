#pragma once

// Brute-force reference implementations used to cross-check the library.
// They share only the Matrix container and field arithmetic with it.

#include "msw/field.hpp"
#include "msw/matrix.hpp"
#include "msw/matrix_space.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using msw::Field;
using msw::Matrix;
using msw::Scalar;
using msw::Vector;

inline Scalar leibniz_det(const Matrix& a) {
    const Field& f = a.field();
    const std::size_t n = a.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Scalar total = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        Scalar term = 1;
        for (std::size_t i = 0; i < n; ++i) term = f.mul(term, a(i, perm[i]));
        total = inversions % 2 ? f.sub(total, term) : f.add(total, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// All vectors of GF(p)^n, first coordinate fastest.
inline std::vector<Vector> all_vectors(const Field& f, std::size_t n) {
    std::vector<Vector> out;
    Vector v(n, 0);
    for (;;) {
        out.push_back(v);
        std::size_t k = 0;
        while (k < n && ++v[k] == f.p()) v[k++] = 0;
        if (k == n) return out;
    }
}

inline Vector apply(const Matrix& a, const Vector& x) {
    const Field& f = a.field();
    Vector y(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] = f.fma(y[i], a(i, j), x[j]);
    return y;
}

/// Set of all linear combinations, built by closing under addition and scaling.
inline std::set<Vector> span_set(const Field& f, std::size_t n, const std::vector<Vector>& gens) {
    std::set<Vector> s{Vector(n, 0)};
    for (const auto& g : gens) {
        std::set<Vector> next;
        for (const auto& v : s)
            for (Scalar c = 0; c < f.p(); ++c) {
                Vector w = v;
                for (std::size_t i = 0; i < n; ++i) w[i] = f.fma(w[i], c, g[i]);
                next.insert(w);
            }
        s = std::move(next);
    }
    return s;
}

inline std::size_t log_p(std::uint64_t size, std::uint32_t p) {
    std::size_t k = 0;
    while (size > 1) {
        size /= p;
        ++k;
    }
    return k;
}

/// Rank as log_p of the size of the image of the given domain.
inline std::size_t image_rank(const Matrix& a, const std::vector<Vector>& domain) {
    std::set<Vector> image;
    for (const auto& x : domain) image.insert(apply(a, x));
    return log_p(image.size(), a.field().p());
}

inline std::size_t brute_rank(const Matrix& a) { return image_rank(a, all_vectors(a.field(), a.cols())); }

/// Elements of a space as naive combinations of its basis.
inline std::vector<Matrix> all_elements(const msw::MatrixSpace& s) {
    const Field& f = s.field();
    std::vector<Matrix> out;
    for (const auto& c : all_vectors(f, s.dim())) {
        Matrix m(f, s.rows(), s.cols());
        for (std::size_t k = 0; k < s.dim(); ++k)
            for (std::size_t i = 0; i < s.rows(); ++i)
                for (std::size_t j = 0; j < s.cols(); ++j) m(i, j) = f.fma(m(i, j), c[k], s.basis()[k](i, j));
        out.push_back(std::move(m));
    }
    return out;
}

inline std::size_t brute_upper_rank(const msw::MatrixSpace& s) {
    std::size_t best = 0;
    for (const auto& m : all_elements(s)) best = std::max(best, brute_rank(m));
    return best;
}

inline bool has_nonzero_eigenvalue(const Matrix& a) {
    const Field& f = a.field();
    for (Scalar l = 1; l < f.p(); ++l) {
        Matrix shifted = a;
        for (std::size_t i = 0; i < a.rows(); ++i) shifted(i, i) = f.sub(shifted(i, i), l);
        if (leibniz_det(shifted) == 0) return true;
    }
    return false;
}

inline bool brute_trivial_spectrum(const msw::MatrixSpace& s) {
    for (const auto& m : all_elements(s))
        if (has_nonzero_eigenvalue(m)) return false;
    return true;
}

/// q-Pascal recurrence.
inline std::uint64_t gaussian_binomial(std::size_t n, std::size_t d, std::uint64_t q) {
    std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        t[i][0] = 1;
        std::uint64_t qk = 1;
        for (std::size_t k = 1; k <= i; ++k) {
            qk *= q;
            t[i][k] = t[i - 1][k - 1] + qk * t[i - 1][k];
        }
    }
    return d <= n ? t[n][d] : 0;
}

/// Every subspace of GF(p)^n as the set of its vectors.
inline std::set<std::set<Vector>> all_subspaces(const Field& f, std::size_t n) {
    std::set<std::set<Vector>> out{{Vector(n, 0)}};
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<std::set<Vector>> next = out;
        for (const auto& s : out)
            for (const auto& v : all_vectors(f, n)) {
                if (s.count(v)) continue;
                std::vector<Vector> gens(s.begin(), s.end());
                gens.push_back(v);
                grew |= next.insert(span_set(f, n, gens)).second;
            }
        out = std::move(next);
    }
    return out;
}

inline bool brute_irreducible(const msw::MatrixSpace& s) {
    const Field& f = s.field();
    const std::size_t n = s.rows();
    std::size_t full = 1;
    for (std::size_t i = 0; i < n; ++i) full *= f.p();
    for (const auto& w : all_subspaces(f, n)) {
        if (w.size() == 1 || w.size() == full) continue;
        bool invariant = true;
        for (const auto& b : s.basis())
            for (const auto& x : w) invariant = invariant && w.count(apply(b, x));
        if (invariant) return false;
    }
    return true;
}

/// Hyperplanes as kernels of nonzero functionals: urk of the restriction
/// equals urk(S) for every hyperplane.
inline bool brute_condition_iii(const msw::MatrixSpace& s) {
    const Field& f = s.field();
    const auto elems = all_elements(s);
    const auto vectors = all_vectors(f, s.cols());
    std::size_t urk = 0;
    for (const auto& m : elems) urk = std::max(urk, image_rank(m, vectors));
    for (const auto& a : vectors) {
        if (std::all_of(a.begin(), a.end(), [](Scalar x) { return x == 0; })) continue;
        std::vector<Vector> w;
        for (const auto& x : vectors) {
            Scalar dot = 0;
            for (std::size_t i = 0; i < x.size(); ++i) dot = f.fma(dot, a[i], x[i]);
            if (dot == 0) w.push_back(x);
        }
        std::size_t best = 0;
        for (const auto& m : elems) best = std::max(best, image_rank(m, w));
        if (best < urk) return false;
    }
    return true;
}

/// Row compressions to m-1 rows kill exactly one line of the target; the rank
/// drops iff that line lies in the image.
inline bool brute_condition_iv(const msw::MatrixSpace& s) {
    if (s.rows() == 1) return true;
    const Field& f = s.field();
    const auto elems = all_elements(s);
    const auto domain = all_vectors(f, s.cols());
    std::vector<std::set<Vector>> images;
    std::size_t urk = 0;
    for (const auto& m : elems) {
        std::set<Vector> im;
        for (const auto& x : domain) im.insert(apply(m, x));
        urk = std::max(urk, log_p(im.size(), f.p()));
        images.push_back(std::move(im));
    }
    for (const auto& v : all_vectors(f, s.rows())) {
        if (std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; })) continue;
        std::size_t best = 0;
        for (const auto& im : images) best = std::max(best, log_p(im.size(), f.p()) - (im.count(v) ? 1 : 0));
        if (best < urk) return false;
    }
    return true;
}

inline std::uint64_t brute_gl_order(const Field& f, std::size_t n) {
    std::uint64_t count = 0;
    for (const auto& v : all_vectors(f, n * n)) {
        Matrix m(f, n, n);
        for (std::size_t k = 0; k < n * n; ++k) m(k / n, k % n) = v[k];
        count += leibniz_det(m) != 0;
    }
    return count;
}

} // namespace oracle
