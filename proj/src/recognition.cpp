#include "msw/recognition.hpp"

#include "msw/constructions.hpp"
#include "msw/error.hpp"
#include "msw/linalg.hpp"
#include "msw/random.hpp"

#include <limits>

namespace msw {

const char* to_string(EquivalenceVerdict::Kind k) noexcept {
    switch (k) {
    case EquivalenceVerdict::Kind::equivalent: return "equivalent";
    case EquivalenceVerdict::Kind::distinct: return "distinct";
    case EquivalenceVerdict::Kind::inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(Outcome o) noexcept {
    switch (o) {
    case Outcome::found: return "found";
    case Outcome::none: return "none";
    case Outcome::inconclusive: return "inconclusive";
    }
    return "?";
}

CongruenceResult solve_alternating_congruence(const MatrixSpace& v, std::uint64_t seed) {
    if (!v.is_square()) throw NotSquare("alternating congruence needs square matrices");
    const std::size_t n = v.rows();
    const Field& f = v.field();
    CongruenceResult out;
    if (v.dim() != n * (n - 1) / 2) {
        out.exhaustive = true;
        return out;
    }
    // Unknown S, entry (a, b) at index a*n + b. (S B)_{ij} = sum_k S_{ik} B_{kj}.
    std::vector<Vector> equations;
    for (const auto& b : v.basis()) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                Vector row(n * n, 0);
                for (std::size_t k = 0; k < n; ++k) {
                    row[i * n + k] = f.add(row[i * n + k], b(k, j));
                    if (j != i) row[j * n + k] = f.add(row[j * n + k], b(k, i));
                }
                equations.push_back(std::move(row));
            }
        }
    }
    const auto solutions = MatrixSpace::from_coordinates(
        n, n, equations.empty() ? VectorSubspace::full(f, n * n) : kernel(Matrix::from_row_vectors(f, n * n, equations)));
    out.solution_dim = solutions.dim();

    auto accept = [&](const Matrix& s) {
        if (!is_invertible(s)) return false;
        Matrix p = inverse(s);
        if (scaled_alternating_space(p) != v) return false;
        out.outcome = Outcome::found;
        out.p = std::move(p);
        return true;
    };

    if (solutions.element_count() <= kCongruenceExhaustiveLimit) {
        out.exhaustive = true;
        for (const Matrix& s : elements(solutions, kCongruenceExhaustiveLimit)) {
            ++out.candidates_examined;
            if (accept(s)) return out;
        }
        out.outcome = Outcome::none;
        return out;
    }
    Rng rng(seed);
    for (std::uint64_t t = 0; t < kCongruenceRandomSamples; ++t) {
        ++out.candidates_examined;
        if (accept(solutions.combination(rng.vector(f, solutions.dim())))) return out;
    }
    out.outcome = Outcome::inconclusive;
    return out;
}

std::optional<Triangularization> strict_triangularization(const MatrixSpace& v) {
    if (!v.is_square()) throw NotSquare("triangularization needs square matrices");
    const std::size_t n = v.rows();
    const Field& f = v.field();
    std::vector<Vector> adapted;
    VectorSubspace spanned = VectorSubspace::zero(f, n);
    VectorSubspace level = VectorSubspace::zero(f, n);
    while (!level.is_full()) {
        // K_{j+1} = kernel of (annihilator(K_j) * B) stacked over the basis
        const Matrix ann = level.annihilator().basis();
        Matrix stacked(f, ann.rows() * v.dim(), n);
        for (std::size_t k = 0; k < v.dim(); ++k) stacked.set_block(k * ann.rows(), 0, ann * v.basis()[k]);
        VectorSubspace next = v.dim() == 0 ? VectorSubspace::full(f, n) : kernel(stacked);
        if (next.dim() <= level.dim()) return std::nullopt;
        for (std::size_t i = 0; i < next.dim(); ++i) {
            Vector u = next.basis_vector(i);
            if (spanned.contains(u)) continue;
            const Vector one[] = {u};
            spanned = spanned.sum(VectorSubspace::span(f, n, one));
            adapted.push_back(std::move(u));
        }
        level = std::move(next);
    }
    Triangularization out{{}, Matrix::from_row_vectors(f, n, adapted).transpose(), false};
    for (std::size_t k = 1; k <= n; ++k)
        out.flag.push_back(VectorSubspace::span(f, n, std::span<const Vector>(adapted.data(), k)));
    const auto conj = transform_similar(v, inverse(out.p));
    const auto strict = strict_upper_triangular_space(n, f);
    if (!strict.contains(conj)) return std::nullopt;
    out.full = conj == strict;
    return out;
}

std::uint64_t general_linear_order(std::size_t n, std::uint64_t p) {
    std::uint64_t order = 1;
    const std::uint64_t pn = saturating_pow(p, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t factor = pn - saturating_pow(p, i);
        if (factor != 0 && order > std::numeric_limits<std::uint64_t>::max() / factor)
            return std::numeric_limits<std::uint64_t>::max();
        order *= factor;
    }
    return order;
}

namespace {

// All P (m x m) with P T ⊆ S1 for every T in `ts`.
MatrixSpace admissible_left_factors(const MatrixSpace& s1, const std::vector<Matrix>& ts) {
    const Field& f = s1.field();
    const std::size_t m = s1.rows(), n = s1.cols();
    const auto ann = s1.coordinates().annihilator();
    std::vector<Vector> equations;
    for (const auto& t : ts) {
        for (std::size_t k = 0; k < ann.dim(); ++k) {
            const Vector a = ann.basis_vector(k);
            Vector row(m * m, 0);
            // coefficient of P_{r,s} is sum_c a_{r,c} T_{s,c}
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t s = 0; s < m; ++s) {
                    Scalar acc = 0;
                    for (std::size_t c = 0; c < n; ++c) acc = f.fma(acc, a[r * n + c], t(s, c));
                    row[r * m + s] = acc;
                }
            equations.push_back(std::move(row));
        }
    }
    if (equations.empty()) return MatrixSpace::full(f, m, m);
    return MatrixSpace::from_coordinates(m, m, kernel(Matrix::from_row_vectors(f, m * m, equations)));
}

} // namespace

EquivalenceVerdict equivalence_probe(const MatrixSpace& s1, const MatrixSpace& s2, std::uint64_t budget,
                                     std::uint64_t seed, std::uint64_t cap) {
    using Kind = EquivalenceVerdict::Kind;
    if (s1.field() != s2.field() || s1.rows() != s2.rows() || s1.cols() != s2.cols())
        throw ShapeMismatch("equivalence probe needs spaces of the same shape and field");
    EquivalenceVerdict out;
    if (s1.dim() != s2.dim()) {
        out.kind = Kind::distinct;
        out.reason = "dimension differs";
        out.exhaustive = true;
        return out;
    }
    if (s1.element_count() <= cap) {
        if (upper_rank(s1, cap).rank != upper_rank(s2, cap).rank) {
            out.kind = Kind::distinct;
            out.reason = "upper rank differs";
            out.exhaustive = true;
            return out;
        }
        if (rank_profile(s1, cap) != rank_profile(s2, cap)) {
            out.kind = Kind::distinct;
            out.reason = "rank profile differs";
            out.exhaustive = true;
            return out;
        }
    }
    const Field& f = s1.field();
    const std::size_t n = s1.cols();

    // Returns true when a verified witness was found.
    bool complete = true;
    auto try_q = [&](const Matrix& q) {
        std::vector<Matrix> ts;
        for (const auto& b : s2.basis()) ts.push_back(b * q);
        const auto candidates = admissible_left_factors(s1, ts);
        const std::uint64_t count = candidates.element_count();
        std::uint64_t index = 0;
        for (auto it = ElementIterator(candidates, 0); it != std::default_sentinel; ++it, ++index) {
            if (out.pairs_examined >= budget) {
                complete = false;
                return false;
            }
            ++out.pairs_examined;
            if (!is_invertible(*it)) continue;
            if (transform_equivalent(s2, *it, q) == s1) {
                out.kind = Kind::equivalent;
                out.p = *it;
                out.q = q;
                out.reason = "verified witness";
                return true;
            }
        }
        if (index < count) complete = false;
        return false;
    };

    const std::uint64_t gl_order = general_linear_order(n, f.p());
    const std::uint64_t all_matrices = saturating_pow(f.p(), n * n);
    if (gl_order <= budget && all_matrices <= (std::uint64_t{1} << 20)) {
        const auto everything = MatrixSpace::full(f, n, n);
        for (const Matrix& q : elements(everything, all_matrices)) {
            if (!is_invertible(q)) continue;
            if (try_q(q)) return out;
            if (out.pairs_examined >= budget) {
                complete = false;
                break;
            }
        }
        if (complete) {
            out.kind = Kind::distinct;
            out.reason = "exhaustive search over GL_n found no witness";
            out.exhaustive = true;
            return out;
        }
    } else {
        Rng rng(seed);
        while (out.pairs_examined < budget) {
            const std::uint64_t before = out.pairs_examined;
            if (try_q(random_invertible(rng, f, n))) return out;
            if (out.pairs_examined == before) ++out.pairs_examined;  // a Q with no candidates still costs one unit
        }
    }
    out.kind = Kind::inconclusive;
    out.reason = "search budget exhausted";
    return out;
}

} // namespace msw
