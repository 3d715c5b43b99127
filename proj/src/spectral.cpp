#include "msw/spectral.hpp"

#include "msw/error.hpp"
#include "msw/grassmannian.hpp"
#include "msw/linalg.hpp"

namespace msw {

namespace {

void require_square(const MatrixSpace& s) {
    if (!s.is_square()) throw NotSquare("spectral predicates need square matrices");
}

} // namespace

TrivialSpectrumResult is_trivial_spectrum(const MatrixSpace& s, std::uint64_t cap) {
    require_square(s);
    for (const Matrix& n : elements(s, cap)) {
        if (n.is_zero()) continue;
        if (const Scalar lambda = first_nonzero_eigenvalue(n); lambda != 0) return {false, SpectrumWitness{n, lambda}};
    }
    return {};
}

NilpotencyResult is_nilpotent_space(const MatrixSpace& s, std::uint64_t cap) {
    require_square(s);
    for (const Matrix& n : elements(s, cap))
        if (!is_nilpotent(n)) return {false, n};
    return {};
}

VectorSubspace image_of_vector(const MatrixSpace& s, const Vector& x) {
    if (x.size() != s.cols()) throw ShapeMismatch("vector length does not match column count");
    std::vector<Vector> images;
    images.reserve(s.dim());
    for (const auto& b : s.basis()) images.push_back(b * x);
    return VectorSubspace::span(s.field(), s.rows(), images);
}

TransitivityResult is_totally_intransitive(const MatrixSpace& s) {
    require_square(s);
    TransitivityResult out;
    if (s.dim() < s.rows()) return out;  // dim V X <= dim V
    for_each_projective_point(s.field(), s.cols(), [&](const Vector& x) {
        if (!image_of_vector(s, x).is_full()) return true;
        out = {false, x};
        return false;
    });
    return out;
}

VectorSubspace invariant_closure(const MatrixSpace& s, const Vector& x) {
    require_square(s);
    const Vector start[] = {x};
    VectorSubspace current = VectorSubspace::span(s.field(), s.cols(), start);
    while (true) {
        std::vector<Vector> gens = current.basis_vectors();
        for (const auto& b : s.basis())
            for (std::size_t i = 0; i < current.dim(); ++i) gens.push_back(b * current.basis_vector(i));
        VectorSubspace next = VectorSubspace::span(s.field(), s.cols(), gens);
        if (next.dim() == current.dim()) return current;
        current = std::move(next);
    }
}

bool is_invariant(const MatrixSpace& s, const VectorSubspace& w) {
    for (const auto& b : s.basis())
        for (std::size_t i = 0; i < w.dim(); ++i)
            if (!w.contains(b * w.basis_vector(i))) return false;
    return true;
}

IrreducibilityResult is_irreducible(const MatrixSpace& s) {
    require_square(s);
    IrreducibilityResult out;
    for_each_projective_point(s.field(), s.cols(), [&](const Vector& x) {
        auto closure = invariant_closure(s, x);
        if (closure.is_full()) return true;
        out = {false, std::move(closure)};
        return false;
    });
    return out;
}

AffineTranslationResult affine_translation_is_trivial_spectrum(const MatrixSpace& s, std::uint64_t cap) {
    require_square(s);
    AffineTranslationResult out;
    const Matrix id = Matrix::identity(s.field(), s.rows());
    for (const Matrix& n : elements(s, cap)) {
        if (!is_invertible(id + n)) {
            out.all_invertible = false;
            out.singular_witness = n;
            break;
        }
    }
    out.trivial_spectrum = is_trivial_spectrum(s, cap).holds;
    out.implication_holds = !out.all_invertible || out.trivial_spectrum;
    return out;
}

SpectralReport spectral_report(const MatrixSpace& s, std::uint64_t cap) {
    return {is_trivial_spectrum(s, cap), is_nilpotent_space(s, cap), is_irreducible(s), is_totally_intransitive(s)};
}

} // namespace msw
