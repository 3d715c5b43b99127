#pragma once

#include "msw/matrix_space.hpp"

#include <optional>

namespace msw {

struct SpectrumWitness {
    Matrix element;
    Scalar eigenvalue;
};

struct TrivialSpectrumResult {
    bool holds = true;
    std::optional<SpectrumWitness> witness;  ///< first element (index order) with a nonzero eigenvalue
};

struct NilpotencyResult {
    bool holds = true;
    std::optional<Matrix> witness;
};

struct TransitivityResult {
    bool totally_intransitive = true;
    std::optional<Vector> witness;  ///< X with V X = GF(p)^n
};

struct IrreducibilityResult {
    bool irreducible = true;
    std::optional<VectorSubspace> witness;  ///< proper nonzero invariant subspace
};

struct AffineTranslationResult {
    bool all_invertible = true;            ///< every I + N is invertible
    std::optional<Matrix> singular_witness;
    bool trivial_spectrum = true;
    bool implication_holds = true;         ///< all_invertible => trivial_spectrum
};

struct SpectralReport {
    TrivialSpectrumResult trivial_spectrum;
    NilpotencyResult nilpotent;
    IrreducibilityResult irreducible;
    TransitivityResult transitivity;
};

TrivialSpectrumResult is_trivial_spectrum(const MatrixSpace& s, std::uint64_t cap = kDefaultEnumerationCap);
NilpotencyResult is_nilpotent_space(const MatrixSpace& s, std::uint64_t cap = kDefaultEnumerationCap);

/// V X = span{B X : B in basis}
VectorSubspace image_of_vector(const MatrixSpace& s, const Vector& x);

TransitivityResult is_totally_intransitive(const MatrixSpace& s);

/// Smallest subspace containing x and stable under every element of s.
VectorSubspace invariant_closure(const MatrixSpace& s, const Vector& x);
bool is_invariant(const MatrixSpace& s, const VectorSubspace& w);

/// Closure of every projective point; irreducible iff each closure is everything.
IrreducibilityResult is_irreducible(const MatrixSpace& s);

AffineTranslationResult affine_translation_is_trivial_spectrum(const MatrixSpace& s,
                                                               std::uint64_t cap = kDefaultEnumerationCap);

SpectralReport spectral_report(const MatrixSpace& s, std::uint64_t cap = kDefaultEnumerationCap);

} // namespace msw
