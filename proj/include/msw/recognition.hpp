#pragma once

#include "msw/matrix_space.hpp"

#include <optional>
#include <string>

namespace msw {

enum class Outcome { found, none, inconclusive };

struct CongruenceResult {
    Outcome outcome = Outcome::none;
    std::optional<Matrix> p;              ///< P with P Alt_n = V
    std::size_t solution_dim = 0;         ///< dim of {S : S V ⊆ Alt_n}
    std::uint64_t candidates_examined = 0;
    bool exhaustive = false;
};

inline constexpr std::uint64_t kCongruenceExhaustiveLimit = std::uint64_t{1} << 16;
inline constexpr std::uint64_t kCongruenceRandomSamples = 4096;

/// Decides V = P Alt_n. Solves the linear system "S B is alternating for each
/// basis element B" for S, then looks for an invertible solution: the whole
/// solution space when it has at most 2^16 elements, otherwise a seeded random
/// sample (whose failure is reported as inconclusive).
CongruenceResult solve_alternating_congruence(const MatrixSpace& v, std::uint64_t seed = 0);

struct Triangularization {
    std::vector<VectorSubspace> flag;  ///< complete flag span(v_1) ⊂ ... ⊂ K^n
    Matrix p;                          ///< columns v_1..v_n; P^-1 V P is strictly upper triangular
    bool full = false;                 ///< P^-1 V P is the whole strictly upper-triangular space
};

/// Builds K_0 = 0, K_{j+1} = {x : B x in K_j for all B}; refines the chain to a
/// complete flag by adding each new canonical basis vector of K_{j+1} not yet
/// spanned. Returns nullopt if the chain stalls short of K^n.
std::optional<Triangularization> strict_triangularization(const MatrixSpace& v);

struct EquivalenceVerdict {
    enum class Kind { equivalent, distinct, inconclusive };
    Kind kind = Kind::inconclusive;
    std::optional<Matrix> p;  ///< S1 = P S2 Q
    std::optional<Matrix> q;
    std::string reason;
    std::uint64_t pairs_examined = 0;
    bool exhaustive = false;
};

const char* to_string(EquivalenceVerdict::Kind k) noexcept;
const char* to_string(Outcome o) noexcept;

/// |GL_n(GF(p))|, saturating.
std::uint64_t general_linear_order(std::size_t n, std::uint64_t p);

/// Compares invariants (dim, upper rank, rank profile) and then searches for
/// (P, Q) with S1 = P S2 Q. For each Q the admissible P form a linear space,
/// which is scanned for an invertible member. Q runs over all of GL_n when
/// that fits in the budget (so an empty search proves `distinct`), otherwise
/// over seeded random draws (so an empty search is `inconclusive`).
EquivalenceVerdict equivalence_probe(const MatrixSpace& s1, const MatrixSpace& s2, std::uint64_t budget,
                                     std::uint64_t seed = 0, std::uint64_t cap = kDefaultEnumerationCap);

} // namespace msw
