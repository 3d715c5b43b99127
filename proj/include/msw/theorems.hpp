#pragma once

#include "msw/matrix_space.hpp"
#include "msw/report.hpp"

#include <functional>
#include <limits>
#include <map>
#include <string>

namespace msw {

enum class Verdict { verified, violated, inconclusive, not_applicable };
const char* to_string(Verdict v) noexcept;

/// Evidence produced by a verifier. A `violated` verdict always carries a
/// witness that can be re-checked on its own.
struct TheoremReport {
    std::string statement;
    std::uint32_t p = 0;
    json parameters = json::object();
    std::map<std::string, bool> applicability;
    Verdict verdict = Verdict::verified;
    json witnesses = json::object();
    json trace = json::object();
    std::map<std::string, std::uint64_t> counters;
    double elapsed_seconds = 0.0;
};

/// Report document; `timing` is the only non-deterministic member.
json report_json(const TheoremReport& r);

inline constexpr std::uint64_t kDefaultEquivalenceBudget = 28224;
inline constexpr std::uint64_t kDefaultScanCeiling = 10'000'000;

constexpr std::size_t choose2(std::size_t n) noexcept { return n * (n - 1) / 2; }

/// Dimension bound for trivial-spectrum (and nilpotent) spaces, plus the
/// equality-case recognition that applies to the instance.
TheoremReport verify_gerstenhaber_bound(const MatrixSpace& v, std::uint64_t cap = kDefaultEnumerationCap);

/// Replays the duality proof of the dimension bound on one trivial-spectrum
/// space: reducible spaces split along an invariant subspace and recurse;
/// irreducible ones go through the dual space, either to the semi-primitive
/// bound or to the minimal compression and the kernel of the first rows.
/// Every inequality of the chain is checked numerically at every node.
TheoremReport run_generalized_pipeline(const MatrixSpace& v, std::uint64_t cap = kDefaultEnumerationCap);

/// Evidence for the extremal contradiction on a space already split so that
/// its first d row functionals are the compression subspace.
json shear_contradiction(const MatrixSpace& v_split, std::size_t d, std::uint64_t cap = kDefaultEnumerationCap);

/// Upper bound m <= r(r+1)/2 for a semi-primitive space and the equality shape.
/// Throws PreconditionViolated unless the space is semi-primitive.
TheoremReport verify_atkinson_on_instance(const MatrixSpace& s, std::uint64_t budget = kDefaultEquivalenceBudget,
                                          std::uint64_t cap = kDefaultEnumerationCap);

enum class ScanPredicate { trivial_spectrum, nilpotent };
const char* to_string(ScanPredicate p) noexcept;

struct ScanOptions {
    std::uint64_t begin = 0;
    std::uint64_t end = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t ceiling = kDefaultScanCeiling;
    std::uint64_t cap = kDefaultEnumerationCap;
    /// Called for each hit with its Grassmannian index.
    std::function<void(std::uint64_t, const MatrixSpace&)> on_hit;
};

/// Visits every dim-dimensional subspace of Mat_n(GF(p)) in the index range and
/// counts those satisfying the predicate. Throws ScanTooLarge past the ceiling.
TheoremReport exhaustive_scan(std::size_t n, Field field, std::size_t dim, ScanPredicate predicate,
                              const ScanOptions& options = {});

/// Overrides used by the harness self-test.
struct ProbeHooks {
    std::function<bool(const MatrixSpace&)> trivial_spectrum;
};

/// Probe suites: "implications", "equivalence-invariance", "similarity-invariance",
/// "dual-invariants", "all". Each trial draws from its own seed, derived from
/// (seed, trial), which the report quotes for reproduction.
TheoremReport random_probe(const std::string& spec, std::uint64_t seed, std::uint64_t trials, std::size_t n, Field field,
                           const ProbeHooks& hooks = {}, std::uint64_t cap = kDefaultEnumerationCap);

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept;

} // namespace msw
