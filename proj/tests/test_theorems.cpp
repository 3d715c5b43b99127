#include "oracles.hpp"

#include "msw/constructions.hpp"
#include "msw/error.hpp"
#include "msw/linalg.hpp"
#include "msw/spectral.hpp"
#include "msw/theorems.hpp"

#include <doctest.h>

using namespace msw;

namespace {

json without_timing(const TheoremReport& r) {
    json j = report_json(r);
    j.erase("timing");
    return j;
}

/// Depth of the pipeline trace tree.
std::size_t depth(const json& node) {
    std::size_t d = 0;
    if (node.contains("children"))
        for (const auto& c : node["children"]) d = std::max(d, 1 + depth(c));
    return d;
}

void collect_branches(const json& node, std::map<std::string, int>& out) {
    if (node.contains("branch")) ++out[node["branch"].get<std::string>()];
    if (node.contains("children"))
        for (const auto& c : node["children"]) collect_branches(c, out);
}

} // namespace

TEST_CASE("dimension bound on the extremal spaces") {
    const Field f5(5);
    const auto ut4 = verify_gerstenhaber_bound(strict_upper_triangular_space(4, f5));
    CHECK(ut4.verdict == Verdict::verified);
    CHECK(ut4.trace["equality"] == true);
    CHECK(ut4.witnesses["P"] == json(Matrix::identity(f5, 4)));

    const Field f3(3);
    const auto alt2 = verify_gerstenhaber_bound(alternating_space(2, f3));
    CHECK(alt2.verdict == Verdict::verified);
    CHECK(alt2.applicability.at("irreducible"));
    CHECK(alt2.trace["congruence"]["outcome"] == "found");

    const auto alt3 = verify_gerstenhaber_bound(alternating_space(3, f3));
    CHECK(alt3.verdict == Verdict::not_applicable);
    const auto& w = alt3.witnesses["spectrum"];
    const Matrix element = Matrix::from_rows(f3, {{0, 1, 1}, {2, 0, 0}, {2, 0, 0}});
    CHECK(w["element"] == json(element));
    CHECK(w["eigenvalue"] == 1);

    // Ternary forms over finite fields are isotropic, so P Alt_3 never has trivial spectrum.
    Rng rng(3);
    for (int trial = 0; trial < 10; ++trial)
        CHECK(verify_gerstenhaber_bound(scaled_alternating_space(random_invertible(rng, f5, 3))).verdict ==
              Verdict::not_applicable);
}

TEST_CASE("pipeline on an irreducible extremal space") {
    const Field f(3);
    const auto r = run_generalized_pipeline(alternating_space(2, f));
    CHECK(r.verdict == Verdict::verified);
    CHECK(r.trace["branch"] == "semi_primitive");
    CHECK(r.trace["congruence"]["outcome"] == "found");
    CHECK(r.counters.at("equality_cases") == 1);
}

TEST_CASE("pipeline on strictly upper-triangular matrices") {
    const auto r = run_generalized_pipeline(strict_upper_triangular_space(3, Field(5)));
    CHECK(r.verdict == Verdict::verified);
    CHECK(r.trace["branch"] == "reducible");
    CHECK(depth(r.trace) == 2);
    for (const auto& c : r.trace["checks"]) CHECK(c["holds"] == true);
}

TEST_CASE("pipeline on random trivial-spectrum spaces") {
    Rng rng(8);
    std::map<std::string, int> branches;
    int runs = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const Field f(trial % 2 ? 5 : 3);
        const std::size_t n = 2 + rng.below(3);
        const MatrixSpace ambient = trial % 3 == 0 ? transform_similar(strict_upper_triangular_space(n, f), random_invertible(rng, f, n))
                                                   : scaled_alternating_space(random_invertible(rng, f, n));
        const auto v = random_subspace_of(rng, ambient, 1 + rng.below(std::min<std::size_t>(ambient.dim(), 3)));
        if (!is_trivial_spectrum(v).holds) continue;
        const auto r = run_generalized_pipeline(v);
        ++runs;
        CHECK(r.verdict == Verdict::verified);
        collect_branches(r.trace, branches);
        if (r.verdict == Verdict::violated) MESSAGE(report_json(r).dump());
    }
    CHECK(runs > 100);
    CHECK(branches["reducible"] > 0);
    CHECK(branches["semi_primitive"] > 0);
}

TEST_CASE("pipeline on every small trivial-spectrum space of Mat_3(GF(2))") {
    // The compression branch needs an irreducible space whose dual fails condition (iii);
    // these are rare among random samples but present in the exhaustive list.
    const Field f(2);
    std::map<std::string, int> branches;
    std::uint64_t runs = 0, failures = 0;
    for (std::size_t dim : {1u, 2u, 3u}) {
        ScanOptions opts;
        opts.on_hit = [&](std::uint64_t, const MatrixSpace& v) {
            const auto r = run_generalized_pipeline(v);
            ++runs;
            if (r.verdict != Verdict::verified) ++failures;
            collect_branches(r.trace, branches);
        };
        exhaustive_scan(3, f, dim, ScanPredicate::trivial_spectrum, opts);
    }
    CHECK(runs > 1000);
    CHECK(failures == 0);
    CHECK(branches["compression"] > 0);
    CHECK(branches["semi_primitive"] > 0);
    CHECK(branches["reducible"] > 0);
}

TEST_CASE("pipeline refuses spaces with nonzero eigenvalues") {
    const auto r = run_generalized_pipeline(MatrixSpace::full(Field(3), 2, 2));
    CHECK(r.verdict == Verdict::not_applicable);
    CHECK(r.witnesses.contains("spectrum"));
}

TEST_CASE("shear evidence on split extremal data") {
    // strict lower-triangular-with-B-block space: all B-block units, D(V) trivial spectrum
    const Field f(3);
    const auto lower = strict_upper_triangular_space(3, f).transpose();
    const auto e = shear_contradiction(lower, 1);
    CHECK(e["contains_all_lower_left_units"] == true);
    CHECK(e["d_space_trivial_spectrum"] == true);
    CHECK(e["all_c_blocks_zero"] == true);
    CHECK(e["tail_invariant"] == true);

    const auto full = shear_contradiction(MatrixSpace::full(f, 3, 3), 1);
    REQUIRE(full.contains("shear"));
    CHECK(full["shear"]["rc_fixes_x"] == true);
    CHECK(full["shear"]["rc_in_d_space"] == true);
}

TEST_CASE("Atkinson bound on semi-primitive spaces") {
    const Field f3(3);
    const auto w3 = verify_atkinson_on_instance(wedge_space(3, f3));
    CHECK(w3.verdict == Verdict::verified);
    CHECK(w3.parameters["r"] == 2);
    CHECK(w3.trace["n_equals_r_plus_1"] == true);
    CHECK(w3.trace["equivalence_to_wedge"]["verdict"] == "equivalent");

    const auto m12 = verify_atkinson_on_instance(MatrixSpace::full(f3, 1, 2));
    CHECK(m12.verdict == Verdict::verified);
    CHECK(m12.trace["single_row_case"]["is_full_Mat_1_2"] == true);

    const Field f2(2);
    Rng rng(1);
    const auto t = transformed_wedge_space(3, f2, random_alt_basis(rng, f2, 3), random_invertible(rng, f2, 3));
    const auto r = verify_atkinson_on_instance(t);
    CHECK(!r.applicability.at("field_exceeds_rank"));
    CHECK(r.trace["bound_holds"] == true);

    CHECK_THROWS_AS(verify_atkinson_on_instance(strict_upper_triangular_space(3, f3)), PreconditionViolated);
}

TEST_CASE("exhaustive scans") {
    const Field f2(2);
    const auto r = exhaustive_scan(2, f2, 2, ScanPredicate::trivial_spectrum);
    CHECK(r.counters.at("spaces_scanned") == 35);
    CHECK(r.counters.at("hits") == 0);
    CHECK(r.verdict == Verdict::verified);

    std::vector<MatrixSpace> hits;
    ScanOptions opts;
    opts.on_hit = [&](std::uint64_t, const MatrixSpace& s) { hits.push_back(s); };
    const auto nil = exhaustive_scan(3, f2, 3, ScanPredicate::nilpotent, opts);
    CHECK(nil.counters.at("hits") == 21);
    CHECK(nil.counters.at("equality_hits_unrecognized") == 0);
    CHECK(std::find(hits.begin(), hits.end(), strict_upper_triangular_space(3, f2)) != hits.end());
    for (const auto& h : hits) CHECK(oracle::brute_trivial_spectrum(h));

    ScanOptions small;
    small.ceiling = 10;
    CHECK_THROWS_AS(exhaustive_scan(3, f2, 2, ScanPredicate::nilpotent, small), ScanTooLarge);
}

TEST_CASE("scan totals do not depend on the partition") {
    const Field f3(3);
    const auto whole = exhaustive_scan(2, f3, 1, ScanPredicate::trivial_spectrum);
    std::uint64_t scanned = 0, hits = 0;
    for (std::uint64_t a = 0; a < 40; a += 7) {
        ScanOptions o;
        o.begin = a;
        o.end = a + 7;
        const auto part = exhaustive_scan(2, f3, 1, ScanPredicate::trivial_spectrum, o);
        scanned += part.counters.at("spaces_scanned");
        hits += part.counters.at("hits");
    }
    CHECK(scanned == whole.counters.at("spaces_scanned"));
    CHECK(scanned == oracle::gaussian_binomial(4, 1, 3));
    CHECK(hits == whole.counters.at("hits"));
    // lines of nonzero trivial-spectrum matrices of Mat_2(GF(3)): nilpotent (8 lines) and
    // those with irreducible characteristic polynomial x^2 + b x + c
    std::uint64_t expected = 0;
    for (const auto& v : oracle::all_vectors(f3, 4)) {
        const Matrix m(f3, 2, 2, v);
        if (!m.is_zero() && !oracle::has_nonzero_eigenvalue(m)) ++expected;
    }
    CHECK(hits == expected / 2);
}

TEST_CASE("random probes") {
    const Field f(3);
    const auto r = random_probe("all", 5, 1000, 3, f);
    CHECK(r.verdict == Verdict::verified);
    CHECK(r.counters.at("violations") == 0);
    CHECK(without_timing(random_probe("implications", 9, 50, 3, f)) == without_timing(random_probe("implications", 9, 50, 3, f)));
    CHECK_THROWS_AS(random_probe("nonsense", 1, 1, 3, f), PreconditionViolated);
}

TEST_CASE("a corrupted predicate is caught with a reproducible witness") {
    const Field f(3);
    ProbeHooks hooks;
    hooks.trivial_spectrum = [](const MatrixSpace& s) { return s.dim() == 0; };
    const auto r = random_probe("implications", 1, 200, 3, f, hooks);
    REQUIRE(r.verdict == Verdict::violated);
    const auto& w = r.witnesses["first_violation"];
    CHECK(w["suite"] == "implications");
    CHECK(w["detail"]["trivial_spectrum"] == false);
    CHECK((w["detail"]["nilpotent"] == true || w["detail"]["affine_all_invertible"] == true));
    CHECK(w["trial_seed"] == trial_seed(1, w["trial"].get<std::uint64_t>()));
}

TEST_CASE("reports isolate timing") {
    const auto r = verify_gerstenhaber_bound(strict_upper_triangular_space(3, Field(3)));
    const json j = report_json(r);
    CHECK(j["schema"] == kReportSchema);
    CHECK(j.contains("timing"));
    CHECK(j["timing"].contains("elapsed_seconds"));
    CHECK(!j["trace"].contains("elapsed_seconds"));
}
