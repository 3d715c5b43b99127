#include "msw/theorems.hpp"

#include "msw/constructions.hpp"
#include "msw/duality.hpp"
#include "msw/error.hpp"
#include "msw/grassmannian.hpp"
#include "msw/linalg.hpp"
#include "msw/primitivity.hpp"
#include "msw/recognition.hpp"
#include "msw/spectral.hpp"

#include <chrono>

namespace msw {

const char* to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::violated: return "violated";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::not_applicable: return "not_applicable";
    }
    return "?";
}

const char* to_string(ScanPredicate p) noexcept {
    return p == ScanPredicate::trivial_spectrum ? "trivial-spectrum" : "nilpotent";
}

json report_json(const TheoremReport& r) {
    return json{{"schema", kReportSchema},
                {"statement", r.statement},
                {"p", r.p},
                {"parameters", r.parameters},
                {"applicability", r.applicability},
                {"verdict", to_string(r.verdict)},
                {"witnesses", r.witnesses},
                {"trace", r.trace},
                {"counters", r.counters},
                {"timing", {{"elapsed_seconds", r.elapsed_seconds}}}};
}

namespace {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void downgrade(Verdict& current, Verdict to) {
    auto rank = [](Verdict v) {
        switch (v) {
        case Verdict::violated: return 3;
        case Verdict::inconclusive: return 2;
        case Verdict::not_applicable: return 1;
        case Verdict::verified: return 0;
        }
        return 0;
    };
    if (rank(to) > rank(current)) current = to;
}

// ---------------------------------------------------------------------------
// Duality pipeline

struct PipelineContext {
    std::uint64_t cap = 0;
    std::uint32_t p = 0;
    bool ok = true;
    json failure;
    std::map<std::string, std::uint64_t> counters;
    std::map<std::string, bool> applicability;

    void flag(const std::string& name, bool holds) {
        auto [it, inserted] = applicability.emplace(name, holds);
        if (!inserted) it->second = it->second && holds;
    }
};

json pipeline_node(const MatrixSpace& v, PipelineContext& ctx, std::size_t depth) {
    const std::size_t n = v.rows(), m = v.dim();
    json node{{"n", n}, {"m", m}, {"bound", choose2(n)}, {"depth", depth}, {"checks", json::array()}};
    ++ctx.counters["nodes"];
    auto check = [&](const char* name, bool holds, json values = json::object()) {
        node["checks"].push_back({{"name", name}, {"holds", holds}, {"values", values}});
        ++ctx.counters["checks"];
        if (!holds && ctx.ok) {
            ctx.ok = false;
            ctx.failure = {{"check", name}, {"values", values}, {"space", v}, {"depth", depth}};
        }
        return holds;
    };
    // Steps whose proof needs a field-size hypothesis are only observed outside it.
    auto check_under = [&](bool hypothesis, const char* name, bool holds, json values = json::object()) {
        if (hypothesis) return check(name, holds, std::move(values));
        node["observations"].push_back({{"name", name}, {"holds", holds}, {"values", values}});
        ++ctx.counters["observations_outside_hypotheses"];
        if (!holds) ++ctx.counters["observations_failed_outside_hypotheses"];
        return holds;
    };

    if (!check("trivial_spectrum", is_trivial_spectrum(v, ctx.cap).holds)) return node;
    if (m == 0) {
        node["branch"] = "zero";
        check("bound", true, {{"m", 0}, {"bound", choose2(n)}});
        return node;
    }
    if (n == 1) {
        node["branch"] = "base";
        check("bound", m == 0, {{"m", m}, {"bound", 0}});
        return node;
    }

    const auto irr = is_irreducible(v);
    if (!irr.irreducible) {
        node["branch"] = "reducible";
        ++ctx.counters["reducible_splits"];
        const auto& w = *irr.witness;
        const std::size_t k = w.dim();
        const auto split = split_along_invariant(v, w);
        node["invariant_subspace"] = w;
        node["split"] = k;
        check("lower_left_block_zero", block_space(split.conjugated, k, Block::B).dim() == 0);
        json children = json::array();
        children.push_back(pipeline_node(split.a_space, ctx, depth + 1));
        children.push_back(pipeline_node(split.b_space, ctx, depth + 1));
        const std::size_t da = split.a_space.dim(), db = split.b_space.dim();
        check("dimension_split", m <= da + db + k * (n - k),
              {{"m", m}, {"dim_A", da}, {"dim_B", db}, {"off_diagonal", k * (n - k)}});
        check("binomial_identity", choose2(k) + choose2(n - k) + k * (n - k) == choose2(n), {{"k", k}, {"n", n}});
        check("bound", m <= choose2(n), {{"m", m}, {"bound", choose2(n)}});
        node["children"] = std::move(children);
        return node;
    }

    node["branch"] = "irreducible";
    const auto dual = dual_space(v);
    const auto ci = condition_i(dual.space);
    const auto cii = condition_ii(dual.space);
    const std::size_t urk = upper_rank(dual.space, ctx.cap).rank;
    node["dual_upper_rank"] = urk;
    check("dual_condition_i", ci.holds);
    check("dual_condition_ii", cii.holds);
    check("dual_upper_rank_below_n", urk < n, {{"upper_rank", urk}, {"n", n}});
    if (!ci.holds || !cii.holds) return node;

    if (condition_iii(dual.space, ctx.cap).holds) {
        node["branch"] = "semi_primitive";
        ++ctx.counters["semi_primitive_duals"];
        const bool atkinson = ctx.p > urk;
        ctx.flag("atkinson_field_exceeds_rank", atkinson);
        check_under(atkinson, "atkinson_bound", 2 * m <= urk * (urk + 1), {{"m", m}, {"r", urk}});
        check("bound", m <= choose2(n), {{"m", m}, {"bound", choose2(n)}});
        if (m == choose2(n)) {
            ++ctx.counters["equality_cases"];
            check_under(atkinson, "equality_shape", n == urk + 1, {{"n", n}, {"r", urk}});
            check_under(atkinson, "dual_rank_profile_matches_wedge",
                        rank_profile(dual.space, ctx.cap) == rank_profile(wedge_space(n, v.field()), ctx.cap));
            const auto cong = solve_alternating_congruence(v);
            node["congruence"] = report_json(cong);
            check_under(atkinson && ctx.p >= 3, "recovered_scaled_alternating", cong.outcome == Outcome::found);
        }
        return node;
    }

    node["branch"] = "compression";
    ++ctx.counters["compressions"];
    const auto cr = minimal_degenerate_compression(dual.space, ctx.cap);
    if (!check("compression_exists", cr.has_value())) return node;
    const std::size_t d = cr->d, c = cr->c;
    node["d"] = d;
    node["c"] = c;
    node["column_subspace"] = cr->column_subspace;
    const auto core = classify(cr->core, ctx.cap);
    check("core_semi_primitive", core.is_semi_primitive());
    const bool atkinson = ctx.p > core.upper_rank;
    ctx.flag("atkinson_field_exceeds_core_rank", atkinson);
    check_under(atkinson, "core_bound", c <= choose2(d), {{"c", c}, {"d", d}});

    const auto split = move_row_functionals_first(v, cr->column_subspace);
    const auto kernel_space = kernel_of_first_rows(split.conjugated, d);
    const std::size_t dim_w = kernel_space.dim();
    node["kernel_dim"] = dim_w;
    check("kernel_codimension", m == c + dim_w, {{"m", m}, {"c", c}, {"dim_W", dim_w}});
    const auto d_of_kernel = block_space(kernel_space, d, Block::D);
    json children = json::array();
    children.push_back(pipeline_node(d_of_kernel, ctx, depth + 1));
    check("kernel_dim_split", dim_w <= (n - d) * d + d_of_kernel.dim(),
          {{"dim_W", dim_w}, {"dim_D_W", d_of_kernel.dim()}, {"block_B", (n - d) * d}});
    check("kernel_dim_bound", dim_w <= (n - d) * d + choose2(n - d), {{"dim_W", dim_w}, {"bound", (n - d) * d + choose2(n - d)}});
    check("chain_identity", choose2(d) + (n - d) * d + choose2(n - d) == choose2(n), {{"d", d}, {"n", n}});
    check("bound", m <= choose2(n), {{"m", m}, {"bound", choose2(n)}});
    if (m == choose2(n)) {
        ++ctx.counters["equality_cases"];
        node["extremal"] = shear_contradiction(split.conjugated, d, ctx.cap);
        // An irreducible extremal space never reaches this branch.
        check_under(atkinson, "extremal_compression_unreachable", false, node["extremal"]);
    }
    node["children"] = std::move(children);
    return node;
}

} // namespace

json shear_contradiction(const MatrixSpace& v, std::size_t d, std::uint64_t cap) {
    const Field& f = v.field();
    const std::size_t n = v.rows();
    const auto d_space = block_space(v, d, Block::D);
    const auto kernel_space = kernel_of_first_rows(v, d);
    json out;
    out["d_of_kernel_equals_d_of_space"] = block_space(kernel_space, d, Block::D) == d_space;
    bool all_lower_left = true;
    for (std::size_t i = d; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) all_lower_left = all_lower_left && v.contains(Matrix::unit(f, n, n, i, j));
    out["contains_all_lower_left_units"] = all_lower_left;
    out["d_space_trivial_spectrum"] = is_trivial_spectrum(d_space, cap).holds;
    for (const auto& n0 : v.basis()) {
        const auto sw = build_shear_witness(v, d, n0);
        if (!sw) continue;
        const Matrix rc = sw->transform.r() * split_blocks(n0, d).c;
        out["shear"] = {{"N0", n0},
                        {"R", sw->transform.r()},
                        {"x", sw->x},
                        {"rc_fixes_x", rc * sw->x == sw->x},
                        {"rc_in_d_space", d_space.contains(rc)}};
        return out;
    }
    std::vector<Vector> tail;
    for (std::size_t k = d; k < n; ++k) {
        Vector e(n, 0);
        e[k] = 1;
        tail.push_back(std::move(e));
    }
    const auto w = VectorSubspace::span(f, n, tail);
    out["all_c_blocks_zero"] = true;
    out["invariant_subspace"] = w;
    out["tail_invariant"] = is_invariant(v, w);
    return out;
}

TheoremReport run_generalized_pipeline(const MatrixSpace& v, std::uint64_t cap) {
    Stopwatch clock;
    if (!v.is_square()) throw NotSquare("pipeline needs square matrices");
    TheoremReport r;
    r.statement = "generalized-gerstenhaber-pipeline";
    r.p = v.field().p();
    r.parameters = {{"n", v.rows()}, {"dim", v.dim()}};
    r.applicability["field_at_least_n"] = v.field().p() >= v.rows();
    const auto ts = is_trivial_spectrum(v, cap);
    r.applicability["trivial_spectrum"] = ts.holds;
    if (!ts.holds) {
        r.verdict = Verdict::not_applicable;
        r.witnesses["spectrum"] = {{"element", ts.witness->element}, {"eigenvalue", ts.witness->eigenvalue}};
        r.elapsed_seconds = clock.seconds();
        return r;
    }
    PipelineContext ctx;
    ctx.cap = cap;
    ctx.p = v.field().p();
    r.trace = pipeline_node(v, ctx, 0);
    r.counters = ctx.counters;
    for (auto& [k, b] : ctx.applicability) r.applicability[k] = b;
    if (!ctx.ok) {
        r.verdict = Verdict::violated;
        r.witnesses["failed_check"] = ctx.failure;
    }
    r.elapsed_seconds = clock.seconds();
    return r;
}

TheoremReport verify_gerstenhaber_bound(const MatrixSpace& v, std::uint64_t cap) {
    Stopwatch clock;
    if (!v.is_square()) throw NotSquare("dimension bound needs square matrices");
    const std::size_t n = v.rows(), m = v.dim();
    TheoremReport r;
    r.statement = "gerstenhaber";
    r.p = v.field().p();
    r.parameters = {{"n", n}, {"dim", m}, {"bound", choose2(n)}};
    const auto ts = is_trivial_spectrum(v, cap);
    const auto nil = is_nilpotent_space(v, cap);
    r.applicability["trivial_spectrum"] = ts.holds;
    r.applicability["nilpotent"] = nil.holds;
    if (!ts.holds) {
        r.verdict = Verdict::not_applicable;
        r.witnesses["spectrum"] = {{"element", ts.witness->element}, {"eigenvalue", ts.witness->eigenvalue}};
        r.elapsed_seconds = clock.seconds();
        return r;
    }
    r.trace["bound_holds"] = m <= choose2(n);
    if (m > choose2(n)) {
        r.verdict = Verdict::violated;
        r.witnesses["space"] = v;
        r.elapsed_seconds = clock.seconds();
        return r;
    }
    const bool equality = m == choose2(n);
    r.trace["equality"] = equality;
    if (equality) {
        const auto irr = is_irreducible(v);
        r.applicability["irreducible"] = irr.irreducible;
        r.applicability["field_at_least_3"] = v.field().p() >= 3;
        if (nil.holds) {
            const auto tri = strict_triangularization(v);
            r.trace["triangularization"] = report_json(tri);
            if (!tri || !tri->full) {
                r.verdict = Verdict::violated;
                r.witnesses["space"] = v;
                r.witnesses["reason"] = "maximal nilpotent space is not similar to the strictly upper-triangular space";
            } else {
                r.witnesses["P"] = tri->p;
            }
        }
        if (irr.irreducible) {
            const auto cong = solve_alternating_congruence(v);
            r.trace["congruence"] = report_json(cong);
            if (cong.outcome == Outcome::found) {
                r.witnesses["P"] = *cong.p;
            } else if (v.field().p() >= 3) {
                if (cong.outcome == Outcome::none) {
                    r.verdict = Verdict::violated;
                    r.witnesses["space"] = v;
                    r.witnesses["reason"] = "irreducible maximal trivial-spectrum space is not P Alt_n";
                } else {
                    downgrade(r.verdict, Verdict::inconclusive);
                }
            }
        }
    }
    r.elapsed_seconds = clock.seconds();
    return r;
}

TheoremReport verify_atkinson_on_instance(const MatrixSpace& s, std::uint64_t budget, std::uint64_t cap) {
    Stopwatch clock;
    const auto cls = classify(s, cap);
    if (!cls.is_semi_primitive()) throw PreconditionViolated("Atkinson bound needs a semi-primitive space");
    const std::size_t m = s.rows(), n = s.cols(), r = cls.upper_rank;
    TheoremReport rep;
    rep.statement = "atkinson";
    rep.p = s.field().p();
    rep.parameters = {{"m", m}, {"n", n}, {"r", r}, {"bound", r * (r + 1) / 2}, {"budget", budget}};
    const bool applicable = s.field().p() > r;
    rep.applicability["field_exceeds_rank"] = applicable;
    const bool bound = 2 * m <= r * (r + 1);
    rep.trace["bound_holds"] = bound;
    if (!bound) {
        rep.verdict = applicable ? Verdict::violated : Verdict::not_applicable;
        rep.witnesses["space"] = s;
    }
    if (bound && 2 * m == r * (r + 1)) {
        rep.trace["equality"] = true;
        if (r > 1) {
            rep.trace["n_equals_r_plus_1"] = n == r + 1;
            if (n != r + 1) {
                rep.verdict = applicable ? Verdict::violated : Verdict::not_applicable;
                rep.witnesses["space"] = s;
            } else {
                const auto probe = equivalence_probe(s, wedge_space(n, s.field()), budget, 0, cap);
                rep.trace["equivalence_to_wedge"] = report_json(probe);
                rep.counters["pairs_examined"] = probe.pairs_examined;
                if (probe.kind == EquivalenceVerdict::Kind::equivalent) {
                    rep.witnesses["P"] = *probe.p;
                    rep.witnesses["Q"] = *probe.q;
                } else if (probe.kind == EquivalenceVerdict::Kind::distinct) {
                    downgrade(rep.verdict, applicable ? Verdict::violated : Verdict::not_applicable);
                    rep.witnesses["space"] = s;
                } else {
                    downgrade(rep.verdict, Verdict::inconclusive);
                }
            }
        } else {
            // r = 1, m = 1: the single-row case, where S = Mat_{1,2} = S(phi_2) when n = 2.
            rep.trace["single_row_case"] = {{"n_equals_2", n == 2},
                                            {"is_full_Mat_1_2", n == 2 && s == MatrixSpace::full(s.field(), 1, 2)}};
        }
    }
    rep.elapsed_seconds = clock.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// Exhaustive scan

TheoremReport exhaustive_scan(std::size_t n, Field field, std::size_t dim, ScanPredicate predicate,
                              const ScanOptions& options) {
    Stopwatch clock;
    const std::size_t ambient = n * n;
    const Grassmannian g(field, ambient, dim);
    const std::uint64_t total = g.size();
    const std::uint64_t begin = std::min(options.begin, total);
    const std::uint64_t end = std::min(options.end, total);
    if (end - begin > options.ceiling)
        throw ScanTooLarge("scan of " + std::to_string(end - begin) + " spaces exceeds ceiling " +
                           std::to_string(options.ceiling));

    TheoremReport r;
    r.statement = "exhaustive-scan";
    r.p = field.p();
    r.parameters = {{"n", n},
                    {"dim", dim},
                    {"predicate", to_string(predicate)},
                    {"partition", {begin, end}},
                    {"grassmannian_size", total},
                    {"bound", choose2(n)}};

    // bad[index] marks ambient matrices that refute the predicate.
    auto refutes = [&](const Matrix& m) {
        return predicate == ScanPredicate::nilpotent ? !is_nilpotent(m) : first_nonzero_eigenvalue(m) != 0;
    };
    const std::uint64_t table_size = saturating_pow(field.p(), ambient);
    std::vector<bool> bad;
    const bool tabulated = table_size <= options.cap;
    if (tabulated) {
        bad.resize(table_size);
        const auto everything = MatrixSpace::full(field, n, n);
        // Full space basis is the unit matrices in row-major order, so element index = ambient index.
        for (auto it = ElementIterator(everything, 0); it != std::default_sentinel; ++it) bad[it.index()] = refutes(*it);
    }
    std::vector<std::uint64_t> weight(ambient, 1);
    for (std::size_t k = 1; k < ambient; ++k) weight[k] = weight[k - 1] * field.p();

    const std::uint64_t elements_per_space = saturating_pow(field.p(), dim);
    if (!tabulated && elements_per_space > options.cap) throw EnumerationTooLarge(elements_per_space, options.cap);

    std::uint64_t scanned = 0, hits = 0, elements_checked = 0, equality_recognized = 0, equality_unrecognized = 0;
    std::optional<std::uint64_t> first_hit;
    json unrecognized;
    std::vector<Scalar> coords(ambient), digits(dim);
    const Scalar p = field.p();
    for (auto cur = g.cursor(begin); !cur.done() && cur.index() < end; cur.advance()) {
        ++scanned;
        const Matrix& basis = cur.basis();
        bool hit = true;
        if (tabulated) {
            std::fill(coords.begin(), coords.end(), 0);
            std::fill(digits.begin(), digits.end(), 0);
            for (std::uint64_t e = 1; e < elements_per_space; ++e) {
                for (std::size_t k = 0; k < dim; ++k) {
                    for (std::size_t j = 0; j < ambient; ++j) coords[j] = field.add(coords[j], basis(k, j));
                    if (++digits[k] < p) break;
                    digits[k] = 0;
                }
                std::uint64_t idx = 0;
                for (std::size_t j = 0; j < ambient; ++j) idx += coords[j] * weight[j];
                ++elements_checked;
                if (bad[idx]) {
                    hit = false;
                    break;
                }
            }
        } else {
            const auto space = MatrixSpace::from_coordinates(n, n, cur.subspace());
            hit = predicate == ScanPredicate::nilpotent ? is_nilpotent_space(space, options.cap).holds
                                                        : is_trivial_spectrum(space, options.cap).holds;
        }
        if (!hit) continue;
        ++hits;
        if (!first_hit) first_hit = cur.index();
        const auto space = MatrixSpace::from_coordinates(n, n, cur.subspace());
        if (options.on_hit) options.on_hit(cur.index(), space);
        if (dim == choose2(n)) {
            bool recognized = true;
            if (predicate == ScanPredicate::nilpotent) {
                const auto tri = strict_triangularization(space);
                recognized = tri && tri->full;
            } else if (field.p() >= 3 && is_irreducible(space).irreducible) {
                recognized = solve_alternating_congruence(space).outcome == Outcome::found;
            }
            if (recognized) {
                ++equality_recognized;
            } else {
                if (equality_unrecognized == 0) unrecognized = {{"index", cur.index()}, {"space", space}};
                ++equality_unrecognized;
            }
        }
    }
    r.counters = {{"spaces_scanned", scanned},
                  {"hits", hits},
                  {"elements_checked", elements_checked},
                  {"early_exits", scanned - hits}};
    if (dim == choose2(n)) {
        r.counters["equality_hits_recognized"] = equality_recognized;
        r.counters["equality_hits_unrecognized"] = equality_unrecognized;
    }
    r.trace["complete_partition"] = scanned == end - begin;
    if (begin == 0 && end == total) r.trace["matches_gaussian_binomial"] = scanned == gaussian_binomial(ambient, dim, p);
    if (first_hit)
        r.witnesses["first_hit"] = {{"index", *first_hit}, {"space", MatrixSpace::from_coordinates(n, n, g.at(*first_hit))}};
    if (dim > choose2(n) && hits > 0) {
        r.verdict = Verdict::violated;
        r.witnesses["bound_violation"] = {{"index", *first_hit},
                                          {"space", MatrixSpace::from_coordinates(n, n, g.at(*first_hit))}};
    }
    if (equality_unrecognized > 0) {
        r.verdict = Verdict::violated;
        r.witnesses["unrecognized_equality_hit"] = unrecognized;
    }
    r.elapsed_seconds = clock.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// Random probes

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
    // splitmix64 finalizer over the pair
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (trial + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {

constexpr std::uint64_t kProbeElementLimit = 256;

std::size_t max_probe_dim(Field f, std::size_t ambient) {
    std::size_t d = 0;
    while (d < ambient && saturating_pow(f.p(), d + 1) <= kProbeElementLimit) ++d;
    return d;
}

// A third of the draws come from conjugated strict-UT (nilpotent), a third from
// P Alt_n, a third uniformly.
MatrixSpace sample_square_space(Rng& rng, std::size_t n, Field f, bool nonzero) {
    const std::size_t kind = rng.below(3);
    MatrixSpace ambient = MatrixSpace::full(f, n, n);
    if (kind == 0) ambient = transform_similar(strict_upper_triangular_space(n, f), random_invertible(rng, f, n));
    if (kind == 1) ambient = scaled_alternating_space(random_invertible(rng, f, n));
    const std::size_t top = std::min(ambient.dim(), max_probe_dim(f, n * n));
    const std::size_t low = nonzero && top > 0 ? 1 : 0;
    const std::size_t dim = low + rng.below(top - low + 1);
    return random_subspace_of(rng, ambient, dim);
}

struct ProbeOutcome {
    bool ok = true;
    json detail;
};

ProbeOutcome probe_implications(Rng& rng, std::size_t n, Field f, const ProbeHooks& hooks, std::uint64_t cap) {
    const auto s = sample_square_space(rng, n, f, false);
    const bool nil = is_nilpotent_space(s, cap).holds;
    const bool ts = hooks.trivial_spectrum ? hooks.trivial_spectrum(s) : is_trivial_spectrum(s, cap).holds;
    const bool ti = is_totally_intransitive(s).totally_intransitive;
    const auto affine = affine_translation_is_trivial_spectrum(s, cap);
    const bool affine_ok = !affine.all_invertible || ts;
    const bool ok = (!nil || ts) && (!ts || ti) && affine_ok;
    return {ok, {{"space", s}, {"nilpotent", nil}, {"trivial_spectrum", ts}, {"totally_intransitive", ti},
                 {"affine_all_invertible", affine.all_invertible}}};
}

json classification_summary(const PrimitivityReport& r) {
    return {{"i", r.cond_i.holds}, {"ii", r.cond_ii.holds}, {"iii", r.cond_iii.holds}, {"iv", r.cond_iv.holds},
            {"urk", r.upper_rank}};
}

ProbeOutcome probe_equivalence(Rng& rng, std::size_t n, Field f, std::uint64_t cap) {
    const std::size_t rows = 1 + rng.below(n), cols = 1 + rng.below(n);
    const std::size_t top = max_probe_dim(f, rows * cols);
    const auto s = random_space(rng, f, rows, cols, rng.below(top + 1));
    const Matrix p = random_invertible(rng, f, rows), q = random_invertible(rng, f, cols);
    const auto t = transform_equivalent(s, p, q);
    const auto a = classification_summary(classify(s, cap));
    const auto b = classification_summary(classify(t, cap));
    const bool ok = a == b && rank_profile(s, cap) == rank_profile(t, cap);
    return {ok, {{"space", s}, {"P", p}, {"Q", q}, {"before", a}, {"after", b}}};
}

ProbeOutcome probe_similarity(Rng& rng, std::size_t n, Field f, std::uint64_t cap) {
    const auto s = sample_square_space(rng, n, f, false);
    const Matrix p = random_invertible(rng, f, n);
    const auto t = transform_similar(s, p);
    auto summary = [&](const MatrixSpace& x) {
        return json{{"trivial_spectrum", is_trivial_spectrum(x, cap).holds},
                    {"nilpotent", is_nilpotent_space(x, cap).holds},
                    {"irreducible", is_irreducible(x).irreducible},
                    {"totally_intransitive", is_totally_intransitive(x).totally_intransitive}};
    };
    const auto a = summary(s), b = summary(t);
    return {a == b, {{"space", s}, {"P", p}, {"before", a}, {"after", b}}};
}

ProbeOutcome probe_dual(Rng& rng, std::size_t n, Field f, std::uint64_t cap) {
    const auto v = sample_square_space(rng, n, f, true);
    if (v.dim() == 0) return {true, {}};
    const auto dual = dual_space(v);
    bool ok = true;
    json detail{{"space", v}};
    const auto everything = MatrixSpace::full(f, n, 1);
    for (const Matrix& col : elements(everything, cap)) {
        const Vector x = col.column(0);
        if (rank(dual.at(x)) != image_of_vector(v, x).dim()) {
            ok = false;
            detail["x"] = x;
            break;
        }
    }
    Matrix stacked(f, n * v.dim(), n);
    for (std::size_t k = 0; k < v.dim(); ++k) stacked.set_block(k * n, 0, v.basis()[k]);
    const std::size_t common_kernel = kernel(stacked).dim();
    ok = ok && dual.space.dim() == n - common_kernel;
    ok = ok && condition_ii(dual.space).holds;
    const bool ti = is_totally_intransitive(v).totally_intransitive;
    ok = ok && ((upper_rank(dual.space, cap).rank < n) == ti);
    return {ok, detail};
}

} // namespace

TheoremReport random_probe(const std::string& spec, std::uint64_t seed, std::uint64_t trials, std::size_t n, Field field,
                           const ProbeHooks& hooks, std::uint64_t cap) {
    Stopwatch clock;
    static const std::vector<std::string> kSuites = {"implications", "equivalence-invariance", "similarity-invariance",
                                                     "dual-invariants"};
    std::vector<std::string> suites;
    if (spec == "all") {
        suites = kSuites;
    } else if (std::find(kSuites.begin(), kSuites.end(), spec) != kSuites.end()) {
        suites = {spec};
    } else {
        throw PreconditionViolated("unknown probe spec '" + spec + "'");
    }
    if (n == 0) throw PreconditionViolated("probe needs n >= 1");
    TheoremReport r;
    r.statement = "random-probe";
    r.p = field.p();
    r.parameters = {{"spec", spec}, {"seed", seed}, {"trials", trials}, {"n", n}};
    std::uint64_t violations = 0;
    for (const auto& suite : suites) {
        std::uint64_t suite_violations = 0;
        for (std::uint64_t t = 0; t < trials; ++t) {
            const std::uint64_t ts = trial_seed(seed, t);
            Rng rng(ts);
            ProbeOutcome o;
            if (suite == "implications") o = probe_implications(rng, n, field, hooks, cap);
            else if (suite == "equivalence-invariance") o = probe_equivalence(rng, n, field, cap);
            else if (suite == "similarity-invariance") o = probe_similarity(rng, n, field, cap);
            else o = probe_dual(rng, n, field, cap);
            if (o.ok) continue;
            ++suite_violations;
            if (violations++ == 0)
                r.witnesses["first_violation"] = {{"suite", suite}, {"trial", t}, {"trial_seed", ts}, {"detail", o.detail}};
        }
        r.counters[suite + ".trials"] = trials;
        r.counters[suite + ".violations"] = suite_violations;
    }
    r.counters["violations"] = violations;
    if (violations > 0) r.verdict = Verdict::violated;
    r.elapsed_seconds = clock.seconds();
    return r;
}

} // namespace msw
