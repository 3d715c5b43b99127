#include "cli.hpp"

#include "msw/constructions.hpp"
#include "msw/primitivity.hpp"
#include "msw/random.hpp"
#include "msw/recognition.hpp"
#include "msw/report.hpp"
#include "msw/space_file.hpp"
#include "msw/spectral.hpp"
#include "msw/theorems.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>

namespace msw::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::uint64_t cap = kDefaultEnumerationCap;
    int indent = 2;
    bool quiet = false;
};

int exit_code(Verdict v) {
    switch (v) {
    case Verdict::violated: return kViolation;
    case Verdict::inconclusive: return kInconclusive;
    default: return kOk;
    }
}

MatrixSpace construct(const std::string& name, std::size_t n, Field f, std::uint64_t seed) {
    Rng rng(seed);
    if (name == "alt" || name == "altn") return alternating_space(n, f);
    if (name == "strict-ut") return strict_upper_triangular_space(n, f);
    if (name == "wedge") return wedge_space(n, f);
    if (name == "full") return MatrixSpace::full(f, n, n);
    if (name == "p-alt") return scaled_alternating_space(random_invertible(rng, f, n));
    if (name == "conj-strict-ut") return transform_similar(strict_upper_triangular_space(n, f), random_invertible(rng, f, n));
    if (name == "transformed-wedge") {
        auto basis = random_alt_basis(rng, f, n);
        return transformed_wedge_space(n, f, basis, random_invertible(rng, f, n));
    }
    throw UsageError("unknown construction '" + name + "'");
}

std::pair<std::uint64_t, std::uint64_t> parse_partition(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("partition must look like A:B");
    auto number = [&](std::string_view s, std::uint64_t fallback) {
        if (s.empty()) return fallback;
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("bad partition bound '" + std::string(s) + "'");
        return v;
    };
    const std::string_view all(text);
    const auto a = number(all.substr(0, colon), 0);
    const auto b = number(all.substr(colon + 1), std::numeric_limits<std::uint64_t>::max());
    if (a > b) throw UsageError("partition start exceeds end");
    return {a, b};
}

Field field_option(std::uint32_t p) {
    try {
        return Field(p);
    } catch (const InvalidField& e) {
        throw UsageError(e.what());
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Matrix-space workbench over prime fields", "msw"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--cap", g.cap, "Largest number of elements any single enumeration may visit");
    app.add_option("--json-indent", g.indent, "Indentation of the JSON report (-1 for a single line)");
    app.add_flag("--quiet", g.quiet, "Suppress the report; the exit code carries the outcome");
    app.fallthrough();

    std::string name, file, kind, output, partition, p_file, spec = "all";
    std::size_t n = 3, dim = 0;
    std::uint32_t p = 3;
    std::uint64_t seed = 0, budget = kDefaultEquivalenceBudget, trials = 1000, ceiling = kDefaultScanCeiling;
    std::string predicate = "trivial-spectrum";

    auto* construct_cmd = app.add_subcommand("construct", "Write a named construction as a space file");
    construct_cmd->add_option("name", name, "alt | strict-ut | wedge | full | p-alt | conj-strict-ut | transformed-wedge")
        ->required();
    construct_cmd->add_option("--n", n)->required();
    construct_cmd->add_option("--p", p)->required();
    construct_cmd->add_option("--seed", seed);
    construct_cmd->add_option("-o,--output", output);

    auto* props_cmd = app.add_subcommand("props", "Spectral properties of a square space");
    props_cmd->add_option("file", file)->required();

    auto* prim_cmd = app.add_subcommand("primitivity", "Conditions (i)-(iv) and the derived predicates");
    prim_cmd->add_option("file", file)->required();

    auto* dual_cmd = app.add_subcommand("dual", "Dual operator space of a square space");
    dual_cmd->add_option("file", file)->required();
    dual_cmd->add_option("--P", p_file, "Matrix file with the basis change");
    dual_cmd->add_option("-o,--output", output, "Also write the dual space as a space file");

    auto* reduce_cmd = app.add_subcommand("reduce", "Minimal degenerate compression of a reduced space");
    reduce_cmd->add_option("file", file)->required();

    auto* recognize_cmd = app.add_subcommand("recognize", "Recognize a known extremal space");
    recognize_cmd->add_option("kind", kind, "alt | strict-ut | wedge")
        ->required()
        ->check(CLI::IsMember({"alt", "strict-ut", "wedge"}));
    recognize_cmd->add_option("file", file)->required();
    recognize_cmd->add_option("--budget", budget);
    recognize_cmd->add_option("--seed", seed);

    auto* scan_cmd = app.add_subcommand("scan", "Exhaustive scan of all subspaces of one dimension");
    scan_cmd->add_option("--n", n)->required();
    scan_cmd->add_option("--p", p)->required();
    scan_cmd->add_option("--dim", dim)->required();
    scan_cmd->add_option("--predicate", predicate)->check(CLI::IsMember({"trivial-spectrum", "nilpotent"}));
    scan_cmd->add_option("--partition", partition, "Index range A:B (either bound may be omitted)");
    scan_cmd->add_option("--ceiling", ceiling, "Largest number of spaces one scan may visit");

    auto* theorem_cmd = app.add_subcommand("theorem", "Run a theorem verifier on one space");
    theorem_cmd->add_option("statement", kind, "gerstenhaber | generalized | atkinson")
        ->required()
        ->check(CLI::IsMember({"gerstenhaber", "generalized", "atkinson"}));
    theorem_cmd->add_option("file", file)->required();
    theorem_cmd->add_option("--budget", budget);

    auto* probe_cmd = app.add_subcommand("probe", "Seeded randomized property suites");
    probe_cmd->add_option("--spec", spec, "implications | equivalence-invariance | similarity-invariance | dual-invariants | all");
    probe_cmd->add_option("--seed", seed);
    probe_cmd->add_option("--trials", trials);
    probe_cmd->add_option("--n", n);
    probe_cmd->add_option("--p", p);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "msw: " << e.what() << "\n";
        return kUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    auto emit = [&](json report) {
        if (!report.contains("schema")) report["schema"] = kReportSchema;
        report["command"] = command;
        if (!g.quiet) out << report.dump(g.indent) << "\n";
    };

    try {
        if (command == "construct") {
            const auto space = construct(name, n, field_option(p), seed);
            if (output.empty()) {
                if (!g.quiet) out << serialize_space(space, g.indent);
            } else {
                write_space_file(output, space, g.indent);
                emit({{"construction", name}, {"n", n}, {"p", p}, {"seed", seed}, {"output", output},
                      {"rows", space.rows()}, {"cols", space.cols()}, {"dim", space.dim()}});
            }
            return kOk;
        }
        if (command == "props") {
            emit(report_json(spectral_report(read_space_file(file), g.cap)));
            return kOk;
        }
        if (command == "primitivity") {
            emit(report_json(classify(read_space_file(file), g.cap)));
            return kOk;
        }
        if (command == "dual") {
            const auto v = read_space_file(file);
            std::optional<Matrix> basis_change;
            if (!p_file.empty()) basis_change = read_matrix_file(p_file);
            const auto d = dual_space(v, basis_change);
            if (!output.empty()) write_space_file(output, d.space, g.indent);
            emit(report_json(d, g.cap));
            return kOk;
        }
        if (command == "reduce") {
            const auto s = read_space_file(file);
            const auto cr = minimal_degenerate_compression(s, g.cap);
            emit(cr ? report_json(*cr) : json{{"compression", nullptr}, {"semi_primitive", true}});
            return kOk;
        }
        if (command == "recognize") {
            const auto s = read_space_file(file);
            if (kind == "alt") {
                const auto r = solve_alternating_congruence(s, seed);
                emit(report_json(r));
                return r.outcome == Outcome::inconclusive ? kInconclusive : kOk;
            }
            if (kind == "strict-ut") {
                emit(report_json(strict_triangularization(s)));
                return kOk;
            }
            const auto v = equivalence_probe(s, wedge_space(s.cols(), s.field()), budget, seed, g.cap);
            emit(report_json(v));
            return v.kind == EquivalenceVerdict::Kind::inconclusive ? kInconclusive : kOk;
        }
        if (command == "scan") {
            ScanOptions options;
            options.cap = g.cap;
            options.ceiling = ceiling;
            if (!partition.empty()) std::tie(options.begin, options.end) = parse_partition(partition);
            const auto r = exhaustive_scan(n, field_option(p), dim,
                                           predicate == "nilpotent" ? ScanPredicate::nilpotent
                                                                    : ScanPredicate::trivial_spectrum,
                                           options);
            emit(report_json(r));
            return exit_code(r.verdict);
        }
        if (command == "theorem") {
            const auto s = read_space_file(file);
            TheoremReport r;
            if (kind == "gerstenhaber") r = verify_gerstenhaber_bound(s, g.cap);
            else if (kind == "generalized") r = run_generalized_pipeline(s, g.cap);
            else r = verify_atkinson_on_instance(s, budget, g.cap);
            emit(report_json(r));
            return exit_code(r.verdict);
        }
        if (command == "probe") {
            const auto r = random_probe(spec, seed, trials, n, field_option(p), {}, g.cap);
            emit(report_json(r));
            return exit_code(r.verdict);
        }
    } catch (const UsageError& e) {
        err << "msw: " << e.what() << "\n";
        return kUsage;
    } catch (const FormatError& e) {
        err << "msw: " << e.what() << "\n";
        return kBadInput;
    } catch (const EnumerationTooLarge& e) {
        err << "msw: " << e.what() << "\n";
        emit({{"error", "enumeration_too_large"}, {"message", e.what()}});
        return kInconclusive;
    } catch (const ScanTooLarge& e) {
        err << "msw: " << e.what() << "\n";
        emit({{"error", "scan_too_large"}, {"message", e.what()}});
        return kInconclusive;
    } catch (const Error& e) {
        err << "msw: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace msw::cli
