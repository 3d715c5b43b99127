#include "msw/report.hpp"

#include "msw/linalg.hpp"

namespace msw {

void to_json(json& j, const Matrix& m) {
    j = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(m.row(i));
}

void to_json(json& j, const VectorSubspace& w) {
    j = json{{"ambient_dim", w.ambient_dim()}, {"dim", w.dim()}, {"basis", w.basis_vectors()}};
}

void to_json(json& j, const MatrixSpace& s) {
    j = json{{"version", "msw-1"}, {"p", s.field().p()}, {"rows", s.rows()}, {"cols", s.cols()}, {"basis", s.basis()}};
}

void to_json(json& j, const RankProfile& r) {
    j = json::object();
    for (std::size_t k = 0; k < r.counts.size(); ++k)
        if (r.counts[k] != 0) j[std::to_string(k)] = r.counts[k];
}

namespace {

json kernel_condition(const KernelCondition& c) {
    json j{{"holds", c.holds}};
    if (c.witness) j["witness"] = *c.witness;
    return j;
}

json hyperplane_condition(const HyperplaneCondition& c) {
    json j{{"holds", c.holds}};
    if (c.witness) j["witness"] = *c.witness;
    if (c.vacuous) j["vacuous"] = true;
    return j;
}

} // namespace

json report_json(const PrimitivityReport& r) {
    json j{{"condition_i", kernel_condition(r.cond_i)},
           {"condition_ii", kernel_condition(r.cond_ii)},
           {"condition_iii", hyperplane_condition(r.cond_iii)},
           {"condition_iv", hyperplane_condition(r.cond_iv)},
           {"upper_rank", r.upper_rank},
           {"reduced", r.is_reduced()},
           {"semi_primitive", r.is_semi_primitive()},
           {"primitive", r.is_primitive()}};
    if (r.cond_iv.vacuous) j["notes"].push_back("single-row space: condition (iv) taken to hold vacuously");
    return j;
}

json report_json(const CompressionReport& r) {
    return json{{"d", r.d},
                {"column_subspace", r.column_subspace},
                {"c", r.c},
                {"left_kernel_dim", r.left_kernel_dim},
                {"row_basis_change", r.row_basis_change},
                {"core", r.core}};
}

json report_json(const SpectralReport& r) {
    json j;
    j["trivial_spectrum"] = {{"holds", r.trivial_spectrum.holds}};
    if (r.trivial_spectrum.witness)
        j["trivial_spectrum"]["witness"] = {{"element", r.trivial_spectrum.witness->element},
                                            {"eigenvalue", r.trivial_spectrum.witness->eigenvalue}};
    j["nilpotent"] = {{"holds", r.nilpotent.holds}};
    if (r.nilpotent.witness) j["nilpotent"]["witness"] = *r.nilpotent.witness;
    j["irreducible"] = {{"holds", r.irreducible.irreducible}};
    if (r.irreducible.witness) j["irreducible"]["witness"] = *r.irreducible.witness;
    j["totally_intransitive"] = {{"holds", r.transitivity.totally_intransitive}};
    if (r.transitivity.witness) j["totally_intransitive"]["witness"] = *r.transitivity.witness;
    return j;
}

json report_json(const DualSpace& d, std::uint64_t cap) {
    const auto ur = upper_rank(d.space, cap);
    return json{{"basis_change", d.basis_change},
                {"m", d.source.dim()},
                {"n", d.source.cols()},
                {"space", d.space},
                {"upper_rank", ur.rank},
                {"upper_rank_witness", ur.witness},
                {"condition_i", kernel_condition(condition_i(d.space))},
                {"condition_ii", kernel_condition(condition_ii(d.space))}};
}

json report_json(const CongruenceResult& r) {
    json j{{"outcome", to_string(r.outcome)},
           {"solution_dim", r.solution_dim},
           {"candidates_examined", r.candidates_examined},
           {"exhaustive", r.exhaustive}};
    if (r.p) j["P"] = *r.p;
    return j;
}

json report_json(const std::optional<Triangularization>& t) {
    if (!t) return json{{"triangularizable", false}};
    return json{{"triangularizable", true}, {"full", t->full}, {"P", t->p}, {"flag", t->flag}};
}

json report_json(const EquivalenceVerdict& v) {
    json j{{"verdict", to_string(v.kind)},
           {"reason", v.reason},
           {"pairs_examined", v.pairs_examined},
           {"exhaustive", v.exhaustive}};
    if (v.p) j["P"] = *v.p;
    if (v.q) j["Q"] = *v.q;
    return j;
}

} // namespace msw
