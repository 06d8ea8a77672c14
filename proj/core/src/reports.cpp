#include "dmp/reports.hpp"

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace dmp {

namespace {

nlohmann::json seq_json(const PeriodicSequence& u) { return nlohmann::json(u.values()); }

nlohmann::json vec_json(const Eigen::VectorXd& v) {
    return nlohmann::json(std::vector<double>(v.data(), v.data() + v.size()));
}

double sanitize(double v) {
    if (std::isfinite(v)) return v;
    return v > 0 ? 1e300 : -1e300;
}

std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

nlohmann::json to_json(const Spectrum& sp) {
    return {{"period", sp.period},
            {"eigenvalues", sp.eigenvalues},
            {"lambda_min_nonzero", sp.lambda_min_nonzero},
            {"lambda_max", sp.lambda_max}};
}

nlohmann::json to_json(const ConditionReport& rep) {
    nlohmann::json j = {{"id", to_string(rep.id)},
                        {"verdict", rep.holds_on_sample ? "holds-on-sample" : "fails"}};
    if (rep.witness) {
        j["witness"] = {{"n", rep.witness->n},
                        {"x", rep.witness->x},
                        {"F_value", rep.witness->F_value},
                        {"bound_value", rep.witness->bound_value}};
    }
    if (rep.alpha) j["alpha"] = *rep.alpha;
    if (rep.delta) j["delta"] = *rep.delta;
    if (rep.growth_constants) {
        j["growth_constants"] = {{"radius", rep.growth_constants->radius},
                                 {"offset", rep.growth_constants->offset},
                                 {"growth", rep.growth_constants->growth}};
    }
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

nlohmann::json to_json(const SweepReport& rep) {
    return {{"samples", rep.samples},
            {"violations", rep.violations},
            {"max_slack", sanitize(rep.max_slack)},
            {"worst_margin", sanitize(rep.worst_margin)},
            {"note", rep.note}};
}

nlohmann::json to_json(const PsConstants& c) {
    return {{"radius", c.growth.radius},
            {"offset", c.growth.offset},
            {"growth", c.growth.growth},
            {"w", c.w},
            {"wprime", c.wprime}};
}

nlohmann::json to_json(const MountainGeometry& g) {
    return {{"e", seq_json(g.e)},   {"e1", seq_json(g.e1)}, {"r", g.r},
            {"level", g.level},     {"scale", g.scale},
            {"norm_e", norm(g.e)},  {"norm_e1", norm(g.e1)}};
}

nlohmann::json to_json(const MinimaxReport& rep) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& m : rep.members) {
        members.push_back({{"index", m.index},
                           {"converged", m.converged},
                           {"certificate_bearing", m.certificate_bearing},
                           {"final_max", m.final_max},
                           {"grad_at_max", m.grad_at_max},
                           {"iterations", m.iterations}});
    }
    return {{"c_hat", rep.c_hat},
            {"u_hat", seq_json(rep.u_hat)},
            {"phi_value", rep.phi_value},
            {"grad_norm", rep.grad_norm},
            {"epsilon", rep.epsilon},
            {"level_certificate", rep.level_certificate},
            {"gradient_certificate", rep.gradient_certificate},
            {"c1_diagnostic", rep.c1_diagnostic},
            {"e1_level", rep.e1_level},
            {"iterations", rep.iterations},
            {"knots_final", rep.knots_final},
            {"ensemble", rep.ensemble},
            {"seed", rep.seed},
            {"members", members},
            {"c_hat_trace", rep.c_hat_trace}};
}

nlohmann::json to_json(const CertificateRecord& rec) {
    return {{"phi_recomputed", rec.phi_recomputed},
            {"grad_recomputed", rec.grad_recomputed},
            {"level_certificate", rec.level_certificate},
            {"gradient_certificate", rec.gradient_certificate}};
}

nlohmann::json to_json(const NewtonResult& nr) {
    return {{"u", seq_json(nr.u)},
            {"residual", nr.residual},
            {"converged", nr.converged},
            {"iterations", nr.iterations},
            {"singular_jacobian", nr.singular_jacobian},
            {"condition_estimate", sanitize(nr.condition_estimate)}};
}

nlohmann::json to_json(const SolutionCatalog& cat) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : cat.entries) {
        entries.push_back({{"values", e.u.values()},
                           {"residual", e.residual},
                           {"phi_action", e.phi_action},
                           {"class", to_string(e.cls)}});
    }
    return {{"fingerprint", cat.fingerprint},
            {"admission_tol", cat.admission_tol},
            {"dedup_tol", cat.dedup_tol},
            {"shift_symmetry", cat.shift_symmetry},
            {"sign_symmetry", cat.sign_symmetry},
            {"starts_attempted", cat.starts_attempted},
            {"starts_converged", cat.starts_converged},
            {"entries", entries}};
}

nlohmann::json to_json(const CatalogMatch& match) {
    return {{"entry_index", match.entry_index},
            {"distance", match.distance},
            {"matched", match.matched}};
}

nlohmann::json to_json(const HypothesisReport& rep) {
    return {{"checked", rep.checked},
            {"holds_on_sample", rep.holds_on_sample},
            {"min_gradient_norm", sanitize(rep.min_gradient_norm)},
            {"samples", rep.samples}};
}

namespace {

nlohmann::json conclusion_json(const ConclusionVerdict& cv) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : cv.samples) {
        samples.push_back({{"start", vec_json(s.start)},
                           {"phi_initial", s.phi_initial},
                           {"phi_final", s.phi_final},
                           {"pass", s.pass}});
    }
    return {{"name", cv.name}, {"pass", cv.pass}, {"samples", samples}};
}

}  // namespace

nlohmann::json to_json(const DeformationVerdict& v) {
    return {{"h", v.h},
            {"eps", v.eps},
            {"d_kind", v.d_kind},
            {"hypothesis", to_json(v.hypothesis)},
            {"fixed_points", conclusion_json(v.fixed_points)},
            {"upward_inclusion", conclusion_json(v.upward_inclusion)},
            {"downward_inclusion", conclusion_json(v.downward_inclusion)}};
}

nlohmann::json to_json(const DescentVerdict& v) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : v.samples) {
        samples.push_back({{"start", vec_json(s.start)},
                           {"phi_initial", s.phi_initial},
                           {"phi_final", s.phi_final},
                           {"pass", s.pass}});
    }
    return {{"c", v.c}, {"eps", v.eps}, {"pass", v.pass}, {"samples", samples}};
}

nlohmann::json report_envelope(const std::string& kind, nlohmann::json body) {
    const auto now = std::chrono::system_clock::now();
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch());
    nlohmann::json j;
    j["schema_version"] = kReportSchemaVersion;
    j["kind"] = kind;
    j["meta"] = {{"unix_time", secs.count()}};
    j["body"] = std::move(body);
    return j;
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << text;
    }
    std::filesystem::rename(tmp, path);
}

void write_json_atomic(const std::filesystem::path& path, const nlohmann::json& j) {
    write_text_atomic(path, j.dump(2) + "\n");
}

std::string path_csv(const std::vector<PeriodicSequence>& knots, const Objective& f) {
    std::ostringstream os;
    os << "knot";
    const int m = knots.empty() ? 0 : knots.front().period();
    for (int s = 1; s <= m; ++s) os << ",u_" << s;
    os << ",phi\n";
    for (std::size_t k = 0; k < knots.size(); ++k) {
        os << k;
        for (int s = 1; s <= m; ++s) os << "," << csv_number(knots[k].at(s));
        os << "," << csv_number(f.value(knots[k])) << "\n";
    }
    return os.str();
}

std::string trace_csv(const FlowTrace& trace) {
    std::ostringstream os;
    const int d = trace.state.empty() ? 0 : static_cast<int>(trace.state.front().size());
    os << "t";
    for (int i = 1; i <= d; ++i) os << ",x_" << i;
    os << ",phi,psi\n";
    for (std::size_t k = 0; k < trace.t.size(); ++k) {
        os << csv_number(trace.t[k]);
        for (int i = 0; i < d; ++i) os << "," << csv_number(trace.state[k](i));
        os << "," << csv_number(trace.phi[k]) << "," << csv_number(trace.psi[k]) << "\n";
    }
    return os.str();
}

std::string catalog_csv(const SolutionCatalog& cat) {
    std::ostringstream os;
    const int m = cat.entries.empty() ? 0 : cat.entries.front().u.period();
    os << "entry,class,phi_action,residual";
    for (int s = 1; s <= m; ++s) os << ",u_" << s;
    os << "\n";
    for (std::size_t i = 0; i < cat.entries.size(); ++i) {
        const auto& e = cat.entries[i];
        os << i << "," << to_string(e.cls) << "," << csv_number(e.phi_action) << ","
           << csv_number(e.residual);
        for (int s = 1; s <= m; ++s) os << "," << csv_number(e.u.at(s));
        os << "\n";
    }
    return os.str();
}

}  // namespace dmp
