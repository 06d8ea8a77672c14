#include "dmp/config.hpp"

#include <fstream>

namespace dmp {

namespace {

template <typename T>
T field(const nlohmann::json& j, const std::string& path, const std::string& key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ConfigError("config field '" + path + "." + key + "' has the wrong type");
    }
}

template <typename T>
T required_field(const nlohmann::json& j, const std::string& path, const std::string& key) {
    if (!j.contains(key)) throw ConfigError("config field '" + path + "." + key + "' is required");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ConfigError("config field '" + path + "." + key + "' has the wrong type");
    }
}

void require_positive(double v, const std::string& path) {
    if (!(v > 0.0)) throw ConfigError("config field '" + path + "' must be positive");
}

}  // namespace

ProblemConfig parse_config(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    ProblemConfig c;
    c.M = required_field<int>(j, "", "M");
    if (c.M < 3) throw ConfigError("config field '.M' must be >= 3");
    c.seed = required_field<std::uint64_t>(j, "", "seed");

    if (j.contains("potential")) {
        const auto& p = j.at("potential");
        c.potential.kind = field<std::string>(p, "potential", "kind", c.potential.kind);
        c.potential.a = field<double>(p, "potential", "a", c.potential.a);
        c.potential.mu = field<double>(p, "potential", "mu", c.potential.mu);
        c.potential.K = field<double>(p, "potential", "K", c.potential.K);
        if (p.contains("weight")) {
            const auto& w = p.at("weight");
            c.potential.weight.kind =
                field<std::string>(w, "potential.weight", "kind", c.potential.weight.kind);
            c.potential.weight.amplitude =
                field<double>(w, "potential.weight", "amplitude", c.potential.weight.amplitude);
        }
        if (c.potential.weight.kind != "constant" && c.potential.weight.kind != "cosine") {
            throw ConfigError("config field '.potential.weight.kind' must be constant or cosine");
        }
        if (c.potential.kind != "trig_quadratic" && c.potential.kind != "trig_quadratic_half") {
            throw ConfigError(
                "config field '.potential.kind' must be trig_quadratic or trig_quadratic_half");
        }
    }

    if (j.contains("functional")) {
        const auto& f = j.at("functional");
        c.functional.kind = field<std::string>(f, "functional", "kind", c.functional.kind);
        if (c.functional.kind != "action" && c.functional.kind != "single_site") {
            throw ConfigError("config field '.functional.kind' must be action or single_site");
        }
        c.functional.distinguished_index =
            field<int>(f, "functional", "distinguished_index", c.functional.distinguished_index);
        c.functional.growth = field<double>(f, "functional", "growth", c.functional.growth);
        if (f.contains("geometry")) {
            const auto& g = f.at("geometry");
            c.functional.geometry.kind =
                field<std::string>(g, "functional.geometry", "kind", c.functional.geometry.kind);
            if (c.functional.geometry.kind != "ray" && c.functional.geometry.kind != "spike") {
                throw ConfigError("config field '.functional.geometry.kind' must be ray or spike");
            }
            c.functional.geometry.direction = field<std::vector<double>>(
                g, "functional.geometry", "direction", c.functional.geometry.direction);
            c.functional.geometry.level =
                field<double>(g, "functional.geometry", "level", c.functional.geometry.level);
            c.functional.geometry.t_max =
                field<double>(g, "functional.geometry", "t_max", c.functional.geometry.t_max);
            c.functional.geometry.scale =
                field<double>(g, "functional.geometry", "scale", c.functional.geometry.scale);
        }
    }
    if (c.functional.geometry.kind == "spike" && c.M < 6) {
        throw ConfigError("config: spike geometry requires M >= 6");
    }

    if (j.contains("conditions")) {
        const auto& q = j.at("conditions");
        c.conditions.radius = field<double>(q, "conditions", "radius", c.conditions.radius);
        c.conditions.offset = field<double>(q, "conditions", "offset", c.conditions.offset);
        c.conditions.growth = field<double>(q, "conditions", "growth", c.conditions.growth);
        c.conditions.x_max = field<double>(q, "conditions", "x_max", c.conditions.x_max);
        c.conditions.samples = field<int>(q, "conditions", "samples", c.conditions.samples);
        c.conditions.growth_x_max =
            field<double>(q, "conditions", "growth_x_max", c.conditions.growth_x_max);
        c.conditions.growth_samples =
            field<int>(q, "conditions", "growth_samples", c.conditions.growth_samples);
        c.conditions.w_scan_points =
            field<int>(q, "conditions", "w_scan_points", c.conditions.w_scan_points);
    }

    if (j.contains("solver")) {
        const auto& s = j.at("solver");
        c.solver.knots = field<int>(s, "solver", "knots", c.solver.knots);
        c.solver.ensemble = field<int>(s, "solver", "ensemble", c.solver.ensemble);
        c.solver.eps = field<double>(s, "solver", "eps", c.solver.eps);
        c.solver.max_iterations = field<int>(s, "solver", "max_iterations", c.solver.max_iterations);
        c.solver.stall_window = field<int>(s, "solver", "stall_window", c.solver.stall_window);
        c.solver.stall_rtol = field<double>(s, "solver", "stall_rtol", c.solver.stall_rtol);
        c.solver.refine_doublings =
            field<int>(s, "solver", "refine_doublings", c.solver.refine_doublings);
        c.solver.jitter = field<double>(s, "solver", "jitter", c.solver.jitter);
        c.solver.newton_tol = field<double>(s, "solver", "newton_tol", c.solver.newton_tol);
        c.solver.catalog_match_tol =
            field<double>(s, "solver", "catalog_match_tol", c.solver.catalog_match_tol);
        c.solver.sphere_infimum = field<bool>(s, "solver", "sphere_infimum", c.solver.sphere_infimum);
        c.solver.sphere_restarts =
            field<int>(s, "solver", "sphere_restarts", c.solver.sphere_restarts);
        require_positive(c.solver.eps, ".solver.eps");
        require_positive(c.solver.newton_tol, ".solver.newton_tol");
        require_positive(c.solver.catalog_match_tol, ".solver.catalog_match_tol");
        if (c.solver.ensemble < 1) throw ConfigError("config field '.solver.ensemble' must be >= 1");
    }

    if (j.contains("oracle")) {
        const auto& o = j.at("oracle");
        c.oracle.box = field<double>(o, "oracle", "box", c.oracle.box);
        c.oracle.starts = field<int>(o, "oracle", "starts", c.oracle.starts);
        c.oracle.tol = field<double>(o, "oracle", "tol", c.oracle.tol);
        c.oracle.dedup_tol = field<double>(o, "oracle", "dedup_tol", c.oracle.dedup_tol);
        require_positive(c.oracle.tol, ".oracle.tol");
        require_positive(c.oracle.dedup_tol, ".oracle.dedup_tol");
    }

    if (j.contains("deformation")) {
        const auto& d = j.at("deformation");
        c.deformation.landscape =
            field<std::string>(d, "deformation", "landscape", c.deformation.landscape);
        if (c.deformation.landscape != "linear" && c.deformation.landscape != "saddle") {
            throw ConfigError("config field '.deformation.landscape' must be linear or saddle");
        }
        c.deformation.dimension = field<int>(d, "deformation", "dimension", c.deformation.dimension);
        c.deformation.h = field<double>(d, "deformation", "h", c.deformation.h);
        c.deformation.eps = field<double>(d, "deformation", "eps", c.deformation.eps);
        c.deformation.d_variants = field<std::vector<std::string>>(d, "deformation", "d_variants",
                                                                   c.deformation.d_variants);
        c.deformation.slab_margin =
            field<double>(d, "deformation", "slab_margin", c.deformation.slab_margin);
        c.deformation.samples_per_set =
            field<int>(d, "deformation", "samples_per_set", c.deformation.samples_per_set);
        c.deformation.tol = field<double>(d, "deformation", "tol", c.deformation.tol);
        c.deformation.traces = field<int>(d, "deformation", "traces", c.deformation.traces);
        require_positive(c.deformation.eps, ".deformation.eps");
        require_positive(c.deformation.tol, ".deformation.tol");
        for (const auto& v : c.deformation.d_variants) {
            if (v != "empty" && v != "mid_slab" && v != "level_set") {
                throw ConfigError("config field '.deformation.d_variants' entries must be one of "
                                  "empty, mid_slab, level_set");
            }
        }
    }

    if (j.contains("output")) {
        const auto& o = j.at("output");
        c.output.dir = field<std::string>(o, "output", "dir", c.output.dir);
        c.output.csv = field<bool>(o, "output", "csv", c.output.csv);
    }
    return c;
}

ProblemConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config file " + path.string() + " is not valid JSON: " + e.what());
    }
    return parse_config(j);
}

nlohmann::json config_to_json(const ProblemConfig& c) {
    nlohmann::json j;
    j["M"] = c.M;
    j["seed"] = c.seed;
    j["potential"] = {{"kind", c.potential.kind},
                      {"a", c.potential.a},
                      {"mu", c.potential.mu},
                      {"K", c.potential.K},
                      {"weight",
                       {{"kind", c.potential.weight.kind},
                        {"amplitude", c.potential.weight.amplitude}}}};
    j["functional"] = {{"kind", c.functional.kind},
                       {"distinguished_index", c.functional.distinguished_index},
                       {"growth", c.functional.growth},
                       {"geometry",
                        {{"kind", c.functional.geometry.kind},
                         {"direction", c.functional.geometry.direction},
                         {"level", c.functional.geometry.level},
                         {"t_max", c.functional.geometry.t_max},
                         {"scale", c.functional.geometry.scale}}}};
    j["conditions"] = {{"radius", c.conditions.radius},
                       {"offset", c.conditions.offset},
                       {"growth", c.conditions.growth},
                       {"x_max", c.conditions.x_max},
                       {"samples", c.conditions.samples},
                       {"growth_x_max", c.conditions.growth_x_max},
                       {"growth_samples", c.conditions.growth_samples},
                       {"w_scan_points", c.conditions.w_scan_points}};
    j["solver"] = {{"knots", c.solver.knots},
                   {"ensemble", c.solver.ensemble},
                   {"eps", c.solver.eps},
                   {"max_iterations", c.solver.max_iterations},
                   {"stall_window", c.solver.stall_window},
                   {"stall_rtol", c.solver.stall_rtol},
                   {"refine_doublings", c.solver.refine_doublings},
                   {"jitter", c.solver.jitter},
                   {"newton_tol", c.solver.newton_tol},
                   {"catalog_match_tol", c.solver.catalog_match_tol},
                   {"sphere_infimum", c.solver.sphere_infimum},
                   {"sphere_restarts", c.solver.sphere_restarts}};
    j["oracle"] = {{"box", c.oracle.box},
                   {"starts", c.oracle.starts},
                   {"tol", c.oracle.tol},
                   {"dedup_tol", c.oracle.dedup_tol}};
    j["deformation"] = {{"landscape", c.deformation.landscape},
                        {"dimension", c.deformation.dimension},
                        {"h", c.deformation.h},
                        {"eps", c.deformation.eps},
                        {"d_variants", c.deformation.d_variants},
                        {"slab_margin", c.deformation.slab_margin},
                        {"samples_per_set", c.deformation.samples_per_set},
                        {"tol", c.deformation.tol},
                        {"traces", c.deformation.traces}};
    j["output"] = {{"dir", c.output.dir}, {"csv", c.output.csv}};
    return j;
}

PotentialSpec make_potential(const ProblemConfig& c) {
    WeightFunction w;
    w.kind = c.potential.weight.kind == "cosine" ? WeightFunction::Kind::cosine
                                                 : WeightFunction::Kind::constant;
    w.amplitude = c.potential.weight.amplitude;
    w.period = c.M;
    if (c.potential.kind == "trig_quadratic") {
        return PotentialSpec::trig_quadratic(c.M, c.potential.a, c.potential.mu, c.potential.K, w);
    }
    return PotentialSpec::trig_quadratic_half(c.M, c.potential.a, c.potential.K, w);
}

FunctionalSpec make_functional(const ProblemConfig& c) {
    PotentialSpec p = make_potential(c);
    if (c.functional.kind == "action") return FunctionalSpec::action(std::move(p));
    return FunctionalSpec::single_site(std::move(p), c.functional.distinguished_index,
                                       c.functional.growth);
}

MountainGeometry make_geometry(const ProblemConfig& c, const FunctionalSpec& f) {
    const auto& g = c.functional.geometry;
    if (g.kind == "spike") return build_spike_geometry(f, g.scale);
    if (g.direction.size() != static_cast<std::size_t>(c.M)) {
        throw ConfigError("config field '.functional.geometry.direction' must have M entries");
    }
    return find_ray_geometry(f, PeriodicSequence(g.direction), g.level, g.t_max);
}

}  // namespace dmp
