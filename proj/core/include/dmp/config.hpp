#pragma once

/**
 * @file config.hpp
 * @brief JSON problem configuration: parsing, validation, and construction of
 *        the specs the commands run on.
 *
 * Malformed configs raise ConfigError naming the offending field path. Every
 * randomized stage draws from substreams of the single top-level seed, so a
 * config plus a seed pins the whole run.
 */

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dmp/functional.hpp"
#include "dmp/potential.hpp"

namespace dmp {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct WeightConfig {
    std::string kind = "constant";  // constant | cosine
    double amplitude = 0.0;
};

struct PotentialConfig {
    std::string kind = "trig_quadratic";  // trig_quadratic | trig_quadratic_half
    double a = 2.5;
    double mu = 1.0;
    double K = 1.0;
    WeightConfig weight;
};

struct GeometryConfig {
    std::string kind = "ray";  // ray | spike
    std::vector<double> direction;
    double level = 0.3;
    double t_max = 8.0;
    double scale = 1.0;  // spike geometry scale
};

struct FunctionalConfig {
    std::string kind = "action";  // action | single_site
    int distinguished_index = 3;
    double growth = 2.4;
    GeometryConfig geometry;
};

struct ConditionsConfig {
    double radius = 3.0;
    double offset = 5.0;
    double growth = 2.4;
    double x_max = 50.0;
    int samples = 2001;
    double growth_x_max = 100.0;
    int growth_samples = 10000;
    int w_scan_points = 10001;
};

struct SolverConfig {
    int knots = 64;
    int ensemble = 8;
    double eps = 0.01;
    int max_iterations = 600;
    int stall_window = 12;
    double stall_rtol = 1e-10;
    int refine_doublings = 1;
    double jitter = 1e-6;
    double newton_tol = 1e-12;
    double catalog_match_tol = 1e-6;
    bool sphere_infimum = true;
    int sphere_restarts = 8;
};

struct OracleConfig {
    double box = 3.0;
    int starts = 500;
    double tol = 1e-10;
    double dedup_tol = 1e-6;
};

struct DeformationConfig {
    std::string landscape = "linear";  // linear | saddle
    int dimension = 1;
    double h = 0.0;
    double eps = 0.1;
    std::vector<std::string> d_variants = {"empty", "mid_slab", "level_set"};
    double slab_margin = 0.01;
    int samples_per_set = 50;
    double tol = 1e-9;
    int traces = 3;  // representative trace CSVs to emit
};

struct OutputConfig {
    std::string dir = "out";
    bool csv = true;
};

struct ProblemConfig {
    int M = 6;
    std::uint64_t seed = 0;
    PotentialConfig potential;
    FunctionalConfig functional;
    ConditionsConfig conditions;
    SolverConfig solver;
    OracleConfig oracle;
    DeformationConfig deformation;
    OutputConfig output;
};

ProblemConfig parse_config(const nlohmann::json& j);
ProblemConfig load_config_file(const std::filesystem::path& path);
nlohmann::json config_to_json(const ProblemConfig& c);

PotentialSpec make_potential(const ProblemConfig& c);
FunctionalSpec make_functional(const ProblemConfig& c);
MountainGeometry make_geometry(const ProblemConfig& c, const FunctionalSpec& f);

}  // namespace dmp
