#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gupsim/dispersion.hpp"
#include "gupsim/gkg.hpp"
#include "gupsim/grid.hpp"
#include "gupsim/packet_analytic.hpp"

namespace gupsim::harness {

struct Tolerances {
    double v_g_rel = 0.005;
    double width_rel = 0.01;
    double norm_rel = 1e-8;
    double gkg_v_g_rel = 0.01;
};

// Optional generalized-KG leg of an experiment.
struct GKGRunConfig {
    GKGParams params;
    std::string solver = "spectral";  // "spectral" | "fd"
    double dt = 0.0;                  // fd only; 0 = auto from stability bound
};

struct ExperimentConfig {
    std::string id = "experiment";
    DispersionModel model;
    GaussianPacketSpec packet;
    KGrid k_grid;
    XGrid x_grid;
    std::vector<double> times;
    Tolerances tolerances;
    std::uint64_t seed = 0;
    std::string output_dir;  // empty = no files written
    bool emit_fields = false;
    std::optional<GKGRunConfig> gkg;

    // Throws ConfigInvalid naming the offending key.
    static ExperimentConfig from_json(const nlohmann::json& j);
    // JSON only; file extension must be .json.
    static ExperimentConfig load(const std::string& path);
    nlohmann::json to_json() const;
};

struct Comparison {
    std::string quantity;
    double predicted = 0.0;
    double measured = 0.0;
    double rel_dev = 0.0;
    double tolerance = 0.0;
    bool pass() const { return rel_dev <= tolerance; }
};

struct ComparisonReport {
    std::string experiment_id;
    std::vector<Comparison> comparisons;
    std::string sign_convention;  // empty when no gkg leg ran
    std::string environment;
    bool all_pass() const;
    nlohmann::json to_json() const;
};

// Deterministic given config + seed; writes declared outputs atomically.
ComparisonReport run_experiment(const ExperimentConfig& cfg);

// One report per value, aggregated sorted by parameter value. parameter is
// one of {alpha_prime, k0, alpha, m0}. Worker count capped by GUPSIM_THREADS.
// Writes report_<i>.json per value plus scan_summary.csv when output_dir set.
std::vector<ComparisonReport> scan(const ExperimentConfig& base, const std::string& parameter,
                                   std::vector<double> values);

// dispersion_exact.csv, dispersion_first_order.csv, dispersion_free.csv over
// the config's k-grid. Pole-guard rows are flagged, not dropped.
void emit_dispersion_curves(const ExperimentConfig& cfg, const std::string& dir);

std::string environment_fingerprint();

}  // namespace gupsim::harness
