#pragma once

#include "sflow/measures.hpp"
#include "sflow/orbit_io.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace sflow {

using Json = nlohmann::ordered_json;

/// Every free constant of the run is a config field or derived-and-logged.
struct PipelineConfig {
    // system
    std::string builtin = "lorenz"; // "lorenz" | "hopf" | "" (custom)
    Json custom_system;             // inline system definition when builtin is ""
    std::map<std::string, double> system_params;

    Vec seed_state;           // defaults per system
    double transient = 100.0; // spin-up discarded before the window
    double window = 2000.0;
    double stride = 0.01;
    double tol = 1e-10;
    double alpha_min = 1e-3;
    double escape_radius = 1e4;

    // spectrum / splitting
    double gap_floor = 0.05;
    double spectral_epsilon = 0.0; // <= 0: chi/8
    double domination_window_cap = 50.0;
    double domination_lambda_min = 0.05;

    // Pesin block
    double block_T0 = 1.0;
    double target_block_fraction = 0.5;
    double block_C = 0.0; // <= 0: smallest C reaching the target fraction

    // strings
    double eta_rate = 0.0; // <= 0: 0.3 * spectral gap
    double pliss_T = 1.0;

    // shadowing
    std::vector<double> D_schedule = {1.0, 0.5, 0.25};
    int close_per_bucket = 6;
    double section_span = 0.5;
    double min_return_duration = 1.5;
    double max_return_duration = 8.0; // residual certificate needs e^(lambda T) tame
    double newton_tol = 1e-11;
    double shoot_tol = 1e-12;
    double shadow_epsilon = 0.2;
    size_t max_candidates = 256;

    // measures
    size_t basis_n = 6;
    double epsilon = 0.1; // d_M target
    std::optional<std::pair<Vec, Vec>> box;

    std::string out_dir = "out";
    int threads = 1;
};

/// Parses and validates; throws ConfigError on any violated constraint.
PipelineConfig load_config(const std::string& json_text);
PipelineConfig load_config_file(const std::string& path);

struct StageResult {
    std::string stage;
    bool ok = false;
    std::string code; // machine-readable failure tag when !ok
    std::string message;
};

/// One stage each, reading the previous stage's caches from the output
/// directory (MissingCache when absent). Idempotent for identical caches.
StageResult run_simulate(const PipelineConfig& cfg);
StageResult run_spectrum(const PipelineConfig& cfg);
StageResult run_strings(const PipelineConfig& cfg);
StageResult run_close(const PipelineConfig& cfg);
StageResult run_compare(const PipelineConfig& cfg);
StageResult emit_plots(const PipelineConfig& cfg);

/// The whole chain; exit code 0 iff a periodic measure with
/// dm value + tail < epsilon was produced.
int run_pipeline(const PipelineConfig& cfg);

/// Rebuilds manifest.json (relative path, size, fnv1a64 per artifact).
void write_manifest(const std::string& out_dir);

/// Default attractor boxes used when the config leaves the box unset.
std::pair<Vec, Vec> default_box(const std::string& system_name);

FlowPtr system_from_config(const PipelineConfig& cfg);

} // namespace sflow
