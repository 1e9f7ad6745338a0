#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include "json.hpp"

#include "sfc/classifier.hpp"
#include "sfc/params.hpp"
#include "sfc/sim.hpp"
#include "sfc/tuner.hpp"

namespace sfc::cli {

using nlohmann::json;

/// A file could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses a JSON file; `//` and `/* */` comments are allowed. Throws IoError
/// if the file cannot be read and ConfigError if it is not valid JSON.
json read_json_file(const std::filesystem::path& path);

/// Controller parameters plus the sample time they were designed for, if the
/// source states one.
struct ParamsFile {
    ControllerParams params;
    std::optional<double> dt;
};

/// {"type": "sfc", "mass_kg", "viscosity", "exponent", "gain"}
/// {"type": "lac", "mass_kg", "damping_ns_m", "gain"}
/// {"type": "nac", "mass_kg", "damping_ns_m", "extra_damping_ns_m", "onset_force_n", "gain"}
/// each with an optional "dt_s" and "name". Unknown keys are rejected.
ParamsFile params_from_json(const json& j);
json params_to_json(const ControllerParams& p, std::optional<double> dt);

/// True when j looks like a params file rather than a scenario.
bool is_params_json(const json& j);

/// Input signal object; see the README for the accepted shapes. Relative file
/// names are resolved against base_dir.
InputSignal input_from_json(const json& j, const std::filesystem::path& base_dir);

struct BodeRequest {
    std::vector<double> amplitudes;  // [N]
    std::vector<double> omegas;      // [rad/s]
};

struct Analyses {
    bool step_metrics = false;
    bool energy = false;
    std::optional<ForceSetBounds> classify;
    std::optional<BodeRequest> bode;
};

struct Scenario {
    std::string name;
    ControllerParams controller;
    std::optional<HumanModel> human;  // intent is the scenario input
    SimConfig config;
    Analyses analyses;
};

/// Scenario object. "controller" is a preset name, an inline params object, or
/// {"file": path}. A non-empty preset_override replaces it. dt_s defaults to
/// the controller's design sample time when it has one.
Scenario scenario_from_json(const json& j, const std::filesystem::path& base_dir,
                            const std::string& preset_override);

/// Resolves a built-in preset name; throws ConfigError for unknown names.
ParamsFile preset_params(const std::string& name);

/// {"traction_force_n", "impact_force_n", "traction_velocity_m_s",
///  "impact_velocity_m_s", "traction_bandwidth_rad_s" | "traction_bandwidth_hz",
///  "dt_s", "mass_kg" (default 1)}
TuningRequirements requirements_from_json(const json& j);

/// Force record from CSV: a single numeric column, or a header row containing
/// "f_ext" (and "time" to infer dt). Returns the samples; *dt is set from the
/// time column when there is one.
std::vector<double> read_force_csv(const std::filesystem::path& path, std::optional<double>* dt);

/// Dense matrix from CSV, one row per line.
Eigen::MatrixXd read_matrix_csv(const std::filesystem::path& path);

/// Comma-separated numbers, e.g. "0.05,0".
std::vector<double> parse_number_list(const std::string& text);

/// Writes content to a temporary sibling file and renames it over path.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace sfc::cli
