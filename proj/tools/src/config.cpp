#include "sfc/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "sfc/errors.hpp"
#include "sfc/presets.hpp"

namespace sfc::cli {
namespace {

namespace fs = std::filesystem;

// Reads the keys of one JSON object and rejects anything left unread, so a
// misspelled key fails loudly instead of silently falling back to a default.
class Fields {
public:
    Fields(const json& j, std::string where) : j_(j), where_(std::move(where)) {
        if (!j_.is_object()) throw ConfigError(where_ + ": expected an object");
    }

    bool has(const std::string& key) const { return j_.contains(key); }

    const json& at(const std::string& key) {
        if (!j_.contains(key)) throw ConfigError(where_ + ": missing key '" + key + "'");
        used_.insert(key);
        return j_.at(key);
    }

    double number(const std::string& key) { return to_number(at(key), key); }

    std::optional<double> number_or(const std::string& key) {
        if (!has(key)) return std::nullopt;
        return number(key);
    }

    std::string text(const std::string& key) {
        const json& v = at(key);
        if (!v.is_string()) throw ConfigError(where_ + ": '" + key + "' must be a string");
        return v.get<std::string>();
    }

    bool flag(const std::string& key) {
        if (!has(key)) return false;
        const json& v = at(key);
        if (!v.is_boolean()) throw ConfigError(where_ + ": '" + key + "' must be true or false");
        return v.get<bool>();
    }

    std::vector<double> numbers(const std::string& key) {
        const json& v = at(key);
        if (!v.is_array()) throw ConfigError(where_ + ": '" + key + "' must be an array");
        std::vector<double> out;
        out.reserve(v.size());
        for (const auto& x : v) out.push_back(to_number(x, key));
        return out;
    }

    void finish() const {
        for (const auto& item : j_.items()) {
            if (!used_.count(item.key())) {
                throw ConfigError(where_ + ": unknown key '" + item.key() + "'");
            }
        }
    }

    const std::string& where() const { return where_; }

private:
    double to_number(const json& v, const std::string& key) const {
        if (!v.is_number()) throw ConfigError(where_ + ": '" + key + "' must be a number");
        const double x = v.get<double>();
        if (!std::isfinite(x)) throw ConfigError(where_ + ": '" + key + "' must be finite");
        return x;
    }

    const json& j_;
    std::string where_;
    std::set<std::string> used_;
};

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path.string());
    return buf.str();
}

std::optional<double> parse_double(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return x;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep)) out.push_back(cell);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

fs::path resolve(const fs::path& base, const std::string& name) {
    fs::path p(name);
    return p.is_absolute() ? p : base / p;
}

ControllerState state_from_json(const json& j) {
    Fields f(j, "initial_state");
    ControllerState s;
    s.velocity = f.number_or("velocity_m_s").value_or(0.0);
    s.position = f.number_or("position_m").value_or(0.0);
    f.finish();
    return s;
}

ForceSetBounds bounds_from_json(const json& j) {
    Fields f(j, "analyses.classify");
    ForceSetBounds b;
    b.force_threshold = f.number("force_threshold_n");
    b.impact_frequency = f.number("impact_frequency_hz");
    b.traction_frequency = f.number("traction_frequency_hz");
    if (auto floor = f.number_or("noise_floor_n")) b.noise_floor = *floor;
    f.finish();
    validate(b);
    return b;
}

Analyses analyses_from_json(const json& j) {
    Fields f(j, "analyses");
    Analyses a;
    a.step_metrics = f.flag("step_metrics");
    a.energy = f.flag("energy");
    if (f.has("classify")) a.classify = bounds_from_json(f.at("classify"));
    if (f.has("bode")) {
        Fields b(f.at("bode"), "analyses.bode");
        BodeRequest req;
        req.amplitudes = b.numbers("amplitudes_n");
        req.omegas = b.has("omega_rad_s") ? b.numbers("omega_rad_s") : default_omega_grid();
        b.finish();
        if (req.amplitudes.empty() || req.omegas.empty()) {
            throw ConfigError("analyses.bode: amplitudes and frequencies must be non-empty");
        }
        a.bode = std::move(req);
    }
    f.finish();
    return a;
}

}  // namespace

json read_json_file(const fs::path& path) {
    const std::string text = read_text(path);
    try {
        return json::parse(text, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

bool is_params_json(const json& j) {
    return j.is_object() && j.contains("type") && j.at("type").is_string() && !j.contains("input");
}

ParamsFile params_from_json(const json& j) {
    Fields f(j, "params");
    const std::string type = f.text("type");
    if (f.has("name")) f.text("name");
    ParamsFile out;
    if (type == "sfc") {
        SfcParams p;
        p.mass = f.number("mass_kg");
        p.viscosity = f.number("viscosity");
        p.exponent = f.number("exponent");
        p.gain = f.number("gain");
        out.params = p;
    } else if (type == "lac") {
        LacParams p;
        p.mass = f.number("mass_kg");
        p.damping = f.number("damping_ns_m");
        p.gain = f.number("gain");
        out.params = p;
    } else if (type == "nac") {
        NacParams p;
        p.mass = f.number("mass_kg");
        p.damping = f.number("damping_ns_m");
        p.extra_damping = f.number("extra_damping_ns_m");
        p.onset_force = f.number("onset_force_n");
        p.gain = f.number("gain");
        out.params = p;
    } else {
        throw ConfigError("params: unknown controller type '" + type + "' (expected sfc, lac or nac)");
    }
    out.dt = f.number_or("dt_s");
    f.finish();
    validate(out.params);
    if (out.dt && !(*out.dt > 0.0)) throw ConfigError("params: dt_s must be > 0");
    return out;
}

json params_to_json(const ControllerParams& p, std::optional<double> dt) {
    json j;
    j["type"] = std::string(kind_name(p));
    if (const auto* s = std::get_if<SfcParams>(&p)) {
        j["mass_kg"] = s->mass;
        j["viscosity"] = s->viscosity;
        j["exponent"] = s->exponent;
        j["gain"] = s->gain;
    } else if (const auto* l = std::get_if<LacParams>(&p)) {
        j["mass_kg"] = l->mass;
        j["damping_ns_m"] = l->damping;
        j["gain"] = l->gain;
    } else {
        const auto& n = std::get<NacParams>(p);
        j["mass_kg"] = n.mass;
        j["damping_ns_m"] = n.damping;
        j["extra_damping_ns_m"] = n.extra_damping;
        j["onset_force_n"] = n.onset_force;
        j["gain"] = n.gain;
    }
    if (dt) j["dt_s"] = *dt;
    return j;
}

ParamsFile preset_params(const std::string& name) {
    try {
        const Preset& p = find_preset(name);
        return {p.params, p.dt};
    } catch (const NotFoundError& e) {
        throw ConfigError(e.what());
    }
}

InputSignal input_from_json(const json& j, const fs::path& base_dir) {
    Fields f(j, "input");
    const std::string type = f.text("type");
    InputSignal signal;
    if (type == "step") {
        const double force = f.number("force_n");
        signal = InputSignal::step(force, f.number_or("onset_s").value_or(0.0));
    } else if (type == "impulse") {
        const double low = f.number("low_n");
        const double high = f.number("high_n");
        const double on = f.number("on_s");
        signal = InputSignal::impulse(low, high, on, f.number("off_s"));
    } else if (type == "traction_impact") {
        signal = InputSignal::traction_with_impact();
    } else if (type == "sine") {
        const double amplitude = f.number("amplitude_n");
        signal = InputSignal::sine(amplitude, f.number("omega_rad_s"));
    } else if (type == "recorded") {
        std::optional<double> dt = f.number_or("dt_s");
        std::vector<double> samples;
        if (f.has("file")) {
            std::optional<double> file_dt;
            samples = read_force_csv(resolve(base_dir, f.text("file")), &file_dt);
            if (!dt) dt = file_dt;
        } else {
            samples = f.numbers("samples_n");
        }
        if (!dt) throw ConfigError("input: recorded signal needs dt_s or a time column");
        signal = InputSignal::recorded(std::move(samples), *dt);
    } else if (type == "composite") {
        const json& parts = f.at("parts");
        if (!parts.is_array() || parts.empty()) throw ConfigError("input: 'parts' must be a non-empty array");
        std::vector<InputSignal> list;
        for (const auto& part : parts) list.push_back(input_from_json(part, base_dir));
        signal = InputSignal::composite(std::move(list));
    } else {
        throw ConfigError("input: unknown type '" + type + "'");
    }
    f.finish();
    return signal;
}

Scenario scenario_from_json(const json& j, const fs::path& base_dir, const std::string& preset_override) {
    Fields f(j, "scenario");
    Scenario sc;
    sc.name = f.has("name") ? f.text("name") : std::string("scenario");

    ParamsFile controller;
    if (f.has("controller")) {
        const json& c = f.at("controller");
        if (preset_override.empty()) {
            if (c.is_string()) {
                controller = preset_params(c.get<std::string>());
            } else if (c.is_object() && c.contains("file") && c.size() == 1) {
                controller = params_from_json(read_json_file(resolve(base_dir, c.at("file").get<std::string>())));
            } else {
                controller = params_from_json(c);
            }
        }
    } else if (preset_override.empty()) {
        throw ConfigError("scenario: no 'controller' and no --preset given");
    }
    if (!preset_override.empty()) controller = preset_params(preset_override);
    sc.controller = controller.params;

    sc.config.controller = controller.params;
    const std::optional<double> dt = f.number_or("dt_s");
    if (dt) {
        sc.config.dt = *dt;
    } else if (controller.dt) {
        sc.config.dt = *controller.dt;
    } else {
        throw ConfigError("scenario: dt_s is required when the controller has no design sample time");
    }
    sc.config.duration = f.number("duration_s");
    sc.config.input = input_from_json(f.at("input"), base_dir);
    if (f.has("initial_state")) sc.config.initial_state = state_from_json(f.at("initial_state"));
    if (f.has("human")) {
        Fields h(f.at("human"), "human");
        HumanModel human;
        human.mass = h.number("mass_kg");
        human.damping = h.number("damping_ns_m");
        h.finish();
        if (!(human.mass > 0.0) || !(human.damping > 0.0)) {
            throw ConfigError("human: mass_kg and damping_ns_m must be > 0");
        }
        human.intent = sc.config.input;
        sc.human = std::move(human);
    }
    if (f.has("analyses")) sc.analyses = analyses_from_json(f.at("analyses"));
    f.finish();
    validate(sc.config);
    return sc;
}

TuningRequirements requirements_from_json(const json& j) {
    Fields f(j, "requirements");
    TuningRequirements r;
    r.traction_force = f.number("traction_force_n");
    r.impact_force = f.number("impact_force_n");
    r.traction_velocity = f.number("traction_velocity_m_s");
    r.impact_velocity = f.number("impact_velocity_m_s");
    const bool rad = f.has("traction_bandwidth_rad_s");
    const bool hz = f.has("traction_bandwidth_hz");
    if (rad == hz) {
        throw ConfigError("requirements: give exactly one of traction_bandwidth_rad_s, traction_bandwidth_hz");
    }
    r.traction_bandwidth = rad ? f.number("traction_bandwidth_rad_s")
                               : 2.0 * std::numbers::pi * f.number("traction_bandwidth_hz");
    r.dt = f.number("dt_s");
    r.mass = f.number_or("mass_kg").value_or(1.0);
    f.finish();
    return r;
}

std::vector<double> read_force_csv(const fs::path& path, std::optional<double>* dt) {
    std::istringstream in(read_text(path));
    std::string line;
    std::vector<std::vector<double>> rows;
    int force_col = 0;
    int time_col = -1;
    bool first = true;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto cells = split(line, ',');
        if (first) {
            first = false;
            if (!parse_double(cells[0])) {
                force_col = -1;
                for (std::size_t i = 0; i < cells.size(); ++i) {
                    const std::string name = trim(cells[i]);
                    if (name == "f_ext") force_col = static_cast<int>(i);
                    if (name == "time") time_col = static_cast<int>(i);
                }
                if (force_col < 0) {
                    if (cells.size() != 1) throw ConfigError(path.string() + ": header has no 'f_ext' column");
                    force_col = 0;
                }
                continue;
            }
            if (cells.size() == 2) {
                time_col = 0;
                force_col = 1;
            } else if (cells.size() != 1) {
                throw ConfigError(path.string() + ": expected one column or a header naming f_ext");
            }
        }
        std::vector<double> row;
        for (const auto& cell : cells) {
            const auto x = parse_double(cell);
            if (!x || !std::isfinite(*x)) {
                throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": not a finite number");
            }
            row.push_back(*x);
        }
        const int needed = std::max(force_col, time_col);
        if (static_cast<int>(row.size()) <= needed) {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": missing column");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ConfigError(path.string() + ": no samples");

    std::vector<double> samples;
    samples.reserve(rows.size());
    for (const auto& r : rows) samples.push_back(r[static_cast<std::size_t>(force_col)]);
    if (dt != nullptr) {
        *dt = std::nullopt;
        if (time_col >= 0 && rows.size() >= 2) {
            const auto tc = static_cast<std::size_t>(time_col);
            const double span = rows.back()[tc] - rows.front()[tc];
            const double step = span / static_cast<double>(rows.size() - 1);
            for (std::size_t i = 1; i < rows.size(); ++i) {
                const double d = rows[i][tc] - rows[i - 1][tc];
                if (!(step > 0.0) || std::abs(d - step) > 1e-6 * step) {
                    throw ConfigError(path.string() + ": time column is not uniformly sampled");
                }
            }
            *dt = step;
        }
    }
    return samples;
}

Eigen::MatrixXd read_matrix_csv(const fs::path& path) {
    std::istringstream in(read_text(path));
    std::string line;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::vector<double> row;
        for (const auto& cell : split(line, ',')) {
            const auto x = parse_double(cell);
            if (!x) throw ConfigError(path.string() + ": not a number: '" + trim(cell) + "'");
            row.push_back(*x);
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ConfigError(path.string() + ": rows have different lengths");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ConfigError(path.string() + ": empty matrix");
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t k = 0; k < rows[i].size(); ++k) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rows[i][k];
        }
    }
    return m;
}

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& cell : split(text, ',')) {
        const auto x = parse_double(cell);
        if (!x) throw ConfigError("not a number: '" + trim(cell) + "'");
        out.push_back(*x);
    }
    if (out.empty()) throw ConfigError("empty number list");
    return out;
}

void write_atomic(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) {
            std::error_code ignored;
            fs::remove(tmp, ignored);
            throw IoError("cannot write " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw IoError("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

}  // namespace sfc::cli
