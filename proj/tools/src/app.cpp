#include "sfc/cli/app.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "sfc/classifier.hpp"
#include "sfc/cli/config.hpp"
#include "sfc/describing.hpp"
#include "sfc/errors.hpp"
#include "sfc/kinematics.hpp"
#include "sfc/sim.hpp"
#include "sfc/stability.hpp"
#include "sfc/tables.hpp"
#include "sfc/tuner.hpp"

namespace sfc::cli {
namespace {

namespace fs = std::filesystem;

// Failure that carries its own exit code (constraint violations, detected
// divergence of a finite trace).
class ExitWith : public std::runtime_error {
public:
    ExitWith(int code, std::string kind, const std::string& what)
        : std::runtime_error(what), code_(code), kind_(std::move(kind)) {}
    int code() const { return code_; }
    const std::string& kind() const { return kind_; }

private:
    int code_;
    std::string kind_;
};

struct Globals {
    std::string config;
    std::string out;
    std::string preset;
    bool seedless = false;
};

struct Context {
    Globals g;
    std::ostream& out;
    std::ostream& err;
};

json report_json(const ConstraintReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"value", c.value}, {"bound", c.bound}, {"satisfied", c.satisfied}});
    }
    return {{"satisfied", r.satisfied}, {"bound_value", r.bound_value}, {"margin", r.margin}, {"checks", checks}};
}

json nullable(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

void emit(const Context& c, const std::string& content) {
    if (c.g.out.empty()) {
        c.out << content;
    } else {
        write_atomic(c.g.out, content);
    }
}

void print_summary(const Context& c, const json& j) {
    if (!c.g.out.empty()) c.out << j.dump() << '\n';
}

// Controller from --preset, or from --config when that is a params file.
ParamsFile load_controller(const Context& c) {
    if (!c.g.preset.empty()) return preset_params(c.g.preset);
    if (c.g.config.empty()) throw ConfigError("need --preset or --config with a params file");
    const json j = read_json_file(c.g.config);
    if (!is_params_json(j)) throw ConfigError(c.g.config + ": expected a params file");
    return params_from_json(j);
}

// ---------------------------------------------------------------- simulate

struct SimulateOpts {
    CLI::Option* dt = nullptr;
    CLI::Option* duration = nullptr;
    CLI::Option* step_force = nullptr;
    double dt_value = 0.0;
    double duration_value = 1.0;
    double step_force_value = 0.0;
    bool traction_impact = false;
};

Scenario scenario_from_params(const ParamsFile& pf, const SimulateOpts& o) {
    Scenario sc;
    sc.name = "params";
    sc.controller = pf.params;
    sc.config.controller = pf.params;
    if (o.step_force->count() > 0) {
        sc.config.input = InputSignal::step(o.step_force_value);
    } else if (o.traction_impact) {
        sc.config.input = InputSignal::traction_with_impact();
    } else {
        throw ConfigError("simulate: a params file needs --step-force-n or --traction-impact");
    }
    if (o.dt->count() == 0 && !pf.dt) throw ConfigError("simulate: --dt-s is required");
    sc.config.dt = pf.dt.value_or(0.0);
    sc.config.duration = o.duration_value;
    return sc;
}

// Oscillation check over the trailing quarter, when the drive is constant there.
std::optional<json> oscillation_summary(const Scenario& sc, const SimTrace& trace) {
    const std::size_t n = trace.size();
    if (n < 8) return std::nullopt;
    const std::size_t start = n - n / 4;
    const double f_tail = sc.config.input.at(trace.time[start]);
    for (std::size_t i = start; i < n; ++i) {
        if (sc.config.input.at(trace.time[i]) != f_tail) return std::nullopt;
    }
    const OscillationReport rep =
        detect_oscillation(trace.accel, trace.v_internal, steady_internal_velocity(sc.controller, f_tail));
    json j = {{"sign_changes", rep.sign_changes}, {"oscillatory", rep.oscillatory}, {"diverged", rep.diverged}};
    const double peak = sc.config.input.peak();
    if (peak > 0.0) {
        const double ratio = sc.config.dt / stable_step_limit(sc.controller, peak);
        j["sample_time_ratio"] = ratio;
        j["verdict"] = to_string(sample_time_verdict(ratio, rep));
    } else {
        j["sample_time_ratio"] = nullptr;
        j["verdict"] = to_string(sample_time_verdict(0.0, rep));
    }
    return j;
}

json step_metrics(const Scenario& sc, const SimTrace& trace) {
    json j;
    j["final_v_output"] = trace.v_output.back();
    double onset = 0.0;
    if (const auto* s = std::get_if<signal::Step>(&sc.config.input.kind())) onset = s->onset;
    if (!sc.human) {
        j["steady_state_v_output"] = steady_state_velocity(sc.controller, sc.config.input.at(trace.time.back()));
    }
    try {
        j["time_constant_s"] = numeric_time_constant(trace, onset);
    } catch (const NotFoundError& e) {
        j["time_constant_s"] = nullptr;
        j["time_constant_error"] = e.what();
    }
    return j;
}

json energy_summary(const Scenario& sc, const SimTrace& trace) {
    const PassivityResult pr = check_passivity(trace, mass_of(sc.controller));
    return {{"work_in_j", trace.work_in.back()},
            {"dissipated_j", trace.dissipated.back()},
            {"storage_j", trace.storage.back()},
            {"passivity",
             {{"satisfied", pr.satisfied}, {"worst_excess_j", pr.worst_excess}, {"worst_row", pr.worst_row}}}};
}

json class_json(const ForceClass& fc) {
    return {{"label", std::string(to_string(fc.label))},
            {"f_max_n", fc.f_max},
            {"w_max_hz", fc.w_max},
            {"w_min_hz", fc.w_min}};
}

std::optional<double> try_bandwidth(const BodeCurve& curve) {
    try {
        return numeric_bandwidth(curve);
    } catch (const NotFoundError&) {
        return std::nullopt;
    }
}

int cmd_simulate(Context& c, const SimulateOpts& o) {
    Scenario sc;
    if (!c.g.config.empty()) {
        const json j = read_json_file(c.g.config);
        if (is_params_json(j)) {
            ParamsFile pf = c.g.preset.empty() ? params_from_json(j) : preset_params(c.g.preset);
            sc = scenario_from_params(pf, o);
        } else {
            sc = scenario_from_json(j, fs::path(c.g.config).parent_path(), c.g.preset);
        }
    } else if (!c.g.preset.empty()) {
        sc = scenario_from_params(preset_params(c.g.preset), o);
    } else {
        throw ConfigError("simulate: need --config or --preset");
    }
    if (o.dt->count() > 0) sc.config.dt = o.dt_value;
    if (o.duration->count() > 0) sc.config.duration = o.duration_value;
    validate(sc.config);

    const SimTrace trace = sc.human ? run_coupled(sc.config, *sc.human) : run(sc.config);

    json summary;
    summary["scenario"] = sc.name;
    summary["controller"] = params_to_json(sc.controller, std::nullopt);
    summary["dt_s"] = sc.config.dt;
    summary["rows"] = trace.size();
    summary["coupled"] = sc.human.has_value();
    summary["final_v_output"] = trace.v_output.back();
    const auto peak = std::max_element(trace.v_output.begin(), trace.v_output.end(),
                                       [](double a, double b) { return std::abs(a) < std::abs(b); });
    summary["peak_v_output"] = *peak;
    const auto osc = oscillation_summary(sc, trace);
    summary["oscillation"] = osc ? *osc : json(nullptr);
    if (sc.analyses.step_metrics) summary["step_metrics"] = step_metrics(sc, trace);
    if (sc.analyses.energy) summary["energy"] = energy_summary(sc, trace);
    if (sc.analyses.classify) {
        summary["classify"] = class_json(classify(trace.f_ext, sc.config.dt, *sc.analyses.classify));
    }
    if (sc.analyses.bode) {
        const auto curves = numeric_bode(sc.controller, sc.analyses.bode->amplitudes, sc.analyses.bode->omegas);
        json list = json::array();
        for (const auto& curve : curves) {
            list.push_back({{"amplitude_n", curve.amplitude}, {"bandwidth_rad_s", nullable(try_bandwidth(curve))}});
        }
        summary["bode"] = list;
    }

    std::ostringstream csv;
    trace.write_csv(csv);
    emit(c, csv.str());
    print_summary(c, summary);

    if (osc && (*osc)["diverged"].get<bool>()) {
        throw ExitWith(kDivergence, "divergence",
                       "simulation diverged: |v| exceeded 10x the steady velocity");
    }
    return kOk;
}

// ---------------------------------------------------------------- bode

struct BodeOpts {
    std::string amplitudes = "1,10,100";
    double omega_min = 0.01;
    double omega_max = 100.0;
    std::size_t points = 60;
    bool analytic = false;
};

int cmd_bode(Context& c, const BodeOpts& o) {
    const ParamsFile pf = load_controller(c);
    const auto amplitudes = parse_number_list(o.amplitudes);
    for (double a : amplitudes) {
        if (!(a > 0.0)) throw ConfigError("bode: amplitudes must be > 0");
    }
    if (!(o.omega_min > 0.0) || !(o.omega_max > o.omega_min) || o.points < 2) {
        throw ConfigError("bode: need 0 < omega-min < omega-max and at least 2 points");
    }
    const auto grid = log_grid(o.omega_min, o.omega_max, o.points);

    std::vector<BodeCurve> curves;
    if (o.analytic) {
        const auto* sfc = std::get_if<SfcParams>(&pf.params);
        if (sfc == nullptr) throw ConfigError("bode: --analytic needs an SFC controller");
        for (double a : amplitudes) curves.push_back(analytic_bode(*sfc, a, grid));
    } else {
        curves = numeric_bode(pf.params, amplitudes, grid);
    }

    std::ostringstream csv;
    write_bode_csv(csv, curves);
    emit(c, csv.str());

    json list = json::array();
    for (const auto& curve : curves) {
        list.push_back({{"amplitude_n", curve.amplitude}, {"bandwidth_rad_s", nullable(try_bandwidth(curve))}});
    }
    print_summary(c, {{"controller", params_to_json(pf.params, pf.dt)},
                      {"mode", o.analytic ? "analytic" : "numeric"},
                      {"curves", list}});
    return kOk;
}

// ---------------------------------------------------------------- check

struct CheckOpts {
    double f_max = 0.0;
    CLI::Option* dt = nullptr;
    double dt_value = 0.0;
    CLI::Option* omega = nullptr;
    double omega_value = 0.0;
    bool study = false;
};

int cmd_check(Context& c, const CheckOpts& o) {
    const ParamsFile pf = load_controller(c);
    if (!(o.f_max > 0.0)) throw ConfigError("check: --f-max-n must be > 0");
    if (o.dt->count() == 0 && !pf.dt) throw ConfigError("check: --dt-s is required");
    const double dt = o.dt->count() > 0 ? o.dt_value : *pf.dt;
    if (!(dt > 0.0)) throw ConfigError("check: dt must be > 0");

    json j;
    j["controller"] = params_to_json(pf.params, std::nullopt);
    j["dt_s"] = dt;
    j["f_max_n"] = o.f_max;

    ConstraintReport report;
    if (const auto* sfc = std::get_if<SfcParams>(&pf.params)) {
        std::vector<ConstraintCheck> checks = sample_time_check(*sfc, o.f_max, dt).checks;
        const double b = worst_case_amplitude(*sfc, o.f_max);
        j["worst_case_amplitude_m_s"] = b;
        if (o.omega->count() > 0) {
            const auto coupled = coupled_stability_check({*sfc, b, o.omega_value, dt});
            checks.insert(checks.end(), coupled.checks.begin(), coupled.checks.end());
            const double x = dt * o.omega_value;
            if (x > 0.0 && x < std::numbers::pi) {
                j["apparent_admittance_phase_rad"] = apparent_admittance_phase(*sfc, b, o.omega_value, dt);
            }
        } else {
            checks.push_back(make_check("Q", coupling_factor(*sfc, b, dt), 1.0));
        }
        report = make_report(std::move(checks));
        if (o.study) {
            const SampleTimeStudy s = study_sample_time(*sfc, o.f_max, dt);
            j["study"] = {{"bound_s", s.bound},
                          {"ratio", s.ratio},
                          {"sign_changes", s.detector.sign_changes},
                          {"verdict", to_string(s.verdict)}};
        }
    } else {
        if (o.study) throw ConfigError("check: --study needs an SFC controller");
        report = make_report({make_check("sample_time", dt, stable_step_limit(pf.params, o.f_max))});
    }
    j["report"] = report_json(report);

    const std::string text = j.dump() + "\n";
    if (c.g.out.empty()) {
        c.out << text;
    } else {
        write_atomic(c.g.out, text);
        c.out << text;
    }
    if (!report.satisfied) {
        throw ExitWith(kConstraintViolated, "constraint_violated",
                       "check: constraint violated (margin " + json(report.margin).dump() + ")");
    }
    return kOk;
}

// ---------------------------------------------------------------- tune

struct TuneOpts {
    CLI::Option* bandwidth_hz = nullptr;
    double bandwidth_hz_value = 0.0;
};

int cmd_tune(Context& c, const TuneOpts& o) {
    if (c.g.config.empty()) throw ConfigError("tune: --config with the requirements is required");
    TuningRequirements req = requirements_from_json(read_json_file(c.g.config));
    if (o.bandwidth_hz->count() > 0) req.traction_bandwidth = 2.0 * std::numbers::pi * o.bandwidth_hz_value;

    const TunedParams tuned = tune(req);
    const ConstraintReport report = verify_tuning(tuned, req);
    const json params = params_to_json(tuned.params, req.dt);

    json j;
    j["params"] = params;
    j["traction_bandwidth_rad_s"] = req.traction_bandwidth;
    j["traction_bandwidth_effective_rad_s"] = tuned.traction_bandwidth_effective;
    j["bandwidth_adjusted"] = tuned.bandwidth_adjusted;
    j["impact_bandwidth_rad_s"] = tuned.impact_bandwidth;
    j["verification"] = report_json(report);

    if (!c.g.out.empty()) write_atomic(c.g.out, params.dump(2) + "\n");
    c.out << j.dump() << '\n';
    if (!report.satisfied) {
        throw ExitWith(kConstraintViolated, "constraint_violated", "tune: verification failed");
    }
    return kOk;
}

// ---------------------------------------------------------------- classify

struct ClassifyOpts {
    std::string input;
    CLI::Option* dt = nullptr;
    double dt_value = 0.0;
    ForceSetBounds bounds;
};

int cmd_classify(Context& c, const ClassifyOpts& o) {
    std::optional<double> dt;
    const auto samples = read_force_csv(o.input, &dt);
    if (o.dt->count() > 0) dt = o.dt_value;
    if (!dt) throw ConfigError("classify: no time column, --dt-s is required");
    const ForceClass fc = classify(samples, *dt, o.bounds);
    json j = class_json(fc);
    j["samples"] = samples.size();
    j["dt_s"] = *dt;
    const std::string text = j.dump() + "\n";
    if (!c.g.out.empty()) write_atomic(c.g.out, text);
    c.out << text;
    return kOk;
}

// ---------------------------------------------------------------- ik

struct IkOpts {
    std::string jacobian;
    std::string velocity;
    DlsConfig dls;
};

int cmd_ik(Context& c, const IkOpts& o) {
    const Eigen::MatrixXd j = read_matrix_csv(o.jacobian);
    const auto v = parse_number_list(o.velocity);
    const Eigen::VectorXd task = Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
    validate(o.dls);
    if (task.size() != j.rows()) {
        throw DomainError("ik: velocity has " + std::to_string(task.size()) + " entries, Jacobian has " +
                          std::to_string(j.rows()) + " rows");
    }
    const DlsResult r = dls_solve(j, o.dls);
    const Eigen::VectorXd q = r.inverse * task;
    json out;
    out["joint_velocity"] = std::vector<double>(q.data(), q.data() + q.size());
    out["branch"] = r.branch == DlsBranch::FullRank ? "full_rank" : "damped";
    out["sigma_min"] = r.sigma_min;
    const std::string text = out.dump() + "\n";
    if (!c.g.out.empty()) write_atomic(c.g.out, text);
    c.out << text;
    return kOk;
}

// ---------------------------------------------------------------- tables

struct TablesOpts {
    std::string which = "3,4,5";
};

json table_json(const TableReport& t) {
    json rows = json::array();
    for (const auto& r : t.rows) {
        rows.push_back({{"input", r.input},
                        {"analytic", r.analytic},
                        {"numeric", r.numeric},
                        {"relative_error", r.relative_error},
                        {"reference_analytic", r.reference_analytic},
                        {"reference_numeric", r.reference_numeric},
                        {"residual", r.residual}});
    }
    return {{"id", t.id}, {"quantity", t.quantity}, {"input", t.input}, {"rows", rows}};
}

int cmd_tables(Context& c, const TablesOpts& o) {
    std::vector<int> ids;
    for (double x : parse_number_list(o.which)) {
        if (x != 3.0 && x != 4.0 && x != 5.0) throw ConfigError("tables: --which takes a subset of 3,4,5");
        const int id = static_cast<int>(x);
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    }
    if (!c.g.out.empty()) fs::create_directories(c.g.out);

    json all = json::array();
    for (int id : ids) {
        const TableReport t = id == 3 ? table3() : id == 4 ? table4() : table5();
        std::ostringstream csv;
        write_table_csv(csv, t);
        if (c.g.out.empty()) {
            c.out << "# table " << id << '\n' << csv.str();
        } else {
            write_atomic(fs::path(c.g.out) / ("table" + std::to_string(id) + ".csv"), csv.str());
        }
        all.push_back(table_json(t));
    }
    print_summary(c, {{"tables", all}});
    return kOk;
}

void report_error(std::ostream& err, int code, const std::string& kind, const std::string& message) {
    err << json{{"error", kind}, {"exit_code", code}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Context c{{}, out, err};

    // A bare flag only: "--seedless=..." would otherwise be read as a boolean.
    for (const auto& a : args) {
        if (a.rfind("--seedless=", 0) == 0) {
            report_error(err, kInvalidInput, "invalid_input", "--seedless takes no value");
            return kInvalidInput;
        }
    }

    CLI::App app{"Shear-thickening fluid controller lab", "sfc_lab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--config", c.g.config, "Scenario, params or requirements file (JSON)");
    app.add_option("--out", c.g.out, "Output file (directory for tables)");
    app.add_option("--preset", c.g.preset, "Built-in parameter preset");
    app.add_flag("--seedless", c.g.seedless, "Accepted for compatibility; nothing here is random");

    SimulateOpts sim_o;
    auto* sim = app.add_subcommand("simulate", "Run a scenario and write the trace CSV");
    sim_o.dt = sim->add_option("--dt-s", sim_o.dt_value, "Override the sample time");
    sim_o.duration = sim->add_option("--duration-s", sim_o.duration_value, "Run length");
    sim_o.step_force = sim->add_option("--step-force-n", sim_o.step_force_value, "Step input for params files");
    sim->add_flag("--traction-impact", sim_o.traction_impact, "5 N traction with a 50 N impact on [0.6, 1) s");

    BodeOpts bode_o;
    auto* bode = app.add_subcommand("bode", "Frequency response at several force amplitudes");
    bode->add_option("--amplitudes-n", bode_o.amplitudes, "Comma-separated force amplitudes");
    bode->add_option("--omega-min", bode_o.omega_min, "Lowest frequency [rad/s]");
    bode->add_option("--omega-max", bode_o.omega_max, "Highest frequency [rad/s]");
    bode->add_option("--points", bode_o.points, "Log-spaced grid size");
    bode->add_flag("--analytic", bode_o.analytic, "Describing-function curves instead of simulation");

    CheckOpts check_o;
    auto* check = app.add_subcommand("check", "Sample-time and coupled-stability constraints");
    check->add_option("--f-max-n", check_o.f_max, "Largest expected force")->required();
    check_o.dt = check->add_option("--dt-s", check_o.dt_value, "Sample time (default: the preset's)");
    check_o.omega = check->add_option("--omega-rad-s", check_o.omega_value, "Interaction frequency");
    check->add_flag("--study", check_o.study, "Also simulate a step at f_max and classify the response");

    TuneOpts tune_o;
    auto* tune_cmd = app.add_subcommand("tune", "Derive SFC parameters from interaction requirements");
    tune_o.bandwidth_hz = tune_cmd->add_option("--bandwidth-hz", tune_o.bandwidth_hz_value,
                                               "Traction bandwidth in Hz (converted to rad/s)");

    ClassifyOpts cls_o;
    auto* cls = app.add_subcommand("classify", "Label a force record contactless/traction/impact");
    cls->add_option("--input", cls_o.input, "CSV with one column or a time,f_ext header")->required();
    cls_o.dt = cls->add_option("--dt-s", cls_o.dt_value, "Sample spacing when there is no time column");
    cls->add_option("--force-threshold-n", cls_o.bounds.force_threshold)->required();
    cls->add_option("--impact-hz", cls_o.bounds.impact_frequency)->required();
    cls->add_option("--traction-hz", cls_o.bounds.traction_frequency)->required();
    cls->add_option("--noise-floor-n", cls_o.bounds.noise_floor);

    IkOpts ik_o;
    auto* ik = app.add_subcommand("ik", "Joint velocities for a task velocity (damped least squares)");
    ik->add_option("--jacobian", ik_o.jacobian, "Jacobian CSV, one row per line")->required();
    ik->add_option("--velocity", ik_o.velocity, "Comma-separated task velocity")->required();
    ik->add_option("--epsilon", ik_o.dls.epsilon, "sigma_min threshold");
    ik->add_option("--lambda", ik_o.dls.lambda, "Damping");

    TablesOpts tab_o;
    auto* tables = app.add_subcommand("tables", "Reproduce the bandwidth, time-constant and gain tables");
    tables->add_option("--which", tab_o.which, "Subset of 3,4,5");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        report_error(err, kInvalidInput, "invalid_input", e.what());
        return kInvalidInput;
    }

    try {
        if (sim->parsed()) return cmd_simulate(c, sim_o);
        if (bode->parsed()) return cmd_bode(c, bode_o);
        if (check->parsed()) return cmd_check(c, check_o);
        if (tune_cmd->parsed()) return cmd_tune(c, tune_o);
        if (cls->parsed()) return cmd_classify(c, cls_o);
        if (ik->parsed()) return cmd_ik(c, ik_o);
        if (tables->parsed()) return cmd_tables(c, tab_o);
        report_error(err, kInvalidInput, "invalid_input", "no subcommand");
        return kInvalidInput;
    } catch (const ExitWith& e) {
        report_error(err, e.code(), e.kind(), e.what());
        return e.code();
    } catch (const DivergenceError& e) {
        report_error(err, kDivergence, "divergence", e.what());
        return kDivergence;
    } catch (const InfeasibleError& e) {
        report_error(err, kInfeasible, "infeasible", e.what());
        return kInfeasible;
    } catch (const NotFoundError& e) {
        report_error(err, kNotFound, "not_found", e.what());
        return kNotFound;
    } catch (const NumericError& e) {
        report_error(err, kNumericError, "numeric_error", e.what());
        return kNumericError;
    } catch (const IoError& e) {
        report_error(err, kIoError, "io_error", e.what());
        return kIoError;
    } catch (const fs::filesystem_error& e) {
        report_error(err, kIoError, "io_error", e.what());
        return kIoError;
    } catch (const ConfigError& e) {
        report_error(err, kInvalidInput, "invalid_input", e.what());
        return kInvalidInput;
    } catch (const DomainError& e) {
        report_error(err, kInvalidInput, "invalid_input", e.what());
        return kInvalidInput;
    } catch (const json::exception& e) {
        report_error(err, kInvalidInput, "invalid_input", e.what());
        return kInvalidInput;
    } catch (const std::exception& e) {
        report_error(err, kInternal, "internal", e.what());
        return kInternal;
    }
}

}  // namespace sfc::cli
