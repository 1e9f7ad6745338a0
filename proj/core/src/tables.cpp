#include "sfc/tables.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>

#include "sfc/describing.hpp"
#include "sfc/format.hpp"
#include "sfc/presets.hpp"
#include "sfc/sim.hpp"

namespace sfc {
namespace {

struct Printed {
    double input;
    double analytic;
    double numeric;
};

constexpr std::array<Printed, 3> kTable3 = {{{1.0, 1.05, 1.04}, {10.0, 4.90, 4.90}, {100.0, 22.75, 23.20}}};
constexpr std::array<Printed, 3> kTable4 = {{{0.5, 0.162, 0.145}, {5.0, 0.035, 0.032}, {50.0, 0.0076, 0.007}}};
constexpr std::array<Printed, 4> kTable5 = {
    {{1.0, 0.0, 0.0}, {3.0, -26.67, -26.67}, {10.0, -36.00, -36.00}, {100.0, -39.60, -39.60}}};

constexpr double kTable4Dt = 1e-4;
constexpr int kTable5Decades = 2;

TableRow make_row(const Printed& printed, double analytic, double numeric) {
    TableRow row;
    row.input = printed.input;
    row.analytic = analytic;
    row.numeric = numeric;
    row.relative_error = relative_error(analytic, numeric);
    row.reference_analytic = printed.analytic;
    row.reference_numeric = printed.numeric;
    row.residual = numeric - printed.numeric;
    return row;
}

}  // namespace

double relative_error(double analytic, double numeric) {
    return std::abs(analytic - numeric) / std::max(std::abs(numeric), 1e-12);
}

TableReport table3() {
    const SfcParams p{1.0, 1.0, 3.0, 1.0};
    const auto grid = default_omega_grid();
    std::vector<double> amplitudes;
    for (const auto& r : kTable3) amplitudes.push_back(r.input);
    const auto curves = numeric_bode(p, amplitudes, grid);

    TableReport report{3, "bandwidth_rad_s", "force_n", {}};
    for (std::size_t i = 0; i < kTable3.size(); ++i) {
        report.rows.push_back(make_row(kTable3[i], bandwidth_analytic(p, kTable3[i].input),
                                       numeric_bandwidth(curves[i])));
    }
    return report;
}

TableReport table4() {
    const SfcParams p = std::get<SfcParams>(find_preset("fixed_sfc").params);
    TableReport report{4, "time_constant_s", "force_n", {}};
    for (const auto& printed : kTable4) {
        const double tau = time_constant_analytic(p, printed.input);
        const double duration = std::max(1.0, 20.0 * tau);
        const SimTrace trace = step_response(p, printed.input, kTable4Dt, duration);
        report.rows.push_back(make_row(printed, tau, numeric_time_constant(trace)));
    }
    return report;
}

TableReport table5() {
    TableReport report{5, "gain_variation_db", "exponent", {}};
    const double low = 1.0;
    const double high = std::pow(10.0, kTable5Decades);
    const std::array<double, 2> amplitudes = {low, high};
    const std::array<double, 1> grid = {kGainVariationOmega};
    for (const auto& printed : kTable5) {
        const SfcParams p{1.0, 1.0, printed.input, 1.0};
        const auto curves = numeric_bode(p, amplitudes, grid);
        const double numeric = curves[1].points[0].gain_db - curves[0].points[0].gain_db;
        report.rows.push_back(make_row(printed, gain_variation(printed.input, kTable5Decades), numeric));
    }
    return report;
}

void write_table_csv(std::ostream& out, const TableReport& report) {
    out << "input,analytic,numeric,relative_error,reference_analytic,reference_numeric,residual\n";
    for (const auto& r : report.rows) {
        out << format_double(r.input) << ',' << format_double(r.analytic) << ','
            << format_double(r.numeric) << ',' << format_double(r.relative_error) << ','
            << format_double(r.reference_analytic) << ',' << format_double(r.reference_numeric) << ','
            << format_double(r.residual) << '\n';
    }
}

}  // namespace sfc
