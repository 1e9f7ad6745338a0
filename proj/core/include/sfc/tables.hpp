#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sfc {

/// One row: closed form against a simulation of the same quantity, next to the
/// values printed in the reference tables.
struct TableRow {
    double input = 0.0;           // force amplitude [N] or exponent n
    double analytic = 0.0;
    double numeric = 0.0;         // reproduced here
    double relative_error = 0.0;  // |analytic - numeric| / max(|numeric|, 1e-12)
    double reference_analytic = 0.0;
    double reference_numeric = 0.0;
    double residual = 0.0;        // numeric - reference_numeric
};

struct TableReport {
    int id = 0;
    std::string quantity;  // e.g. "bandwidth_rad_s"
    std::string input;     // e.g. "force_n"
    std::vector<TableRow> rows;
};

double relative_error(double analytic, double numeric);

/// SFC bandwidth, m = mu = 1, n = 3, A in {1, 10, 100}; numeric from the
/// default 60-point sweep.
TableReport table3();

/// SFC time constant with the fixed-manipulator SFC preset, A in {0.5, 5, 50};
/// numeric from step runs at dt = 1e-4 s.
TableReport table4();

/// Gain change over two decades of amplitude (1 N to 100 N), m = mu = 1,
/// n in {1, 3, 10, 100}; numeric from sine runs at a single low frequency.
TableReport table5();

/// Frequency used for the numeric gain-variation runs [rad/s].
inline constexpr double kGainVariationOmega = 0.02;

/// CSV: "input,analytic,numeric,relative_error,reference_analytic,reference_numeric,residual".
void write_table_csv(std::ostream& out, const TableReport& report);

}  // namespace sfc
