#ifndef AQUIFER_SCENARIO_HPP
#define AQUIFER_SCENARIO_HPP

#include <cmath>
#include <string>
#include <vector>

#include "aquifer/equilibrium.hpp"

// Parameter-sweep engine and reference-table reproduction.

namespace aquifer {

enum class Axis { Beta, Eta, Rho, Custom };

const char* axis_name(Axis a);
bool parse_axis(const std::string& text, Axis& out);

/// Returns a copy of `base` with the swept field replaced.  Axis::Custom
/// leaves the parameters untouched (the value is a row label only).
ModelParams with_axis_value(const ModelParams& base, Axis axis, double value);

struct SweepSpec {
    ModelParams base;
    Axis axis = Axis::Beta;
    std::vector<double> values;
    std::vector<Regime> regimes;
};

/// One table row; NaN marks cells that are undefined or not applicable.
struct TableRow {
    Regime regime;
    std::string scenario;
    double swept = NAN;
    double h = NAN, psi = NAN, gamma = NAN, mu = NAN, lambda = NAN, g = NAN,
           f = NAN;
    double u_full = NAN, u_zero = NAN, u_concave = NAN;
    bool consistent = false;
    bool within_bounds = false;
    std::string error;  // per-cell failures never abort a sweep
};

/// Evaluates every value x regime combination in spec order.
std::vector<TableRow> run_sweep(const SweepSpec& spec);

struct PolicyChoice {
    Regime regime;
    double U;
    bool consistent;  // false when the winner fails its feasibility checks
                      // or violates state bounds
    Equilibrium eq;
};

/// Welfare-maximizing regime among the admissible candidates (all four by
/// default); exact ties break toward higher water quality.  Throws
/// std::domain_error when the base parameters are invalid.
PolicyChoice best_policy(const ModelParams& p);
PolicyChoice best_policy(const ModelParams& p, const std::vector<Regime>& regimes);

enum class TableId { T1, T2, T3, T4, T5, A1, A2, A3 };

const char* table_name(TableId id);
bool parse_table_id(const std::string& text, TableId& out);

/// Base parameters of a reference table (the swept field is left at the
/// first row's value).
ModelParams table_params(TableId id);

/// Which parameter the table sweeps.
Axis table_axis(TableId id);

struct CellDiff {
    std::string cell;   // e.g. "T3[beta=0.435].g_e"
    double computed;
    double expected;
    double deviation;
    bool erratum;       // compared against a same-row-identity correction
    std::string note;
};

struct ColumnDeviation {
    std::string column;
    double max_dev;
};

struct ReproduceReport {
    TableId id;
    std::vector<TableRow> rows;  // regenerated rows, golden row order
    std::vector<ColumnDeviation> column_devs;
    std::vector<CellDiff> failures;  // deviation > tolerance
    std::vector<CellDiff> errata;    // documented inconsistent printed cells
    double tolerance = 1.5e-3;
    double max_deviation = 0.0;
    bool passed() const { return failures.empty(); }
    std::string summary() const;
};

/// Regenerates every populated cell of a reference table from its parameters
/// alone and diffs against the embedded golden values (tolerance absorbs the
/// tables' 3-decimal rounding).
ReproduceReport reproduce_table(TableId id);

/// CSV of a reproduced table in the golden table's shape (blank cells where
/// the reference leaves them blank).
std::string table_csv(const ReproduceReport& rep);

/// CSV/JSON of a generic sweep: full column set, one row per value x regime.
std::string sweep_csv(Axis axis, const std::vector<TableRow>& rows);
std::string sweep_json(Axis axis, const std::vector<TableRow>& rows);

}  // namespace aquifer

#endif
