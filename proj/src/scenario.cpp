#include "aquifer/scenario.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "golden_tables.hpp"

namespace aquifer {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string cell_text(double v) { return std::isnan(v) ? "" : num(v); }

}  // namespace

const char* axis_name(Axis a) {
    switch (a) {
        case Axis::Beta: return "beta";
        case Axis::Eta: return "eta";
        case Axis::Rho: return "rho";
        case Axis::Custom: return "value";
    }
    return "?";
}

bool parse_axis(const std::string& text, Axis& out) {
    if (text == "beta") { out = Axis::Beta; return true; }
    if (text == "eta") { out = Axis::Eta; return true; }
    if (text == "rho") { out = Axis::Rho; return true; }
    if (text == "custom" || text == "value") { out = Axis::Custom; return true; }
    return false;
}

ModelParams with_axis_value(const ModelParams& base, Axis axis, double value) {
    ModelParams p = base;
    switch (axis) {
        case Axis::Beta: p.beta = value; break;
        case Axis::Eta: p.eta = value; break;
        case Axis::Rho: p.rho = value; break;
        case Axis::Custom: break;
    }
    return p;
}

namespace {

TableRow make_row(const ModelParams& p, Regime regime, double swept) {
    TableRow row;
    row.regime = regime;
    row.scenario = regime_name(regime);
    row.swept = swept;
    try {
        const Equilibrium e = [&] {
            switch (regime) {
                case Regime::LinearZero: return linear_equilibrium(p, 0);
                case Regime::LinearFull: return linear_equilibrium(p, 1);
                case Regime::Concave: return concave_equilibrium(p);
                default: return benchmark_equilibrium(p);
            }
        }();
        row.h = e.h;
        row.psi = e.psi;
        row.gamma = e.gamma;
        row.mu = e.mu;
        row.lambda = e.lambda;
        row.g = e.g;
        row.f = e.f;
        switch (regime) {
            case Regime::Benchmark:
            case Regime::LinearZero: row.u_zero = e.U; break;
            case Regime::LinearFull: row.u_full = e.U; break;
            case Regime::Concave: row.u_concave = e.U; break;
        }
        row.consistent = e.consistent;
        row.within_bounds = e.within_bounds;
    } catch (const std::exception& ex) {
        row.error = ex.what();
    }
    return row;
}

}  // namespace

std::vector<TableRow> run_sweep(const SweepSpec& spec) {
    std::vector<TableRow> rows;
    rows.reserve(spec.values.size() * spec.regimes.size());
    for (double v : spec.values) {
        const ModelParams p = with_axis_value(spec.base, spec.axis, v);
        for (Regime r : spec.regimes) rows.push_back(make_row(p, r, v));
    }
    return rows;
}

PolicyChoice best_policy(const ModelParams& p) {
    return best_policy(p, {Regime::Benchmark, Regime::LinearZero,
                           Regime::LinearFull, Regime::Concave});
}

PolicyChoice best_policy(const ModelParams& p, const std::vector<Regime>& regimes) {
    if (!validate_params(p).overall)
        throw std::domain_error("best_policy: base parameters invalid, no feasible regime");

    std::vector<Equilibrium> candidates;
    for (Regime r : regimes) {
        switch (r) {
            case Regime::Benchmark:
            case Regime::LinearZero:
                candidates.push_back(benchmark_equilibrium(p));
                candidates.back().regime = r;
                break;
            case Regime::LinearFull:
                // With beta <= 0 the switching rule pins gamma* = 0; full
                // application is inadmissible, not merely inconsistent.
                if (p.beta > 0.0) candidates.push_back(linear_equilibrium(p, 1));
                break;
            case Regime::Concave:
                if (p.beta > 0.0) {
                    try {
                        candidates.push_back(concave_equilibrium(p));
                    } catch (const InfeasibleError&) {
                    }
                }
                break;
        }
    }
    if (candidates.empty())
        throw std::domain_error("best_policy: no admissible regime");

    const Equilibrium* best = &candidates[0];
    for (const Equilibrium& e : candidates) {
        if (e.U > best->U || (e.U == best->U && e.psi > best->psi)) best = &e;
    }
    PolicyChoice choice;
    choice.regime = best->regime;
    choice.U = best->U;
    choice.consistent = best->consistent && best->within_bounds;
    choice.eq = *best;
    return choice;
}

const char* table_name(TableId id) {
    switch (id) {
        case TableId::T1: return "T1";
        case TableId::T2: return "T2";
        case TableId::T3: return "T3";
        case TableId::T4: return "T4";
        case TableId::T5: return "T5";
        case TableId::A1: return "A1";
        case TableId::A2: return "A2";
        case TableId::A3: return "A3";
    }
    return "?";
}

bool parse_table_id(const std::string& text, TableId& out) {
    static const std::pair<const char*, TableId> ids[] = {
        {"T1", TableId::T1}, {"T2", TableId::T2}, {"T3", TableId::T3},
        {"T4", TableId::T4}, {"T5", TableId::T5}, {"A1", TableId::A1},
        {"A2", TableId::A2}, {"A3", TableId::A3}};
    for (const auto& [name, id] : ids) {
        if (text == name) { out = id; return true; }
    }
    return false;
}

ModelParams table_params(TableId id) { return golden::table(id).params; }

Axis table_axis(TableId id) { return golden::table(id).axis; }

namespace {

double row_value(const TableRow& row, golden::Col col) {
    switch (col) {
        case golden::Col::H: return row.h;
        case golden::Col::Psi: return row.psi;
        case golden::Col::Gamma: return row.gamma;
        case golden::Col::Mu: return row.mu;
        case golden::Col::Lambda: return row.lambda;
        case golden::Col::G: return row.g;
        case golden::Col::F: return row.f;
        case golden::Col::UFull: return row.u_full;
        case golden::Col::UZero: return row.u_zero;
        case golden::Col::UConcave: return row.u_concave;
    }
    return NAN;
}

// U columns are regime-definitions rather than row properties (A3 rows carry
// the hypothetical full-fertilizer utility next to zero-fertilizer state
// columns), so fill any populated U cell from its own regime.
void fill_extra_u(TableRow& row, const ModelParams& p, const golden::Row& want) {
    if (!std::isnan(want.cells[static_cast<int>(golden::Col::UFull)]) &&
        std::isnan(row.u_full))
        row.u_full = linear_equilibrium(p, 1).U;
    if (!std::isnan(want.cells[static_cast<int>(golden::Col::UZero)]) &&
        std::isnan(row.u_zero))
        row.u_zero = benchmark_equilibrium(p).U;
    if (!std::isnan(want.cells[static_cast<int>(golden::Col::UConcave)]) &&
        std::isnan(row.u_concave))
        row.u_concave = concave_equilibrium(p).U;
}

}  // namespace

std::string ReproduceReport::summary() const {
    std::ostringstream os;
    os << table_name(id) << ": " << (passed() ? "pass" : "FAIL")
       << ", max deviation " << num(max_deviation) << " (tolerance "
       << num(tolerance) << ", " << rows.size() << " rows)";
    for (const auto& e : errata)
        os << "\n  erratum " << e.cell << ": computed " << num(e.computed)
           << ", reference prints " << num(e.expected) << " — " << e.note;
    for (const auto& f : failures)
        os << "\n  FAIL " << f.cell << ": computed " << num(f.computed)
           << ", expected " << num(f.expected) << ", |dev| " << num(f.deviation);
    return os.str();
}

ReproduceReport reproduce_table(TableId id) {
    const golden::Table& gt = golden::table(id);
    ReproduceReport rep;
    rep.id = id;

    std::vector<double> col_dev(10, 0.0);
    for (size_t i = 0; i < gt.rows.size(); ++i) {
        const golden::Row& want = gt.rows[i];
        const ModelParams p = with_axis_value(gt.params, gt.axis, want.swept);
        TableRow got = make_row(p, want.regime, want.swept);
        fill_extra_u(got, p, want);
        rep.rows.push_back(got);

        for (golden::Col col : gt.columns) {
            const int ci = static_cast<int>(col);
            double expected = want.cells[ci];
            if (std::isnan(expected)) continue;

            const golden::Erratum* err = nullptr;
            for (const auto& e : gt.errata)
                if (e.row == static_cast<int>(i) && e.col == col) err = &e;

            CellDiff diff;
            diff.cell = std::string(table_name(id)) + "[" + axis_name(gt.axis) +
                        "=" + num(want.swept) + "," + got.scenario + "]." +
                        golden::col_name(col);
            diff.computed = row_value(got, col);
            diff.erratum = err != nullptr;
            if (err) {
                diff.note = err->note;
                diff.expected = expected;  // keep the printed value in the report
                diff.deviation = std::abs(diff.computed - err->corrected);
                rep.errata.push_back(diff);
            } else {
                diff.expected = expected;
                diff.deviation = std::abs(diff.computed - expected);
            }
            if (!std::isfinite(diff.deviation) || diff.deviation > rep.tolerance)
                rep.failures.push_back(diff);
            col_dev[ci] = std::max(col_dev[ci], diff.deviation);
            rep.max_deviation = std::max(rep.max_deviation, diff.deviation);
        }
    }
    for (golden::Col col : gt.columns)
        rep.column_devs.push_back(
            {golden::col_name(col), col_dev[static_cast<int>(col)]});
    return rep;
}

std::string table_csv(const ReproduceReport& rep) {
    const golden::Table& gt = golden::table(rep.id);
    std::ostringstream os;
    os << "scenario," << axis_name(gt.axis);
    for (golden::Col c : gt.columns) os << "," << golden::col_name(c);
    os << "\n";
    for (size_t i = 0; i < rep.rows.size(); ++i) {
        const TableRow& row = rep.rows[i];
        const golden::Row& want = gt.rows[i];
        os << row.scenario << "," << num(row.swept);
        for (golden::Col c : gt.columns) {
            const double blank = want.cells[static_cast<int>(c)];
            os << ",";
            if (!std::isnan(blank)) os << cell_text(row_value(row, c));
        }
        os << "\n";
    }
    return os.str();
}

std::string sweep_csv(Axis axis, const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "scenario," << axis_name(axis)
       << ",h_e,psi_e,gamma_e,mu_e,lambda_e,g_e,f_e,U_full,U_zero,U_concave,"
          "consistent,error\n";
    for (const TableRow& r : rows) {
        const bool zero_like =
            r.regime == Regime::Benchmark || r.regime == Regime::LinearZero;
        os << r.scenario << "," << num(r.swept) << "," << cell_text(r.h) << ","
           << (zero_like ? "" : cell_text(r.psi)) << "," << cell_text(r.gamma)
           << "," << cell_text(r.mu) << ","
           << (zero_like ? "" : cell_text(r.lambda)) << "," << cell_text(r.g)
           << "," << cell_text(r.f) << "," << cell_text(r.u_full) << ","
           << cell_text(r.u_zero) << "," << cell_text(r.u_concave) << ","
           << (r.error.empty() ? (r.consistent ? "true" : "false") : "") << ","
           << r.error << "\n";
    }
    return os.str();
}

std::string sweep_json(Axis axis, const std::vector<TableRow>& rows) {
    auto field = [](const char* k, double v) {
        return std::isnan(v) ? "\"" + std::string(k) + "\":null"
                             : "\"" + std::string(k) + "\":" + num(v);
    };
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows.size(); ++i) {
        const TableRow& r = rows[i];
        if (i) os << ",";
        os << "{\"scenario\":\"" << r.scenario << "\",\"" << axis_name(axis)
           << "\":" << num(r.swept) << "," << field("h_e", r.h) << ","
           << field("psi_e", r.psi) << "," << field("gamma_e", r.gamma) << ","
           << field("mu_e", r.mu) << "," << field("lambda_e", r.lambda) << ","
           << field("g_e", r.g) << "," << field("f_e", r.f) << ","
           << field("U_full", r.u_full) << "," << field("U_zero", r.u_zero)
           << "," << field("U_concave", r.u_concave) << ",\"consistent\":"
           << (r.consistent ? "true" : "false") << ",\"error\":\"" << r.error
           << "\"}";
    }
    os << "]";
    return os.str();
}

}  // namespace aquifer
