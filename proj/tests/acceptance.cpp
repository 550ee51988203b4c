// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances are pinned in code next to each check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "aquifer/sampling.hpp"
#include "aquifer/scenario.hpp"
#include "aquifer/trajectory.hpp"
#include "aquifer/verify.hpp"

using namespace aquifer;

namespace {

int failures = 0;

void report(int criterion, const char* title, bool ok, const std::string& detail) {
    std::printf("criterion %d (%s): %s  %s\n", criterion, title,
                ok ? "PASS" : "FAIL", detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

// The eight reference parameter sets with a representative swept value each.
struct NamedSet {
    const char* name;
    ModelParams params;
    bool concave_feasible;
};

std::vector<NamedSet> reference_sets() {
    return {
        {"T1", {0.7, 1.0, 0.09, 0.8, 0.3, 0.122}, true},
        {"T2", {0.16, 2.0, 0.05, 0.3, 1.0, 0.5}, false},  // chain lower fails
        {"T3", {0.2, 1.5, 0.07, 0.7, 0.2, 0.5}, true},
        {"T4", {0.16, 2.0, 0.05, 0.3, 0.1, 0.5}, true},
        {"T5", {0.16, 2.0, 0.05, 0.65, 1.0, 0.5}, true},
        {"A1", {0.3, 0.9, 0.07, 0.4, 0.3, 0.5}, true},
        {"A2", {0.3, 0.9, 0.07, 0.4, 0.7, 0.5}, false},
        {"A3", {0.3, 0.9, 0.07, 0.4, 0.16, 0.5}, true},
    };
}

// ---------------------------------------------------------------- criterion 1

void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    const TableId ids[] = {TableId::T1, TableId::T2, TableId::T3, TableId::T4,
                           TableId::T5, TableId::A1, TableId::A2, TableId::A3};
    bool ok = true;
    double worst = 0.0;
    std::string bad;
    int errata = 0;
    for (TableId id : ids) {
        const ReproduceReport rep = reproduce_table(id);
        worst = std::max(worst, rep.max_deviation);
        errata += static_cast<int>(rep.errata.size());
        if (!rep.passed()) {
            ok = false;
            bad += std::string(" ") + table_name(id);
        }
    }

    // Spot anchors at the stated tolerance.
    const double tol = 1.5e-3;
    const ReproduceReport t1 = reproduce_table(TableId::T1);
    ok = ok && std::abs(t1.rows[0].u_full - 0.541) <= tol &&
         std::abs(t1.rows[1].u_zero - 0.589) <= tol;
    const ReproduceReport t2 = reproduce_table(TableId::T2);
    ok = ok && std::abs(t2.rows[6].lambda - 0.887) <= tol &&
         std::abs(t2.rows[6].f - 2.810) <= tol &&
         std::abs(t2.rows[6].u_full - 4.313) <= tol;
    const ReproduceReport t4 = reproduce_table(TableId::T4);
    ok = ok && std::abs(t4.rows[2].gamma - 0.397) <= tol &&
         std::abs(t4.rows[2].u_concave - 2.260) <= tol;
    const ReproduceReport t5 = reproduce_table(TableId::T5);
    ok = ok && std::abs(t5.rows[0].lambda - 0.999) <= tol &&
         std::abs(t5.rows[0].u_concave - 3.487) <= tol;

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    ok = ok && secs < 5.0;
    report(1, "table reproduction", ok,
           fmt("max |dev| %.3g over 8 tables, %.2fs", worst, secs) +
               (errata ? " (2 documented reference errata corrected via "
                         "same-row identities)"
                       : "") +
               bad);
}

// ---------------------------------------------------------------- criterion 2

void criterion_2() {
    std::mt19937_64 rng(20240801);
    double worst_gap = 0.0, worst_res = 0.0;
    const int draws = 1000;
    for (int i = 0; i < draws; ++i) {
        const ModelParams p = random_concave_feasible(rng);
        const double newton = concave_equilibrium(p).gamma;
        const double oracle = bisection_root(p);
        worst_gap = std::max(worst_gap, std::abs(newton - oracle));
        worst_res = std::max(worst_res, std::abs(residual_P(p, newton)));
    }
    const bool ok = worst_gap <= 1e-10 && worst_res <= 1e-10;
    report(2, "root-solver oracle equivalence", ok,
           fmt("max |newton-bisection| %.3g, max |P(root)| %.3g over 1000 draws",
               worst_gap, worst_res));
}

// ---------------------------------------------------------------- criterion 3

void criterion_3() {
    // Central differences need dt <= 1e-3; the default horizon is kept.
    PathSpec spec;
    spec.t_max = 50.0;
    spec.dt = 1e-3;
    bool ok = true;
    double worst = 0.0;
    std::string detail;
    for (const NamedSet& set : reference_sets()) {
        const ModelParams& p = set.params;
        struct Case {
            Regime regime;
            FieldModel field;
        };
        std::vector<Case> cases = {{Regime::Benchmark, FieldModel::Canonical},
                                   {Regime::LinearZero, FieldModel::Canonical},
                                   {Regime::LinearFull, FieldModel::Canonical}};
        if (set.concave_feasible)
            cases.push_back({Regime::Concave, FieldModel::Linearized});
        for (const Case& c : cases) {
            Path path;
            switch (c.regime) {
                case Regime::Benchmark: path = benchmark_path(p, spec); break;
                case Regime::LinearZero: path = linear_path(p, 0, spec); break;
                case Regime::LinearFull: path = linear_path(p, 1, spec); break;
                case Regime::Concave: path = concave_path(p, spec); break;
            }
            const OracleReport rep = ode_residual_report(p, c.regime, path, c.field);
            worst = std::max(worst, rep.max_abs_residual);
            if (!rep.passed) {
                ok = false;
                detail += std::string(" ") + set.name + "/" + regime_name(c.regime);
            }
        }
    }
    report(3, "ODE/adjoint residual suite", ok,
           fmt("max residual %.3g (tolerance 1e-6; concave paths checked "
               "against the linearized system they solve)",
               worst) +
               detail);
}

// ---------------------------------------------------------------- criterion 4

void criterion_4() {
    bool ok = true;
    double worst = 0.0;
    int probes = 0, diverged = 0;
    std::string detail;
    for (const NamedSet& set : reference_sets()) {
        const ModelParams& p = set.params;
        struct Case {
            Regime regime;
            FieldModel field;
        };
        std::vector<Case> cases = {{Regime::Benchmark, FieldModel::Canonical},
                                   {Regime::LinearFull, FieldModel::Canonical}};
        if (set.concave_feasible)
            cases.push_back({Regime::Concave, FieldModel::Linearized});
        for (const Case& c : cases) {
            const auto series = forward_integrate(p, c.regime, 10.0, 1e-4, 0.0, c.field);
            const double dev = sup_deviation(p, c.regime, series);
            worst = std::max(worst, dev);
            if (dev > 1e-4) {
                ok = false;
                detail += std::string(" ") + set.name + "/" + regime_name(c.regime);
            }
            // Saddle probe: a 1e-3 shadow-price offset must blow up.
            ++probes;
            try {
                const auto kicked =
                    forward_integrate(p, c.regime, 10.0, 1e-3, 1e-3, c.field);
                if (sup_deviation(p, c.regime, kicked) > 1.0) ++diverged;
            } catch (const UnstableIntegrationError&) {
                ++diverged;
            }
        }
    }
    ok = ok && diverged == probes;
    report(4, "forward-integration agreement", ok,
           fmt("max sup-error %.3g (tolerance 1e-4); ", worst) +
               std::to_string(diverged) + "/" + std::to_string(probes) +
               " perturbed runs diverged");
}

// ---------------------------------------------------------------- criterion 5

void criterion_5() {
    std::mt19937_64 rng(5150);
    bool ok = true;
    std::string detail;

    // (a) negative rebate: zero fertilizer wins with pristine quality.
    int checked = 0;
    while (checked < 500) {
        const ModelParams p = random_params(rng, -2.0, -1e-6);
        if (!validate_params(p).overall) continue;
        ++checked;
        const PolicyChoice choice = best_policy(p);
        const bool zero = choice.regime == Regime::Benchmark ||
                          choice.regime == Regime::LinearZero;
        if (!zero || choice.eq.psi != 1.0 || choice.eq.gamma != 0.0) {
            ok = false;
            detail += " (a)";
            break;
        }
    }

    // (b) concave dominance over zero, and over full when beta < eta.
    for (int i = 0; i < 500; ++i) {
        const ModelParams p = random_concave_feasible(rng);
        const Equilibrium c = concave_equilibrium(p);
        const Equilibrium z = benchmark_equilibrium(p);
        bool good = c.f > z.f && c.g > z.g && c.h > z.h;
        if (good && p.beta < p.eta) {
            const Equilibrium full = linear_equilibrium(p, 1);
            good = c.f > full.f && c.g > full.g && c.h > full.h;
        }
        if (!good) {
            ok = false;
            detail += " (b)";
            break;
        }
    }

    // (c) full improves on zero exactly when f_e0 < beta*delta/eta^2.
    checked = 0;
    while (checked < 500) {
        const ModelParams p = random_params(rng, 0.01, 2.0);
        if (!validate_params(p).overall) continue;
        ++checked;
        const ComparisonReport rep = compare_equilibria(p);
        const bool improves = rep.full.f > rep.zero.f && rep.full.g > rep.zero.g &&
                              rep.full.h > rep.zero.h;
        if (rep.full_improves != improves) {
            ok = false;
            detail += " (c)";
            break;
        }
    }
    report(5, "proposition properties", ok,
           "500 draws per claim, zero counterexamples" + detail);
}

// ---------------------------------------------------------------- criterion 6

void criterion_6() {
    const ModelParams base{0.16, 2.0, 0.05, 0.3, 0.0, 0.5};
    const double u_zero = benchmark_equilibrium(base).U;
    double prev_gamma = 2.0, prev_gap = 1e9;
    bool ok = true;
    double last_gamma = 0.0;
    for (double beta : {1e-2, 1e-3, 1e-4}) {
        ModelParams p = base;
        p.beta = beta;
        const Equilibrium e = concave_equilibrium(p);
        const double gap = std::abs(e.U - u_zero);
        ok = ok && e.gamma < prev_gamma && gap < prev_gap;
        prev_gamma = e.gamma;
        prev_gap = gap;
        last_gamma = e.gamma;
    }
    ok = ok && last_gamma < 5e-3;
    report(6, "beta->0 convergence", ok,
           fmt("gamma_e(1e-4) = %.3g (< 5e-3), |U_e - U_zero| decreasing",
               last_gamma));
}

// ---------------------------------------------------------------- criterion 7

void criterion_7() {
    bool ok = true;
    double worst = 0.0;
    for (const NamedSet& set : reference_sets()) {
        const ModelParams& p = set.params;
        const PathSpec spec;  // default grid
        const Path path = benchmark_path(p, spec);
        const Welfare w = discounted_welfare(path, p);

        // Closed-form oracle: U along the path is quadratic in exp(-t).
        const Equilibrium e = benchmark_equilibrium(p);
        auto u_of_x = [&](double x) {
            const double h = e.h + (1.0 - e.h) * x;
            return utility(p, {h, 1.0}, {e.f, h - e.mu, 0.0}, Regime::Benchmark);
        };
        const double u0 = u_of_x(0.0), u1 = u_of_x(1.0), uh = u_of_x(0.5);
        const double C = 2.0 * (u1 + u0 - 2.0 * uh);
        const double B = u1 - u0 - C;
        const double T = spec.t_max;
        const double exact =
            u0 * (1.0 - std::exp(-p.rho * T)) / p.rho +
            B * (1.0 - std::exp(-(1.0 + p.rho) * T)) / (1.0 + p.rho) +
            C * (1.0 - std::exp(-(2.0 + p.rho) * T)) / (2.0 + p.rho);
        const double dev = std::abs(w.J - exact);
        worst = std::max(worst, dev);
        ok = ok && dev <= 1e-8;
    }
    report(7, "quadrature oracle", ok,
           fmt("max |simpson - closed form| %.3g (tolerance 1e-8)", worst));
}

// ---------------------------------------------------------------- criterion 8

void criterion_8() {
    bool ok = true;
    std::string detail;

    // theta2(gamma=0) = rho - 1 exactly.
    for (const NamedSet& set : reference_sets()) {
        const SaddleStructure s = spectrum(set.params, Regime::Benchmark, 0.0);
        if (s.theta2 != set.params.rho - 1.0) {
            ok = false;
            detail += " theta2(0)";
        }
    }

    // Sign pattern (-,-,+,+) for every populated table configuration.
    const TableId ids[] = {TableId::T1, TableId::T2, TableId::T3, TableId::T4,
                           TableId::T5, TableId::A1, TableId::A2, TableId::A3};
    for (TableId id : ids) {
        const ReproduceReport rep = reproduce_table(id);
        for (const TableRow& row : rep.rows) {
            if (!row.error.empty() || std::isnan(row.gamma)) continue;
            if (row.regime == Regime::Concave && row.gamma == 0.0)
                continue;  // degenerate beta=0 limit row has no concave spectrum
            try {
                const SaddleStructure s = spectrum(
                    with_axis_value(table_params(id), table_axis(id), row.swept),
                    row.regime, row.gamma);
                if (!(s.theta1 < 0.0 && s.theta2 < 0.0 && s.theta3 > 0.0 &&
                      s.theta4 > 0.0)) {
                    ok = false;
                    detail += std::string(" signs:") + table_name(id);
                }
            } catch (const DegenerateSpectrumError&) {
                ok = false;
                detail += std::string(" degenerate:") + table_name(id);
            }
        }
    }

    // The documented degenerate-eigenvalue error: eta*gamma = sqrt(2*rho).
    ModelParams deg{0.5, 1.0, 0.125, 0.5, 1.0, 0.5};  // (2-rho)^2+4s = (2+rho)^2
    bool threw = false;
    try {
        spectrum(deg, Regime::LinearFull, 1.0);
    } catch (const DegenerateSpectrumError&) {
        threw = true;
    }
    ok = ok && threw;
    report(8, "eigen-structure checks", ok,
           std::string("theta2(0)=rho-1 exact, signs (-,-,+,+), degenerate "
                       "guard raised") +
               detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
