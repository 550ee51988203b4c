#include "aquifer/equilibrium.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace aquifer {

namespace {

bool adjoints_in_bounds(double lambda) { return lambda >= 0.0 && lambda <= 1.0; }

Equilibrium finish(const ModelParams& p, Regime regime, double h, double psi,
                   double gamma, double lambda, double f, double g,
                   bool consistent) {
    Equilibrium e;
    e.regime = regime;
    e.h = h;
    e.psi = psi;
    e.gamma = gamma;
    e.mu = p.mu_star();
    e.lambda = lambda;
    e.f = f;
    e.g = g;
    e.U = utility(p, {h, psi}, {f, g, std::clamp(gamma, 0.0, 1.0)}, regime);
    e.within_bounds = state_in_bounds({h, psi}) && f >= 0.0 && g >= 0.0 &&
                      adjoints_in_bounds(lambda);
    e.consistent = consistent;
    return e;
}

}  // namespace

Equilibrium benchmark_equilibrium(const ModelParams& p) {
    const double f = p.f_star_zero();
    const double g = p.b * f;
    const double h = g + p.mu_star();
    const bool ok = validate_params(p).overall;
    return finish(p, Regime::Benchmark, h, 1.0, 0.0, 0.0, f, g, ok);
}

Equilibrium linear_equilibrium(const ModelParams& p, int gamma) {
    if (gamma != 0 && gamma != 1)
        throw std::domain_error("linear_equilibrium: gamma must be 0 or 1");
    if (gamma == 0) {
        Equilibrium e = benchmark_equilibrium(p);
        e.regime = Regime::LinearZero;
        return e;
    }
    // (eta*gamma)^2 is used in every denominator; on gamma in {0,1} this
    // coincides with the eta^2*gamma arrangement.
    const double s = p.eta * p.eta;  // (eta*1)^2
    const double delta = p.delta();
    const double base = p.b * p.mu_star() + p.beta + p.d;
    const double f = base / (s / delta + 1.0);       // = delta*(f_e0+beta)/(eta^2+delta)
    const double lambda = p.eta * base / (s + delta);
    const double psi = 1.0 - lambda;
    const double g = p.b * f;
    const double h = g + p.mu_star();

    bool consistent = false;
    if (p.beta > 0.0) consistent = check_linear_full(p).overall;
    return finish(p, Regime::LinearFull, h, psi, 1.0, lambda, f, g, consistent);
}

double residual_P(const ModelParams& p, double gamma) {
    if (p.beta <= 0.0)
        throw std::domain_error("residual_P: requires beta > 0");
    if (gamma <= 0.0)
        throw std::domain_error("residual_P: requires gamma > 0");
    const double scale = 2.0 * p.eta * p.eta / (p.beta * (1.0 - p.rho));
    const double root = std::sqrt(gamma);
    const double a = p.d + 0.5 * p.beta * root + p.mu_star() * p.b;
    return a * scale * gamma * root - 1.0;
}

double residual_P_prime(const ModelParams& p, double gamma) {
    if (p.beta <= 0.0 || gamma <= 0.0)
        throw std::domain_error("residual_P_prime: requires beta > 0 and gamma > 0");
    const double scale = 2.0 * p.eta * p.eta / (p.beta * (1.0 - p.rho));
    const double root = std::sqrt(gamma);
    const double a = p.d + 0.5 * p.beta * root + p.mu_star() * p.b;
    return scale * (0.25 * p.beta * gamma + 1.5 * a * root);
}

namespace {

// Newton iteration on P with a sign-preserving bracket; any iterate leaving
// the bracket is replaced by its midpoint.
double solve_concave_gamma(const ModelParams& p) {
    double lo = p.beta * p.beta / (4.0 * p.eta * p.eta);
    const double hi = 1.0;
    if (lo >= hi) {
        throw InfeasibleError(
            "concave equilibrium: bracket [beta^2/(4*eta^2), 1] is empty; "
            "violated restriction: rebate_cap (beta <= 2*eta)");
    }
    double plo = residual_P(p, lo);
    double phi = residual_P(p, hi);
    if (plo > 0.0 || phi < 0.0) {
        // Name the first failing restriction to explain the missing root.
        const FeasibilityReport rep = check_concave(p);
        std::string why = "no failed check recorded";
        for (const auto& c : rep.checks) {
            if (!c.passed) {
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.6g", c.margin);
                why = c.name + " (margin " + std::string(buf) + ")";
                break;
            }
        }
        throw InfeasibleError(
            "concave equilibrium: no sign change of P on the bracket; "
            "violated restriction: " + why);
    }

    double a = lo, b = hi;  // current sign bracket: P(a) <= 0 <= P(b)
    double gamma = 0.5 * (lo + hi);
    for (int it = 0; it < 100; ++it) {
        const double pg = residual_P(p, gamma);
        if (std::abs(pg) < 1e-12) return gamma;
        if (pg < 0.0) a = gamma; else b = gamma;
        double next = gamma - pg / residual_P_prime(p, gamma);
        if (!(next > a && next < b)) next = 0.5 * (a + b);
        gamma = next;
    }
    return gamma;
}

}  // namespace

Equilibrium concave_equilibrium_at(const ModelParams& p, double gamma_e) {
    const double root = std::sqrt(gamma_e);
    const double lambda = gamma_e > 0.0 ? p.beta / (2.0 * p.eta) / root : 0.0;
    const double psi = 1.0 - lambda;
    const double mu = p.mu_star();
    const double f = gamma_e > 0.0
                         ? p.d + p.beta * p.beta / (4.0 * p.eta * lambda) + p.b * mu
                         : p.f_star_zero();
    const double h = p.b * p.d + 0.5 * p.b * p.beta * root + (1.0 + p.b * p.b) * mu;
    const double g = h - mu;
    const bool consistent = check_concave(p).overall;
    return finish(p, Regime::Concave, h, psi, gamma_e, lambda, f, g, consistent);
}

Equilibrium concave_equilibrium(const ModelParams& p) {
    if (p.beta <= 0.0) {
        // beta -> 0 limit: fertilizer use vanishes and the steady state
        // coincides with the zero-fertilizer benchmark.
        Equilibrium e = benchmark_equilibrium(p);
        e.regime = Regime::Concave;
        e.consistent = false;
        return e;
    }
    return concave_equilibrium_at(p, solve_concave_gamma(p));
}

SaddleStructure spectrum(const ModelParams& p, Regime regime, double gamma_e) {
    SaddleStructure s;
    s.theta1 = -1.0;
    s.theta4 = 1.0 + p.rho;
    s.W = NAN;

    const bool concave = regime == Regime::Concave;
    double coupling;  // top-right entry of the (psi,lambda) block
    if (concave) {
        const double eg = p.eta * gamma_e;
        s.W = eg * eg + 2.0 * (1.0 - p.rho);
        coupling = s.W;
    } else {
        const double eg = p.eta * gamma_e;
        coupling = eg * eg;
    }
    if (coupling == 0.0) {
        s.theta2 = p.rho - 1.0;  // exact for gamma*eta = 0
        s.theta3 = 1.0;
    } else {
        const double disc = std::sqrt((2.0 - p.rho) * (2.0 - p.rho) + 4.0 * coupling);
        s.theta2 = 0.5 * (p.rho - disc);
        s.theta3 = 0.5 * (p.rho + disc);
    }
    if (std::abs(1.0 + s.theta2) < 1e-10 || std::abs(1.0 - s.theta2 * s.theta2) < 1e-10)
        throw DegenerateSpectrumError(
            "spectrum: |1+theta2| or |1-theta2^2| below 1e-10, path "
            "denominators vanish");

    s.v1 = {1.0, 0.0, 0.0, 0.0};
    if (concave) {
        const Equilibrium e = concave_equilibrium_at(p, gamma_e);
        s.v2 = {-p.b * p.eta * gamma_e / (1.0 + s.theta2),
                s.W / (1.0 - p.rho + s.theta2), 0.0, 1.0};
        s.c2 = (1.0 - p.rho + s.theta2) * (1.0 - e.psi) / s.W;
        s.c1 = 1.0 - e.h + s.c2 * p.b * p.eta * gamma_e / (1.0 + s.theta2);
    } else {
        const Equilibrium e = gamma_e == 0.0 ? benchmark_equilibrium(p)
                                             : linear_equilibrium(p, 1);
        s.v2 = {2.0 * p.b * p.eta * gamma_e / (1.0 + s.theta2),
                2.0 * (1.0 - s.theta2), 0.0, -2.0};
        s.c2 = e.lambda / (2.0 * (1.0 - s.theta2));
        s.c1 = 1.0 - e.h -
               p.b * p.eta * gamma_e * e.lambda / (1.0 - s.theta2 * s.theta2);
    }
    return s;
}

ComparisonReport compare_equilibria(const ModelParams& p) {
    ComparisonReport rep;
    rep.f_e0 = p.f_star_zero();
    rep.bang_rhs = p.eta > 0.0 ? p.beta * p.delta() / (p.eta * p.eta)
                               : std::numeric_limits<double>::infinity();
    rep.full_improves = rep.f_e0 < rep.bang_rhs;
    rep.zero = benchmark_equilibrium(p);
    rep.full = linear_equilibrium(p, 1);
    rep.concave_gt_zero = false;
    rep.concave_gt_full = false;
    if (p.beta > 0.0) {
        try {
            rep.concave = concave_equilibrium(p);
        } catch (const InfeasibleError&) {
            rep.concave.reset();
        }
    }
    if (rep.concave) {
        const Equilibrium& c = *rep.concave;
        rep.concave_gt_zero = c.f > rep.zero.f && c.g > rep.zero.g && c.h > rep.zero.h;
        rep.concave_gt_full = c.f > rep.full.f && c.g > rep.full.g && c.h > rep.full.h;
    }

    // Welfare ranking over the admissible regimes; ties break toward the
    // cleaner water.
    rep.best = Regime::Benchmark;
    rep.U_best = rep.zero.U;
    rep.best_consistent = rep.zero.consistent;
    double best_psi = rep.zero.psi;
    auto consider = [&](const Equilibrium& e) {
        if (e.U > rep.U_best || (e.U == rep.U_best && e.psi > best_psi)) {
            rep.best = e.regime;
            rep.U_best = e.U;
            rep.best_consistent = e.consistent && e.within_bounds;
            best_psi = e.psi;
        }
    };
    if (p.beta > 0.0) {
        consider(rep.full);
        if (rep.concave) consider(*rep.concave);
    }
    return rep;
}

EtaResponse eta_response(const ModelParams& p, const std::vector<double>& grid) {
    const double delta = p.delta();
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::domain_error("eta_response: requires delta in (0,1]");
    EtaResponse out;
    out.eta = grid;
    out.f.reserve(grid.size());
    out.h.reserve(grid.size());
    for (double e : grid) {
        out.f.push_back(e / (e * e + delta));
        out.h.push_back(delta / (delta + e * e));
    }
    out.eta_argmax = std::sqrt(delta);
    out.f_max = 1.0 / (2.0 * std::sqrt(delta));
    out.has_unit_crossing = delta < 0.25;
    if (out.has_unit_crossing) {
        const double r = std::sqrt(1.0 - 4.0 * delta);
        out.crossing_lo = 0.5 * (1.0 - r);
        out.crossing_hi = 0.5 * (1.0 + r);
    } else {
        out.crossing_lo = out.crossing_hi = NAN;
    }
    return out;
}

}  // namespace aquifer
