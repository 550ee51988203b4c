#include "aquifer/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aquifer {

namespace {

std::vector<double> time_grid(const PathSpec& spec) {
    if (spec.dt <= 0.0) throw std::invalid_argument("path: dt must be > 0");
    std::vector<double> t;
    if (spec.t_max <= 0.0) return t;
    const long n = std::lround(spec.t_max / spec.dt);
    t.reserve(static_cast<size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) t.push_back(static_cast<double>(i) * spec.dt);
    return t;
}

}  // namespace

Path benchmark_path(const ModelParams& p, const PathSpec& spec) {
    const Equilibrium e = benchmark_equilibrium(p);
    Path out;
    for (double t : time_grid(spec)) {
        TrajectoryPoint pt;
        pt.t = t;
        pt.h = e.h + (spec.h0 - e.h) * std::exp(-t);
        pt.psi = 1.0;
        pt.mu = e.mu;
        pt.lambda = 0.0;
        pt.f = e.f;
        pt.g = pt.h - e.mu;
        pt.gamma = 0.0;
        pt.U = utility(p, {pt.h, pt.psi}, {pt.f, pt.g, pt.gamma}, Regime::Benchmark);
        out.push_back(pt);
    }
    return out;
}

Path linear_path(const ModelParams& p, int gamma_star, const PathSpec& spec) {
    if (gamma_star != 0 && gamma_star != 1)
        throw std::domain_error("linear_path: gamma_star must be 0 or 1");
    const Regime regime = gamma_star == 0 ? Regime::LinearZero : Regime::LinearFull;
    const Equilibrium e = gamma_star == 0 ? benchmark_equilibrium(p)
                                          : linear_equilibrium(p, 1);
    const SaddleStructure s = spectrum(p, regime, gamma_star);
    const double g1 = static_cast<double>(gamma_star);

    // Constants generalized to arbitrary initial conditions; at (1,1) they
    // reduce to c1 = 1-h_e - b*eta*gamma*lambda_e/(1-theta2^2) and
    // c2 = lambda_e/(2*(1-theta2)).
    const double c2 = (spec.psi0 - e.psi) / (2.0 * (1.0 - s.theta2));
    const double hshape = 2.0 * p.b * p.eta * g1 / (1.0 + s.theta2);
    const double c1 = spec.h0 - e.h - c2 * hshape;

    Path out;
    for (double t : time_grid(spec)) {
        const double es = std::exp(s.theta2 * t);
        TrajectoryPoint pt;
        pt.t = t;
        pt.h = e.h + c1 * std::exp(-t) + c2 * hshape * es;
        pt.psi = e.psi + 2.0 * c2 * (1.0 - s.theta2) * es;
        pt.mu = e.mu;
        pt.lambda = e.lambda - 2.0 * c2 * es;
        pt.f = p.d + p.beta * g1 - pt.lambda * g1 * p.eta + e.mu * p.b;
        pt.g = pt.h - e.mu;
        pt.gamma = g1;
        pt.U = utility(p, {pt.h, pt.psi}, {pt.f, pt.g, pt.gamma}, regime);
        out.push_back(pt);
    }
    return out;
}

Path concave_path(const ModelParams& p, const PathSpec& spec) {
    const Equilibrium e = concave_equilibrium(p);
    const SaddleStructure s = spectrum(p, Regime::Concave, e.gamma);

    const double c2 = (1.0 - p.rho + s.theta2) * (spec.psi0 - e.psi) / s.W;
    const double hshape = p.b * p.eta * e.gamma / (1.0 + s.theta2);

    Path out;
    for (double t : time_grid(spec)) {
        const double es = std::exp(s.theta2 * t);
        const double em = std::exp(-t);
        TrajectoryPoint pt;
        pt.t = t;
        pt.psi = e.psi + (spec.psi0 - e.psi) * es;
        pt.lambda = e.lambda + c2 * es;
        if (!(pt.lambda > 0.0))
            throw std::runtime_error(
                "concave_path: lambda <= 0 on the grid, path invalid");
        pt.h = e.h + (spec.h0 - e.h) * em - hshape * c2 * (es - em);
        pt.mu = e.mu;
        pt.f = p.d + p.beta * p.beta / (4.0 * pt.lambda * p.eta) + p.b * e.mu;
        pt.g = pt.h - e.mu;
        const double raw = p.beta * p.beta /
                           (4.0 * p.eta * p.eta * pt.lambda * pt.lambda);
        pt.gamma = std::clamp(raw, 0.0, 1.0);
        pt.clamped = raw != pt.gamma;
        pt.U = utility(p, {pt.h, pt.psi}, {pt.f, pt.g, pt.gamma}, Regime::Concave);
        out.push_back(pt);
    }
    return out;
}

Welfare discounted_welfare(const Path& series, const ModelParams& p) {
    const size_t n = series.size();
    if (n < 3 || (n - 1) % 2 != 0)
        throw std::invalid_argument(
            "discounted_welfare: needs a uniform grid with an even number of "
            "intervals");
    const double dt = series[1].t - series[0].t;
    for (size_t i = 1; i < n; ++i) {
        if (std::abs(series[i].t - series[i - 1].t - dt) > 1e-9 * std::max(1.0, series.back().t))
            throw std::invalid_argument("discounted_welfare: grid not uniform");
    }
    auto weighted = [&](size_t i) {
        return series[i].U * std::exp(-p.rho * series[i].t);
    };
    double sum = weighted(0) + weighted(n - 1);
    for (size_t i = 1; i + 1 < n; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * weighted(i);

    Welfare w;
    w.J = sum * dt / 3.0;
    w.tail = p.rho > 0.0
                 ? series.back().U * std::exp(-p.rho * series.back().t) / p.rho
                 : NAN;
    return w;
}

TransversalityReport transversality_check(const Path& series, const ModelParams& p) {
    TransversalityReport rep;
    if (series.empty()) throw std::invalid_argument("transversality_check: empty series");
    rep.conclusive = p.rho > 0.0;
    const TrajectoryPoint& last = series.back();
    const double wT = std::exp(-p.rho * last.t);
    rep.lambda_residual = std::abs(wT * last.lambda);
    rep.mu_h_residual = std::abs(wT * last.mu * last.h);

    const TrajectoryPoint& mid = series[series.size() / 2];
    const double wm = std::exp(-p.rho * mid.t);
    rep.decayed = rep.lambda_residual <= std::abs(wm * mid.lambda) + 1e-15 &&
                  rep.mu_h_residual <= std::abs(wm * mid.mu * mid.h) + 1e-15;
    if (!rep.conclusive) rep.decayed = false;
    return rep;
}

}  // namespace aquifer
