#include "aquifer/model.hpp"

#include <cmath>
#include <stdexcept>

namespace aquifer {

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Benchmark: return "benchmark";
        case Regime::LinearZero: return "linear_zero";
        case Regime::LinearFull: return "linear_full";
        case Regime::Concave: return "concave";
    }
    return "?";
}

bool parse_regime(const std::string& text, Regime& out) {
    if (text == "benchmark") { out = Regime::Benchmark; return true; }
    if (text == "linear_zero" || text == "zero") { out = Regime::LinearZero; return true; }
    if (text == "linear_full" || text == "full") { out = Regime::LinearFull; return true; }
    if (text == "concave") { out = Regime::Concave; return true; }
    return false;
}

double rebate(const ModelParams& p, double gamma, Regime kind) {
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::domain_error("rebate: gamma outside [0,1]");
    switch (kind) {
        case Regime::Benchmark: return 0.0;
        case Regime::LinearZero:
        case Regime::LinearFull: return p.beta * gamma;
        case Regime::Concave: return p.beta * std::sqrt(gamma);
    }
    return 0.0;
}

double utility(const ModelParams& p, const StateVector& x,
               const ControlVector& u, Regime kind) {
    const double dh = x.h - p.hbar;
    const double dpsi = 1.0 - x.psi;
    return -0.5 * u.g * u.g + u.g * x.h
         + (p.d + rebate(p, u.gamma, kind)) * u.f - 0.5 * u.f * u.f
         - 0.5 * dh * dh - 0.5 * dpsi * dpsi;
}

UtilityDecomposition utility_decomposition(const ModelParams& p,
                                           const StateVector& x,
                                           const ControlVector& u, Regime kind) {
    UtilityDecomposition out;
    out.water_surplus = -0.5 * u.g * u.g + u.g * x.h;
    out.food_surplus = (p.d + rebate(p, u.gamma, kind)) * u.f - 0.5 * u.f * u.f;
    const double dh = x.h - p.hbar;
    const double dpsi = 1.0 - x.psi;
    out.environmental = -0.5 * dh * dh - 0.5 * dpsi * dpsi;
    return out;
}

double aquifer_rate(const ModelParams& p, double f, double g) {
    return p.b * f - g;
}

double quality_rate(const ModelParams& p, double psi, double f, double gamma) {
    return p.delta() * (1.0 - psi) - p.eta * f * gamma;
}

double hamiltonian(const ModelParams& p, const StateVector& x,
                   const ControlVector& u, const AdjointVector& adj,
                   Regime kind) {
    return utility(p, x, u, kind)
         + adj.lambda * quality_rate(p, x.psi, u.f, u.gamma)
         + adj.mu * aquifer_rate(p, u.f, u.g);
}

bool state_in_bounds(const StateVector& x) {
    return x.h >= 0.0 && x.h <= 1.0 && x.psi >= 0.0 && x.psi <= 1.0;
}

bool controls_in_bounds(const ControlVector& u) {
    return u.f >= 0.0 && u.g >= 0.0 && u.gamma >= 0.0 && u.gamma <= 1.0;
}

}  // namespace aquifer
