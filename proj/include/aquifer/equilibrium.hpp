#ifndef AQUIFER_EQUILIBRIUM_HPP
#define AQUIFER_EQUILIBRIUM_HPP

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "aquifer/feasibility.hpp"
#include "aquifer/model.hpp"

// Steady states for all regimes (closed form for benchmark/linear, Newton
// root finding for the concave regime), the saddle eigenstructure, and the
// cross-regime comparisons.

namespace aquifer {

/// Root bracket contains no sign change, i.e. no interior equilibrium exists
/// for the given parameters.  The message names the violated restriction.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Path denominators vanish: |1+theta2| or |1-theta2^2| below 1e-10.
struct DegenerateSpectrumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Equilibrium {
    Regime regime;
    double h, psi, gamma, mu, lambda, g, f;
    double U;  // instantaneous utility at the steady state
    bool within_bounds;  // state/control/shadow-price ranges respected
    bool consistent;     // regime feasibility checks pass
};

/// Eigenstructure of the canonical system linearized at a steady state.
/// Eigenvector components are ordered (h, psi, mu, lambda).
struct SaddleStructure {
    double theta1;  // -1
    double theta2;  // stable root of the (psi,lambda) block
    double theta3;  // unstable mirror root
    double theta4;  // 1 + rho
    double W;       // (eta*gamma_e)^2 + 2*(1-rho); NaN for linear regimes
    double c1, c2;  // path constants reproducing h0 = psi0 = 1
    std::array<double, 4> v1, v2;  // stable eigenvectors
};

/// Zero-fertilizer steady state: f = d + b*hbar/(1+rho), g = b*f,
/// h = g + mu, psi = 1, lambda = 0.
Equilibrium benchmark_equilibrium(const ModelParams& p);

/// Linear-model steady state for gamma in {0,1}.  gamma=0 coincides with the
/// benchmark.  Out-of-range psi is flagged, not rejected: the reference
/// tables include boundary and hypothetical equilibria.
Equilibrium linear_equilibrium(const ModelParams& p, int gamma);

/// Root function of the concave steady state,
///   P(g) = (d + (beta/2)*sqrt(g) + mu*b) * (2*eta^2/(beta*(1-rho))) * g^{3/2} - 1,
/// strictly increasing on (0,1].  Throws std::domain_error for beta <= 0 or
/// gamma <= 0.
double residual_P(const ModelParams& p, double gamma);

/// Analytic derivative dP/dgamma (used by the Newton iteration).
double residual_P_prime(const ModelParams& p, double gamma);

/// Concave-model steady state.  gamma_e is the unique root of P on
/// [beta^2/(4*eta^2), 1], solved by Newton from the bracket midpoint with
/// |P| < 1e-12, at most 100 iterations, and bisection fallback whenever an
/// iterate leaves the bracket.  beta <= 0 returns the zero-fertilizer limit
/// flagged inconsistent.  Throws InfeasibleError when the bracket carries no
/// sign change.
Equilibrium concave_equilibrium(const ModelParams& p);

/// Concave steady-state quantities for a given gamma_e (no root solve).
Equilibrium concave_equilibrium_at(const ModelParams& p, double gamma_e);

/// Saddle eigenstructure at the steady state of the given regime.
SaddleStructure spectrum(const ModelParams& p, Regime regime, double gamma_e);

struct ComparisonReport {
    double f_e0;       // zero-fertilizer food steady state
    double bang_rhs;   // beta*delta/eta^2
    bool full_improves;        // f_e0 < beta*delta/eta^2
    bool concave_gt_zero;      // concave f,g,h strictly above zero-fertilizer
    bool concave_gt_full;      // concave f,g,h strictly above full-fertilizer
    Equilibrium zero, full;
    std::optional<Equilibrium> concave;
    Regime best;
    double U_best;
    bool best_consistent;
};

/// Cross-regime dominance relations and the welfare-maximizing regime.
ComparisonReport compare_equilibria(const ModelParams& p);

struct EtaResponse {
    std::vector<double> eta;
    std::vector<double> f;  // eta/(eta^2+delta), response of lambda to pollution
    std::vector<double> h;  // delta/(delta+eta^2), response of f,g,h
    double eta_argmax;      // sqrt(delta)
    double f_max;           // 1/(2*sqrt(delta))
    bool has_unit_crossing;         // delta < 0.25
    double crossing_lo, crossing_hi;  // f > 1 on [lo, hi] when it exists
};

/// Response functions f(eta) and h(eta) on a grid, with analytic markers.
EtaResponse eta_response(const ModelParams& p, const std::vector<double>& grid);

}  // namespace aquifer

#endif
