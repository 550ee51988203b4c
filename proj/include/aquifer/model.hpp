#ifndef AQUIFER_MODEL_HPP
#define AQUIFER_MODEL_HPP

#include <string>

// Core domain types and the instantaneous model functions shared by every
// regime: surplus/utility terms, rebate schemes, state dynamics, and the
// current-value Hamiltonian.

namespace aquifer {

/// Exogenous scalars of the groundwater model.  The natural degradation
/// rate is tied to the discount rate (rho + delta = 1) and therefore never
/// stored separately.
struct ModelParams {
    double b;     // recharge rate per unit food
    double d;     // willingness-to-pay intercept for food
    double rho;   // discount rate
    double eta;   // pollutant intensity per unit food*fertilizer
    double beta;  // price-rebate strength (negative = fertilizer tax)
    double hbar;  // socially desired aquifer height

    double delta() const { return 1.0 - rho; }

    /// Steady-state shadow price of aquifer height, identical in all regimes.
    double mu_star() const { return hbar / (rho + 1.0); }

    /// Zero-fertilizer steady-state food production d + b*hbar/(1+rho).
    double f_star_zero() const { return d + b * mu_star(); }
};

/// Model regimes.  Benchmark and LinearZero share identical state/control
/// solutions; they differ only in whether the quality channel is reported.
enum class Regime { Benchmark, LinearZero, LinearFull, Concave };

const char* regime_name(Regime r);
bool parse_regime(const std::string& text, Regime& out);

struct StateVector {
    double h;    // aquifer height, nominally in [0,1]
    double psi;  // water quality, 1 = pristine; pollutant stock is 1 - psi
};

struct ControlVector {
    double f;      // food production, >= 0
    double g;      // groundwater extraction, >= 0
    double gamma;  // fertilizer intensity in [0,1]
};

struct AdjointVector {
    double lambda;  // shadow price of water quality
    double mu;      // shadow price of aquifer height
};

/// Price discount D(gamma): beta*gamma for linear regimes, beta*sqrt(gamma)
/// for the concave regime, 0 for the benchmark.  Throws std::domain_error
/// when gamma is outside [0,1].
double rebate(const ModelParams& p, double gamma, Regime kind);

/// Instantaneous social utility
///   -g^2/2 + g*h + (d + D(gamma))*f - f^2/2 - (h-hbar)^2/2 - (1-psi)^2/2.
/// Out-of-range states are accepted (sweeps deliberately visit infeasible
/// equilibria); use state_in_bounds to flag them.
double utility(const ModelParams& p, const StateVector& x,
               const ControlVector& u, Regime kind);

struct UtilityDecomposition {
    double water_surplus;   // -g^2/2 + g*h
    double food_surplus;    // (d + D(gamma))*f - f^2/2
    double environmental;   // -(h-hbar)^2/2 - (1-psi)^2/2
    double total() const { return water_surplus + food_surplus + environmental; }
};

UtilityDecomposition utility_decomposition(const ModelParams& p,
                                           const StateVector& x,
                                           const ControlVector& u, Regime kind);

/// dh/dt = b*f - g
double aquifer_rate(const ModelParams& p, double f, double g);

/// dpsi/dt = delta*(1 - psi) - eta*f*gamma
double quality_rate(const ModelParams& p, double psi, double f, double gamma);

/// Current-value Hamiltonian
///   U(...) + lambda*[delta*(1-psi) - eta*f*gamma] + mu*[b*f - g].
double hamiltonian(const ModelParams& p, const StateVector& x,
                   const ControlVector& u, const AdjointVector& adj,
                   Regime kind);

bool state_in_bounds(const StateVector& x);
bool controls_in_bounds(const ControlVector& u);

}  // namespace aquifer

#endif
