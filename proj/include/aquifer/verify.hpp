#ifndef AQUIFER_VERIFY_HPP
#define AQUIFER_VERIFY_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "aquifer/equilibrium.hpp"
#include "aquifer/trajectory.hpp"

// Independent numerical oracles: bisection root finding, short-horizon
// forward integration of the canonical system, finite-difference optimality
// checks, and concavity checks.

namespace aquifer {

struct OracleReport {
    std::string name;
    double max_abs_residual;
    double tolerance;
    bool passed;
    int samples;
};

/// Forward integration left the basin (some |component| > 10).
struct UnstableIntegrationError : std::runtime_error {
    double t;
    explicit UnstableIntegrationError(double when)
        : std::runtime_error("forward_integrate: state diverged (|x| > 10)"),
          t(when) {}
};

/// Root of P on [beta^2/(4*eta^2), 1] by pure bisection, final interval
/// width below 1e-12.  Serves as the oracle for the Newton solver.
double bisection_root(const ModelParams& p);

/// Which vector field the integrator follows.  The benchmark and linear
/// canonical systems are themselves linear, so both choices coincide there;
/// for the concave regime, Canonical is the FOC-reduced nonlinear system and
/// Linearized is the Jacobian field at the steady state (the system the
/// closed-form paths solve).
enum class FieldModel { Canonical, Linearized };

struct IntegratedPoint {
    double t;
    double h, psi, mu, lambda;
};

/// Classic fixed-step RK4 on (h, psi, mu, lambda) with controls substituted
/// from the first-order conditions, seeded from the analytic path at t=0.
/// The horizon is capped at 10: the unstable root 1+rho doubles errors every
/// ~0.66 time units, so longer comparisons measure amplified rounding noise.
/// lambda0_offset perturbs the initial shadow price (saddle-instability
/// probes).  Throws UnstableIntegrationError on divergence.
std::vector<IntegratedPoint> forward_integrate(const ModelParams& p, Regime regime,
                                               double horizon, double dt = 1e-4,
                                               double lambda0_offset = 0.0,
                                               FieldModel field = FieldModel::Canonical);

/// Sup-norm deviation between an integrated series and the analytic path
/// evaluated on the same grid (h, psi, mu, lambda channels).
double sup_deviation(const ModelParams& p, Regime regime,
                     const std::vector<IntegratedPoint>& series);

/// Finite-difference gradients of the Hamiltonian in (f, g, gamma) at a path
/// point: interior gradients must vanish; at a gamma bound the inward
/// derivative must push against the bound.
OracleReport foc_check(const ModelParams& p, Regime regime,
                       const TrajectoryPoint& point);

/// Hessian of the maximized Hamiltonian in (h, psi) at the sample points is
/// the constant diag(-1,-1) with zero cross term (finite differences).
OracleReport concavity_check(const ModelParams& p, Regime regime,
                             const std::vector<TrajectoryPoint>& points);

/// Central-difference residuals of all four canonical equations
/// (h', psi', mu', lambda') along a generated path, measured against the
/// field the path solves (see FieldModel).  Tolerance 1e-6.
OracleReport ode_residual_report(const ModelParams& p, Regime regime,
                                 const Path& path,
                                 FieldModel field = FieldModel::Canonical);

/// Right-hand side of the canonical system (exposed for tests).
std::array<double, 4> canonical_field(const ModelParams& p, Regime regime,
                                      const std::array<double, 4>& x,
                                      FieldModel field = FieldModel::Canonical);

}  // namespace aquifer

#endif
