#ifndef AQUIFER_TRAJECTORY_HPP
#define AQUIFER_TRAJECTORY_HPP

#include <vector>

#include "aquifer/equilibrium.hpp"
#include "aquifer/model.hpp"

// Closed-form stable-manifold trajectories on a time grid, discounted
// welfare, and transversality diagnostics.

namespace aquifer {

struct PathSpec {
    double t_max = 50.0;  // slowest mode decays below 1e-9 by t=50 for all
    double dt = 0.01;     // reference parameter sets
    double h0 = 1.0;
    double psi0 = 1.0;
};

struct TrajectoryPoint {
    double t;
    double h, psi;
    double mu, lambda;
    double f, g, gamma;
    double U;
    bool clamped = false;  // gamma hit a bound; f still uses the interior formula
};

using Path = std::vector<TrajectoryPoint>;

/// Zero-fertilizer path: f constant, h relaxes to the steady state at rate 1,
/// psi identically 1.  Empty for t_max <= 0.
Path benchmark_path(const ModelParams& p, const PathSpec& spec);

/// Stable path of the linear model with gamma* in {0,1}.
Path linear_path(const ModelParams& p, int gamma_star, const PathSpec& spec);

/// Stable path of the concave model.  gamma_t = beta^2/(4*eta^2*lambda_t^2)
/// clamped to [0,1]; throws std::runtime_error if lambda_t <= 0 anywhere on
/// the grid.
Path concave_path(const ModelParams& p, const PathSpec& spec);

struct Welfare {
    double J;     // Simpson quadrature of U_t * exp(-rho t) over [0, t_max]
    double tail;  // U_end * exp(-rho t_max) / rho, NaN when rho <= 0
};

/// Discounted welfare of a series on a uniform grid with an even number of
/// intervals; throws std::invalid_argument otherwise.
Welfare discounted_welfare(const Path& series, const ModelParams& p);

struct TransversalityReport {
    double lambda_residual;  // |exp(-rho T) * lambda_T|
    double mu_h_residual;    // |exp(-rho T) * mu_T * h_T|
    bool decayed;            // residuals shrank from mid-horizon to T
    bool conclusive;         // false when rho <= 0
};

TransversalityReport transversality_check(const Path& series, const ModelParams& p);

}  // namespace aquifer

#endif
