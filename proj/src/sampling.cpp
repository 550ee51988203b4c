#include "aquifer/sampling.hpp"

#include <stdexcept>

#include "aquifer/feasibility.hpp"

namespace aquifer {

ModelParams random_params(std::mt19937_64& rng, double beta_lo, double beta_hi) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    ModelParams p;
    p.rho = 0.02 + 0.28 * u01(rng);
    p.b = p.rho + (1.0 - p.rho) * (0.05 + 0.95 * u01(rng));  // keeps b > rho
    p.eta = 0.05 + 0.95 * u01(rng);
    p.beta = beta_lo + (beta_hi - beta_lo) * u01(rng);
    p.d = 0.5 + 2.0 * u01(rng);
    p.hbar = 0.05 + 0.95 * u01(rng);
    return p;
}

ModelParams random_concave_feasible(std::mt19937_64& rng, int max_attempts) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int i = 0; i < max_attempts; ++i) {
        ModelParams p = random_params(rng, 0.0, 0.0);
        p.eta = 0.2 + 0.8 * u01(rng);
        p.beta = 1e-3 + (2.0 * p.eta - 1e-3) * u01(rng);
        if (!validate_params(p).overall) continue;
        if (check_concave(p).overall) return p;
    }
    throw std::runtime_error("random_concave_feasible: rejection cap exceeded");
}

}  // namespace aquifer
