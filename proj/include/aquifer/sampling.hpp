#ifndef AQUIFER_SAMPLING_HPP
#define AQUIFER_SAMPLING_HPP

#include <random>

#include "aquifer/model.hpp"

// Seeded parameter draws for randomized property checks.

namespace aquifer {

/// Uniform draw over the base parameter box with b > rho enforced.
/// beta_lo/beta_hi bound the rebate strength.
ModelParams random_params(std::mt19937_64& rng, double beta_lo = -2.0,
                          double beta_hi = 2.0);

/// Rejection-samples parameters passing validate_params and check_concave.
/// Throws std::runtime_error after max_attempts rejections.
ModelParams random_concave_feasible(std::mt19937_64& rng,
                                    int max_attempts = 200000);

}  // namespace aquifer

#endif
