#ifndef AQUIFER_FEASIBILITY_HPP
#define AQUIFER_FEASIBILITY_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "aquifer/model.hpp"

// Parametric restrictions for each regime, reported with numeric margins,
// plus the bang-bang selection rule for the linear model.

namespace aquifer {

/// Requested operation does not apply to the parameter regime (e.g. the
/// full-fertilizer analysis with beta <= 0, where zero fertilizer is optimal).
struct RegimeError : std::domain_error {
    using std::domain_error::domain_error;
};

struct FeasibilityCheck {
    std::string name;
    bool passed;
    double margin;   // inequality slack; > 0 passes strict checks, >= 0 non-strict
    bool strict;     // boundary counts as FAIL for strict inequalities
    std::string detail;
};

struct FeasibilityReport {
    Regime regime = Regime::Benchmark;
    std::vector<FeasibilityCheck> checks;
    bool overall = true;

    // Named quantities, NaN when not applicable to the regime checked.
    double m1 = NAN;            // saddle bound (eta^2+delta-delta*b*(beta+d))/(eta^2+delta*(1+b^2))
    double m2 = NAN;            // saddle bound (eta^2+delta-eta*(beta+d))/(eta*b)
    double f_e0 = NAN;          // zero-fertilizer steady-state food d + b*hbar/(1+rho)
    double bang_rhs = NAN;      // beta*delta/eta^2
    double chain_lhs = NAN;     // beta*(1-rho)/(2*eta^2) - beta/2
    double chain_mid = NAN;     // b*hbar/(rho+1) + d
    double chain_rhs = NAN;     // min of the two upper bounds
    bool saddle_bounds = true;     // linear full: mu below min(m1, m2)
    bool bang_consistent = true;   // linear full: beta>eta or f_e0 <= beta*delta/eta^2

    const FeasibilityCheck* find(const std::string& name) const;
    std::string to_text() const;
    std::string to_json() const;
};

/// Base parameter restrictions: ranges, rho+delta=1, b>rho, hbar in (0,1].
FeasibilityReport validate_params(const ModelParams& p);

/// Conditions under which the full-fertilizer path of the linear model is a
/// stable self-consistent optimum.  The saddle bound (mu below min(m1,m2))
/// and the bang-bang consistency clause are reported as separate flags; the
/// reference tables tabulate full-fertilizer equilibria even where the
/// second clause fails.  Throws RegimeError when beta <= 0.
FeasibilityReport check_linear_full(const ModelParams& p);

/// Parametric constraints for an interior concave-rebate equilibrium:
/// 0 < beta <= 2*eta, 1-rho > beta^4/(16*eta^2), hbar/(rho+1) <= 1-b*beta/2,
/// and the chain inequality bounding b*hbar/(rho+1)+d from both sides.
FeasibilityReport check_concave(const ModelParams& p);

enum class BangChoice { Zero, One, Singular };

struct BangBangDecision {
    BangChoice gamma_star;
    double threshold;  // beta/eta
    double lambda;
};

/// Bang-bang rule for the linear model: gamma*=1 iff beta/eta > lambda,
/// gamma*=0 iff beta/eta < lambda, singular within 1e-12 of the threshold.
/// Throws std::domain_error when eta == 0.
BangBangDecision bang_bang(double lambda, const ModelParams& p);

}  // namespace aquifer

#endif
