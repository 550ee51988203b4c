#include "aquifer/feasibility.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace aquifer {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

// Strict checks fail on the boundary; non-strict pass.
FeasibilityCheck make_check(std::string name, double margin, bool strict,
                            std::string detail) {
    FeasibilityCheck c;
    c.name = std::move(name);
    c.margin = margin;
    c.strict = strict;
    c.passed = strict ? (margin > 0.0) : (margin >= 0.0);
    c.detail = std::move(detail);
    return c;
}

void push(FeasibilityReport& rep, FeasibilityCheck c) {
    rep.overall = rep.overall && c.passed;
    rep.checks.push_back(std::move(c));
}

}  // namespace

const FeasibilityCheck* FeasibilityReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string FeasibilityReport::to_text() const {
    std::ostringstream os;
    os << "feasibility report (" << regime_name(regime) << ")\n";
    for (const auto& c : checks) {
        os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name
           << "  margin=" << num(c.margin) << (c.strict ? " (strict)" : "")
           << "  " << c.detail << "\n";
    }
    os << "  overall: " << (overall ? "pass" : "FAIL") << "\n";
    return os.str();
}

std::string FeasibilityReport::to_json() const {
    std::ostringstream os;
    os << "{\"regime\":\"" << regime_name(regime) << "\",\"overall\":"
       << (overall ? "true" : "false") << ",\"checks\":[";
    for (size_t i = 0; i < checks.size(); ++i) {
        const auto& c = checks[i];
        if (i) os << ",";
        os << "{\"name\":\"" << c.name << "\",\"passed\":" << (c.passed ? "true" : "false")
           << ",\"margin\":" << num(c.margin) << ",\"strict\":" << (c.strict ? "true" : "false")
           << ",\"detail\":\"" << c.detail << "\"}";
    }
    os << "]";
    if (std::isfinite(m1)) os << ",\"m1\":" << num(m1) << ",\"m2\":" << num(m2);
    if (std::isfinite(f_e0)) os << ",\"f_e0\":" << num(f_e0);
    if (std::isfinite(bang_rhs)) os << ",\"bang_rhs\":" << num(bang_rhs);
    if (std::isfinite(chain_mid))
        os << ",\"chain\":{\"lhs\":" << num(chain_lhs) << ",\"mid\":" << num(chain_mid)
           << ",\"rhs\":" << num(chain_rhs) << "}";
    os << "}";
    return os.str();
}

FeasibilityReport validate_params(const ModelParams& p) {
    FeasibilityReport rep;
    rep.regime = Regime::Benchmark;
    push(rep, make_check("rho_range", std::min(p.rho, 1.0 - p.rho), false,
                         "rho in [0,1], rho=" + num(p.rho)));
    push(rep, make_check("delta_range", std::min(p.delta(), 1.0 - p.delta()), false,
                         "delta=1-rho in [0,1], delta=" + num(p.delta())));
    push(rep, make_check("eta_range", std::min(p.eta, 1.0 - p.eta), false,
                         "eta in [0,1], eta=" + num(p.eta)));
    push(rep, make_check("b_range", std::min(p.b, 1.0 - p.b), false,
                         "b in [0,1], b=" + num(p.b)));
    push(rep, make_check("hbar_positive", p.hbar, true, "hbar > 0, hbar=" + num(p.hbar)));
    push(rep, make_check("hbar_cap", 1.0 - p.hbar, false, "hbar <= 1, hbar=" + num(p.hbar)));
    // rho + delta = 1 holds by construction; recorded for the report.
    push(rep, make_check("rho_delta_sum", -std::abs(p.rho + p.delta() - 1.0), false,
                         "rho+delta=1 exactly (delta derived)"));
    push(rep, make_check("sustainability", p.b - p.rho, true,
                         "b > rho, b-rho=" + num(p.b - p.rho)));
    return rep;
}

FeasibilityReport check_linear_full(const ModelParams& p) {
    if (p.beta <= 0.0)
        throw RegimeError(
            "check_linear_full: beta <= 0, full fertilizer use is never "
            "optimal (zero-fertilizer policy applies)");

    FeasibilityReport rep;
    rep.regime = Regime::LinearFull;
    const double delta = p.delta();
    const double eta2 = p.eta * p.eta;
    const double mu = p.mu_star();  // hbar/(2-delta) == hbar/(rho+1)

    rep.m1 = (eta2 + delta - delta * p.b * (p.beta + p.d)) /
             (eta2 + delta * (1.0 + p.b * p.b));
    rep.m2 = (eta2 + delta - p.eta * (p.beta + p.d)) / (p.eta * p.b);
    rep.f_e0 = p.f_star_zero();
    rep.bang_rhs = p.beta * delta / eta2;

    push(rep, make_check("mu_below_m1", rep.m1 - mu, true,
                         "hbar/(2-delta)=" + num(mu) + " < m1=" + num(rep.m1)));
    push(rep, make_check("mu_below_m2", rep.m2 - mu, true,
                         "hbar/(2-delta)=" + num(mu) + " < m2=" + num(rep.m2)));
    rep.saddle_bounds = rep.checks[0].passed && rep.checks[1].passed;

    // Self-consistency of gamma*=1 with the bang-bang rule: either beta>eta,
    // or the equilibrium shadow price stays below the switching threshold,
    // equivalently f_e0 <= beta*delta/eta^2.
    if (p.beta > p.eta) {
        push(rep, make_check("bang_bang_consistency", p.beta - p.eta, true,
                             "beta > eta branch, beta-eta=" + num(p.beta - p.eta)));
    } else {
        push(rep, make_check("bang_bang_consistency", rep.bang_rhs - rep.f_e0, false,
                             "f_e0=" + num(rep.f_e0) +
                                 " <= beta*delta/eta^2=" + num(rep.bang_rhs)));
    }
    rep.bang_consistent = rep.checks.back().passed;
    rep.overall = rep.saddle_bounds && rep.bang_consistent;
    return rep;
}

FeasibilityReport check_concave(const ModelParams& p) {
    FeasibilityReport rep;
    rep.regime = Regime::Concave;
    const double eta2 = p.eta * p.eta;
    const double one_m_rho = 1.0 - p.rho;
    const double mu = p.mu_star();

    push(rep, make_check("rebate_positive", p.beta, true, "0 < beta, beta=" + num(p.beta)));
    push(rep, make_check("rebate_cap", 2.0 * p.eta - p.beta, false,
                         "beta <= 2*eta, 2*eta-beta=" + num(2.0 * p.eta - p.beta)));
    const double beta4 = p.beta * p.beta * p.beta * p.beta;
    push(rep, make_check("curvature_bound", one_m_rho - beta4 / (16.0 * eta2), true,
                         "1-rho > beta^4/(16*eta^2)"));
    push(rep, make_check("height_capacity", 1.0 - p.b * p.beta / 2.0 - mu, false,
                         "hbar/(rho+1) <= 1 - b*beta/2"));

    rep.chain_lhs = p.beta * one_m_rho / (2.0 * eta2) - p.beta / 2.0;
    rep.chain_mid = p.b * mu + p.d;
    const double upper1 = 4.0 * p.eta * one_m_rho / (p.beta * p.beta) -
                          p.beta * p.beta / (4.0 * p.eta);
    const double upper2 = (1.0 - mu) / p.b - p.beta / 2.0;
    rep.chain_rhs = std::min(upper1, upper2);

    push(rep, make_check("chain_lower", rep.chain_mid - rep.chain_lhs, false,
                         "beta*(1-rho)/(2*eta^2)-beta/2=" + num(rep.chain_lhs) +
                             " <= b*hbar/(rho+1)+d=" + num(rep.chain_mid)));
    push(rep, make_check("chain_upper", rep.chain_rhs - rep.chain_mid, false,
                         "b*hbar/(rho+1)+d <= min(" + num(upper1) + "," + num(upper2) +
                             ")=" + num(rep.chain_rhs)));
    return rep;
}

BangBangDecision bang_bang(double lambda, const ModelParams& p) {
    if (p.eta == 0.0)
        throw std::domain_error("bang_bang: eta = 0, switching threshold undefined");
    BangBangDecision dec;
    dec.threshold = p.beta / p.eta;
    dec.lambda = lambda;
    if (std::abs(dec.threshold - lambda) < 1e-12)
        dec.gamma_star = BangChoice::Singular;
    else if (dec.threshold > lambda)
        dec.gamma_star = BangChoice::One;
    else
        dec.gamma_star = BangChoice::Zero;
    return dec;
}

}  // namespace aquifer
