#include <doctest.h>

#include <cmath>
#include <random>

#include "aquifer/equilibrium.hpp"
#include "aquifer/model.hpp"
#include "test_params.hpp"

using namespace aquifer;
using namespace aquifer::testing;

TEST_CASE("rebate schemes") {
    const ModelParams p = t4_params(0.3);
    CHECK(rebate(p, 0.0, Regime::Benchmark) == 0.0);
    CHECK(rebate(p, 0.0, Regime::LinearFull) == 0.0);
    CHECK(rebate(p, 0.0, Regime::Concave) == 0.0);
    CHECK(rebate(p, 1.0, Regime::Concave) == doctest::Approx(0.3));  // sqrt(1)=1
    ModelParams q = p;
    q.beta = 1.0;
    CHECK(rebate(q, 0.25, Regime::Concave) == doctest::Approx(0.5));  // 1*sqrt(0.25)
    CHECK(rebate(q, 0.25, Regime::LinearFull) == doctest::Approx(0.25));
    CHECK(rebate(p, 0.5, Regime::Benchmark) == 0.0);
    CHECK_THROWS_AS(rebate(p, 1.5, Regime::Concave), std::domain_error);
    CHECK_THROWS_AS(rebate(p, -0.1, Regime::LinearFull), std::domain_error);
}

TEST_CASE("utility matches the reference equilibria") {
    const ModelParams p = t1_params(0.3);
    // Full-fertilizer row evaluated at the printed 3-decimal values.
    const double u_full = utility(p, {0.678, 0.289}, {0.809, 0.566, 1.0},
                                  Regime::LinearFull);
    CHECK(std::abs(u_full - 0.541) < 1e-3);
    const double u_zero =
        utility(p, {0.867, 1.0}, {1.078, 0.755, 0.0}, Regime::Benchmark);
    CHECK(std::abs(u_zero - 0.589) < 1e-3);
}

TEST_CASE("utility with all-zero state and controls") {
    ModelParams p = t4_params(0.0);
    p.hbar = 0.5;
    const double u = utility(p, {0.0, 1.0}, {0.0, 0.0, 0.0}, Regime::Benchmark);
    CHECK(u == doctest::Approx(-0.125));  // only -(hbar^2)/2 survives
}

TEST_CASE("decomposition sums to utility and the benchmark identity holds") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        ModelParams p = t4_params(u01(rng));
        p.hbar = 0.1 + 0.9 * u01(rng);
        const StateVector x{u01(rng), u01(rng)};
        const ControlVector u{3.0 * u01(rng), 2.0 * u01(rng), u01(rng)};
        const Regime kind = i % 2 ? Regime::LinearFull : Regime::Concave;

        const UtilityDecomposition dec = utility_decomposition(p, x, u, kind);
        const double total = utility(p, x, u, kind);
        CHECK(dec.total() == doctest::Approx(total).epsilon(1e-12));

        // U1(h,psi,f,g,gamma) - U0(h,f,g) = D(gamma)*f - (1-psi)^2/2 where U0
        // is the pristine zero-fertilizer utility at the same (h,f,g).
        const double u0 = utility(p, {x.h, 1.0}, {u.f, u.g, 0.0}, Regime::Benchmark);
        const double lhs = total - u0;
        const double rhs = rebate(p, u.gamma, kind) * u.f -
                           0.5 * (1.0 - x.psi) * (1.0 - x.psi);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("decomposition of the full-fertilizer reference row") {
    const ModelParams p = t1_params(0.3);
    const Equilibrium e = linear_equilibrium(p, 1);
    const UtilityDecomposition dec = utility_decomposition(
        p, {e.h, e.psi}, {e.f, e.g, e.gamma}, Regime::LinearFull);
    CHECK(std::abs(dec.total() - 0.541) < 1.5e-3);
    CHECK(dec.water_surplus > 0.0);
    CHECK(dec.food_surplus > 0.0);
    CHECK(dec.environmental < 0.0);
}

TEST_CASE("gamma=0 pristine utility equals the benchmark value") {
    const ModelParams p = t2_params(1.0);
    const StateVector x{0.8, 1.0};
    const ControlVector u{2.0, 0.3, 0.0};
    CHECK(utility(p, x, u, Regime::LinearFull) ==
          doctest::Approx(utility(p, x, u, Regime::Benchmark)).epsilon(1e-15));
}

TEST_CASE("state dynamics") {
    ModelParams p = t2_params(0.0);
    CHECK(std::abs(aquifer_rate(p, 2.076, 0.332)) < 1e-3);  // table steady state
    CHECK(aquifer_rate(p, 0.0, 0.0) == 0.0);
    ModelParams q = p;
    q.b = 0.5;
    CHECK(aquifer_rate(q, 1.0, 0.2) == doctest::Approx(0.3));

    CHECK(quality_rate(p, 1.0, 5.0, 0.0) == 0.0);  // pristine, no input
    CHECK(std::abs(quality_rate(p, 0.736, 2.108, 0.397)) < 1e-3);
    ModelParams r = p;
    r.rho = 0.5;  // delta = 0.5
    r.eta = 0.5;
    CHECK(quality_rate(r, 0.0, 1.0, 1.0) == doctest::Approx(0.0));
}

namespace {

// Central finite differences of H in each control at a fixed point.
double dH(const ModelParams& p, Regime kind, const StateVector& x,
          const ControlVector& u, const AdjointVector& adj, int which) {
    const double s = 1e-6;
    ControlVector lo = u, hi = u;
    switch (which) {
        case 0: lo.f -= s; hi.f += s; break;
        case 1: lo.g -= s; hi.g += s; break;
        default: lo.gamma -= s; hi.gamma += s; break;
    }
    return (hamiltonian(p, x, hi, adj, kind) - hamiltonian(p, x, lo, adj, kind)) /
           (2.0 * s);
}

}  // namespace

TEST_CASE("hamiltonian first-order conditions at the concave steady state") {
    const ModelParams p = t4_params(0.1);
    const Equilibrium e = concave_equilibrium(p);
    const StateVector x{e.h, e.psi};
    const ControlVector u{e.f, e.g, e.gamma};
    const AdjointVector adj{e.lambda, e.mu};
    CHECK(std::abs(dH(p, Regime::Concave, x, u, adj, 0)) < 1e-9);
    CHECK(std::abs(dH(p, Regime::Concave, x, u, adj, 1)) < 1e-9);
    CHECK(std::abs(dH(p, Regime::Concave, x, u, adj, 2)) < 1e-9);
}

TEST_CASE("hamiltonian reduces to utility at zero shadow prices") {
    const ModelParams p = t2_params(0.5);
    const StateVector x{0.7, 0.6};
    const ControlVector u{1.5, 0.4, 0.8};
    CHECK(hamiltonian(p, x, u, {0.0, 0.0}, Regime::LinearFull) ==
          doctest::Approx(utility(p, x, u, Regime::LinearFull)).epsilon(1e-15));
}

TEST_CASE("concave equilibrium is a local maximum in f") {
    const ModelParams p = t4_params(0.1);
    const Equilibrium e = concave_equilibrium(p);
    const StateVector x{e.h, e.psi};
    const AdjointVector adj{e.lambda, e.mu};
    const double at = hamiltonian(p, x, {e.f, e.g, e.gamma}, adj, Regime::Concave);
    const double up = hamiltonian(p, x, {e.f + 0.01, e.g, e.gamma}, adj, Regime::Concave);
    const double dn = hamiltonian(p, x, {e.f - 0.01, e.g, e.gamma}, adj, Regime::Concave);
    CHECK(up < at);
    CHECK(dn < at);
}

TEST_CASE("hamiltonian is concave in the states: Hessian diag(-1,-1)") {
    const ModelParams p = t3_params(0.2);
    const ControlVector u{1.2, 0.3, 1.0};
    const AdjointVector adj{0.4, 0.5};
    const double s = 1e-4;
    auto H = [&](double h, double psi) {
        return hamiltonian(p, {h, psi}, u, adj, Regime::LinearFull);
    };
    const double h0 = H(0.7, 0.6);
    const double hhh = (H(0.7 + s, 0.6) - 2 * h0 + H(0.7 - s, 0.6)) / (s * s);
    const double hpp = (H(0.7, 0.6 + s) - 2 * h0 + H(0.7, 0.6 - s)) / (s * s);
    const double cross = (H(0.7 + s, 0.6 + s) - H(0.7 + s, 0.6 - s) -
                          H(0.7 - s, 0.6 + s) + H(0.7 - s, 0.6 - s)) /
                         (4 * s * s);
    CHECK(hhh == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(hpp == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(std::abs(cross) < 1e-6);
}

TEST_CASE("utility is jointly concave in (f,g) given the state") {
    const ModelParams p = t2_params(1.0);
    const StateVector x{0.9, 0.5};
    const double s = 1e-4;
    auto U = [&](double f, double g) {
        return utility(p, x, {f, g, 1.0}, Regime::LinearFull);
    };
    const double u0 = U(1.0, 0.5);
    CHECK((U(1.0 + s, 0.5) - 2 * u0 + U(1.0 - s, 0.5)) / (s * s) ==
          doctest::Approx(-1.0).epsilon(1e-6));
    CHECK((U(1.0, 0.5 + s) - 2 * u0 + U(1.0, 0.5 - s)) / (s * s) ==
          doctest::Approx(-1.0).epsilon(1e-6));
    const double cross = (U(1.0 + s, 0.5 + s) - U(1.0 + s, 0.5 - s) -
                          U(1.0 - s, 0.5 + s) + U(1.0 - s, 0.5 - s)) /
                         (4 * s * s);
    CHECK(std::abs(cross) < 1e-6);
}

TEST_CASE("delta derives from rho") {
    ModelParams p = t2_params(0.0);
    p.rho = 0.05;
    CHECK(p.delta() == doctest::Approx(0.95));
    p.rho = 0.3;
    CHECK(p.delta() == doctest::Approx(0.7));
    CHECK(p.rho + p.delta() == 1.0);
}
