#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "aquifer/io.hpp"
#include "aquifer/trajectory.hpp"
#include "aquifer/verify.hpp"
#include "test_params.hpp"

using namespace aquifer;
using namespace aquifer::testing;

namespace {

PathSpec fine_grid() {
    PathSpec s;
    s.t_max = 50.0;
    s.dt = 1e-3;
    return s;
}

}  // namespace

TEST_CASE("benchmark path: initial condition, limit, ODE residual") {
    const ModelParams p = t2_params(0.0);
    const Path path = benchmark_path(p, PathSpec{});
    CHECK(path.front().h == 1.0);
    CHECK(path.front().t == 0.0);
    CHECK(std::abs(path.back().h - 0.808) < 1.5e-3);  // -> h_e
    for (const auto& pt : path) CHECK(pt.psi == 1.0);

    // Central-difference dh/dt equals b*f - g along the path.
    const Path fine = benchmark_path(p, fine_grid());
    double worst = 0.0;
    for (size_t i = 1; i + 1 < fine.size(); ++i) {
        const double dh = (fine[i + 1].h - fine[i - 1].h) / (fine[i + 1].t - fine[i - 1].t);
        worst = std::max(worst, std::abs(dh - aquifer_rate(p, fine[i].f, fine[i].g)));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("linear path honours initial conditions and shadow-price shape") {
    const ModelParams p = t2_params(1.0);
    const Path path = linear_path(p, 1, PathSpec{});
    CHECK(std::abs(path.front().h - 1.0) < 1e-12);
    CHECK(std::abs(path.front().psi - 1.0) < 1e-12);

    const Equilibrium e = linear_equilibrium(p, 1);
    const SaddleStructure s = spectrum(p, Regime::LinearFull, 1.0);
    // lambda starts at theta2*lambda_e/(theta2-1), below lambda_e, increasing.
    const double lambda0 = s.theta2 * e.lambda / (s.theta2 - 1.0);
    CHECK(path.front().lambda == doctest::Approx(lambda0).epsilon(1e-12));
    CHECK(path.front().lambda < e.lambda);
    for (size_t i = 1; i < path.size(); ++i)
        CHECK(path[i].lambda >= path[i - 1].lambda);
    CHECK(path.back().lambda == doctest::Approx(e.lambda).epsilon(1e-9));
}

TEST_CASE("linear path with beta above eta keeps the bang-bang choice") {
    const ModelParams p = t2_params(1.0);  // beta=1 > eta=0.3
    const Path path = linear_path(p, 1, PathSpec{});
    const double threshold = p.beta / p.eta;
    for (size_t i = 0; i < path.size(); i += 97) {
        CHECK(path[i].lambda <= threshold);
        CHECK(bang_bang(path[i].lambda, p).gamma_star == BangChoice::One);
    }
}

TEST_CASE("linear and benchmark paths coincide for gamma*=0") {
    const ModelParams p = t2_params(-1.0);
    const Path lin = linear_path(p, 0, PathSpec{});
    const Path bench = benchmark_path(p, PathSpec{});
    REQUIRE(lin.size() == bench.size());
    for (size_t i = 0; i < lin.size(); i += 100) {
        CHECK(lin[i].h == doctest::Approx(bench[i].h).epsilon(1e-12));
        CHECK(lin[i].psi == 1.0);
        CHECK(lin[i].lambda == 0.0);
        CHECK(lin[i].f == doctest::Approx(bench[i].f).epsilon(1e-12));
    }
}

TEST_CASE("concave path: initial conditions and convergence to equilibrium") {
    const ModelParams p = t4_params(0.1);
    const Path path = concave_path(p, PathSpec{});
    CHECK(std::abs(path.front().h - 1.0) < 1e-12);
    CHECK(std::abs(path.front().psi - 1.0) < 1e-12);

    const Equilibrium e = concave_equilibrium(p);
    const auto& last = path.back();  // t = 50
    CHECK(std::abs(last.h - e.h) < 1e-6);
    CHECK(std::abs(last.psi - e.psi) < 1e-6);
    CHECK(std::abs(last.lambda - e.lambda) < 1e-6);
    CHECK(std::abs(last.f - e.f) < 1e-6);
    CHECK(std::abs(last.g - e.g) < 1e-6);
    CHECK(std::abs(last.gamma - e.gamma) < 1e-6);
    CHECK(std::abs(last.U - e.U) < 1e-6);
}

TEST_CASE("concave path clamps gamma where the interior rule exceeds one") {
    // High-lambda configuration: the interior gamma rule starts above 1.
    const Path path = concave_path(t5_params(0.65), PathSpec{});
    bool any_clamped = false;
    for (const auto& pt : path) {
        CHECK(pt.gamma >= 0.0);
        CHECK(pt.gamma <= 1.0);
        any_clamped = any_clamped || pt.clamped;
    }
    CHECK(any_clamped);
    CHECK(path.front().clamped);  // interior rule gives ~1.49 at t=0
    CHECK(!path.back().clamped);
}

TEST_CASE("concave path rejects grids where lambda would cross zero") {
    PathSpec spec;
    spec.psi0 = 5.0;  // start far above pristine: c2 < -lambda_e
    CHECK_THROWS_AS(concave_path(t4_params(0.1), spec), std::runtime_error);
}

TEST_CASE("mu is constant on every path") {
    const ModelParams p = t4_params(0.1);
    const Path paths[] = {benchmark_path(p, PathSpec{}),
                          linear_path(p, 1, PathSpec{}),
                          concave_path(p, PathSpec{})};
    for (const Path& path : paths) {
        const double mu = p.hbar / (1.0 + p.rho);
        for (size_t i = 0; i < path.size(); i += 500)
            CHECK(path[i].mu == doctest::Approx(mu).epsilon(1e-15));
    }
}

TEST_CASE("all fields settle near the equilibrium for t >= 50") {
    // theta2 <= -0.5 for the reference sets, so tails are below 1e-5 by t=50.
    const ModelParams p = t2_params(1.0);
    const Equilibrium e = linear_equilibrium(p, 1);
    const Path path = linear_path(p, 1, PathSpec{});
    CHECK(std::abs(path.back().h - e.h) < 1e-5);
    CHECK(std::abs(path.back().psi - e.psi) < 1e-5);
    CHECK(std::abs(path.back().lambda - e.lambda) < 1e-5);
}

TEST_CASE("discounted welfare matches the closed-form benchmark oracle") {
    // Along the benchmark path U_t is a quadratic in x = exp(-t); integrating
    // each power of x against exp(-rho t) gives the exact value.
    const ModelParams sets[] = {t2_params(0.0), t1_params(0.0), t3_params(0.0),
                                a_params(0.0)};
    for (const ModelParams& p : sets) {
        const PathSpec spec;  // t_max=50, dt=0.01
        const Path path = benchmark_path(p, spec);
        const Welfare w = discounted_welfare(path, p);

        const Equilibrium e = benchmark_equilibrium(p);
        auto u_of_x = [&](double x) {
            const double h = e.h + (1.0 - e.h) * x;
            return utility(p, {h, 1.0}, {e.f, h - e.mu, 0.0}, Regime::Benchmark);
        };
        const double u0 = u_of_x(0.0), u1 = u_of_x(1.0), uh = u_of_x(0.5);
        const double C = 2.0 * (u1 + u0 - 2.0 * uh);
        const double B = u1 - u0 - C;
        const double A = u0;
        const double T = spec.t_max;
        const double exact = A * (1.0 - std::exp(-p.rho * T)) / p.rho +
                             B * (1.0 - std::exp(-(1.0 + p.rho) * T)) / (1.0 + p.rho) +
                             C * (1.0 - std::exp(-(2.0 + p.rho) * T)) / (2.0 + p.rho);
        CHECK(std::abs(w.J - exact) < 1e-8);
    }
}

TEST_CASE("discounted welfare of a constant series") {
    const ModelParams p = t2_params(0.0);
    Path series;
    for (int i = 0; i <= 100; ++i) {
        TrajectoryPoint pt{};
        pt.t = 0.1 * i;
        pt.U = 2.5;
        series.push_back(pt);
    }
    const Welfare w = discounted_welfare(series, p);
    const double expect = 2.5 * (1.0 - std::exp(-p.rho * 10.0)) / p.rho;
    CHECK(w.J == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("quadrature converges at fourth order") {
    const ModelParams p = t2_params(0.0);
    PathSpec coarse;
    coarse.dt = 0.02;
    PathSpec fine;
    fine.dt = 0.01;
    const double j1 = discounted_welfare(benchmark_path(p, coarse), p).J;
    const double j2 = discounted_welfare(benchmark_path(p, fine), p).J;
    CHECK(std::abs(j1 - j2) < 1e-9);
}

TEST_CASE("quadrature rejects ill-formed grids") {
    const ModelParams p = t2_params(0.0);
    PathSpec odd;
    odd.t_max = 0.03;
    odd.dt = 0.01;  // 3 intervals
    CHECK_THROWS_AS(discounted_welfare(benchmark_path(p, odd), p),
                    std::invalid_argument);
    Path ragged = benchmark_path(p, PathSpec{});
    ragged[7].t += 0.004;
    CHECK_THROWS_AS(discounted_welfare(ragged, p), std::invalid_argument);
    CHECK_THROWS_AS(discounted_welfare(Path{}, p), std::invalid_argument);
}

TEST_CASE("transversality residuals decay") {
    const ModelParams bench = t2_params(0.0);
    const TransversalityReport rb =
        transversality_check(benchmark_path(bench, PathSpec{}), bench);
    CHECK(rb.conclusive);
    CHECK(rb.decayed);

    PathSpec long_run;
    long_run.t_max = 200.0;
    long_run.dt = 0.01;
    const ModelParams p = t1_params(0.3);
    const TransversalityReport rep =
        transversality_check(linear_path(p, 1, long_run), p);
    CHECK(rep.lambda_residual < 1e-7);
    CHECK(rep.mu_h_residual < 1e-7);
    CHECK(rep.decayed);

    ModelParams zero_rho = t2_params(0.0);
    zero_rho.rho = 0.0;
    const TransversalityReport undisc =
        transversality_check(benchmark_path(zero_rho, PathSpec{}), zero_rho);
    CHECK(!undisc.conclusive);
}

TEST_CASE("empty grid for t_max = 0") {
    PathSpec spec;
    spec.t_max = 0.0;
    CHECK(benchmark_path(t2_params(0.0), spec).empty());
    CHECK(path_csv(benchmark_path(t2_params(0.0), spec)) ==
          "t,h,psi,mu,lambda,f,g,gamma,U\n");
}

TEST_CASE("trajectory CSV column contract") {
    PathSpec spec;
    spec.t_max = 0.02;
    spec.dt = 0.01;
    const std::string csv = path_csv(benchmark_path(t2_params(0.0), spec));
    CHECK(csv.rfind("t,h,psi,mu,lambda,f,g,gamma,U\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 rows
}
