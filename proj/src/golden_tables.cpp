#include "golden_tables.hpp"

#include <limits>
#include <stdexcept>

namespace aquifer::golden {

namespace {

constexpr double NA = std::numeric_limits<double>::quiet_NaN();
constexpr Regime FULL = Regime::LinearFull;
constexpr Regime ZERO = Regime::LinearZero;
constexpr Regime CONC = Regime::Concave;

const std::vector<Col> kWideCols = {Col::H,      Col::Psi,  Col::Gamma,
                                    Col::Mu,     Col::Lambda, Col::G,
                                    Col::F,      Col::UFull, Col::UZero,
                                    Col::UConcave};
const std::vector<Col> kLinearCols = {Col::H,  Col::Psi,    Col::Gamma,
                                      Col::Mu, Col::Lambda, Col::G,
                                      Col::F,  Col::UFull,  Col::UZero};
const std::vector<Col> kConcaveCols = {Col::H,  Col::Psi,    Col::Gamma,
                                       Col::Mu, Col::Lambda, Col::G,
                                       Col::F,  Col::UZero,  Col::UConcave};
const std::vector<Col> kA3Cols = {Col::H, Col::Gamma, Col::Mu,
                                  Col::G, Col::F,     Col::UFull, Col::UZero};

// T1: eta=0.8, rho=0.09, d=1, hbar=0.122, b=0.7; beta in {0.3, 0.4, 0.5}
Table make_t1() {
    Table t;
    t.id = TableId::T1;
    t.params = {0.7, 1.0, 0.09, 0.8, 0.3, 0.122};
    t.axis = Axis::Beta;
    t.columns = kLinearCols;
    t.rows = {
        //                 h      psi    gam  mu     lam    g      f      U1     U0     Uc
        {FULL, 0.3, {0.678, 0.289, 1.0, 0.112, 0.711, 0.566, 0.809, 0.541, NA, NA}},
        {ZERO, 0.3, {0.867, NA, 0.0, 0.112, NA, 0.755, 1.078, NA, 0.589, NA}},
        {FULL, 0.4, {0.719, 0.237, 1.0, 0.112, 0.763, 0.608, 0.868, 0.621, NA, NA}},
        {ZERO, 0.4, {0.867, NA, 0.0, 0.112, NA, 0.755, 1.078, NA, 0.589, NA}},
        {FULL, 0.5, {0.761, 0.185, 1.0, 0.112, 0.815, 0.649, 0.927, 0.708, NA, NA}},
        {ZERO, 0.5, {0.867, NA, 0.0, 0.112, NA, 0.755, 1.078, NA, 0.589, NA}},
    };
    return t;
}

// T2: b=0.16, d=2, eta=0.3, rho=0.05, hbar=0.5; low pollution intensity
Table make_t2() {
    Table t;
    t.id = TableId::T2;
    t.params = {0.16, 2.0, 0.05, 0.3, -2.076, 0.5};
    t.axis = Axis::Beta;
    t.columns = kLinearCols;
    t.rows = {
        {FULL, -2.076, {0.476, 1.000, 1.0, 0.476, 0.000, 0.000, 0.000, -0.000, NA, NA}},
        {ZERO, -2.076, {0.808, NA, 0.0, 0.476, NA, 0.332, 2.076, NA, 2.163, NA}},
        {FULL, -1.913, {0.500, 0.953, 1.0, 0.476, 0.047, 0.024, 0.149, 0.012, NA, NA}},
        {ZERO, -1.913, {0.808, NA, 0.0, 0.476, NA, 0.332, 2.076, NA, 2.163, NA}},
        {FULL, 0.000, {0.780, 0.401, 1.0, 0.476, 0.599, 0.303, 1.897, 1.967, NA, NA}},
        {ZERO, 0.000, {0.808, NA, 0.0, 0.476, NA, 0.332, 2.076, NA, 2.163, NA}},
        {FULL, 1.000, {0.926, 0.113, 1.0, 0.476, 0.887, 0.450, 2.810, 4.313, NA, NA}},
        {ZERO, 1.000, {0.808, NA, 0.0, 0.476, NA, 0.332, 2.076, NA, 2.163, NA}},
        {FULL, 1.391, {0.983, 0.000, 1.0, 0.476, 1.000, 0.507, 3.167, 5.476, NA, NA}},
        {ZERO, 1.391, {0.808, NA, 0.0, 0.476, NA, 0.332, 2.076, NA, 2.163, NA}},
    };
    return t;
}

// T3: eta=0.7, rho=0.07, d=1.5, hbar=0.5, b=0.2; high pollution intensity
Table make_t3() {
    Table t;
    t.id = TableId::T3;
    t.params = {0.2, 1.5, 0.07, 0.7, 0.0, 0.5};
    t.axis = Axis::Beta;
    t.columns = kLinearCols;
    t.rows = {
        {FULL, 0.000, {0.676, 0.214, 1.0, 0.467, 0.786, 0.209, 1.044, 0.816, NA, NA}},
        {ZERO, 0.000, {0.786, NA, 0.0, 0.467, NA, 0.319, 1.593, NA, 1.279, NA}},
        {FULL, 0.100, {0.689, 0.165, 1.0, 0.467, 0.835, 0.222, 1.109, 0.921, NA, NA}},
        {ZERO, 0.100, {0.786, NA, 0.0, 0.467, NA, 0.319, 1.593, NA, 1.279, NA}},
        {FULL, 0.200, {0.702, 0.116, 1.0, 0.467, 0.884, 0.235, 1.175, 1.033, NA, NA}},
        {ZERO, 0.200, {0.786, NA, 0.0, 0.467, NA, 0.319, 1.593, NA, 1.279, NA}},
        {FULL, 0.300, {0.715, 0.067, 1.0, 0.467, 0.933, 0.248, 1.240, 1.151, NA, NA}},
        {ZERO, 0.300, {0.786, NA, 0.0, 0.467, NA, 0.319, 1.593, NA, 1.279, NA}},
        {FULL, 0.400, {0.728, 0.017, 1.0, 0.467, 0.983, 0.261, 1.306, 1.276, NA, NA}},
        {ZERO, 0.400, {0.786, NA, 0.0, 0.467, NA, 0.319, 1.593, NA, 1.279, NA}},
        {FULL, 0.435, {0.733, 0.000, 1.0, 0.467, 1.000, 0.261, 1.328, 1.321, NA, NA}},
        {ZERO, 0.435, {0.786, NA, 0.0, 0.467, NA, 0.319, 1.593, NA, 1.279, NA}},
    };
    // Printed g_e contradicts the same row's h_e - mu_e = 0.733 - 0.467 =
    // 0.266 (steady-state identity g = h - mu) and duplicates the beta=0.4
    // cell; every other column of the row matches the closed forms.
    t.errata = {{10, Col::G, 0.266, "printed 0.261; corrected via g = h - mu"}};
    return t;
}

// T4: eta=0.3, rho=0.05, d=2, hbar=0.5, b=0.16; concave rebate, beta sweep
Table make_t4() {
    Table t;
    t.id = TableId::T4;
    t.params = {0.16, 2.0, 0.05, 0.3, 0.0, 0.5};
    t.axis = Axis::Beta;
    t.columns = kConcaveCols;
    t.rows = {
        {CONC, 0.000, {0.808, 0.999, 0.001, 0.476, 0.001, 0.332, 2.076, NA, NA, 2.163}},
        {ZERO, 0.000, {0.808, NA, 0.000, 0.476, NA, 0.332, 2.076, NA, 2.163, NA}},
        {CONC, 0.100, {0.813, 0.736, 0.397, 0.476, 0.264, 0.337, 2.108, NA, NA, 2.260}},
        {ZERO, 0.100, {0.808, NA, 0.000, 0.476, NA, 0.332, 2.076, NA, 2.163, NA}},
        {CONC, 0.200, {0.821, 0.577, 0.621, 0.476, 0.423, 0.345, 2.155, NA, NA, 2.410}},
        {ZERO, 0.200, {0.808, NA, 0.000, 0.476, NA, 0.332, 2.076, NA, 2.163, NA}},
        {CONC, 0.300, {0.830, 0.441, 0.801, 0.476, 0.559, 0.354, 2.210, NA, NA, 2.592}},
        {ZERO, 0.300, {0.808, NA, 0.000, 0.476, NA, 0.332, 2.076, NA, 2.163, NA}},
    };
    return t;
}

// T5: beta=1, rho=0.05, d=2, hbar=0.5, b=0.16; eta sweep
Table make_t5() {
    Table t;
    t.id = TableId::T5;
    t.params = {0.16, 2.0, 0.05, 0.65, 1.0, 0.5};
    t.axis = Axis::Eta;
    t.columns = kConcaveCols;
    t.rows = {
        {CONC, 0.650, {0.870, 0.001, 0.593, 0.476, 0.999, 0.394, 2.461, NA, NA, 3.487}},
        {ZERO, 0.650, {0.808, NA, 0.000, 0.476, NA, 0.332, 2.076, NA, 2.163, NA}},
        {CONC, 0.700, {0.867, 0.028, 0.540, 0.476, 0.972, 0.391, 2.444, NA, NA, 3.420}},
        {ZERO, 0.700, {0.808, NA, 0.000, 0.476, NA, 0.332, 2.076, NA, 2.163, NA}},
        {CONC, 0.800, {0.862, 0.074, 0.456, 0.476, 0.926, 0.386, 2.414, NA, NA, 3.308}},
        {ZERO, 0.800, {0.808, NA, 0.000, 0.476, NA, 0.332, 2.076, NA, 2.163, NA}},
        {CONC, 0.900, {0.858, 0.113, 0.392, 0.476, 0.887, 0.382, 2.389, NA, NA, 3.217}},
        {ZERO, 0.900, {0.808, NA, 0.000, 0.476, NA, 0.332, 2.076, NA, 2.163, NA}},
        {CONC, 1.000, {0.855, 0.146, 0.343, 0.476, 0.854, 0.379, 2.369, NA, NA, 3.143}},
        {ZERO, 1.000, {0.808, NA, 0.000, 0.476, NA, 0.332, 2.076, NA, 2.163, NA}},
    };
    return t;
}

// A1: eta=0.4, rho=0.07, d=0.9, hbar=0.5, b=0.3; all three regimes feasible
Table make_a1() {
    Table t;
    t.id = TableId::A1;
    t.params = {0.3, 0.9, 0.07, 0.4, 0.2, 0.5};
    t.axis = Axis::Beta;
    t.columns = kWideCols;
    t.rows = {
        {CONC, 0.2, {0.803, 0.689, 0.646, 0.467, 0.311, 0.336, 1.121, NA, NA, 0.642}},
        {FULL, 0.2, {0.785, 0.545, 1.0, 0.467, 0.455, 0.317, 1.058, 0.659, NA, NA}},
        {ZERO, 0.2, {0.779, NA, 0.0, 0.467, NA, 0.312, 1.040, NA, 0.551, NA}},
        {CONC, 0.3, {0.820, 0.586, 0.819, 0.467, 0.414, 0.353, 1.176, NA, NA, 0.775}},
        {FULL, 0.3, {0.810, 0.508, 1.0, 0.467, 0.492, 0.343, 1.143, 0.768, NA, NA}},
        {ZERO, 0.3, {0.779, NA, 0.0, 0.467, NA, 0.312, 1.040, NA, 0.551, NA}},
    };
    // Printed U contradicts the utility definition evaluated at the row's own
    // printed equilibrium (which yields 0.680); the adjacent beta=0.3 row and
    // every other column of this row match the closed forms.
    t.errata = {{0, Col::UConcave, 0.680,
                 "printed 0.642; corrected by evaluating U at the row's "
                 "printed equilibrium"}};
    return t;
}

// A2: same parameters; beta range where the concave restrictions fail
Table make_a2() {
    Table t;
    t.id = TableId::A2;
    t.params = {0.3, 0.9, 0.07, 0.4, 0.5, 0.5};
    t.axis = Axis::Beta;
    t.columns = kLinearCols;
    t.rows = {
        {FULL, 0.5, {0.862, 0.435, 1.0, 0.467, 0.565, 0.394, 1.314, 1.013, NA, NA}},
        {ZERO, 0.5, {0.779, NA, 0.0, 0.467, NA, 0.312, 1.040, NA, 0.551, NA}},
        {FULL, 0.6, {0.887, 0.398, 1.0, 0.467, 0.602, 0.420, 1.399, 1.148, NA, NA}},
        {ZERO, 0.6, {0.779, NA, 0.0, 0.467, 0.000, 0.312, 1.040, NA, 0.551, NA}},
        {FULL, 0.7, {0.913, 0.361, 1.0, 0.467, 0.639, 0.445, 1.485, 1.292, NA, NA}},
        {ZERO, 0.7, {0.779, NA, 0.0, 0.467, 0.000, 0.312, 1.040, NA, 0.551, NA}},
        {FULL, 0.8, {0.938, 0.325, 1.0, 0.467, 0.675, 0.471, 1.570, 1.444, NA, NA}},
        {ZERO, 0.8, {0.779, NA, 0.0, 0.467, 0.000, 0.312, 1.040, NA, 0.551, NA}},
        {FULL, 0.9, {0.964, 0.288, 1.0, 0.467, 0.712, 0.497, 1.655, 1.604, NA, NA}},
        {ZERO, 0.9, {0.779, NA, 0.0, 0.467, 0.000, 0.312, 1.040, NA, 0.551, NA}},
        {FULL, 1.0, {0.990, 0.251, 1.0, 0.467, 0.749, 0.522, 1.741, 1.773, NA, NA}},
        {ZERO, 1.0, {0.779, NA, 0.0, 0.467, 0.000, 0.312, 1.040, NA, 0.551, NA}},
    };
    return t;
}

// A3: same parameters; beta range where full fertilizer use is suboptimal
// (zero-fertilizer rows carrying both U columns, printed row order kept)
Table make_a3() {
    Table t;
    t.id = TableId::A3;
    t.params = {0.3, 0.9, 0.07, 0.4, 0.05, 0.5};
    t.axis = Axis::Beta;
    t.columns = kA3Cols;
    t.rows = {
        {ZERO, 0.050, {0.779, NA, 0.0, 0.467, NA, 0.312, 1.040, 0.510, 0.551, NA}},
        {ZERO, 0.000, {0.779, NA, 0.0, 0.467, NA, 0.312, 1.040, 0.465, 0.551, NA}},
        {ZERO, 0.160, {0.779, NA, 0.0, 0.467, NA, 0.312, 1.040, 0.617, 0.551, NA}},
        {ZERO, 0.400, {0.779, NA, 0.0, 0.467, NA, 0.312, 1.040, 0.887, 0.551, NA}},
    };
    return t;
}

}  // namespace

const char* col_name(Col c) {
    switch (c) {
        case Col::H: return "h_e";
        case Col::Psi: return "psi_e";
        case Col::Gamma: return "gamma_e";
        case Col::Mu: return "mu_e";
        case Col::Lambda: return "lambda_e";
        case Col::G: return "g_e";
        case Col::F: return "f_e";
        case Col::UFull: return "U_full";
        case Col::UZero: return "U_zero";
        case Col::UConcave: return "U_concave";
    }
    return "?";
}

const Table& table(TableId id) {
    static const Table t1 = make_t1();
    static const Table t2 = make_t2();
    static const Table t3 = make_t3();
    static const Table t4 = make_t4();
    static const Table t5 = make_t5();
    static const Table a1 = make_a1();
    static const Table a2 = make_a2();
    static const Table a3 = make_a3();
    switch (id) {
        case TableId::T1: return t1;
        case TableId::T2: return t2;
        case TableId::T3: return t3;
        case TableId::T4: return t4;
        case TableId::T5: return t5;
        case TableId::A1: return a1;
        case TableId::A2: return a2;
        case TableId::A3: return a3;
    }
    throw std::invalid_argument("unknown table id");
}

}  // namespace aquifer::golden
