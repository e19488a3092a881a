#include "hypercx/analysis.hpp"
#include "hypercx/rng.hpp"

#include <doctest.h>

using namespace hypercx;

namespace {

// Independent quadrature (tanh-sinh) used as the oracle for the mean-value
// integrals; deliberately a different rule from the library's adaptive one.
double tanh_sinh(const std::function<double(double)>& f, double a, double b) {
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    const double h = 1e-2;
    double acc = 0;
    for (int k = -600; k <= 600; ++k) {
        double t = k * h;
        double u = std::tanh(0.5 * M_PI * std::sinh(t));
        double w = 0.5 * M_PI * std::cosh(t) / std::pow(std::cosh(0.5 * M_PI * std::sinh(t)), 2);
        acc += w * f(mid + half * u);
    }
    return acc * h * half;
}

// K0-style integral for the unit gaussian mean value.
double bessel_oracle(double a) {
    return tanh_sinh([a](double s) { return std::exp(-a * std::cosh(s)); }, 0.0, 14.0);
}

} // namespace

TEST_CASE("hyperbolic coordinates") {
    auto c = to_hyperbolic(1, 0);
    CHECK(c.r == doctest::Approx(1.0));
    CHECK(c.t == doctest::Approx(0.0));
    CHECK(c.wedge == Wedge::PlusX);

    auto c2 = to_hyperbolic(std::cosh(1.0), std::sinh(1.0));
    CHECK(c2.r == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c2.t == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(to_hyperbolic(1, 1), OnCone);

    CHECK(std::string(wedge_name(to_hyperbolic(2, 1).wedge)) == "+x");
    CHECK(std::string(wedge_name(to_hyperbolic(-2, 1).wedge)) == "-x");
    CHECK(std::string(wedge_name(to_hyperbolic(1, 2).wedge)) == "+y");
    CHECK(std::string(wedge_name(to_hyperbolic(1, -2).wedge)) == "-y");

    Rng rng(81);
    for (int trial = 0; trial < 200; ++trial) {
        double x = rng.uniform(-3, 3), y = rng.uniform(-3, 3);
        if (std::fabs(x * x - y * y) < 1e-3) continue;
        auto back = from_hyperbolic(to_hyperbolic(x, y));
        CHECK(std::hypot(back[0] - x, back[1] - y) < 1e-12 * (1 + std::hypot(x, y)));
        // the invariant of the wedge: x^2 - y^2 = +- r^2
        auto hc = to_hyperbolic(x, y);
        CHECK(std::fabs(std::fabs(x * x - y * y) - hc.r * hc.r) < 1e-10);
    }
}

TEST_CASE("operator transform to polar form") {
    auto hc = Algebra::preset("hyperbolic_complex");
    CHECK(dbar_hyperbolic_identity_residual(parse("x0", hc), 2.0, 0.5) < 1e-12);
    CHECK(dbar_hyperbolic_identity_residual(parse("x0^2 - x1^2", hc), 1.5, -0.7) < 1e-12);
    CHECK(dbar_hyperbolic_identity_residual(parse("17/4", hc), 2.0, 1.2) == 0.0);
    Rng rng(83);
    for (int trial = 0; trial < 50; ++trial) {
        double r = rng.uniform(0.2, 2.5), t = rng.uniform(-1.5, 1.5);
        CHECK(dbar_hyperbolic_identity_residual(parse("v*v - j*x1 + exp(1/2*v)", hc),
                                                r * std::cosh(t), r * std::sinh(t)) < 1e-9);
    }
}

TEST_CASE("reciprocal is annihilated off the cone") {
    CHECK(E_holomorphic_max_residual({{2, 1}}) < 1e-8);
    CHECK(E_holomorphic_max_residual({{1, 2}}) < 1e-8);   // wedge +y
    CHECK(E_holomorphic_max_residual({{1, 0.999}}) < 1e-8); // near-cone, scale normalized
    CHECK_THROWS_AS(E_holomorphic_max_residual({{1, 1}}), OnCone);
}

TEST_CASE("mean value of the unit gaussian is the Bessel integral") {
    TestFunction phi = TestFunction::gaussian(1.0);
    QuadratureSpec quad;
    CHECK(mean_value_phi(phi, 0.5, quad) ==
          doctest::Approx(1.541506751248303).epsilon(1e-8)); // frozen oracle value
    for (double r : {0.25, 0.5, 1.0})
        CHECK(std::fabs(mean_value_phi(phi, r, quad) - bessel_oracle(r * r)) < 1e-7);
    // even symmetry: doubling the half-range integral matches
    double full = mean_value_phi(phi, 0.7, quad);
    double half = integrate([&](double t) { return phi(0.7 * std::cosh(t), 0.7 * std::sinh(t)); },
                            0.0, phi.t_cutoff(0.7, 1e-10, 50.0), 1e-9);
    CHECK(full == doctest::Approx(2 * half).epsilon(1e-7));

    // a bump supported on hyperbolic radii [1,2] misses the r = 1/2 hyperbola
    TestFunction bump = TestFunction::annular_bump(1.0, 2.0);
    CHECK(mean_value_phi(bump, 0.5, quad) == 0.0);
    CHECK(mean_value_phi(bump, 1.5, quad) > 0.0);
}

TEST_CASE("interchange of mean value and radial derivative") {
    TestFunction phi = TestFunction::gaussian(1.0);
    QuadratureSpec quad;
    const double r = 0.8, h = 1e-4;
    double fd = (mean_value_phi(phi, r + h, quad) - mean_value_phi(phi, r - h, quad)) / (2 * h);
    double T = phi.t_cutoff(r - h, 1e-10, 50.0);
    double mean_of_derivative = integrate(
        [&](double t) {
            Jet<double> x = Jet<double>::seed(r * std::cosh(t), 2, 0);
            Jet<double> y = Jet<double>::seed(r * std::sinh(t), 2, 1);
            Jet<double> p = phi(x, y);
            return std::cosh(t) * p.g[0] + std::sinh(t) * p.g[1];
        },
        -T, T, 1e-9);
    CHECK(std::fabs(fd - mean_of_derivative) < 1e-6);
}

TEST_CASE("truncated t-integral of a time derivative vanishes") {
    TestFunction phi = TestFunction::gaussian(1.0);
    const double r = 0.6;
    double T = phi.t_cutoff(r, 1e-10, 50.0);
    double integral = integrate(
        [&](double t) {
            Jet<double> x = Jet<double>::seed(r * std::cosh(t), 2, 0);
            Jet<double> y = Jet<double>::seed(r * std::sinh(t), 2, 1);
            Jet<double> p = phi(x, y);
            // du/dt along the hyperbola
            return r * std::sinh(t) * p.g[0] + r * std::cosh(t) * p.g[1];
        },
        -T, T, 1e-10);
    CHECK(std::fabs(integral) < 1e-8);
}

TEST_CASE("pairing recovers the mean value") {
    QuadratureSpec quad;
    TestFunction phi = TestFunction::gaussian(1.0);
    Element<double> pair = pairing_E(phi, 0.5, quad);
    CHECK(std::fabs(pair.c[0] - mean_value_phi(phi, 0.5, quad)) < 10 * quad.tol);
    CHECK(std::fabs(pair.c[0] - 1.541506751248303) < 1e-6);
    CHECK(std::fabs(pair.c[1]) < 10 * quad.tol);

    TestFunction bump = TestFunction::annular_bump(1.0, 2.0);
    Element<double> pair_bump = pairing_E(bump, 0.5, quad);
    CHECK(std::fabs(pair_bump.c[0]) < 10 * quad.tol);
    // eps beyond the support: nothing left to integrate
    Element<double> beyond = pairing_E(bump, 3.0, quad);
    CHECK(beyond.c[0] == 0.0);
    CHECK(beyond.c[1] == 0.0);
}

TEST_CASE("limit report is observational and tracks the oracle") {
    LimitReport report = limit_report(TestFunction::gaussian(1.0), {0.5, 0.1, 0.02});
    CHECK(report.phi_at_origin == doctest::Approx(1.0));
    REQUIRE(report.rows.size() == 3);
    CHECK(report.rows[0].phi_flat < report.rows[1].phi_flat);
    CHECK(report.rows[1].phi_flat < report.rows[2].phi_flat); // grows as eps shrinks
    CHECK(report.rows[0].phi_flat == doctest::Approx(1.541506751248303).epsilon(1e-6));
    CHECK(report.rows[1].phi_flat == doctest::Approx(4.721244730161095).epsilon(1e-6));
    CHECK(report.rows[2].phi_flat == doctest::Approx(7.93997788411381).epsilon(1e-6));

    LimitReport zero = limit_report(TestFunction::annular_bump(1.0, 2.0), {0.5, 0.25});
    CHECK(zero.phi_at_origin == 0.0);
    for (const auto& row : zero.rows) CHECK(row.phi_flat == 0.0);
}

TEST_CASE("tail bound failure is reported, not guessed") {
    TestFunction phi = TestFunction::gaussian(1.0);
    QuadratureSpec tight;
    tight.max_T = 2.0; // too small for the r = 0.05 hyperbola
    CHECK_THROWS_AS(mean_value_phi(phi, 0.05, tight), TailBoundFailed);
    CHECK_THROWS_AS(mean_value_phi(phi, -1.0, tight), DomainError);
}

TEST_CASE("limit report scales linearly with the amplitude") {
    const double amp = 2.5;
    LimitReport unit = limit_report(TestFunction::gaussian(1.0, 1.0), {0.5, 0.25});
    LimitReport scaled = limit_report(TestFunction::gaussian(1.0, amp), {0.5, 0.25});
    CHECK(scaled.phi_at_origin == doctest::Approx(amp));
    for (std::size_t i = 0; i < unit.rows.size(); ++i)
        CHECK(scaled.rows[i].phi_flat == doctest::Approx(amp * unit.rows[i].phi_flat));
}

TEST_CASE("symbol zero set coincides with characteristic membership") {
    Rng rng(121);
    for (int trial = 0; trial < 10000; ++trial) {
        std::array<double, 4> xi;
        for (auto& v : xi) v = rng.uniform(-2, 2);
        double n2 = xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2] + xi[3] * xi[3];
        if (n2 < 1e-6) continue;
        bool p_zero = std::abs(symbol_delta_plus(xi).p) < 1e-10 * n2;
        CHECK(p_zero == char_membership(xi));
    }
    for (int trial = 0; trial < 100; ++trial) {
        std::complex<double> mu(rng.uniform(-2, 2), rng.uniform(-2, 2));
        if (std::abs(mu) < 0.1) mu += 0.7;
        std::complex<double> lambda =
            std::polar(1.0, M_PI / 4) * mu * (trial % 2 ? 1.0 : -1.0);
        std::array<double, 4> xi = {lambda.real(), lambda.imag(), mu.real(), mu.imag()};
        double n2 = std::norm(lambda) + std::norm(mu);
        CHECK(std::abs(symbol_delta_plus(xi).p) < 1e-10 * n2);
        CHECK(char_membership(xi));
    }
}

TEST_CASE("symbol of the decomplexified operator") {
    SymbolResult s = symbol_delta_plus({1, 0, 0, 0});
    CHECK(s.p == std::complex<double>(-0.25, 0));

    SymbolResult s2 = symbol_delta_plus({1, 1, std::sqrt(2.0), 0});
    CHECK(std::abs(s2.p) < 1e-15);

    Rng rng(91);
    for (int trial = 0; trial < 1000; ++trial) {
        std::array<double, 4> xi;
        for (auto& v : xi) v = rng.uniform(-3, 3);
        SymbolResult r = symbol_delta_plus(xi);
        CHECK(std::abs(r.minus_4p - r.conj_form) < 1e-12);
    }
}

TEST_CASE("characteristic set membership") {
    CHECK(char_membership({1, 1, std::sqrt(2.0), 0}));
    CHECK_FALSE(char_membership({1, 0, 0, 0}));
    CHECK_THROWS_AS(char_membership({0, 0, 0, 0}), DomainError);

    // members scale: the set is conic
    for (double scale : {0.5, 2.0, 7.0})
        CHECK(char_membership({scale * 1, scale * 1, scale * std::sqrt(2.0), 0}));

    // membership forces lambda mu != 0
    Rng rng(97);
    for (int trial = 0; trial < 200; ++trial) {
        std::complex<double> mu(rng.uniform(-2, 2), rng.uniform(-2, 2));
        if (std::abs(mu) < 0.1) continue;
        std::complex<double> lambda = std::polar(1.0, M_PI / 4) * mu;
        CHECK(char_membership({lambda.real(), lambda.imag(), mu.real(), mu.imag()}));
        CHECK(std::abs(lambda) * std::abs(mu) > 0);
    }
}

TEST_CASE("fundamental solution of the decomplexified operator") {
    std::complex<double> v = eps_delta_plus({1, 0}, {0, 0});
    CHECK(std::abs(v - std::complex<double>(1.0 / (M_PI * M_PI), 0)) < 1e-15);

    std::complex<double> root = std::polar(1.0, M_PI / 4);
    CHECK_THROWS_AS(eps_delta_plus(root, {1, 0}), Singular);

    // closed form equals the two-factor product
    Rng rng(103);
    for (int trial = 0; trial < 100; ++trial) {
        std::complex<double> z(rng.uniform(-2, 2), rng.uniform(-2, 2));
        std::complex<double> w(rng.uniform(-2, 2), rng.uniform(-2, 2));
        if (std::abs(z - root * w) < 0.2 || std::abs(z + root * w) < 0.2) continue;
        std::complex<double> closed =
            1.0 / (M_PI * M_PI * (std::conj(z) * std::conj(z) +
                                  std::complex<double>(0, 1) * std::conj(w) * std::conj(w)));
        CHECK(std::abs(eps_delta_plus(z, w) - closed) < 1e-12);
        CHECK(eps_delta_plus_residual(z, w) < 1e-8);
    }
    CHECK(eps_delta_plus_residual({1, 0}, {1, 0}) < 1e-8);
}
