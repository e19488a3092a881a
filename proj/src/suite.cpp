#include "hypercx/suite.hpp"

#include "hypercx/analysis.hpp"
#include "hypercx/cr.hpp"
#include "hypercx/matrixrep.hpp"
#include "hypercx/rng.hpp"
#include "hypercx/special.hpp"

#include <cmath>
#include <complex>

namespace hypercx {

namespace {

CheckResult check(const std::string& id, const std::string& claim, nlohmann::json inputs,
                  nlohmann::json value, std::optional<double> tol, std::optional<bool> pass) {
    CheckResult r;
    r.id = id;
    r.claim = claim;
    r.inputs = std::move(inputs);
    r.value = std::move(value);
    r.tolerance = tol;
    r.pass = pass;
    return r;
}

// ---------------------------------------------------------------- criterion 1

CriterionResult criterion_cr_golden() {
    CriterionResult c{1, "CR golden suite: derived systems match the catalog", true, {}};
    struct Case {
        std::string id;
        std::string algebra;
        std::vector<std::string> ops;
    };
    const std::vector<Case> cases = {
        {"CR3", "complex", {"dzbar"}},
        {"CR6", "hyperbolic_complex", {"dzstar"}},
        {"CR8", "four_real_hyperbolic", {"dalphastar", "dbetastar"}},
        {"CR6pp", "bicomplex", {"dalphastar"}},
        {"CR6ppp", "double_complex", {"dalphastar"}},
        {"CR21", "hyperbolic_bicomplex", {"dalphastar"}},
        {"CR22", "bicomplex", {"dalphastar"}},
        {"CR5thm", "hyperbolic_double_complex", {"dqstar"}},
        {"CR27", "coquaternion", {"dqstar", "dqbarstar"}},
    };
    for (const auto& cs : cases) {
        CRSystem derived = derive_cr(Algebra::preset(cs.algebra), cs.ops);
        Diff diff = golden_compare(derived, cs.id);
        c.checks.push_back(check("cr_golden/" + cs.id, cs.id,
                                 {{"algebra", cs.algebra}, {"ops", cs.ops}},
                                 {{"missing", diff.missing}, {"extra", diff.extra}}, std::nullopt,
                                 diff.equal));
    }
    // the two even/odd couples of the dim-4 system
    CRSystem cr8 = derive_cr(Algebra::preset("four_real_hyperbolic"), {"dalphastar", "dbetastar"});
    for (const auto& [id, comps, coords] :
         std::vector<std::tuple<std::string, std::vector<int>, std::vector<int>>>{
             {"CR9a", {0, 2}, {0, 2}}, {"CR9b", {1, 3}, {1, 3}}}) {
        CRSystem sub = restrict_block(cr8, comps, coords);
        Diff diff = golden_compare(sub, id);
        c.checks.push_back(check("cr_golden/" + id, id,
                                 {{"algebra", "four_real_hyperbolic"},
                                  {"ops", {"dalphastar", "dbetastar"}},
                                  {"restrict_components", comps},
                                  {"restrict_coords", coords}},
                                 {{"missing", diff.missing}, {"extra", diff.extra}}, std::nullopt,
                                 diff.equal));
    }
    for (const auto& r : c.checks) c.pass = c.pass && r.pass.value_or(true);
    return c;
}

// ---------------------------------------------------------------- criterion 2

SecondOrderRelation relation(int comp, std::vector<std::tuple<int, int, long, long>> terms) {
    SecondOrderRelation r;
    r.component = comp;
    for (auto [k, l, re, im] : terms) r.terms[{k, l}] = PairCoeff{re, im};
    return r;
}

CriterionResult criterion_second_order() {
    CriterionResult c{2, "Second-order consequences of the first-order systems", true, {}};

    auto push = [&](const std::string& id, bool ok) {
        c.checks.push_back(check("second_order/" + id, id, {}, ok, std::nullopt, ok));
    };

    // complex -> Laplacian on both components
    auto cons3 = second_order_consequences(derive_cr(Algebra::preset("complex"), {"dzbar"}));
    push("laplace_f0", consequences_match(cons3, 0, {relation(0, {{0, 0, 1, 0}, {1, 1, 1, 0}})}));
    push("laplace_f1", consequences_match(cons3, 1, {relation(1, {{0, 0, 1, 0}, {1, 1, 1, 0}})}));

    // hyperbolic complex -> wave on both components
    auto cons6 =
        second_order_consequences(derive_cr(Algebra::preset("hyperbolic_complex"), {"dzstar"}));
    push("wave_f0", consequences_match(cons6, 0, {relation(0, {{0, 0, 1, 0}, {1, 1, -1, 0}})}));
    push("wave_f1", consequences_match(cons6, 1, {relation(1, {{0, 0, 1, 0}, {1, 1, -1, 0}})}));

    // hyperbolic bicomplex -> paired wave operator on both paired components,
    // through the paired presentation of the derived system
    auto hbc = Algebra::preset("hyperbolic_bicomplex");
    CRSystem sys21 = derive_cr(hbc, {"dalphastar"});
    WirtingerSystem w21;
    w21.alg = hbc;
    w21.inner_square = 1;
    w21.coord_names = {"z", "w"};
    w21.coord_conj = {false, false};
    w21.rows = wirtinger_presentation(sys21, hbc, false);
    auto cons21 = second_order_consequences(w21);
    push("delta_h_F0", consequences_match(cons21, 0, {relation(0, {{0, 0, 1, 0}, {1, 1, -1, 0}})}));
    push("delta_h_F1", consequences_match(cons21, 1, {relation(1, {{0, 0, 1, 0}, {1, 1, -1, 0}})}));

    // dim-4 couples -> the two wave systems
    CRSystem cr8 = derive_cr(Algebra::preset("four_real_hyperbolic"), {"dalphastar", "dbetastar"});
    auto consA = second_order_consequences(restrict_block(cr8, {0, 2}, {0, 2}));
    push("wave02_f0", consequences_match(consA, 0, {relation(0, {{0, 0, 1, 0}, {2, 2, -1, 0}})}));
    push("wave02_f2", consequences_match(consA, 2, {relation(2, {{0, 0, 1, 0}, {2, 2, -1, 0}})}));
    auto consB = second_order_consequences(restrict_block(cr8, {1, 3}, {1, 3}));
    push("wave13_f1", consequences_match(consB, 1, {relation(1, {{1, 1, 1, 0}, {3, 3, -1, 0}})}));
    push("wave13_f3", consequences_match(consB, 3, {relation(3, {{1, 1, 1, 0}, {3, 3, -1, 0}})}));

    for (const auto& r : c.checks) c.pass = c.pass && r.pass.value_or(true);
    return c;
}

// ---------------------------------------------------------------- criterion 3

const char* kDim4Example = "x0^2 + x2^2 + j*(x1^2 + x3^2) + j^2*(2*x0*x2) + j^3*(2*x1*x3)";

CriterionResult criterion_example_dim4(std::uint64_t seed) {
    CriterionResult c{3, "Holomorphy and wave residuals of the dim-4 example", true, {}};
    auto alg = Algebra::preset("four_real_hyperbolic");
    ExprPtr f = parse(kDim4Example, alg);

    SamplingSpec spec;
    spec.points = 64;
    spec.seed = seed;
    spec.tol = 1e-12;
    Verdict v = holomorphy_check(alg, f, spec);
    double worst = 0;
    for (const auto& [name, r] : v.residuals) worst = std::max(worst, r);
    c.checks.push_back(check("example_dim4/holomorphy", "example-holomorphy",
                             {{"expr", kDim4Example}, {"points", spec.points}}, worst, spec.tol,
                             v.pass));

    Rng rng(seed + 1);
    LinDiffOp wave02 = laplacian(alg, "wave02");
    LinDiffOp wave13 = laplacian(alg, "wave13");
    double worst02 = 0, worst13 = 0;
    for (int i = 0; i < 64; ++i) {
        Element<double> pt = zero_element<double>(alg);
        for (auto& x : pt.c) x = rng.uniform(-2, 2);
        JetElement jet = eval(f, hypercx::seed(pt));
        Element<double> a02 = apply(wave02, jet);
        Element<double> a13 = apply(wave13, jet);
        worst02 = std::max({worst02, std::fabs(a02.c[0]), std::fabs(a02.c[2])});
        worst13 = std::max({worst13, std::fabs(a13.c[1]), std::fabs(a13.c[3])});
    }
    c.checks.push_back(check("example_dim4/wave02", "example-wave02", {{"components", {0, 2}}},
                             worst02, 1e-12, worst02 < 1e-12));
    c.checks.push_back(check("example_dim4/wave13", "example-wave13", {{"components", {1, 3}}},
                             worst13, 1e-12, worst13 < 1e-12));
    for (const auto& r : c.checks) c.pass = c.pass && r.pass.value_or(true);
    return c;
}

// ---------------------------------------------------------------- criterion 4

CriterionResult criterion_determinant(std::uint64_t seed) {
    CriterionResult c{4, "Determinant identity and bounds on random integer vectors", true, {}};
    auto alg = Algebra::preset("four_real_hyperbolic");
    Rng rng(seed);
    int bad_residual = 0, bad_bounds = 0;
    const int trials = 10000;
    for (int i = 0; i < trials; ++i) {
        Element<Rational> x = zero_element<Rational>(alg);
        for (auto& v : x.c) v = rng.uniform_int(-5, 5);
        if (det_identity_residual(x) != 0) ++bad_residual;
        if (!det_bounds_check(x)) ++bad_bounds;
    }
    c.checks.push_back(check("determinant/identity", "det-identity", {{"trials", trials}},
                             bad_residual, std::nullopt, bad_residual == 0));
    c.checks.push_back(check("determinant/bounds", "det-bounds", {{"trials", trials}}, bad_bounds,
                             std::nullopt, bad_bounds == 0));
    c.pass = bad_residual == 0 && bad_bounds == 0;
    return c;
}

// ---------------------------------------------------------------- criterion 5

CriterionResult criterion_zero_divisor_grid() {
    CriterionResult c{5, "Zero-divisor criterion on the exhaustive integer grid", true, {}};
    auto hbc = Algebra::preset("hyperbolic_bicomplex");
    auto hc = Algebra::preset("hyperbolic_complex");
    int total = 0, literal_mismatches = 0, sufficiency_failures = 0, norm_mismatches = 0;
    nlohmann::json first_counterexample;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int cc = -2; cc <= 2; ++cc)
                for (int d = -2; d <= 2; ++d) {
                    if (a == 0 && b == 0 && cc == 0 && d == 0) continue;
                    ++total;
                    Element<Rational> alpha(hbc, {Rational(a), Rational(b), Rational(cc),
                                                  Rational(d)});
                    Element<Rational> zeta(hc, {Rational(a), Rational(b)});
                    Element<Rational> eta(hc, {Rational(cc), Rational(d)});
                    Element<Rational> diff = zeta * zeta - eta * eta;
                    bool zd = is_zero_divisor(alpha);
                    bool squares_equal = diff.c[0] == 0 && diff.c[1] == 0;
                    Rational norm = diff.c[0] * diff.c[0] - diff.c[1] * diff.c[1];
                    if (zd != squares_equal) {
                        ++literal_mismatches;
                        if (first_counterexample.is_null())
                            first_counterexample = {{"coeffs", {a, b, cc, d}},
                                                    {"is_zero_divisor", zd},
                                                    {"squares_equal", squares_equal}};
                    }
                    if (squares_equal && !zd) ++sufficiency_failures;
                    if (zd != (norm == 0)) ++norm_mismatches;
                }
    // The claimed equivalence as stated. It does not survive the full grid:
    // elements whose square difference is a nonzero null element (such as
    // 1 + j1) are zero divisors without satisfying the equality.
    c.checks.push_back(check("zero_divisor/grid_literal", "zero-divisor-grid",
                             {{"grid", "{-2..2}^4"}, {"total", total}},
                             nlohmann::json{{"mismatches", literal_mismatches},
                                            {"counterexample", first_counterexample}},
                             std::nullopt, literal_mismatches == 0));
    // What does hold on the same grid, with full agreement.
    c.checks.push_back(check("zero_divisor/grid_sufficiency", "zero-divisor-sufficient",
                             {{"grid", "{-2..2}^4"}}, sufficiency_failures, std::nullopt,
                             sufficiency_failures == 0));
    c.checks.push_back(check("zero_divisor/grid_null_norm", "zero-divisor-null-norm",
                             {{"grid", "{-2..2}^4"}}, norm_mismatches, std::nullopt,
                             norm_mismatches == 0));
    int real_pair_mismatches = 0;
    for (int z = -2; z <= 2; ++z)
        for (int e = -2; e <= 2; ++e) {
            if (!z && !e) continue;
            Element<Rational> alpha(hbc, {Rational(z), Rational(0), Rational(e), Rational(0)});
            if (is_zero_divisor(alpha) != (z * z == e * e)) ++real_pair_mismatches;
        }
    c.checks.push_back(check("zero_divisor/grid_real_pairs", "zero-divisor-real-pairs",
                             {{"grid", "{-2..2}^2 scalars"}}, real_pair_mismatches, std::nullopt,
                             real_pair_mismatches == 0));
    for (const auto& r : c.checks) c.pass = c.pass && r.pass.value_or(true);
    return c;
}

// ---------------------------------------------------------------- criterion 6

CriterionResult criterion_euler_exp(std::uint64_t seed) {
    CriterionResult c{6, "Exponential and trigonometric identities", true, {}};
    auto hc = Algebra::preset("hyperbolic_complex");
    Rng rng(seed);

    double worst = 0;
    for (int i = 0; i <= 100; ++i) {
        double t = -5.0 + 0.1 * i;
        Element<double> jt(hc, {0.0, t});
        worst = std::max(worst, max_abs(exp_series(jt, 1e-14) - euler_split(t)));
    }
    c.checks.push_back(
        check("euler_exp/euler_split", "euler-split", {{"grid", "[-5,5] step 0.1"}}, worst, 1e-12,
              worst < 1e-12));

    double worst_c = 0, worst_s = 0, worst_id = 0, worst_dc = 0, worst_ds = 0;
    for (int i = 0; i < 64; ++i) {
        std::complex<double> w(rng.uniform(-3, 3), rng.uniform(-3, 3));
        if (std::abs(w) > 3) w *= 3.0 / std::abs(w);
        worst_c = std::max(worst_c, std::abs(C_closed(w) - C_series(w)));
        worst_s = std::max(worst_s, std::abs(S_closed(w) - S_series(w)));
        std::complex<double> cw = C_closed(w), sw = S_closed(w);
        worst_id = std::max(worst_id,
                            std::abs(cw * cw - std::complex<double>(0, 1) * sw * sw - 1.0));
        auto [rc, rs] = dC_dS_identities(w);
        worst_dc = std::max(worst_dc, rc);
        worst_ds = std::max(worst_ds, rs);
    }
    c.checks.push_back(check("euler_exp/C_closed_vs_series", "C-closed-form", {{"points", 64}},
                             worst_c, 1e-10, worst_c < 1e-10));
    c.checks.push_back(check("euler_exp/S_closed_vs_series", "S-closed-form", {{"points", 64}},
                             worst_s, 1e-10, worst_s < 1e-10));
    // the printed form of this identity has 0 on the right; the series gives 1
    c.checks.push_back(check("euler_exp/C2_minus_iS2_equals_one", "C2-iS2-erratum",
                             {{"points", 64}}, worst_id, 1e-10, worst_id < 1e-10));
    c.checks.push_back(check("euler_exp/dC_is_iS", "dC-identity", {{"points", 64}}, worst_dc,
                             1e-10, worst_dc < 1e-10));
    c.checks.push_back(check("euler_exp/dS_is_C", "dS-identity", {{"points", 64}}, worst_ds,
                             1e-10, worst_ds < 1e-10));

    auto hdc = Algebra::preset("hyperbolic_double_complex");
    double worst_prod = 0;
    for (int i = 0; i < 200; ++i) {
        Element<double> alpha = zero_element<double>(hdc);
        for (auto& v : alpha.c) v = rng.uniform(-1, 1);
        worst_prod = std::max(worst_prod,
                              max_abs(exp_hyperbolic_dc(alpha) - exp_series(alpha, 1e-12)));
    }
    c.checks.push_back(check("euler_exp/exp_product_form", "exp-product-form", {{"points", 200}},
                             worst_prod, 1e-10, worst_prod < 1e-10));

    int nonzero = 0, flagged = 0;
    const int ntrials = 1000;
    for (int i = 0; i < ntrials; ++i) {
        Element<double> alpha = zero_element<double>(hdc);
        for (auto& v : alpha.c) v = rng.uniform(-2, 2);
        if (det_h(exp_series(alpha, 1e-12)) != 0.0) ++nonzero;
        Element<double> beta = zero_element<double>(hdc);
        for (auto& v : beta.c) v = rng.uniform(-1, 1);
        if (is_zero_divisor(exp_series(beta, 1e-12))) ++flagged;
    }
    c.checks.push_back(check("euler_exp/exp_invertible", "exp-not-zero-divisor",
                             {{"trials", ntrials}},
                             nlohmann::json{{"zero_dets", ntrials - nonzero}, {"flagged", flagged}},
                             std::nullopt, nonzero == ntrials && flagged == 0));

    for (const auto& r : c.checks) c.pass = c.pass && r.pass.value_or(true);
    return c;
}

// ---------------------------------------------------------------- criterion 7

CriterionResult criterion_exp_holomorphy(std::uint64_t seed) {
    CriterionResult c{7, "Holomorphy and harmonicity of the exponentials", true, {}};
    for (const auto& [alg_name, lap_name] :
         std::vector<std::pair<std::string, std::string>>{
             {"double_complex", "delta_plus"}, {"hyperbolic_double_complex", "delta_h"}}) {
        auto alg = Algebra::preset(alg_name);
        ExprPtr f = parse("exp(v)", alg);
        SamplingSpec spec;
        spec.points = 100;
        spec.seed = seed;
        spec.tol = 1e-9;
        Verdict v = holomorphy_check(alg, f, spec);
        double worst = 0;
        for (const auto& [name, r] : v.residuals) worst = std::max(worst, r);
        c.checks.push_back(check("exp_holomorphy/" + alg_name, "exp-dbar-" + alg_name,
                                 {{"points", spec.points}}, worst, spec.tol, v.pass));

        LinDiffOp lap = laplacian(alg, lap_name);
        Rng rng(seed + 7);
        double worst_lap = 0;
        for (int i = 0; i < 100; ++i) {
            Element<double> pt = zero_element<double>(alg);
            for (auto& x : pt.c) x = rng.uniform(-2, 2);
            JetElement jet = eval(f, hypercx::seed(pt));
            worst_lap = std::max(worst_lap, normalized_residual(lap, jet));
        }
        c.checks.push_back(check("exp_harmonic/" + alg_name, "exp-" + lap_name, {{"points", 100}},
                                 worst_lap, 1e-9, worst_lap < 1e-9));
    }
    for (const auto& r : c.checks) c.pass = c.pass && r.pass.value_or(true);
    return c;
}

// ---------------------------------------------------------------- criterion 8

CriterionResult criterion_fundamental_solution(std::uint64_t seed) {
    CriterionResult c{8, "Fundamental solution chain in hyperbolic coordinates", true, {}};
    Rng rng(seed);

    double worst_rt = 0;
    for (int i = 0; i < 200; ++i) {
        double x = rng.uniform(-3, 3), y = rng.uniform(-3, 3);
        if (std::fabs(x * x - y * y) < 1e-3) continue;
        auto back = from_hyperbolic(to_hyperbolic(x, y));
        double err = std::hypot(back[0] - x, back[1] - y) / (1.0 + std::hypot(x, y));
        worst_rt = std::max(worst_rt, err);
    }
    c.checks.push_back(check("fundsol/round_trip", "coords-round-trip", {{"points", 200}},
                             worst_rt, 1e-12, worst_rt < 1e-12));

    // Jacobian det of (r,t) -> (x,y) equals r; complex-step derivative in
    // each variable avoids cancellation entirely.
    double worst_jac = 0;
    const double h = 1e-20;
    for (int i = 0; i < 100; ++i) {
        double r = rng.uniform(0.2, 3), t = rng.uniform(-2, 2);
        std::complex<double> rr(r, h), tt(t, h);
        double dxdr = std::imag(rr * std::cosh(t)) / h;
        double dydr = std::imag(rr * std::sinh(t)) / h;
        double dxdt = std::imag(r * std::cosh(tt)) / h;
        double dydt = std::imag(r * std::sinh(tt)) / h;
        double det = dxdr * dydt - dxdt * dydr;
        worst_jac = std::max(worst_jac, std::fabs(det - r) / (1.0 + r));
    }
    c.checks.push_back(check("fundsol/jacobian", "area-element", {{"points", 100}}, worst_jac,
                             1e-10, worst_jac < 1e-10));

    auto hc = Algebra::preset("hyperbolic_complex");
    double worst_op = 0;
    for (const char* text : {"x0", "x0^2 - x1^2", "v*v", "exp(1/2*v)"}) {
        ExprPtr f = parse(text, hc);
        for (int i = 0; i < 25; ++i) {
            double t = rng.uniform(-1.5, 1.5), r = rng.uniform(0.2, 2.5);
            double x = r * std::cosh(t), y = r * std::sinh(t);
            worst_op = std::max(worst_op, dbar_hyperbolic_identity_residual(f, x, y));
        }
    }
    c.checks.push_back(check("fundsol/operator_transform", "dbar-polar-identity",
                             {{"points", 100}}, worst_op, 1e-9, worst_op < 1e-9));

    std::vector<std::array<double, 2>> pts;
    while (pts.size() < 50) {
        double x = rng.uniform(-3, 3), y = rng.uniform(-3, 3);
        if (std::fabs(x * x - y * y) > 0.05) pts.push_back({x, y});
    }
    pts.push_back({1.0, 0.999});
    double worst_E = E_holomorphic_max_residual(pts);
    c.checks.push_back(
        check("fundsol/E_holomorphic", "E-off-cone", {{"points", pts.size()}}, worst_E, 1e-8,
              worst_E < 1e-8));

    QuadratureSpec quad;
    std::vector<TestFunction> phis = {
        TestFunction::gaussian(1.0),
        TestFunction::poly_gaussian({0.5, 0.3, -0.2, 0.8, 0.1, 0.4}, 1.0),
        TestFunction::annular_bump(1.0, 2.0)};
    bool pairing_ok = true;
    nlohmann::json pairing_table = nlohmann::json::array();
    for (const auto& phi : phis)
        for (double eps : {0.25, 0.5, 1.0}) {
            double mean = mean_value_phi(phi, eps, quad);
            Element<double> pair = pairing_E(phi, eps, quad);
            double scalar_diff = std::fabs(pair.c[0] - mean);
            double j_part = std::fabs(pair.c[1]);
            bool ok = scalar_diff < 10 * quad.tol && j_part < 10 * quad.tol;
            pairing_ok = pairing_ok && ok;
            pairing_table.push_back({{"phi", phi.describe()},
                                     {"eps", eps},
                                     {"mean_value", mean},
                                     {"pairing_scalar", pair.c[0]},
                                     {"pairing_j", pair.c[1]},
                                     {"ok", ok}});
        }
    c.checks.push_back(check("fundsol/pairing_vs_mean", "pairing-mean-value", {},
                             pairing_table, 10 * quad.tol, pairing_ok));

    // independent route to the gaussian mean value: simple composite Simpson
    // on the even integral representation
    auto bessel_oracle = [](double a) {
        const double S = 14.0;
        const int n = 20000;
        double h = S / n, acc = 0;
        for (int i = 0; i <= n; ++i) {
            double s = i * h;
            double f = std::exp(-a * std::cosh(s));
            double w = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
            acc += w * f;
        }
        return acc * h / 3.0;
    };
    double worst_bessel = 0;
    for (double eps : {0.25, 0.5, 1.0}) {
        double mean = mean_value_phi(TestFunction::gaussian(1.0), eps, quad);
        worst_bessel = std::max(worst_bessel, std::fabs(mean - bessel_oracle(eps * eps)));
    }
    c.checks.push_back(check("fundsol/gaussian_oracle", "mean-value-oracle",
                             {{"eps", {0.25, 0.5, 1.0}}}, worst_bessel, 1e-6,
                             worst_bessel < 1e-6));

    // observational: the small-eps trend of the mean value
    LimitReport report = limit_report(TestFunction::gaussian(1.0), {0.5, 0.1, 0.02}, quad);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows)
        rows.push_back({{"eps", row.eps},
                        {"phi_flat", row.phi_flat},
                        {"oracle", bessel_oracle(row.eps * row.eps)}});
    c.checks.push_back(check("fundsol/limit_report", "mean-value-trend",
                             {{"phi_at_origin", report.phi_at_origin}}, rows, std::nullopt,
                             std::nullopt));

    for (const auto& r : c.checks) c.pass = c.pass && r.pass.value_or(true);
    return c;
}

// ---------------------------------------------------------------- criterion 9

CriterionResult criterion_symbol(std::uint64_t seed) {
    CriterionResult c{9, "Symbol, characteristic set and pointwise annihilation", true, {}};
    Rng rng(seed);

    SymbolResult s = symbol_delta_plus({1, 0, 0, 0});
    bool exact = s.p == std::complex<double>(-0.25, 0.0);
    c.checks.push_back(check("symbol/p_unit", "symbol-at-e1", {{"xi", {1, 0, 0, 0}}},
                             {{"re", s.p.real()}, {"im", s.p.imag()}}, std::nullopt, exact));

    double worst_id = 0;
    for (int i = 0; i < 1000; ++i) {
        std::array<double, 4> xi;
        for (auto& v : xi) v = rng.uniform(-3, 3);
        SymbolResult r = symbol_delta_plus(xi);
        worst_id = std::max(worst_id, std::abs(r.minus_4p - r.conj_form));
    }
    c.checks.push_back(check("symbol/conjugate_form", "symbol-identity", {{"points", 1000}},
                             worst_id, 1e-12, worst_id < 1e-12));

    int mismatch = 0, member_fail = 0, checked = 0;
    for (int i = 0; i < 10000; ++i) {
        std::array<double, 4> xi;
        for (auto& v : xi) v = rng.uniform(-2, 2);
        if (xi[0] == 0 && xi[1] == 0 && xi[2] == 0 && xi[3] == 0) continue;
        ++checked;
        try {
            char_membership(xi);
        } catch (const CharacterizationMismatch&) {
            ++mismatch;
        }
    }
    for (int i = 0; i < 100; ++i) {
        std::complex<double> mu(rng.uniform(-2, 2), rng.uniform(-2, 2));
        if (std::abs(mu) < 0.1) mu += std::complex<double>(0.5, 0);
        std::complex<double> lambda = std::polar(1.0, M_PI / 4) * mu * (i % 2 ? 1.0 : -1.0);
        std::array<double, 4> xi = {lambda.real(), lambda.imag(), mu.real(), mu.imag()};
        try {
            if (!char_membership(xi)) ++member_fail;
        } catch (const CharacterizationMismatch&) {
            ++mismatch;
        }
    }
    c.checks.push_back(check("symbol/char_agreement", "char-two-way",
                             {{"random", checked}, {"constructed", 100}},
                             nlohmann::json{{"mismatches", mismatch}, {"member_fails", member_fail}},
                             std::nullopt, mismatch == 0 && member_fail == 0));

    double worst_eps = 0;
    int found = 0;
    while (found < 50) {
        std::complex<double> z(rng.uniform(-2, 2), rng.uniform(-2, 2));
        std::complex<double> w(rng.uniform(-2, 2), rng.uniform(-2, 2));
        std::complex<double> root = std::polar(1.0, M_PI / 4);
        if (std::abs(z - root * w) < 0.3 || std::abs(z + root * w) < 0.3) continue;
        ++found;
        worst_eps = std::max(worst_eps, eps_delta_plus_residual(z, w));
    }
    c.checks.push_back(check("symbol/eps_annihilated", "eps-pointwise", {{"points", 50}},
                             worst_eps, 1e-8, worst_eps < 1e-8));

    for (const auto& r : c.checks) c.pass = c.pass && r.pass.value_or(true);
    return c;
}

// --------------------------------------------------------------- criterion 10

ExprPtr random_expression(Rng& rng, const AlgebraPtr& alg, int depth);

ExprPtr random_atom(Rng& rng, const AlgebraPtr& alg) {
    Expr n;
    switch (rng.uniform_int(0, 3)) {
    case 0:
        n.kind = Expr::Kind::Coord;
        n.index = static_cast<int>(rng.uniform_int(0, alg->dim() - 1));
        n.name = "x" + std::to_string(n.index);
        break;
    case 1:
        n.kind = Expr::Kind::Var;
        break;
    case 2: {
        n.kind = Expr::Kind::Unit;
        n.index = static_cast<int>(rng.uniform_int(0, alg->dim() - 1));
        n.name = alg->basis_labels()[n.index];
        break;
    }
    default:
        n.kind = Expr::Kind::Number;
        n.number = Rational(rng.uniform_int(-2, 2));
        break;
    }
    return std::make_shared<Expr>(std::move(n));
}

ExprPtr random_expression(Rng& rng, const AlgebraPtr& alg, int depth) {
    if (depth <= 0) return random_atom(rng, alg);
    Expr n;
    switch (rng.uniform_int(0, 5)) {
    case 0:
    case 1:
        n.kind = Expr::Kind::Add;
        n.a = random_expression(rng, alg, depth - 1);
        n.b = random_expression(rng, alg, depth - 1);
        break;
    case 2:
        n.kind = Expr::Kind::Sub;
        n.a = random_expression(rng, alg, depth - 1);
        n.b = random_expression(rng, alg, depth - 1);
        break;
    case 3:
        n.kind = Expr::Kind::Mul;
        n.a = random_expression(rng, alg, depth - 1);
        n.b = random_expression(rng, alg, depth - 1);
        break;
    case 4: {
        n.kind = Expr::Kind::Call;
        const char* fns[] = {"exp", "sin", "cos", "sinh", "cosh"};
        n.name = fns[rng.uniform_int(0, 4)];
        Expr scaled;
        scaled.kind = Expr::Kind::Mul;
        Expr half;
        half.kind = Expr::Kind::Number;
        half.number = Rational(1, 4);
        scaled.a = std::make_shared<Expr>(std::move(half));
        scaled.b = random_expression(rng, alg, depth - 1);
        n.a = std::make_shared<Expr>(std::move(scaled));
        break;
    }
    default:
        return random_atom(rng, alg);
    }
    return std::make_shared<Expr>(std::move(n));
}

CriterionResult criterion_structural(std::uint64_t seed) {
    CriterionResult c{10, "Structural checks: tables, isomorphism, jets", true, {}};

    bool assoc_ok = true;
    std::string assoc_msg = "all presets valid";
    for (const auto& name : Algebra::preset_names()) {
        try {
            Algebra::preset(name)->validate();
        } catch (const Error& e) {
            assoc_ok = false;
            assoc_msg = name + ": " + e.what();
        }
    }
    c.checks.push_back(check("structural/associativity", "preset-tables", {}, assoc_msg,
                             std::nullopt, assoc_ok));

    Rng rng(seed);
    auto dc = Algebra::preset("double_complex");
    auto bc = Algebra::preset("bicomplex");
    double worst_iso = 0;
    for (int i = 0; i < 1000; ++i) {
        Element<double> a = zero_element<double>(dc), b = zero_element<double>(dc);
        for (auto& v : a.c) v = rng.uniform(-2, 2);
        for (auto& v : b.c) v = rng.uniform(-2, 2);
        double hom = max_abs(bc_dc_isomorphism(a * b) - bc_dc_isomorphism(a) * bc_dc_isomorphism(b));
        double round = max_abs(bc_dc_isomorphism_inverse(bc_dc_isomorphism(a)) - a);
        Element<double> p = zero_element<double>(bc);
        for (auto& v : p.c) v = rng.uniform(-2, 2);
        double round2 = max_abs(bc_dc_isomorphism(bc_dc_isomorphism_inverse(p)) - p);
        worst_iso = std::max({worst_iso, hom, round, round2});
    }
    c.checks.push_back(check("structural/bc_dc_isomorphism", "ring-isomorphism",
                             {{"pairs", 1000}}, worst_iso, 1e-12, worst_iso < 1e-12));

    const std::vector<std::string> algebras = {"complex", "hyperbolic_complex",
                                               "four_real_hyperbolic", "bicomplex",
                                               "coquaternion"};
    double worst_fd = 0;
    for (int trial = 0; trial < 100; ++trial) {
        auto alg = Algebra::preset(algebras[trial % algebras.size()]);
        ExprPtr f = random_expression(rng, alg, 3);
        Element<double> pt = zero_element<double>(alg);
        for (auto& v : pt.c) v = rng.uniform(-0.8, 0.8);
        JetElement jet = eval(f, hypercx::seed(pt));
        const double h = 1e-4;
        auto value_at = [&](const Element<double>& p) { return eval(f, p); };
        for (int k = 0; k < alg->dim(); ++k) {
            Element<double> up = pt, dn = pt;
            up.c[k] += h;
            dn.c[k] -= h;
            Element<double> fup = value_at(up), fdn = value_at(dn);
            Element<double> fd = (1.0 / (2 * h)) * (fup - fdn);
            worst_fd = std::max(worst_fd, max_abs(fd - jet_partial(jet, k)));
            // diagonal second partial
            Element<double> mid = value_at(pt);
            Element<double> fdd = (1.0 / (h * h)) * ((fup - mid) - (mid - fdn));
            worst_fd = std::max(worst_fd, max_abs(fdd - jet_partial2(jet, k, k)));
            for (int l = k + 1; l < alg->dim(); ++l) {
                Element<double> pp = pt, pm = pt, mp = pt, mm = pt;
                pp.c[k] += h; pp.c[l] += h;
                pm.c[k] += h; pm.c[l] -= h;
                mp.c[k] -= h; mp.c[l] += h;
                mm.c[k] -= h; mm.c[l] -= h;
                Element<double> mixed = (1.0 / (4 * h * h)) *
                                        ((value_at(pp) - value_at(pm)) -
                                         (value_at(mp) - value_at(mm)));
                worst_fd = std::max(worst_fd, max_abs(mixed - jet_partial2(jet, k, l)));
            }
        }
    }
    c.checks.push_back(check("structural/jets_vs_fd", "jets-finite-differences",
                             {{"expressions", 100}}, worst_fd, 1e-6, worst_fd < 1e-6));

    for (const auto& r : c.checks) c.pass = c.pass && r.pass.value_or(true);
    return c;
}

} // namespace

std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& options) {
    std::vector<CriterionResult> out;
    Rng root(options.seed);
    out.push_back(criterion_cr_golden());
    out.push_back(criterion_second_order());
    out.push_back(criterion_example_dim4(root.fork(3).next()));
    out.push_back(criterion_determinant(root.fork(4).next()));
    out.push_back(criterion_zero_divisor_grid());
    out.push_back(criterion_euler_exp(root.fork(6).next()));
    out.push_back(criterion_exp_holomorphy(root.fork(7).next()));
    out.push_back(criterion_fundamental_solution(root.fork(8).next()));
    out.push_back(criterion_symbol(root.fork(9).next()));
    out.push_back(criterion_structural(root.fork(10).next()));
    return out;
}

} // namespace hypercx
