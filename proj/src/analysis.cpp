#include "hypercx/analysis.hpp"

#include "hypercx/operators.hpp"

#include <cmath>

namespace hypercx {

// --- coordinates --------------------------------------------------------------

HyperbolicCoords to_hyperbolic(double x, double y) {
    double q = x * x - y * y;
    if (std::fabs(q) <= 1e-12 * (x * x + y * y))
        throw OnCone("point lies on the cone x^2 = y^2");
    HyperbolicCoords c;
    if (q > 0) {
        c.r = std::sqrt(q);
        c.t = std::atanh(y / x);
        c.wedge = x > 0 ? Wedge::PlusX : Wedge::MinusX;
    } else {
        c.r = std::sqrt(-q);
        c.t = std::atanh(x / y);
        c.wedge = y > 0 ? Wedge::PlusY : Wedge::MinusY;
    }
    return c;
}

std::array<double, 2> from_hyperbolic(const HyperbolicCoords& c) {
    double ch = c.r * std::cosh(c.t), sh = c.r * std::sinh(c.t);
    switch (c.wedge) {
    case Wedge::PlusX: return {ch, sh};
    case Wedge::MinusX: return {-ch, -sh};
    case Wedge::PlusY: return {sh, ch};
    case Wedge::MinusY: return {-sh, -ch};
    }
    return {0, 0};
}

const char* wedge_name(Wedge w) {
    switch (w) {
    case Wedge::PlusX: return "+x";
    case Wedge::MinusX: return "-x";
    case Wedge::PlusY: return "+y";
    case Wedge::MinusY: return "-y";
    }
    return "?";
}

// --- test functions -----------------------------------------------------------

TestFunction TestFunction::gaussian(double width, double amplitude) {
    TestFunction f;
    double inv_w2 = 1.0 / (width * width);
    f.eval_ = [amplitude, inv_w2](const Jet<double>& x, const Jet<double>& y) {
        Jet<double> rho2 = x * x + y * y;
        return amplitude * exp(-inv_w2 * rho2);
    };
    f.env_amp_ = std::fabs(amplitude);
    f.env_width_ = width;
    f.description_ = "gaussian(width=" + std::to_string(width) + ")";
    return f;
}

TestFunction TestFunction::poly_gaussian(const std::array<double, 6>& poly, double width) {
    TestFunction f;
    double inv_w2 = 1.0 / (width * width);
    f.eval_ = [poly, inv_w2](const Jet<double>& x, const Jet<double>& y) {
        Jet<double> p = Jet<double>(poly[0]) + poly[1] * x + poly[2] * y + poly[3] * (x * x) +
                        poly[4] * (x * y) + poly[5] * (y * y);
        return p * exp(-inv_w2 * (x * x + y * y));
    };
    double coeff_sum = 0;
    for (double c : poly) coeff_sum += std::fabs(c);
    // |p| <= coeff_sum (1 + rho)^2 <= coeff_sum e^{2 rho}; widen the envelope
    // width instead of tracking the polynomial factor exactly.
    f.env_amp_ = 40.0 * coeff_sum;
    f.env_width_ = 1.3 * width;
    f.description_ = "poly_gaussian(width=" + std::to_string(width) + ")";
    return f;
}

TestFunction TestFunction::annular_bump(double r0, double r1) {
    if (!(0 < r0 && r0 < r1)) throw DomainError("annular_bump needs 0 < r0 < r1");
    TestFunction f;
    double a = r0 * r0, b = r1 * r1;
    f.eval_ = [a, b](const Jet<double>& x, const Jet<double>& y) {
        Jet<double> q = x * x - y * y;
        // within 1e-12 of either hyperbola the value is below e^{-1e12}:
        // indistinguishable from zero and kept out of the reciprocal
        if (x.v <= 0 || q.v <= a + 1e-12 || q.v >= b - 1e-12)
            return Jet<double>(0.0, x.vars());
        // exp(-1/((q-a)(b-q))) vanishes to all orders at both hyperbolas
        Jet<double> window = (q - Jet<double>(a)) * (Jet<double>(b) - q);
        return exp(-reciprocal(window)) * exp(-(x * x + y * y));
    };
    f.env_amp_ = 1.0;
    f.env_width_ = 1.0;
    f.support_r_max_ = r1;
    f.description_ = "annular_bump(" + std::to_string(r0) + "," + std::to_string(r1) + ")";
    return f;
}

Jet<double> TestFunction::operator()(const Jet<double>& x, const Jet<double>& y) const {
    return eval_(x, y);
}

double TestFunction::operator()(double x, double y) const {
    return eval_(Jet<double>(x), Jet<double>(y)).v;
}

double TestFunction::t_cutoff(double r, double bound, double max_T) const {
    // On the hyperbola, rho^2 = r^2 cosh(2t); the envelope is decreasing in
    // |t|, so step until it is below the bound.
    double safe = bound / (1.0 + env_amp_);
    for (double T = 1.0; T <= max_T; T += 0.5) {
        double rho2 = r * r * std::cosh(2 * T);
        if (std::exp(-rho2 / (env_width_ * env_width_)) < safe) return T;
    }
    throw TailBoundFailed("envelope of " + description_ + " does not fall below " +
                          std::to_string(bound) + " before T = " + std::to_string(max_T));
}

double TestFunction::r_cutoff(double bound, double max_R) const {
    if (support_r_max_ > 0) return support_r_max_ + 0.5;
    double safe = bound / (1.0 + env_amp_);
    for (double R = 1.0; R <= max_R; R += 0.5) {
        if (std::exp(-R * R / (env_width_ * env_width_)) < safe) return R;
    }
    throw TailBoundFailed("radial envelope of " + description_ + " does not reach " +
                          std::to_string(bound));
}

// --- quadrature ---------------------------------------------------------------

namespace {

// 10-point Gauss-Legendre rule on [-1, 1].
constexpr double kGLNodes[10] = {
    -0.9739065285171717, -0.8650633666889845, -0.6794095682990244, -0.4333953941292472,
    -0.14887433898163122, 0.14887433898163122, 0.4333953941292472, 0.6794095682990244,
    0.8650633666889845,  0.9739065285171717};
constexpr double kGLWeights[10] = {
    0.06667134430868807, 0.14945134915058036, 0.219086362515982, 0.2692667193099965,
    0.295524224714753,   0.295524224714753,   0.2692667193099965, 0.219086362515982,
    0.14945134915058036, 0.06667134430868807};

double gl10(const std::function<double(double)>& f, double a, double b) {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0;
    for (int i = 0; i < 10; ++i) acc += kGLWeights[i] * f(mid + half * kGLNodes[i]);
    return acc * half;
}

double adaptive(const std::function<double(double)>& f, double a, double b, double whole,
                double tol, int depth) {
    double mid = 0.5 * (a + b);
    double left = gl10(f, a, mid), right = gl10(f, mid, b);
    double err = std::fabs(left + right - whole);
    if (err < tol || depth <= 0) return left + right;
    return adaptive(f, a, mid, left, tol * 0.5, depth - 1) +
           adaptive(f, mid, b, right, tol * 0.5, depth - 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 int max_depth) {
    if (a >= b) return 0;
    // seed with a few panels so narrow features are not missed
    int panels = std::max(4, static_cast<int>((b - a) / 0.5));
    panels = std::min(panels, 64);
    double acc = 0, h = (b - a) / panels;
    for (int i = 0; i < panels; ++i) {
        double lo = a + i * h, hi = lo + h;
        acc += adaptive(f, lo, hi, gl10(f, lo, hi), tol / panels, max_depth);
    }
    return acc;
}

// --- mean value and pairing ----------------------------------------------------

double mean_value_phi(const TestFunction& phi, double r, const QuadratureSpec& quad) {
    if (!(r > 0)) throw DomainError("mean_value_phi needs r > 0");
    double T = phi.t_cutoff(r, quad.tol * 1e-2, quad.max_T);
    auto integrand = [&](double t) { return phi(r * std::cosh(t), r * std::sinh(t)); };
    return integrate(integrand, -T, T, quad.tol * 0.5, quad.max_depth);
}

Element<double> pairing_E(const TestFunction& phi, double eps, const QuadratureSpec& quad) {
    if (!(eps > 0)) throw DomainError("pairing_E needs eps > 0");
    auto alg = Algebra::preset("hyperbolic_complex");
    double R = phi.r_cutoff(quad.tol * 1e-2, 1e4);
    if (R <= eps) return zero_element<double>(alg);
    double T = phi.t_cutoff(std::min(eps, R), quad.tol * 1e-2 / (1.0 + R), quad.max_T);

    // integrand(r, t) = (2/z) (dphi/dz*) r  with z = r e^{jt}
    auto slice = [&](double r, int comp) {
        return [&phi, r, comp](double t) {
            double ch = std::cosh(t), sh = std::sinh(t);
            Jet<double> x = Jet<double>::seed(r * ch, 2, 0);
            Jet<double> y = Jet<double>::seed(r * sh, 2, 1);
            Jet<double> p = phi(x, y);
            double dstar_re = 0.5 * p.g[0];
            double dstar_im = -0.5 * p.g[1];
            // 2/z * r = 2 (cosh t - j sinh t); multiply in the split algebra
            double a = 2 * ch, b = -2 * sh;
            double re = a * dstar_re + b * dstar_im;
            double im = a * dstar_im + b * dstar_re;
            return comp == 0 ? re : im;
        };
    };
    double inner_tol = quad.tol * 0.05 / (R - eps);
    Element<double> out = zero_element<double>(alg);
    for (int comp = 0; comp < 2; ++comp) {
        auto outer = [&](double r) {
            return integrate(slice(r, comp), -T, T, inner_tol, quad.max_depth);
        };
        out.c[comp] = -integrate(outer, eps, R, quad.tol * 0.45, quad.max_depth);
    }
    return out;
}

LimitReport limit_report(const TestFunction& phi, const std::vector<double>& eps_grid,
                         const QuadratureSpec& quad) {
    LimitReport report;
    report.phi_at_origin = phi(0.0, 0.0);
    for (double eps : eps_grid) report.rows.push_back({eps, mean_value_phi(phi, eps, quad)});
    return report;
}

double dbar_hyperbolic_identity_residual(const ExprPtr& f, double x, double y) {
    HyperbolicCoords hc = to_hyperbolic(x, y);
    if (hc.wedge != Wedge::PlusX) throw DomainError("identity check expects a wedge +x point");
    auto alg = Algebra::preset("hyperbolic_complex");
    JetElement jet = eval(f, seed(Element<double>(alg, {x, y})));
    Element<double> fx = jet_partial(jet, 0), fy = jet_partial(jet, 1);

    Element<double> lhs = scale(fx - basis_element<double>(alg, 1) * fy, Rational(1, 2));

    double ch = std::cosh(hc.t), sh = std::sinh(hc.t);
    Element<double> fr = ch * fx + sh * fy;
    Element<double> ft = (hc.r * sh) * fx + (hc.r * ch) * fy;
    Element<double> ejt(alg, {ch, sh});
    Element<double> jr(alg, {0.0, 1.0 / hc.r});
    Element<double> rhs = scale(ejt * (fr - jr * ft), Rational(1, 2));
    return max_abs(lhs - rhs);
}

double E_holomorphic_max_residual(const std::vector<std::array<double, 2>>& points) {
    auto alg = Algebra::preset("hyperbolic_complex");
    ExprPtr f = parse("1/v", alg);
    LinDiffOp dstar = dbar(alg, "dzstar");
    double worst = 0;
    for (const auto& [x, y] : points) {
        to_hyperbolic(x, y); // raises OnCone for invalid points
        JetElement jet = eval(f, seed(Element<double>(alg, {x, y})));
        double scale_norm = 1.0;
        for (const auto& j : jet.c)
            for (double g : j.g) scale_norm = std::max(scale_norm, std::fabs(g));
        worst = std::max(worst, max_abs(apply(dstar, jet)) / scale_norm);
    }
    return worst;
}

// --- symbol / characteristic set ------------------------------------------------

namespace {
const std::complex<double> kI(0.0, 1.0);
}

SymbolResult symbol_delta_plus(const std::array<double, 4>& xi) {
    std::complex<double> t1 = kI * xi[0] + xi[1];
    std::complex<double> t2 = kI * xi[2] + xi[3];
    SymbolResult r;
    r.p = 0.25 * (t1 * t1 + kI * t2 * t2);
    r.minus_4p = -4.0 * r.p;
    std::complex<double> lambda(xi[0], xi[1]), mu(xi[2], xi[3]);
    r.conj_form = std::conj(lambda) * std::conj(lambda) + kI * std::conj(mu) * std::conj(mu);
    return r;
}

bool char_membership(const std::array<double, 4>& xi, double tol) {
    double n2 = xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2] + xi[3] * xi[3];
    if (n2 == 0) throw DomainError("char_membership needs xi != 0");
    double q1 = xi[0] * xi[0] - xi[1] * xi[1] + 2 * xi[2] * xi[3];
    double q2 = xi[2] * xi[2] - xi[3] * xi[3] - 2 * xi[0] * xi[1];
    bool real_member = std::fabs(q1) + std::fabs(q2) < tol * n2;

    std::complex<double> lambda(xi[0], xi[1]), mu(xi[2], xi[3]);
    std::complex<double> root = std::polar(1.0, M_PI / 4);
    double param_dist = std::min(std::abs(lambda - root * mu), std::abs(lambda + root * mu));
    bool param_member = param_dist < tol * std::sqrt(n2);

    if (real_member != param_member) {
        // tolerate verdicts straddling the tolerance band; a decisive
        // disagreement means the two characterizations diverged
        double real_metric = (std::fabs(q1) + std::fabs(q2)) / n2;
        double param_metric = param_dist / std::sqrt(n2);
        bool near_boundary = (real_metric > tol * 1e-2 && real_metric < tol * 1e2) ||
                             (param_metric > tol * 1e-2 && param_metric < tol * 1e2);
        if (!near_boundary)
            throw CharacterizationMismatch("real and parametric membership tests disagree");
    }
    return real_member;
}

std::complex<double> eps_delta_plus(std::complex<double> z, std::complex<double> w) {
    std::complex<double> root = std::polar(1.0, M_PI / 4);
    std::complex<double> u1 = z + root * w, u2 = z - root * w;
    double scale = std::abs(z) + std::abs(w);
    if (std::abs(u1) < 1e-12 * (1 + scale) || std::abs(u2) < 1e-12 * (1 + scale))
        throw Singular("z = +-e^{i pi/4} w is the singular set");
    auto e1 = [](std::complex<double> u) { return 1.0 / (M_PI * std::conj(u)); };
    return e1(u1) * e1(u2);
}

double eps_delta_plus_residual(std::complex<double> z, std::complex<double> w) {
    using CJ = Jet<std::complex<double>>;
    std::array<double, 4> x = {z.real(), z.imag(), w.real(), w.imag()};
    CJ x0 = CJ::seed(x[0], 4, 0), x1 = CJ::seed(x[1], 4, 1);
    CJ x2 = CJ::seed(x[2], 4, 2), x3 = CJ::seed(x[3], 4, 3);
    CJ zbar = x0 - kI * x1, wbar = x2 - kI * x3;
    CJ denom = std::complex<double>(M_PI * M_PI) * (zbar * zbar + kI * (wbar * wbar));
    if (std::abs(denom.v) < 1e-10) throw Singular("evaluation point too close to singular set");
    CJ eps = reciprocal(denom);
    // Delta_plus = d^2/dz^2 + i d^2/dw^2 with dz = 1/2 (d0 - i d1)
    std::complex<double> dz2 = 0.25 * (eps.hess(0, 0) - eps.hess(1, 1) -
                                       2.0 * kI * eps.hess(0, 1));
    std::complex<double> dw2 = 0.25 * (eps.hess(2, 2) - eps.hess(3, 3) -
                                       2.0 * kI * eps.hess(2, 3));
    return std::abs(dz2 + kI * dw2);
}

} // namespace hypercx
