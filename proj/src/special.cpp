#include "hypercx/special.hpp"

namespace hypercx {

namespace detail {

int exp_terms_needed(double bound, double tol) {
    // term_k = bound^k / k!; stop once the geometric tail estimate drops
    // below tol. A few extra terms cover the jet magnitude folded into bound.
    double term = 1.0;
    int k = 0;
    while (k < 400) {
        ++k;
        term *= bound / k;
        if (k > bound && term / (1.0 - bound / (k + 1)) < tol) break;
    }
    return k + 4;
}

} // namespace detail

Element<double> euler_split(double t) {
    auto alg = Algebra::preset("hyperbolic_complex");
    return Element<double>(alg, {std::cosh(t), std::sinh(t)});
}

namespace {

const std::complex<double> kI(0.0, 1.0);

} // namespace

std::complex<double> C_closed(std::complex<double> w) {
    return std::cos((1.0 - kI) / std::sqrt(2.0) * w);
}

std::complex<double> S_closed(std::complex<double> w) {
    return (1.0 + kI) / std::sqrt(2.0) * std::sin((1.0 - kI) / std::sqrt(2.0) * w);
}

std::complex<double> C_series(std::complex<double> w) {
    // sum_k i^k w^{2k} / (2k)!
    std::complex<double> acc = 0, term = 1;
    for (int k = 0; k < 90; ++k) {
        if (k > 0) term *= kI * w * w / (2.0 * k * (2.0 * k - 1.0));
        acc += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(acc))) break;
    }
    return acc;
}

std::complex<double> S_series(std::complex<double> w) {
    // sum_k i^k w^{2k+1} / (2k+1)!
    std::complex<double> acc = 0, term = w;
    for (int k = 0; k < 90; ++k) {
        if (k > 0) term *= kI * w * w / (2.0 * k * (2.0 * k + 1.0));
        acc += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(acc))) break;
    }
    return acc;
}

std::pair<double, double> dC_dS_identities(std::complex<double> w) {
    using CJ = Jet<std::complex<double>>;
    CJ wj = CJ::seed(w, 1, 0);
    const std::complex<double> u = (1.0 - kI) / std::sqrt(2.0);
    CJ c = cos(u * wj);
    CJ s = ((1.0 + kI) / std::sqrt(2.0)) * sin(u * wj);
    double rc = std::abs(c.g[0] - kI * s.v);
    double rs = std::abs(s.g[0] - c.v);
    return {rc, rs};
}

double exp_derivative_identity_residual(double wr, double wi) {
    // e^{jw} on double_complex as a function of (Re w, Im w); the complex
    // derivative 1/2 (d/dwr - i d/dwi) applied componentwise must equal
    // multiplication by j.
    auto alg = Algebra::preset("double_complex");
    JetElement arg = zero_element<Jet<double>>(alg);
    // j*w has components (0, wr, 0, wi) in basis (1, j, j^2, j^3)
    arg.c[1] = Jet<double>::seed(wr, 2, 0);
    arg.c[3] = Jet<double>::seed(wi, 2, 1);
    JetElement e = exp_series(arg, 1e-15);

    Element<double> d_re = jet_partial(e, 0);
    Element<double> d_im = jet_partial(e, 1);
    // 1/2 (d_re - i d_im) with i = j^2 acting by left multiplication
    Element<double> i_elem = basis_element<double>(alg, 2);
    Element<double> deriv = scale(d_re - i_elem * d_im, Rational(1, 2));
    Element<double> want = basis_element<double>(alg, 1) * jet_values(e);
    return max_abs(deriv - want);
}

Element<double> exp_hyperbolic_dc(const Element<double>& alpha) {
    auto alg = alpha.alg;
    if (alg->dim() != 4) throw AlgebraMismatch("exp_hyperbolic_dc expects a dim-4 element");
    const double x0 = alpha.c[0], x1 = alpha.c[1], x2 = alpha.c[2], x3 = alpha.c[3];
    auto el = [&](double a, double b, double c, double d) {
        return Element<double>(alg, {a, b, c, d});
    };
    Element<double> head = el(std::exp(x0) * std::cosh(x2), 0, std::exp(x0) * std::sinh(x2), 0);
    Element<double> bracket1 = el(std::cosh(x1) + std::cos(x1), std::sinh(x1) + std::sin(x1),
                                  std::cosh(x1) - std::cos(x1), std::sinh(x1) - std::sin(x1));
    Element<double> bracket3 = el(std::cosh(x3) + std::cos(x3), std::sinh(x3) - std::sin(x3),
                                  std::cosh(x3) - std::cos(x3), std::sinh(x3) + std::sin(x3));
    return scale(head * bracket1 * bracket3, Rational(1, 4));
}

} // namespace hypercx
