#ifndef HYPERCX_SPECIAL_HPP
#define HYPERCX_SPECIAL_HPP

#include "hypercx/jet.hpp"

#include <complex>
#include <utility>

namespace hypercx {

namespace detail {

/// Infinity norm of the regular representation, with jet magnitudes folded
/// in. Submultiplicative, so scalar exp tails bound the element series tail.
template <class S>
double series_norm(const Element<S>& a) {
    Mat<S> r = represent(a);
    double worst = 0;
    for (int i = 0; i < r.rows; ++i) {
        double row = 0;
        for (int j = 0; j < r.cols; ++j) row += scalar_mag(r(i, j));
        worst = std::max(worst, row);
    }
    return worst;
}

/// Smallest N with sum_{k>N} M^k / k! < tol (plus a small safety margin).
int exp_terms_needed(double bound, double tol);

} // namespace detail

/// Per-term coefficient patterns for the entire series used here.
enum class SeriesKind { Exp, Cos, Sin, Cosh, Sinh };

/// sum c_k a^k with the remainder controlled through the operator-norm bound
/// of represent(a). Defined for float and jet scalars; exact mode is refused
/// (the sum is not a rational quantity).
template <class S>
Element<S> analytic_series(SeriesKind kind, const Element<S>& a, double tol = 1e-14) {
    if constexpr (ScalarTraits<S>::exact) {
        (void)kind;
        (void)a;
        (void)tol;
        throw ModeError("series functions are float-mode only");
    } else {
        const int terms = detail::exp_terms_needed(detail::series_norm(a), tol);
        Element<S> power = unit_element<S>(a.alg);
        Element<S> acc = zero_element<S>(a.alg);
        Rational factorial = 1;
        for (int k = 0; k <= terms; ++k) {
            if (k > 0) {
                power = power * a;
                factorial *= k;
            }
            Rational coeff = 0;
            switch (kind) {
            case SeriesKind::Exp: coeff = Rational(1) / factorial; break;
            case SeriesKind::Cos:
                if (k % 2 == 0) coeff = Rational((k / 2) % 2 == 0 ? 1 : -1) / factorial;
                break;
            case SeriesKind::Sin:
                if (k % 2 == 1) coeff = Rational((k / 2) % 2 == 0 ? 1 : -1) / factorial;
                break;
            case SeriesKind::Cosh:
                if (k % 2 == 0) coeff = Rational(1) / factorial;
                break;
            case SeriesKind::Sinh:
                if (k % 2 == 1) coeff = Rational(1) / factorial;
                break;
            }
            if (coeff != 0) acc = acc + scale(power, coeff);
        }
        return acc;
    }
}

template <class S>
Element<S> exp_series(const Element<S>& a, double tol = 1e-14) {
    return analytic_series(SeriesKind::Exp, a, tol);
}

/// (cosh t, sinh t) as a hyperbolic_complex element; equals exp_series(j t).
Element<double> euler_split(double t);

/// Even/odd parts of e^{jw} on the double-complex algebra, closed forms.
std::complex<double> C_closed(std::complex<double> w);
std::complex<double> S_closed(std::complex<double> w);

/// The defining series, for cross-checks against the closed forms.
std::complex<double> C_series(std::complex<double> w);
std::complex<double> S_series(std::complex<double> w);

/// |C'(w) - i S(w)| and |S'(w) - C(w)|, derivatives via complex jets.
std::pair<double, double> dC_dS_identities(std::complex<double> w);

/// Residual of d/dw e^{jw} = j e^{jw} on double_complex at w = wr + i wi.
double exp_derivative_identity_residual(double wr, double wi);

/// Closed product form of exp on hyperbolic_double_complex. The two
/// four-term brackets each sum to twice a factor of the product, hence the
/// overall 1/4; fixed so the closed form equals exp_series.
Element<double> exp_hyperbolic_dc(const Element<double>& alpha);

} // namespace hypercx

#endif
