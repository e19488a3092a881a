#ifndef HYPERCX_ANALYSIS_HPP
#define HYPERCX_ANALYSIS_HPP

#include "hypercx/expr.hpp"

#include <array>
#include <complex>
#include <functional>
#include <vector>

namespace hypercx {

// --- Hyperbolic polar coordinates -------------------------------------------

enum class Wedge { PlusX, MinusX, PlusY, MinusY };

/// (x, y) = (r cosh t, r sinh t) on wedge +x; the other wedges are sign
/// reflections. Valid off the cone x^2 = y^2.
struct HyperbolicCoords {
    double r = 0;
    double t = 0;
    Wedge wedge = Wedge::PlusX;
};

HyperbolicCoords to_hyperbolic(double x, double y);
std::array<double, 2> from_hyperbolic(const HyperbolicCoords& c);
const char* wedge_name(Wedge w);

// --- Test functions ----------------------------------------------------------

/// Smooth rapidly decreasing functions on the plane, evaluable with jets.
/// The annular bump is supported on the +x wedge between the hyperbolas
/// x^2 - y^2 = r0^2 and r1^2 and carries a Gaussian factor so it decays
/// along each hyperbola as well.
class TestFunction {
public:
    static TestFunction gaussian(double width = 1.0, double amplitude = 1.0);
    /// p(x, y) * exp(-(x^2+y^2)/width^2) with p a dense quadratic
    /// a + b x + c y + d x^2 + e x y + f y^2.
    static TestFunction poly_gaussian(const std::array<double, 6>& poly, double width = 1.0);
    static TestFunction annular_bump(double r0, double r1);

    Jet<double> operator()(const Jet<double>& x, const Jet<double>& y) const;
    double operator()(double x, double y) const;

    /// T with |phi(r cosh t, r sinh t)| below `bound` for |t| >= T.
    double t_cutoff(double r, double bound, double max_T) const;
    /// R such that the hyperbolas with r >= R contribute below `bound`.
    double r_cutoff(double bound, double max_R) const;

    const std::string& describe() const { return description_; }

private:
    TestFunction() = default;
    std::function<Jet<double>(const Jet<double>&, const Jet<double>&)> eval_;
    // envelope |phi| <= amp * exp(-rho^2 / width^2) with rho^2 = x^2 + y^2
    double env_amp_ = 1.0;
    double env_width_ = 1.0;
    double support_r_max_ = -1.0; // hyperbolic-radius support bound, if any
    std::string description_;
};

// --- Quadrature --------------------------------------------------------------

struct QuadratureSpec {
    double tol = 1e-8;
    double max_T = 50.0;
    int max_depth = 40;
};

/// Adaptive Gauss-Legendre integration of a scalar function.
double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 int max_depth = 40);

// --- The mean value and the pairing ------------------------------------------

/// phi_flat(r) = integral over t of phi(r cosh t, r sinh t), truncated where
/// the decay envelope drops below the tolerance.
double mean_value_phi(const TestFunction& phi, double r, const QuadratureSpec& quad = {});

/// - double integral over {r > eps} of (2/z) (dphi/dz*) r dr dt on wedge +x.
/// The scalar part recovers phi_flat(eps); the j part cancels.
Element<double> pairing_E(const TestFunction& phi, double eps,
                          const QuadratureSpec& quad = {});

struct LimitRow {
    double eps = 0;
    double phi_flat = 0;
};

/// Observational table of phi_flat over a decreasing grid plus phi(0);
/// no verdict is attached.
struct LimitReport {
    std::vector<LimitRow> rows;
    double phi_at_origin = 0;
};

LimitReport limit_report(const TestFunction& phi, const std::vector<double>& eps_grid,
                         const QuadratureSpec& quad = {});

/// |1/2 (dx - j dy) f - 1/2 e^{jt} (dr - (j/r) dt) f| at a wedge +x point,
/// the right side through the chain rule of the coordinate change.
double dbar_hyperbolic_identity_residual(const ExprPtr& f, double x, double y);

/// Max scale-normalized residual of d(1/z)/dz* over the points.
double E_holomorphic_max_residual(const std::vector<std::array<double, 2>>& points);

// --- Symbol and characteristic set of the decomplexified operator ------------

struct SymbolResult {
    std::complex<double> p;
    std::complex<double> minus_4p;
    std::complex<double> conj_form; // lambda_bar^2 + i mu_bar^2
};

/// p(xi) = 1/4 [(i xi1 + xi2)^2 + i (i xi3 + xi4)^2]; also the identity
/// -4 p = lambda_bar^2 + i mu_bar^2 with lambda = xi1 + i xi2, mu = xi3 + i xi4.
SymbolResult symbol_delta_plus(const std::array<double, 4>& xi);

/// Membership in the characteristic set, checked through both the pair of
/// real quadrics and the parametrization lambda = +- e^{i pi/4} mu; raises
/// CharacterizationMismatch if the two tests disagree decisively.
bool char_membership(const std::array<double, 4>& xi, double tol = 1e-10);

/// Product of the plane fundamental solutions: equals
/// 1/(pi^2 (zbar^2 + i wbar^2)); singular on z = +- e^{i pi/4} w.
std::complex<double> eps_delta_plus(std::complex<double> z, std::complex<double> w);

/// |Delta_plus eps| at the point, via complex-valued jets over the four real
/// coordinates. Zero off the singular set.
double eps_delta_plus_residual(std::complex<double> z, std::complex<double> w);

} // namespace hypercx

#endif
