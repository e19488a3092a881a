#ifndef HYPERCX_OPERATORS_HPP
#define HYPERCX_OPERATORS_HPP

#include "hypercx/expr.hpp"
#include "hypercx/rng.hpp"

#include <map>
#include <string>
#include <vector>

namespace hypercx {

/// First- or second-order constant-coefficient linear differential operator
/// over the real coordinates of an algebra. Terms act as left * (partial of
/// f) * right; the right factor matters only on the coquaternion algebra.
struct LinDiffOp {
    struct Term {
        Element<Rational> left;
        Element<Rational> right;
        int k = 0, l = 0; // coordinate indices; order 1 uses k only
    };
    AlgebraPtr alg;
    std::string name;
    int order = 1;
    std::vector<Term> terms;
};

/// Catalog of the first-order conjugate-variable operators per algebra.
LinDiffOp dbar(const AlgebraPtr& alg, const std::string& name);

/// Catalog of the second-order operators per algebra.
LinDiffOp laplacian(const AlgebraPtr& alg, const std::string& name);

/// Names available for an algebra (first order / second order).
std::vector<std::string> dbar_names(const AlgebraPtr& alg);
std::vector<std::string> laplacian_names(const AlgebraPtr& alg);

/// Operators whose joint kernel defines holomorphy for the algebra.
std::vector<std::string> holomorphy_operators(const AlgebraPtr& alg);

/// Applies the operator to an already differentiated evaluation.
Element<double> apply(const LinDiffOp& op, const JetElement& f);

/// max-abs of the application divided by (1 + largest partial of the
/// operator's order); the residual measure used by every verdict here.
double normalized_residual(const LinDiffOp& op, const JetElement& f);

/// Evaluates f with jets at the point and applies the operator.
Element<double> apply(const LinDiffOp& op, const ExprPtr& f, const Element<double>& point);

/// Composition of two first-order constant-coefficient operators.
LinDiffOp compose(const LinDiffOp& a, const LinDiffOp& b);

LinDiffOp scale_op(LinDiffOp op, const Rational& r);

/// Exact equality of the induced differential operators (terms compared as
/// bilinear maps per multi-index, so term layout does not matter).
bool op_equal(const LinDiffOp& a, const LinDiffOp& b);

struct SamplingSpec {
    int points = 64;
    double lo = -2.0, hi = 2.0;
    std::uint64_t seed = 1;
    double tol = 1e-9;
    double reject_margin = 1e-3;
};

struct Verdict {
    std::map<std::string, double> residuals; // per defining operator
    int points = 0;
    double tol = 0;
    bool pass = false;
};

/// Max scale-normalized residual of every defining operator over random
/// sample points; points within the rejection margin of singular sets of f
/// are redrawn.
Verdict holomorphy_check(const AlgebraPtr& alg, const ExprPtr& f, const SamplingSpec& spec);

/// |df(direction) - sum over conjugate-variable pairs (op f) * dvar(direction)|
/// with df from jets. Zero for expressions in the pairing's function class.
double differential_decomposition_check(const AlgebraPtr& alg, const ExprPtr& f,
                                        const Element<double>& point,
                                        const Element<double>& direction);

bool has_differential_pairing(const AlgebraPtr& alg);

} // namespace hypercx

#endif
