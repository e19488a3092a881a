#include "hypercx/matrixrep.hpp"

namespace hypercx {

namespace {

template <class S>
void require_dim4(const Element<S>& x) {
    if (x.dim() != 4) throw AlgebraMismatch("expected a dim-4 cyclic element");
}

} // namespace

Rational det_h(const Element<Rational>& x) {
    require_dim4(x);
    return det_bareiss(represent(x));
}

double det_h(const Element<double>& x) {
    require_dim4(x);
    return det_lu(represent(x));
}

Rational det_identity_residual(const Element<Rational>& x) {
    require_dim4(x);
    const Rational &x0 = x.c[0], &x1 = x.c[1], &x2 = x.c[2], &x3 = x.c[3];
    Rational even = x0 * x0 - x2 * x2;
    Rational odd = x1 * x1 - x3 * x3;
    Rational cross = 4 * (x0 * x3 - x1 * x2) * (x0 * x1 - x2 * x3);
    return det_h(x) + cross - (even * even - odd * odd);
}

bool det_bounds_check(const Element<Rational>& x) {
    require_dim4(x);
    const Rational &x0 = x.c[0], &x1 = x.c[1], &x2 = x.c[2], &x3 = x.c[3];
    Rational even = x0 * x0 - x2 * x2;
    Rational odd = x1 * x1 - x3 * x3;
    Rational even2 = even * even, odd2 = odd * odd;
    Rational cross = 4 * (x0 * x3 - x1 * x2) * (x0 * x1 - x2 * x3);
    Rational d = det_h(x);
    bool lower = -odd2 - cross <= d;
    bool upper = d <= even2 - cross;
    Rational diff = even2 - odd2;
    if (diff < 0) diff = -diff;
    bool abs_bound = diff <= even2 + odd2;
    return lower && upper && abs_bound;
}

} // namespace hypercx
