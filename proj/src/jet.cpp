#include "hypercx/jet.hpp"

namespace hypercx {

JetElement seed(const Element<double>& point) {
    const int n = point.dim();
    JetElement out(point.alg, std::vector<Jet<double>>(n));
    for (int k = 0; k < n; ++k) out.c[k] = Jet<double>::seed(point.c[k], n, k);
    return out;
}

Element<double> jet_values(const JetElement& f) {
    Element<double> out(f.alg, std::vector<double>(f.dim(), 0.0));
    for (int p = 0; p < f.dim(); ++p) out.c[p] = f.c[p].v;
    return out;
}

Element<double> jet_partial(const JetElement& f, int k) {
    Element<double> out(f.alg, std::vector<double>(f.dim(), 0.0));
    for (int p = 0; p < f.dim(); ++p) out.c[p] = f.c[p].vars() > k ? f.c[p].g[k] : 0.0;
    return out;
}

Element<double> jet_partial2(const JetElement& f, int k, int l) {
    Element<double> out(f.alg, std::vector<double>(f.dim(), 0.0));
    for (int p = 0; p < f.dim(); ++p)
        out.c[p] = f.c[p].vars() > std::max(k, l) ? f.c[p].hess(k, l) : 0.0;
    return out;
}

} // namespace hypercx
