#include "hypercx/cr.hpp"

#include <algorithm>
#include <sstream>

namespace hypercx {

namespace {

int pair_index(int k, int l, int ncoord) {
    if (k > l) std::swap(k, l);
    // index into the list of unordered pairs (0,0),(0,1),...,(0,n-1),(1,1),...
    return k * ncoord - k * (k - 1) / 2 + (l - k);
}

int pair_count(int ncoord) { return ncoord * (ncoord + 1) / 2; }

} // namespace

CRSystem derive_cr(const AlgebraPtr& alg, const std::vector<std::string>& op_names) {
    const int n = alg->dim();
    std::vector<RowVec> rows;
    for (const auto& op_name : op_names) {
        LinDiffOp op = dbar(alg, op_name);
        // component m of sum_k L (e_p f_p,k) R  ->  row per m
        std::vector<RowVec> op_rows(n, RowVec(static_cast<std::size_t>(n) * n, Rational(0)));
        for (const auto& t : op.terms) {
            for (int p = 0; p < n; ++p) {
                auto img = t.left * basis_element<Rational>(alg, p) * t.right;
                for (int m = 0; m < n; ++m)
                    if (img.c[m] != 0) op_rows[m][static_cast<std::size_t>(p) * n + t.k] += img.c[m];
            }
        }
        for (auto& r : op_rows) rows.push_back(std::move(r));
    }
    CRSystem sys;
    sys.ncomp = n;
    sys.ncoord = n;
    sys.rows = rref(std::move(rows));
    return sys;
}

CRSystem restrict_block(const CRSystem& sys, const std::vector<int>& comps,
                        const std::vector<int>& coords) {
    const std::size_t width = static_cast<std::size_t>(sys.ncomp) * sys.ncoord;
    std::vector<bool> allowed(width, false);
    for (int p : comps)
        for (int k : coords) allowed[static_cast<std::size_t>(p) * sys.ncoord + k] = true;
    // combos of rows that vanish on the disallowed columns
    std::vector<RowVec> disallowed_cols;
    for (const auto& row : sys.rows) {
        RowVec rest;
        for (std::size_t j = 0; j < width; ++j)
            if (!allowed[j]) rest.push_back(row[j]);
        disallowed_cols.push_back(std::move(rest));
    }
    auto kernel = left_kernel(disallowed_cols);
    std::vector<RowVec> out;
    for (const auto& combo : kernel) {
        RowVec row(width, Rational(0));
        for (std::size_t i = 0; i < combo.size(); ++i) {
            if (combo[i] == 0) continue;
            for (std::size_t j = 0; j < width; ++j) row[j] += combo[i] * sys.rows[i][j];
        }
        out.push_back(std::move(row));
    }
    CRSystem restricted;
    restricted.ncomp = sys.ncomp;
    restricted.ncoord = sys.ncoord;
    restricted.rows = rref(std::move(out));
    return restricted;
}

std::vector<std::string> describe_rows(const CRSystem& sys) {
    std::vector<std::string> out;
    for (const auto& row : sys.rows) {
        std::ostringstream line;
        bool first = true;
        for (int p = 0; p < sys.ncomp; ++p)
            for (int k = 0; k < sys.ncoord; ++k) {
                const Rational& c = row[static_cast<std::size_t>(p) * sys.ncoord + k];
                if (c == 0) continue;
                Rational mag = c < 0 ? -c : c;
                if (first) {
                    if (c < 0) line << "-";
                    first = false;
                } else {
                    line << (c < 0 ? " - " : " + ");
                }
                if (mag != 1) line << rational_to_string(mag) << "*";
                line << "df" << p << "/dx" << k;
            }
        line << " = 0";
        out.push_back(line.str());
    }
    return out;
}

// --- Wirtinger form ----------------------------------------------------------

namespace {

const PairGrouping& grouping_of(const AlgebraPtr& alg) {
    if (!alg->grouping())
        throw DomainError("algebra '" + alg->name() + "' has no paired-variable grouping");
    return *alg->grouping();
}

/// Sign tau in d/dZ = 1/2 (d/du + tau I d/dv): hyperbolic pairs use +1 for
/// the plain coordinate, complex pairs use -1; conjugation flips it.
int tau_for(int inner_square, bool conj) {
    int t = inner_square == 1 ? 1 : -1;
    return conj ? -t : t;
}

} // namespace

namespace {

/// Raw real rows (two per ring row, no reduction); realify() reduces them.
std::vector<RowVec> realify_rows(const WirtingerSystem& w) {
    const PairGrouping& g = grouping_of(w.alg);
    const int n = w.alg->dim();
    const int ncoord_w = static_cast<int>(w.coord_names.size());
    const Rational half(1, 2);
    std::vector<RowVec> rows;
    for (const auto& wrow : w.rows) {
        RowVec re_row(static_cast<std::size_t>(n) * n, Rational(0));
        RowVec im_row(static_cast<std::size_t>(n) * n, Rational(0));
        for (int P = 0; P < 2; ++P)
            for (int c = 0; c < ncoord_w; ++c) {
                const PairCoeff& coeff = wrow[static_cast<std::size_t>(P) * ncoord_w + c];
                if (coeff.re == 0 && coeff.im == 0) continue;
                const int r = g.comps[P][0], s = g.comps[P][1];
                const int u = g.coords[c % 2][0], v = g.coords[c % 2][1];
                const int tau = tau_for(w.inner_square, w.coord_conj[c]);
                const Rational sI = w.inner_square;
                auto at = [&](RowVec& row, int p, int k) -> Rational& {
                    return row[static_cast<std::size_t>(p) * n + k];
                };
                // (a + I b) * 1/2 [(f_r,u + tau sI f_s,v) + I (f_s,u + tau f_r,v)]
                const Rational a = coeff.re, b = coeff.im;
                at(re_row, r, u) += a * half;
                at(re_row, s, v) += a * tau * sI * half;
                at(re_row, s, u) += sI * b * half;
                at(re_row, r, v) += sI * b * tau * half;
                at(im_row, r, u) += b * half;
                at(im_row, s, v) += b * tau * sI * half;
                at(im_row, s, u) += a * half;
                at(im_row, r, v) += a * tau * half;
            }
        rows.push_back(std::move(re_row));
        rows.push_back(std::move(im_row));
    }
    return rows;
}

} // namespace

CRSystem realify(const WirtingerSystem& w) {
    CRSystem sys;
    sys.ncomp = w.alg->dim();
    sys.ncoord = w.alg->dim();
    sys.rows = rref(realify_rows(w));
    return sys;
}

std::vector<std::vector<PairCoeff>> wirtinger_presentation(const CRSystem& sys,
                                                           const AlgebraPtr& alg,
                                                           bool with_conjugates) {
    const PairGrouping& g = grouping_of(alg);
    const int ncoord_w = with_conjugates ? 4 : 2;
    const int unknowns = 2 * ncoord_w * 2; // (P, c) x (re, im)
    WirtingerSystem probe;
    probe.alg = alg;
    probe.inner_square = g.inner_square;
    for (int c = 0; c < ncoord_w; ++c) {
        probe.coord_names.push_back(c % 2 == 0 ? "z" : "w");
        probe.coord_conj.push_back(c >= 2);
    }
    // Build the linear map (a,b coefficients) -> residuals of both realified
    // rows against the row space, and take its kernel.
    const std::size_t width = static_cast<std::size_t>(sys.ncomp) * sys.ncoord;
    auto residual = [&](RowVec row) {
        for (const auto& basis_row : sys.rows) {
            std::size_t lead = 0;
            while (lead < width && basis_row[lead] == 0) ++lead;
            if (lead == width || row[lead] == 0) continue;
            Rational f = row[lead];
            for (std::size_t j = lead; j < width; ++j) row[j] -= f * basis_row[j];
        }
        return row;
    };
    std::vector<RowVec> constraint_cols; // one row per unknown -> kernel wanted on the left
    for (int idx = 0; idx < unknowns; ++idx) {
        int P = idx / (ncoord_w * 2);
        int c = (idx / 2) % ncoord_w;
        bool is_im = idx % 2;
        probe.rows.assign(1, std::vector<PairCoeff>(2 * ncoord_w));
        auto& coeff = probe.rows[0][static_cast<std::size_t>(P) * ncoord_w + c];
        (is_im ? coeff.im : coeff.re) = 1;
        RowVec stacked;
        for (const auto& r : realify_rows(probe)) {
            RowVec res = residual(r);
            stacked.insert(stacked.end(), res.begin(), res.end());
        }
        constraint_cols.push_back(std::move(stacked));
    }
    auto kernel = left_kernel(constraint_cols);
    std::vector<std::vector<PairCoeff>> all;
    for (const auto& combo : kernel) {
        std::vector<PairCoeff> row(2 * ncoord_w);
        for (int idx = 0; idx < unknowns; ++idx) {
            int P = idx / (ncoord_w * 2);
            int c = (idx / 2) % ncoord_w;
            auto& coeff = row[static_cast<std::size_t>(P) * ncoord_w + c];
            if (idx % 2)
                coeff.im += combo[idx];
            else
                coeff.re += combo[idx];
        }
        all.push_back(std::move(row));
    }
    // The rational kernel contains each ring row together with its multiple
    // by the pair unit; keep ring generators only.
    const Rational sI = g.inner_square;
    auto flat = [&](const std::vector<PairCoeff>& row) {
        RowVec v;
        for (const auto& pc : row) {
            v.push_back(pc.re);
            v.push_back(pc.im);
        }
        return v;
    };
    auto unit_multiple = [&](const std::vector<PairCoeff>& row) {
        std::vector<PairCoeff> out(row.size());
        for (std::size_t i = 0; i < row.size(); ++i)
            out[i] = PairCoeff{sI * row[i].im, row[i].re};
        return out;
    };
    std::vector<std::vector<PairCoeff>> generators;
    std::vector<RowVec> span;
    for (const auto& row : all) {
        if (in_row_space(flat(row), span)) continue;
        generators.push_back(row);
        span.push_back(flat(row));
        span.push_back(flat(unit_multiple(row)));
        span = rref(std::move(span));
    }
    return generators;
}

// --- Goldens -----------------------------------------------------------------

namespace {

CRSystem real_golden(int ncomp, int ncoord,
                     const std::vector<std::vector<std::tuple<int, int, int>>>& entries) {
    CRSystem sys;
    sys.ncomp = ncomp;
    sys.ncoord = ncoord;
    std::vector<RowVec> rows;
    for (const auto& row_spec : entries) {
        RowVec row(static_cast<std::size_t>(ncomp) * ncoord, Rational(0));
        for (auto [p, k, c] : row_spec) row[static_cast<std::size_t>(p) * ncoord + k] = c;
        rows.push_back(std::move(row));
    }
    sys.rows = rref(std::move(rows));
    return sys;
}

WirtingerSystem w_system(const std::string& algebra, int ncoord_w,
                         const std::vector<std::vector<std::pair<int, PairCoeff>>>& rows) {
    WirtingerSystem w;
    w.alg = Algebra::preset(algebra);
    w.inner_square = grouping_of(w.alg).inner_square;
    for (int c = 0; c < ncoord_w; ++c) {
        w.coord_names.push_back(std::string(c % 2 == 0 ? "z" : "w") + (c >= 2 ? "bar" : ""));
        w.coord_conj.push_back(c >= 2);
    }
    for (const auto& row_spec : rows) {
        std::vector<PairCoeff> row(2 * ncoord_w);
        for (const auto& [slot, coeff] : row_spec) row[slot] = coeff;
        w.rows.push_back(std::move(row));
    }
    return w;
}

const PairCoeff kOne{1, 0};
const PairCoeff kMinusOne{-1, 0};
const PairCoeff kMinusI{0, -1};

CRSystem build_golden(const std::string& id) {
    // Classical system: du/dx = dv/dy, du/dy = -dv/dx.
    if (id == "CR3")
        return real_golden(2, 2, {{{0, 0, 1}, {1, 1, -1}}, {{0, 1, 1}, {1, 0, 1}}});
    // Split-complex counterpart: df0/dx = df1/dy, df0/dy = df1/dx.
    if (id == "CR6")
        return real_golden(2, 2, {{{0, 0, 1}, {1, 1, -1}}, {{0, 1, 1}, {1, 0, -1}}});
    // Eight first-order equations of the dim-4 cyclic algebra.
    if (id == "CR8")
        return real_golden(4, 4,
                           {{{0, 0, 1}, {2, 2, -1}},
                            {{0, 2, 1}, {2, 0, -1}},
                            {{1, 0, 1}, {3, 2, -1}},
                            {{1, 2, 1}, {3, 0, -1}},
                            {{0, 1, 1}, {2, 3, -1}},
                            {{0, 3, 1}, {2, 1, -1}},
                            {{1, 1, 1}, {3, 3, -1}},
                            {{1, 3, 1}, {3, 1, -1}}});
    // Even/odd couples of the dim-4 system.
    if (id == "CR9a")
        return real_golden(4, 4, {{{0, 0, 1}, {2, 2, -1}}, {{0, 2, 1}, {2, 0, -1}}});
    if (id == "CR9b")
        return real_golden(4, 4, {{{1, 1, 1}, {3, 3, -1}}, {{1, 3, 1}, {3, 1, -1}}});
    // Bicomplex: dF0/dz = dF1/dw, dF0/dw = -dF1/dz (stated twice in the
    // catalog, once per exposition).
    if (id == "CR6pp" || id == "CR22")
        return realify(w_system("bicomplex", 2,
                                {{{0, kOne}, {3, kMinusOne}}, {{1, kOne}, {2, kOne}}}));
    // Double-complex: dF0/dz = dF1/dw, dF0/dw = i dF1/dz.
    if (id == "CR6ppp")
        return realify(w_system("double_complex", 2,
                                {{{0, kOne}, {3, kMinusOne}}, {{1, kOne}, {2, kMinusI}}}));
    // Hyperbolic bicomplex: dF0/dz = dF1/dw, dF0/dw = dF1/dz.
    if (id == "CR21")
        return realify(w_system("hyperbolic_bicomplex", 2,
                                {{{0, kOne}, {3, kMinusOne}}, {{1, kOne}, {2, kMinusOne}}}));
    // Hyperbolic double-complex: dF0/dzeta = dF1/deta, dF0/deta = J dF1/dzeta.
    if (id == "CR5thm")
        return realify(w_system("hyperbolic_double_complex", 2,
                                {{{0, kOne}, {3, kMinusOne}}, {{1, kOne}, {2, kMinusI}}}));
    // Coquaternion pair of systems over (z, w, zbar, wbar).
    if (id == "CR27")
        return realify(w_system("coquaternion", 4,
                                {{{0, kOne}, {5, kMinusOne}},
                                 {{1, kOne}, {4, kMinusOne}},
                                 {{2, kOne}, {7, kMinusOne}},
                                 {{3, kOne}, {6, kMinusOne}}}));
    throw UnknownGoldenId("unknown golden system id '" + id + "'");
}

} // namespace

const std::vector<std::string>& golden_ids() {
    static const std::vector<std::string> ids = {"CR3",  "CR6",    "CR8",  "CR6pp",
                                                 "CR6ppp", "CR21", "CR22", "CR5thm",
                                                 "CR27", "CR9a",   "CR9b"};
    return ids;
}

CRSystem golden_system(const std::string& id) { return build_golden(id); }

Diff golden_compare(const CRSystem& derived, const std::string& golden_id) {
    CRSystem golden = golden_system(golden_id);
    if (golden.ncomp != derived.ncomp || golden.ncoord != derived.ncoord) {
        Diff d;
        d.equal = false;
        d.missing = describe_rows(golden);
        d.extra = describe_rows(derived);
        return d;
    }
    Diff d;
    auto golden_desc = describe_rows(golden);
    auto derived_desc = describe_rows(derived);
    for (std::size_t i = 0; i < golden.rows.size(); ++i)
        if (!in_row_space(golden.rows[i], derived.rows)) d.missing.push_back(golden_desc[i]);
    for (std::size_t i = 0; i < derived.rows.size(); ++i)
        if (!in_row_space(derived.rows[i], golden.rows)) d.extra.push_back(derived_desc[i]);
    d.equal = d.missing.empty() && d.extra.empty();
    return d;
}

// --- Second-order elimination --------------------------------------------------

namespace {

/// Core elimination: equations are rows over (comp, unknown-within-component);
/// returns, per component, the canonical basis of relations supported on that
/// component alone.
std::vector<std::vector<RowVec>> eliminate_per_component(const std::vector<RowVec>& equations,
                                                         int ncomp, int per_comp) {
    std::vector<std::vector<RowVec>> result(ncomp);
    for (int target = 0; target < ncomp; ++target) {
        std::vector<RowVec> foreign;
        foreign.reserve(equations.size());
        for (const auto& eq : equations) {
            RowVec other;
            for (int p = 0; p < ncomp; ++p) {
                if (p == target) continue;
                for (int u = 0; u < per_comp; ++u)
                    other.push_back(eq[static_cast<std::size_t>(p) * per_comp + u]);
            }
            foreign.push_back(std::move(other));
        }
        auto kernel = left_kernel(foreign);
        std::vector<RowVec> relations;
        for (const auto& combo : kernel) {
            RowVec rel(per_comp, Rational(0));
            bool nonzero = false;
            for (std::size_t i = 0; i < combo.size(); ++i) {
                if (combo[i] == 0) continue;
                for (int u = 0; u < per_comp; ++u) {
                    rel[u] += combo[i] * equations[i][static_cast<std::size_t>(target) * per_comp + u];
                    nonzero = nonzero || rel[u] != 0;
                }
            }
            relations.push_back(std::move(rel));
        }
        result[target] = rref(std::move(relations));
    }
    return result;
}

} // namespace

std::vector<ComponentConsequences> second_order_consequences(const CRSystem& sys) {
    const int n_pairs = pair_count(sys.ncoord);
    std::vector<RowVec> equations;
    for (const auto& row : sys.rows)
        for (int e = 0; e < sys.ncoord; ++e) {
            RowVec eq(static_cast<std::size_t>(sys.ncomp) * n_pairs, Rational(0));
            for (int p = 0; p < sys.ncomp; ++p)
                for (int k = 0; k < sys.ncoord; ++k) {
                    const Rational& c = row[static_cast<std::size_t>(p) * sys.ncoord + k];
                    if (c != 0)
                        eq[static_cast<std::size_t>(p) * n_pairs + pair_index(k, e, sys.ncoord)] += c;
                }
            equations.push_back(std::move(eq));
        }
    auto spans = eliminate_per_component(equations, sys.ncomp, n_pairs);

    std::vector<ComponentConsequences> out;
    bool any = false;
    for (int p = 0; p < sys.ncomp; ++p) {
        if (spans[p].empty()) continue;
        any = true;
        ComponentConsequences cc;
        cc.component = p;
        cc.grouped = false;
        cc.ncoord = sys.ncoord;
        cc.real_span = spans[p];
        for (const auto& rel : spans[p]) {
            SecondOrderRelation r;
            r.component = p;
            for (int k = 0; k < sys.ncoord; ++k)
                for (int l = k; l < sys.ncoord; ++l) {
                    const Rational& c = rel[pair_index(k, l, sys.ncoord)];
                    if (c != 0) r.terms[{k, l}] = PairCoeff{c, 0};
                }
            cc.presented.push_back(std::move(r));
        }
        out.push_back(std::move(cc));
    }
    if (!any) throw EliminationFailed("no pure second-order consequence exists");
    return out;
}

std::vector<ComponentConsequences> second_order_consequences(const WirtingerSystem& sys) {
    const int ncoord = static_cast<int>(sys.coord_names.size());
    const int n_pairs = pair_count(ncoord);
    const int per_comp = 2 * n_pairs; // (pair, re/im)
    const Rational sI = sys.inner_square;

    // Differentiate each ring equation by each coordinate, then realify the
    // ring coefficients: (a + I b) U -> [a u_re + sI b u_im ; b u_re + a u_im].
    std::vector<RowVec> equations;
    for (const auto& row : sys.rows)
        for (int e = 0; e < ncoord; ++e) {
            RowVec re_eq(static_cast<std::size_t>(2) * per_comp, Rational(0));
            RowVec im_eq(static_cast<std::size_t>(2) * per_comp, Rational(0));
            for (int P = 0; P < 2; ++P)
                for (int c = 0; c < ncoord; ++c) {
                    const PairCoeff& coeff = row[static_cast<std::size_t>(P) * ncoord + c];
                    if (coeff.re == 0 && coeff.im == 0) continue;
                    int u_re = pair_index(c, e, ncoord) * 2;
                    std::size_t base = static_cast<std::size_t>(P) * per_comp + u_re;
                    re_eq[base] += coeff.re;
                    re_eq[base + 1] += sI * coeff.im;
                    im_eq[base] += coeff.im;
                    im_eq[base + 1] += coeff.re;
                }
            equations.push_back(std::move(re_eq));
            equations.push_back(std::move(im_eq));
        }
    auto spans = eliminate_per_component(equations, 2, per_comp);

    std::vector<ComponentConsequences> out;
    bool any = false;
    for (int P = 0; P < 2; ++P) {
        if (spans[P].empty()) continue;
        any = true;
        ComponentConsequences cc;
        cc.component = P;
        cc.grouped = true;
        cc.inner_square = sys.inner_square;
        cc.ncoord = ncoord;
        cc.real_span = spans[P];

        // Pair the real relation space back into ring rows: w = (a_cd, b_cd)
        // such that both realifications  [a | sI b]  and  [b | a]  lie in it.
        std::vector<RowVec> constraints;
        for (int idx = 0; idx < per_comp; ++idx) {
            bool is_im = idx % 2;
            int pair = idx / 2;
            RowVec real_row(per_comp, Rational(0));
            RowVec imag_row(per_comp, Rational(0));
            if (!is_im) { // a contribution
                real_row[2 * pair] = 1;
                imag_row[2 * pair + 1] = 1;
            } else { // b contribution
                real_row[2 * pair + 1] = sI;
                imag_row[2 * pair] = 1;
            }
            auto reduce = [&](RowVec row) {
                for (const auto& b : spans[P]) {
                    std::size_t lead = 0;
                    while (lead < b.size() && b[lead] == 0) ++lead;
                    if (lead == b.size() || row[lead] == 0) continue;
                    Rational f = row[lead];
                    for (std::size_t j = lead; j < b.size(); ++j) row[j] -= f * b[j];
                }
                return row;
            };
            RowVec stacked = reduce(real_row);
            RowVec imag_red = reduce(imag_row);
            stacked.insert(stacked.end(), imag_red.begin(), imag_red.end());
            constraints.push_back(std::move(stacked));
        }
        auto ring_rows = left_kernel(constraints);
        for (const auto& w : ring_rows) {
            SecondOrderRelation r;
            r.component = P;
            for (int k = 0; k < ncoord; ++k)
                for (int l = k; l < ncoord; ++l) {
                    int pair = pair_index(k, l, ncoord);
                    PairCoeff pc{w[2 * pair], w[2 * pair + 1]};
                    if (pc.re != 0 || pc.im != 0) r.terms[{k, l}] = pc;
                }
            if (!r.terms.empty()) cc.presented.push_back(std::move(r));
        }
        out.push_back(std::move(cc));
    }
    if (!any) throw EliminationFailed("no pure second-order consequence exists");
    return out;
}

bool consequences_match(const std::vector<ComponentConsequences>& all, int component,
                        const std::vector<SecondOrderRelation>& expected) {
    const ComponentConsequences* found = nullptr;
    for (const auto& cc : all)
        if (cc.component == component) found = &cc;
    if (!found) return expected.empty();

    std::vector<RowVec> expected_rows;
    const int ncoord = found->ncoord;
    for (const auto& rel : expected) {
        if (found->grouped) {
            const Rational sI = found->inner_square;
            RowVec real_row(static_cast<std::size_t>(2) * pair_count(ncoord), Rational(0));
            RowVec imag_row(real_row.size(), Rational(0));
            for (const auto& [pair, coeff] : rel.terms) {
                int idx = pair_index(pair.first, pair.second, ncoord);
                real_row[2 * idx] += coeff.re;
                real_row[2 * idx + 1] += sI * coeff.im;
                imag_row[2 * idx] += coeff.im;
                imag_row[2 * idx + 1] += coeff.re;
            }
            expected_rows.push_back(std::move(real_row));
            expected_rows.push_back(std::move(imag_row));
        } else {
            RowVec row(pair_count(ncoord), Rational(0));
            for (const auto& [pair, coeff] : rel.terms)
                row[pair_index(pair.first, pair.second, ncoord)] += coeff.re;
            expected_rows.push_back(std::move(row));
        }
    }
    return rref(std::move(expected_rows)) == found->real_span;
}

} // namespace hypercx
