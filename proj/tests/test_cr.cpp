#include "hypercx/cr.hpp"
#include "hypercx/rng.hpp"

#include <doctest.h>

using namespace hypercx;

namespace {

RowVec row_of(int ncomp, int ncoord, std::vector<std::tuple<int, int, long>> entries) {
    RowVec row(static_cast<std::size_t>(ncomp) * ncoord, Rational(0));
    for (auto [p, k, c] : entries) row[static_cast<std::size_t>(p) * ncoord + k] = c;
    return row;
}

} // namespace

TEST_CASE("derived classical and split systems") {
    CRSystem cr3 = derive_cr(Algebra::preset("complex"), {"dzbar"});
    CHECK(cr3.rows.size() == 2);
    CHECK(golden_compare(cr3, "CR3").equal);
    CHECK_FALSE(golden_compare(cr3, "CR6").equal);

    CRSystem cr6 = derive_cr(Algebra::preset("hyperbolic_complex"), {"dzstar"});
    CHECK(golden_compare(cr6, "CR6").equal);
    // frozen expansion: df0/dx0 = df1/dx1, df0/dx1 = df1/dx0
    CHECK(in_row_space(row_of(2, 2, {{0, 0, 1}, {1, 1, -1}}), cr6.rows));
    CHECK(in_row_space(row_of(2, 2, {{0, 1, 1}, {1, 0, -1}}), cr6.rows));
}

TEST_CASE("the eight equations of the dim-4 algebra and their couples") {
    auto four = Algebra::preset("four_real_hyperbolic");
    CRSystem cr8 = derive_cr(four, {"dalphastar", "dbetastar"});
    CHECK(cr8.rows.size() == 8);
    CHECK(golden_compare(cr8, "CR8").equal);

    // single-operator derivation gives exactly the four x0/x2 relations
    CRSystem half = derive_cr(four, {"dalphastar"});
    CHECK(half.rows.size() == 4);
    CHECK(in_row_space(row_of(4, 4, {{0, 0, 1}, {2, 2, -1}}), half.rows));
    CHECK(in_row_space(row_of(4, 4, {{1, 0, 1}, {3, 2, -1}}), half.rows));

    CRSystem cr9a = restrict_block(cr8, {0, 2}, {0, 2});
    CHECK(cr9a.rows.size() == 2);
    CHECK(golden_compare(cr9a, "CR9a").equal);
    CRSystem cr9b = restrict_block(cr8, {1, 3}, {1, 3});
    CHECK(golden_compare(cr9b, "CR9b").equal);
    CHECK_FALSE(golden_compare(cr9a, "CR9b").equal);
}

TEST_CASE("paired-variable systems match their goldens") {
    CHECK(golden_compare(derive_cr(Algebra::preset("bicomplex"), {"dalphastar"}), "CR6pp").equal);
    CHECK(golden_compare(derive_cr(Algebra::preset("bicomplex"), {"dalphastar"}), "CR22").equal);
    CHECK(golden_compare(derive_cr(Algebra::preset("double_complex"), {"dalphastar"}), "CR6ppp")
              .equal);
    CHECK(golden_compare(derive_cr(Algebra::preset("hyperbolic_bicomplex"), {"dalphastar"}),
                         "CR21")
              .equal);
    CHECK(golden_compare(derive_cr(Algebra::preset("hyperbolic_double_complex"), {"dqstar"}),
                         "CR5thm")
              .equal);
    CHECK(golden_compare(derive_cr(Algebra::preset("coquaternion"), {"dqstar", "dqbarstar"}),
                         "CR27")
              .equal);
    CHECK_THROWS_AS(golden_system("CRxx"), UnknownGoldenId);
}

TEST_CASE("elliptic and hyperbolic bicomplex systems differ by one sign") {
    CRSystem elliptic = derive_cr(Algebra::preset("bicomplex"), {"dalphastar"});
    Diff diff = golden_compare(elliptic, "CR21");
    CHECK_FALSE(diff.equal);
    CHECK(!diff.missing.empty());
    CHECK(!diff.extra.empty());
}

TEST_CASE("frozen real rows of the bicomplex system") {
    // dF0/dz = dF1/dw and dF0/dw = -dF1/dz expanded over real coordinates
    CRSystem sys = golden_system("CR6pp");
    CHECK(in_row_space(row_of(4, 4, {{0, 0, 1}, {1, 1, 1}, {2, 2, -1}, {3, 3, -1}}), sys.rows));
    CHECK(in_row_space(row_of(4, 4, {{1, 0, 1}, {0, 1, -1}, {3, 2, -1}, {2, 3, 1}}), sys.rows));
    CHECK(in_row_space(row_of(4, 4, {{0, 2, 1}, {1, 3, 1}, {2, 0, 1}, {3, 1, 1}}), sys.rows));
    CHECK(in_row_space(row_of(4, 4, {{1, 2, 1}, {0, 3, -1}, {3, 0, 1}, {2, 1, -1}}), sys.rows));
    CHECK(sys.rows.size() == 4);
}

TEST_CASE("frozen real rows of the hyperbolic double-complex theorem system") {
    CRSystem sys = golden_system("CR5thm");
    CHECK(in_row_space(row_of(4, 4, {{0, 0, 1}, {2, 2, 1}, {1, 1, -1}, {3, 3, -1}}), sys.rows));
    CHECK(in_row_space(row_of(4, 4, {{2, 0, 1}, {0, 2, 1}, {3, 1, -1}, {1, 3, -1}}), sys.rows));
    CHECK(in_row_space(row_of(4, 4, {{0, 1, 1}, {2, 3, 1}, {3, 0, -1}, {1, 2, -1}}), sys.rows));
    CHECK(in_row_space(row_of(4, 4, {{2, 1, 1}, {0, 3, 1}, {1, 0, -1}, {3, 2, -1}}), sys.rows));
}

TEST_CASE("wirtinger presentation reconstructs the paired rows") {
    auto hbc = Algebra::preset("hyperbolic_bicomplex");
    CRSystem sys = derive_cr(hbc, {"dalphastar"});
    auto rows = wirtinger_presentation(sys, hbc, false);
    CHECK(rows.size() == 2);
    // realify what we found; it must give back the same row space
    WirtingerSystem w;
    w.alg = hbc;
    w.inner_square = 1;
    w.coord_names = {"z", "w"};
    w.coord_conj = {false, false};
    w.rows = rows;
    CHECK(realify(w).rows == sys.rows);
}

TEST_CASE("second-order consequences of the plane systems") {
    auto cons3 = second_order_consequences(golden_system("CR3"));
    REQUIRE(cons3.size() == 2);
    SecondOrderRelation laplace0;
    laplace0.component = 0;
    laplace0.terms[{0, 0}] = PairCoeff{1, 0};
    laplace0.terms[{1, 1}] = PairCoeff{1, 0};
    CHECK(consequences_match(cons3, 0, {laplace0}));

    auto cons6 = second_order_consequences(golden_system("CR6"));
    SecondOrderRelation wave1;
    wave1.component = 1;
    wave1.terms[{0, 0}] = PairCoeff{1, 0};
    wave1.terms[{1, 1}] = PairCoeff{-1, 0};
    CHECK(consequences_match(cons6, 1, {wave1}));
    // and the laplacian is NOT implied by the split system
    SecondOrderRelation lap1 = wave1;
    lap1.terms[{1, 1}] = PairCoeff{1, 0};
    CHECK_FALSE(consequences_match(cons6, 1, {lap1}));
}

TEST_CASE("second-order consequences in paired variables") {
    auto dcx = Algebra::preset("double_complex");
    CRSystem sys = derive_cr(dcx, {"dalphastar"});
    WirtingerSystem w;
    w.alg = dcx;
    w.inner_square = -1;
    w.coord_names = {"z", "w"};
    w.coord_conj = {false, false};
    w.rows = wirtinger_presentation(sys, dcx, false);
    REQUIRE(w.rows.size() == 2);
    auto cons = second_order_consequences(w);
    // Delta_plus = d^2/dz^2 + i d^2/dw^2 on both components
    for (int comp = 0; comp < 2; ++comp) {
        SecondOrderRelation dplus;
        dplus.component = comp;
        dplus.terms[{0, 0}] = PairCoeff{1, 0};
        dplus.terms[{1, 1}] = PairCoeff{0, 1};
        CHECK(consequences_match(cons, comp, {dplus}));
    }
}

TEST_CASE("no consequence reported as failure") {
    // a single relation df0/dx0 = df1/dx1 on its own eliminates nothing
    CRSystem sys;
    sys.ncomp = 2;
    sys.ncoord = 2;
    sys.rows = rref({row_of(2, 2, {{0, 0, 1}, {1, 1, -1}})});
    CHECK_THROWS_AS(second_order_consequences(sys), EliminationFailed);
}

TEST_CASE("derived relations agree with jets on holomorphic expressions") {
    struct Case {
        const char* algebra;
        const char* expr;
        std::vector<std::string> ops;
    };
    const Case cases[] = {
        {"four_real_hyperbolic", "x0^2 + x2^2 + j*(x1^2 + x3^2) + j^2*(2*x0*x2) + j^3*(2*x1*x3)",
         {"dalphastar", "dbetastar"}},
        {"double_complex", "exp(v)", {"dalphastar"}},
        {"hyperbolic_bicomplex", "v*v*v", {"dalphastar"}},
    };
    Rng rng(113);
    for (const auto& cs : cases) {
        auto alg = Algebra::preset(cs.algebra);
        CRSystem sys = derive_cr(alg, cs.ops);
        ExprPtr f = parse(cs.expr, alg);
        for (int trial = 0; trial < 16; ++trial) {
            Element<double> pt = zero_element<double>(alg);
            for (auto& v : pt.c) v = rng.uniform(-1.5, 1.5);
            JetElement jet = eval(f, seed(pt));
            double scale = 1.0;
            for (const auto& c : jet.c)
                for (double g : c.g) scale = std::max(scale, std::fabs(g));
            for (const auto& row : sys.rows) {
                double acc = 0;
                for (int p = 0; p < sys.ncomp; ++p)
                    for (int k = 0; k < sys.ncoord; ++k) {
                        const Rational& coeff = row[static_cast<std::size_t>(p) * sys.ncoord + k];
                        if (coeff != 0) acc += to_double(coeff) * jet.c[p].g[k];
                    }
                CHECK(std::fabs(acc) / scale < 1e-9);
            }
        }
    }
}

TEST_CASE("coquaternion golden covers both displayed systems") {
    CRSystem sys = golden_system("CR27");
    CHECK(sys.rows.size() == 8);
    // the z-part alone (first displayed pair) is a strict subsystem
    CRSystem zpart = derive_cr(Algebra::preset("coquaternion"), {"dqstar"});
    CHECK(zpart.rows.size() == 4);
    for (const auto& row : zpart.rows) CHECK(in_row_space(row, sys.rows));
    CHECK_FALSE(golden_compare(zpart, "CR27").equal);
}
