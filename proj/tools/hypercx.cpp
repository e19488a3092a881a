#include "hypercx/analysis.hpp"
#include "hypercx/cr.hpp"
#include "hypercx/matrixrep.hpp"
#include "hypercx/special.hpp"
#include "hypercx/suite.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace hypercx;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("HYPERCX_SEED")) return std::strtoull(env, nullptr, 10);
    return 0x5eed0001ULL;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

Element<double> parse_point(const AlgebraPtr& alg, const std::string& coeffs) {
    auto parts = split_csv(coeffs);
    return to_double_element(element_from_strings(alg, parts));
}

void emit(const json& doc, bool pretty) {
    if (pretty)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << doc.dump() << "\n";
}

void emit_check(const CheckResult& r, bool pretty) { emit(r.to_json(), pretty); }

int run_suite(std::uint64_t seed, bool pretty) {
    SuiteOptions options;
    options.seed = seed;
    auto results = run_acceptance_suite(options);
    bool all = true;
    for (const auto& criterion : results) {
        for (const auto& check : criterion.checks) emit_check(check, pretty);
        json summary = {{"id", "criterion/" + std::to_string(criterion.index)},
                        {"title", criterion.title},
                        {"pass", criterion.pass}};
        emit(summary, pretty);
        all = all && criterion.pass;
    }
    return all ? 0 : 1;
}

TestFunction parse_phi(const std::string& spec) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::vector<std::string> args;
    if (colon != std::string::npos) args = split_csv(spec.substr(colon + 1));
    if (kind == "gaussian")
        return TestFunction::gaussian(args.empty() ? 1.0 : std::stod(args[0]));
    if (kind == "polygauss") {
        std::array<double, 6> poly = {1, 0, 0, 0, 0, 0};
        for (std::size_t i = 0; i + 1 < args.size() && i < 6; ++i) poly[i] = std::stod(args[i]);
        double width = args.empty() ? 1.0 : std::stod(args.back());
        return TestFunction::poly_gaussian(poly, width);
    }
    if (kind == "annular") {
        if (args.size() != 2) throw DomainError("annular:<r0>,<r1>");
        return TestFunction::annular_bump(std::stod(args[0]), std::stod(args[1]));
    }
    throw DomainError("unknown test function '" + spec + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for generalized hypercomplex algebras"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    std::string algebra_name = "hyperbolic_complex";
    std::string expr_text, ops_csv, golden_id, coeffs_csv, xi_csv, phi_spec = "gaussian:1.0";
    std::string op_name, mode = "float", restrict_spec;
    std::uint64_t seed = default_seed();
    int points = 64;
    double tol = 1e-9, eps_value = 0.5;
    bool wirtinger = false;

    auto add_algebra = [&](CLI::App* cmd) {
        cmd->add_option("--algebra", algebra_name, "algebra preset name");
    };

    CLI::App* cmd_algebra = app.add_subcommand("algebra", "print an algebra descriptor");
    add_algebra(cmd_algebra);

    CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate an expression at a point");
    add_algebra(cmd_eval);
    cmd_eval->add_option("--expr", expr_text)->required();
    cmd_eval->add_option("--coeffs", coeffs_csv)->required();
    cmd_eval->add_option("--mode", mode, "rational|float");

    CLI::App* cmd_check = app.add_subcommand("check", "apply an operator or holomorphy check");
    add_algebra(cmd_check);
    cmd_check->add_option("--op", op_name, "dbar/laplacian name or 'holomorphy'")->required();
    cmd_check->add_option("--expr", expr_text)->required();
    cmd_check->add_option("--seed", seed);
    cmd_check->add_option("--points", points);
    cmd_check->add_option("--tol", tol);

    CLI::App* cmd_derive = app.add_subcommand("derive-cr", "derive a component system");
    add_algebra(cmd_derive);
    cmd_derive->add_option("--ops", ops_csv)->required();
    cmd_derive->add_option("--golden", golden_id, "golden id to compare against");
    cmd_derive->add_flag("--wirtinger", wirtinger, "also print the paired presentation");
    cmd_derive->add_option("--restrict", restrict_spec,
                           "components:coords, e.g. 0,2:0,2, before comparing");

    CLI::App* cmd_exp = app.add_subcommand("exp", "exponential values and identities");
    add_algebra(cmd_exp);
    cmd_exp->add_option("--coeffs", coeffs_csv)->required();
    cmd_exp->add_option("--tol", tol);

    CLI::App* cmd_matrix = app.add_subcommand("matrix", "regular representation and determinant");
    cmd_matrix->add_option("--coeffs", coeffs_csv)->required();

    CLI::App* cmd_fundsol = app.add_subcommand("fundsol", "pairing against the mean value");
    cmd_fundsol->add_option("--phi", phi_spec, "gaussian:w | polygauss:a,..,w | annular:r0,r1");
    cmd_fundsol->add_option("--eps", eps_value);
    cmd_fundsol->add_option("--tol", tol);

    CLI::App* cmd_symbol = app.add_subcommand("symbol", "symbol and characteristic set");
    cmd_symbol->add_option("--xi", xi_csv)->required();

    CLI::App* cmd_suite = app.add_subcommand("suite", "run the full verification battery");
    cmd_suite->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors exit 2, --help exits 0
    }

    try {
        if (cmd_algebra->parsed()) {
            emit(Algebra::preset(algebra_name)->to_json(), pretty);
            return 0;
        }
        if (cmd_eval->parsed()) {
            auto alg = Algebra::preset(algebra_name);
            ExprPtr e = parse(expr_text, alg);
            json doc = {{"id", "eval"}, {"algebra", algebra_name}, {"expr", expr_text}};
            if (mode == "rational") {
                auto point = element_from_strings(alg, split_csv(coeffs_csv));
                auto value = eval(e, point);
                json coeffs = json::array();
                for (const auto& v : value.c) coeffs.push_back(rational_to_string(v));
                doc["value"] = coeffs;
            } else {
                auto value = eval(e, parse_point(alg, coeffs_csv));
                doc["value"] = value.c;
            }
            emit(doc, pretty);
            return 0;
        }
        if (cmd_check->parsed()) {
            auto alg = Algebra::preset(algebra_name);
            ExprPtr e = parse(expr_text, alg);
            if (op_name == "holomorphy") {
                SamplingSpec spec;
                spec.points = points;
                spec.seed = seed;
                spec.tol = tol;
                Verdict v = holomorphy_check(alg, e, spec);
                double worst = 0;
                for (const auto& [name, r] : v.residuals) worst = std::max(worst, r);
                json doc = {{"id", "check/holomorphy"},
                            {"claim", "holomorphy"},
                            {"inputs", {{"algebra", algebra_name}, {"expr", expr_text},
                                        {"points", v.points}, {"seed", seed}}},
                            {"value", {{"max_residual", worst}, {"per_op", v.residuals}}},
                            {"tolerance", tol},
                            {"pass", v.pass}};
                emit(doc, pretty);
                return v.pass ? 0 : 1;
            }
            LinDiffOp op;
            auto first = dbar_names(alg);
            if (std::find(first.begin(), first.end(), op_name) != first.end())
                op = dbar(alg, op_name);
            else
                op = laplacian(alg, op_name);
            Rng rng(seed);
            double worst = 0;
            for (int i = 0; i < points; ++i) {
                Element<double> pt = zero_element<double>(alg);
                for (auto& x : pt.c) x = rng.uniform(-2, 2);
                JetElement jet = eval(e, hypercx::seed(pt));
                worst = std::max(worst, normalized_residual(op, jet));
            }
            bool pass = worst < tol;
            json doc = {{"id", "check/" + op_name},
                        {"claim", op_name},
                        {"inputs", {{"algebra", algebra_name}, {"expr", expr_text},
                                    {"points", points}, {"seed", seed}}},
                        {"value", {{"max_residual", worst}}},
                        {"tolerance", tol},
                        {"pass", pass}};
            emit(doc, pretty);
            return pass ? 0 : 1;
        }
        if (cmd_derive->parsed()) {
            auto alg = Algebra::preset(algebra_name);
            CRSystem sys = derive_cr(alg, split_csv(ops_csv));
            if (!restrict_spec.empty()) {
                auto colon = restrict_spec.find(':');
                if (colon == std::string::npos)
                    throw DomainError("--restrict expects components:coords");
                std::vector<int> comps, coords;
                for (const auto& s : split_csv(restrict_spec.substr(0, colon)))
                    comps.push_back(std::stoi(s));
                for (const auto& s : split_csv(restrict_spec.substr(colon + 1)))
                    coords.push_back(std::stoi(s));
                sys = restrict_block(sys, comps, coords);
            }
            json doc = {{"id", "derive-cr"},
                        {"inputs", {{"algebra", algebra_name}, {"ops", split_csv(ops_csv)}}},
                        {"value", {{"rows", describe_rows(sys)}}}};
            bool pass = true;
            if (!golden_id.empty()) {
                Diff diff = golden_compare(sys, golden_id);
                doc["claim"] = golden_id;
                doc["value"]["missing"] = diff.missing;
                doc["value"]["extra"] = diff.extra;
                doc["pass"] = diff.equal;
                pass = diff.equal;
            }
            if (wirtinger && alg->grouping()) {
                auto rows = wirtinger_presentation(sys, alg, alg->name() == "coquaternion");
                json wr = json::array();
                for (const auto& row : rows) {
                    json entries = json::array();
                    for (const auto& pc : row)
                        entries.push_back({rational_to_string(pc.re), rational_to_string(pc.im)});
                    wr.push_back(entries);
                }
                doc["value"]["wirtinger_rows"] = wr;
            }
            emit(doc, pretty);
            return pass ? 0 : 1;
        }
        if (cmd_exp->parsed()) {
            auto alg = Algebra::preset(algebra_name);
            Element<double> a = parse_point(alg, coeffs_csv);
            Element<double> series = exp_series(a, std::min(tol, 1e-12));
            json doc = {{"id", "exp"},
                        {"inputs", {{"algebra", algebra_name}, {"coeffs", a.c}}},
                        {"value", {{"series", series.c}}}};
            if (algebra_name == "hyperbolic_complex") {
                Element<double> closed = std::exp(a.c[0]) * euler_split(a.c[1]);
                doc["value"]["euler_split"] = closed.c;
                doc["value"]["residual"] = max_abs(series - closed);
            }
            if (algebra_name == "hyperbolic_double_complex") {
                Element<double> closed = exp_hyperbolic_dc(a);
                doc["value"]["product_form"] = closed.c;
                doc["value"]["residual"] = max_abs(series - closed);
            }
            doc["value"]["det"] = rep_determinant(series);
            emit(doc, pretty);
            return 0;
        }
        if (cmd_matrix->parsed()) {
            auto alg = Algebra::preset("four_real_hyperbolic");
            Element<Rational> x = element_from_strings(alg, split_csv(coeffs_csv));
            Mat<Rational> rep = represent(x);
            json matrix = json::array();
            for (int i = 0; i < 4; ++i) {
                json row = json::array();
                for (int j = 0; j < 4; ++j) row.push_back(rational_to_string(rep(i, j)));
                matrix.push_back(row);
            }
            json doc = {{"id", "matrix"},
                        {"inputs", {{"coeffs", split_csv(coeffs_csv)}}},
                        {"value",
                         {{"matrix", matrix},
                          {"det", rational_to_string(det_h(x))},
                          {"identity_residual", rational_to_string(det_identity_residual(x))},
                          {"bounds_hold", det_bounds_check(x)}}}};
            emit(doc, pretty);
            return 0;
        }
        if (cmd_fundsol->parsed()) {
            TestFunction phi = parse_phi(phi_spec);
            QuadratureSpec quad;
            quad.tol = tol == 1e-9 ? 1e-8 : tol;
            double mean = mean_value_phi(phi, eps_value, quad);
            Element<double> pair = pairing_E(phi, eps_value, quad);
            json doc = {{"id", "fundsol"},
                        {"inputs", {{"phi", phi.describe()}, {"eps", eps_value},
                                    {"tol", quad.tol}}},
                        {"value",
                         {{"pairing", pair.c},
                          {"mean_value", mean},
                          {"difference", std::fabs(pair.c[0] - mean)}}},
                        {"tolerance", 10 * quad.tol},
                        {"pass", std::fabs(pair.c[0] - mean) < 10 * quad.tol}};
            emit(doc, pretty);
            return doc["pass"].get<bool>() ? 0 : 1;
        }
        if (cmd_symbol->parsed()) {
            auto parts = split_csv(xi_csv);
            if (parts.size() != 4) throw DomainError("--xi expects four numbers");
            std::array<double, 4> xi;
            for (int i = 0; i < 4; ++i) xi[i] = std::stod(parts[i]);
            SymbolResult s = symbol_delta_plus(xi);
            json doc = {{"id", "symbol"},
                        {"inputs", {{"xi", xi}}},
                        {"value",
                         {{"p", {s.p.real(), s.p.imag()}},
                          {"minus_4p", {s.minus_4p.real(), s.minus_4p.imag()}},
                          {"conj_form", {s.conj_form.real(), s.conj_form.imag()}},
                          {"char_member", char_membership(xi)}}}};
            emit(doc, pretty);
            return 0;
        }
        if (cmd_suite->parsed()) return run_suite(seed, pretty);
    } catch (const Error& e) {
        json err = {{"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 2;
}
