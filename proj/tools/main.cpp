// torus-spectra: exact spectral analysis of the second-variation operators
// along the proper biharmonic Clifford torus in S^4, with an independent
// floating-point quadrature oracle.
//
// Exit codes: 0 success, 1 internal inconsistency (two computation paths
// disagreed) or unexpected failure, 2 usage error.

#include "torusspec/blocks.hpp"
#include "torusspec/equivariant.hpp"
#include "torusspec/errors.hpp"
#include "torusspec/killing.hpp"
#include "torusspec/operators.hpp"
#include "torusspec/oracle.hpp"
#include "torusspec/report.hpp"
#include "torusspec/selftest.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <numbers>

namespace {

using namespace torusspec;
using report::double_to_string;
using report::Json;

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

struct GlobalOpts {
    std::string output = "text";
    bool json() const { return output == "json"; }
};

void emit(const GlobalOpts& g, const Json& j, const std::string& text) {
    if (g.json())
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

// the section catalogue for `oracle hessian`: 1..10 pick the rotation-
// generated kernel fields, 11 picks V_nu, 12 picks V_eta
Section catalog_section(int id) {
    if (id >= 1 && id <= 10) return killing_sections()[static_cast<size_t>(id - 1)].expr;
    if (id == 11) return Section::frame_field(Target::S4, Frame::Nu);
    if (id == 12) return Section::frame_field(Target::S4, Frame::Eta);
    throw CLI::ValidationError("--i/--j must be 1..12 (1..10 rotation fields, 11 V_nu, 12 V_eta)");
}

const char* catalog_name(int id) {
    static const char* names[] = {"V_1", "V_2", "V_3", "V_4",  "V_5",  "V_6",
                                  "V_7", "V_8", "V_9", "V_10", "V_nu", "V_eta"};
    return names[id - 1];
}

int run_spectrum(const GlobalOpts& g, const std::string& op_name, double p, int cutoff) {
    OperatorSpec op;
    bool float_mode = false;
    if (op_name == "i2") op.kind = OperatorKind::I2;
    else if (op_name == "j") op.kind = OperatorKind::J;
    else if (op_name == "i2proj") op.kind = OperatorKind::I2Projected;
    else if (op_name == "jp") {
        op.kind = OperatorKind::Jp;
        if (p < 1.0) throw CLI::ValidationError("--p must be at least 1");
        if (std::abs(p - std::round(p)) < 1e-12) op.p = llround(p);
        else float_mode = true;
    } else {
        throw CLI::ValidationError("--operator must be one of i2, j, jp, i2proj");
    }

    SpectrumReport rep;
    Json extra;
    std::string extra_text;
    if (float_mode) {
        rep = jp_float_report(p, cutoff);
    } else if (op.kind == OperatorKind::J) {
        auto blocks = analyze_all_blocks(op, cutoff);
        rep = summarize(op, cutoff, blocks);
        CompositionCheck check = composition_condition(blocks, 2);
        extra = report::composition_to_json(check, 2);
        extra_text = "  composition condition (no eigenvalue in (-4, 0)): ";
        extra_text += check.holds ? "holds\n" : "fails";
        if (!check.holds && check.witness) {
            extra_text += ", witness ";
            extra_text += check.witness->exact ? check.witness->exact->to_string()
                                               : double_to_string(check.witness->approx);
            extra_text += " in block (" + std::to_string(check.witness->label.m) + "," +
                          std::to_string(check.witness->label.n) + ")\n";
        }
    } else {
        rep = index_nullity(op, cutoff);
    }

    Json j = report::spectrum_to_json(rep);
    if (!extra.is_null()) j["composition_condition"] = extra;
    emit(g, j, report::spectrum_to_text(rep) + extra_text);
    return 0;
}

int run_kernel(const GlobalOpts& g) {
    KernelReport rep = verify_kernel();
    emit(g, report::kernel_to_json(rep), report::kernel_to_text(rep));
    return rep.ok() ? 0 : 1;
}

int run_oracle_hessian(const GlobalOpts& g, int i, int jdx, int grid_n) {
    Section v = catalog_section(i), w = catalog_section(jdx);
    auto fd = oracle::fd_hessian(v, w, grid_n);
    QSqrt2 exact = l2_inner(i2_apply(v), w);
    double exact_d = exact.to_double() * kPi2;
    double err = std::abs(fd.value - exact_d);
    bool ok = err <= std::max(1e-4 * std::abs(exact_d), 1e-6 * kPi2);

    Json j;
    j["command"] = "oracle hessian";
    j["i"] = catalog_name(i);
    j["j"] = catalog_name(jdx);
    j["grid_n"] = grid_n;
    j["fd_value"] = double_to_string(fd.value);
    j["exact_value_in_pi2_units"] = report::qs2_to_json(exact);
    j["exact_value"] = double_to_string(exact_d);
    j["abs_error"] = double_to_string(err);
    j["tolerance_met"] = ok;
    if (!fd.warning.empty()) j["warning"] = fd.warning;

    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "H(E2)(%s, %s):\n  finite differences: %.12g\n  exact (I2 V, W):    %.12g  "
                  "(= %s in units of pi^2)\n  abs error:          %.3g  -> %s\n",
                  catalog_name(i), catalog_name(jdx), fd.value, exact_d,
                  exact.to_string().c_str(), err, ok ? "ok" : "MISMATCH");
    emit(g, j, buf);
    return ok ? 0 : 1;
}

int run_oracle_variation(const GlobalOpts& g, int order, int grid_n) {
    auto fd = oracle::variation_derivative(order, grid_n);
    Rat closed = oracle::variation_derivative_closed_form(order);
    double closed_d = rat_to_double(closed) * kPi2;
    double tau_err = oracle::tau_profile_max_error(grid_n, {0.0, 0.25, 0.5, 1.0, 2.0});
    double err = std::abs(fd.value - closed_d);
    bool ok = (closed.is_zero() ? err < 1e-6 * kPi2 : err < 1e-4 * std::abs(closed_d)) &&
              tau_err < 1e-10;

    Json j;
    j["command"] = "oracle variation";
    j["order"] = order;
    j["grid_n"] = grid_n;
    j["fd_value"] = double_to_string(fd.value);
    j["closed_form_in_pi2_units"] = rat_to_string(closed);
    j["closed_form_value"] = double_to_string(closed_d);
    j["abs_error"] = double_to_string(err);
    j["tau_profile_max_error"] = double_to_string(tau_err);
    j["tolerance_met"] = ok;
    if (!fd.warning.empty()) j["warning"] = fd.warning;

    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "d^%d/dt^%d E2(Phi_t) at t = 0:\n  finite differences: %.12g\n  closed form:   "
                  "     %.12g  (= %s pi^2)\n  |tau|^2 profile max error: %.3g\n  -> %s\n",
                  order, order, fd.value, closed_d, rat_to_string(closed).c_str(), tau_err,
                  ok ? "ok" : "MISMATCH");
    emit(g, j, buf);
    return ok ? 0 : 1;
}

int run_oracle_conformal(const GlobalOpts& g, const std::vector<double>& a, int grid_n) {
    if (a.size() != 4) throw CLI::ValidationError("--a needs four comma-separated components");
    std::array<double, 4> arr{a[0], a[1], a[2], a[3]};
    auto r = oracle::conformal_rayleigh(arr, grid_n);
    double norm2 = arr[0] * arr[0] + arr[1] * arr[1] + arr[2] * arr[2] + arr[3] * arr[3];
    bool ok = std::abs(r.numerator + norm2 * kPi2) < 1e-8 * norm2 * kPi2 &&
              std::abs(r.denominator - 0.75 * norm2 * kPi2) < 1e-8 * norm2 * kPi2 &&
              std::abs(r.quotient + 4.0 / 3.0) < 1e-8;

    Json j;
    j["command"] = "oracle conformal";
    Json ja = Json::array();
    for (double c : arr) ja.push_back(double_to_string(c));
    j["a"] = ja;
    j["grid_n"] = grid_n;
    j["numerator"] = double_to_string(r.numerator);
    j["denominator"] = double_to_string(r.denominator);
    j["quotient"] = double_to_string(r.quotient);
    j["expected_numerator"] = double_to_string(-norm2 * kPi2);
    j["expected_denominator"] = double_to_string(0.75 * norm2 * kPi2);
    j["expected_quotient"] = double_to_string(-4.0 / 3.0);
    j["tolerance_met"] = ok;

    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "conformal field V_a, |a|^2 = %.12g:\n  (J V_a, V_a) = %.12g   expected %.12g\n"
                  "  (V_a, V_a)   = %.12g   expected %.12g\n  quotient     = %.12g   expected "
                  "%.12g\n  -> %s\n",
                  norm2, r.numerator, -norm2 * kPi2, r.denominator, 0.75 * norm2 * kPi2,
                  r.quotient, -4.0 / 3.0, ok ? "ok" : "MISMATCH");
    emit(g, j, buf);
    return ok ? 0 : 1;
}

int run_equivariant(const GlobalOpts& g, double r1, double r2, int grid_n) {
    namespace eq = torusspec::equivariant;
    auto pts = eq::critical_points(r1, r2);

    // closed form vs quadrature over a shape grid
    double max_rel = 0;
    for (int i = 1; i <= 10; ++i)
        for (int jdx = 1; jdx <= 10; ++jdx) {
            double eta = std::numbers::pi * i / 11.0;
            double nu = (std::numbers::pi / 2) * jdx / 11.0;
            double expect = eq::reduced_bienergy(eta, nu, r1, r2) * 4 * kPi2 * r1 * r2;
            double got = eq::bienergy_quadrature(eta, nu, r1, r2, grid_n);
            max_rel = std::max(max_rel, std::abs(got - expect) / (1 + std::abs(expect)));
        }

    Json j;
    j["command"] = "equivariant";
    j["r1"] = double_to_string(r1);
    j["r2"] = double_to_string(r2);
    j["closed_form_vs_quadrature_max_rel_error"] = double_to_string(max_rel);
    Json jpts = Json::array();
    std::string text = "equivariant reduction on S1(" + double_to_string(r1) + ") x S1(" +
                       double_to_string(r2) + ")\n";
    char buf[512];
    std::snprintf(buf, sizeof(buf), "  closed form vs quadrature, max rel error: %.3g\n", max_rel);
    text += buf;
    if (pts.empty()) text += "  no isometric critical point in the open sector\n";
    bool all_ok = max_rel < 1e-8;
    for (const auto& p : pts) {
        eq::HessianResult hess = eq::reduced_hessian(p);
        auto exact = eq::hessian_exact_identification();
        double id_err = 0;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                id_err = std::max(id_err, std::abs(hess.h[a][b] - exact[a][b]));
        Json jp_;
        jp_["eta"] = double_to_string(p.eta);
        jp_["nu"] = double_to_string(p.nu);
        jp_["isometric"] = p.isometric();
        jp_["hessian"] = Json::array({Json::array({double_to_string(hess.h[0][0]),
                                                   double_to_string(hess.h[0][1])}),
                                      Json::array({double_to_string(hess.h[1][0]),
                                                   double_to_string(hess.h[1][1])})});
        jp_["hessian_exact_identification"] =
            Json::array({Json::array({double_to_string(exact[0][0]), double_to_string(exact[0][1])}),
                         Json::array({double_to_string(exact[1][0]), double_to_string(exact[1][1])})});
        jp_["identification_max_abs_error"] = double_to_string(id_err);
        jp_["equivariant_index"] = hess.index;
        jp_["equivariant_nullity"] = hess.nullity;
        if (!hess.warning.empty()) jp_["warning"] = hess.warning;
        jpts.push_back(std::move(jp_));

        std::snprintf(buf, sizeof(buf),
                      "  critical point (eta, nu) = (%.12g, %.12g), isometric: %s\n"
                      "    Hessian [[%.9g, %.9g], [%.9g, %.9g]]\n"
                      "    operator identification max error %.3g\n"
                      "    equivariant index %d, equivariant nullity %d\n",
                      p.eta, p.nu, p.isometric() ? "yes" : "no", hess.h[0][0], hess.h[0][1],
                      hess.h[1][0], hess.h[1][1], id_err, hess.index, hess.nullity);
        text += buf;
        all_ok = all_ok && id_err < 1e-6;
    }
    j["critical_points"] = std::move(jpts);
    emit(g, j, text);
    return all_ok ? 0 : 1;
}

int run_selftest(const GlobalOpts& g, std::uint64_t seed, int cutoff, int grid_n) {
    selftest::Options opts;
    opts.seed = seed;
    opts.cutoff = cutoff;
    opts.grid_n = grid_n;
    auto results = selftest::run(opts);

    Json j;
    j["command"] = "selftest";
    j["seed"] = seed;
    j["cutoff"] = cutoff;
    Json checks = Json::array();
    int failed = 0;
    std::string text;
    for (const auto& r : results) {
        checks.push_back(Json{{"name", r.name},
                              {"status", r.passed ? "pass" : "fail"},
                              {"detail", r.detail}});
        text += std::string(r.passed ? "pass" : "FAIL") + "  " + r.name +
                (r.detail.empty() ? "" : "  (" + r.detail + ")") + "\n";
        if (!r.passed) ++failed;
    }
    j["checks"] = std::move(checks);
    j["passed"] = static_cast<int>(results.size()) - failed;
    j["failed"] = failed;
    text += std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) +
            " checks passed\n";
    emit(g, j, text);
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectra of the second-variation operators along the biharmonic "
                 "Clifford torus in S^4"};
    app.require_subcommand(1);
    app.fallthrough(); // --output may follow the subcommand
    GlobalOpts g;
    app.add_option("--output", g.output, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // spectrum
    std::string op_name = "i2";
    double p = 2.0;
    int cutoff = 30;
    auto* spectrum = app.add_subcommand("spectrum", "exact index/nullity of an operator");
    spectrum->add_option("--operator", op_name, "i2 | j | jp | i2proj")
        ->check(CLI::IsMember({"i2", "j", "jp", "i2proj"}))
        ->capture_default_str();
    spectrum->add_option("--p", p, "p-energy exponent (jp only; non-integer switches to floats)")
        ->capture_default_str();
    spectrum->add_option("--cutoff", cutoff, "frequency cutoff of the block enumeration")
        ->check(CLI::Range(2, 1000))
        ->capture_default_str();

    // kernel
    auto* kernel = app.add_subcommand("kernel", "verify the kernel structure of I2");

    // oracle
    auto* orc = app.add_subcommand("oracle", "floating-point quadrature cross-checks");
    orc->require_subcommand(1);
    int grid_n = 16;
    orc->add_option("--grid-n", grid_n, "samples per angle (power of two, >= 8)")
        ->capture_default_str();
    int cat_i = 12, cat_j = 12, order = 4;
    auto* hess = orc->add_subcommand("hessian", "finite-difference Hessian vs exact pairing");
    hess->add_option("--i", cat_i, "first section: 1..10 rotation fields, 11 V_nu, 12 V_eta")
        ->required();
    hess->add_option("--j", cat_j, "second section, same catalogue")->required();
    auto* var = orc->add_subcommand("variation", "derivatives of E2 along the V_nu variation");
    var->add_option("--order", order, "derivative order 1..4")->check(CLI::Range(1, 4))->required();
    std::vector<double> avec;
    auto* conf = orc->add_subcommand("conformal", "Rayleigh data of a conformal field");
    conf->add_option("--a", avec, "four components, comma separated")->delimiter(',')->required();

    // equivariant
    double r1 = 0.5, r2 = 0.5;
    auto* equi = app.add_subcommand("equivariant", "reduced bienergy: critical points and Hessian");
    equi->add_option("--r1", r1, "first domain radius")->capture_default_str();
    equi->add_option("--r2", r2, "second domain radius")->capture_default_str();
    equi->add_option("--grid-n", grid_n, "samples per angle for the quadrature cross-check")
        ->capture_default_str();

    // selftest
    std::uint64_t seed = 12345;
    int st_cutoff = 8;
    auto* st = app.add_subcommand("selftest", "property suite and regression table");
    st->add_option("--seed", seed, "seed for the randomized property checks")
        ->capture_default_str();
    st->add_option("--cutoff", st_cutoff, "sweep depth of the regression table")
        ->check(CLI::Range(2, 1000))
        ->capture_default_str();
    st->add_option("--grid-n", grid_n, "oracle grid")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (spectrum->parsed()) return run_spectrum(g, op_name, p, cutoff);
        if (kernel->parsed()) return run_kernel(g);
        if (orc->parsed()) {
            if (hess->parsed()) return run_oracle_hessian(g, cat_i, cat_j, grid_n);
            if (var->parsed()) return run_oracle_variation(g, order, grid_n);
            if (conf->parsed()) return run_oracle_conformal(g, avec, grid_n);
        }
        if (equi->parsed()) return run_equivariant(g, r1, r2, grid_n);
        if (st->parsed()) return run_selftest(g, seed, st_cutoff, grid_n);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const InternalInconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
