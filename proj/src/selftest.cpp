#include "torusspec/selftest.hpp"

#include "torusspec/blocks.hpp"
#include "torusspec/equivariant.hpp"
#include "torusspec/killing.hpp"
#include "torusspec/operators.hpp"
#include "torusspec/oracle.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

namespace torusspec::selftest {

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

struct Harness {
    std::vector<CheckResult> results;

    void run_check(const std::string& name, const std::function<void()>& body) {
        CheckResult r;
        r.name = name;
        try {
            body();
            r.passed = true;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }
};

void expect(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 3);
    return Rat(num(rng), den(rng));
}

QSqrt2 random_qs2(std::mt19937_64& rng) { return QSqrt2(random_rat(rng), random_rat(rng)); }

TrigPoly random_trigpoly(std::mt19937_64& rng, int max_freq = 2, int terms = 3) {
    std::uniform_int_distribution<int> freq(0, max_freq);
    std::uniform_int_distribution<int> kind(0, 3);
    TrigPoly f;
    for (int i = 0; i < terms; ++i)
        f = f + TrigPoly::term(static_cast<TrigKind>(kind(rng)), freq(rng), freq(rng),
                               random_qs2(rng));
    return f;
}

Section random_section(std::mt19937_64& rng, Target t) {
    Section s(t);
    for (Frame e : frames_of(t)) s.set_component(e, random_trigpoly(rng));
    return s;
}

std::string fmt_report(const SpectrumReport& r) {
    std::ostringstream os;
    os << "(index " << r.index << ", nullity " << r.nullity << ")";
    return os.str();
}

} // namespace

std::vector<CheckResult> run(const Options& opts) {
    Harness h;

    h.run_check("qs2-field-axioms", [&] {
        std::mt19937_64 rng(opts.seed);
        for (int i = 0; i < 200; ++i) {
            QSqrt2 x = random_qs2(rng), y = random_qs2(rng), z = random_qs2(rng);
            expect((x + y) + z == x + (y + z), "associativity of addition failed");
            expect((x * y) * z == x * (y * z), "associativity of product failed");
            expect(x * (y + z) == x * y + x * z, "distributivity failed");
            if (!x.is_zero()) expect(x * x.inverse() == QSqrt2(1), "inverse failed");
        }
    });

    h.run_check("charpoly-two-paths-and-cayley-hamilton", [&] {
        std::mt19937_64 rng(opts.seed + 1);
        for (int dim = 2; dim <= 5; ++dim) {
            SymMatrix m(dim);
            for (int i = 0; i < dim; ++i)
                for (int j = i; j < dim; ++j) {
                    QSqrt2 v = random_qs2(rng);
                    m.set(i, j, v);
                    m.set(j, i, v);
                }
            Poly p = char_poly(m);
            expect(p == char_poly_faddeev(m), "Bareiss and Faddeev-LeVerrier disagree");
            expect(is_zero_matrix(evaluate_poly_at_matrix(p, m)), "Cayley-Hamilton failed");
        }
        for (BlockLabel l : {BlockLabel{0, 0}, BlockLabel{1, 0}, BlockLabel{2, 0}}) {
            SymMatrix m = operator_block({OperatorKind::I2, 2}, l);
            expect(is_zero_matrix(evaluate_poly_at_matrix(char_poly(m), m)),
                   "Cayley-Hamilton failed on an operator block");
        }
    });

    h.run_check("descartes-sturm-cross-check", [&] {
        // real_root_signature runs both counts and throws on any mismatch
        for (long long m = 1; m <= 6; ++m) real_root_signature(i2_axis_char_poly(m));
        for (long long m = 1; m <= 3; ++m)
            for (long long n = 1; n <= 3; ++n) real_root_signature(i2_expected_char_poly(
                {static_cast<int>(m), static_cast<int>(n)}));
    });

    h.run_check("i2-path-equivalence", [&] {
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n)
                for (TrigKind k : {TrigKind::CC, TrigKind::CS, TrigKind::SC, TrigKind::SS}) {
                    TrigPoly f = TrigPoly::term(k, m, n, QSqrt2(1));
                    if (f.is_zero()) continue;
                    for (Frame e : frames_of(Target::S4)) {
                        Section v(Target::S4);
                        v.set_component(e, f);
                        expect(i2_apply(v) == i2_closed_form(f, e),
                               "13-term assembly differs from the closed form");
                    }
                }
    });

    h.run_check("jacobi-and-jp-path-equivalence", [&] {
        for (int m = 0; m <= 2; ++m)
            for (int n = 0; n <= 2; ++n)
                for (TrigKind k : {TrigKind::CC, TrigKind::CS, TrigKind::SC, TrigKind::SS}) {
                    TrigPoly f = TrigPoly::term(k, m, n, QSqrt2(1));
                    if (f.is_zero()) continue;
                    for (Frame e : frames_of(Target::S3)) {
                        Section v(Target::S3);
                        v.set_component(e, f);
                        expect(jacobi_apply(v) == jacobi_closed_form(f, e),
                               "Jacobi closed form mismatch");
                        for (long long p = 1; p <= 6; ++p)
                            expect(jp_apply(static_cast<double>(p), v) == jp_closed_form(p, f, e),
                                   "p-energy closed form mismatch");
                    }
                }
    });

    h.run_check("self-adjointness-exact", [&] {
        std::mt19937_64 rng(opts.seed + 2);
        for (int i = 0; i < 6; ++i) {
            Section v4 = random_section(rng, Target::S4), w4 = random_section(rng, Target::S4);
            expect(l2_inner(i2_apply(v4), w4) == l2_inner(v4, i2_apply(w4)),
                   "I2 is not self-adjoint");
            Section v3 = random_section(rng, Target::S3), w3 = random_section(rng, Target::S3);
            expect(l2_inner(jacobi_apply(v3), w3) == l2_inner(v3, jacobi_apply(w3)),
                   "J is not self-adjoint");
            expect(l2_inner(i2_projected_apply(v3), w3) == l2_inner(v3, i2_projected_apply(w3)),
                   "projected operator is not self-adjoint");
            for (double p : {1.0, 4.0})
                expect(l2_inner(jp_apply(p, v3), w3) == l2_inner(v3, jp_apply(p, w3)),
                       "Jp is not self-adjoint");
        }
    });

    h.run_check("divergence-identity", [&] {
        std::mt19937_64 rng(opts.seed + 3);
        for (int i = 0; i < 8; ++i) {
            QSqrt2 v = divergence_pairing(random_section(rng, Target::S3));
            expect(v.sign() >= 0, "divergence pairing must be a square integral");
        }
    });

    h.run_check("block-preservation-and-float-signatures", [&] {
        // assemble_block verifies block preservation; analyze_block verifies
        // the float/exact signature agreement
        for (BlockLabel l : {BlockLabel{1, 1}, BlockLabel{2, 3}, BlockLabel{4, 0}}) {
            analyze_block({OperatorKind::I2, 2}, l);
            analyze_block({OperatorKind::J, 2}, l);
            analyze_block({OperatorKind::Jp, 3}, l);
            analyze_block({OperatorKind::I2Projected, 2}, l);
        }
    });

    h.run_check("killing-kernel", [&] {
        KernelReport rep = verify_kernel();
        expect(rep.ok(), "kernel verification failed: " + rep.failure_detail);
    });

    h.run_check("regression-i2", [&] {
        SpectrumReport r = index_nullity({OperatorKind::I2, 2}, opts.cutoff);
        expect(r.index == 1 && r.nullity == 11, "I2 expected (1, 11), got " + fmt_report(r));
        expect(r.tail_certified, "I2 tail not certified");
    });

    h.run_check("regression-j-and-composition", [&] {
        auto blocks = analyze_all_blocks({OperatorKind::J, 2}, opts.cutoff);
        SpectrumReport r = summarize({OperatorKind::J, 2}, opts.cutoff, blocks);
        expect(r.index == 4 && r.nullity == 7, "J expected (4, 7), got " + fmt_report(r));
        CompositionCheck c = composition_condition(blocks, 2);
        expect(!c.holds, "composition condition unexpectedly holds");
        expect(c.witness && c.witness->exact && *c.witness->exact == QSqrt2(Rat(4), Rat(-4)),
               "composition witness is not 4 - 4 sqrt2");
    });

    h.run_check("regression-jp", [&] {
        auto rows = pharmonic_sweep({2, 4, 5}, opts.cutoff);
        expect(rows[0].index == 4 && rows[0].nullity == 7, "p=2 expected (4, 7)");
        expect(rows[1].index == 0 && rows[1].nullity == 11, "p=4 expected (0, 11)");
        expect(rows[2].index == 0 && rows[2].nullity == 7, "p=5 expected (0, 7)");
    });

    h.run_check("regression-i2proj", [&] {
        SpectrumReport r = index_nullity({OperatorKind::I2Projected, 2}, opts.cutoff);
        expect(r.index == 0 && r.nullity == 7,
               "projected operator expected (0, 7), got " + fmt_report(r));
    });

    h.run_check("oracle-bienergy", [&] {
        double e2 = oracle::bienergy(oracle::sample_immersion(opts.grid_n));
        expect(std::abs(e2 - 2 * kPi2) < 1e-10, "bienergy of the base immersion is off");
    });

    h.run_check("oracle-variation", [&] {
        for (int order : {1, 2, 3}) {
            auto d = oracle::variation_derivative(order, opts.grid_n);
            expect(std::abs(d.value) < 1e-6 * kPi2, "low-order derivative should vanish");
        }
        auto d4 = oracle::variation_derivative(4, opts.grid_n);
        expect(std::abs(d4.value + 48 * kPi2) < 1e-4 * 48 * kPi2,
               "fourth derivative should be -48 pi^2");
        expect(oracle::tau_profile_max_error(opts.grid_n, {0.0, 0.5, 1.5}) < 1e-10,
               "tau profile mismatch");
    });

    h.run_check("oracle-hessian", [&] {
        Section veta = Section::frame_field(Target::S4, Frame::Eta);
        Section vnu = Section::frame_field(Target::S4, Frame::Nu);
        auto he = oracle::fd_hessian(veta, veta, opts.grid_n);
        expect(std::abs(he.value + 16 * kPi2) < 1e-4 * 16 * kPi2, "(V_eta, V_eta) should be -16 pi^2");
        auto hn = oracle::fd_hessian(vnu, vnu, opts.grid_n);
        expect(std::abs(hn.value) < 1e-6 * kPi2, "(V_nu, V_nu) should vanish");
    });

    h.run_check("oracle-conformal", [&] {
        auto r = oracle::conformal_rayleigh({1, 0, 0, 0}, opts.grid_n);
        expect(std::abs(r.numerator + kPi2) < 1e-8 * kPi2, "conformal numerator is off");
        expect(std::abs(r.denominator - 0.75 * kPi2) < 1e-8 * kPi2, "conformal denominator is off");
        expect(std::abs(r.quotient + 4.0 / 3.0) < 1e-8, "conformal quotient is off");
    });

    h.run_check("equivariant", [&] {
        auto pts = equivariant::critical_points(0.5, 0.5);
        expect(pts.size() == 1, "expected exactly one isometric critical point");
        auto hess = equivariant::reduced_hessian(pts[0]);
        expect(std::abs(hess.h[0][0] + 16) < 1e-6 && std::abs(hess.h[1][1]) < 1e-6 &&
                   std::abs(hess.h[0][1]) < 1e-6,
               "equivariant Hessian should be diag(-16, 0)");
        expect(hess.index == 1 && hess.nullity == 1, "equivariant counts should be (1, 1)");
    });

    return h.results;
}

} // namespace torusspec::selftest
