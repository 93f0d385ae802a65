#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "torusspec/errors.hpp"
#include "torusspec/matrix.hpp"
#include "torusspec/operators.hpp"

using namespace torusspec;

namespace {

const QSqrt2 kOne{1};
const QSqrt2 kSqrt2 = QSqrt2::sqrt2();
const QSqrt2 kInvSqrt2{Rat(0), Rat(1, 2)};

TrigPoly basis(TrigKind k, int j, int l) { return TrigPoly::term(k, j, l, kOne); }

Section make(Target t, Frame e, const TrigPoly& f) {
    Section s(t);
    s.set_component(e, f);
    return s;
}

// conformal field V_a = a - 2 <a, phi> phi re-expressed in the S3 moving
// frame, for rational a
Section conformal_section(const std::array<Rat, 4>& a) {
    const QSqrt2 h{Rat(1, 2)};
    // <a, V_gamma> = -a1 sin g + a2 cos g, <a, V_theta> = -a3 sin t + a4 cos t,
    // <a, V_nu> = (a1 cos g + a2 sin g - a3 cos t - a4 sin t)/sqrt2; the phi
    // part of V_a is normal-free since <phi, frame> = 0
    Section s(Target::S3);
    s.set_component(Frame::Gamma, basis(TrigKind::SC, 1, 0).scaled(QSqrt2(-a[0])) +
                                      basis(TrigKind::CC, 1, 0).scaled(QSqrt2(a[1])));
    s.set_component(Frame::Theta, basis(TrigKind::CS, 0, 1).scaled(QSqrt2(-a[2])) +
                                      basis(TrigKind::CC, 0, 1).scaled(QSqrt2(a[3])));
    s.set_component(Frame::Nu,
                    (basis(TrigKind::CC, 1, 0).scaled(QSqrt2(a[0])) +
                     basis(TrigKind::SC, 1, 0).scaled(QSqrt2(a[1])) +
                     basis(TrigKind::CC, 0, 1).scaled(QSqrt2(-a[2])) +
                     basis(TrigKind::CS, 0, 1).scaled(QSqrt2(-a[3])))
                        .scaled(kInvSqrt2));
    return s;
}

// negative J-eigenvectors W_1..W_4 (unnormalised)
std::array<Section, 4> mu1_eigenbasis() {
    Section w1(Target::S3), w2(Target::S3), w3(Target::S3), w4(Target::S3);
    w1.set_component(Frame::Gamma, basis(TrigKind::CC, 1, 0));
    w1.set_component(Frame::Nu, basis(TrigKind::SC, 1, 0));
    w2.set_component(Frame::Gamma, basis(TrigKind::SC, 1, 0).scaled(QSqrt2(-1)));
    w2.set_component(Frame::Nu, basis(TrigKind::CC, 1, 0));
    w3.set_component(Frame::Theta, basis(TrigKind::CC, 0, 1).scaled(QSqrt2(-1)));
    w3.set_component(Frame::Nu, basis(TrigKind::CS, 0, 1));
    w4.set_component(Frame::Theta, basis(TrigKind::CS, 0, 1));
    w4.set_component(Frame::Nu, basis(TrigKind::CC, 0, 1));
    return {w1, w2, w3, w4};
}

} // namespace

TEST_CASE("I2 on the constant frame sections") {
    Section veta = Section::frame_field(Target::S4, Frame::Eta);
    CHECK(i2_apply(veta) == veta.scaled(QSqrt2(-16)));
    CHECK(i2_apply(Section::frame_field(Target::S4, Frame::Nu)).is_zero());
    CHECK(i2_apply(Section::frame_field(Target::S4, Frame::Gamma)).is_zero());
    CHECK(i2_apply(Section::frame_field(Target::S4, Frame::Theta)).is_zero());
}

TEST_CASE("I2 of cos(g) V_gamma against the eigenfunction closed form") {
    // lambda = 4: [lam(4+lam) f - 48 f_gg] V_g + 16 f_gt V_t
    //             + 8 sqrt2 (2+lam) f_g V_nu + 8 lam f_g V_eta
    TrigPoly f = basis(TrigKind::CC, 1, 0);
    Section got = i2_apply(make(Target::S4, Frame::Gamma, f));
    Section want(Target::S4);
    want.set_component(Frame::Gamma, f.scaled(QSqrt2(32 + 48)));
    want.set_component(Frame::Nu, basis(TrigKind::SC, 1, 0).scaled(QSqrt2(-48) * kSqrt2));
    want.set_component(Frame::Eta, basis(TrigKind::SC, 1, 0).scaled(QSqrt2(-32)));
    CHECK(got == want);
    CHECK(got == i2_closed_form(f, Frame::Gamma));
}

TEST_CASE("I2 of sin(t) V_theta: frozen expansion") {
    // lambda = 4: 80 sin t V_theta - 48 sqrt2 cos t V_nu + 32 cos t V_eta
    TrigPoly f = basis(TrigKind::CS, 0, 1);
    Section got = i2_apply(make(Target::S4, Frame::Theta, f));
    Section want(Target::S4);
    want.set_component(Frame::Theta, f.scaled(QSqrt2(80)));
    want.set_component(Frame::Nu, basis(TrigKind::CC, 0, 1).scaled(QSqrt2(-48) * kSqrt2));
    want.set_component(Frame::Eta, basis(TrigKind::CC, 0, 1).scaled(QSqrt2(32)));
    CHECK(got == want);
    CHECK(got == i2_closed_form(f, Frame::Theta));
}

TEST_CASE("the thirteen terms of I2 on f V_gamma match their listed values") {
    TrigPoly f = basis(TrigKind::CC, 2, 1); // lambda = 20
    const QSqrt2 lam{20};
    TrigPoly fg = f.d_gamma();
    auto terms = i2_terms(make(Target::S4, Frame::Gamma, f));

    auto fV = [&](Frame e, const TrigPoly& g) { return make(Target::S4, e, g); };
    Section lap_fVg(Target::S4); // (lam+3) f V_g + 4 sqrt2 f_g V_nu + 4 f_g V_eta
    lap_fVg.set_component(Frame::Gamma, f.scaled(lam + QSqrt2(3)));
    lap_fVg.set_component(Frame::Nu, fg.scaled(QSqrt2(4) * kSqrt2));
    lap_fVg.set_component(Frame::Eta, fg.scaled(QSqrt2(4)));

    // I: bilaplacian (checked against the closed form elsewhere); II = -lap
    CHECK(terms[1] == -lap_fVg);
    CHECK(terms[2] == fV(Frame::Gamma, f.scaled(QSqrt2(-8))));
    CHECK(terms[3] == fV(Frame::Gamma, f.scaled(QSqrt2(4))));
    CHECK(terms[4] == fV(Frame::Gamma, f.scaled(QSqrt2(4))));
    CHECK(terms[5] == fV(Frame::Gamma, f.scaled(QSqrt2(-4))));
    CHECK(terms[6].is_zero());
    CHECK(terms[7] == fV(Frame::Gamma, f.scaled(lam + QSqrt2(3))));
    CHECK(terms[8] == fV(Frame::Gamma, f));
    CHECK(terms[9] == fV(Frame::Gamma, f.scaled(QSqrt2(-4))));
    CHECK(terms[10] == fV(Frame::Eta, fg.scaled(QSqrt2(-8))));
    CHECK(terms[11] == -(lap_fVg.scaled(QSqrt2(2))));
    CHECK(terms[12] == fV(Frame::Gamma, f.scaled(QSqrt2(4))));
}

TEST_CASE("path equivalence: 13-term assembly equals the closed forms on all blocks <= 5") {
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n)
            for (TrigKind k : {TrigKind::CC, TrigKind::CS, TrigKind::SC, TrigKind::SS}) {
                TrigPoly f = TrigPoly::term(k, m, n, kOne);
                if (f.is_zero()) continue;
                for (Frame e : frames_of(Target::S4))
                    CHECK(i2_apply(make(Target::S4, e, f)) == i2_closed_form(f, e));
            }
}

TEST_CASE("i2_closed_form rejects non-eigenfunctions") {
    TrigPoly g = basis(TrigKind::CC, 1, 0) + basis(TrigKind::CC, 0, 2);
    CHECK_THROWS_AS(i2_closed_form(g, Frame::Gamma), std::invalid_argument);
}

TEST_CASE("Jacobi operator examples and path equivalence") {
    CHECK(jacobi_apply(Section::frame_field(Target::S3, Frame::Nu)).is_zero());

    // J(cos g V_gamma) = 4 cos g V_gamma - 4 sqrt2 sin g V_nu
    Section got = jacobi_apply(make(Target::S3, Frame::Gamma, basis(TrigKind::CC, 1, 0)));
    Section want(Target::S3);
    want.set_component(Frame::Gamma, basis(TrigKind::CC, 1, 0).scaled(QSqrt2(4)));
    want.set_component(Frame::Nu, basis(TrigKind::SC, 1, 0).scaled(QSqrt2(-4) * kSqrt2));
    CHECK(got == want);

    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n)
            for (TrigKind k : {TrigKind::CC, TrigKind::CS, TrigKind::SC, TrigKind::SS}) {
                TrigPoly f = TrigPoly::term(k, m, n, kOne);
                if (f.is_zero()) continue;
                for (Frame e : frames_of(Target::S3))
                    CHECK(jacobi_apply(make(Target::S3, e, f)) == jacobi_closed_form(f, e));
            }
}

TEST_CASE("W_1..W_4 are J-eigenvectors with eigenvalue 4 - 4 sqrt2") {
    const QSqrt2 mu1{Rat(4), Rat(-4)};
    for (const Section& w : mu1_eigenbasis()) CHECK(jacobi_apply(w) == w.scaled(mu1));
}

TEST_CASE("p-energy operator: relation formula against the closed forms") {
    // p = 2 reduces to J
    auto rng = testing::make_rng(29);
    for (int i = 0; i < 10; ++i) {
        Section v = testing::random_section(rng, Target::S3);
        CHECK(jp_apply(2, v) == jacobi_apply(v));
    }
    // p = 4 on f V_nu is 2 J(f V_nu)
    TrigPoly f = basis(TrigKind::SS, 2, 1);
    Section fnu = make(Target::S3, Frame::Nu, f);
    CHECK(jp_apply(4, fnu) == jacobi_apply(fnu).scaled(QSqrt2(2)));

    // p = 4 on cos g V_gamma: 16 cos g V_gamma - 8 sqrt2 sin g V_nu
    Section got = jp_apply(4, make(Target::S3, Frame::Gamma, basis(TrigKind::CC, 1, 0)));
    Section want(Target::S3);
    want.set_component(Frame::Gamma, basis(TrigKind::CC, 1, 0).scaled(QSqrt2(16)));
    want.set_component(Frame::Nu, basis(TrigKind::SC, 1, 0).scaled(QSqrt2(-8) * kSqrt2));
    CHECK(got == want);

    // closed-form path equivalence for p in 1..6 on blocks <= 3
    for (long long p = 1; p <= 6; ++p)
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n)
                for (TrigKind k : {TrigKind::CC, TrigKind::CS, TrigKind::SC, TrigKind::SS}) {
                    TrigPoly g = TrigPoly::term(k, m, n, kOne);
                    if (g.is_zero()) continue;
                    for (Frame e : frames_of(Target::S3))
                        CHECK(jp_apply(static_cast<double>(p), make(Target::S3, e, g)) ==
                              jp_closed_form(p, g, e));
                }

    CHECK_THROWS_AS(jp_apply(2.5, fnu), std::invalid_argument);
    CHECK_THROWS_AS(jp_apply(0.5, fnu), std::invalid_argument);
}

TEST_CASE("projected operator examples") {
    CHECK(i2_projected_apply(Section::frame_field(Target::S3, Frame::Nu)).is_zero());
    CHECK(i2_projected_apply(Section::frame_field(Target::S3, Frame::Gamma)).is_zero());

    // on W_1: (mu^2 + 4 mu) W_1 + 4 d*-term, and the pairing with W_1 is
    // 72 - 48 sqrt2 > 0
    Section w1 = mu1_eigenbasis()[0];
    const QSqrt2 mu{Rat(4), Rat(-4)};
    Section expect = w1.scaled(mu * mu + QSqrt2(4) * mu) + dstar_coupling(w1).scaled(QSqrt2(4));
    CHECK(i2_projected_apply(w1) == expect);
    QSqrt2 pairing = l2_inner(i2_projected_apply(w1), w1);
    CHECK(pairing == QSqrt2(Rat(72), Rat(-48)));
    CHECK(pairing.sign() > 0);
}

TEST_CASE("composition identity J^2 + 4J + 4 d* equals the projected operator, term-wise") {
    auto rng = testing::make_rng(31);
    for (int i = 0; i < 10; ++i) {
        Section v = testing::random_section(rng, Target::S3);
        Section jv = jacobi_apply(v);
        CHECK(i2_projected_apply(v) ==
              jacobi_apply(jv) + jv.scaled(QSqrt2(4)) + dstar_coupling(v).scaled(QSqrt2(4)));
    }
}

TEST_CASE("divergence pairing: both routes agree and match the stated values") {
    CHECK(divergence_pairing(Section::frame_field(Target::S3, Frame::Nu)).is_zero());
    CHECK(divergence_pairing(Section::frame_field(Target::S3, Frame::Gamma)).is_zero());
    Section v = make(Target::S3, Frame::Gamma, basis(TrigKind::CC, 1, 0));
    CHECK(divergence_pairing(v) == QSqrt2(2));
    auto rng = testing::make_rng(37);
    for (int i = 0; i < 15; ++i) {
        QSqrt2 val = divergence_pairing(testing::random_section(rng, Target::S3));
        CHECK(val.sign() >= 0); // it is an integral of a square
    }
}

TEST_CASE("every operator is L2 self-adjoint on random band-limited sections, exactly") {
    auto rng = testing::make_rng(41);
    for (int i = 0; i < 12; ++i) {
        Section v4 = testing::random_section(rng, Target::S4);
        Section w4 = testing::random_section(rng, Target::S4);
        CHECK(l2_inner(i2_apply(v4), w4) == l2_inner(v4, i2_apply(w4)));

        Section v3 = testing::random_section(rng, Target::S3);
        Section w3 = testing::random_section(rng, Target::S3);
        CHECK(l2_inner(jacobi_apply(v3), w3) == l2_inner(v3, jacobi_apply(w3)));
        CHECK(l2_inner(i2_projected_apply(v3), w3) == l2_inner(v3, i2_projected_apply(w3)));
        for (double p : {1.0, 3.0, 4.0, 6.0})
            CHECK(l2_inner(jp_apply(p, v3), w3) == l2_inner(v3, jp_apply(p, w3)));
    }
}

TEST_CASE("conformal fields: exact Rayleigh data") {
    auto rng = testing::make_rng(43);
    for (int trial = 0; trial < 8; ++trial) {
        std::array<Rat, 4> a{testing::random_rat(rng), testing::random_rat(rng),
                             testing::random_rat(rng), testing::random_rat(rng)};
        Rat norm2 = a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3];
        if (norm2.is_zero()) continue;
        Section va = conformal_section(a);
        CHECK(l2_inner(va, va) == QSqrt2(Rat(3, 4) * norm2));
        CHECK(l2_inner(jacobi_apply(va), va) == QSqrt2(-norm2));
    }
    // -4/3 > 4 - 4 sqrt2
    CHECK(QSqrt2(Rat(-4, 3)) > QSqrt2(Rat(4), Rat(-4)));
}

TEST_CASE("conformal fields and the mu_1 eigenspace intersect trivially") {
    std::vector<Section> joint;
    for (int i = 0; i < 4; ++i) {
        std::array<Rat, 4> a{};
        a[static_cast<size_t>(i)] = 1;
        joint.push_back(conformal_section(a));
    }
    for (const Section& w : mu1_eigenbasis()) joint.push_back(w);
    DenseMatrix gram(8, std::vector<QSqrt2>(8));
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = 0; j < 8; ++j) gram[i][j] = l2_inner(joint[i], joint[j]);
    CHECK(exact_rank(gram) == 8);
}
