#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "torusspec/section.hpp"

using namespace torusspec;

namespace {

const QSqrt2 kOne{1};
const QSqrt2 kSqrt2 = QSqrt2::sqrt2();
const QSqrt2 kInvSqrt2{Rat(0), Rat(1, 2)}; // 1/sqrt2

TrigPoly basis(TrigKind k, int j, int l) { return TrigPoly::term(k, j, l, kOne); }

Section make(Target t, Frame e, const TrigPoly& f) {
    Section s(t);
    s.set_component(e, f);
    return s;
}

// closed forms of the rough Laplacian on f V_e for a Laplace eigenfunction f
Section rough_closed_form(const TrigPoly& f, Frame e) {
    QSqrt2 lam = *f.laplace_eigenvalue();
    TrigPoly fg = f.d_gamma(), ft = f.d_theta();
    Section r(Target::S4);
    QSqrt2 c4s2 = QSqrt2(4) * kSqrt2;
    switch (e) {
    case Frame::Gamma:
        r.set_component(Frame::Gamma, f.scaled(lam + QSqrt2(3)));
        r.set_component(Frame::Nu, fg.scaled(c4s2));
        r.set_component(Frame::Eta, fg.scaled(QSqrt2(4)));
        break;
    case Frame::Theta:
        r.set_component(Frame::Theta, f.scaled(lam + QSqrt2(3)));
        r.set_component(Frame::Nu, ft.scaled(-c4s2));
        r.set_component(Frame::Eta, ft.scaled(QSqrt2(4)));
        break;
    case Frame::Nu:
        r.set_component(Frame::Gamma, fg.scaled(-c4s2));
        r.set_component(Frame::Theta, ft.scaled(c4s2));
        r.set_component(Frame::Nu, f.scaled(lam + QSqrt2(4)));
        break;
    case Frame::Eta:
        r.set_component(Frame::Gamma, fg.scaled(QSqrt2(-4)));
        r.set_component(Frame::Theta, ft.scaled(QSqrt2(-4)));
        r.set_component(Frame::Eta, f.scaled(lam + QSqrt2(2)));
        break;
    }
    return r;
}

// closed forms of the iterated rough Laplacian on f V_e
Section rough_squared_closed_form(const TrigPoly& f, Frame e) {
    QSqrt2 lam = *f.laplace_eigenvalue();
    TrigPoly fg = f.d_gamma(), ft = f.d_theta();
    TrigPoly fgg = fg.d_gamma(), ftt = ft.d_theta(), fgt = fg.d_theta();
    QSqrt2 s2_16 = QSqrt2(16) * kSqrt2;
    QSqrt2 cnu = QSqrt2(4) * kSqrt2 * (QSqrt2(2) * lam + QSqrt2(7));
    QSqrt2 ceta = QSqrt2(4) * (QSqrt2(2) * lam + QSqrt2(5));
    QSqrt2 diag = (lam + QSqrt2(3)) * (lam + QSqrt2(3));
    Section r(Target::S4);
    switch (e) {
    case Frame::Gamma:
        r.set_component(Frame::Gamma, f.scaled(diag) - fgg.scaled(QSqrt2(48)));
        r.set_component(Frame::Theta, fgt.scaled(QSqrt2(16)));
        r.set_component(Frame::Nu, fg.scaled(cnu));
        r.set_component(Frame::Eta, fg.scaled(ceta));
        break;
    case Frame::Theta:
        r.set_component(Frame::Gamma, fgt.scaled(QSqrt2(16)));
        r.set_component(Frame::Theta, f.scaled(diag) - ftt.scaled(QSqrt2(48)));
        r.set_component(Frame::Nu, ft.scaled(-cnu));
        r.set_component(Frame::Eta, ft.scaled(ceta));
        break;
    case Frame::Nu:
        r.set_component(Frame::Gamma, fg.scaled(-cnu));
        r.set_component(Frame::Theta, ft.scaled(cnu));
        r.set_component(Frame::Nu, f.scaled(lam * lam + QSqrt2(16) * lam + QSqrt2(16)));
        r.set_component(Frame::Eta, ftt.scaled(s2_16) - fgg.scaled(s2_16));
        break;
    case Frame::Eta:
        r.set_component(Frame::Gamma, fg.scaled(-ceta));
        r.set_component(Frame::Theta, ft.scaled(-ceta));
        r.set_component(Frame::Nu, ftt.scaled(s2_16) - fgg.scaled(s2_16));
        r.set_component(Frame::Eta, f.scaled(lam * lam + QSqrt2(8) * lam + QSqrt2(4)));
        break;
    }
    return r;
}

} // namespace

TEST_CASE("trig calculus on the stated examples") {
    TrigPoly cosg = basis(TrigKind::CC, 1, 0);
    CHECK(cosg.laplace() == cosg.scaled(QSqrt2(4)));
    CHECK(TrigPoly::constant(kOne).laplace().is_zero());

    // d/dgamma cos(2g) sin(t) = -2 sin(2g) sin(t)
    TrigPoly f = basis(TrigKind::CS, 2, 1);
    CHECK(f.d_gamma() == basis(TrigKind::SS, 2, 1).scaled(QSqrt2(-2)));
}

TEST_CASE("product is commutative and associative, exactly") {
    auto rng = testing::make_rng(3);
    for (int i = 0; i < 30; ++i) {
        TrigPoly f = testing::random_trigpoly(rng), g = testing::random_trigpoly(rng),
                 h = testing::random_trigpoly(rng);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
    }
}

TEST_CASE("derivatives along Killing directions commute with the Laplacian") {
    auto rng = testing::make_rng(5);
    for (int i = 0; i < 30; ++i) {
        TrigPoly f = testing::random_trigpoly(rng, 3, 4);
        CHECK(f.laplace().d_gamma() == f.d_gamma().laplace());
        CHECK(f.laplace().d_theta() == f.d_theta().laplace());
    }
}

TEST_CASE("product basis canonicalisation") {
    CHECK(TrigPoly::term(TrigKind::CS, 2, 0, kOne).is_zero()); // sin(0 t) factor
    CHECK(TrigPoly::term(TrigKind::SC, 0, 2, kOne).is_zero());
    CHECK(TrigPoly::term(TrigKind::SS, 0, 1, kOne).is_zero());
    // cos^2(g) = 1/2 + 1/2 cos(2g)
    TrigPoly c = basis(TrigKind::CC, 1, 0);
    TrigPoly sq = c * c;
    CHECK(sq.coefficient({TrigKind::CC, 0, 0}) == QSqrt2(Rat(1, 2)));
    CHECK(sq.coefficient({TrigKind::CC, 2, 0}) == QSqrt2(Rat(1, 2)));
    CHECK(sq.mean() == QSqrt2(Rat(1, 2)));
    // l2_pair against the full product route
    auto rng = testing::make_rng(23);
    for (int i = 0; i < 25; ++i) {
        TrigPoly f = testing::random_trigpoly(rng), g = testing::random_trigpoly(rng);
        CHECK(TrigPoly::l2_pair(f, g) == (f * g).mean());
    }
}

TEST_CASE("connection table entries") {
    // nabla_{X_gamma} V_nu = sqrt2 V_gamma
    CHECK(frame_connection(DomainField::XGamma, Frame::Nu, Target::S4) ==
          Section::frame_field(Target::S4, Frame::Gamma).scaled(kSqrt2));
    // nabla_{X_theta} V_gamma = 0
    CHECK(frame_connection(DomainField::XTheta, Frame::Gamma, Target::S4).is_zero());
    // nabla_{X_gamma} V_eta = V_gamma
    CHECK(frame_connection(DomainField::XGamma, Frame::Eta, Target::S4) ==
          Section::frame_field(Target::S4, Frame::Gamma));
    // S3 bundle: eta is invalid
    CHECK_THROWS_AS(frame_connection(DomainField::XGamma, Frame::Eta, Target::S3),
                    std::invalid_argument);
    // S3: nabla_{X_gamma} V_gamma = -sqrt2 V_nu (no eta part)
    CHECK(frame_connection(DomainField::XGamma, Frame::Gamma, Target::S3) ==
          Section::frame_field(Target::S3, Frame::Nu).scaled(-kSqrt2));
}

TEST_CASE("covariant derivative via the Leibniz rule") {
    // nabla_{X_gamma} V_gamma = -sqrt2 V_nu - V_eta
    Section vg = Section::frame_field(Target::S4, Frame::Gamma);
    Section expected(Target::S4);
    expected.set_component(Frame::Nu, TrigPoly::constant(-kSqrt2));
    expected.set_component(Frame::Eta, TrigPoly::constant(QSqrt2(-1)));
    CHECK(covariant_derivative(DomainField::XGamma, vg) == expected);

    // nabla_{X_gamma}(cos g V_eta) = -2 sin g V_eta + cos g V_gamma
    Section v = make(Target::S4, Frame::Eta, basis(TrigKind::CC, 1, 0));
    Section want(Target::S4);
    want.set_component(Frame::Eta, basis(TrigKind::SC, 1, 0).scaled(QSqrt2(-2)));
    want.set_component(Frame::Gamma, basis(TrigKind::CC, 1, 0));
    CHECK(covariant_derivative(DomainField::XGamma, v) == want);

    // nabla_{X_theta}(c V_nu) = -sqrt2 c V_theta
    Section w = Section::frame_field(Target::S4, Frame::Nu).scaled(QSqrt2(7));
    CHECK(covariant_derivative(DomainField::XTheta, w) ==
          Section::frame_field(Target::S4, Frame::Theta).scaled(-kSqrt2 * QSqrt2(7)));
}

TEST_CASE("rough Laplacian of the frame fields") {
    CHECK(rough_laplacian(Section::frame_field(Target::S4, Frame::Gamma)) ==
          Section::frame_field(Target::S4, Frame::Gamma).scaled(QSqrt2(3)));
    CHECK(rough_laplacian(Section::frame_field(Target::S4, Frame::Theta)) ==
          Section::frame_field(Target::S4, Frame::Theta).scaled(QSqrt2(3)));
    CHECK(rough_laplacian(Section::frame_field(Target::S4, Frame::Nu)) ==
          Section::frame_field(Target::S4, Frame::Nu).scaled(QSqrt2(4)));
    CHECK(rough_laplacian(Section::frame_field(Target::S4, Frame::Eta)) ==
          Section::frame_field(Target::S4, Frame::Eta).scaled(QSqrt2(2)));
}

TEST_CASE("rough Laplacian closed forms on every eigen-block up to frequency 5") {
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n)
            for (TrigKind k : {TrigKind::CC, TrigKind::CS, TrigKind::SC, TrigKind::SS}) {
                TrigPoly f = TrigPoly::term(k, m, n, kOne);
                if (f.is_zero()) continue;
                for (Frame e : frames_of(Target::S4)) {
                    Section v = make(Target::S4, e, f);
                    Section lap = rough_laplacian(v);
                    CHECK(lap == rough_closed_form(f, e));
                    CHECK(rough_laplacian(lap) == rough_squared_closed_form(f, e));
                }
            }
}

TEST_CASE("rough Laplacian is L2 self-adjoint, exactly") {
    auto rng = testing::make_rng(17);
    for (int i = 0; i < 20; ++i) {
        Section v = testing::random_section(rng, Target::S4);
        Section w = testing::random_section(rng, Target::S4);
        CHECK(l2_inner(rough_laplacian(v), w) == l2_inner(v, rough_laplacian(w)));
    }
}

TEST_CASE("L2 pairings of the stated examples") {
    Section veta = Section::frame_field(Target::S4, Frame::Eta);
    CHECK(l2_inner(veta, veta) == kOne);

    Section cg = make(Target::S4, Frame::Gamma, basis(TrigKind::CC, 1, 0));
    CHECK(l2_inner(cg, cg) == QSqrt2(Rat(1, 2)));

    // conformal field V_a = a - 2 <a, phi> phi with a = e1, in the moving
    // frame: -sin(g) V_gamma + (cos(g)/sqrt2) V_nu; its square norm is 3/4
    Section va(Target::S3);
    va.set_component(Frame::Gamma, basis(TrigKind::SC, 1, 0).scaled(QSqrt2(-1)));
    va.set_component(Frame::Nu, basis(TrigKind::CC, 1, 0).scaled(kInvSqrt2));
    CHECK(l2_inner(va, va) == QSqrt2(Rat(3, 4)));

    // mismatched targets refuse to pair
    CHECK_THROWS_AS(l2_inner(veta, Section::frame_field(Target::S3, Frame::Nu)),
                    std::invalid_argument);
}

TEST_CASE("laplace eigenvalue detection") {
    TrigPoly f = basis(TrigKind::CC, 1, 2) + basis(TrigKind::SS, 2, 1); // both 4(1+4)=20
    CHECK(f.laplace_eigenvalue() == QSqrt2(20));
    TrigPoly g = basis(TrigKind::CC, 1, 0) + basis(TrigKind::CC, 0, 2);
    CHECK(!g.laplace_eigenvalue().has_value());
}
