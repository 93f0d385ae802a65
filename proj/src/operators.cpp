#include "torusspec/operators.hpp"

#include "torusspec/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace torusspec {

namespace {

const QSqrt2 kSqrt2 = QSqrt2::sqrt2();

void require_target(const Section& v, Target t, const char* op) {
    if (v.target() != t)
        throw std::invalid_argument(std::string(op) + ": wrong bundle for this operator");
}

QSqrt2 require_eigenvalue(const TrigPoly& f) {
    auto lam = f.laplace_eigenvalue();
    if (!lam) throw std::invalid_argument("function is not a Laplace eigenfunction");
    return *lam;
}

} // namespace

Section tension_field_of_composition() {
    return Section::frame_field(Target::S4, Frame::Eta).scaled(QSqrt2(-2));
}

TrigPoly pullback_pairing(const Section& v) {
    return covariant_derivative(DomainField::XGamma, v).component(Frame::Gamma) +
           covariant_derivative(DomainField::XTheta, v).component(Frame::Theta);
}

Section dstar_coupling(const Section& v) {
    require_target(v, Target::S3, "dstar_coupling");
    TrigPoly h = pullback_pairing(v);
    Section r(Target::S3);
    r.set_component(Frame::Gamma, h.d_gamma().scaled(QSqrt2(-2)));
    r.set_component(Frame::Theta, h.d_theta().scaled(QSqrt2(-2)));
    return r;
}

std::array<Section, 13> i2_terms(const Section& v) {
    require_target(v, Target::S4, "i2_apply");

    const Section dg = covariant_derivative(DomainField::XGamma, v);
    const Section dt = covariant_derivative(DomainField::XTheta, v);
    const Section lap = rough_laplacian(v);
    const Section tang = tangential_part(v);
    const TrigPoly h = dg.component(Frame::Gamma) + dt.component(Frame::Theta);

    std::array<Section, 13> t{Section(Target::S4), Section(Target::S4), Section(Target::S4),
                              Section(Target::S4), Section(Target::S4), Section(Target::S4),
                              Section(Target::S4), Section(Target::S4), Section(Target::S4),
                              Section(Target::S4), Section(Target::S4), Section(Target::S4),
                              Section(Target::S4)};

    // I    rough bilaplacian
    t[0] = rough_laplacian(lap);
    // II   Laplacian of (tangential part - |dPhi|^2 V), |dPhi|^2 = 2
    t[1] = rough_laplacian(tang) - lap.scaled(QSqrt2(2));
    // III  2 <d tau(Phi), dPhi> V = -8 V
    t[2] = v.scaled(QSqrt2(-8));
    // IV   |tau(Phi)|^2 V = 4 V
    t[3] = v.scaled(QSqrt2(4));
    // V    -2 trace <V, d tau(Phi) .> dPhi . = 4 (tangential part)
    t[4] = tang.scaled(QSqrt2(4));
    // VI   -2 trace <tau(Phi), dV .> dPhi . = 4[<nabla_g V, V_eta> V_gamma + <nabla_t V, V_eta> V_theta]
    t[5].set_component(Frame::Gamma, dg.component(Frame::Eta).scaled(QSqrt2(4)));
    t[5].set_component(Frame::Theta, dt.component(Frame::Eta).scaled(QSqrt2(4)));
    // VII  -<tau(Phi), V> tau(Phi) = -4 <V, V_eta> V_eta
    t[6].set_component(Frame::Eta, v.component(Frame::Eta).scaled(QSqrt2(-4)));
    // VIII trace <dPhi ., lap V> dPhi .
    t[7] = tangential_part(lap);
    // IX   iterated tangential projection
    t[8] = tang;
    // X    -2 |dPhi|^2 (tangential part)
    t[9] = tang.scaled(QSqrt2(-4));
    // XI   2 <dV, dPhi> tau(Phi) = -4 h V_eta
    t[10].set_component(Frame::Eta, h.scaled(QSqrt2(-4)));
    // XII  -|dPhi|^2 lap V
    t[11] = lap.scaled(QSqrt2(-2));
    // XIII |dPhi|^4 V
    t[12] = v.scaled(QSqrt2(4));

    return t;
}

Section i2_apply(const Section& v) {
    auto terms = i2_terms(v);
    Section r(Target::S4);
    for (const Section& t : terms) r = r + t;
    return r;
}

Section i2_closed_form(const TrigPoly& f, Frame e) {
    const QSqrt2 lam = require_eigenvalue(f);
    const TrigPoly fg = f.d_gamma(), ft = f.d_theta();
    const TrigPoly fgg = fg.d_gamma(), ftt = ft.d_theta(), fgt = fg.d_theta();

    Section r(Target::S4);
    const QSqrt2 diag_tang = lam * (QSqrt2(4) + lam);
    const QSqrt2 c_nu = QSqrt2(8) * kSqrt2 * (QSqrt2(2) + lam);
    const QSqrt2 c_eta = QSqrt2(8) * lam;
    const QSqrt2 c16s2 = QSqrt2(16) * kSqrt2;

    switch (e) {
    case Frame::Gamma:
        r.set_component(Frame::Gamma, f.scaled(diag_tang) - fgg.scaled(QSqrt2(48)));
        r.set_component(Frame::Theta, fgt.scaled(QSqrt2(16)));
        r.set_component(Frame::Nu, fg.scaled(c_nu));
        r.set_component(Frame::Eta, fg.scaled(c_eta));
        break;
    case Frame::Theta:
        r.set_component(Frame::Gamma, fgt.scaled(QSqrt2(16)));
        r.set_component(Frame::Theta, f.scaled(diag_tang) - ftt.scaled(QSqrt2(48)));
        r.set_component(Frame::Nu, ft.scaled(-c_nu));
        r.set_component(Frame::Eta, ft.scaled(c_eta));
        break;
    case Frame::Nu:
        r.set_component(Frame::Gamma, fg.scaled(-c_nu));
        r.set_component(Frame::Theta, ft.scaled(c_nu));
        r.set_component(Frame::Nu, f.scaled(lam * (QSqrt2(12) + lam)));
        r.set_component(Frame::Eta, ftt.scaled(c16s2) - fgg.scaled(c16s2));
        break;
    case Frame::Eta:
        r.set_component(Frame::Gamma, fg.scaled(-c_eta));
        r.set_component(Frame::Theta, ft.scaled(-c_eta));
        r.set_component(Frame::Nu, ftt.scaled(c16s2) - fgg.scaled(c16s2));
        r.set_component(Frame::Eta, f.scaled(lam * lam + QSqrt2(4) * lam - QSqrt2(16)));
        break;
    }
    return r;
}

Section jacobi_apply(const Section& v) {
    require_target(v, Target::S3, "jacobi_apply");
    return rough_laplacian(v) - v.scaled(QSqrt2(4)) + tangential_part(v).scaled(QSqrt2(2));
}

Section jacobi_closed_form(const TrigPoly& f, Frame e) {
    const QSqrt2 lam = require_eigenvalue(f);
    const QSqrt2 c = QSqrt2(4) * kSqrt2;
    Section r(Target::S3);
    switch (e) {
    case Frame::Gamma:
        r.set_component(Frame::Gamma, f.scaled(lam));
        r.set_component(Frame::Nu, f.d_gamma().scaled(c));
        break;
    case Frame::Theta:
        r.set_component(Frame::Theta, f.scaled(lam));
        r.set_component(Frame::Nu, f.d_theta().scaled(-c));
        break;
    case Frame::Nu:
        r.set_component(Frame::Gamma, f.d_gamma().scaled(-c));
        r.set_component(Frame::Theta, f.d_theta().scaled(c));
        r.set_component(Frame::Nu, f.scaled(lam));
        break;
    case Frame::Eta:
        throw std::invalid_argument("V_eta is not a frame field of the S3 bundle");
    }
    return r;
}

Section jp_apply(double p, const Section& v) {
    require_target(v, Target::S3, "jp_apply");
    if (p < 1.0) throw std::invalid_argument("jp_apply requires p >= 1");
    const double rounded = std::round(p);
    if (std::abs(p - rounded) > 1e-12)
        throw std::invalid_argument(
            "jp_apply is exact-only: non-integer p must use the floating-point block path");
    const long long pi = static_cast<long long>(rounded);
    const QSqrt2 c1 = QSqrt2::half_power_of_two(pi - 4) * QSqrt2(pi - 2);
    const QSqrt2 c2 = QSqrt2::half_power_of_two(pi - 2);
    return dstar_coupling(v).scaled(c1) + jacobi_apply(v).scaled(c2);
}

Section jp_closed_form(long long p, const TrigPoly& f, Frame e) {
    const QSqrt2 c1 = QSqrt2::half_power_of_two(p - 4) * QSqrt2(p - 2);
    const QSqrt2 c2 = QSqrt2::half_power_of_two(p - 2);
    Section jterm = jacobi_closed_form(f, e).scaled(c2);
    Section d(Target::S3);
    if (e == Frame::Gamma) {
        d.set_component(Frame::Gamma, f.d_gamma().d_gamma().scaled(QSqrt2(-4) * c1));
        d.set_component(Frame::Theta, f.d_gamma().d_theta().scaled(QSqrt2(-4) * c1));
    } else if (e == Frame::Theta) {
        d.set_component(Frame::Gamma, f.d_gamma().d_theta().scaled(QSqrt2(-4) * c1));
        d.set_component(Frame::Theta, f.d_theta().d_theta().scaled(QSqrt2(-4) * c1));
    }
    return jterm + d;
}

Section i2_projected_apply(const Section& v) {
    require_target(v, Target::S3, "i2_projected_apply");
    Section jv = jacobi_apply(v);
    return jacobi_apply(jv) + jv.scaled(QSqrt2(4)) + dstar_coupling(v).scaled(QSqrt2(4));
}

QSqrt2 divergence_pairing(const Section& v) {
    require_target(v, Target::S3, "divergence_pairing");
    TrigPoly h = pullback_pairing(v);
    QSqrt2 left = l2_inner(dstar_coupling(v), v);
    QSqrt2 right = TrigPoly::l2_pair(h, h);
    if (left != right)
        throw InternalInconsistencyError(
            "divergence identity failed: (d* term, V) != integral of <dV,dphi>^2");
    return left;
}

} // namespace torusspec
