#include "torusspec/section.hpp"

#include <stdexcept>

namespace torusspec {

namespace {
constexpr std::array<Frame, 4> kS4Frames{Frame::Gamma, Frame::Theta, Frame::Nu, Frame::Eta};
constexpr std::array<Frame, 3> kS3Frames{Frame::Gamma, Frame::Theta, Frame::Nu};

QSqrt2 sqrt2() { return QSqrt2::sqrt2(); }
} // namespace

std::span<const Frame> frames_of(Target t) {
    if (t == Target::S4) return kS4Frames;
    return kS3Frames;
}

const char* frame_name(Frame f) {
    switch (f) {
    case Frame::Gamma: return "gamma";
    case Frame::Theta: return "theta";
    case Frame::Nu: return "nu";
    case Frame::Eta: return "eta";
    }
    return "?";
}

void Section::check_frame(Frame e) const {
    if (target_ == Target::S3 && e == Frame::Eta)
        throw std::invalid_argument("V_eta is not a frame field of the S3 bundle");
}

Section Section::frame_field(Target t, Frame e) {
    Section s(t);
    s.set_component(e, TrigPoly::constant(QSqrt2(1)));
    return s;
}

const TrigPoly& Section::component(Frame e) const {
    check_frame(e);
    return c_[static_cast<size_t>(e)];
}

void Section::set_component(Frame e, TrigPoly f) {
    check_frame(e);
    c_[static_cast<size_t>(e)] = std::move(f);
}

bool Section::is_zero() const {
    for (Frame e : frames_of(target_))
        if (!c_[static_cast<size_t>(e)].is_zero()) return false;
    return true;
}

Section operator+(const Section& v, const Section& w) {
    if (v.target_ != w.target_) throw std::invalid_argument("section target mismatch");
    Section r(v.target_);
    for (Frame e : frames_of(v.target_))
        r.set_component(e, v.component(e) + w.component(e));
    return r;
}

Section operator-(const Section& v, const Section& w) {
    if (v.target_ != w.target_) throw std::invalid_argument("section target mismatch");
    Section r(v.target_);
    for (Frame e : frames_of(v.target_))
        r.set_component(e, v.component(e) - w.component(e));
    return r;
}

Section Section::operator-() const {
    Section r(target_);
    for (Frame e : frames_of(target_)) r.set_component(e, -component(e));
    return r;
}

Section Section::scaled(const QSqrt2& s) const {
    Section r(target_);
    for (Frame e : frames_of(target_)) r.set_component(e, component(e).scaled(s));
    return r;
}

Section Section::multiplied_by(const TrigPoly& f) const {
    Section r(target_);
    for (Frame e : frames_of(target_)) r.set_component(e, component(e) * f);
    return r;
}

std::string Section::to_string() const {
    std::string s;
    for (Frame e : frames_of(target_)) {
        if (component(e).is_zero()) continue;
        if (!s.empty()) s += "  +  ";
        s += "[" + component(e).to_string() + "] V_" + frame_name(e);
    }
    return s.empty() ? "0" : s;
}

Section frame_connection(DomainField x, Frame e, Target t) {
    Section r(t);
    const bool s4 = (t == Target::S4);
    if (!s4 && e == Frame::Eta)
        throw std::invalid_argument("V_eta is not a frame field of the S3 bundle");
    auto set = [&r](Frame f, QSqrt2 c) { r.set_component(f, TrigPoly::constant(std::move(c))); };
    if (x == DomainField::XGamma) {
        switch (e) {
        case Frame::Gamma:
            set(Frame::Nu, -sqrt2());
            if (s4) set(Frame::Eta, QSqrt2(-1));
            break;
        case Frame::Theta: break;
        case Frame::Nu: set(Frame::Gamma, sqrt2()); break;
        case Frame::Eta: set(Frame::Gamma, QSqrt2(1)); break;
        }
    } else {
        switch (e) {
        case Frame::Gamma: break;
        case Frame::Theta:
            set(Frame::Nu, sqrt2());
            if (s4) set(Frame::Eta, QSqrt2(-1));
            break;
        case Frame::Nu: set(Frame::Theta, -sqrt2()); break;
        case Frame::Eta: set(Frame::Theta, QSqrt2(1)); break;
        }
    }
    return r;
}

Section covariant_derivative(DomainField x, const Section& v) {
    Section r(v.target());
    for (Frame e : frames_of(v.target())) {
        const TrigPoly& f = v.component(e);
        if (f.is_zero()) continue;
        // X f term (X_gamma f = 2 f_gamma, X_theta f = 2 f_theta)
        TrigPoly xf = (x == DomainField::XGamma ? f.d_gamma() : f.d_theta()).scaled(QSqrt2(2));
        r.set_component(e, r.component(e) + xf);
        // f * nabla_X V_e term
        Section conn = frame_connection(x, e, v.target());
        r = r + conn.multiplied_by(f);
    }
    return r;
}

Section rough_laplacian(const Section& v) {
    Section gg = covariant_derivative(DomainField::XGamma,
                                      covariant_derivative(DomainField::XGamma, v));
    Section tt = covariant_derivative(DomainField::XTheta,
                                      covariant_derivative(DomainField::XTheta, v));
    return -(gg + tt);
}

QSqrt2 l2_inner(const Section& v, const Section& w) {
    if (v.target() != w.target()) throw std::invalid_argument("section target mismatch");
    QSqrt2 acc;
    for (Frame e : frames_of(v.target()))
        acc += TrigPoly::l2_pair(v.component(e), w.component(e));
    return acc;
}

Section tangential_part(const Section& v) {
    Section r(v.target());
    r.set_component(Frame::Gamma, v.component(Frame::Gamma));
    r.set_component(Frame::Theta, v.component(Frame::Theta));
    return r;
}

} // namespace torusspec
