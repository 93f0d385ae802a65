// Sections of the pull-back bundles along the Clifford torus.
//
// The moving frame along Phi: T -> S^4 is {V_gamma, V_theta, V_nu, V_eta}
// (orthonormal at every point); along phi: T -> S^3(1/sqrt2) the frame is
// the same list without V_eta.  A section is a tuple of TrigPoly
// coefficients in that frame.
//
// X_gamma = 2 d/dgamma and X_theta = 2 d/dtheta form the orthonormal frame
// of the domain, so directional derivatives carry a factor 2:
// X_gamma f = 2 f_gamma.

#ifndef TORUSSPEC_SECTION_HPP
#define TORUSSPEC_SECTION_HPP

#include "torusspec/trigpoly.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace torusspec {

enum class Frame : std::uint8_t { Gamma = 0, Theta = 1, Nu = 2, Eta = 3 };
enum class Target : std::uint8_t { S4, S3 };
enum class DomainField : std::uint8_t { XGamma, XTheta };

std::span<const Frame> frames_of(Target t);
const char* frame_name(Frame f);

class Section {
public:
    explicit Section(Target t) : target_(t) {}

    Target target() const { return target_; }
    static Section frame_field(Target t, Frame e); // unit section V_e

    const TrigPoly& component(Frame e) const;
    void set_component(Frame e, TrigPoly f);

    bool is_zero() const;
    friend bool operator==(const Section&, const Section&) = default;

    friend Section operator+(const Section& v, const Section& w);
    friend Section operator-(const Section& v, const Section& w);
    Section operator-() const;
    Section scaled(const QSqrt2& s) const;
    Section multiplied_by(const TrigPoly& f) const;

    std::string to_string() const;

private:
    void check_frame(Frame e) const;
    Target target_;
    std::array<TrigPoly, 4> c_;
};

// Connection table nabla^Phi_X V_e in the frame; the S3 table is the S4 one
// with every V_eta row and column removed.  Eta with target S3 throws.
Section frame_connection(DomainField x, Frame e, Target t);

// Leibniz rule: nabla_X (f V_e) = (X f) V_e + f nabla_X V_e.
Section covariant_derivative(DomainField x, const Section& v);

// Rough Laplacian -(nabla_g nabla_g + nabla_t nabla_t); the domain frame is
// parallel on the flat torus so there is no Christoffel correction.
Section rough_laplacian(const Section& v);

// (1/pi^2) * integral <V, W> dV; throws on target mismatch.
QSqrt2 l2_inner(const Section& v, const Section& w);

// Projection onto the image of dPhi: <V,V_gamma> V_gamma + <V,V_theta> V_theta.
Section tangential_part(const Section& v);

} // namespace torusspec

#endif
