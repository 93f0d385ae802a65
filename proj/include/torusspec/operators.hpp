// Second-variation operators as exact maps on sections.
//
//  * i2_apply      : the order-4 bienergy Hessian operator along
//                    Phi = i . phi : T -> S^4, assembled from its 13-term
//                    general formula with the map data tau(Phi) = -2 V_eta,
//                    |dPhi|^2 = 2.
//  * i2_closed_form: the eigenfunction closed forms, an independent path
//                    used for cross-validation.
//  * jacobi_apply  : J = rough Laplacian - 4 + 2 * tangential projection on
//                    the S3 bundle (harmonic-map Jacobi operator of phi).
//  * jp_apply      : p-energy Jacobi operator
//                    J_p = (p-2) 2^{(p-4)/2} d*(<dV,dphi> dphi)
//                        + 2^{(p-2)/2} J; exact for integer p >= 1.
//  * i2_projected_apply : pi(I2) = J^2 + 4 J + 4 d*(<dV,dphi> dphi) on the
//                    S3 bundle.

#ifndef TORUSSPEC_OPERATORS_HPP
#define TORUSSPEC_OPERATORS_HPP

#include "torusspec/section.hpp"

#include <array>

namespace torusspec {

// tau(Phi) = -2 V_eta as a section of the S4 bundle.
Section tension_field_of_composition();

// h = <dV, dphi> = <nabla_g V, V_gamma> + <nabla_t V, V_theta>.
TrigPoly pullback_pairing(const Section& v);

// d*(h dphi) = -(X_gamma h) V_gamma - (X_theta h) V_theta on the S3 bundle
// (tau(phi) = 0 since phi is minimal).
Section dstar_coupling(const Section& v);

std::array<Section, 13> i2_terms(const Section& v); // S4 only
Section i2_apply(const Section& v);
Section i2_closed_form(const TrigPoly& f, Frame e); // throws if f not a Laplace eigenfunction

Section jacobi_apply(const Section& v); // S3 only
Section jacobi_closed_form(const TrigPoly& f, Frame e);

Section jp_apply(double p, const Section& v); // throws for non-integer p (float path is block-level)
Section jp_closed_form(long long p, const TrigPoly& f, Frame e);

Section i2_projected_apply(const Section& v);

// Evaluates (d*(<dV,dphi> dphi), V) two independent ways (pairing against V,
// and the integral of h^2) and asserts exact equality; returns the value in
// units of pi^2.
QSqrt2 divergence_pairing(const Section& v);

} // namespace torusspec

#endif
