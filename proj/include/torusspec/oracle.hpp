// Floating-point quadrature oracle, independent of the exact pipeline.
//
// Maps are sampled on a uniform N x N angle grid; differentiation in the
// angles is spectral (exact to roundoff for band-limited data), while
// differentiation in a variation parameter is central finite differences
// with two levels of Richardson extrapolation.

#ifndef TORUSSPEC_ORACLE_HPP
#define TORUSSPEC_ORACLE_HPP

#include "torusspec/rational.hpp"
#include "torusspec/section.hpp"

#include <array>
#include <string>
#include <vector>

namespace torusspec::oracle {

template <size_t D> struct SampledField {
    int n = 0;
    std::vector<std::array<double, D>> v; // row-major: index gamma * n + theta
};

using SampledMap = SampledField<5>; // T -> S^4 in R^5, unit samples

void validate_grid_size(int n);

SampledMap sample_immersion(int n);
// Phi_t = (Phi + t V_nu) / sqrt(1 + t^2)
SampledMap sample_nu_variation(int n, double t);
// ambient samples of a section along Phi (S3 sections embed with 5th comp 0)
SampledField<5> sample_section(const Section& s, int n);

// E2 = 1/2 int |tau|^2 dV on T = S^1(1/2) x S^1(1/2); throws when samples
// are off the unit sphere by more than 1e-12.
double bienergy(const SampledMap& map);
// same with general domain radii (metric r1^2 dgamma^2 + r2^2 dtheta^2)
double bienergy_radii(const SampledMap& map, double r1, double r2);

struct DerivativeResult {
    double value = 0;
    std::string warning; // set when halving the step stopped helping
};

// d^order/dt^order E2(Phi_t) at t = 0, order in 1..4.
DerivativeResult variation_derivative(int order, int grid_n = 16, double step = 1e-2);
// the same derivative from the closed form (2 + 4 t^2) / (1 + t^2)^2, as an
// exact rational in units of pi^2
Rat variation_derivative_closed_form(int order);
// max over the grid and over the given t values of
// | |tau(Phi_t)|^2 - (4 + 8 t^2)/(1 + t^2)^2 |
double tau_profile_max_error(int grid_n, const std::vector<double>& ts);

// d^2/dt ds E2(exp_Phi(t V + s W)) at (0,0).
DerivativeResult fd_hessian(const Section& v, const Section& w, int grid_n = 32,
                            double step = 1e-2);

struct ConformalReport {
    double numerator = 0;   // (J(V_a), V_a)
    double denominator = 0; // (V_a, V_a)
    double quotient = 0;
};

// Rayleigh data of the conformal field V_a = a - 2 <a, phi> phi along the
// minimal Clifford torus in S^3(1/sqrt2), all by quadrature.
ConformalReport conformal_rayleigh(const std::array<double, 4>& a, int grid_n = 16);

} // namespace torusspec::oracle

#endif
