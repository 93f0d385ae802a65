// The SO(2) x SO(2)-equivariant reduction: the two-parameter family
//
//   Phi_{eta,nu}(gamma, theta) = ((sin eta sin nu) e^{i gamma},
//                                 (sin eta cos nu) e^{i theta}, cos eta)
//
// from S^1(R1) x S^1(R2) into S^4, its reduced bienergy density
// E2hat(eta, nu), the isometric critical points, and the 2 x 2 equivariant
// Hessian at a critical point.

#ifndef TORUSSPEC_EQUIVARIANT_HPP
#define TORUSSPEC_EQUIVARIANT_HPP

#include <array>
#include <string>
#include <vector>

namespace torusspec::equivariant {

struct ReducedPoint {
    double eta = 0;
    double nu = 0;
    double r1 = 0;
    double r2 = 0;

    bool isometric(double tol = 1e-12) const;
};

// The closed-form reduced bienergy density; E2(Phi_{eta,nu}) equals
// E2hat * Vol with Vol = 4 pi^2 R1 R2.  Throws for nonpositive radii.
double reduced_bienergy(double eta, double nu, double r1, double r2);

// Full quadrature bienergy of the sampled family, for cross-checking the
// closed form (tau computed with the domain Laplacian of S^1(R1) x S^1(R2)).
double bienergy_quadrature(double eta, double nu, double r1, double r2, int grid_n = 16);

std::array<double, 2> reduced_gradient(double eta, double nu, double r1, double r2);

// Critical points of E2hat satisfying the isometric-immersion constraints
// R1 = sin eta sin nu, R2 = sin eta cos nu, searched in the open sector
// 0 < eta, nu < pi/2 (a coarse residual scan refined by Newton steps).
// May be empty.
std::vector<ReducedPoint> critical_points(double r1, double r2);

struct HessianResult {
    std::array<std::array<double, 2>, 2> h{{{0, 0}, {0, 0}}};
    bool critical = true;      // false annotates a Hessian taken off-critical
    int index = 0;             // eigenvalues below -tol
    int nullity = 0;           // eigenvalues within tol of zero
    std::string warning;
};

HessianResult reduced_hessian(const ReducedPoint& p, double zero_tol = 1e-4);

// The same matrix from the exact operator pairings
// [[ (I2 V_eta, V_eta), (I2 V_nu, V_eta)/sqrt2 ],
//  [ (I2 V_eta, V_nu)/sqrt2, (I2 V_nu, V_nu)/2 ]] / Vol(T).
std::array<std::array<double, 2>, 2> hessian_exact_identification();

} // namespace torusspec::equivariant

#endif
