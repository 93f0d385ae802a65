#include "torusspec/equivariant.hpp"

#include "torusspec/operators.hpp"
#include "torusspec/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace torusspec::equivariant {

namespace {

constexpr double kPi = std::numbers::pi;

void check_radii(double r1, double r2) {
    if (!(r1 > 0) || !(r2 > 0)) throw std::invalid_argument("radii must be positive");
}

} // namespace

bool ReducedPoint::isometric(double tol) const {
    return std::abs(std::sin(eta) * std::sin(nu) - r1) <= tol &&
           std::abs(std::sin(eta) * std::cos(nu) - r2) <= tol;
}

double reduced_bienergy(double eta, double nu, double r1, double r2) {
    check_radii(r1, r2);
    const double r12 = r1 * r1, r22 = r2 * r2;
    const double r14 = r12 * r12, r24 = r22 * r22;
    const double c = 1.0 / (32.0 * r14 * r24);
    const double s = std::sin(eta);
    const double s2 = s * s;
    return c * ((5 * r14 - 2 * r12 * r22 + 5 * r24 +
                 (3 * r14 + 2 * r12 * r22 + 3 * r24) * std::cos(2 * eta)) *
                    s2 -
                2 * (r12 - r22) * (r12 - r22) * std::cos(4 * nu) * s2 * s2 +
                2 * (r14 - r24) * std::cos(2 * nu) * std::pow(std::sin(2 * eta), 2));
}

double bienergy_quadrature(double eta, double nu, double r1, double r2, int grid_n) {
    check_radii(r1, r2);
    oracle::validate_grid_size(grid_n);
    oracle::SampledMap m;
    m.n = grid_n;
    m.v.resize(static_cast<size_t>(grid_n) * grid_n);
    const double A = std::sin(eta) * std::sin(nu);
    const double B = std::sin(eta) * std::cos(nu);
    const double C = std::cos(eta);
    for (int a = 0; a < grid_n; ++a)
        for (int b = 0; b < grid_n; ++b) {
            double g = 2.0 * kPi * a / grid_n, th = 2.0 * kPi * b / grid_n;
            m.v[static_cast<size_t>(a) * grid_n + b] = {A * std::cos(g), A * std::sin(g),
                                                        B * std::cos(th), B * std::sin(th), C};
        }
    return oracle::bienergy_radii(m, r1, r2);
}

std::array<double, 2> reduced_gradient(double eta, double nu, double r1, double r2) {
    const double h = 1e-6;
    auto f = [&](double e, double n) { return reduced_bienergy(e, n, r1, r2); };
    return {(f(eta + h, nu) - f(eta - h, nu)) / (2 * h),
            (f(eta, nu + h) - f(eta, nu - h)) / (2 * h)};
}

std::vector<ReducedPoint> critical_points(double r1, double r2) {
    check_radii(r1, r2);
    std::vector<ReducedPoint> found;

    // scale for the criticality residual
    double scale = std::max(1.0, std::abs(reduced_bienergy(kPi / 4, kPi / 4, r1, r2)));

    auto try_point = [&](double eta0, double nu0) {
        // Newton on the isometry system g = (sin e sin n - R1, sin e cos n - R2)
        double e = eta0, n = nu0;
        for (int it = 0; it < 60; ++it) {
            double g1 = std::sin(e) * std::sin(n) - r1;
            double g2 = std::sin(e) * std::cos(n) - r2;
            double j11 = std::cos(e) * std::sin(n), j12 = std::sin(e) * std::cos(n);
            double j21 = std::cos(e) * std::cos(n), j22 = -std::sin(e) * std::sin(n);
            double det = j11 * j22 - j12 * j21;
            if (std::abs(det) < 1e-14) return;
            double de = (g1 * j22 - g2 * j12) / det;
            double dn = (g2 * j11 - g1 * j21) / det;
            e -= de;
            n -= dn;
            if (std::abs(de) + std::abs(dn) < 1e-15) break;
        }
        if (!(e > 1e-9 && e < kPi / 2 - 1e-9 && n > 1e-9 && n < kPi / 2 - 1e-9)) return;
        ReducedPoint p{e, n, r1, r2};
        if (!p.isometric(1e-12)) return;
        auto grad = reduced_gradient(e, n, r1, r2);
        if (std::abs(grad[0]) > 1e-9 * scale || std::abs(grad[1]) > 1e-9 * scale) return;
        for (const auto& q : found)
            if (std::abs(q.eta - e) < 1e-8 && std::abs(q.nu - n) < 1e-8) return;
        found.push_back(p);
    };

    // dense residual scan over the open sector
    const int steps = 200;
    for (int i = 1; i < steps; ++i)
        for (int j = 1; j < steps; ++j) {
            double e = kPi / 2 * i / steps, n = kPi / 2 * j / steps;
            double g1 = std::sin(e) * std::sin(n) - r1;
            double g2 = std::sin(e) * std::cos(n) - r2;
            if (g1 * g1 + g2 * g2 > 1e-3) continue;
            auto grad = reduced_gradient(e, n, r1, r2);
            if (std::abs(grad[0]) > 0.2 * scale || std::abs(grad[1]) > 0.2 * scale) continue;
            try_point(e, n);
        }
    return found;
}

HessianResult reduced_hessian(const ReducedPoint& p, double zero_tol) {
    HessianResult res;
    auto grad = reduced_gradient(p.eta, p.nu, p.r1, p.r2);
    double scale = std::max(1.0, std::abs(reduced_bienergy(p.eta, p.nu, p.r1, p.r2)));
    if (std::abs(grad[0]) > 1e-6 * scale || std::abs(grad[1]) > 1e-6 * scale) {
        res.critical = false;
        res.warning = "Hessian taken at a non-critical point";
    }

    auto f = [&](double e, double n) { return reduced_bienergy(e, n, p.r1, p.r2); };
    const double f0 = f(p.eta, p.nu);
    auto d2e = [&](double h) { return (f(p.eta + h, p.nu) - 2 * f0 + f(p.eta - h, p.nu)) / (h * h); };
    auto d2n = [&](double h) { return (f(p.eta, p.nu + h) - 2 * f0 + f(p.eta, p.nu - h)) / (h * h); };
    auto dmix = [&](double h) {
        return (f(p.eta + h, p.nu + h) - f(p.eta + h, p.nu - h) - f(p.eta - h, p.nu + h) +
                f(p.eta - h, p.nu - h)) /
               (4 * h * h);
    };
    auto rich = [](auto&& d, double h) {
        double d0 = d(h), d1 = d(h / 2), d2v = d(h / 4);
        double r1 = (4 * d1 - d0) / 3, r2 = (4 * d2v - d1) / 3;
        return (16 * r2 - r1) / 15;
    };
    const double h = 1e-2;
    res.h[0][0] = rich(d2e, h);
    res.h[1][1] = rich(d2n, h);
    res.h[0][1] = res.h[1][0] = rich(dmix, h);

    // eigenvalues of the symmetric 2x2
    double tr = res.h[0][0] + res.h[1][1];
    double det = res.h[0][0] * res.h[1][1] - res.h[0][1] * res.h[1][0];
    double disc = std::sqrt(std::max(0.0, tr * tr / 4 - det));
    for (double ev : {tr / 2 - disc, tr / 2 + disc}) {
        if (ev < -zero_tol) ++res.index;
        else if (ev <= zero_tol) ++res.nullity;
    }
    return res;
}

std::array<std::array<double, 2>, 2> hessian_exact_identification() {
    using torusspec::Frame;
    using torusspec::Section;
    using torusspec::Target;
    Section veta = Section::frame_field(Target::S4, Frame::Eta);
    Section vnu = Section::frame_field(Target::S4, Frame::Nu);
    // l2_inner is already in units of pi^2 = Vol(T), so no further division
    double hee = l2_inner(i2_apply(veta), veta).to_double();
    double hen = l2_inner(i2_apply(vnu), veta).to_double() / std::sqrt(2.0);
    double hne = l2_inner(i2_apply(veta), vnu).to_double() / std::sqrt(2.0);
    double hnn = l2_inner(i2_apply(vnu), vnu).to_double() / 2.0;
    return {{{hee, hen}, {hne, hnn}}};
}

} // namespace torusspec::equivariant
