#include "torusspec/oracle.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace torusspec::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

void spectral_derivative_line(std::vector<std::complex<double>>& line, int order) {
    const int n = static_cast<int>(line.size());
    std::vector<std::complex<double>> freq(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        std::complex<double> acc{0, 0};
        for (int j = 0; j < n; ++j)
            acc += line[static_cast<size_t>(j)] *
                   std::polar(1.0, -2.0 * kPi * j * k / n);
        freq[static_cast<size_t>(k)] = acc;
    }
    for (int k = 0; k < n; ++k) {
        int kk = (k <= n / 2) ? k : k - n;
        std::complex<double> mult;
        if (k == n / 2 && order % 2 == 1)
            mult = 0.0; // Nyquist mode has no consistent odd derivative
        else
            mult = std::pow(std::complex<double>(0.0, kk), order);
        freq[static_cast<size_t>(k)] *= mult;
    }
    for (int j = 0; j < n; ++j) {
        std::complex<double> acc{0, 0};
        for (int k = 0; k < n; ++k)
            acc += freq[static_cast<size_t>(k)] *
                   std::polar(1.0, 2.0 * kPi * j * k / n);
        line[static_cast<size_t>(j)] = acc / static_cast<double>(n);
    }
}

// order-th angle derivative along axis (0 = gamma, 1 = theta) per component
template <size_t D>
SampledField<D> derivative(const SampledField<D>& f, int axis, int order) {
    SampledField<D> out;
    out.n = f.n;
    out.v.assign(f.v.size(), {});
    const int n = f.n;
    std::vector<std::complex<double>> line(static_cast<size_t>(n));
    for (size_t c = 0; c < D; ++c) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                size_t idx = axis == 0 ? static_cast<size_t>(b) * n + a
                                       : static_cast<size_t>(a) * n + b;
                line[static_cast<size_t>(b)] = f.v[idx][c];
            }
            spectral_derivative_line(line, order);
            for (int b = 0; b < n; ++b) {
                size_t idx = axis == 0 ? static_cast<size_t>(b) * n + a
                                       : static_cast<size_t>(a) * n + b;
                out.v[idx][c] = line[static_cast<size_t>(b)].real();
            }
        }
    }
    return out;
}

template <size_t D> double dot(const std::array<double, D>& x, const std::array<double, D>& y) {
    double s = 0;
    for (size_t i = 0; i < D; ++i) s += x[i] * y[i];
    return s;
}

std::array<double, 5> sphere_exp(const std::array<double, 5>& x, const std::array<double, 5>& u) {
    double nu = std::sqrt(dot(u, u));
    double c = std::cos(nu);
    double sc; // sin|u| / |u|
    if (nu < 1e-6) {
        double q = nu * nu;
        sc = 1.0 - q / 6.0 + q * q / 120.0;
    } else {
        sc = std::sin(nu) / nu;
    }
    std::array<double, 5> out;
    for (size_t i = 0; i < 5; ++i) out[i] = c * x[i] + sc * u[i];
    return out;
}

// two-level Richardson extrapolation of an O(h^2) central difference
struct Extrapolated {
    double value;
    std::string warning;
};

template <typename F> Extrapolated richardson(F&& diff, double h) {
    double d0 = diff(h), d1 = diff(h / 2), d2 = diff(h / 4);
    double r1 = (4 * d1 - d0) / 3;
    double r2 = (4 * d2 - d1) / 3;
    Extrapolated e{(16 * r2 - r1) / 15, {}};
    double gain0 = std::abs(d1 - d0), gain1 = std::abs(d2 - d1);
    if (gain1 > 1.5 * gain0 + 1e-12)
        e.warning = "halving the step stopped improving the difference quotient; the step is "
                    "likely roundoff-dominated, try a larger one";
    return e;
}

std::array<double, 5> frame_vector(Frame e, double g, double t) {
    const double is2 = 1.0 / std::sqrt(2.0);
    switch (e) {
    case Frame::Gamma: return {-std::sin(g), std::cos(g), 0, 0, 0};
    case Frame::Theta: return {0, 0, -std::sin(t), std::cos(t), 0};
    case Frame::Nu:
        return {is2 * std::cos(g), is2 * std::sin(g), -is2 * std::cos(t), -is2 * std::sin(t), 0};
    case Frame::Eta:
        return {0.5 * std::cos(g), 0.5 * std::sin(g), 0.5 * std::cos(t), 0.5 * std::sin(t), -is2};
    }
    return {};
}

} // namespace

void validate_grid_size(int n) {
    if (n < 8 || (n & (n - 1)) != 0)
        throw std::invalid_argument("grid size must be a power of two, at least 8");
}

SampledMap sample_immersion(int n) { return sample_nu_variation(n, 0.0); }

SampledMap sample_nu_variation(int n, double t) {
    validate_grid_size(n);
    SampledMap m;
    m.n = n;
    m.v.resize(static_cast<size_t>(n) * n);
    const double is2 = 1.0 / std::sqrt(2.0);
    const double scale = 1.0 / std::sqrt(1.0 + t * t);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double g = 2.0 * kPi * a / n, th = 2.0 * kPi * b / n;
            std::array<double, 5> phi{0.5 * std::cos(g), 0.5 * std::sin(g), 0.5 * std::cos(th),
                                      0.5 * std::sin(th), is2};
            std::array<double, 5> nu = frame_vector(Frame::Nu, g, th);
            auto& out = m.v[static_cast<size_t>(a) * n + b];
            for (size_t i = 0; i < 5; ++i) out[i] = scale * (phi[i] + t * nu[i]);
        }
    return m;
}

SampledField<5> sample_section(const Section& s, int n) {
    validate_grid_size(n);
    SampledField<5> f;
    f.n = n;
    f.v.assign(static_cast<size_t>(n) * n, {});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double g = 2.0 * kPi * a / n, th = 2.0 * kPi * b / n;
            auto& out = f.v[static_cast<size_t>(a) * n + b];
            for (Frame e : frames_of(s.target())) {
                double c = s.component(e).evaluate(g, th);
                if (c == 0.0) continue;
                auto fe = frame_vector(e, g, th);
                for (size_t i = 0; i < 5; ++i) out[i] += c * fe[i];
            }
        }
    return f;
}

double bienergy_radii(const SampledMap& map, double r1, double r2) {
    validate_grid_size(map.n);
    const int n = map.n;
    const double w1 = 1.0 / (r1 * r1), w2 = 1.0 / (r2 * r2);

    SampledField<5> dg = derivative(map, 0, 1);
    SampledField<5> dt = derivative(map, 1, 1);
    SampledField<5> dgg = derivative(map, 0, 2);
    SampledField<5> dtt = derivative(map, 1, 2);

    double acc = 0;
    for (size_t i = 0; i < map.v.size(); ++i) {
        double e = w1 * dot(dg.v[i], dg.v[i]) + w2 * dot(dt.v[i], dt.v[i]);
        std::array<double, 5> tau;
        for (size_t c = 0; c < 5; ++c)
            tau[c] = w1 * dgg.v[i][c] + w2 * dtt.v[i][c] + e * map.v[i][c];
        acc += dot(tau, tau);
    }
    double cell = (2.0 * kPi / n) * (2.0 * kPi / n) * r1 * r2;
    return 0.5 * acc * cell;
}

double bienergy(const SampledMap& map) {
    for (const auto& s : map.v)
        if (std::abs(dot(s, s) - 1.0) > 1e-12)
            throw std::invalid_argument("sampled map leaves the unit sphere");
    return bienergy_radii(map, 0.5, 0.5);
}

DerivativeResult variation_derivative(int order, int grid_n, double step) {
    if (order < 1 || order > 4) throw std::invalid_argument("derivative order must be 1..4");
    validate_grid_size(grid_n);
    auto e2 = [grid_n](double t) { return bienergy(sample_nu_variation(grid_n, t)); };
    const double e0 = e2(0.0);
    auto diff = [&](double h) {
        switch (order) {
        case 1: return (e2(h) - e2(-h)) / (2 * h);
        case 2: return (e2(h) - 2 * e0 + e2(-h)) / (h * h);
        case 3: return (e2(2 * h) - 2 * e2(h) + 2 * e2(-h) - e2(-2 * h)) / (2 * h * h * h);
        default:
            return (e2(2 * h) - 4 * e2(h) + 6 * e0 - 4 * e2(-h) + e2(-2 * h)) / (h * h * h * h);
        }
    };
    auto [value, warning] = richardson(diff, step);
    return {value, warning};
}

Rat variation_derivative_closed_form(int order) {
    if (order < 0 || order > 4) throw std::invalid_argument("derivative order must be 0..4");
    // Taylor coefficients of (2 + 4 t^2) / (1 + t^2)^2 up to t^4
    const std::array<Rat, 5> num{Rat(2), Rat(0), Rat(4), Rat(0), Rat(0)};
    const std::array<Rat, 5> den{Rat(1), Rat(0), Rat(2), Rat(0), Rat(1)};
    std::array<Rat, 5> c;
    for (int k = 0; k <= 4; ++k) {
        Rat acc = num[static_cast<size_t>(k)];
        for (int j = 0; j < k; ++j)
            acc -= c[static_cast<size_t>(j)] * den[static_cast<size_t>(k - j)];
        c[static_cast<size_t>(k)] = acc;
    }
    Rat fact(1);
    for (int i = 2; i <= order; ++i) fact *= i;
    return fact * c[static_cast<size_t>(order)];
}

double tau_profile_max_error(int grid_n, const std::vector<double>& ts) {
    validate_grid_size(grid_n);
    double worst = 0;
    for (double t : ts) {
        SampledMap m = sample_nu_variation(grid_n, t);
        SampledField<5> dgg = derivative(m, 0, 2);
        SampledField<5> dtt = derivative(m, 1, 2);
        SampledField<5> dg = derivative(m, 0, 1);
        SampledField<5> dt = derivative(m, 1, 1);
        const double expect = (4 + 8 * t * t) / ((1 + t * t) * (1 + t * t));
        for (size_t i = 0; i < m.v.size(); ++i) {
            double e = 4 * (dot(dg.v[i], dg.v[i]) + dot(dt.v[i], dt.v[i]));
            std::array<double, 5> tau;
            for (size_t c = 0; c < 5; ++c)
                tau[c] = 4 * (dgg.v[i][c] + dtt.v[i][c]) + e * m.v[i][c];
            worst = std::max(worst, std::abs(dot(tau, tau) - expect));
        }
    }
    return worst;
}

DerivativeResult fd_hessian(const Section& v, const Section& w, int grid_n, double step) {
    validate_grid_size(grid_n);
    SampledMap base = sample_immersion(grid_n);
    SampledField<5> vs = sample_section(v, grid_n);
    SampledField<5> ws = sample_section(w, grid_n);

    auto e2 = [&](double t, double s) {
        SampledMap m;
        m.n = grid_n;
        m.v.resize(base.v.size());
        for (size_t i = 0; i < base.v.size(); ++i) {
            std::array<double, 5> u;
            for (size_t c = 0; c < 5; ++c) u[c] = t * vs.v[i][c] + s * ws.v[i][c];
            m.v[i] = sphere_exp(base.v[i], u);
        }
        return bienergy(m);
    };
    auto diff = [&](double h) {
        return (e2(h, h) - e2(h, -h) - e2(-h, h) + e2(-h, -h)) / (4 * h * h);
    };
    auto [value, warning] = richardson(diff, step);
    return {value, warning};
}

ConformalReport conformal_rayleigh(const std::array<double, 4>& a, int grid_n) {
    validate_grid_size(grid_n);
    if (dot(a, a) == 0.0) throw std::invalid_argument("conformal direction must be nonzero");
    const int n = grid_n;

    SampledField<4> va;
    va.n = n;
    va.v.resize(static_cast<size_t>(n) * n);
    std::vector<std::array<double, 4>> phi(va.v.size()), vg(va.v.size()), vt(va.v.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double g = 2.0 * kPi * i / n, th = 2.0 * kPi * j / n;
            size_t idx = static_cast<size_t>(i) * n + j;
            phi[idx] = {0.5 * std::cos(g), 0.5 * std::sin(g), 0.5 * std::cos(th),
                        0.5 * std::sin(th)};
            vg[idx] = {-std::sin(g), std::cos(g), 0, 0};
            vt[idx] = {0, 0, -std::sin(th), std::cos(th)};
            double ap = dot(a, phi[idx]);
            for (size_t c = 0; c < 4; ++c) va.v[idx][c] = a[c] - 2 * ap * phi[idx][c];
        }

    // nabla_{X}(V_a) = 2 d(V_a)/dangle + 2 <dphi(X), V_a> phi on S^3(1/sqrt2)
    SampledField<4> dg = derivative(va, 0, 1);
    SampledField<4> dt = derivative(va, 1, 1);

    double num = 0, den = 0;
    for (size_t i = 0; i < va.v.size(); ++i) {
        double pg = dot(vg[i], va.v[i]), pt = dot(vt[i], va.v[i]);
        std::array<double, 4> cg, ct;
        for (size_t c = 0; c < 4; ++c) {
            cg[c] = 2 * dg.v[i][c] + 2 * pg * phi[i][c];
            ct[c] = 2 * dt.v[i][c] + 2 * pt * phi[i][c];
        }
        // <J V, V> = |nabla V|^2 - 4 |V|^2 + 2 (<V,V_gamma>^2 + <V,V_theta>^2) under the integral
        num += dot(cg, cg) + dot(ct, ct) - 4 * dot(va.v[i], va.v[i]) + 2 * (pg * pg + pt * pt);
        den += dot(va.v[i], va.v[i]);
    }
    double cell = (2.0 * kPi / n) * (2.0 * kPi / n) * 0.25;
    ConformalReport r;
    r.numerator = num * cell;
    r.denominator = den * cell;
    r.quotient = r.numerator / r.denominator;
    return r;
}

} // namespace torusspec::oracle
