#include "torusspec/trigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace torusspec {

namespace {

struct Factor1D {
    Rat coeff; // +-1/2 etc.
    bool is_cos;
    int freq; // >= 0
};

void emit(std::vector<Factor1D>& out, Rat c, bool is_cos, int f) {
    if (f < 0) {
        f = -f;
        if (!is_cos) c = -c; // sin is odd, cos is even
    }
    if (!is_cos && f == 0) return; // sin(0) = 0
    out.push_back({std::move(c), is_cos, f});
}

// Product of two one-variable factors via product-to-sum identities.
std::vector<Factor1D> mul_1d(bool cos_a, int a, bool cos_b, int b) {
    std::vector<Factor1D> out;
    const Rat half(1, 2);
    if (cos_a && cos_b) { // cos a cos b = 1/2 cos(a-b) + 1/2 cos(a+b)
        emit(out, half, true, a - b);
        emit(out, half, true, a + b);
    } else if (!cos_a && !cos_b) { // sin a sin b = 1/2 cos(a-b) - 1/2 cos(a+b)
        emit(out, half, true, a - b);
        emit(out, -half, true, a + b);
    } else if (!cos_a && cos_b) { // sin a cos b = 1/2 sin(a-b) + 1/2 sin(a+b)
        emit(out, half, false, a - b);
        emit(out, half, false, a + b);
    } else { // cos a sin b = 1/2 sin(a+b) - 1/2 sin(a-b)
        emit(out, half, false, a + b);
        emit(out, -half, false, a - b);
    }
    return out;
}

} // namespace

TrigPoly::Terms::const_iterator TrigPoly::find(const TrigTerm& t) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t,
                               [](const auto& entry, const TrigTerm& key) { return entry.first < key; });
    if (it != terms_.end() && it->first == t) return it;
    return terms_.end();
}

void TrigPoly::add_term(TrigKind kind, int gfreq, int tfreq, const QSqrt2& coeff) {
    if (gfreq < 0 || tfreq < 0) throw std::invalid_argument("negative trig frequency");
    if (coeff.is_zero()) return;
    // identically-zero basis functions
    if (!gamma_factor_is_cos(kind) && gfreq == 0) return;
    if (!theta_factor_is_cos(kind) && tfreq == 0) return;
    TrigTerm key{kind, gfreq, tfreq};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const auto& entry, const TrigTerm& k) { return entry.first < k; });
    if (it == terms_.end() || !(it->first == key)) {
        terms_.insert(it, {key, coeff});
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TrigPoly TrigPoly::constant(QSqrt2 c) {
    TrigPoly f;
    f.add_term(TrigKind::CC, 0, 0, c);
    return f;
}

TrigPoly TrigPoly::term(TrigKind kind, int gfreq, int tfreq, QSqrt2 coeff) {
    TrigPoly f;
    f.add_term(kind, gfreq, tfreq, coeff);
    return f;
}

QSqrt2 TrigPoly::coefficient(const TrigTerm& t) const {
    auto it = find(t);
    return it == terms_.end() ? QSqrt2() : it->second;
}

TrigPoly operator+(const TrigPoly& f, const TrigPoly& g) {
    TrigPoly r = f;
    for (const auto& [t, c] : g.terms_) r.add_term(t.kind, t.gfreq, t.tfreq, c);
    return r;
}

TrigPoly operator-(const TrigPoly& f, const TrigPoly& g) {
    TrigPoly r = f;
    for (const auto& [t, c] : g.terms_) r.add_term(t.kind, t.gfreq, t.tfreq, -c);
    return r;
}

TrigPoly TrigPoly::operator-() const {
    TrigPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& [t, c] : terms_) r.terms_.emplace_back(t, -c);
    return r;
}

TrigPoly TrigPoly::scaled(const QSqrt2& s) const {
    TrigPoly r;
    if (s.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [t, c] : terms_) r.terms_.emplace_back(t, c * s);
    return r;
}

TrigPoly operator*(const TrigPoly& f, const TrigPoly& g) {
    TrigPoly r;
    for (const auto& [t1, c1] : f.terms_)
        for (const auto& [t2, c2] : g.terms_) {
            QSqrt2 c12 = c1 * c2;
            auto gl = mul_1d(gamma_factor_is_cos(t1.kind), t1.gfreq,
                             gamma_factor_is_cos(t2.kind), t2.gfreq);
            auto tl = mul_1d(theta_factor_is_cos(t1.kind), t1.tfreq,
                             theta_factor_is_cos(t2.kind), t2.tfreq);
            for (const auto& gf : gl)
                for (const auto& tf : tl)
                    r.add_term(make_kind(gf.is_cos, tf.is_cos), gf.freq, tf.freq,
                               c12 * QSqrt2(Rat(gf.coeff * tf.coeff)));
        }
    return r;
}

TrigPoly TrigPoly::d_gamma() const {
    TrigPoly r;
    for (const auto& [t, c] : terms_) {
        if (t.gfreq == 0) continue;
        bool gcos = gamma_factor_is_cos(t.kind);
        // d/dgamma cos(j g) = -j sin(j g); d/dgamma sin(j g) = j cos(j g)
        QSqrt2 k = c * QSqrt2(static_cast<long long>(gcos ? -t.gfreq : t.gfreq));
        r.add_term(make_kind(!gcos, theta_factor_is_cos(t.kind)), t.gfreq, t.tfreq, k);
    }
    return r;
}

TrigPoly TrigPoly::d_theta() const {
    TrigPoly r;
    for (const auto& [t, c] : terms_) {
        if (t.tfreq == 0) continue;
        bool tcos = theta_factor_is_cos(t.kind);
        QSqrt2 k = c * QSqrt2(static_cast<long long>(tcos ? -t.tfreq : t.tfreq));
        r.add_term(make_kind(gamma_factor_is_cos(t.kind), !tcos), t.gfreq, t.tfreq, k);
    }
    return r;
}

TrigPoly TrigPoly::laplace() const {
    TrigPoly r;
    for (const auto& [t, c] : terms_) {
        long long lam = 4LL * (static_cast<long long>(t.gfreq) * t.gfreq +
                               static_cast<long long>(t.tfreq) * t.tfreq);
        r.add_term(t.kind, t.gfreq, t.tfreq, c * QSqrt2(lam));
    }
    return r;
}

QSqrt2 TrigPoly::mean() const { return coefficient(TrigTerm{TrigKind::CC, 0, 0}); }

QSqrt2 TrigPoly::l2_pair(const TrigPoly& f, const TrigPoly& g) {
    // distinct basis functions are L2-orthogonal, so only identical terms
    // contribute; each with weight 1/2 per nonzero frequency
    const TrigPoly& small = f.terms_.size() <= g.terms_.size() ? f : g;
    const TrigPoly& large = f.terms_.size() <= g.terms_.size() ? g : f;
    QSqrt2 acc;
    for (const auto& [t, c] : small.terms_) {
        auto it = large.find(t);
        if (it == large.terms_.end()) continue;
        int halvings = (t.gfreq > 0 ? 1 : 0) + (t.tfreq > 0 ? 1 : 0);
        acc += c * it->second * QSqrt2(Rat(1, 1 << halvings));
    }
    return acc;
}

std::optional<QSqrt2> TrigPoly::laplace_eigenvalue() const {
    if (terms_.empty()) return QSqrt2(0);
    long long s = -1;
    for (const auto& [t, c] : terms_) {
        long long cur = static_cast<long long>(t.gfreq) * t.gfreq +
                        static_cast<long long>(t.tfreq) * t.tfreq;
        if (s < 0) s = cur;
        else if (s != cur) return std::nullopt;
    }
    return QSqrt2(4 * s);
}

int TrigPoly::max_frequency() const {
    int m = 0;
    for (const auto& [t, c] : terms_) m = std::max({m, t.gfreq, t.tfreq});
    return m;
}

double TrigPoly::evaluate(double gamma, double theta) const {
    double v = 0;
    for (const auto& [t, c] : terms_) {
        double gf = gamma_factor_is_cos(t.kind) ? std::cos(t.gfreq * gamma) : std::sin(t.gfreq * gamma);
        double tf = theta_factor_is_cos(t.kind) ? std::cos(t.tfreq * theta) : std::sin(t.tfreq * theta);
        v += c.to_double() * gf * tf;
    }
    return v;
}

std::string TrigPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [t, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")";
        if (t.gfreq > 0)
            s += (gamma_factor_is_cos(t.kind) ? "*cos(" : "*sin(") + std::to_string(t.gfreq) + "g)";
        if (t.tfreq > 0)
            s += (theta_factor_is_cos(t.kind) ? "*cos(" : "*sin(") + std::to_string(t.tfreq) + "t)";
    }
    return s;
}

} // namespace torusspec
