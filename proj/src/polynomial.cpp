#include "torusspec/polynomial.hpp"

#include "torusspec/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace torusspec {

namespace {
const QSqrt2 kZero{};

BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
BigInt big_lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }
} // namespace

Poly Poly::monomial(int degree, QSqrt2 coeff) {
    if (degree < 0) throw std::invalid_argument("negative monomial degree");
    if (coeff.is_zero()) return Poly();
    std::vector<QSqrt2> c(static_cast<size_t>(degree) + 1);
    c.back() = std::move(coeff);
    return Poly(std::move(c));
}

const QSqrt2& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const QSqrt2& Poly::leading() const {
    if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return c_.back();
}

Poly operator+(const Poly& p, const Poly& q) {
    std::vector<QSqrt2> c(std::max(p.c_.size(), q.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(static_cast<int>(i)) + q.coeff(static_cast<int>(i));
    return Poly(std::move(c));
}

Poly operator-(const Poly& p, const Poly& q) {
    std::vector<QSqrt2> c(std::max(p.c_.size(), q.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(static_cast<int>(i)) - q.coeff(static_cast<int>(i));
    return Poly(std::move(c));
}

Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    std::vector<QSqrt2> c(p.c_.size() + q.c_.size() - 1);
    for (size_t i = 0; i < p.c_.size(); ++i) {
        if (p.c_[i].is_zero()) continue;
        for (size_t j = 0; j < q.c_.size(); ++j) {
            if (q.c_[j].is_zero()) continue;
            c[i + j] += p.c_[i] * q.c_[j];
        }
    }
    return Poly(std::move(c));
}

Poly Poly::operator-() const {
    std::vector<QSqrt2> c(c_);
    for (auto& v : c) v = -v;
    return Poly(std::move(c));
}

Poly Poly::scaled(const QSqrt2& s) const {
    if (s.is_zero()) return Poly();
    std::vector<QSqrt2> c(c_);
    for (auto& v : c) v *= s;
    return Poly(std::move(c));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<QSqrt2> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * QSqrt2(static_cast<long long>(i));
    return Poly(std::move(c));
}

Poly Poly::negated_argument() const {
    std::vector<QSqrt2> c(c_);
    for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return Poly(std::move(c));
}

Poly Poly::pow(unsigned e) const {
    Poly r(QSqrt2(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

QSqrt2 Poly::evaluate(const QSqrt2& t) const {
    QSqrt2 acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (p.degree() < d.degree()) return {Poly(), p};
    std::vector<QSqrt2> rem(p.c_);
    std::vector<QSqrt2> quot(static_cast<size_t>(p.degree() - d.degree()) + 1);
    QSqrt2 inv_lead = d.leading().inverse();
    for (int k = p.degree() - d.degree(); k >= 0; --k) {
        QSqrt2 q = rem[static_cast<size_t>(k + d.degree())] * inv_lead;
        quot[static_cast<size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= d.degree(); ++j)
            rem[static_cast<size_t>(k + j)] -= q * d.coeff(j);
    }
    rem.resize(static_cast<size_t>(std::max(d.degree(), 0)));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::exact_divide(const Poly& d) const {
    auto [q, r] = divmod(*this, d);
    if (!r.is_zero())
        throw InternalInconsistencyError("polynomial division expected to be exact had remainder");
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

Poly Poly::primitive() const {
    if (is_zero()) return *this;
    BigInt den_lcm = 1, num_gcd = 0;
    for (const auto& v : c_) {
        den_lcm = big_lcm(den_lcm, denominator(v.rational_part()));
        den_lcm = big_lcm(den_lcm, denominator(v.sqrt2_part()));
    }
    for (const auto& v : c_) {
        num_gcd = big_gcd(num_gcd, numerator(Rat(v.rational_part() * den_lcm)));
        num_gcd = big_gcd(num_gcd, numerator(Rat(v.sqrt2_part() * den_lcm)));
    }
    if (num_gcd == 0) return *this;
    QSqrt2 scale{Rat(den_lcm, num_gcd)}; // positive: signs preserved
    return scaled(scale);
}

Poly Poly::gcd(Poly p, Poly q) {
    p = p.primitive();
    q = q.primitive();
    while (!q.is_zero()) {
        Poly r = divmod(p, q).second.primitive();
        p = std::move(q);
        q = std::move(r);
    }
    return p.monic();
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (coeff(i).is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + coeff(i).to_string() + ")";
        if (i > 0) s += "*x^" + std::to_string(i);
    }
    return s;
}

} // namespace torusspec
