// Dense univariate polynomials over Q[sqrt(2)], lowest-degree coefficient
// first.  The zero polynomial is the empty coefficient vector (degree -1).

#ifndef TORUSSPEC_POLYNOMIAL_HPP
#define TORUSSPEC_POLYNOMIAL_HPP

#include "torusspec/qsqrt2.hpp"

#include <string>
#include <utility>
#include <vector>

namespace torusspec {

class Poly {
public:
    Poly() = default;
    explicit Poly(QSqrt2 constant) {
        if (!constant.is_zero()) c_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<QSqrt2> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return monomial(1, QSqrt2(1)); }
    static Poly monomial(int degree, QSqrt2 coeff);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    // coefficient of x^i (zero beyond the stored range)
    const QSqrt2& coeff(int i) const;
    const QSqrt2& leading() const;
    bool is_monic() const { return !is_zero() && leading() == QSqrt2(1); }
    const std::vector<QSqrt2>& coeffs() const { return c_; }

    friend Poly operator+(const Poly& p, const Poly& q);
    friend Poly operator-(const Poly& p, const Poly& q);
    friend Poly operator*(const Poly& p, const Poly& q);
    Poly operator-() const;
    friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }
    friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

    Poly scaled(const QSqrt2& s) const;
    Poly derivative() const;
    Poly negated_argument() const; // p(-x)
    Poly pow(unsigned e) const;
    QSqrt2 evaluate(const QSqrt2& t) const;

    // Long division over the field: p = q*d + r with deg r < deg d.
    static std::pair<Poly, Poly> divmod(const Poly& p, const Poly& d);
    // Division known to be exact; throws InternalInconsistencyError otherwise.
    Poly exact_divide(const Poly& d) const;

    Poly monic() const;
    // Scale by a positive rational so all coefficient pairs (a, b) become
    // coprime integers; preserves signs.  Controls growth in Euclid chains.
    Poly primitive() const;
    static Poly gcd(Poly p, Poly q); // monic gcd

    std::string to_string() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<QSqrt2> c_;
};

} // namespace torusspec

#endif
