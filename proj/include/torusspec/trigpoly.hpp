// Finite real Fourier series on the flat torus T = S^1(1/2) x S^1(1/2),
// parametrised by angles (gamma, theta) in [0, 2pi)^2, with coefficients in
// Q[sqrt(2)].
//
// Basis functions are products cos/sin(j*gamma) * cos/sin(k*theta) with
// j, k >= 0, encoded by TrigKind (gamma factor first).  Canonical form keeps
// no identically-zero basis function (sin with frequency 0) and no zero
// coefficients.
//
// Integrals are reported in units of pi^2, the total area of the torus:
// mean() below is (1/pi^2) * integral f dV with dV = (1/4) dgamma dtheta.

#ifndef TORUSSPEC_TRIGPOLY_HPP
#define TORUSSPEC_TRIGPOLY_HPP

#include "torusspec/qsqrt2.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace torusspec {

enum class TrigKind : std::uint8_t { CC, CS, SC, SS };

inline bool gamma_factor_is_cos(TrigKind k) { return k == TrigKind::CC || k == TrigKind::CS; }
inline bool theta_factor_is_cos(TrigKind k) { return k == TrigKind::CC || k == TrigKind::SC; }
inline TrigKind make_kind(bool gcos, bool tcos) {
    return gcos ? (tcos ? TrigKind::CC : TrigKind::CS) : (tcos ? TrigKind::SC : TrigKind::SS);
}

struct TrigTerm {
    TrigKind kind;
    int gfreq; // frequency in gamma
    int tfreq; // frequency in theta

    auto operator<=>(const TrigTerm&) const = default;
};

class TrigPoly {
public:
    // terms sorted by TrigTerm, no zero coefficients
    using Terms = std::vector<std::pair<TrigTerm, QSqrt2>>;

    TrigPoly() = default;

    static TrigPoly constant(QSqrt2 c);
    // May return zero when the requested basis function vanishes identically.
    static TrigPoly term(TrigKind kind, int gfreq, int tfreq, QSqrt2 coeff);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    QSqrt2 coefficient(const TrigTerm& t) const;

    friend TrigPoly operator+(const TrigPoly& f, const TrigPoly& g);
    friend TrigPoly operator-(const TrigPoly& f, const TrigPoly& g);
    friend TrigPoly operator*(const TrigPoly& f, const TrigPoly& g);
    TrigPoly operator-() const;
    friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

    TrigPoly scaled(const QSqrt2& s) const;

    TrigPoly d_gamma() const;
    TrigPoly d_theta() const;
    // Delta = -4 (d^2/dgamma^2 + d^2/dtheta^2); basis functions with
    // frequencies (j, k) are eigenfunctions with eigenvalue 4 (j^2 + k^2).
    TrigPoly laplace() const;

    // (1/pi^2) * integral over the torus: only the constant term survives.
    QSqrt2 mean() const;
    // (1/pi^2) * integral of f*g.
    static QSqrt2 l2_pair(const TrigPoly& f, const TrigPoly& g);

    // Laplace eigenvalue if every stored term shares j^2 + k^2 (zero
    // polynomial reports eigenvalue 0); nullopt otherwise.
    std::optional<QSqrt2> laplace_eigenvalue() const;

    int max_frequency() const;
    double evaluate(double gamma, double theta) const;
    std::string to_string() const;

private:
    void add_term(TrigKind kind, int gfreq, int tfreq, const QSqrt2& coeff);
    Terms::const_iterator find(const TrigTerm& t) const;
    Terms terms_;
};

} // namespace torusspec

#endif
