// Shared helpers for the test suites: seeded random generators for exact
// scalars, trig polynomials and band-limited sections.

#ifndef TORUSSPEC_TEST_SUPPORT_HPP
#define TORUSSPEC_TEST_SUPPORT_HPP

#include "torusspec/section.hpp"

#include <cmath>
#include <random>

namespace torusspec::testing {

inline std::mt19937_64 make_rng(unsigned long long seed = 0x5eed2026ull) {
    return std::mt19937_64(seed);
}

inline Rat random_rat(std::mt19937_64& rng, int num_range = 6, int den_range = 3) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rat(num(rng), den(rng));
}

inline QSqrt2 random_qs2(std::mt19937_64& rng) { return QSqrt2(random_rat(rng), random_rat(rng)); }

inline QSqrt2 random_nonzero_qs2(std::mt19937_64& rng) {
    for (;;) {
        QSqrt2 v = random_qs2(rng);
        if (!v.is_zero()) return v;
    }
}

inline TrigPoly random_trigpoly(std::mt19937_64& rng, int max_freq = 2, int terms = 3) {
    std::uniform_int_distribution<int> freq(0, max_freq);
    std::uniform_int_distribution<int> kind(0, 3);
    TrigPoly f;
    for (int i = 0; i < terms; ++i) {
        f = f + TrigPoly::term(static_cast<TrigKind>(kind(rng)), freq(rng), freq(rng),
                               random_qs2(rng));
    }
    return f;
}

inline Section random_section(std::mt19937_64& rng, Target t, int max_freq = 2, int terms = 2) {
    Section s(t);
    for (Frame e : frames_of(t)) s.set_component(e, random_trigpoly(rng, max_freq, terms));
    return s;
}

// random band-limited section scaled to L2 norm close to 1 (the scale stays
// an exact dyadic rational, so the section remains exact)
inline Section random_unit_section(std::mt19937_64& rng, Target t, int max_freq = 2,
                                   int terms = 2) {
    for (;;) {
        Section s = random_section(rng, t, max_freq, terms);
        QSqrt2 n2 = l2_inner(s, s);
        if (n2.is_zero()) continue;
        long long num = std::llround(4096.0 / std::sqrt(n2.to_double()));
        if (num == 0) continue;
        return s.scaled(QSqrt2(Rat(num, 4096)));
    }
}

} // namespace torusspec::testing

#endif
