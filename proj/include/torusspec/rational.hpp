// Arbitrary-precision rational scalars.
//
// Rat is boost::multiprecision::cpp_rational: always canonical
// (gcd(num, den) = 1, den > 0) and never overflows.  The helpers below give
// the few operations the rest of the library needs beyond plain arithmetic.

#ifndef TORUSSPEC_RATIONAL_HPP
#define TORUSSPEC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace torusspec {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Rat& r) { return r.sign(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// 2^k for any integer k (negative exponents give 1/2^|k|).
inline Rat rat_pow2(long long k) {
    BigInt p = BigInt(1) << static_cast<unsigned>(k >= 0 ? k : -k);
    return k >= 0 ? Rat(p) : Rat(1, p);
}

inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// Accepts "p", "-p", "p/q".
inline Rat rat_from_string(const std::string& s) {
    try {
        Rat r(s);
        return r;
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational literal: '" + s + "'");
    }
}

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

} // namespace torusspec

#endif
