// Certified real-root sign counting.
//
// For a polynomial all of whose roots are real (guaranteed here because
// every input is the characteristic polynomial of a symmetric matrix), the
// Descartes rule of signs applied to p(x) and p(-x) is exact, including
// multiplicities.  real_root_signature takes Descartes as the primary count
// and cross-checks it against a multiplicity-aware Sturm count; the two
// disagreeing (or not summing to the degree) raises
// InternalInconsistencyError.

#ifndef TORUSSPEC_ROOT_COUNTING_HPP
#define TORUSSPEC_ROOT_COUNTING_HPP

#include "torusspec/polynomial.hpp"
#include "torusspec/rational.hpp"

#include <optional>

namespace torusspec {

struct RootSignature {
    int negative = 0;
    int zero = 0;
    int positive = 0;

    friend bool operator==(const RootSignature&, const RootSignature&) = default;
};

RootSignature real_root_signature(const Poly& p);

// Number of roots of p in the open interval (a, b), counted with
// multiplicity, by Sturm chains.  Roots at the endpoints are excluded.
int count_roots_in_open_interval(const Poly& p, const Rat& a, const Rat& b);

// Multiplicity-aware Sturm counts on (-inf, 0) and (0, +inf) for p(0) != 0.
// Exposed for tests; real_root_signature uses them internally.
int sturm_count_positive(const Poly& p);
int sturm_count_negative(const Poly& p);

} // namespace torusspec

#endif
