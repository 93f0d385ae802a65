#include "torusspec/root_counting.hpp"

#include "torusspec/errors.hpp"

#include <stdexcept>
#include <vector>

namespace torusspec {

namespace {

int sign_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int descartes_count(const Poly& p) {
    std::vector<int> s;
    s.reserve(static_cast<size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) s.push_back(p.coeff(i).sign());
    return sign_variations(s);
}

// Signed-remainder Sturm chain; each element scaled to primitive form by a
// positive rational, which keeps coefficient growth in check without
// touching signs.
std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(p.primitive());
    Poly d = p.derivative().primitive();
    if (!d.is_zero()) chain.push_back(d);
    while (chain.back().degree() > 0) {
        Poly r = Poly::divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back((-r).primitive());
    }
    return chain;
}

enum class Endpoint { NegInf, PosInf, At };

int chain_variations(const std::vector<Poly>& chain, Endpoint e, const Rat& at = Rat(0)) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const Poly& q : chain) {
        switch (e) {
        case Endpoint::At:
            s.push_back(q.evaluate(QSqrt2(at)).sign());
            break;
        case Endpoint::PosInf:
            s.push_back(q.leading().sign());
            break;
        case Endpoint::NegInf:
            s.push_back(q.degree() % 2 == 0 ? q.leading().sign() : -q.leading().sign());
            break;
        }
    }
    return sign_variations(s);
}

// Distinct real roots of p in (a, b] where a, b are endpoints with
// p(a) != 0, p(b) != 0 (Endpoint::At carries the rational value).
// Also reports the chain tail, which is gcd(p, p') up to a constant.
struct DistinctCount {
    int count;
    Poly gcd_tail;
};

DistinctCount sturm_distinct(const Poly& p, Endpoint lo, const Rat& lo_at, Endpoint hi,
                             const Rat& hi_at) {
    std::vector<Poly> chain = sturm_chain(p);
    int va = chain_variations(chain, lo, lo_at);
    int vb = chain_variations(chain, hi, hi_at);
    return {va - vb, chain.back()};
}

// Roots counted with multiplicity via the gcd recursion: the roots of
// gcd(p, p') are exactly the multiple roots of p with multiplicity dropped
// by one.
int count_with_multiplicity(Poly p, Endpoint lo, const Rat& lo_at, Endpoint hi,
                            const Rat& hi_at) {
    int total = 0;
    while (p.degree() > 0) {
        DistinctCount d = sturm_distinct(p, lo, lo_at, hi, hi_at);
        total += d.count;
        if (d.gcd_tail.degree() <= 0) break;
        p = d.gcd_tail.monic();
    }
    return total;
}

} // namespace

int sturm_count_positive(const Poly& p) {
    return count_with_multiplicity(p, Endpoint::At, Rat(0), Endpoint::PosInf, Rat(0));
}

int sturm_count_negative(const Poly& p) {
    return count_with_multiplicity(p, Endpoint::NegInf, Rat(0), Endpoint::At, Rat(0));
}

int count_roots_in_open_interval(const Poly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
    if (!(a < b)) throw std::invalid_argument("empty interval");
    Poly q = p;
    // strip roots sitting exactly on an endpoint; they are excluded anyway
    for (const Rat& e : {a, b}) {
        Poly lin(std::vector<QSqrt2>{QSqrt2(-e), QSqrt2(1)});
        while (!q.is_zero() && q.evaluate(QSqrt2(e)).is_zero()) q = q.exact_divide(lin);
    }
    return count_with_multiplicity(q, Endpoint::At, a, Endpoint::At, b);
}

RootSignature real_root_signature(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("signature of the zero polynomial");

    int zero_mult = 0;
    while (zero_mult <= p.degree() && p.coeff(zero_mult).is_zero()) ++zero_mult;
    std::vector<QSqrt2> shifted(p.coeffs().begin() + zero_mult, p.coeffs().end());
    Poly q{std::move(shifted)};

    int pos = descartes_count(q);
    int neg = descartes_count(q.negated_argument());

    int pos_sturm = sturm_count_positive(q);
    int neg_sturm = sturm_count_negative(q);
    if (pos != pos_sturm || neg != neg_sturm)
        throw InternalInconsistencyError(
            "Descartes and Sturm root counts disagree on " + p.to_string());
    if (zero_mult + pos + neg != p.degree())
        throw InternalInconsistencyError(
            "root counts do not sum to the degree (non-real roots?) on " + p.to_string());

    return RootSignature{neg, zero_mult, pos};
}

} // namespace torusspec
