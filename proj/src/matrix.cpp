#include "torusspec/matrix.hpp"

#include "torusspec/errors.hpp"

#include <stdexcept>
#include <utility>

namespace torusspec {

void SymMatrix::assert_symmetric() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            if (at(i, j) != at(j, i))
                throw InternalInconsistencyError("matrix expected to be symmetric is not, at (" +
                                                 std::to_string(i) + "," + std::to_string(j) + ")");
}

namespace {

// Coefficients in Z[sqrt2]: plain big-integer pairs, no rational reduction.
struct ZS2 {
    BigInt a, b; // a + b sqrt2
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
};

ZS2 operator*(const ZS2& x, const ZS2& y) {
    return {x.a * y.a + 2 * (x.b * y.b), x.a * y.b + x.b * y.a};
}
ZS2& operator-=(ZS2& x, const ZS2& y) {
    x.a -= y.a;
    x.b -= y.b;
    return x;
}
ZS2& operator+=(ZS2& x, const ZS2& y) {
    x.a += y.a;
    x.b += y.b;
    return x;
}

BigInt ipow_big(const BigInt& base, unsigned e) {
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

// dense integer-pair polynomial, lowest degree first
using ZPoly = std::vector<ZS2>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

ZPoly zmul(const ZPoly& p, const ZPoly& q) {
    if (p.empty() || q.empty()) return {};
    ZPoly r(p.size() + q.size() - 1);
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        for (size_t j = 0; j < q.size(); ++j) {
            if (q[j].is_zero()) continue;
            r[i + j] += p[i] * q[j];
        }
    }
    ztrim(r);
    return r;
}

bool zmonic(const ZPoly& p) { return !p.empty() && p.back().a == 1 && p.back().b == 0; }

// exact division by a monic divisor: pure ring arithmetic
ZPoly zdiv_by_monic(ZPoly num, const ZPoly& den) {
    if (!zmonic(den)) throw InternalInconsistencyError("Bareiss divisor is not monic");
    if (num.size() < den.size()) {
        ztrim(num);
        if (!num.empty())
            throw InternalInconsistencyError("Bareiss division expected to be exact");
        return {};
    }
    ZPoly quot(num.size() - den.size() + 1);
    for (size_t k = quot.size(); k-- > 0;) {
        ZS2 q = num[k + den.size() - 1];
        quot[k] = q;
        if (q.is_zero()) continue;
        for (size_t j = 0; j < den.size(); ++j) num[k + j] -= q * den[j];
    }
    ztrim(num);
    if (!num.empty()) throw InternalInconsistencyError("Bareiss division expected to be exact");
    return quot;
}

} // namespace

Poly char_poly(const SymMatrix& m) {
    const int n = m.dim();
    if (n == 0) return Poly(QSqrt2(1));

    // clear denominators: work with D*M over Z[sqrt2], then map back via
    // charpoly_M(x) = D^{-n} charpoly_{DM}(D x)
    BigInt d = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            d = boost::multiprecision::lcm(d, denominator(m.at(i, j).rational_part()));
            d = boost::multiprecision::lcm(d, denominator(m.at(i, j).sqrt2_part()));
        }

    std::vector<std::vector<ZPoly>> a(static_cast<size_t>(n),
                                      std::vector<ZPoly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ZS2 entry{numerator(Rat(m.at(i, j).rational_part() * d)),
                      numerator(Rat(m.at(i, j).sqrt2_part() * d))};
            if (i == j)
                a[i][j] = ZPoly{ZS2{-entry.a, -entry.b}, ZS2{1, 0}};
            else if (!entry.is_zero())
                a[i][j] = ZPoly{ZS2{-entry.a, -entry.b}};
        }

    // fraction-free elimination; the pivot a[k][k] is the (k+1)-st leading
    // principal minor of x I - DM, monic of degree k+1, so no pivoting is
    // ever needed and every division below is by a monic polynomial
    ZPoly prev{ZS2{1, 0}};
    for (int k = 0; k + 1 < n; ++k) {
        const ZPoly pivot = a[k][k];
        if (!zmonic(pivot) || static_cast<int>(pivot.size()) != k + 2)
            throw InternalInconsistencyError("Bareiss pivot lost monicity");
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k].empty()) {
                // row already eliminated in this column: update reduces to an
                // exact division of pivot * a[i][j] by prev
                for (int j = k + 1; j < n; ++j)
                    if (!a[i][j].empty()) a[i][j] = zdiv_by_monic(zmul(pivot, a[i][j]), prev);
                continue;
            }
            for (int j = k + 1; j < n; ++j) {
                ZPoly t = zmul(pivot, a[i][j]);
                ZPoly u = zmul(a[i][k], a[k][j]);
                if (t.size() < u.size()) t.resize(u.size());
                for (size_t q = 0; q < u.size(); ++q) t[q] -= u[q];
                ztrim(t);
                a[i][j] = zdiv_by_monic(std::move(t), prev);
            }
            a[i][k].clear(); // spent
        }
        prev = pivot;
    }

    const ZPoly& det = a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    if (!zmonic(det) || static_cast<int>(det.size()) != n + 1)
        throw InternalInconsistencyError("characteristic polynomial is not monic of full degree");

    // map back: coeff_i = det_i * D^(i - n)
    std::vector<QSqrt2> coeffs(det.size());
    Rat scale = Rat(1, ipow_big(d, static_cast<unsigned>(n)));
    for (size_t i = 0; i < det.size(); ++i) {
        coeffs[i] = QSqrt2(Rat(det[i].a) * scale, Rat(det[i].b) * scale);
        scale *= d;
    }
    return Poly(std::move(coeffs));
}

Poly char_poly_faddeev(const SymMatrix& m) {
    const int n = m.dim();
    DenseMatrix M = to_dense(m);
    DenseMatrix B(static_cast<size_t>(n), std::vector<QSqrt2>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) B[i][i] = QSqrt2(1);

    std::vector<QSqrt2> c(static_cast<size_t>(n) + 1);
    c[static_cast<size_t>(n)] = QSqrt2(1);
    for (int k = 1; k <= n; ++k) {
        DenseMatrix A = matrix_multiply(M, B);
        QSqrt2 tr;
        for (int i = 0; i < n; ++i) tr += A[i][i];
        QSqrt2 ck = -(tr / QSqrt2(k));
        c[static_cast<size_t>(n - k)] = ck;
        B = std::move(A);
        for (int i = 0; i < n; ++i) B[i][i] += ck;
    }
    return Poly(std::move(c));
}

DenseMatrix matrix_multiply(const DenseMatrix& a, const DenseMatrix& b) {
    const size_t n = a.size(), p = b.size(), q = p ? b[0].size() : 0;
    DenseMatrix r(n, std::vector<QSqrt2>(q));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < p; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < q; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

DenseMatrix to_dense(const SymMatrix& m) {
    DenseMatrix r(static_cast<size_t>(m.dim()), std::vector<QSqrt2>(static_cast<size_t>(m.dim())));
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) r[i][j] = m.at(i, j);
    return r;
}

DenseMatrix evaluate_poly_at_matrix(const Poly& p, const SymMatrix& m) {
    const size_t n = static_cast<size_t>(m.dim());
    DenseMatrix M = to_dense(m);
    DenseMatrix acc(n, std::vector<QSqrt2>(n));
    for (int d = p.degree(); d >= 0; --d) {
        acc = matrix_multiply(acc, M);
        for (size_t i = 0; i < n; ++i) acc[i][i] += p.coeff(d);
    }
    return acc;
}

bool is_zero_matrix(const DenseMatrix& m) {
    for (const auto& row : m)
        for (const auto& v : row)
            if (!v.is_zero()) return false;
    return true;
}

int exact_rank(DenseMatrix rows) {
    if (rows.empty()) return 0;
    const size_t nr = rows.size(), nc = rows[0].size();
    int rank = 0;
    size_t col = 0;
    for (size_t r = 0; r < nr && col < nc; ++col) {
        size_t piv = r;
        while (piv < nr && rows[piv][col].is_zero()) ++piv;
        if (piv == nr) continue;
        std::swap(rows[r], rows[piv]);
        QSqrt2 inv = rows[r][col].inverse();
        for (size_t i = r + 1; i < nr; ++i) {
            if (rows[i][col].is_zero()) continue;
            QSqrt2 f = rows[i][col] * inv;
            for (size_t j = col; j < nc; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++rank;
        ++r;
    }
    return rank;
}

QSqrt2 determinant(const SymMatrix& m) {
    // det(M) = (-1)^n * charpoly(0)
    QSqrt2 c0 = char_poly(m).coeff(0);
    return m.dim() % 2 == 0 ? c0 : -c0;
}

} // namespace torusspec
