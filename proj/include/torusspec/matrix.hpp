// Symmetric matrices over Q[sqrt(2)] and exact characteristic polynomials.
//
// char_poly runs fraction-free (Bareiss) elimination on x*I - M over the
// polynomial ring; pivots are leading principal minors of x*I - M, which are
// monic and never vanish, so no pivoting is required.  char_poly_faddeev is
// an independent second path used by tests and the self-test.

#ifndef TORUSSPEC_MATRIX_HPP
#define TORUSSPEC_MATRIX_HPP

#include "torusspec/polynomial.hpp"
#include "torusspec/qsqrt2.hpp"

#include <vector>

namespace torusspec {

class SymMatrix {
public:
    explicit SymMatrix(int dim) : dim_(dim), e_(static_cast<size_t>(dim) * dim) {}

    int dim() const { return dim_; }
    const QSqrt2& at(int i, int j) const { return e_[idx(i, j)]; }
    void set(int i, int j, QSqrt2 v) { e_[idx(i, j)] = std::move(v); }

    // Throws InternalInconsistencyError if any entry pair differs.
    void assert_symmetric() const;

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    size_t idx(int i, int j) const { return static_cast<size_t>(i) * dim_ + j; }
    int dim_;
    std::vector<QSqrt2> e_;
};

Poly char_poly(const SymMatrix& m);         // det(x I - M), monic
Poly char_poly_faddeev(const SymMatrix& m); // independent second path

using DenseMatrix = std::vector<std::vector<QSqrt2>>;

DenseMatrix matrix_multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix to_dense(const SymMatrix& m);
// p(M) by Horner; used for exact Cayley-Hamilton checks.
DenseMatrix evaluate_poly_at_matrix(const Poly& p, const SymMatrix& m);
bool is_zero_matrix(const DenseMatrix& m);

// Exact rank by Gaussian elimination over the field.
int exact_rank(DenseMatrix rows);
QSqrt2 determinant(const SymMatrix& m);

} // namespace torusspec

#endif
