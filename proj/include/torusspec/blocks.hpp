// Invariant-block enumeration and exact spectral analysis.
//
// Every operator here preserves the subspaces S^{m,n} spanned by the
// frequency-(m,n) trig monomials tensored with the moving frame.  Block
// matrices are Gram matrices (Op(e_i), e_j) in the paper's basis ordering:
// frames in the order gamma, theta, nu, eta; within a frame the monomials
// cos cos, cos sin, sin cos, sin sin (for one-frequency blocks cos, sin).
// The pi^2 normalisation factors cancel exactly, so entries live in
// Q[sqrt(2)].

#ifndef TORUSSPEC_BLOCKS_HPP
#define TORUSSPEC_BLOCKS_HPP

#include "torusspec/matrix.hpp"
#include "torusspec/operators.hpp"
#include "torusspec/root_counting.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace torusspec {

enum class OperatorKind : std::uint8_t { I2, J, Jp, I2Projected };

struct OperatorSpec {
    OperatorKind kind = OperatorKind::I2;
    long long p = 2; // used by Jp (exact integer mode)

    std::string name() const;
    Target target() const {
        return kind == OperatorKind::I2 ? Target::S4 : Target::S3;
    }
};

struct BlockLabel {
    int m = 0, n = 0;
    friend bool operator==(const BlockLabel&, const BlockLabel&) = default;
};

struct BlockBasisElement {
    TrigTerm monomial;
    Frame frame;
};

std::vector<TrigTerm> block_monomials(BlockLabel label);
std::vector<BlockBasisElement> block_basis(Target t, BlockLabel label);
// Common squared L2 norm (in pi^2 units) of the monomials of a block.
Rat block_norm_square(BlockLabel label);

// Assembles the Gram matrix of `op` on the block and verifies exactly that
// the image of every basis section stays inside the block and that the
// matrix is symmetric.
SymMatrix assemble_block(Target t, BlockLabel label,
                         const std::function<Section(const Section&)>& op);
SymMatrix operator_block(OperatorSpec op, BlockLabel label);

struct AnalyzedBlock {
    BlockLabel label;
    int dim = 0;
    Poly characteristic;
    RootSignature signature;
};

// char poly + certified signature; for I2 (and the one-frequency J blocks)
// the result is additionally checked against the closed-form factorisations.
AnalyzedBlock analyze_block(OperatorSpec op, BlockLabel label);

// Closed-form characteristic polynomials.
std::array<QSqrt2, 4> i2_axis_cubic_coeffs(long long m);  // a0..a3 of P3
Poly i2_axis_char_poly(long long m);                      // (x-16(m^2+m^4))^2 P3(x)^2
std::array<QSqrt2, 5> i2_full_quartic_coeffs(long long m, long long n); // c0..c4 of Q4
Poly i2_full_quartic(long long m, long long n);
Poly i2_expected_char_poly(BlockLabel label);             // any (m,n) incl. axes and (0,0)
Poly j_axis_char_poly(long long m);                       // (x-4m^2)^2 (x^2-8m^2 x+16m^4-32m^2)^2

struct BlockSummary {
    int m = 0, n = 0, dim = 0;
    RootSignature signature;
};

struct SpectrumReport {
    OperatorSpec op;
    int cutoff = 0;
    bool exact = true;      // false for the floating-point p path
    double p_float = 0.0;   // set when !exact
    std::vector<BlockSummary> blocks;
    long long index = 0;
    long long nullity = 0;
    bool tail_certified = false;
    std::string tail_note;
};

std::vector<BlockLabel> enumerate_labels(int cutoff);
std::vector<AnalyzedBlock> analyze_all_blocks(OperatorSpec op, int cutoff);
SpectrumReport summarize(OperatorSpec op, int cutoff, const std::vector<AnalyzedBlock>& blocks);
SpectrumReport index_nullity(OperatorSpec op, int cutoff);

// Floating-point eigenvalue signature with gap tolerance; used as the
// mandatory cross-check of every exact block signature.
RootSignature float_signature(const SymMatrix& m, double zero_tol = 1e-8);

// Floating-point J_p spectrum for arbitrary real p >= 1: block matrices are
// c1(p) * D + c2(p) * J where D and J are assembled exactly and only the two
// scalars depend on p.
SpectrumReport jp_float_report(double p, int cutoff, double zero_tol = 1e-8);

struct PharmonicRow {
    double p = 0;
    bool exact = true;
    long long index = 0;
    long long nullity = 0;
};
std::vector<PharmonicRow> pharmonic_sweep(const std::vector<double>& ps, int cutoff);

// Theorem-style composition test: does any eigenvalue of J fall inside the
// open interval (-2 m_dim, 0)?
struct CompositionWitness {
    BlockLabel label;
    std::optional<QSqrt2> exact; // an exact eigenvalue in the interval, when found
    Rat lo, hi;                  // isolating interval otherwise
    double approx = 0;
};

struct CompositionCheck {
    bool holds = true;
    long long roots_in_interval = 0;
    std::optional<CompositionWitness> witness;
};

CompositionCheck
composition_condition(const std::vector<std::pair<BlockLabel, Poly>>& spectrum_polys, int m_dim);
CompositionCheck composition_condition(const std::vector<AnalyzedBlock>& blocks, int m_dim);

} // namespace torusspec

#endif
