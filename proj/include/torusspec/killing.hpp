// The ten Killing-generated sections V_1..V_10 along Phi and the exact
// verification that Ker(I2) = span{V_1..V_10} + span{V_nu}.
//
// Each V_i is built two independent ways: from its hard-coded frame
// expansion, and by composing the ambient rotation generator with the
// explicit immersion and re-expressing the result in the moving frame.  The
// two must agree exactly.

#ifndef TORUSSPEC_KILLING_HPP
#define TORUSSPEC_KILLING_HPP

#include "torusspec/matrix.hpp"
#include "torusspec/section.hpp"

#include <array>
#include <string>
#include <vector>

namespace torusspec {

// Coordinates of Phi(gamma, theta) = (cos g / 2, sin g / 2, cos t / 2,
// sin t / 2, 1/sqrt2) and of the frame fields as vectors in R^5.
std::array<TrigPoly, 5> ambient_immersion();
std::array<TrigPoly, 5> ambient_frame(Frame e);

// Expresses an ambient tangent field along Phi in the moving frame; throws
// InternalInconsistencyError when the field fails to be tangent (the frame
// reconstruction would then not reproduce the input).
Section section_from_ambient(const std::array<TrigPoly, 5>& field);

struct KillingSection {
    int id = 0;
    Section expr{Target::S4};
};

// V_i(P) = Z_i(Phi(P)) for the 10 rotation generators, cross-checked against
// the closed-form frame expansions.
std::vector<KillingSection> killing_sections();

struct KernelReport {
    bool i2_annihilates = false;   // I2(V_i) = 0 for i=1..10 and I2(V_nu) = 0
    bool orthogonal = false;       // pairwise L2-orthogonality incl. V_nu
    int gram_rank = 0;             // exact rank of the 11x11 Gram matrix
    bool frame_relation = false;   // dPhi(X_gamma) = 2 V_1, dPhi(X_theta) = 2 V_2
    std::vector<QSqrt2> gram_diagonal;
    std::string failure_detail;

    bool ok() const {
        return i2_annihilates && orthogonal && gram_rank == 11 && frame_relation;
    }
};

KernelReport verify_kernel();

} // namespace torusspec

#endif
