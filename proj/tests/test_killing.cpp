#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "torusspec/errors.hpp"
#include "torusspec/killing.hpp"
#include "torusspec/operators.hpp"

using namespace torusspec;

namespace {
const QSqrt2 kHalf{Rat(1, 2)};
const QSqrt2 kInvSqrt2{Rat(0), Rat(1, 2)};
} // namespace

TEST_CASE("the displayed frame expansions come out of the ambient generators") {
    auto sections = killing_sections(); // construction already cross-checks both paths
    REQUIRE(sections.size() == 10);

    // V_1 = (1/2) V_gamma
    CHECK(sections[0].expr == Section::frame_field(Target::S4, Frame::Gamma).scaled(kHalf));
    // V_2 = (1/2) V_theta
    CHECK(sections[1].expr == Section::frame_field(Target::S4, Frame::Theta).scaled(kHalf));

    // V_7 = -(cos g / sqrt2) V_gamma - (sin g / 2) V_nu - (sin g / sqrt2) V_eta
    Section v7(Target::S4);
    v7.set_component(Frame::Gamma, TrigPoly::term(TrigKind::CC, 1, 0, -kInvSqrt2));
    v7.set_component(Frame::Nu, TrigPoly::term(TrigKind::SC, 1, 0, -kHalf));
    v7.set_component(Frame::Eta, TrigPoly::term(TrigKind::SC, 1, 0, -kInvSqrt2));
    CHECK(sections[6].expr == v7);

    // V_10 = (sin t / sqrt2) V_theta + (cos t / 2) V_nu - (cos t / sqrt2) V_eta
    Section v10(Target::S4);
    v10.set_component(Frame::Theta, TrigPoly::term(TrigKind::CS, 0, 1, kInvSqrt2));
    v10.set_component(Frame::Nu, TrigPoly::term(TrigKind::CC, 0, 1, kHalf));
    v10.set_component(Frame::Eta, TrigPoly::term(TrigKind::CC, 0, 1, -kInvSqrt2));
    CHECK(sections[9].expr == v10);
}

TEST_CASE("an ambient field that is not tangent is rejected") {
    std::array<TrigPoly, 5> field{};
    field[4] = TrigPoly::constant(QSqrt2(1)); // pure e_5 direction: not tangent
    CHECK_THROWS_AS(section_from_ambient(field), InternalInconsistencyError);
}

TEST_CASE("kernel verification") {
    KernelReport rep = verify_kernel();
    CHECK(rep.i2_annihilates);
    CHECK(rep.orthogonal);
    CHECK(rep.gram_rank == 11);
    CHECK(rep.frame_relation);
    CHECK(rep.ok());
    REQUIRE(rep.gram_diagonal.size() == 11);
    // (V_1, V_1) = 1/4
    CHECK(rep.gram_diagonal[0] == QSqrt2(Rat(1, 4)));
    // (V_nu, V_nu) = 1
    CHECK(rep.gram_diagonal[10] == QSqrt2(1));
}

TEST_CASE("individual kernel memberships stated in the remark") {
    auto sections = killing_sections();
    // V_3 lies in the (1,1) block and is annihilated
    CHECK(i2_apply(sections[2].expr).is_zero());
    // V_7..V_10 carry nonzero eta components: they do not live on the S3 bundle
    for (int i = 6; i < 10; ++i)
        CHECK(!sections[static_cast<size_t>(i)].expr.component(Frame::Eta).is_zero());
    // V_1..V_6 have no eta component and, reinterpreted on the S3 bundle,
    // are killed by the projected operator
    for (int i = 0; i < 6; ++i) {
        const Section& v = sections[static_cast<size_t>(i)].expr;
        CHECK(v.component(Frame::Eta).is_zero());
        Section v3(Target::S3);
        for (Frame e : frames_of(Target::S3)) v3.set_component(e, v.component(e));
        CHECK(i2_projected_apply(v3).is_zero());
    }
    // and so is V_nu
    CHECK(i2_projected_apply(Section::frame_field(Target::S3, Frame::Nu)).is_zero());
}
