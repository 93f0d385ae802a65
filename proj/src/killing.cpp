#include "torusspec/killing.hpp"

#include "torusspec/errors.hpp"
#include "torusspec/operators.hpp"

namespace torusspec {

namespace {

const Rat kHalf{1, 2};
const QSqrt2 kInvSqrt2{Rat(0), kHalf}; // 1/sqrt2 = sqrt2/2

TrigPoly cosg(QSqrt2 c) { return TrigPoly::term(TrigKind::CC, 1, 0, std::move(c)); }
TrigPoly sing(QSqrt2 c) { return TrigPoly::term(TrigKind::SC, 1, 0, std::move(c)); }
TrigPoly cost(QSqrt2 c) { return TrigPoly::term(TrigKind::CC, 0, 1, std::move(c)); }
TrigPoly sint(QSqrt2 c) { return TrigPoly::term(TrigKind::CS, 0, 1, std::move(c)); }
TrigPoly product(TrigKind k, QSqrt2 c) { return TrigPoly::term(k, 1, 1, std::move(c)); }

// antisymmetric generators: pairs (i, j) meaning Z = -y^j e_i + y^i e_j
constexpr std::array<std::pair<int, int>, 10> kGeneratorPlanes{{
    {0, 1}, // Z1
    {2, 3}, // Z2
    {0, 3}, // Z3
    {1, 2}, // Z4
    {0, 2}, // Z5
    {1, 3}, // Z6
    {1, 4}, // Z7
    {0, 4}, // Z8
    {3, 4}, // Z9
    {2, 4}, // Z10
}};

std::array<TrigPoly, 5> apply_generator(int which, const std::array<TrigPoly, 5>& y) {
    auto [i, j] = kGeneratorPlanes[static_cast<size_t>(which)];
    std::array<TrigPoly, 5> out;
    out[static_cast<size_t>(i)] = -y[static_cast<size_t>(j)];
    out[static_cast<size_t>(j)] = y[static_cast<size_t>(i)];
    return out;
}

Section hard_coded_expansion(int id) {
    Section s(Target::S4);
    const QSqrt2 half{kHalf};
    switch (id) {
    case 1:
        s.set_component(Frame::Gamma, TrigPoly::constant(half));
        break;
    case 2:
        s.set_component(Frame::Theta, TrigPoly::constant(half));
        break;
    case 3:
        s.set_component(Frame::Gamma, product(TrigKind::SS, half));
        s.set_component(Frame::Theta, product(TrigKind::CC, half));
        s.set_component(Frame::Nu, product(TrigKind::CS, -kInvSqrt2));
        break;
    case 4:
        s.set_component(Frame::Gamma, product(TrigKind::CC, -half));
        s.set_component(Frame::Theta, product(TrigKind::SS, -half));
        s.set_component(Frame::Nu, product(TrigKind::SC, -kInvSqrt2));
        break;
    case 5:
        s.set_component(Frame::Gamma, product(TrigKind::SC, half));
        s.set_component(Frame::Theta, product(TrigKind::CS, -half));
        s.set_component(Frame::Nu, product(TrigKind::CC, -kInvSqrt2));
        break;
    case 6:
        s.set_component(Frame::Gamma, product(TrigKind::CS, -half));
        s.set_component(Frame::Theta, product(TrigKind::SC, half));
        s.set_component(Frame::Nu, product(TrigKind::SS, -kInvSqrt2));
        break;
    case 7:
        s.set_component(Frame::Gamma, cosg(-kInvSqrt2));
        s.set_component(Frame::Nu, sing(-half));
        s.set_component(Frame::Eta, sing(-kInvSqrt2));
        break;
    case 8:
        s.set_component(Frame::Gamma, sing(kInvSqrt2));
        s.set_component(Frame::Nu, cosg(-half));
        s.set_component(Frame::Eta, cosg(-kInvSqrt2));
        break;
    case 9:
        s.set_component(Frame::Theta, cost(-kInvSqrt2));
        s.set_component(Frame::Nu, sint(half));
        s.set_component(Frame::Eta, sint(-kInvSqrt2));
        break;
    case 10:
        s.set_component(Frame::Theta, sint(kInvSqrt2));
        s.set_component(Frame::Nu, cost(half));
        s.set_component(Frame::Eta, cost(-kInvSqrt2));
        break;
    default:
        throw std::invalid_argument("Killing section id out of range");
    }
    return s;
}

} // namespace

std::array<TrigPoly, 5> ambient_immersion() {
    const QSqrt2 half{kHalf};
    return {cosg(half), sing(half), cost(half), sint(half), TrigPoly::constant(kInvSqrt2)};
}

std::array<TrigPoly, 5> ambient_frame(Frame e) {
    const QSqrt2 one{1};
    const QSqrt2 half{kHalf};
    switch (e) {
    case Frame::Gamma: return {sing(-one), cosg(one), TrigPoly(), TrigPoly(), TrigPoly()};
    case Frame::Theta: return {TrigPoly(), TrigPoly(), sint(-one), cost(one), TrigPoly()};
    case Frame::Nu:
        return {cosg(kInvSqrt2), sing(kInvSqrt2), cost(-kInvSqrt2), sint(-kInvSqrt2), TrigPoly()};
    case Frame::Eta:
        return {cosg(half), sing(half), cost(half), sint(half), TrigPoly::constant(-kInvSqrt2)};
    }
    throw std::invalid_argument("bad frame");
}

Section section_from_ambient(const std::array<TrigPoly, 5>& field) {
    Section s(Target::S4);
    for (Frame e : frames_of(Target::S4)) {
        auto fr = ambient_frame(e);
        TrigPoly comp;
        for (int c = 0; c < 5; ++c) comp = comp + field[static_cast<size_t>(c)] * fr[static_cast<size_t>(c)];
        s.set_component(e, comp);
    }
    // tangency check: the frame expansion must reproduce the ambient field
    for (int c = 0; c < 5; ++c) {
        TrigPoly rebuilt;
        for (Frame e : frames_of(Target::S4))
            rebuilt = rebuilt + s.component(e) * ambient_frame(e)[static_cast<size_t>(c)];
        if (!(rebuilt == field[static_cast<size_t>(c)]))
            throw InternalInconsistencyError(
                "ambient field is not tangent to the small sphere along the immersion");
    }
    return s;
}

std::vector<KillingSection> killing_sections() {
    std::array<TrigPoly, 5> phi = ambient_immersion();
    std::vector<KillingSection> out;
    for (int id = 1; id <= 10; ++id) {
        Section from_generator = section_from_ambient(apply_generator(id - 1, phi));
        Section expansion = hard_coded_expansion(id);
        if (!(from_generator == expansion))
            throw InternalInconsistencyError("Killing section V_" + std::to_string(id) +
                                             ": generator composition and closed-form frame "
                                             "expansion disagree");
        out.push_back({id, expansion});
    }
    return out;
}

KernelReport verify_kernel() {
    KernelReport rep;
    std::vector<Section> fields;
    for (auto& ks : killing_sections()) fields.push_back(ks.expr);
    fields.push_back(Section::frame_field(Target::S4, Frame::Nu)); // V_nu, index 10

    rep.i2_annihilates = true;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (!i2_apply(fields[i]).is_zero()) {
            rep.i2_annihilates = false;
            rep.failure_detail += "I2 does not annihilate field #" + std::to_string(i + 1) + "; ";
        }
    }

    rep.orthogonal = true;
    DenseMatrix gram(fields.size(), std::vector<QSqrt2>(fields.size()));
    for (size_t i = 0; i < fields.size(); ++i)
        for (size_t j = 0; j < fields.size(); ++j) {
            gram[i][j] = l2_inner(fields[i], fields[j]);
            if (i != j && !gram[i][j].is_zero()) {
                rep.orthogonal = false;
                rep.failure_detail += "fields #" + std::to_string(i + 1) + " and #" +
                                      std::to_string(j + 1) + " are not orthogonal; ";
            }
        }
    for (size_t i = 0; i < fields.size(); ++i) rep.gram_diagonal.push_back(gram[i][i]);
    rep.gram_rank = exact_rank(gram);

    Section v_gamma = Section::frame_field(Target::S4, Frame::Gamma);
    Section v_theta = Section::frame_field(Target::S4, Frame::Theta);
    rep.frame_relation =
        v_gamma == fields[0].scaled(QSqrt2(2)) && v_theta == fields[1].scaled(QSqrt2(2));
    if (!rep.frame_relation) rep.failure_detail += "dPhi(X) = 2 V_{1,2} relation failed; ";

    return rep;
}

} // namespace torusspec
