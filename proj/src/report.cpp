#include "torusspec/report.hpp"

#include <cstdio>
#include <sstream>

namespace torusspec::report {

const char* kBasisOrderingNote =
    "frames gamma, theta, nu, eta (nu-normal to the torus inside the small 3-sphere, "
    "eta-normal to the small 3-sphere); within each frame the monomials "
    "cos(m g)cos(n t), cos(m g)sin(n t), sin(m g)cos(n t), sin(m g)sin(n t), "
    "dropping identically-zero ones when m or n is 0";

std::string double_to_string(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Json qs2_to_json(const QSqrt2& v) {
    return Json{{"a", rat_to_string(v.rational_part())}, {"b", rat_to_string(v.sqrt2_part())}};
}

Json spectrum_to_json(const SpectrumReport& rep) {
    Json j;
    j["command"] = "spectrum";
    j["operator"] = rep.op.name();
    if (rep.op.kind == OperatorKind::Jp)
        j["p"] = rep.exact ? double_to_string(static_cast<double>(rep.op.p))
                           : double_to_string(rep.p_float);
    j["mode"] = rep.exact ? "exact" : "float";
    if (!rep.exact) j["zero_tolerance"] = double_to_string(1e-8);
    j["cutoff"] = rep.cutoff;
    j["basis_ordering"] = kBasisOrderingNote;
    Json blocks = Json::array();
    for (const auto& b : rep.blocks) {
        blocks.push_back(Json{{"m", b.m},
                              {"n", b.n},
                              {"dim", b.dim},
                              {"negative", b.signature.negative},
                              {"zero", b.signature.zero},
                              {"positive", b.signature.positive}});
    }
    j["blocks"] = std::move(blocks);
    j["index"] = rep.index;
    j["nullity"] = rep.nullity;
    j["tail_certified"] = rep.tail_certified;
    j["tail_note"] = rep.tail_note;
    return j;
}

Json composition_to_json(const CompositionCheck& check, int m_dim) {
    Json j;
    j["interval"] = "(" + std::to_string(-2 * m_dim) + ", 0)";
    j["holds"] = check.holds;
    j["eigenvalues_in_interval"] = check.roots_in_interval;
    if (check.witness) {
        Json w;
        w["block"] = Json{{"m", check.witness->label.m}, {"n", check.witness->label.n}};
        if (check.witness->exact) w["exact"] = qs2_to_json(*check.witness->exact);
        else
            w["isolating_interval"] = Json{{"lo", rat_to_string(check.witness->lo)},
                                           {"hi", rat_to_string(check.witness->hi)}};
        w["approx"] = double_to_string(check.witness->approx);
        j["witness"] = std::move(w);
    }
    return j;
}

Json pharmonic_rows_to_json(const std::vector<PharmonicRow>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows)
        arr.push_back(Json{{"p", double_to_string(r.p)},
                           {"mode", r.exact ? "exact" : "float"},
                           {"index", r.index},
                           {"nullity", r.nullity}});
    return arr;
}

Json kernel_to_json(const KernelReport& rep) {
    Json j;
    j["command"] = "kernel";
    j["i2_annihilates_all_eleven_fields"] = rep.i2_annihilates;
    j["pairwise_l2_orthogonal"] = rep.orthogonal;
    j["gram_rank"] = rep.gram_rank;
    j["frame_relation_dphi_equals_2V12"] = rep.frame_relation;
    Json diag = Json::array();
    for (const auto& d : rep.gram_diagonal) diag.push_back(qs2_to_json(d));
    j["gram_diagonal"] = std::move(diag);
    j["status"] = rep.ok() ? "ok" : "failed";
    if (!rep.failure_detail.empty()) j["detail"] = rep.failure_detail;
    return j;
}

std::string spectrum_to_text(const SpectrumReport& rep) {
    std::ostringstream out;
    out << "operator " << rep.op.name();
    if (rep.op.kind == OperatorKind::Jp)
        out << " (p = " << (rep.exact ? static_cast<double>(rep.op.p) : rep.p_float) << ", "
            << (rep.exact ? "exact" : "float") << ")";
    out << ", cutoff " << rep.cutoff << "\n";
    out << "  blocks with nonzero index or nullity:\n";
    for (const auto& b : rep.blocks) {
        if (b.signature.negative == 0 && b.signature.zero == 0) continue;
        out << "    (" << b.m << "," << b.n << ") dim " << b.dim << ": negative "
            << b.signature.negative << ", zero " << b.signature.zero << ", positive "
            << b.signature.positive << "\n";
    }
    out << "  index   = " << rep.index << "\n";
    out << "  nullity = " << rep.nullity << "\n";
    out << "  tail certified: " << (rep.tail_certified ? "yes" : "no") << " (" << rep.tail_note
        << ")\n";
    return out.str();
}

std::string kernel_to_text(const KernelReport& rep) {
    std::ostringstream out;
    out << "kernel verification (V_1..V_10 from ambient rotations, plus V_nu)\n";
    out << "  I2 annihilates all eleven fields: " << (rep.i2_annihilates ? "yes" : "no") << "\n";
    out << "  pairwise L2-orthogonal:           " << (rep.orthogonal ? "yes" : "no") << "\n";
    out << "  Gram matrix rank (exact):         " << rep.gram_rank << "\n";
    out << "  dPhi(X_gamma) = 2 V_1, dPhi(X_theta) = 2 V_2: "
        << (rep.frame_relation ? "yes" : "no") << "\n";
    out << "  status: " << (rep.ok() ? "ok" : ("FAILED - " + rep.failure_detail)) << "\n";
    return out.str();
}

} // namespace torusspec::report
