#pragma once

#include <string>

#include <json.hpp>

#include "fakequadric/cohomology.hpp"
#include "fakequadric/diophantine.hpp"

namespace fakequadric {

inline constexpr const char* kSchemaVersion = "fqdiv/1";

// Integers serialize as JSON numbers while they fit in 64 bits and fall back
// to decimal strings beyond that, so no precision is ever lost.
inline nlohmann::json to_json_value(const BigInt& v) {
    if (v.fits_int64()) return v.to_int64();
    return v.to_string();
}

inline BigInt bigint_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt::from_string(j.get<std::string>());
    throw std::invalid_argument("bigint_from_json: expected integer or decimal string");
}

inline LatticeType lattice_from_string(const std::string& s) {
    if (s == "even") return LatticeType::Even;
    if (s == "odd") return LatticeType::Odd;
    throw std::invalid_argument("lattice type must be \"even\" or \"odd\", got \"" + s + "\"");
}

inline void to_json(nlohmann::json& j, const DivisorClass& d) {
    j = nlohmann::json{{"x", to_json_value(d.x)}, {"y", to_json_value(d.y)}};
}

inline void from_json(const nlohmann::json& j, DivisorClass& d) {
    d.x = bigint_from_json(j.at("x"));
    d.y = bigint_from_json(j.at("y"));
}

inline void to_json(nlohmann::json& j, const GenusReport& r) {
    j = nlohmann::json{{"p_a", to_json_value(r.p_a)},
                       {"chi", to_json_value(r.chi)},
                       {"k_dot", to_json_value(r.k_dot)},
                       {"self_int", to_json_value(r.self_int)}};
}

inline void from_json(const nlohmann::json& j, GenusReport& r) {
    r.p_a = bigint_from_json(j.at("p_a"));
    r.chi = bigint_from_json(j.at("chi"));
    r.k_dot = bigint_from_json(j.at("k_dot"));
    r.self_int = bigint_from_json(j.at("self_int"));
}

inline void to_json(nlohmann::json& j, const PositivityVerdict& v) {
    j = nlohmann::json{{"effective_necessary", v.effective_necessary},
                       {"nef", v.nef},
                       {"big", v.big},
                       {"ample", v.ample},
                       {"governing_rule", v.governing_rule}};
}

inline void from_json(const nlohmann::json& j, PositivityVerdict& v) {
    j.at("effective_necessary").get_to(v.effective_necessary);
    j.at("nef").get_to(v.nef);
    j.at("big").get_to(v.big);
    j.at("ample").get_to(v.ample);
    j.at("governing_rule").get_to(v.governing_rule);
}

inline void to_json(nlohmann::json& j, const ConeRays& r) {
    j = nlohmann::json{{"effective_rays", r.effective_rays}, {"nef_rays", r.nef_rays}};
}

inline void to_json(nlohmann::json& j, const CohomologyBounds& b) {
    j = nlohmann::json{{"h2_zero", b.h2_zero},
                       {"h0_lower", b.h0_lower ? to_json_value(*b.h0_lower)
                                               : nlohmann::json(nullptr)},
                       {"h0_exact", b.h0_exact ? to_json_value(*b.h0_exact)
                                               : nlohmann::json(nullptr)},
                       {"chi", to_json_value(b.chi)}};
}

inline void to_json(nlohmann::json& j, const BoundedCohomologyCase& c) {
    nlohmann::json relation{{"kind", to_string(c.relation)}};
    switch (c.relation) {
    case CohomologyRelation::H1EqualsH0PlusOffset:
        relation["offset"] = to_json_value(c.offset());
        relation["h0_max"] = 2;
        break;
    case CohomologyRelation::H0MinusH1EqualsChi:
        relation["chi"] = to_json_value(c.chi);
        break;
    default:
        break;
    }
    j = nlohmann::json{{"case", to_string(c.case_tag)},
                       {"chi", to_json_value(c.chi)},
                       {"relation", relation},
                       {"conditional", c.conditional}};
    if (c.case_tag == CohomologyCaseTag::PencilRay)
        j["pencil_multiple"] = to_json_value(c.pencil_multiple);
}

inline void to_json(nlohmann::json& j, const TangentSplittingReport& r) {
    j = nlohmann::json{{"l1", r.l1},
                       {"l2", r.l2},
                       {"sum", r.sum},
                       {"l1_squared", to_json_value(r.l1_squared)},
                       {"l2_squared", to_json_value(r.l2_squared)},
                       {"l1_dot_l2", to_json_value(r.l1_dot_l2)},
                       {"sum_is_canonical", r.sum_is_canonical},
                       {"squares_vanish", r.squares_vanish},
                       {"chern_identity_holds", r.chern_identity_holds}};
}

inline void to_json(nlohmann::json& j, const ResidualEntry& e) {
    j = nlohmann::json{{"class", e.cls}, {"residual", to_json_value(e.residual)}};
}

inline void to_json(nlohmann::json& j, const EdgeCaseRecord& e) {
    j = nlohmann::json{
        {"constraint", e.constraint},
        {"region", e.region},
        {"quadratic",
         {{"a", to_json_value(e.a)}, {"b", to_json_value(e.b)}, {"c", to_json_value(e.c)}}},
        {"discriminant", to_json_value(e.discriminant)},
        {"discriminant_is_square", e.discriminant_is_square},
        {"roots_in_region", e.roots_in_region}};
}

inline void to_json(nlohmann::json& j, const Certificate& c) {
    j = nlohmann::json{{"schema", kSchemaVersion},
                       {"model", to_string(c.model)},
                       {"equation", c.equation},
                       {"canonical_class", c.canonical_case},
                       {"finite_region", c.finite_region},
                       {"edge_cases", c.edge_cases},
                       {"search_box", c.search_box},
                       {"candidates_examined", c.candidates_examined},
                       {"exhaustive_box_clean", c.exhaustive_box_clean},
                       {"residual_zero_hits", c.residual_zero_hits},
                       {"notes", c.notes},
                       {"conclusion", c.conclusion}};
    if (c.model == LatticeType::Odd) j["skipped_parity_pairs"] = c.skipped_parity_pairs;
}

inline void to_json(nlohmann::json& j, const GenusClassEntry& e) {
    j = nlohmann::json{{"class", e.cls}, {"annotations", e.annotations}};
}

inline void to_json(nlohmann::json& j, const GenusClassList& l) {
    j = nlohmann::json{
        {"genus", l.genus}, {"classes", l.classes}, {"excluded", l.excluded}};
}

// ---------------------------------------------------------------------------
// Stable plain-text renderings, for human output and byte-level diffing.

inline std::string to_text(const Certificate& c) {
    std::string out;
    out += "non-embedding certificate (" + to_string(c.model) + " model)\n";
    out += "equation: " + c.equation + "\n";
    out += "canonical class " + c.canonical_case.cls.to_string() + ": residual " +
           c.canonical_case.residual.to_string() + "\n";
    out += "finite region (" + std::to_string(c.finite_region.size()) + " candidates):\n";
    for (const ResidualEntry& e : c.finite_region)
        out += "  " + e.cls.to_string() + ": residual " + e.residual.to_string() + "\n";
    if (c.model == LatticeType::Odd) {
        out += "skipped parity pairs (s, t):";
        for (const auto& p : c.skipped_parity_pairs)
            out += " (" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ")";
        out += "\n";
    }
    out += "edge cases:\n";
    for (const EdgeCaseRecord& e : c.edge_cases) {
        out += "  " + e.constraint + " (" + e.region + "): " + e.a.to_string() + " t^2 + " +
               e.b.to_string() + " t + " + e.c.to_string() + " = 0, discriminant " +
               e.discriminant.to_string() +
               (e.discriminant_is_square ? " (perfect square)" : " (not a square)") + "\n";
        for (const ResidualEntry& r : e.roots_in_region)
            out += "    root in region: " + r.cls.to_string() + "\n";
    }
    out += "box sweep: " + std::to_string(c.candidates_examined) +
           " ample classes examined up to " + std::to_string(c.search_box) +
           (c.exhaustive_box_clean ? ", no residual zero\n" : ", RESIDUAL ZERO FOUND\n");
    if (!c.residual_zero_hits.empty()) {
        out += "residual zero hits:\n";
        for (const ResidualEntry& e : c.residual_zero_hits)
            out += "  " + e.cls.to_string() + "\n";
    }
    for (const std::string& n : c.notes) out += "note: " + n + "\n";
    out += "conclusion: " + c.conclusion + "\n";
    return out;
}

inline std::string to_text(const GenusClassList& l) {
    std::string out = "p_a = " + std::to_string(l.genus) + ":";
    if (l.classes.empty()) out += " (none)";
    for (const GenusClassEntry& e : l.classes) {
        out += " " + e.cls.to_string();
        for (const std::string& a : e.annotations) out += "[" + a + "]";
    }
    for (const GenusClassEntry& e : l.excluded)
        out += " excluded:" + e.cls.to_string();
    out += "\n";
    return out;
}

} // namespace fakequadric
