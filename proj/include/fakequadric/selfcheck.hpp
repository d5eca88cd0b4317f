#pragma once

#include <string>
#include <vector>

#include "fakequadric/serialize.hpp"

namespace fakequadric {

struct CheckResult {
    std::string id;
    std::string description;
    bool passed = false;
    std::string detail;
};

namespace selfcheck {

inline CheckResult canonical_invariants() {
    CheckResult r{"canonical-invariants",
                  "K^2 = 8, chi(K) = 1, p_a(K) = 9 and K ample on both models; Gram "
                  "determinant -1; embedding and splitting identities",
                  true, ""};
    for (const LatticeType t : {LatticeType::Even, LatticeType::Odd}) {
        const SurfaceModel& m = SurfaceModel::of(t);
        const DivisorClass& k = canonical_class(m);
        if (self_intersection(m, k) != BigInt(8)) r.passed = false;
        if (euler_characteristic(m, k) != BigInt(1)) r.passed = false;
        if (arithmetic_genus(m, k) != BigInt(9)) r.passed = false;
        if (!is_ample(m, k)) r.passed = false;
        if (gram_determinant(t) != -1) r.passed = false;
        if (m.delta() != 4) r.passed = false;
    }
    const RationalClass k_image = embed_even_into_odd(canonical_class(SurfaceModel::even()));
    if (!(k_image.is_integral() && k_image.x == Rational(3) && k_image.y == Rational(-1)))
        r.passed = false;
    if (!tangent_splitting_check(SurfaceModel::odd()).all_verified()) r.passed = false;
    r.detail = r.passed ? "all identities hold" : "identity violated";
    return r;
}

inline CheckResult riemann_roch_agreement(long long box) {
    CheckResult r{"riemann-roch-agreement",
                  "closed-form chi and p_a match generic Riemann-Roch and adjunction over "
                  "the box",
                  true, ""};
    long long mismatches = 0;
    long long classes = 0;
    for (const LatticeType t : {LatticeType::Even, LatticeType::Odd}) {
        const SurfaceModel& m = SurfaceModel::of(t);
        for (long long x = -box; x <= box; ++x) {
            for (long long y = -box; y <= box; ++y) {
                const DivisorClass d(x, y);
                ++classes;
                const BigInt chi = euler_characteristic(m, d);
                const BigInt pa = arithmetic_genus(m, d);
                const BigInt chi_generic =
                    detail::half_exact(intersect(m, d, d - m.canonical()), "selfcheck") +
                    BigInt(1);
                const BigInt pa_generic =
                    detail::half_exact(intersect(m, m.canonical(), d) +
                                           self_intersection(m, d),
                                       "selfcheck") +
                    BigInt(1);
                if (chi != chi_generic || pa != pa_generic) ++mismatches;
            }
        }
    }
    r.passed = mismatches == 0;
    r.detail = std::to_string(classes) + " classes checked, " + std::to_string(mismatches) +
               " mismatches";
    return r;
}

inline CheckResult cone_laws(long long box) {
    CheckResult r{"cone-laws",
                  "ample iff nef and big; admissible iff p_a >= 1, K.C > 0 and C^2 >= 0; "
                  "nef ray test matches the closed-form inequality",
                  true, ""};
    long long violations = 0;
    for (const LatticeType t : {LatticeType::Even, LatticeType::Odd}) {
        const SurfaceModel& m = SurfaceModel::of(t);
        for (long long x = -box; x <= box; ++x) {
            for (long long y = -box; y <= box; ++y) {
                const DivisorClass d(x, y);
                if (is_ample(m, d) != (is_nef(m, d) && is_big(m, d))) ++violations;
                const bool adm = curve_class_admissible(m, d);
                const bool numeric = arithmetic_genus(m, d) >= BigInt(1) &&
                                     intersect(m, m.canonical(), d) > BigInt(0) &&
                                     !self_intersection(m, d).is_negative();
                if (adm != numeric) ++violations;
                const bool nef_closed =
                    t == LatticeType::Even ? (x >= 0 && y >= 0)
                                           : (x >= (y < 0 ? -y : y));
                if (is_nef(m, d) != nef_closed) ++violations;
            }
        }
    }
    r.passed = violations == 0;
    r.detail = std::to_string(violations) + " violations";
    return r;
}

inline CheckResult genus_floor(long long box) {
    CheckResult r{"genus-floor", "every admissible curve class in the box has p_a >= 2", true,
                  ""};
    long long violations = 0;
    for (const LatticeType t : {LatticeType::Even, LatticeType::Odd}) {
        const SurfaceModel& m = SurfaceModel::of(t);
        for (long long x = -box; x <= box; ++x) {
            for (long long y = -box; y <= box; ++y) {
                const DivisorClass d(x, y);
                if (curve_class_admissible(m, d) && arithmetic_genus(m, d) < BigInt(2))
                    ++violations;
            }
        }
    }
    r.passed = violations == 0;
    r.detail = std::to_string(violations) + " violations";
    return r;
}

inline CheckResult certificate_clean(const Certificate& cert) {
    const std::string model = to_string(cert.model);
    CheckResult r{"p4-" + model,
                  "non-embedding certificate for the " + model +
                      " model concludes \"no solution\"",
                  cert.conclusion == "no solution" && cert.residual_zero_hits.empty() &&
                      cert.exhaustive_box_clean,
                  ""};
    r.detail = "conclusion: " + cert.conclusion + "; " +
               std::to_string(cert.candidates_examined) + " classes swept";
    return r;
}

inline CheckResult low_genus_against_sweep(const SurfaceModel& m, long long g_max) {
    const std::string model = to_string(m.lattice());
    CheckResult r{"low-genus-" + model,
                  "genus enumerator for the " + model +
                      " model agrees with a direct sweep of the admissible region",
                  true, ""};
    const auto lists = enumerate_low_genus(m, g_max, false);
    const long long bound = 2 * g_max + 2;
    for (const GenusClassList& list : lists) {
        std::vector<DivisorClass> swept;
        for (long long x = 0; x <= bound; ++x) {
            for (long long y = -bound; y <= bound; ++y) {
                const DivisorClass c(x, y);
                if (curve_class_admissible(m, c) &&
                    arithmetic_genus(m, c) == BigInt(list.genus))
                    swept.push_back(c);
            }
        }
        std::vector<DivisorClass> enumerated;
        for (const GenusClassEntry& e : list.classes) enumerated.push_back(e.cls);
        for (const GenusClassEntry& e : list.excluded) enumerated.push_back(e.cls);
        std::sort(enumerated.begin(), enumerated.end());
        if (enumerated != swept) {
            r.passed = false;
            r.detail = "disagreement at genus " + std::to_string(list.genus);
        }
    }
    if (r.passed) r.detail = "agrees for every genus up to " + std::to_string(g_max);
    return r;
}

inline CheckResult specialization_identity(long long box) {
    CheckResult r{"specialization-identity",
                  "double point residual equals 2x the specialized form (even) and equals "
                  "it (odd) over the box",
                  true, ""};
    long long violations = 0;
    for (long long x = -box; x <= box; ++x) {
        for (long long y = -box; y <= box; ++y) {
            const DivisorClass d(x, y);
            if (double_point_residual(SurfaceModel::even(), d) !=
                BigInt(2) * specialized_residual(SurfaceModel::even(), d))
                ++violations;
            if (double_point_residual(SurfaceModel::odd(), d) !=
                specialized_residual(SurfaceModel::odd(), d))
                ++violations;
        }
    }
    r.passed = violations == 0;
    r.detail = std::to_string(violations) + " violations";
    return r;
}

inline CheckResult cohomology_partition(long long box) {
    CheckResult r{"cohomology-partition",
                  "every admissible class receives exactly one case tag with the right "
                  "sign of chi; the even model never yields the undetermined tag",
                  true, ""};
    long long violations = 0;
    for (const LatticeType t : {LatticeType::Even, LatticeType::Odd}) {
        const SurfaceModel& m = SurfaceModel::of(t);
        for (long long x = -box; x <= box; ++x) {
            for (long long y = -box; y <= box; ++y) {
                const DivisorClass c(x, y);
                if (!curve_class_admissible(m, c)) continue;
                const BoundedCohomologyCase cs = bounded_cohomology_case(m, c);
                switch (cs.case_tag) {
                case CohomologyCaseTag::ChiPositive:
                    if (cs.chi < BigInt(1)) ++violations;
                    break;
                case CohomologyCaseTag::ChiZero:
                    if (!cs.chi.is_zero()) ++violations;
                    break;
                case CohomologyCaseTag::PencilRay:
                    if (t == LatticeType::Even &&
                        cs.chi != BigInt(1) - cs.pencil_multiple)
                        ++violations;
                    break;
                case CohomologyCaseTag::UndeterminedOddDiagonalShift:
                    if (t == LatticeType::Even) ++violations;
                    break;
                }
            }
        }
    }
    r.passed = violations == 0;
    r.detail = std::to_string(violations) + " violations";
    return r;
}

inline CheckResult certificate_determinism(const SurfaceModel& m, long long p4_box,
                                           const Certificate& first) {
    CheckResult r{"certificate-determinism-" + to_string(m.lattice()),
                  "two runs of the " + to_string(m.lattice()) +
                      " verifier produce byte-identical certificates",
                  true, ""};
    const Certificate second = verify_no_p4_embedding(m, p4_box);
    const std::string a = nlohmann::json(first).dump(2) + to_text(first);
    const std::string b = nlohmann::json(second).dump(2) + to_text(second);
    r.passed = a == b;
    r.detail = r.passed ? "byte-identical" : "certificates differ";
    return r;
}

} // namespace selfcheck

struct FullReport {
    std::vector<CheckResult> checks;
    Certificate even_certificate;
    Certificate odd_certificate;
    std::vector<GenusClassList> even_low_genus_simply_connected;
    std::vector<GenusClassList> odd_low_genus;
    bool all_passed = false;
};

// Runs the whole verification suite on both models and bundles the evidence.
inline FullReport build_full_report(long long box = 100, long long p4_box = 10000) {
    FullReport rep;
    rep.even_certificate = verify_no_p4_embedding(SurfaceModel::even(), p4_box);
    rep.odd_certificate = verify_no_p4_embedding(SurfaceModel::odd(), p4_box);
    rep.even_low_genus_simply_connected =
        enumerate_low_genus(SurfaceModel::even(), 5, true);
    rep.odd_low_genus = enumerate_low_genus(SurfaceModel::odd(), 5, false);

    rep.checks.push_back(selfcheck::canonical_invariants());
    rep.checks.push_back(selfcheck::riemann_roch_agreement(box));
    rep.checks.push_back(selfcheck::cone_laws(box));
    rep.checks.push_back(selfcheck::genus_floor(box));
    rep.checks.push_back(selfcheck::certificate_clean(rep.even_certificate));
    rep.checks.push_back(selfcheck::certificate_clean(rep.odd_certificate));
    rep.checks.push_back(selfcheck::low_genus_against_sweep(SurfaceModel::even(), 5));
    rep.checks.push_back(selfcheck::low_genus_against_sweep(SurfaceModel::odd(), 5));
    rep.checks.push_back(selfcheck::specialization_identity(50));
    rep.checks.push_back(selfcheck::cohomology_partition(box));
    rep.checks.push_back(selfcheck::certificate_determinism(SurfaceModel::even(), p4_box,
                                                            rep.even_certificate));
    rep.checks.push_back(selfcheck::certificate_determinism(SurfaceModel::odd(), p4_box,
                                                            rep.odd_certificate));

    rep.all_passed = true;
    for (const CheckResult& c : rep.checks) rep.all_passed = rep.all_passed && c.passed;
    return rep;
}

inline void to_json(nlohmann::json& j, const CheckResult& c) {
    j = nlohmann::json{{"id", c.id},
                       {"description", c.description},
                       {"passed", c.passed},
                       {"detail", c.detail}};
}

inline void to_json(nlohmann::json& j, const FullReport& r) {
    j = nlohmann::json{{"schema", kSchemaVersion},
                       {"checks", r.checks},
                       {"certificates",
                        {{"even", r.even_certificate}, {"odd", r.odd_certificate}}},
                       {"low_genus",
                        {{"even_simply_connected", r.even_low_genus_simply_connected},
                         {"odd", r.odd_low_genus}}},
                       {"all_passed", r.all_passed}};
}

} // namespace fakequadric
