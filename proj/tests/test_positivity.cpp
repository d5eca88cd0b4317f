#include <doctest.h>

#include <cstdlib>

#include "fakequadric/positivity.hpp"

using namespace fakequadric;

TEST_CASE("admissible curve classes on pinned examples") {
    const SurfaceModel& even = SurfaceModel::even();
    const SurfaceModel& odd = SurfaceModel::odd();
    CHECK_FALSE(curve_class_admissible(even, DivisorClass(-1, 3)));
    CHECK(curve_class_admissible(odd, DivisorClass(1, -1)));
    CHECK_FALSE(curve_class_admissible(odd, DivisorClass(2, 3)));
    CHECK(curve_class_admissible(even, DivisorClass(1, 0)));
    CHECK(curve_class_admissible(even, DivisorClass(0, 1)));
    CHECK_FALSE(curve_class_admissible(even, DivisorClass(0, 0)));
    CHECK_FALSE(curve_class_admissible(odd, DivisorClass(0, 0)));
    // the would-be negative ray y = x + 1 is not admissible on the odd model
    CHECK_FALSE(curve_class_admissible(odd, DivisorClass(0, 1)));
    CHECK_FALSE(curve_class_admissible(odd, DivisorClass(3, 4)));
}

TEST_CASE("effectivity necessary condition on pinned examples") {
    const SurfaceModel& even = SurfaceModel::even();
    const SurfaceModel& odd = SurfaceModel::odd();
    CHECK(effective_necessary(even, DivisorClass(2, 2)));
    CHECK_FALSE(effective_necessary(odd, DivisorClass(1, -2)));
    CHECK(effective_necessary(odd, DivisorClass(3, -1)));
    CHECK(effective_necessary(even, DivisorClass(0, 0))); // empty divisor
    CHECK(effective_necessary(odd, DivisorClass(0, 0)));
}

TEST_CASE("ampleness criterion on pinned examples") {
    const SurfaceModel& even = SurfaceModel::even();
    const SurfaceModel& odd = SurfaceModel::odd();
    CHECK(is_ample(even, DivisorClass(2, 2)));
    CHECK(is_ample(odd, DivisorClass(3, -1)));
    CHECK_FALSE(is_ample(even, DivisorClass(0, 5)));
    CHECK_FALSE(is_ample(odd, DivisorClass(1, 1)));
    CHECK_FALSE(is_ample(even, DivisorClass(0, 0)));
}

TEST_CASE("nefness by the ray test on pinned examples") {
    const SurfaceModel& even = SurfaceModel::even();
    const SurfaceModel& odd = SurfaceModel::odd();
    CHECK(is_nef(even, DivisorClass(1, 0)));   // boundary, not ample
    CHECK(is_nef(odd, DivisorClass(1, 1)));    // boundary ray itself
    CHECK_FALSE(is_nef(odd, DivisorClass(0, 1)));
    CHECK(is_nef(even, DivisorClass(0, 0)));
    CHECK_FALSE(is_ample(even, DivisorClass(1, 0)));
    CHECK_FALSE(is_ample(odd, DivisorClass(1, 1)));
}

TEST_CASE("bigness on pinned examples") {
    CHECK(is_big(SurfaceModel::even(), DivisorClass(1, 1)));
    CHECK(is_big(SurfaceModel::odd(), DivisorClass(2, 1)));
    CHECK_FALSE(is_big(SurfaceModel::even(), DivisorClass(3, 0))); // D^2 = 0
    CHECK_FALSE(is_big(SurfaceModel::even(), DivisorClass(0, 0)));
    CHECK_FALSE(is_big(SurfaceModel::odd(), DivisorClass(-2, 0))); // D^2 > 0 but not effective
}

TEST_CASE("zero class conventions") {
    for (const LatticeType t : {LatticeType::Even, LatticeType::Odd}) {
        const SurfaceModel& m = SurfaceModel::of(t);
        const DivisorClass zero(0, 0);
        CHECK(effective_necessary(m, zero));
        CHECK(is_nef(m, zero));
        CHECK_FALSE(is_big(m, zero));
        CHECK_FALSE(is_ample(m, zero));
        CHECK_FALSE(curve_class_admissible(m, zero));
    }
}

TEST_CASE("cone rays: both cones agree, rays are isotropic and generate") {
    const ConeRays even = cone_rays(SurfaceModel::even());
    CHECK(even.effective_rays[0] == DivisorClass(0, 1));
    CHECK(even.effective_rays[1] == DivisorClass(1, 0));
    CHECK(even.nef_rays == even.effective_rays);
    const ConeRays odd = cone_rays(SurfaceModel::odd());
    CHECK(odd.effective_rays[0] == DivisorClass(1, -1));
    CHECK(odd.effective_rays[1] == DivisorClass(1, 1));
    CHECK(odd.nef_rays == odd.effective_rays);
    for (const LatticeType t : {LatticeType::Even, LatticeType::Odd}) {
        const SurfaceModel& m = SurfaceModel::of(t);
        for (const DivisorClass& ray : cone_rays(m).effective_rays) {
            CHECK(self_intersection(m, ray) == BigInt(0));
            CHECK(curve_class_admissible(m, ray));
        }
        // membership oracle: d is a nonnegative rational combination of the
        // two rays iff the closed-form region inequality holds
        for (long long x = -40; x <= 40; ++x)
            for (long long y = -40; y <= 40; ++y) {
                bool combo;
                if (t == LatticeType::Even) {
                    combo = x >= 0 && y >= 0; // d = x*(1,0) + y*(0,1)
                } else {
                    // d = a(1,1) + b(1,-1) with 2a = x+y, 2b = x-y
                    combo = x + y >= 0 && x - y >= 0;
                }
                CHECK(effective_necessary(m, DivisorClass(x, y)) == combo);
            }
    }
}

TEST_CASE("cone laws hold exhaustively on the box") {
    for (const LatticeType t : {LatticeType::Even, LatticeType::Odd}) {
        const SurfaceModel& m = SurfaceModel::of(t);
        for (long long x = -40; x <= 40; ++x)
            for (long long y = -40; y <= 40; ++y) {
                const DivisorClass d(x, y);
                const bool nef_closed =
                    t == LatticeType::Even ? (x >= 0 && y >= 0) : (x >= std::abs(y));
                CHECK(is_nef(m, d) == nef_closed);
                CHECK(is_ample(m, d) == (is_nef(m, d) && is_big(m, d)));
                const bool numeric = arithmetic_genus(m, d) >= BigInt(1) &&
                                     intersect(m, m.canonical(), d) > BigInt(0) &&
                                     !self_intersection(m, d).is_negative();
                CHECK(curve_class_admissible(m, d) == numeric);
                if (curve_class_admissible(m, d))
                    CHECK(arithmetic_genus(m, d) >= BigInt(2));
            }
    }
}

TEST_CASE("K is ample on both models") {
    CHECK(is_ample(SurfaceModel::even(), canonical_class(SurfaceModel::even())));
    CHECK(is_ample(SurfaceModel::odd(), canonical_class(SurfaceModel::odd())));
}

TEST_CASE("positivity verdict carries the governing rule") {
    const PositivityVerdict k_even =
        positivity_verdict(SurfaceModel::even(), DivisorClass(2, 2));
    CHECK(k_even.ample);
    CHECK(k_even.nef);
    CHECK(k_even.big);
    CHECK(k_even.effective_necessary);
    CHECK(k_even.governing_rule == "ample-criterion-even");
    const PositivityVerdict boundary =
        positivity_verdict(SurfaceModel::even(), DivisorClass(1, 0));
    CHECK(boundary.nef);
    CHECK_FALSE(boundary.ample);
    CHECK(boundary.governing_rule == "nef-boundary-even");
    const PositivityVerdict outside =
        positivity_verdict(SurfaceModel::odd(), DivisorClass(0, 3));
    CHECK_FALSE(outside.effective_necessary);
    CHECK(outside.governing_rule == "effective-necessary-odd");
    const PositivityVerdict k_odd =
        positivity_verdict(SurfaceModel::odd(), DivisorClass(3, -1));
    CHECK(k_odd.governing_rule == "ample-criterion-odd");
    // ample implies everything else, across the box
    for (long long x = -25; x <= 25; ++x)
        for (long long y = -25; y <= 25; ++y)
            for (const LatticeType t : {LatticeType::Even, LatticeType::Odd}) {
                const PositivityVerdict v =
                    positivity_verdict(SurfaceModel::of(t), DivisorClass(x, y));
                if (v.ample) {
                    CHECK(v.nef);
                    CHECK(v.big);
                    CHECK(v.effective_necessary);
                }
            }
}

TEST_CASE("rational curve exclusion applies only to genus-0 classes") {
    const SurfaceModel& even = SurfaceModel::even();
    const SurfaceModel& odd = SurfaceModel::odd();
    const ExclusionReport a = rational_curve_exclusion(even, DivisorClass(-1, 2));
    CHECK(a.p_a == BigInt(0));
    CHECK(a.k_dot == BigInt(2));
    CHECK(a.lm95_bound == 0);
    CHECK(a.excluded);
    const ExclusionReport b = rational_curve_exclusion(odd, DivisorClass(0, 2));
    CHECK(b.k_dot == BigInt(2));
    CHECK(b.excluded);
    // genus-0 family x H + (x+2) F on the odd model
    const ExclusionReport c = rational_curve_exclusion(odd, DivisorClass(1, 3));
    CHECK(c.k_dot == BigInt(6));
    CHECK(c.excluded);
    // genus-0 class with K.C <= 0 is not excluded by this inequality
    const ExclusionReport d = rational_curve_exclusion(even, DivisorClass(-1, -3));
    CHECK(d.k_dot == BigInt(-8));
    CHECK_FALSE(d.excluded);
    // a nonzero-genus input violates the precondition
    CHECK_THROWS_AS(rational_curve_exclusion(even, DivisorClass(1, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(rational_curve_exclusion(odd, DivisorClass(1, 2)),
                    std::invalid_argument); // p_a(1,2) = 2, on the y = x+1 ray
}

TEST_CASE("negative curve hypothesis is self-contradictory") {
    const SurfaceModel& odd = SurfaceModel::odd();
    const NegativeCurveReport r0 = negative_curve_hypothesis(odd, BigInt(0));
    CHECK(r0.curve_class == DivisorClass(0, 1));
    CHECK(r0.self_int == BigInt(-1));
    CHECK(r0.p_a == BigInt(1));
    const NegativeCurveReport r1 = negative_curve_hypothesis(odd, BigInt(1));
    CHECK(r1.self_int == BigInt(-3));
    CHECK(r1.p_a == BigInt(2));
    const NegativeCurveReport r5 = negative_curve_hypothesis(odd, BigInt(5));
    CHECK(r5.self_int == BigInt(-11));
    CHECK(r5.p_a == BigInt(6));
    // for every x0: self-intersection negative, genus positive
    for (long long x0 = 0; x0 <= 50; ++x0) {
        const NegativeCurveReport r = negative_curve_hypothesis(odd, BigInt(x0));
        CHECK(r.self_int == BigInt(-(2 * x0 + 1)));
        CHECK(r.p_a == BigInt(x0 + 1));
    }
    CHECK_THROWS_AS(negative_curve_hypothesis(SurfaceModel::even(), BigInt(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(negative_curve_hypothesis(odd, BigInt(-1)), std::invalid_argument);
}
