#include <doctest.h>

#include "fakequadric/cohomology.hpp"

using namespace fakequadric;

TEST_CASE("h2 vanishing criterion") {
    const SurfaceModel& even = SurfaceModel::even();
    const SurfaceModel& odd = SurfaceModel::odd();
    CHECK_FALSE(h2_vanishes(even, DivisorClass(2, 2))); // K - D = 0 is effective
    CHECK(h2_vanishes(even, DivisorClass(3, 3)));       // K - D = (-1,-1)
    CHECK(h2_vanishes(odd, DivisorClass(4, 0)));        // K - D = (-1,-1) fails x >= |y|
    CHECK_FALSE(h2_vanishes(odd, DivisorClass(0, 0)));  // K - D = K is effective
}

TEST_CASE("h0 lower bound with the canonical carve-out") {
    const SurfaceModel& even = SurfaceModel::even();
    const SurfaceModel& odd = SurfaceModel::odd();
    auto lb = h0_lower_bound(even, DivisorClass(2, 3));
    REQUIRE(lb.has_value());
    CHECK(*lb == BigInt(2));
    CHECK_FALSE(h0_lower_bound(even, DivisorClass(2, 2)).has_value()); // D = K
    CHECK_FALSE(h0_lower_bound(odd, DivisorClass(3, -1)).has_value()); // D = K
    auto lo = h0_lower_bound(odd, DivisorClass(4, -1)); // x+y = 3 > 1, x-y = 5 > 2
    REQUIRE(lo.has_value());
    CHECK(*lo == BigInt(3)); // chi = (2)(3)/2, confirmed by D^2 = 15, K.D = 11
    CHECK_FALSE(h0_lower_bound(even, DivisorClass(1, 7)).has_value());
    CHECK_FALSE(h0_lower_bound(odd, DivisorClass(5, 3)).has_value()); // x-y = 2 fails
}

TEST_CASE("Kodaira regime pins h0 exactly") {
    const SurfaceModel& even = SurfaceModel::even();
    const SurfaceModel& odd = SurfaceModel::odd();
    auto he = kodaira_exact_h0(even, DivisorClass(3, 3));
    REQUIRE(he.has_value());
    CHECK(*he == BigInt(4));
    auto ho = kodaira_exact_h0(odd, DivisorClass(6, 0)); // x-3 = 3 > |y+1| = 1
    REQUIRE(ho.has_value());
    CHECK(*ho == BigInt(10));
    CHECK_FALSE(kodaira_exact_h0(even, DivisorClass(3, 2)).has_value());
    CHECK_FALSE(kodaira_exact_h0(odd, DivisorClass(3, -1)).has_value()); // D - K = 0
}

TEST_CASE("cohomology bounds invariants over the box") {
    for (const LatticeType t : {LatticeType::Even, LatticeType::Odd}) {
        const SurfaceModel& m = SurfaceModel::of(t);
        for (long long x = -40; x <= 40; ++x)
            for (long long y = -40; y <= 40; ++y) {
                const CohomologyBounds b = cohomology_bounds(m, DivisorClass(x, y));
                if (b.h0_exact) {
                    CHECK(*b.h0_exact == b.chi);
                    CHECK(b.h2_zero);
                    // the Kodaira regime sits inside the lower-bound regime
                    REQUIRE(b.h0_lower.has_value());
                    CHECK(*b.h0_lower == *b.h0_exact);
                }
                if (b.h0_lower) {
                    CHECK(b.h2_zero);
                    CHECK(*b.h0_lower == b.chi);
                    CHECK(*b.h0_lower >= BigInt(1));
                }
            }
    }
}

TEST_CASE("bounded cohomology cases on pinned classes") {
    const SurfaceModel& even = SurfaceModel::even();
    const SurfaceModel& odd = SurfaceModel::odd();

    const BoundedCohomologyCase a = bounded_cohomology_case(even, DivisorClass(2, 2));
    CHECK(a.case_tag == CohomologyCaseTag::ChiPositive);
    CHECK(a.chi == BigInt(1));
    CHECK(a.relation_text() == "h1 < h0");
    CHECK_FALSE(a.conditional);

    const BoundedCohomologyCase b = bounded_cohomology_case(even, DivisorClass(1, 5));
    CHECK(b.case_tag == CohomologyCaseTag::ChiZero);
    CHECK(b.chi == BigInt(0));
    CHECK(b.relation_text() == "h1 = h0");

    const BoundedCohomologyCase c = bounded_cohomology_case(even, DivisorClass(0, 3));
    CHECK(c.case_tag == CohomologyCaseTag::PencilRay);
    CHECK(c.chi == BigInt(-2));
    CHECK(c.pencil_multiple == BigInt(3));
    CHECK(c.offset() == BigInt(2));
    CHECK(c.relation_text() == "h1 = h0 + 2, h0 <= 2");
    CHECK(c.conditional);

    const BoundedCohomologyCase d = bounded_cohomology_case(odd, DivisorClass(3, 2));
    CHECK(d.case_tag == CohomologyCaseTag::UndeterminedOddDiagonalShift);
    CHECK(d.chi == BigInt(-2));
    CHECK(d.relation_text() == "h0 - h1 = -2 (sign undetermined)");

    // precedence on the overlaps: the chi = 0 strips win over the ray cases
    CHECK(bounded_cohomology_case(even, DivisorClass(1, 0)).case_tag ==
          CohomologyCaseTag::ChiZero);
    CHECK(bounded_cohomology_case(even, DivisorClass(0, 1)).case_tag ==
          CohomologyCaseTag::ChiZero);
    CHECK(bounded_cohomology_case(odd, DivisorClass(1, -1)).case_tag ==
          CohomologyCaseTag::ChiZero);
    CHECK(bounded_cohomology_case(odd, DivisorClass(2, -2)).case_tag ==
          CohomologyCaseTag::PencilRay);
    const BoundedCohomologyCase ray = bounded_cohomology_case(odd, DivisorClass(2, 2));
    CHECK(ray.case_tag == CohomologyCaseTag::PencilRay);
    CHECK(ray.pencil_multiple == BigInt(2));
    CHECK(ray.chi == BigInt(-3)); // chi(k(H+F)) = 1 - 2k

    CHECK_THROWS_AS(bounded_cohomology_case(even, DivisorClass(-1, 3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(bounded_cohomology_case(odd, DivisorClass(0, 0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(bounded_cohomology_case(odd, DivisorClass(2, 3)),
                    std::invalid_argument);
}

TEST_CASE("case analysis partitions the admissible classes with correct chi signs") {
    for (const LatticeType t : {LatticeType::Even, LatticeType::Odd}) {
        const SurfaceModel& m = SurfaceModel::of(t);
        for (long long x = -40; x <= 40; ++x)
            for (long long y = -40; y <= 40; ++y) {
                const DivisorClass cls(x, y);
                if (!curve_class_admissible(m, cls)) continue;
                const BoundedCohomologyCase cs = bounded_cohomology_case(m, cls);
                CHECK(cs.chi == euler_characteristic(m, cls));
                switch (cs.case_tag) {
                case CohomologyCaseTag::ChiPositive:
                    CHECK(cs.chi >= BigInt(1));
                    CHECK(cs.relation == CohomologyRelation::H1LessThanH0);
                    break;
                case CohomologyCaseTag::ChiZero:
                    CHECK(cs.chi == BigInt(0));
                    CHECK(cs.relation == CohomologyRelation::H1EqualsH0);
                    break;
                case CohomologyCaseTag::PencilRay: {
                    CHECK(cs.relation == CohomologyRelation::H1EqualsH0PlusOffset);
                    CHECK(cs.conditional);
                    CHECK(cs.pencil_multiple >= BigInt(1));
                    if (t == LatticeType::Even)
                        CHECK(cs.chi == BigInt(1) - cs.pencil_multiple);
                    break;
                }
                case CohomologyCaseTag::UndeterminedOddDiagonalShift:
                    CHECK(t == LatticeType::Odd);
                    CHECK(cs.chi == -BigInt(y)); // chi = -y on the x = y+1 strip
                    CHECK(cs.relation == CohomologyRelation::H0MinusH1EqualsChi);
                    break;
                }
            }
    }
}
