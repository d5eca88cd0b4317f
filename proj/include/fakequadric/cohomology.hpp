#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "fakequadric/positivity.hpp"

namespace fakequadric {

// h^2(O(D)) = h^0(O(K-D)) by Serre duality, so h^2 vanishes as soon as K-D
// fails the necessary effectivity condition. A false return means "not
// decidable by this criterion", never "h^2 is nonzero".
inline bool h2_vanishes(const SurfaceModel& model, const DivisorClass& d) {
    return !effective_necessary(model, model.canonical() - d);
}

// Lower bound h^0 >= chi(D) >= 1, valid when
//   even: x, y >= 2            odd: x + y > 1 and x - y > 2
// and D is not the canonical class (the one excluded case).
inline std::optional<BigInt> h0_lower_bound(const SurfaceModel& model, const DivisorClass& d) {
    bool hypothesis = false;
    if (model.lattice() == LatticeType::Even) {
        hypothesis = d.x >= BigInt(2) && d.y >= BigInt(2);
    } else {
        hypothesis = d.x + d.y > BigInt(1) && d.x - d.y > BigInt(2);
    }
    if (!hypothesis || d == model.canonical()) return std::nullopt;
    return euler_characteristic(model, d);
}

// When D - K is ample, Kodaira vanishing kills h^1 and h^2 and pins
// h^0 = chi(D) exactly. D - K ample means: even x, y >= 3; odd x-3 > |y+1|.
inline std::optional<BigInt> kodaira_exact_h0(const SurfaceModel& model, const DivisorClass& d) {
    if (!is_ample(model, d - model.canonical())) return std::nullopt;
    return euler_characteristic(model, d);
}

// Everything the lattice alone pins down about cohomology dimensions:
// relations and bounds, never invented standalone values.
struct CohomologyBounds {
    bool h2_zero = false;
    std::optional<BigInt> h0_lower;
    std::optional<BigInt> h0_exact;
    BigInt chi;

    friend bool operator==(const CohomologyBounds&, const CohomologyBounds&) = default;
};

inline CohomologyBounds cohomology_bounds(const SurfaceModel& model, const DivisorClass& d) {
    CohomologyBounds b;
    b.h2_zero = h2_vanishes(model, d);
    b.h0_lower = h0_lower_bound(model, d);
    b.h0_exact = kodaira_exact_h0(model, d);
    b.chi = euler_characteristic(model, d);
    return b;
}

// Case analysis behind the bounded cohomology property. Each admissible
// curve class lands in exactly one case, with a proven h^1/h^0 relation:
//
//   ChiPositive  chi >= 1, h^2 = 0, so h1 < h0.
//   ChiZero      chi = 0, h^2 = 0, so h1 = h0.
//   PencilRay    class is a multiple k of an isotropic ray; the pencil
//                structure gives h0 <= 2 and h1 = h0 - chi. The relation
//                presumes the ray pencil is basepoint-free, which is not a
//                lattice-level fact; `conditional` records that proviso.
//   UndeterminedOddDiagonalShift
//                odd classes on x = y+1: only h0 - h1 = chi is known, and
//                chi = -y < 0, so neither side is bounded by the other
//                without extra geometric input.
enum class CohomologyCaseTag {
    ChiPositive,
    ChiZero,
    PencilRay,
    UndeterminedOddDiagonalShift,
};

enum class CohomologyRelation {
    H1LessThanH0,
    H1EqualsH0,
    H1EqualsH0PlusOffset, // offset = -chi, together with h0 <= 2
    H0MinusH1EqualsChi,   // sign undetermined
};

struct BoundedCohomologyCase {
    CohomologyCaseTag case_tag = CohomologyCaseTag::ChiPositive;
    BigInt chi;
    CohomologyRelation relation = CohomologyRelation::H1LessThanH0;
    BigInt pencil_multiple; // the ray multiple k; zero unless PencilRay
    bool conditional = false;

    BigInt offset() const { return -chi; }

    std::string relation_text() const {
        switch (relation) {
        case CohomologyRelation::H1LessThanH0:
            return "h1 < h0";
        case CohomologyRelation::H1EqualsH0:
            return "h1 = h0";
        case CohomologyRelation::H1EqualsH0PlusOffset:
            return "h1 = h0 + " + offset().to_string() + ", h0 <= 2";
        case CohomologyRelation::H0MinusH1EqualsChi:
            return "h0 - h1 = " + chi.to_string() + " (sign undetermined)";
        }
        return {};
    }

    friend bool operator==(const BoundedCohomologyCase&, const BoundedCohomologyCase&) = default;
};

inline BoundedCohomologyCase bounded_cohomology_case(const SurfaceModel& model,
                                                     const DivisorClass& c) {
    if (!curve_class_admissible(model, c))
        throw std::invalid_argument("bounded_cohomology_case: class " + c.to_string() +
                                    " is not an admissible curve class on the " +
                                    to_string(model.lattice()) + " model");
    BoundedCohomologyCase out;
    out.chi = euler_characteristic(model, c);
    if (model.lattice() == LatticeType::Even) {
        if (c.x >= BigInt(2) && c.y >= BigInt(2)) {
            out.case_tag = CohomologyCaseTag::ChiPositive;
            out.relation = CohomologyRelation::H1LessThanH0;
        } else if (c.x == BigInt(1) || c.y == BigInt(1)) {
            out.case_tag = CohomologyCaseTag::ChiZero;
            out.relation = CohomologyRelation::H1EqualsH0;
        } else { // x = 0 or y = 0: class is k*H or k*F with k >= 2
            out.case_tag = CohomologyCaseTag::PencilRay;
            out.relation = CohomologyRelation::H1EqualsH0PlusOffset;
            out.pencil_multiple = c.x.is_zero() ? c.y : c.x;
            out.conditional = true;
        }
        return out;
    }
    const BigInt s = c.x + c.y;
    const BigInt t = c.x - c.y;
    if (s > BigInt(1) && t > BigInt(2)) {
        out.case_tag = CohomologyCaseTag::ChiPositive;
        out.relation = CohomologyRelation::H1LessThanH0;
    } else if (s == BigInt(1) || t == BigInt(2)) {
        out.case_tag = CohomologyCaseTag::ChiZero;
        out.relation = CohomologyRelation::H1EqualsH0;
    } else if (s.is_zero() || t.is_zero()) { // class is k(H-F) or k(H+F)
        out.case_tag = CohomologyCaseTag::PencilRay;
        out.relation = CohomologyRelation::H1EqualsH0PlusOffset;
        out.pencil_multiple = c.x;
        out.conditional = true;
    } else { // x = y + 1, the one strip the lattice cannot settle
        out.case_tag = CohomologyCaseTag::UndeterminedOddDiagonalShift;
        out.relation = CohomologyRelation::H0MinusH1EqualsChi;
    }
    return out;
}

inline std::string to_string(CohomologyCaseTag tag) {
    switch (tag) {
    case CohomologyCaseTag::ChiPositive: return "chi-positive";
    case CohomologyCaseTag::ChiZero: return "chi-zero";
    case CohomologyCaseTag::PencilRay: return "pencil-ray";
    case CohomologyCaseTag::UndeterminedOddDiagonalShift:
        return "undetermined-odd-diagonal-shift";
    }
    return {};
}

inline std::string to_string(CohomologyRelation rel) {
    switch (rel) {
    case CohomologyRelation::H1LessThanH0: return "h1-lt-h0";
    case CohomologyRelation::H1EqualsH0: return "h1-eq-h0";
    case CohomologyRelation::H1EqualsH0PlusOffset: return "h1-eq-h0-plus-offset";
    case CohomologyRelation::H0MinusH1EqualsChi: return "h0-minus-h1-eq-chi";
    }
    return {};
}

} // namespace fakequadric
