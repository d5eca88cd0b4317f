#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "fakequadric/riemann_roch.hpp"

namespace fakequadric {

// Numerically necessary condition for effectivity. The zero class counts as
// effective (the empty divisor). Sufficiency is not claimed anywhere: on a
// fake quadric only the necessary direction is a numerical statement.
inline bool effective_necessary(const SurfaceModel& model, const DivisorClass& d) {
    if (model.lattice() == LatticeType::Even)
        return !d.x.is_negative() && !d.y.is_negative();
    return d.x >= d.y.abs();
}

// Region that can contain the class of a reduced irreducible curve:
//   even: x >= 0, y > 0  or  x > 0, y >= 0
//   odd:  x >= |y|, (x,y) != 0   (the would-be negative ray y = x+1 is
//          excluded: no negative curve exists on the odd model)
inline bool curve_class_admissible(const SurfaceModel& model, const DivisorClass& c) {
    if (model.lattice() == LatticeType::Even) {
        const bool x_nonneg = !c.x.is_negative();
        const bool y_nonneg = !c.y.is_negative();
        return (x_nonneg && c.y.sign() > 0) || (c.x.sign() > 0 && y_nonneg);
    }
    return c.x >= c.y.abs() && !c.is_zero();
}

// Ample iff criterion: even x > 0 and y > 0; odd x > |y|.
inline bool is_ample(const SurfaceModel& model, const DivisorClass& d) {
    if (model.lattice() == LatticeType::Even) return d.x.sign() > 0 && d.y.sign() > 0;
    return d.x > d.y.abs();
}

// Extremal rays of the effective and nef cones. On both models the two cones
// coincide and every ray is isotropic (r^2 = 0), as forced by a rank-2
// signature-(1,1) lattice with no negative curves.
struct ConeRays {
    std::array<DivisorClass, 2> effective_rays;
    std::array<DivisorClass, 2> nef_rays;
};

inline ConeRays cone_rays(const SurfaceModel& model) {
    ConeRays r;
    if (model.lattice() == LatticeType::Even) {
        r.effective_rays = {DivisorClass(0, 1), DivisorClass(1, 0)};
    } else {
        r.effective_rays = {DivisorClass(1, -1), DivisorClass(1, 1)};
    }
    r.nef_rays = r.effective_rays;
    return r;
}

// Nef test by pairing against both extremal curve rays.
inline bool is_nef(const SurfaceModel& model, const DivisorClass& d) {
    const ConeRays rays = cone_rays(model);
    for (const DivisorClass& ray : rays.effective_rays) {
        if (intersect(model, d, ray).is_negative()) return false;
    }
    return true;
}

// Big = positive self-intersection inside the effective cone. On these two
// models this is exactly the interior of the effective-necessary region.
inline bool is_big(const SurfaceModel& model, const DivisorClass& d) {
    return self_intersection(model, d).sign() > 0 && effective_necessary(model, d);
}

// Structured positivity answer with the rule that settled it.
struct PositivityVerdict {
    bool effective_necessary = false;
    bool nef = false;
    bool big = false;
    bool ample = false;
    std::string governing_rule;

    friend bool operator==(const PositivityVerdict&, const PositivityVerdict&) = default;
};

inline PositivityVerdict positivity_verdict(const SurfaceModel& model, const DivisorClass& d) {
    PositivityVerdict v;
    v.effective_necessary = effective_necessary(model, d);
    v.nef = is_nef(model, d);
    v.big = is_big(model, d);
    v.ample = is_ample(model, d);
    const bool even = model.lattice() == LatticeType::Even;
    if (v.ample) {
        v.governing_rule = even ? "ample-criterion-even" : "ample-criterion-odd";
    } else if (v.nef) {
        v.governing_rule = even ? "nef-boundary-even" : "nef-boundary-odd";
    } else {
        v.governing_rule = even ? "effective-necessary-even" : "effective-necessary-odd";
    }
    return v;
}

// A genus-0 class C in the curve region would satisfy K.C <= Delta + 2g - 2
// - chi_top = 4 + 0 - 2 - 2 = 0, so K.C > 0 excludes it. This is the
// mechanism that removes the stray genus-0 corners from the curve region.
// Only the g = 0 instantiation is meaningful here, hence the hard
// precondition on p_a.
struct ExclusionReport {
    DivisorClass curve_class;
    BigInt p_a;
    BigInt k_dot;
    long long lm95_bound = 0; // Delta + 2g - 2 - chi_top with g = 0, chi_top = 2
    bool excluded = false;

    friend bool operator==(const ExclusionReport&, const ExclusionReport&) = default;
};

inline ExclusionReport rational_curve_exclusion(const SurfaceModel& model,
                                                const DivisorClass& c) {
    ExclusionReport r;
    r.curve_class = c;
    r.p_a = arithmetic_genus(model, c);
    if (!r.p_a.is_zero())
        throw std::invalid_argument(
            "rational_curve_exclusion: requires arithmetic genus 0, class " + c.to_string() +
            " has p_a = " + r.p_a.to_string());
    r.k_dot = intersect(model, model.canonical(), c);
    r.lm95_bound = model.delta() + 2 * 0 - 2 - 2;
    r.excluded = r.k_dot > BigInt(r.lm95_bound);
    return r;
}

// The hypothetical negative curve on the odd model sits on the ray
// (x0, x0+1). Its numbers contradict each other: self-intersection
// -(2*x0+1) < 0 would force a rational singularity after contraction
// (p_a = 0), but the genus formula gives p_a = x0 + 1 > 0. This reports
// both numbers for any x0 >= 0.
struct NegativeCurveReport {
    DivisorClass curve_class;
    BigInt self_int;
    BigInt p_a;

    friend bool operator==(const NegativeCurveReport&, const NegativeCurveReport&) = default;
};

inline NegativeCurveReport negative_curve_hypothesis(const SurfaceModel& model,
                                                     const BigInt& x0) {
    if (model.lattice() != LatticeType::Odd)
        throw std::invalid_argument(
            "negative_curve_hypothesis: the hypothetical ray exists on the odd model only");
    if (x0.is_negative())
        throw std::invalid_argument("negative_curve_hypothesis: x0 must be nonnegative, got " +
                                    x0.to_string());
    NegativeCurveReport r;
    r.curve_class = DivisorClass(x0, x0 + BigInt(1));
    r.self_int = self_intersection(model, r.curve_class);
    r.p_a = arithmetic_genus(model, r.curve_class);
    return r;
}

} // namespace fakequadric
