#pragma once

#include <string>

#include "fakequadric/errors.hpp"
#include "fakequadric/lattice.hpp"

namespace fakequadric {

namespace detail {

// Exact division by two. The parity is asserted rather than assumed: an odd
// value here means a basis convention was broken somewhere upstream.
inline BigInt half_exact(const BigInt& v, const char* context) {
    if (!v.is_even())
        throw internal_consistency_error(std::string(context) + ": value " + v.to_string() +
                                         " is odd, cannot halve exactly");
    return v / BigInt(2);
}

} // namespace detail

// chi(O(D)) by the closed forms
//   even: (x-1)(y-1)
//   odd:  (x+y-1)(x-y-2)/2
// cross-checked on every call against generic Riemann-Roch
// chi = D.(D-K)/2 + chi(O).
inline BigInt euler_characteristic(const SurfaceModel& model, const DivisorClass& d) {
    BigInt closed;
    if (model.lattice() == LatticeType::Even) {
        closed = (d.x - BigInt(1)) * (d.y - BigInt(1));
    } else {
        closed = detail::half_exact((d.x + d.y - BigInt(1)) * (d.x - d.y - BigInt(2)),
                                    "euler_characteristic (odd closed form)");
    }
    const BigInt generic =
        detail::half_exact(intersect(model, d, d - model.canonical()),
                           "euler_characteristic (generic Riemann-Roch)") +
        BigInt(model.chi_structure_sheaf());
    if (closed != generic)
        throw internal_consistency_error(
            "euler_characteristic: closed form gives " + closed.to_string() +
            " but generic Riemann-Roch gives " + generic.to_string() + " for class " +
            d.to_string() + " on the " + to_string(model.lattice()) + " model");
    return closed;
}

// p_a(D) by the closed forms
//   even: (x+1)(y+1)
//   odd:  (x+y+1)(x-y+2)/2
// cross-checked against adjunction p_a = (K.D + D^2)/2 + 1.
inline BigInt arithmetic_genus(const SurfaceModel& model, const DivisorClass& d) {
    BigInt closed;
    if (model.lattice() == LatticeType::Even) {
        closed = (d.x + BigInt(1)) * (d.y + BigInt(1));
    } else {
        closed = detail::half_exact((d.x + d.y + BigInt(1)) * (d.x - d.y + BigInt(2)),
                                    "arithmetic_genus (odd closed form)");
    }
    const BigInt generic =
        detail::half_exact(intersect(model, model.canonical(), d) + self_intersection(model, d),
                           "arithmetic_genus (adjunction)") +
        BigInt(1);
    if (closed != generic)
        throw internal_consistency_error(
            "arithmetic_genus: closed form gives " + closed.to_string() +
            " but adjunction gives " + generic.to_string() + " for class " + d.to_string() +
            " on the " + to_string(model.lattice()) + " model");
    return closed;
}

struct GenusReport {
    BigInt p_a;      // arithmetic genus (K.D + D^2)/2 + 1
    BigInt chi;      // Euler characteristic D.(D-K)/2 + 1
    BigInt k_dot;    // K.D
    BigInt self_int; // D^2

    friend bool operator==(const GenusReport&, const GenusReport&) = default;
};

inline GenusReport genus_report(const SurfaceModel& model, const DivisorClass& d) {
    GenusReport r;
    r.p_a = arithmetic_genus(model, d);
    r.chi = euler_characteristic(model, d);
    r.k_dot = intersect(model, model.canonical(), d);
    r.self_int = self_intersection(model, d);
    return r;
}

} // namespace fakequadric
