#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fakequadric/positivity.hpp"

namespace fakequadric {

// Double point formula residual for a surface embedded in P^4 with
// hyperplane class D and d = D^2:
//   d^2 - 10d - 5 D.K - 2 K^2 + 12 + 12 p_a(S)
// Here K^2 = 8 and p_a(S) = p_g - q = 0, so the constant term is -4.
// The residual is zero exactly when the numerical embedding condition holds.
inline BigInt double_point_residual(const SurfaceModel& model, const DivisorClass& d) {
    const BigInt dd = self_intersection(model, d);
    const BigInt kd = intersect(model, model.canonical(), d);
    return dd * dd - BigInt(10) * dd - BigInt(5) * kd - BigInt(2 * model.k_squared()) +
           BigInt(12) + BigInt(12) * BigInt(model.geometric_genus() - model.irregularity());
}

// The same condition specialized to coordinates:
//   even: 2 x^2 y^2 - 10 x y - 5 x - 5 y - 2      (double residual / 2)
//   odd:  (x^2 - y^2 - 5)^2 - 5 (3 x + y) - 29    (equals the double residual)
inline BigInt specialized_residual(const SurfaceModel& model, const DivisorClass& d) {
    const BigInt& x = d.x;
    const BigInt& y = d.y;
    if (model.lattice() == LatticeType::Even) {
        return BigInt(2) * x * x * y * y - BigInt(10) * x * y - BigInt(5) * x -
               BigInt(5) * y - BigInt(2);
    }
    const BigInt q = x * x - y * y - BigInt(5);
    return q * q - BigInt(5) * (BigInt(3) * x + y) - BigInt(29);
}

namespace detail {

// 128-bit evaluation of the specialized residual for the box sweep. Exact
// for |x|, |y| <= 3e9 (the quartic term stays below 2^127).
inline __int128 specialized_residual_i128(LatticeType t, long long x, long long y) {
    const __int128 xi = x;
    const __int128 yi = y;
    if (t == LatticeType::Even)
        return 2 * xi * xi * yi * yi - 10 * xi * yi - 5 * xi - 5 * yi - 2;
    const __int128 q = xi * xi - yi * yi - 5;
    return q * q - 5 * (3 * xi + yi) - 29;
}

struct Line {
    long long x0, dx, y0, dy; // t |-> (x0 + dx*t, y0 + dy*t)
};

// The residual restricted to any of the edge-case lines is a quadratic in
// the line parameter. Recover its coefficients from three sample points and
// verify the degree on three more: six agreement points pin a polynomial of
// degree <= 4, so a silent transcription error cannot slip through.
inline std::array<BigInt, 3> restrict_residual_to_line(const SurfaceModel& model,
                                                       const Line& line) {
    const auto at = [&](long long t) {
        return specialized_residual(
            model, DivisorClass(line.x0 + line.dx * t, line.y0 + line.dy * t));
    };
    const BigInt q0 = at(0);
    const BigInt q1 = at(1);
    const BigInt q2 = at(2);
    const BigInt c2 = half_exact(q2 - BigInt(2) * q1 + q0, "restrict_residual_to_line");
    const BigInt c1 = q1 - q0 - c2;
    const BigInt c0 = q0;
    for (const long long t : {3LL, -1LL, 4LL}) {
        const BigInt expected = (c2 * BigInt(t) + c1) * BigInt(t) + c0;
        const BigInt actual = at(t);
        if (expected != actual)
            throw internal_consistency_error(
                "restrict_residual_to_line: interpolated quadratic gives " +
                expected.to_string() + " but direct evaluation gives " + actual.to_string() +
                " at t = " + std::to_string(t));
    }
    return {c0, c1, c2};
}

} // namespace detail

struct ResidualEntry {
    DivisorClass cls;
    BigInt residual;

    friend bool operator==(const ResidualEntry&, const ResidualEntry&) = default;
};

struct EdgeCaseRecord {
    std::string constraint;           // e.g. "x = 1" or "x - y = 2"
    std::string region;               // where solutions would have to lie
    BigInt a, b, c;                   // reduced quadratic a t^2 + b t + c = 0
    BigInt discriminant;              // b^2 - 4 a c
    bool discriminant_is_square = false;
    std::vector<ResidualEntry> roots_in_region; // empty unless a solution exists

    friend bool operator==(const EdgeCaseRecord&, const EdgeCaseRecord&) = default;
};

// Auditable record of one exhaustive non-embedding search. Two runs with the
// same arguments produce identical certificates: every list is
// deterministically ordered and no environment data enters.
struct Certificate {
    LatticeType model = LatticeType::Even;
    std::string equation;
    ResidualEntry canonical_case; // D = K, the carve-out, always tested
    std::vector<ResidualEntry> finite_region;
    std::vector<std::array<long long, 2>> skipped_parity_pairs; // odd model only
    std::vector<EdgeCaseRecord> edge_cases;
    long long search_box = 0;
    std::uint64_t candidates_examined = 0;
    bool exhaustive_box_clean = false;
    std::vector<ResidualEntry> residual_zero_hits;
    std::vector<std::string> notes;
    std::string conclusion;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

namespace detail {

inline void extract_edge_roots(const SurfaceModel& model, const Line& line,
                               EdgeCaseRecord& rec, Certificate& cert) {
    if (!rec.discriminant_is_square) return;
    const BigInt s = isqrt(rec.discriminant);
    const BigInt two_a = BigInt(2) * rec.a;
    for (const BigInt& num : {-rec.b + s, -rec.b - s}) {
        const auto [t, rem] = BigInt::divmod(num, two_a);
        if (!rem.is_zero()) continue;
        if (!t.fits_int64()) continue; // far outside any region of interest
        const long long ti = t.to_int64();
        const DivisorClass cls(line.x0 + line.dx * ti, line.y0 + line.dy * ti);
        if (!is_ample(model, cls)) continue;
        const BigInt residual = specialized_residual(model, cls);
        if (!residual.is_zero())
            throw internal_consistency_error(
                "extract_edge_roots: quadratic root " + cls.to_string() +
                " has residual " + residual.to_string() + ", expected 0");
        rec.roots_in_region.push_back({cls, residual});
        cert.residual_zero_hits.push_back({cls, residual});
    }
}

inline EdgeCaseRecord make_edge_case(const SurfaceModel& model, const Line& line,
                                     std::string constraint, std::string region,
                                     Certificate& cert) {
    EdgeCaseRecord rec;
    rec.constraint = std::move(constraint);
    rec.region = std::move(region);
    auto [c0, c1, c2] = restrict_residual_to_line(model, line);
    if (c2.is_negative()) {
        c0 = -c0;
        c1 = -c1;
        c2 = -c2;
    }
    const BigInt content = gcd(gcd(c2, c1), c0);
    if (content > BigInt(1)) {
        c0 = c0 / content;
        c1 = c1 / content;
        c2 = c2 / content;
    }
    rec.a = c2;
    rec.b = c1;
    rec.c = c0;
    rec.discriminant = rec.b * rec.b - BigInt(4) * rec.a * rec.c;
    rec.discriminant_is_square = is_perfect_square(rec.discriminant);
    extract_edge_roots(model, line, rec, cert);
    return rec;
}

} // namespace detail

// Certificate-producing verification that the numerical conditions for a
// holomorphic embedding in P^4 have no solution. Three sub-searches mirror
// the finite case analysis:
//   (a) the finite region cut out by the h^0 < 6 dimension bound,
//   (b) the boundary strips, each reduced to a one-variable quadratic whose
//       discriminant is tested for being a perfect square,
//   (c) a redundant sweep of every ample class with coordinates up to
//       box_bound, evaluating the residual directly.
// The canonical class, excluded from the dimension bound, is always tested
// on its own.
inline Certificate verify_no_p4_embedding(const SurfaceModel& model,
                                          long long box_bound = 10000) {
    if (box_bound < 100)
        throw std::invalid_argument("verify_no_p4_embedding: box_bound must be >= 100, got " +
                                    std::to_string(box_bound));
    if (box_bound > 3000000000LL)
        throw std::invalid_argument(
            "verify_no_p4_embedding: box_bound above 3e9 would overflow the sweep arithmetic");

    Certificate cert;
    cert.model = model.lattice();
    cert.search_box = box_bound;
    const bool even = model.lattice() == LatticeType::Even;
    cert.equation = even ? "2*x^2*y^2 - 10*x*y - 5*x - 5*y - 2 = 0"
                         : "(x^2 - y^2 - 5)^2 - 5*(3*x + y) - 29 = 0";

    // canonical carve-out
    cert.canonical_case = {model.canonical(), specialized_residual(model, model.canonical())};
    if (cert.canonical_case.residual.is_zero())
        cert.residual_zero_hits.push_back(cert.canonical_case);

    // (a) finite region
    if (even) {
        // ample, x,y >= 3, and h0 = (x-1)(y-1) < 6
        for (long long u = 2; u * 2 <= 5; ++u) {
            for (long long v = 2; u * v <= 5; ++v) {
                const DivisorClass cls(u + 1, v + 1);
                cert.finite_region.push_back({cls, specialized_residual(model, cls)});
            }
        }
        cert.notes.push_back(
            "equation and region are symmetric in x and y; edge cases for small y follow "
            "from the x cases by the swap");
    } else {
        // x+y > 1, x-y > 2 and (x+y-1)(x-y-2) <= 10; write s = x+y-1, t = x-y-2.
        // A lattice point needs s + t = 2x - 3 odd; even-sum pairs are recorded
        // as skipped.
        for (long long s = 1; s <= 10; ++s) {
            for (long long t = 1; s * t <= 10; ++t) {
                if ((s + t) % 2 == 0) {
                    cert.skipped_parity_pairs.push_back({s, t});
                    continue;
                }
                const DivisorClass cls((s + t + 3) / 2, (s - t - 1) / 2);
                cert.finite_region.push_back({cls, specialized_residual(model, cls)});
            }
        }
        cert.notes.push_back(
            "factor pairs (s, t) with even s + t admit no integral (x, y) since "
            "s + t = 2x - 3; they are listed as skipped");
    }
    std::sort(cert.finite_region.begin(), cert.finite_region.end(),
              [](const ResidualEntry& a, const ResidualEntry& b) { return a.cls < b.cls; });
    for (const ResidualEntry& entry : cert.finite_region) {
        if (entry.residual.is_zero()) cert.residual_zero_hits.push_back(entry);
    }

    // (b) edge cases
    if (even) {
        cert.edge_cases.push_back(
            detail::make_edge_case(model, {1, 0, 0, 1}, "x = 1", "y >= 1", cert));
        cert.edge_cases.push_back(
            detail::make_edge_case(model, {2, 0, 0, 1}, "x = 2", "y >= 1", cert));
    } else {
        cert.edge_cases.push_back(
            detail::make_edge_case(model, {0, 1, 1, -1}, "x + y = 1", "x >= 1", cert));
        cert.edge_cases.push_back(
            detail::make_edge_case(model, {0, 1, -1, 1}, "x - y = 1", "x >= 1", cert));
        cert.edge_cases.push_back(
            detail::make_edge_case(model, {0, 1, -2, 1}, "x - y = 2", "x >= 2", cert));
    }

    // (c) redundant box sweep over all ample classes with 1 <= x <= box_bound
    bool sweep_clean = true;
    std::uint64_t examined = 0;
    if (even) {
        for (long long x = 1; x <= box_bound; ++x) {
            const __int128 a2 = 2 * static_cast<__int128>(x) * x;
            const __int128 c1 = 10 * static_cast<__int128>(x) + 5;
            const __int128 c0 = 5 * static_cast<__int128>(x) + 2;
            for (long long y = 1; y <= box_bound; ++y) {
                const __int128 r = (a2 * y - c1) * y - c0;
                ++examined;
                if (r == 0) {
                    sweep_clean = false;
                    const DivisorClass cls(x, y);
                    cert.residual_zero_hits.push_back({cls, specialized_residual(model, cls)});
                }
            }
        }
    } else {
        for (long long x = 1; x <= box_bound; ++x) {
            const __int128 x2 = static_cast<__int128>(x) * x;
            const __int128 fifteen_x = 15 * static_cast<__int128>(x);
            for (long long y = -x + 1; y <= x - 1; ++y) {
                const __int128 q = x2 - static_cast<__int128>(y) * y - 5;
                const __int128 r = q * q - fifteen_x - 5 * y - 29;
                ++examined;
                if (r == 0) {
                    sweep_clean = false;
                    const DivisorClass cls(x, y);
                    cert.residual_zero_hits.push_back({cls, specialized_residual(model, cls)});
                }
            }
        }
    }
    cert.candidates_examined = examined;
    cert.exhaustive_box_clean = sweep_clean;

    std::sort(cert.residual_zero_hits.begin(), cert.residual_zero_hits.end(),
              [](const ResidualEntry& a, const ResidualEntry& b) { return a.cls < b.cls; });

    const bool finite_clean =
        std::all_of(cert.finite_region.begin(), cert.finite_region.end(),
                    [](const ResidualEntry& e) { return !e.residual.is_zero(); });
    const bool edges_clean =
        std::all_of(cert.edge_cases.begin(), cert.edge_cases.end(),
                    [](const EdgeCaseRecord& e) { return !e.discriminant_is_square; });
    const bool canonical_clean = !cert.canonical_case.residual.is_zero();

    cert.conclusion = (finite_clean && edges_clean && canonical_clean && sweep_clean)
                          ? "no solution"
                          : "residual zero or square discriminant found; transcription suspect";
    return cert;
}

struct GenusClassEntry {
    DivisorClass cls;
    std::vector<std::string> annotations;

    friend bool operator==(const GenusClassEntry&, const GenusClassEntry&) = default;
};

struct GenusClassList {
    long long genus = 0;
    std::vector<GenusClassEntry> classes;
    std::vector<GenusClassEntry> excluded; // only populated by the simply-connected filter

    friend bool operator==(const GenusClassList&, const GenusClassList&) = default;
};

inline constexpr const char* kAnnotationH0AtMost1 = "h0-at-most-1";
inline constexpr const char* kAnnotationExcludedSimplyConnected = "excluded-simply-connected";

namespace detail {

// Classes proved non-effective on a simply-connected model.
inline bool simply_connected_excluded(LatticeType t, const DivisorClass& c) {
    if (t == LatticeType::Even)
        return c == DivisorClass(1, 0) || c == DivisorClass(0, 1) || c == DivisorClass(1, 1);
    return c == DivisorClass(1, -1);
}

// Classes with h^0 <= 1 on a simply-connected model: multiples of the
// isotropic rays (no fibration exists) plus, on the odd model, 2H-F and H.
inline bool simply_connected_h0_at_most_1(LatticeType t, const DivisorClass& c) {
    if (t == LatticeType::Even) return c.x.is_zero() || c.y.is_zero();
    if (c.x == c.y || c.x == -c.y) return true;
    return c == DivisorClass(2, -1) || c == DivisorClass(1, 0);
}

} // namespace detail

// All admissible curve classes of each arithmetic genus g in 2..g_max,
// enumerated by factoring the genus polynomial. With simply_connected set,
// classes proved non-effective on a simply-connected surface move to the
// `excluded` list and the h^0 <= 1 classes are annotated.
inline std::vector<GenusClassList> enumerate_low_genus(const SurfaceModel& model,
                                                       long long g_max,
                                                       bool simply_connected = false) {
    if (g_max < 2)
        throw std::invalid_argument(
            "enumerate_low_genus: no admissible class has arithmetic genus below 2; g_max "
            "must be >= 2, got " +
            std::to_string(g_max));
    if (g_max > 100)
        throw std::invalid_argument("enumerate_low_genus: g_max must be <= 100, got " +
                                    std::to_string(g_max));

    const bool even = model.lattice() == LatticeType::Even;
    std::vector<GenusClassList> out;
    out.reserve(static_cast<std::size_t>(g_max - 1));
    for (long long g = 2; g <= g_max; ++g) {
        GenusClassList list;
        list.genus = g;
        std::vector<DivisorClass> classes;
        if (even) {
            // (x+1)(y+1) = g over x, y >= 0
            for (long long u = 1; u <= g; ++u) {
                if (g % u != 0) continue;
                classes.emplace_back(u - 1, g / u - 1);
            }
        } else {
            // (x+y+1)(x-y+2) = 2g over x >= |y|; factors u >= 1, v >= 2 of
            // opposite parity sum
            for (long long u = 1; u <= 2 * g; ++u) {
                if ((2 * g) % u != 0) continue;
                const long long v = 2 * g / u;
                if (v < 2 || (u + v) % 2 == 0) continue;
                classes.emplace_back((u + v - 3) / 2, (u - v + 1) / 2);
            }
        }
        std::sort(classes.begin(), classes.end());
        for (DivisorClass& cls : classes) {
            if (!curve_class_admissible(model, cls) || !effective_necessary(model, cls) ||
                arithmetic_genus(model, cls) != BigInt(g))
                throw internal_consistency_error(
                    "enumerate_low_genus: enumerated class " + cls.to_string() +
                    " fails the admissibility or genus check for g = " + std::to_string(g));
            GenusClassEntry entry;
            entry.cls = std::move(cls);
            if (simply_connected) {
                if (detail::simply_connected_excluded(model.lattice(), entry.cls)) {
                    entry.annotations.push_back(kAnnotationExcludedSimplyConnected);
                    list.excluded.push_back(std::move(entry));
                    continue;
                }
                if (detail::simply_connected_h0_at_most_1(model.lattice(), entry.cls))
                    entry.annotations.push_back(kAnnotationH0AtMost1);
            }
            list.classes.push_back(std::move(entry));
        }
        out.push_back(std::move(list));
    }
    return out;
}

} // namespace fakequadric
