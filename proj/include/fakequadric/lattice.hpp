#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

#include "fakequadric/bigint.hpp"
#include "fakequadric/rational.hpp"

namespace fakequadric {

// The Neron-Severi lattice of a fake quadric is rank-2 unimodular of
// signature (1,1), so it is one of exactly two lattices:
//   Even: the hyperbolic plane U, Gram matrix [[0,1],[1,0]]
//   Odd:  <1> + <-1>,             Gram matrix [[1,0],[0,-1]]
enum class LatticeType { Even, Odd };

inline std::array<std::array<long long, 2>, 2> gram_matrix(LatticeType t) {
    if (t == LatticeType::Even) return {{{0, 1}, {1, 0}}};
    return {{{1, 0}, {0, -1}}};
}

inline long long gram_determinant(LatticeType t) {
    const auto g = gram_matrix(t);
    return g[0][0] * g[1][1] - g[0][1] * g[1][0]; // -1 for both types
}

// Integer divisor class x*H + y*F in the fixed basis (H, F) of the lattice.
struct DivisorClass {
    BigInt x;
    BigInt y;

    DivisorClass() = default;
    DivisorClass(BigInt x_, BigInt y_) : x(std::move(x_)), y(std::move(y_)) {}
    DivisorClass(long long x_, long long y_) : x(x_), y(y_) {}

    bool is_zero() const { return x.is_zero() && y.is_zero(); }

    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
        return {a.x + b.x, a.y + b.y};
    }
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
        return {a.x - b.x, a.y - b.y};
    }
    DivisorClass operator-() const { return {-x, -y}; }
    friend DivisorClass operator*(const BigInt& k, const DivisorClass& d) {
        return {k * d.x, k * d.y};
    }

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
    friend std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b) {
        if (const auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }

    std::string to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }

    friend std::ostream& operator<<(std::ostream& os, const DivisorClass& d) {
        return os << d.to_string();
    }
};

// Class with rational coordinates. Needed only because the even->odd lattice
// embedding sends F to (H+F)/2, which is not integral.
struct RationalClass {
    Rational x;
    Rational y;

    bool is_integral() const { return x.is_integer() && y.is_integer(); }

    friend bool operator==(const RationalClass&, const RationalClass&) = default;

    std::string to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }
};

// A fake quadric: minimal surface of general type with q = p_g = 0 and
// K^2 = 8. All numerical invariants are forced; the only choice is the
// lattice type, and the canonical class can be normalized to a fixed
// representative in each case. Instances are only constructible through
// the two factories, so an inconsistent model cannot exist.
class SurfaceModel {
public:
    static const SurfaceModel& even() {
        static const SurfaceModel m(LatticeType::Even, DivisorClass(2, 2));
        return m;
    }

    static const SurfaceModel& odd() {
        static const SurfaceModel m(LatticeType::Odd, DivisorClass(3, -1));
        return m;
    }

    static const SurfaceModel& of(LatticeType t) {
        return t == LatticeType::Even ? even() : odd();
    }

    LatticeType lattice() const { return lattice_; }
    const DivisorClass& canonical() const { return canonical_; }

    long long k_squared() const { return 8; }
    long long chi_structure_sheaf() const { return 1; }
    long long c2() const { return 4; }
    long long delta() const { return 3 * c2() - k_squared(); } // = 4
    long long irregularity() const { return 0; }
    long long geometric_genus() const { return 0; }

private:
    LatticeType lattice_;
    DivisorClass canonical_;

    SurfaceModel(LatticeType t, DivisorClass k) : lattice_(t), canonical_(std::move(k)) {
        const BigInt ksq = pair(t, canonical_, canonical_);
        if (ksq != BigInt(k_squared()))
            throw std::logic_error("SurfaceModel: canonical class self-intersection is " +
                                   ksq.to_string() + ", expected 8");
        if (delta() != 4)
            throw std::logic_error("SurfaceModel: delta invariant broken");
    }

    static BigInt pair(LatticeType t, const DivisorClass& a, const DivisorClass& b) {
        if (t == LatticeType::Even) return a.x * b.y + a.y * b.x;
        return a.x * b.x - a.y * b.y;
    }

    friend BigInt intersect(const SurfaceModel&, const DivisorClass&, const DivisorClass&);
};

// Intersection pairing a^T G b for the model's Gram matrix; symmetric,
// bilinear, total on all integer classes.
inline BigInt intersect(const SurfaceModel& model, const DivisorClass& a,
                        const DivisorClass& b) {
    return SurfaceModel::pair(model.lattice(), a, b);
}

inline BigInt self_intersection(const SurfaceModel& model, const DivisorClass& d) {
    return intersect(model, d, d);
}

inline const DivisorClass& canonical_class(const SurfaceModel& model) {
    return model.canonical();
}

// Rational extension of the pairing, used to check that the even->odd
// embedding preserves intersection numbers. Named separately: brace-init
// would otherwise be ambiguous against the integer overload.
inline Rational intersect_rational(const SurfaceModel& model, const RationalClass& a,
                                   const RationalClass& b) {
    if (model.lattice() == LatticeType::Even) return a.x * b.y + a.y * b.x;
    return a.x * b.x - a.y * b.y;
}

// Isometric embedding of the even lattice into the odd lattice extended by
// the half-integral vector (H+F)/2:
//   H |-> H - F,   F |-> (H + F)/2
// Input coordinates are read in the even basis; output in the odd basis.
inline RationalClass embed_even_into_odd(const DivisorClass& d) {
    RationalClass out;
    out.x = Rational(BigInt(2) * d.x + d.y, BigInt(2));
    out.y = Rational(d.y - BigInt(2) * d.x, BigInt(2));
    return out;
}

// For a fake quadric of odd type and unmixed kind, the tangent bundle splits
// into line bundles L1 = H+F and L2 = 2(H-F); this checks the numerical
// identities that splitting forces: L1 + L2 = K, L1^2 = L2^2 = 0 and
// c1^2 = 2 L1.L2 = 2 c2.
struct TangentSplittingReport {
    DivisorClass l1;
    DivisorClass l2;
    DivisorClass sum;
    BigInt l1_squared;
    BigInt l2_squared;
    BigInt l1_dot_l2;
    bool sum_is_canonical = false;
    bool squares_vanish = false;
    bool chern_identity_holds = false;

    bool all_verified() const {
        return sum_is_canonical && squares_vanish && chern_identity_holds;
    }
};

inline TangentSplittingReport tangent_splitting_check(const SurfaceModel& model) {
    if (model.lattice() != LatticeType::Odd)
        throw std::invalid_argument(
            "tangent_splitting_check: splitting data applies to the odd lattice only");
    TangentSplittingReport r;
    r.l1 = DivisorClass(1, 1);
    r.l2 = DivisorClass(2, -2);
    r.sum = r.l1 + r.l2;
    r.l1_squared = self_intersection(model, r.l1);
    r.l2_squared = self_intersection(model, r.l2);
    r.l1_dot_l2 = intersect(model, r.l1, r.l2);
    r.sum_is_canonical = r.sum == model.canonical();
    r.squares_vanish = r.l1_squared.is_zero() && r.l2_squared.is_zero();
    r.chern_identity_holds = BigInt(2) * r.l1_dot_l2 == BigInt(model.k_squared()) &&
                             BigInt(2) * r.l1_dot_l2 == BigInt(2 * model.c2());
    return r;
}

inline std::string to_string(LatticeType t) {
    return t == LatticeType::Even ? "even" : "odd";
}

} // namespace fakequadric
