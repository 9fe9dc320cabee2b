#pragma once

#include <utility>
#include <vector>

#include "toricinv/pi_scalar.hpp"
#include "toricinv/polygon.hpp"
#include "toricinv/ratfn.hpp"

namespace toricinv {

/// Scalar invariants of a polarized surface.  Grades: V is pi^0, s0 is
/// pi^1, the central second moments A, B, C are pi^-2 (paper coordinates
/// are the scaled ones divided by 2 pi), the extremal-potential slopes
/// a, b are pi^2.  x0, y0 are the barycenter in scaled coordinates.
struct InvariantSet {
    Rat V;
    PiScalar s0;
    Rat x0, y0;
    Rat F1, F2;
    PiScalar A, B, C;
    PiScalar a, b;
};

struct FunctionalValue {
    Rat calT, calB, calA;
};

/// s(x, y) = s0 + a (x - x0) + b (y - y0) in paper coordinates; x0, y0
/// are stored scaled, and value_at_scaled takes scaled inputs.
struct AffinePotential {
    PiScalar s0, a, b;
    Rat x0, y0;

    PiScalar value_at_scaled(const Rat& x, const Rat& y) const {
        PiScalar half_pi_inv(Rat(1, 2), -1);  // 1 / (2 pi)
        return s0 + a * half_pi_inv * (x - x0) + b * half_pi_inv * (y - y0);
    }
};

/// c1 . Omega in edge parameters; equals the lattice perimeter.
inline Rat c1_dot(SurfaceKind kind, const KahlerParams& p) {
    Rat per = 2 * (p.beta + p.gamma) + 3 * p.delta;
    if (kind == SurfaceKind::DP3) per += 2 * p.alpha;
    return per;
}

/// Omega^2 = 2V, valid for any class, not only cone points.
inline Rat class_square(SurfaceKind kind, const KahlerParams& p) {
    Rat s = p.alpha + p.beta + p.gamma + p.delta;
    Rat q = s * s - p.beta * p.beta - p.gamma * p.gamma;
    if (kind == SurfaceKind::DP3) q -= p.alpha * p.alpha;
    return q;
}

/// int_M x^p y^q s dmu = 4 pi (2 pi)^-(p+q) * boundary moment in scaled
/// coordinates.  The constant is pinned once by int s dmu = 4 pi c1.Omega.
inline PiScalar scalar_moment(const MomentPolygon& P, int p, int q) {
    Rat m = boundary_moment(P, p, q);
    return PiScalar(m * Rat(4) / rat_pow(Rat(2), p + q), 1 - (p + q));
}

namespace detail {

struct RawMoments {
    Rat V, a10, a01, a20, a11, a02, b00, b10, b01;
};

inline RawMoments raw_moments(const MomentPolygon& P) {
    RawMoments m;
    m.V = area_moment(P, 0, 0);
    m.a10 = area_moment(P, 1, 0);
    m.a01 = area_moment(P, 0, 1);
    m.a20 = area_moment(P, 2, 0);
    m.a11 = area_moment(P, 1, 1);
    m.a02 = area_moment(P, 0, 2);
    m.b00 = boundary_moment(P, 0, 0);
    m.b10 = boundary_moment(P, 1, 0);
    m.b01 = boundary_moment(P, 0, 1);
    return m;
}

} // namespace detail

inline InvariantSet invariant_set(SurfaceKind kind, const KahlerParams& p) {
    require_cone(kind, p);
    MomentPolygon P = build_polygon(kind, p);
    auto m = detail::raw_moments(P);

    InvariantSet inv;
    inv.V = m.V;
    inv.x0 = m.a10 / m.V;
    inv.y0 = m.a01 / m.V;
    inv.s0 = PiScalar(4 * m.b00 / m.V, 1);
    inv.F1 = 2 * (m.V * m.b10 - m.b00 * m.a10) / m.V;
    inv.F2 = 2 * (m.V * m.b01 - m.b00 * m.a01) / m.V;
    inv.A = PiScalar((m.V * m.a20 - m.a10 * m.a10) / (4 * m.V), -2);
    inv.B = PiScalar((m.V * m.a02 - m.a01 * m.a01) / (4 * m.V), -2);
    inv.C = PiScalar((m.V * m.a11 - m.a10 * m.a01) / (4 * m.V), -2);

    PiScalar det = inv.A * inv.B - inv.C * inv.C;
    if (det.is_zero())
        throw DegenerateMoments("AB - C^2 vanished on a cone point");
    PiScalar F1s(inv.F1), F2s(inv.F2);
    inv.a = (inv.B * F1s - inv.C * F2s) / det;
    inv.b = (inv.A * F2s - inv.C * F1s) / det;
    return inv;
}

inline Rat calT(SurfaceKind kind, const KahlerParams& p) {
    Rat sq = class_square(kind, p);
    Rat cd = c1_dot(kind, p);
    if (sq <= 0) throw NonPositiveSquare("calT needs Omega^2 > 0");
    if (cd <= 0) throw NonPositiveSquare("calT needs c1.Omega > 0");
    return cd * cd / sq;
}

inline Rat calB(SurfaceKind kind, const KahlerParams& p) {
    InvariantSet inv = invariant_set(kind, p);
    PiScalar det = inv.A * inv.B - inv.C * inv.C;
    PiScalar F1s(inv.F1), F2s(inv.F2);
    PiScalar quad = inv.B * F1s * F1s - PiScalar(Rat(2)) * inv.C * F1s * F2s +
                    inv.A * F2s * F2s;
    PiScalar result = quad / det / PiScalar(Rat(32), 2);
    if (!result.is_zero() && result.pi_power != 0)
        throw PiGradeMismatch("calB did not land in grade 0");
    return result.coeff;
}

inline FunctionalValue functional_value(SurfaceKind kind, const KahlerParams& p) {
    FunctionalValue f;
    f.calT = calT(kind, p);
    f.calB = calB(kind, p);
    f.calA = f.calT + f.calB;
    return f;
}

inline AffinePotential extremal_potential(SurfaceKind kind, const KahlerParams& p) {
    InvariantSet inv = invariant_set(kind, p);
    return AffinePotential{inv.s0, inv.a, inv.b, inv.x0, inv.y0};
}

/// int_M (s - s0)^2 dmu for the affine potential, assembled as the
/// quadratic moment a^2 A + 2ab C + b^2 B.  Equals 32 pi^2 calB.
inline PiScalar futaki_energy(SurfaceKind kind, const KahlerParams& p) {
    InvariantSet inv = invariant_set(kind, p);
    return inv.a * inv.a * inv.A + PiScalar(Rat(2)) * inv.a * inv.b * inv.C +
           inv.b * inv.b * inv.B;
}

/// Minimum and maximum of the extremal potential over the polygon: an
/// affine function on a polygon attains its extremes at vertices.
inline std::pair<PiScalar, PiScalar> scalar_bounds(SurfaceKind kind,
                                                   const KahlerParams& p) {
    AffinePotential pot = extremal_potential(kind, p);
    MomentPolygon P = build_polygon(kind, p);
    PiScalar lo, hi;
    bool first = true;
    for (const auto& v : P.vertices) {
        PiScalar s = pot.value_at_scaled(v[0], v[1]);
        if (first) {
            lo = hi = s;
            first = false;
            continue;
        }
        if (s.coeff < lo.coeff) lo = s;
        if (s.coeff > hi.coeff) hi = s;
    }
    return {lo, hi};
}

/// The potential evaluated at the bounding-box corner (beta+delta,
/// gamma+delta) in scaled coordinates.  Since a, b < 0 on the cone this
/// dominates every pentagon point, hence is a valid lower bound for s;
/// it is the closed-form bound printed for DP2 (the sharp bound is the
/// vertex minimum from scalar_bounds).
inline PiScalar box_corner_bound_dp2(const KahlerParams& p) {
    AffinePotential pot = extremal_potential(SurfaceKind::DP2, p);
    return pot.value_at_scaled(p.beta + p.delta, p.gamma + p.delta);
}

// ---------------------------------------------------------------------
// Symbolic pipeline.  Everything is derived from the symbolic polygon in
// homogeneous (alpha, beta, gamma, delta); printed appendix formulas are
// regression fixtures only, never inputs.
// ---------------------------------------------------------------------

struct SymbolicInvariants {
    SurfaceKind kind;
    MPoly V;             // volume polynomial, homogeneous of degree 2
    MPoly a10, a01, b00; // first area moments and lattice perimeter

    // Cleared-denominator building blocks:
    //   Ft_i = V * F_i          (the Futaki brackets)
    //   At   = V a20 - a10^2    (4 pi^2 V * A), similarly Bt, Ct
    //   T    = At Bt - Ct^2
    //   S    = Bt Ft1^2 - 2 Ct Ft1 Ft2 + At Ft2^2
    //   Za   = Bt Ft1 - Ct Ft2,  Zb = At Ft2 - Ct Ft1
    MPoly Ft1, Ft2, At, Bt, Ct, T, S, Za, Zb;

    RatFn F1, F2;     // pi^0
    PiRatFn s0;       // pi^1
    PiRatFn A, B, C;  // pi^-2
    PiRatFn a, b;     // pi^2
};

inline const SymbolicInvariants& symbolic_invariants(SurfaceKind kind) {
    auto build = [](SurfaceKind k) {
        SymbolicInvariants s;
        s.kind = k;
        SymbolicPolygon P = symbolic_polygon(k);
        s.V = area_moment(P, 0, 0);
        s.a10 = area_moment(P, 1, 0);
        s.a01 = area_moment(P, 0, 1);
        MPoly a20 = area_moment(P, 2, 0);
        MPoly a11 = area_moment(P, 1, 1);
        MPoly a02 = area_moment(P, 0, 2);
        s.b00 = lattice_perimeter(P);
        MPoly b10 = boundary_moment(P, 1, 0);
        MPoly b01 = boundary_moment(P, 0, 1);

        MPoly two(Rat(2));
        s.Ft1 = two * (s.V * b10 - s.b00 * s.a10);
        s.Ft2 = two * (s.V * b01 - s.b00 * s.a01);
        s.At = s.V * a20 - s.a10 * s.a10;
        s.Bt = s.V * a02 - s.a01 * s.a01;
        s.Ct = s.V * a11 - s.a10 * s.a01;
        s.T = s.At * s.Bt - s.Ct * s.Ct;
        s.S = s.Bt * s.Ft1 * s.Ft1 - two * s.Ct * s.Ft1 * s.Ft2 +
              s.At * s.Ft2 * s.Ft2;
        s.Za = s.Bt * s.Ft1 - s.Ct * s.Ft2;
        s.Zb = s.At * s.Ft2 - s.Ct * s.Ft1;

        s.F1 = RatFn(s.Ft1, s.V);
        s.F2 = RatFn(s.Ft2, s.V);
        s.s0 = PiRatFn(RatFn(MPoly(Rat(4)) * s.b00, s.V), 1);
        MPoly fourV = MPoly(Rat(4)) * s.V;
        s.A = PiRatFn(RatFn(s.At, fourV), -2);
        s.B = PiRatFn(RatFn(s.Bt, fourV), -2);
        s.C = PiRatFn(RatFn(s.Ct, fourV), -2);
        s.a = PiRatFn(RatFn(MPoly(Rat(4)) * s.Za, s.T), 2);
        s.b = PiRatFn(RatFn(MPoly(Rat(4)) * s.Zb, s.T), 2);
        return s;
    };
    static const SymbolicInvariants cached_dp2 = build(SurfaceKind::DP2);
    static const SymbolicInvariants cached_dp3 = build(SurfaceKind::DP3);
    return kind == SurfaceKind::DP2 ? cached_dp2 : cached_dp3;
}

/// Canonical (N, D) with calB = N/D, homogeneous of degree 12 in all four
/// parameters.  Canonicalization: cancel common powers of V, divide by the
/// joint content, make D's leading coefficient positive.  At delta = 1
/// this lands exactly on the printed normalization.
inline const std::pair<MPoly, MPoly>& calB_pair(SurfaceKind kind) {
    auto build = [](SurfaceKind k) {
        const auto& s = symbolic_invariants(k);
        return canonical_pair(RatFn(s.S, MPoly(Rat(8)) * s.V * s.T), s.V);
    };
    static const std::pair<MPoly, MPoly> dp2 = build(SurfaceKind::DP2);
    static const std::pair<MPoly, MPoly> dp3 = build(SurfaceKind::DP3);
    return kind == SurfaceKind::DP2 ? dp2 : dp3;
}

inline RatFn calB_symbolic(SurfaceKind kind) {
    const auto& [n, d] = calB_pair(kind);
    return RatFn(n, d);
}

inline RatFn calT_symbolic(SurfaceKind kind) {
    MPoly per = MPoly(Rat(2)) * (MPoly::var(Var::beta) + MPoly::var(Var::gamma)) +
                MPoly(Rat(3)) * MPoly::var(Var::delta);
    if (kind == SurfaceKind::DP3)
        per += MPoly(Rat(2)) * MPoly::var(Var::alpha);
    const auto& s = symbolic_invariants(kind);
    return RatFn(per * per, MPoly(Rat(2)) * s.V);
}

inline RatFn calA_symbolic(SurfaceKind kind) {
    return calT_symbolic(kind) + calB_symbolic(kind);
}

/// Symbolic value of the extremal potential at a polygon point given by
/// (x, y) as polynomials in the parameters (scaled coordinates):
///   pi * [4 b00 T + 2 Za (V x - a10) + 2 Zb (V y - a01)] / (V T),
/// returned as the canonical pair after cancelling V.  Grade pi^1.
inline std::pair<MPoly, MPoly> potential_pair_at(SurfaceKind kind, const MPoly& x,
                                                 const MPoly& y) {
    const auto& s = symbolic_invariants(kind);
    MPoly two(Rat(2)), four(Rat(4));
    MPoly num = four * s.b00 * s.T + two * s.Za * (s.V * x - s.a10) +
                two * s.Zb * (s.V * y - s.a01);
    return canonical_pair(RatFn(num, s.V * s.T), s.V);
}

/// Canonical pairs of the potential's values at every polygon vertex,
/// counterclockwise; each is homogeneous with deg(num) = deg(den) - 1
/// (grade pi^1, homogeneity degree -1).
inline std::vector<std::pair<MPoly, MPoly>> vertex_value_pairs(SurfaceKind kind) {
    SymbolicPolygon P = symbolic_polygon(kind);
    std::vector<std::pair<MPoly, MPoly>> out;
    out.reserve(P.vertices.size());
    for (const auto& v : P.vertices)
        out.push_back(potential_pair_at(kind, v[0], v[1]));
    return out;
}

/// Symbolic form of box_corner_bound_dp2 (the printed DP2 lower bound).
inline std::pair<MPoly, MPoly> box_corner_pair_dp2() {
    MPoly bd = MPoly::var(Var::beta) + MPoly::var(Var::delta);
    MPoly gd = MPoly::var(Var::gamma) + MPoly::var(Var::delta);
    return potential_pair_at(SurfaceKind::DP2, bd, gd);
}

} // namespace toricinv
