#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "toricinv/invariants.hpp"
#include "toricinv/polygon.hpp"

namespace toricinv {

/// A class in H^2 of CP^2 # k CP^2-bar (k = 2, 3), stored as (ell; e)
/// where ell = class . L and e_i = class . E_i.  In the (L, E_1..E_k)
/// basis the class is ell L - sum e_i E_i and the intersection form is
/// diag(1, -1, ..., -1).  For a Kahler class, e_i is the area of E_i.
struct CohClass {
    Rat ell;
    std::vector<Rat> e;

    int k() const { return static_cast<int>(e.size()); }
    SurfaceKind kind() const { return k() == 2 ? SurfaceKind::DP2 : SurfaceKind::DP3; }
};

inline CohClass c1_class(SurfaceKind kind) {
    if (kind == SurfaceKind::DP2) return {Rat(3), {Rat(1), Rat(1)}};
    return {Rat(3), {Rat(1), Rat(1), Rat(1)}};
}

inline Rat intersect(const CohClass& x, const CohClass& y) {
    if (x.k() != y.k())
        throw DimensionMismatch("intersection of classes on different surfaces");
    Rat out = x.ell * y.ell;
    for (int i = 0; i < x.k(); ++i) out -= x.e[i] * y.e[i];
    return out;
}

/// DP3: alpha = e1, beta = e2, gamma = e3, delta = ell - e1 - e2 - e3.
/// DP2: beta = e1, gamma = e2, delta = ell - e1 - e2.
inline KahlerParams params_from_class(const CohClass& c) {
    if (c.k() == 2)
        return {Rat(0), c.e[0], c.e[1], c.ell - c.e[0] - c.e[1]};
    return {c.e[0], c.e[1], c.e[2], c.ell - c.e[0] - c.e[1] - c.e[2]};
}

inline CohClass class_from_params(SurfaceKind kind, const KahlerParams& p) {
    if (kind == SurfaceKind::DP2)
        return {p.beta + p.gamma + p.delta, {p.beta, p.gamma}};
    return {p.alpha + p.beta + p.gamma + p.delta, {p.alpha, p.beta, p.gamma}};
}

/// Kahler iff strictly positive on every (-1)-class: E_i and L-E_i-E_j.
inline bool is_kahler(const CohClass& c) {
    for (int i = 0; i < c.k(); ++i)
        if (c.e[i] <= 0) return false;
    for (int i = 0; i < c.k(); ++i)
        for (int j = i + 1; j < c.k(); ++j)
            if (c.ell - c.e[i] - c.e[j] <= 0) return false;
    return true;
}

/// Lattice involution of H^2(CP^2 # 3 CP^2-bar): in parameters
/// (a, b, g, d) -> (a+d, b+d, g+d, -d); swaps each E_i with E_i' and
/// preserves the intersection form, c1, calT and calB.
inline CohClass cremona(const CohClass& c) {
    if (c.k() != 3) throw DimensionMismatch("cremona needs k = 3");
    Rat s = c.ell - c.e[0] - c.e[1] - c.e[2];  // = delta
    return {c.ell + s, {c.e[0] + s, c.e[1] + s, c.e[2] + s}};
}

inline Rat calT(const CohClass& c) {
    Rat sq = intersect(c, c);
    Rat cd = intersect(c1_class(c.kind()), c);
    if (sq <= 0) throw NonPositiveSquare("calT needs Omega^2 > 0");
    if (cd <= 0) throw NonPositiveSquare("calT needs c1.Omega > 0");
    return cd * cd / sq;
}

/// All integral A with c1.A = 2 - k_self and A.A = -k_self, as homology
/// tuples (n, a1, .., ak) meaning A = n L + sum a_i E_i.  Cauchy-Schwarz
/// on ((2-k_self) - 3n)^2 <= k (n^2 + k_self) bounds n to a finite
/// interval; within it, tuples are enumerated exhaustively.  Sorted
/// lexicographically, duplicate-free.
inline std::vector<std::vector<long>> enumerate_negative_classes(SurfaceKind kind,
                                                                 long k_self) {
    if (k_self < 1) throw UsageError("enumerate_negative_classes: k_self >= 1");
    const int k = (kind == SurfaceKind::DP2) ? 2 : 3;
    const long c1A = 2 - k_self;
    std::vector<std::vector<long>> out;
    // (c1A - 3n)^2 <= k (n^2 + k_self)
    for (long n = -(8 + k_self); n <= 8 + k_self; ++n) {
        long lhs = (c1A - 3 * n) * (c1A - 3 * n);
        long rhs = k * (n * n + k_self);
        if (lhs > rhs) continue;
        long sq = n * n + k_self;  // = a^2 + b^2 (+ c^2)
        long M = 0;
        while ((M + 1) * (M + 1) <= sq) ++M;
        // exhaustive over the bounded box, last entry solved linearly
        for (long x = -M; x <= M; ++x) {
            if (k == 2) {
                long y = c1A - 3 * n - x;
                if (y < -M || y > M) continue;
                if (x * x + y * y != sq) continue;
                out.push_back({n, x, y});
            } else {
                for (long y = -M; y <= M; ++y) {
                    long z = c1A - 3 * n - x - y;
                    if (z < -M || z > M) continue;
                    if (x * x + y * y + z * z != sq) continue;
                    out.push_back({n, x, y, z});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Homology tuple (n, a_i) = (ell, -e_i); A = n L + sum a_i E_i.
inline CohClass class_from_homology_tuple(const std::vector<long>& t) {
    CohClass c;
    c.ell = Rat(t[0]);
    for (std::size_t i = 1; i < t.size(); ++i) c.e.push_back(Rat(-t[i]));
    return c;
}

inline std::string format_homology_tuple(const std::vector<long>& t) {
    std::string s = "(" + std::to_string(t[0]) + ";";
    for (std::size_t i = 1; i < t.size(); ++i) {
        s += (i == 1 ? " " : ",");
        s += std::to_string(t[i]);
    }
    s += ")";
    return s;
}

/// Radius^2 of the disk picture of Y_t on DP2: in the slice c1.w = 7 with
/// w = c1 + eta, c1.eta = 0, membership calT <= t reads
/// |eta^2| <= 7(t-7)/t.  Only defined for 7 < t < 8.
inline Rat disk_radius_sq(const Rat& t) {
    if (!(t > 7 && t < 8))
        throw UsageError("disk_radius_sq is defined for 7 < t < 8 only");
    return 7 * (t - 7) / t;
}

/// Membership of Y_t on DP2, decided both directly (calT <= t) and via
/// the normalized disk picture; the two must agree.
inline bool T_sublevel_test(const CohClass& c, const Rat& t) {
    if (c.k() != 2) throw DimensionMismatch("T_sublevel_test is a DP2 operation");
    Rat tc = calT(c);  // validates Omega^2 > 0, c1.Omega > 0
    bool direct = (tc <= t);

    // normalize to c1.w = 7: w = 7 c / (c1.c), eta = w - c1,
    // |eta^2| = -eta^2 = 7 - 49 Omega^2/(c1.Omega)^2
    Rat cd = intersect(c1_class(SurfaceKind::DP2), c);
    Rat sq = intersect(c, c);
    Rat eta_sq = 49 * sq / (cd * cd) - 7;
    bool disk = (-eta_sq <= disk_radius_sq(t));
    if (direct != disk)
        throw std::logic_error("Y_t membership tests disagree");
    return direct;
}

/// Exact affine combination (1 - t) from + t to, t in [0, 1].
inline CohClass segment(const CohClass& from, const CohClass& to, const Rat& t) {
    if (from.k() != to.k()) throw DimensionMismatch("segment endpoints differ");
    if (t < 0 || t > 1) throw UsageError("segment parameter out of [0, 1]");
    CohClass c;
    c.ell = (1 - t) * from.ell + t * to.ell;
    for (int i = 0; i < from.k(); ++i)
        c.e.push_back((1 - t) * from.e[i] + t * to.e[i]);
    return c;
}

/// Pullback along the blow-down of E_1: a DP2 class embeds into DP3 with
/// e_1 = 0 (DP2's exceptional curves become E_2, E_3).
inline CohClass pullback_to_dp3(const CohClass& c) {
    if (c.k() != 2) throw DimensionMismatch("pullback_to_dp3 takes a DP2 class");
    return {c.ell, {Rat(0), c.e[0], c.e[1]}};
}

/// The degeneration path (1-t) c1 + t p^*(omega) on DP3; the E_1 area is
/// exactly 1 - t and calT along the path never exceeds calT(p^* omega).
inline CohClass degeneration_path(const CohClass& omega_dp2, const Rat& t) {
    return segment(c1_class(SurfaceKind::DP3), pullback_to_dp3(omega_dp2), t);
}

} // namespace toricinv
