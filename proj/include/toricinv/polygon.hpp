#pragma once

#include <array>
#include <string>
#include <vector>

#include "toricinv/mpoly.hpp"
#include "toricinv/rational.hpp"

namespace toricinv {

/// DP2 is the two-point blow-up of the projective plane (moment pentagon),
/// DP3 the three-point blow-up (hexagon).  DP2 is DP3 restricted to
/// alpha = 0, with the near-origin cut removed.
enum class SurfaceKind { DP2, DP3 };

inline const char* surface_name(SurfaceKind k) {
    return k == SurfaceKind::DP2 ? "dp2" : "dp3";
}

/// Edge parameters of a Kahler class; symplectic areas of the exceptional
/// curves.  alpha is identically 0 on DP2.
struct KahlerParams {
    Rat alpha, beta, gamma, delta;

    KahlerParams() : alpha(0), beta(0), gamma(0), delta(0) {}
    KahlerParams(Rat a, Rat b, Rat g, Rat d)
        : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(g)), delta(std::move(d)) {}

    std::array<Rat, 4> as_point() const { return {alpha, beta, gamma, delta}; }

    KahlerParams scaled(const Rat& c) const {
        return {alpha * c, beta * c, gamma * c, delta * c};
    }
};

/// The invariant-curve areas cut out the Kahler cone: all must be positive.
/// DP3: {alpha, beta, gamma, alpha+delta, beta+delta, gamma+delta};
/// DP2: {beta, gamma, delta}.
inline std::vector<Rat> curve_areas(SurfaceKind kind, const KahlerParams& p) {
    if (kind == SurfaceKind::DP2)
        return {p.beta, p.gamma, p.delta};
    return {p.alpha,           p.beta,           p.gamma,
            p.alpha + p.delta, p.beta + p.delta, p.gamma + p.delta};
}

inline bool in_kahler_cone(SurfaceKind kind, const KahlerParams& p) {
    if (kind == SurfaceKind::DP2 && p.alpha != 0) return false;
    for (const Rat& a : curve_areas(kind, p))
        if (a <= 0) return false;
    return true;
}

inline void require_cone(SurfaceKind kind, const KahlerParams& p) {
    if (!in_kahler_cone(kind, p))
        throw ConeViolation("parameters outside the Kahler cone of " +
                            std::string(surface_name(kind)));
}

template <class T>
struct PolygonEdge {
    std::array<long, 2> normal;  // primitive integer outward normal
    T length;                    // lattice length = curve area
};

/// Delzant moment polygon in "scaled" coordinates (2 pi times the moment
/// map), so every vertex is rational (or polynomial) in the parameters and
/// the Euclidean area equals V.  Vertices are counterclockwise; edge i
/// runs from vertex i to vertex i+1.
template <class T>
struct BasicPolygon {
    std::vector<std::array<T, 2>> vertices;
    std::vector<PolygonEdge<T>> edges;
};

using MomentPolygon = BasicPolygon<Rat>;
using SymbolicPolygon = BasicPolygon<MPoly>;

namespace detail {

// Hexagon data shared by the numeric and symbolic constructions.  Vertices
// counterclockwise from the near-origin cut, edge k from vertex k to k+1:
//   (a,0) (a+b+d,0) (a+b+d,g) (b,a+g+d) (0,a+g+d) (0,a)
// lengths  b+d       g         a+d       b          g+d      a
// normals (0,-1)    (1,0)     (1,1)     (0,1)     (-1,0)   (-1,-1)
inline constexpr std::array<std::array<long, 2>, 6> kHexNormals = {
    {{0, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}}};

template <class T>
BasicPolygon<T> assemble(const T& a, const T& b, const T& g, const T& d,
                         bool drop_zero_edges) {
    std::array<std::array<T, 2>, 6> verts = {{{a, T(0)},
                                              {a + b + d, T(0)},
                                              {a + b + d, g},
                                              {b, a + g + d},
                                              {T(0), a + g + d},
                                              {T(0), a}}};
    std::array<T, 6> lengths = {b + d, g, a + d, b, g + d, a};
    BasicPolygon<T> P;
    for (int i = 0; i < 6; ++i) {
        if (drop_zero_edges && lengths[i] == T(0)) continue;
        P.vertices.push_back(verts[i]);
        P.edges.push_back({kHexNormals[i], lengths[i]});
    }
    return P;
}

inline Rat tri_det(const std::array<Rat, 2>& v0, const std::array<Rat, 2>& v1,
                   const std::array<Rat, 2>& v2) {
    return (v1[0] - v0[0]) * (v2[1] - v0[1]) - (v1[1] - v0[1]) * (v2[0] - v0[0]);
}

} // namespace detail

/// Builds the moment polygon.  Preconditions: parameters strictly inside
/// the Kahler cone, unless allow_degenerate permits boundary points, in
/// which case zero-length edges are dropped (the polygon must stay
/// two-dimensional).
inline MomentPolygon build_polygon(SurfaceKind kind, const KahlerParams& p,
                                   bool allow_degenerate = false) {
    if (kind == SurfaceKind::DP2 && p.alpha != 0)
        throw ConeViolation("DP2 parameters must have alpha = 0");
    for (const Rat& area : curve_areas(kind, p)) {
        if (area < 0 || (area == 0 && !allow_degenerate))
            throw ConeViolation("non-positive curve area");
    }
    MomentPolygon P = detail::assemble<Rat>(p.alpha, p.beta, p.gamma, p.delta, true);
    if (P.vertices.size() < 3)
        throw DegeneratePolygon("polygon collapsed to dimension < 2");
    // Delzant sanity: consecutive primitive edge directions span Z^2.
    for (std::size_t i = 0; i < P.edges.size(); ++i) {
        const auto& n0 = P.edges[i].normal;
        const auto& n1 = P.edges[(i + 1) % P.edges.size()].normal;
        long det = n0[0] * n1[1] - n0[1] * n1[0];
        if (det != 1)
            throw DegeneratePolygon("Delzant condition failed at vertex " +
                                    std::to_string(i + 1));
    }
    return P;
}

/// Fully symbolic polygon: vertices are (homogeneous, linear) polynomials
/// in (alpha, beta, gamma, delta); DP2 sets alpha to zero and keeps five
/// edges.
inline SymbolicPolygon symbolic_polygon(SurfaceKind kind) {
    MPoly a = (kind == SurfaceKind::DP3) ? MPoly::var(Var::alpha) : MPoly();
    MPoly b = MPoly::var(Var::beta);
    MPoly g = MPoly::var(Var::gamma);
    MPoly d = MPoly::var(Var::delta);
    return detail::assemble<MPoly>(a, b, g, d, kind == SurfaceKind::DP2);
}

namespace detail {

// factorial table big enough for p+q+2 with the p+q <= 4 symbolic cap and
// any reasonable numeric use
inline Rat factorial(int n) {
    Rat f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

template <class T>
std::vector<T> powers_of(const T& x, int n) {
    std::vector<T> p;
    p.reserve(n + 1);
    p.push_back(T(Rat(1)));
    for (int i = 1; i <= n; ++i) p.push_back(p.back() * x);
    return p;
}

inline long binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace detail

/// Exact integral of x^p y^q over the polygon, computed by fan
/// triangulation from the first vertex.  Each triangle is pulled back to
/// the standard simplex, where the monomial integral is
///   int s^m t^n ds dt = m! n! / (m+n+2)!.
template <class T>
T area_moment(const BasicPolygon<T>& P, int p, int q) {
    if (p < 0 || q < 0) throw UsageError("area_moment: negative exponent");
    T total{};
    const auto& v0 = P.vertices[0];
    for (std::size_t i = 1; i + 1 < P.vertices.size(); ++i) {
        const auto& v1 = P.vertices[i];
        const auto& v2 = P.vertices[i + 1];
        T ux = v1[0] - v0[0], uy = v1[1] - v0[1];
        T wx = v2[0] - v0[0], wy = v2[1] - v0[1];
        T jac = ux * wy - uy * wx;

        auto v0x = detail::powers_of(v0[0], p), uxp = detail::powers_of(ux, p),
             wxp = detail::powers_of(wx, p);
        auto v0y = detail::powers_of(v0[1], q), uyp = detail::powers_of(uy, q),
             wyp = detail::powers_of(wy, q);

        T tri{};
        // (v0x + s ux + t wx)^p (v0y + s uy + t wy)^q, term by term
        for (int i1 = 0; i1 <= p; ++i1)
            for (int j1 = 0; i1 + j1 <= p; ++j1) {
                int k1 = p - i1 - j1;
                Rat cx = detail::factorial(p) /
                         (detail::factorial(i1) * detail::factorial(j1) *
                          detail::factorial(k1));
                for (int i2 = 0; i2 <= q; ++i2)
                    for (int j2 = 0; i2 + j2 <= q; ++j2) {
                        int k2 = q - i2 - j2;
                        Rat cy = detail::factorial(q) /
                                 (detail::factorial(i2) * detail::factorial(j2) *
                                  detail::factorial(k2));
                        // s-exponent j1+j2, t-exponent k1+k2
                        Rat simplex = detail::factorial(j1 + j2) *
                                      detail::factorial(k1 + k2) /
                                      detail::factorial(j1 + j2 + k1 + k2 + 2);
                        T term = v0x[i1] * uxp[j1] * wxp[k1] * v0y[i2] * uyp[j2] *
                                 wyp[k2];
                        tri += term * (cx * cy * simplex);
                    }
            }
        total += jac * tri;
    }
    return total;
}

/// Exact integral of x^p y^q over the boundary against lattice length
/// measure: on an edge of lattice length L parameterized affinely by
/// t in [0,1], d(lambda) = L dt.
template <class T>
T boundary_moment(const BasicPolygon<T>& P, int p, int q) {
    if (p < 0 || q < 0) throw UsageError("boundary_moment: negative exponent");
    T total{};
    const std::size_t n = P.vertices.size();
    for (std::size_t e = 0; e < n; ++e) {
        const auto& A = P.vertices[e];
        const auto& B = P.vertices[(e + 1) % n];
        T dx = B[0] - A[0], dy = B[1] - A[1];
        auto ax = detail::powers_of(A[0], p), dxp = detail::powers_of(dx, p);
        auto ay = detail::powers_of(A[1], q), dyp = detail::powers_of(dy, q);
        T edge{};
        for (int i = 0; i <= p; ++i)
            for (int j = 0; j <= q; ++j) {
                Rat c = rat(detail::binom(p, i) * detail::binom(q, j), i + j + 1);
                edge += ax[p - i] * dxp[i] * ay[q - j] * dyp[j] * c;
            }
        total += P.edges[e].length * edge;
    }
    return total;
}

/// Symbolic moment of the moment polygon as a polynomial in
/// (alpha, beta, gamma, delta); specializing parameters matches the
/// numeric operations exactly.  Capped at p+q <= 4.
inline MPoly polygon_symbolic(SurfaceKind kind, int p, int q, bool boundary) {
    if (p < 0 || q < 0) throw UsageError("polygon_symbolic: negative exponent");
    if (p + q > 4) throw Unsupported("polygon_symbolic: p+q > 4 not supported");
    SymbolicPolygon P = symbolic_polygon(kind);
    return boundary ? boundary_moment(P, p, q) : area_moment(P, p, q);
}

/// Lattice perimeter, which equals c1 . Omega.
template <class T>
T lattice_perimeter(const BasicPolygon<T>& P) {
    T total{};
    for (const auto& e : P.edges) total += e.length;
    return total;
}

} // namespace toricinv
