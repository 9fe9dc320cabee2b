#include <catch_amalgamated.hpp>

#include <random>

#include "toricinv/polygon.hpp"

using namespace toricinv;

namespace {

KahlerParams dp2_params(long b, long g, long d) {
    return {Rat(0), Rat(b), Rat(g), Rat(d)};
}

MomentPolygon unit_square() {
    MomentPolygon P;
    P.vertices = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}, {Rat(0), Rat(1)}};
    P.edges = {{{0, -1}, Rat(1)}, {{1, 0}, Rat(1)}, {{0, 1}, Rat(1)}, {{-1, 0}, Rat(1)}};
    return P;
}

KahlerParams random_cone_point(std::mt19937_64& rng, SurfaceKind kind) {
    std::uniform_int_distribution<long> num(1, 48);
    std::uniform_int_distribution<long> den(1, 12);
    Rat a = rat(num(rng), den(rng)), b = rat(num(rng), den(rng));
    Rat g = rat(num(rng), den(rng)), d = rat(num(rng), den(rng));
    if (kind == SurfaceKind::DP2) a = 0;
    return {a, b, g, d};
}

} // namespace

TEST_CASE("dp2 pentagon at the anticanonical class") {
    MomentPolygon P = build_polygon(SurfaceKind::DP2, dp2_params(1, 1, 1));
    REQUIRE(P.vertices.size() == 5);
    CHECK(P.vertices[0] == std::array<Rat, 2>{Rat(0), Rat(0)});
    CHECK(P.vertices[1] == std::array<Rat, 2>{Rat(2), Rat(0)});
    CHECK(P.vertices[2] == std::array<Rat, 2>{Rat(2), Rat(1)});
    CHECK(P.vertices[3] == std::array<Rat, 2>{Rat(1), Rat(2)});
    CHECK(P.vertices[4] == std::array<Rat, 2>{Rat(0), Rat(2)});
    CHECK(area_moment(P, 0, 0) == rat(7, 2));
    // cyclic edge lengths: beta+delta, gamma, delta, beta, gamma+delta
    CHECK(P.edges[0].length == 2);
    CHECK(P.edges[1].length == 1);
    CHECK(P.edges[2].length == 1);
    CHECK(P.edges[3].length == 1);
    CHECK(P.edges[4].length == 2);
}

TEST_CASE("dp3 hexagon and its alpha -> 0 limit") {
    KahlerParams p{Rat(1), Rat(1), Rat(1), Rat(1)};
    MomentPolygon H = build_polygon(SurfaceKind::DP3, p);
    REQUIRE(H.vertices.size() == 6);
    CHECK(area_moment(H, 0, 0) == rat(13, 2));

    KahlerParams limit{Rat(0), Rat(1), Rat(1), Rat(1)};
    MomentPolygon L = build_polygon(SurfaceKind::DP3, limit, /*allow_degenerate=*/true);
    MomentPolygon P = build_polygon(SurfaceKind::DP2, dp2_params(1, 1, 1));
    CHECK(L.vertices == P.vertices);
}

TEST_CASE("cone and degeneracy errors") {
    CHECK_THROWS_AS(build_polygon(SurfaceKind::DP2, dp2_params(1, 1, -1)), ConeViolation);
    CHECK_THROWS_AS(build_polygon(SurfaceKind::DP2, dp2_params(1, 1, 0)), ConeViolation);
    // delta = 0 with the flag: pentagon loses its diagonal edge
    MomentPolygon Q =
        build_polygon(SurfaceKind::DP2, dp2_params(2, 3, 0), /*allow_degenerate=*/true);
    CHECK(Q.vertices.size() == 4);
    CHECK(area_moment(Q, 0, 0) == rat(6));  // box beta x gamma
    // full collapse is refused even with the flag
    CHECK_THROWS_AS(
        build_polygon(SurfaceKind::DP2, dp2_params(0, 0, 0), /*allow_degenerate=*/true),
        DegeneratePolygon);
    // DP2 parameters must not carry alpha
    CHECK_THROWS_AS(
        build_polygon(SurfaceKind::DP2, KahlerParams{Rat(1), Rat(1), Rat(1), Rat(1)}),
        ConeViolation);
}

TEST_CASE("classical area moments") {
    MomentPolygon S = unit_square();
    CHECK(area_moment(S, 1, 0) == rat(1, 2));
    CHECK(area_moment(S, 0, 0) == 1);

    MomentPolygon T;
    T.vertices = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    T.edges = {{{0, -1}, Rat(1)}, {{1, 1}, Rat(1)}, {{-1, 0}, Rat(1)}};
    CHECK(area_moment(T, 0, 0) == rat(1, 2));
    CHECK(area_moment(T, 1, 0) == rat(1, 6));
    CHECK(area_moment(T, 1, 1) == rat(1, 24));
}

TEST_CASE("boundary moments against lattice length") {
    MomentPolygon S = unit_square();
    CHECK(boundary_moment(S, 0, 0) == 4);

    MomentPolygon P = build_polygon(SurfaceKind::DP2, dp2_params(1, 1, 1));
    CHECK(boundary_moment(P, 0, 0) == 7);  // = c1 . Omega = 3 + 2b + 2g
    CHECK(lattice_perimeter(P) == 7);

    // the diagonal edge alone: two-vertex strip whose return edge has
    // lattice length zero
    MomentPolygon E;
    E.vertices = {{Rat(1), Rat(2)}, {Rat(2), Rat(1)}};
    E.edges = {{{1, 1}, Rat(1)}, {{-1, -1}, Rat(0)}};
    CHECK(boundary_moment(E, 0, 0) == 1);
}

TEST_CASE("symbolic moments match printed shapes") {
    MPoly b = MPoly::var(Var::beta), g = MPoly::var(Var::gamma), d = MPoly::var(Var::delta);
    MPoly a = MPoly::var(Var::alpha);

    MPoly area2 = polygon_symbolic(SurfaceKind::DP2, 0, 0, /*boundary=*/false);
    CHECK(area2 == d.pow(2) * MPoly(rat(1, 2)) + b * d + g * d + b * g);

    MPoly area3 = polygon_symbolic(SurfaceKind::DP3, 0, 0, false);
    MPoly v3 = area3.substitute(Var::delta, Rat(1));
    MPoly printed_v3 = MPoly(rat(1, 2)) + a + b + g + a * b + a * g + b * g;
    CHECK(v3 == printed_v3);

    MPoly per2 = polygon_symbolic(SurfaceKind::DP2, 0, 0, true).substitute(Var::delta, Rat(1));
    CHECK(per2 == MPoly(Rat(3)) + MPoly(Rat(2)) * b + MPoly(Rat(2)) * g);

    CHECK_THROWS_AS(polygon_symbolic(SurfaceKind::DP2, 3, 2, false), Unsupported);
}

TEST_CASE("numeric and symbolic paths agree at random rational points") {
    std::mt19937_64 rng(2024);
    for (SurfaceKind kind : {SurfaceKind::DP2, SurfaceKind::DP3}) {
        for (int i = 0; i < 100; ++i) {
            KahlerParams p = random_cone_point(rng, kind);
            MomentPolygon P = build_polygon(kind, p);
            auto x = p.as_point();
            for (auto [mp, mq] : {std::pair{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}) {
                CHECK(polygon_symbolic(kind, mp, mq, false).eval(x) ==
                      area_moment(P, mp, mq));
                CHECK(polygon_symbolic(kind, mp, mq, true).eval(x) ==
                      boundary_moment(P, mp, mq));
            }
        }
    }
}

TEST_CASE("dp3 moments specialize at alpha = 0 to dp2 moments") {
    for (auto [mp, mq] : {std::pair{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}) {
        for (bool boundary : {false, true}) {
            CHECK(polygon_symbolic(SurfaceKind::DP3, mp, mq, boundary)
                      .substitute(Var::alpha, Rat(0)) ==
                  polygon_symbolic(SurfaceKind::DP2, mp, mq, boundary));
        }
    }
}

TEST_CASE("area moments agree with a Green's-theorem oracle") {
    // independent route: int x^p y^q dA = oint x^(p+1) y^q / (p+1) dy
    auto green = [](const MomentPolygon& P, int p, int q) {
        Rat total(0);
        std::size_t n = P.vertices.size();
        for (std::size_t e = 0; e < n; ++e) {
            const auto& A = P.vertices[e];
            const auto& Bv = P.vertices[(e + 1) % n];
            Rat dx = Bv[0] - A[0], dy = Bv[1] - A[1];
            if (dy == 0) continue;
            // parameterize and integrate (A.x + t dx)^(p+1) (A.y + t dy)^q dy
            for (int i = 0; i <= p + 1; ++i)
                for (int j = 0; j <= q; ++j) {
                    Rat binpi(1), binqj(1);
                    for (int m = 1; m <= i; ++m) binpi = binpi * (p + 2 - m) / m;
                    for (int m = 1; m <= j; ++m) binqj = binqj * (q + 1 - m) / m;
                    total += binpi * binqj * rat_pow(A[0], p + 1 - i) * rat_pow(dx, i) *
                             rat_pow(A[1], q - j) * rat_pow(dy, j) * dy /
                             ((i + j + 1) * (p + 1));
                }
        }
        return total;
    };
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        KahlerParams p = random_cone_point(rng, SurfaceKind::DP3);
        MomentPolygon P = build_polygon(SurfaceKind::DP3, p);
        for (auto [mp, mq] : {std::pair{0, 0}, {1, 0}, {2, 1}, {0, 3}}) {
            CHECK(area_moment(P, mp, mq) == green(P, mp, mq));
        }
    }
}
