#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "toricinv/invariants.hpp"

using namespace toricinv;

namespace {

const KahlerParams kC1Dp2{Rat(0), Rat(1), Rat(1), Rat(1)};
const KahlerParams kSymDp3{Rat(1), Rat(1), Rat(1), Rat(1)};

KahlerParams random_cone_point(std::mt19937_64& rng, SurfaceKind kind) {
    std::uniform_int_distribution<long> num(1, 64);
    std::uniform_int_distribution<long> den(1, 16);
    Rat a = rat(num(rng), den(rng)), b = rat(num(rng), den(rng));
    Rat g = rat(num(rng), den(rng)), d = rat(num(rng), den(rng));
    if (kind == SurfaceKind::DP2) a = 0;
    return {a, b, g, d};
}

} // namespace

TEST_CASE("scalar moments are pinned by the perimeter identity") {
    MomentPolygon P = build_polygon(SurfaceKind::DP2, kC1Dp2);
    CHECK(scalar_moment(P, 0, 0) == PiScalar(Rat(28), 1));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        KahlerParams p = random_cone_point(rng, SurfaceKind::DP3);
        MomentPolygon H = build_polygon(SurfaceKind::DP3, p);
        CHECK(scalar_moment(H, 0, 0) == PiScalar(4 * lattice_perimeter(H), 1));
        CHECK(scalar_moment(H, 0, 0).coeff == 4 * c1_dot(SurfaceKind::DP3, p));
    }

    // x <-> y symmetry at beta = gamma
    KahlerParams sym{Rat(0), rat(5, 3), rat(5, 3), Rat(2)};
    MomentPolygon S = build_polygon(SurfaceKind::DP2, sym);
    CHECK(scalar_moment(S, 1, 0) == scalar_moment(S, 0, 1));
}

TEST_CASE("invariants at the dp2 anticanonical class") {
    InvariantSet inv = invariant_set(SurfaceKind::DP2, kC1Dp2);
    CHECK(inv.V == rat(7, 2));
    CHECK(inv.F1 == rat(-2, 3));
    CHECK(inv.F2 == rat(-2, 3));
    CHECK(inv.s0 == PiScalar(Rat(8), 1));
    CHECK(inv.A == PiScalar(rat(265, 1008), -2));
    CHECK(inv.B == PiScalar(rat(265, 1008), -2));
    CHECK(inv.C == PiScalar(rat(-121, 2016), -2));
    // printed closed form: a = -41664 pi^2 / 12679, canonically reduced
    CHECK(inv.a == PiScalar(rat(-41664, 12679), 2));
    CHECK(inv.a == inv.b);
    CHECK(inv.a.coeff < 0);
}

TEST_CASE("futaki components vanish on the symmetric dp3 classes") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> num(1, 30);
    std::uniform_int_distribution<long> den(1, 6);
    for (int i = 0; i < 10; ++i) {
        Rat t = rat(num(rng), den(rng));
        InvariantSet inv = invariant_set(SurfaceKind::DP3, {t, t, t, Rat(1)});
        CHECK(inv.F1 == 0);
        CHECK(inv.F2 == 0);
    }
}

TEST_CASE("calB and calA at the reference classes") {
    CHECK(calB(SurfaceKind::DP2, kC1Dp2) == rat(1736, 12679));
    CHECK(calB(SurfaceKind::DP3, kSymDp3) == 0);

    FunctionalValue f = functional_value(SurfaceKind::DP2, kC1Dp2);
    CHECK(f.calT == 7);
    CHECK(f.calA == rat(90489, 12679));
    CHECK(f.calA < rat(29, 4));

    // the anticanonical class of DP3 sits on the delta = 0 hyperplane
    KahlerParams c1dp3{Rat(1), Rat(1), Rat(1), Rat(0)};
    CHECK(calT(SurfaceKind::DP3, c1dp3) == 6);
    CHECK(calB(SurfaceKind::DP3, c1dp3) == 0);
}

TEST_CASE("calB vanishes on the whole delta = 0 hyperplane") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> num(1, 64);
    std::uniform_int_distribution<long> den(1, 16);
    for (int i = 0; i < 25; ++i) {
        KahlerParams p{rat(num(rng), den(rng)), rat(num(rng), den(rng)),
                       rat(num(rng), den(rng)), Rat(0)};
        CHECK(calB(SurfaceKind::DP3, p) == 0);
    }
}

TEST_CASE("calT preconditions") {
    CHECK_THROWS_AS(calT(SurfaceKind::DP2, KahlerParams{Rat(0), Rat(1), Rat(1), Rat(-10)}),
                    NonPositiveSquare);
}

TEST_CASE("extremal potential solves the projection equations") {
    // F1 = a A + b C and F2 = a C + b B characterize the solved slopes
    std::mt19937_64 rng(29);
    for (SurfaceKind kind : {SurfaceKind::DP2, SurfaceKind::DP3}) {
        for (int i = 0; i < 20; ++i) {
            KahlerParams p = random_cone_point(rng, kind);
            InvariantSet inv = invariant_set(kind, p);
            CHECK(inv.a * inv.A + inv.b * inv.C == PiScalar(inv.F1));
            CHECK(inv.a * inv.C + inv.b * inv.B == PiScalar(inv.F2));
        }
    }
}

TEST_CASE("mean of the potential is s0") {
    // int (s - s0) dmu = 0, i.e. the boundary route and the potential
    // route agree on the zeroth moment
    std::mt19937_64 rng(31);
    for (int i = 0; i < 10; ++i) {
        KahlerParams p = random_cone_point(rng, SurfaceKind::DP3);
        MomentPolygon P = build_polygon(SurfaceKind::DP3, p);
        InvariantSet inv = invariant_set(SurfaceKind::DP3, p);
        CHECK(scalar_moment(P, 0, 0) == inv.s0 * PiScalar(inv.V));
    }
}

TEST_CASE("futaki energy equals 32 pi^2 calB") {
    std::mt19937_64 rng(37);
    for (SurfaceKind kind : {SurfaceKind::DP2, SurfaceKind::DP3}) {
        for (int i = 0; i < 30; ++i) {
            KahlerParams p = random_cone_point(rng, kind);
            PiScalar energy = futaki_energy(kind, p);
            PiScalar expected = PiScalar(Rat(32), 2) * PiScalar(calB(kind, p));
            CHECK(energy == expected);
        }
    }
}

TEST_CASE("scale invariance and degree -1 homogeneity") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> num(1, 12);
    std::uniform_int_distribution<long> den(1, 12);
    for (SurfaceKind kind : {SurfaceKind::DP2, SurfaceKind::DP3}) {
        for (int i = 0; i < 15; ++i) {
            KahlerParams p = random_cone_point(rng, kind);
            Rat c = rat(num(rng), den(rng));
            KahlerParams q = p.scaled(c);
            CHECK(calB(kind, p) == calB(kind, q));
            CHECK(calT(kind, p) == calT(kind, q));
            auto [lo, hi] = scalar_bounds(kind, p);
            auto [lo2, hi2] = scalar_bounds(kind, q);
            CHECK(lo2.coeff * c == lo.coeff);
            CHECK(hi2.coeff * c == hi.coeff);
        }
    }
}

TEST_CASE("scalar bounds") {
    auto [lo, hi] = scalar_bounds(SurfaceKind::DP3, kSymDp3);
    // constant potential: s_min = s_max = s0 = 4 pi (c1.Omega)/V = 72 pi/13
    CHECK(lo == hi);
    CHECK(lo == PiScalar(rat(72, 13), 1));

    AffinePotential pot = extremal_potential(SurfaceKind::DP2, kC1Dp2);
    auto [lo2, hi2] = scalar_bounds(SurfaceKind::DP2, kC1Dp2);
    CHECK(hi2 == pot.value_at_scaled(Rat(0), Rat(0)));  // a, b < 0
    CHECK(lo2.coeff > 0);

    // dp3 symmetric class has zero slopes
    AffinePotential flat = extremal_potential(SurfaceKind::DP3, kSymDp3);
    CHECK(flat.a.is_zero());
    CHECK(flat.b.is_zero());
}

TEST_CASE("box corner bound is a valid lower bound") {
    CHECK(box_corner_bound_dp2(kC1Dp2) == PiScalar(rat(55800, 12679), 1));
    std::mt19937_64 rng(43);
    for (int i = 0; i < 25; ++i) {
        KahlerParams p = random_cone_point(rng, SurfaceKind::DP2);
        PiScalar corner = box_corner_bound_dp2(p);
        auto [lo, hi] = scalar_bounds(SurfaceKind::DP2, p);
        CHECK(corner.coeff <= lo.coeff);
        CHECK(corner.coeff > 0);
    }
}

TEST_CASE("dp3 symbolic invariants specialize at alpha = 0 to dp2") {
    const auto& s3 = symbolic_invariants(SurfaceKind::DP3);
    const auto& s2 = symbolic_invariants(SurfaceKind::DP2);
    auto at0 = [](const MPoly& p) { return p.substitute(Var::alpha, Rat(0)); };
    CHECK(at0(s3.V) == s2.V);
    CHECK(at0(s3.Ft1) == s2.Ft1);
    CHECK(at0(s3.Ft2) == s2.Ft2);
    CHECK(at0(s3.At) == s2.At);
    CHECK(at0(s3.Bt) == s2.Bt);
    CHECK(at0(s3.Ct) == s2.Ct);
    CHECK(at0(s3.T) == s2.T);
    CHECK(at0(s3.S) == s2.S);

    const auto& [N3, D3] = calB_pair(SurfaceKind::DP3);
    const auto& [N2, D2] = calB_pair(SurfaceKind::DP2);
    CHECK(at0(N3) == N2);
    CHECK(at0(D3) == D2);
}

TEST_CASE("calB numerator is divisible by delta^2 and grades check out") {
    for (SurfaceKind kind : {SurfaceKind::DP2, SurfaceKind::DP3}) {
        const auto& [N, D] = calB_pair(kind);
        CHECK(N.is_homogeneous());
        CHECK(D.is_homogeneous());
        CHECK(N.degree() == D.degree());
        CHECK(N.min_exponent(Var::delta) >= 2);
    }
}

TEST_CASE("permuting the dp3 parameters permutes the vertex values") {
    KahlerParams p{rat(3, 2), rat(2, 3), rat(7, 4), Rat(1)};
    KahlerParams q{rat(2, 3), rat(7, 4), rat(3, 2), Rat(1)};  // cycled
    auto values = [](const KahlerParams& pp) {
        AffinePotential pot = extremal_potential(SurfaceKind::DP3, pp);
        MomentPolygon P = build_polygon(SurfaceKind::DP3, pp);
        std::vector<Rat> v;
        for (const auto& vert : P.vertices)
            v.push_back(pot.value_at_scaled(vert[0], vert[1]).coeff);
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(values(p) == values(q));
}

TEST_CASE("numeric pipeline matches the symbolic one at random points") {
    std::mt19937_64 rng(47);
    for (SurfaceKind kind : {SurfaceKind::DP2, SurfaceKind::DP3}) {
        RatFn cb = calB_symbolic(kind);
        RatFn ct = calT_symbolic(kind);
        for (int i = 0; i < 20; ++i) {
            KahlerParams p = random_cone_point(rng, kind);
            auto x = p.as_point();
            CHECK(cb.eval(x) == calB(kind, p));
            CHECK(ct.eval(x) == calT(kind, p));
        }
    }
}
