#include <catch_amalgamated.hpp>

#include <random>

#include "toricinv/cohomology.hpp"

using namespace toricinv;

namespace {

CohClass random_kahler(std::mt19937_64& rng, SurfaceKind kind) {
    std::uniform_int_distribution<long> num(1, 48);
    std::uniform_int_distribution<long> den(1, 12);
    KahlerParams p{kind == SurfaceKind::DP3 ? rat(num(rng), den(rng)) : Rat(0),
                   rat(num(rng), den(rng)), rat(num(rng), den(rng)),
                   rat(num(rng), den(rng))};
    return class_from_params(kind, p);
}

} // namespace

TEST_CASE("intersection form") {
    CohClass c2 = c1_class(SurfaceKind::DP2);
    CohClass c3 = c1_class(SurfaceKind::DP3);
    CHECK(intersect(c2, c2) == 7);
    CHECK(intersect(c3, c3) == 6);
    CohClass lee{Rat(1), {Rat(1), Rat(1)}};  // L - E1 - E2 on DP2
    CHECK(intersect(lee, lee) == -1);
    CHECK(intersect(c2, lee) == 1);
    CHECK_THROWS_AS(intersect(c2, c3), DimensionMismatch);

    SECTION("signature (1, k) on the basis") {
        CohClass L2{Rat(1), {Rat(0), Rat(0)}};
        CohClass E1{Rat(0), {Rat(-1), Rat(0)}};
        CohClass E2{Rat(0), {Rat(0), Rat(-1)}};
        CHECK(intersect(L2, L2) == 1);
        CHECK(intersect(E1, E1) == -1);
        CHECK(intersect(E2, E2) == -1);
        CHECK(intersect(L2, E1) == 0);
        CHECK(intersect(E1, E2) == 0);
    }
}

TEST_CASE("parameter maps round trip") {
    CHECK(params_from_class(c1_class(SurfaceKind::DP2)).beta == 1);
    CHECK(params_from_class(c1_class(SurfaceKind::DP2)).delta == 1);
    // the anticanonical class of DP3 sits on delta = 0
    KahlerParams p3 = params_from_class(c1_class(SurfaceKind::DP3));
    CHECK(p3.alpha == 1);
    CHECK(p3.beta == 1);
    CHECK(p3.gamma == 1);
    CHECK(p3.delta == 0);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 9);
    for (int i = 0; i < 100; ++i) {
        SurfaceKind kind = (i % 2) ? SurfaceKind::DP2 : SurfaceKind::DP3;
        CohClass c{rat(num(rng), den(rng)), {}};
        int k = (kind == SurfaceKind::DP2) ? 2 : 3;
        for (int j = 0; j < k; ++j) c.e.push_back(rat(num(rng), den(rng)));
        KahlerParams p = params_from_class(c);
        CohClass back = class_from_params(kind, p);
        CHECK(back.ell == c.ell);
        CHECK(back.e == c.e);
    }
}

TEST_CASE("kahler cone test") {
    CHECK(is_kahler(c1_class(SurfaceKind::DP2)));
    CHECK(is_kahler(c1_class(SurfaceKind::DP3)));
    CHECK(!is_kahler(CohClass{Rat(1), {Rat(1), Rat(1)}}));  // delta = -1

    SECTION("convex combinations stay in the cone") {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<long> tnum(0, 16);
        for (int i = 0; i < 100; ++i) {
            SurfaceKind kind = (i % 2) ? SurfaceKind::DP2 : SurfaceKind::DP3;
            CohClass x = random_kahler(rng, kind), y = random_kahler(rng, kind);
            Rat t = rat(tnum(rng), 16);
            CHECK(is_kahler(segment(x, y, t)));
        }
    }

    SECTION("kahler implies positive square and positive c1 pairing") {
        std::mt19937_64 rng(9);
        for (int i = 0; i < 100; ++i) {
            SurfaceKind kind = (i % 2) ? SurfaceKind::DP2 : SurfaceKind::DP3;
            CohClass x = random_kahler(rng, kind);
            CHECK(intersect(x, x) > 0);
            CHECK(intersect(c1_class(kind), x) > 0);
        }
    }
}

TEST_CASE("cremona involution") {
    CohClass sym = class_from_params(SurfaceKind::DP3, {Rat(1), Rat(1), Rat(1), Rat(1)});
    KahlerParams mirrored = params_from_class(cremona(sym));
    CHECK(mirrored.alpha == 2);
    CHECK(mirrored.beta == 2);
    CHECK(mirrored.gamma == 2);
    CHECK(mirrored.delta == -1);
    CHECK_THROWS_AS(cremona(c1_class(SurfaceKind::DP2)), DimensionMismatch);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        CohClass x = random_kahler(rng, SurfaceKind::DP3);
        CohClass xx = cremona(cremona(x));
        CHECK(xx.ell == x.ell);
        CHECK(xx.e == x.e);
    }

    SECTION("preserves the form, c1, calT and calB") {
        CohClass c3 = c1_class(SurfaceKind::DP3);
        CHECK(cremona(c3).ell == c3.ell);
        CHECK(cremona(c3).e == c3.e);
        std::mt19937_64 rng2(13);
        for (int i = 0; i < 20; ++i) {
            CohClass x = random_kahler(rng2, SurfaceKind::DP3);
            CohClass y = random_kahler(rng2, SurfaceKind::DP3);
            CHECK(intersect(cremona(x), cremona(y)) == intersect(x, y));
            CHECK(is_kahler(cremona(x)));
            CHECK(calT(cremona(x)) == calT(x));
            CHECK(calB(SurfaceKind::DP3, params_from_class(cremona(x))) ==
                  calB(SurfaceKind::DP3, params_from_class(x)));
        }
    }
}

TEST_CASE("exceptional class enumeration") {
    auto six = enumerate_negative_classes(SurfaceKind::DP3, 1);
    REQUIRE(six.size() == 6);
    // E1, E2, E3 and L - Ei - Ej, lexicographically sorted
    std::vector<std::vector<long>> expected = {
        {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0},
        {1, -1, -1, 0}, {1, -1, 0, -1}, {1, 0, -1, -1}};
    CHECK(six == expected);

    auto three = enumerate_negative_classes(SurfaceKind::DP2, 1);
    REQUIRE(three.size() == 3);
    std::vector<std::vector<long>> expected2 = {{0, 0, 1}, {0, 1, 0}, {1, -1, -1}};
    CHECK(three == expected2);

    auto pair = enumerate_negative_classes(SurfaceKind::DP2, 2);
    std::vector<std::vector<long>> expected3 = {{0, -1, 1}, {0, 1, -1}};
    CHECK(pair == expected3);

    SECTION("defining equations hold exactly") {
        for (long k = 1; k <= 4; ++k) {
            for (const auto& t : enumerate_negative_classes(SurfaceKind::DP3, k)) {
                CohClass c = class_from_homology_tuple(t);
                CHECK(intersect(c1_class(SurfaceKind::DP3), c) == 2 - k);
                CHECK(intersect(c, c) == -k);
            }
        }
    }

    SECTION("brute-force oracle over a large box") {
        for (SurfaceKind kind : {SurfaceKind::DP2, SurfaceKind::DP3}) {
            int k = (kind == SurfaceKind::DP2) ? 2 : 3;
            for (long ks = 1; ks <= 3; ++ks) {
                std::vector<std::vector<long>> brute;
                for (long n = -10; n <= 10; ++n)
                    for (long x = -10; x <= 10; ++x)
                        for (long y = -10; y <= 10; ++y) {
                            if (k == 2) {
                                if (3 * n + x + y == 2 - ks &&
                                    n * n - x * x - y * y == -ks)
                                    brute.push_back({n, x, y});
                            } else {
                                for (long z = -10; z <= 10; ++z)
                                    if (3 * n + x + y + z == 2 - ks &&
                                        n * n - x * x - y * y - z * z == -ks)
                                        brute.push_back({n, x, y, z});
                            }
                        }
                std::sort(brute.begin(), brute.end());
                CHECK(enumerate_negative_classes(kind, ks) == brute);
            }
        }
    }

    SECTION("(-1)-classes have positive area on random Kahler classes") {
        std::mt19937_64 rng(17);
        for (SurfaceKind kind : {SurfaceKind::DP2, SurfaceKind::DP3}) {
            auto classes = enumerate_negative_classes(kind, 1);
            for (int i = 0; i < 50; ++i) {
                CohClass omega = random_kahler(rng, kind);
                for (const auto& t : classes)
                    CHECK(intersect(omega, class_from_homology_tuple(t)) > 0);
            }
        }
    }
}

TEST_CASE("Y_t membership") {
    CHECK(disk_radius_sq(rat(29, 4)) == rat(7, 29));
    CHECK_THROWS_AS(disk_radius_sq(Rat(7)), UsageError);
    CHECK_THROWS_AS(disk_radius_sq(Rat(8)), UsageError);

    CohClass c2 = c1_class(SurfaceKind::DP2);
    for (long i = 1; i < 8; ++i)
        CHECK(T_sublevel_test(c2, Rat(7) + rat(i, 8)));  // eta = 0: always inside

    SECTION("both membership routes agree at random classes") {
        std::mt19937_64 rng(19);
        std::uniform_int_distribution<long> tpick(1, 7);
        int inside = 0, outside = 0;
        for (int i = 0; i < 200; ++i) {
            CohClass x = random_kahler(rng, SurfaceKind::DP2);
            Rat t = Rat(7) + rat(tpick(rng), 8);
            bool member = T_sublevel_test(x, t);  // throws on disagreement
            (member ? inside : outside)++;
        }
        CHECK(inside > 0);
        CHECK(outside > 0);
    }

    CHECK_THROWS_AS(T_sublevel_test(c1_class(SurfaceKind::DP3), rat(29, 4)),
                    DimensionMismatch);
}

TEST_CASE("segments and the degeneration path") {
    CohClass c2 = c1_class(SurfaceKind::DP2);
    CohClass omega = class_from_params(SurfaceKind::DP2, {Rat(0), Rat(2), Rat(1), Rat(1)});
    CHECK(segment(c2, omega, Rat(0)).e == c2.e);
    CHECK(segment(c2, omega, Rat(1)).e == omega.e);
    CHECK_THROWS_AS(segment(c2, omega, Rat(2)), UsageError);

    SECTION("E1 area along the path is exactly 1 - t") {
        for (long i = 0; i <= 100; ++i) {
            Rat t = rat(i, 100);
            CohClass c = degeneration_path(c2, t);
            CHECK(c.e[0] == 1 - t);
        }
    }

    SECTION("calT along the path never exceeds calT of the pullback") {
        std::mt19937_64 rng(23);
        for (int i = 0; i < 10; ++i) {
            CohClass om = random_kahler(rng, SurfaceKind::DP2);
            Rat target = calT(pullback_to_dp3(om));
            CHECK(target == calT(om));
            for (long j = 0; j <= 10; ++j) {
                CHECK(calT(degeneration_path(om, rat(j, 10))) <= target);
            }
        }
    }

    SECTION("calT is monotone along normalized segments from c1") {
        // with c1.eta = 0, calT(c1 + t eta) = (c1^2)^2/(c1^2 + t^2 eta^2)
        // increases in t since eta^2 < 0
        std::mt19937_64 rng(29);
        for (int i = 0; i < 10; ++i) {
            CohClass om = random_kahler(rng, SurfaceKind::DP2);
            Rat scale = intersect(c1_class(SurfaceKind::DP2), c1_class(SurfaceKind::DP2)) /
                        intersect(c1_class(SurfaceKind::DP2), om);
            CohClass norm{om.ell * scale, {om.e[0] * scale, om.e[1] * scale}};
            Rat prev = calT(c1_class(SurfaceKind::DP2));
            for (long j = 1; j <= 10; ++j) {
                Rat cur = calT(segment(c1_class(SurfaceKind::DP2), norm, rat(j, 10)));
                CHECK(cur >= prev);
                prev = cur;
            }
            CHECK(prev == calT(norm));
        }
    }
}

TEST_CASE("degeneration endpoint is the dp2 class seen inside dp3") {
    CohClass end = degeneration_path(c1_class(SurfaceKind::DP2), Rat(1));
    CHECK(end.e[0] == 0);
    CHECK(!is_kahler(end));  // boundary of the DP3 cone
    KahlerParams p = params_from_class(end);
    CHECK(p.alpha == 0);
    CHECK(p.beta == 1);
    CHECK(p.gamma == 1);
    CHECK(p.delta == 1);
    CHECK(calT(end) == 7);
}
