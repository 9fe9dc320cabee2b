#pragma once

// Transcriptions of the published closed-form expressions, entered with
// the same nesting and term order as the source so they can be proofread
// line by line.  These are regression fixtures only: the library derives
// everything from the moment-polygon pipeline and must REPRODUCE these,
// never consume them.
//
// Layout notes:
//  * DP2 expressions are the delta = 1 specialization in (beta, gamma);
//    DP3 ones the delta = 1 specialization in (alpha, beta, gamma).
//  * A and B carry denominator 288 pi^2 V, C carries 576 pi^2 V (with the
//    sign folded into the numerator), a carries pi^2 in the numerator and
//    the degree-10 master denominator below, the scalar-curvature bounds
//    carry 24 pi in the numerator over the same master denominator.

#include "toricinv/mpoly.hpp"

namespace transcribed {

using toricinv::MPoly;
using toricinv::Rat;
using toricinv::Var;

inline MPoly c(long n, long d = 1) { return MPoly(toricinv::rat(n, d)); }
inline const MPoly a = MPoly::var(Var::alpha);
inline const MPoly b = MPoly::var(Var::beta);
inline const MPoly g = MPoly::var(Var::gamma);

// ----------------------------------------------------------------- DP2

inline MPoly dp2_V() { return b * g + b + g + c(1, 2); }

inline MPoly dp2_F1_num() {
    return (b - 2 * g) * (c(1, 3) + g + g.pow(2)) + g * (g - b) * (2 + b + 2 * g);
}

inline MPoly dp2_F2_num() {
    return (g - 2 * b) * (c(1, 3) + b + b.pow(2)) + b * (b - g) * (2 + g + 2 * b);
}

inline MPoly dp2_A_num() {
    return 1 + 6 * (1 + b) *
                   (b + b.pow(2) + b.pow(3) + g * (1 + 4 * b + 4 * b.pow(2) + 2 * b.pow(3)) +
                    g.pow(2) * (1 + b).pow(3));
}

inline MPoly dp2_B_num() {
    return 1 + 6 * (1 + g) *
                   (g + g.pow(2) + g.pow(3) + b * (1 + 4 * g + 4 * g.pow(2) + 2 * g.pow(3)) +
                    b.pow(2) * (1 + g).pow(3));
}

inline MPoly dp2_C_num() {
    return -(1 + 6 * (1 + b) * (1 + g) * (b + g + 3 * b * g));
}

inline MPoly dp2_calB_num() {
    return 8 * (g.pow(2) * (1 + 4 * g + 6 * g.pow(2) + 4 * g.pow(3)) +
                b * g * (-1 + 3 * g + 18 * g.pow(2) + 26 * g.pow(3) + 16 * g.pow(4)) +
                2 * b.pow(5) *
                    (2 + 8 * g + 21 * g.pow(2) + 33 * g.pow(3) + 27 * g.pow(4) + 9 * g.pow(5)) +
                b.pow(2) *
                    (1 + 3 * g + 27 * g.pow(2) + 79 * g.pow(3) + 89 * g.pow(4) + 42 * g.pow(5)) +
                b.pow(4) *
                    (6 + 26 * g + 89 * g.pow(2) + 168 * g.pow(3) + 150 * g.pow(4) + 54 * g.pow(5)) +
                b.pow(3) *
                    (4 + 18 * g + 79 * g.pow(2) + 173 * g.pow(3) + 168 * g.pow(4) + 66 * g.pow(5)));
}

inline MPoly dp2_calB_den() {
    return 48 * b.pow(6) * (1 + g).pow(6) +
           48 * b.pow(5) * (1 + g).pow(3) * (3 + 12 * g + 14 * g.pow(2) + 6 * g.pow(3)) +
           (1 + 2 * g).pow(2) * (1 + 8 * g + 20 * g.pow(2) + 24 * g.pow(3) + 12 * g.pow(4)) +
           4 * b.pow(4) * (1 + g).pow(2) *
               (47 + 282 * g + 573 * g.pow(2) + 504 * g.pow(3) + 180 * g.pow(4)) +
           4 * b *
               (3 + 33 * g + 140 * g.pow(2) + 306 * g.pow(3) + 376 * g.pow(4) + 252 * g.pow(5) +
                72 * g.pow(6)) +
           8 * b.pow(2) *
               (7 + 70 * g + 270 * g.pow(2) + 535 * g.pow(3) + 592 * g.pow(4) + 354 * g.pow(5) +
                90 * g.pow(6)) +
           8 * b.pow(3) *
               (17 + 153 * g + 535 * g.pow(2) + 963 * g.pow(3) + 966 * g.pow(4) + 522 * g.pow(5) +
                120 * g.pow(6));
}

// Denominator minus four times the numerator of calB (the displayed
// difference polynomial; only the beta^4 and gamma^4 coefficients are
// negative).
inline MPoly dp2_up1_diff() {
    return 1 + 12 * g + 24 * g.pow(2) + 8 * g.pow(3) - 4 * g.pow(4) + 16 * g.pow(5) +
           48 * g.pow(6) + 48 * b.pow(6) * (1 + g).pow(6) +
           16 * b.pow(5) *
               (1 + 31 * g + 93 * g.pow(2) + 129 * g.pow(3) + 108 * g.pow(4) + 60 * g.pow(5) +
                18 * g.pow(6)) +
           4 * b *
               (3 + 41 * g + 116 * g.pow(2) + 162 * g.pow(3) + 168 * g.pow(4) + 124 * g.pow(5) +
                72 * g.pow(6)) +
           8 * b.pow(2) *
               (3 + 58 * g + 162 * g.pow(2) + 219 * g.pow(3) + 236 * g.pow(4) + 186 * g.pow(5) +
                90 * g.pow(6)) +
           8 * b.pow(3) *
               (1 + 81 * g + 219 * g.pow(2) + 271 * g.pow(3) + 294 * g.pow(4) + 258 * g.pow(5) +
                120 * g.pow(6)) +
           4 * b.pow(4) *
               (-1 + 168 * g + 472 * g.pow(2) + 588 * g.pow(3) + 561 * g.pow(4) + 432 * g.pow(5) +
                180 * g.pow(6));
}

// Degree-10 master denominator shared by a, b and the scalar-curvature
// bounds on DP2.
inline MPoly dp2_master_den() {
    return 1 + 10 * g + 36 * g.pow(2) + 64 * g.pow(3) + 60 * g.pow(4) + 24 * g.pow(5) +
           24 * b.pow(5) * (1 + g).pow(5) +
           12 * b.pow(4) * (1 + g).pow(2) * (5 + 20 * g + 23 * g.pow(2) + 10 * g.pow(3)) +
           16 * b.pow(3) *
               (4 + 28 * g + 72 * g.pow(2) + 90 * g.pow(3) + 57 * g.pow(4) + 15 * g.pow(5)) +
           12 * b.pow(2) *
               (3 + 24 * g + 69 * g.pow(2) + 96 * g.pow(3) + 68 * g.pow(4) + 20 * g.pow(5)) +
           2 * b * (5 + 45 * g + 144 * g.pow(2) + 224 * g.pow(3) + 180 * g.pow(4) + 60 * g.pow(5));
}

// numerator of a, carrying pi^2
inline MPoly dp2_a_num() {
    return -192 * g *
           (1 + 4 * g + 6 * g.pow(2) + 4 * g.pow(3) + 6 * b.pow(3) * (1 + g).pow(3) +
            2 * b.pow(2) * (6 + 18 * g + 17 * g.pow(2) + 6 * g.pow(3)) +
            b * (7 + 21 * g + 22 * g.pow(2) + 10 * g.pow(3)));
}

// numerator of the closed-form scalar-curvature lower bound, carrying 24 pi
inline MPoly dp2_smin_num() {
    return 24 * ((1 + 2 * g) * (1 + 2 * g + 2 * g.pow(2)).pow(2) +
                 8 * b.pow(5) * (1 + g).pow(4) +
                 4 * b.pow(4) *
                     (5 + 24 * g + 40 * g.pow(2) + 32 * g.pow(3) + 13 * g.pow(4) + 2 * g.pow(5)) +
                 8 * b.pow(3) *
                     (3 + 14 * g + 25 * g.pow(2) + 26 * g.pow(3) + 16 * g.pow(4) + 4 * g.pow(5)) +
                 4 * b.pow(2) *
                     (4 + 16 * g + 33 * g.pow(2) + 50 * g.pow(3) + 40 * g.pow(4) + 12 * g.pow(5)) +
                 2 * b *
                     (3 + 12 * g + 32 * g.pow(2) + 56 * g.pow(3) + 48 * g.pow(4) + 16 * g.pow(5)));
}

// ----------------------------------------------------------------- DP3

inline MPoly dp3_V() { return a * b + a * g + b * g + a + b + g + c(1, 2); }

inline MPoly dp3_F1_num() {
    return (a + b - 2 * g) * (c(1, 3) + g + g.pow(2)) +
           (g - a) * (g - b) * (2 + a + b + 2 * g);
}

inline MPoly dp3_F2_num() {
    return (a + g - 2 * b) * (c(1, 3) + b + b.pow(2)) +
           (b - a) * (b - g) * (2 + a + g + 2 * b);
}

inline MPoly dp3_A_num() {
    return 1 + 6 * b + 12 * b.pow(2) + 12 * b.pow(3) + 6 * b.pow(4) +
           6 * g.pow(2) * (1 + b).pow(4) + 6 * a.pow(4) * (1 + g + b).pow(2) +
           6 * g * (1 + 5 * b + 8 * b.pow(2) + 6 * b.pow(3) + 2 * b.pow(4)) +
           6 * a.pow(2) *
               (2 + 8 * b + 9 * b.pow(2) + 4 * b.pow(3) + b.pow(4) +
                6 * g.pow(2) * (1 + b).pow(2) + 2 * g * (2 + b).pow(2) * (1 + 2 * b)) +
           12 * a.pow(3) *
               (1 + 3 * b + 2 * b.pow(2) + 2 * g.pow(2) * (1 + b) +
                g * (3 + 6 * b + 2 * b.pow(2))) +
           6 * a *
               (1 + 5 * b + 8 * b.pow(2) + 6 * b.pow(3) + 2 * b.pow(4) +
                4 * g.pow(2) * (1 + b).pow(3) +
                g * (5 + 20 * b + 24 * b.pow(2) + 12 * b.pow(3) + 2 * b.pow(4)));
}

inline MPoly dp3_B_num() {
    return 1 + 6 * g + 12 * g.pow(2) + 12 * g.pow(3) + 6 * g.pow(4) +
           6 * b.pow(2) * (1 + g).pow(4) + 6 * a.pow(4) * (1 + b + g).pow(2) +
           6 * b * (1 + 5 * g + 8 * g.pow(2) + 6 * g.pow(3) + 2 * g.pow(4)) +
           6 * a.pow(2) *
               (2 + 8 * g + 9 * g.pow(2) + 4 * g.pow(3) + g.pow(4) +
                6 * b.pow(2) * (1 + g).pow(2) + 2 * b * (2 + g).pow(2) * (1 + 2 * g)) +
           12 * a.pow(3) *
               (1 + 3 * g + 2 * g.pow(2) + 2 * b.pow(2) * (1 + g) +
                b * (3 + 6 * g + 2 * g.pow(2))) +
           6 * a *
               (1 + 5 * g + 8 * g.pow(2) + 6 * g.pow(3) + 2 * g.pow(4) +
                4 * b.pow(2) * (1 + g).pow(3) +
                b * (5 + 20 * g + 24 * g.pow(2) + 12 * g.pow(3) + 2 * g.pow(4)));
}

inline MPoly dp3_C_num() {
    return -(1 + 6 * g + 6 * g.pow(2) + 12 * a.pow(4) * (1 + b + g).pow(2) +
             6 * b.pow(2) * (1 + 4 * g + 3 * g.pow(2)) + 6 * b * (1 + 5 * g + 4 * g.pow(2)) +
             24 * a.pow(3) *
                 (1 + 3 * g + 2 * g.pow(2) + 2 * b.pow(2) * (1 + g) +
                  b * (3 + 6 * g + 2 * g.pow(2))) +
             18 * a.pow(2) *
                 (1 + 4 * g + 3 * g.pow(2) + b.pow(2) * (3 + 6 * g + 2 * g.pow(2)) +
                  2 * b * (2 + 6 * g + 3 * g.pow(2))) +
             6 * a *
                 (1 + 5 * g + 4 * g.pow(2) + 2 * b.pow(2) * (2 + 6 * g + 3 * g.pow(2)) +
                  b * (5 + 20 * g + 12 * g.pow(2))));
}

// Denominator minus four times the numerator of calB on DP3.
inline MPoly dp3_up2_diff() {
    return 1 + 12 * g + 24 * g.pow(2) + 8 * g.pow(3) - 4 * g.pow(4) + 16 * g.pow(5) +
           48 * g.pow(6) + 48 * b.pow(6) * (1 + g).pow(6) +
           48 * a.pow(6) * (1 + b + g).pow(6) +
           16 * b.pow(5) *
               (1 + 31 * g + 93 * g.pow(2) + 129 * g.pow(3) + 108 * g.pow(4) + 60 * g.pow(5) +
                18 * g.pow(6)) +
           4 * b *
               (3 + 41 * g + 116 * g.pow(2) + 162 * g.pow(3) + 168 * g.pow(4) + 124 * g.pow(5) +
                72 * g.pow(6)) +
           8 * b.pow(2) *
               (3 + 58 * g + 162 * g.pow(2) + 219 * g.pow(3) + 236 * g.pow(4) + 186 * g.pow(5) +
                90 * g.pow(6)) +
           8 * b.pow(3) *
               (1 + 81 * g + 219 * g.pow(2) + 271 * g.pow(3) + 294 * g.pow(4) + 258 * g.pow(5) +
                120 * g.pow(6)) +
           4 * b.pow(4) *
               (-1 + 168 * g + 472 * g.pow(2) + 588 * g.pow(3) + 561 * g.pow(4) + 432 * g.pow(5) +
                180 * g.pow(6)) +
           16 * a.pow(5) *
               (1 + 31 * g + 93 * g.pow(2) + 129 * g.pow(3) + 108 * g.pow(4) + 60 * g.pow(5) +
                18 * g.pow(6) + 18 * b.pow(6) * (1 + g) +
                12 * b.pow(5) * (5 + 16 * g + 7 * g.pow(2)) +
                6 * b.pow(4) * (18 + 102 * g + 98 * g.pow(2) + 27 * g.pow(3)) +
                3 * b.pow(3) * (43 + 324 * g + 482 * g.pow(2) + 276 * g.pow(3) + 54 * g.pow(4)) +
                3 * b.pow(2) *
                    (31 + 275 * g + 550 * g.pow(2) + 482 * g.pow(3) + 196 * g.pow(4) +
                     28 * g.pow(5)) +
                b * (31 + 330 * g + 825 * g.pow(2) + 972 * g.pow(3) + 612 * g.pow(4) +
                     192 * g.pow(5) + 18 * g.pow(6))) +
           4 * a.pow(4) *
               (-1 + 168 * g + 472 * g.pow(2) + 588 * g.pow(3) + 561 * g.pow(4) + 432 * g.pow(5) +
                180 * g.pow(6) + 180 * b.pow(6) * (1 + g).pow(2) +
                24 * b.pow(5) * (18 + 102 * g + 98 * g.pow(2) + 27 * g.pow(3)) +
                b.pow(4) * (561 + 6468 * g + 9624 * g.pow(2) + 5112 * g.pow(3) + 936 * g.pow(4)) +
                12 * b.pow(3) *
                    (49 + 757 * g + 1505 * g.pow(2) + 1196 * g.pow(3) + 426 * g.pow(4) +
                     54 * g.pow(5)) +
                4 * b *
                    (42 + 650 * g + 1788 * g.pow(2) + 2271 * g.pow(3) + 1617 * g.pow(4) +
                     612 * g.pow(5) + 90 * g.pow(6)) +
                2 * b.pow(2) *
                    (236 + 3576 * g + 8631 * g.pow(2) + 9030 * g.pow(3) + 4812 * g.pow(4) +
                     1176 * g.pow(5) + 90 * g.pow(6))) +
           4 * a *
               (3 + 41 * g + 116 * g.pow(2) + 162 * g.pow(3) + 168 * g.pow(4) + 124 * g.pow(5) +
                72 * g.pow(6) + 72 * b.pow(6) * (1 + g).pow(5) +
                4 * b.pow(5) *
                    (31 + 330 * g + 825 * g.pow(2) + 972 * g.pow(3) + 612 * g.pow(4) +
                     192 * g.pow(5) + 18 * g.pow(6)) +
                4 * b.pow(4) *
                    (42 + 650 * g + 1788 * g.pow(2) + 2271 * g.pow(3) + 1617 * g.pow(4) +
                     612 * g.pow(5) + 90 * g.pow(6)) +
                b * (41 + 570 * g + 1812 * g.pow(2) + 2816 * g.pow(3) + 2600 * g.pow(4) +
                     1320 * g.pow(5) + 360 * g.pow(6)) +
                2 * b.pow(2) *
                    (58 + 906 * g + 2832 * g.pow(2) + 4189 * g.pow(3) + 3576 * g.pow(4) +
                     1650 * g.pow(5) + 360 * g.pow(6)) +
                2 * b.pow(3) *
                    (81 + 1408 * g + 4189 * g.pow(2) + 5778 * g.pow(3) + 4542 * g.pow(4) +
                     1944 * g.pow(5) + 360 * g.pow(6))) +
           8 * a.pow(3) *
               (1 + 81 * g + 219 * g.pow(2) + 271 * g.pow(3) + 294 * g.pow(4) + 258 * g.pow(5) +
                120 * g.pow(6) + 120 * b.pow(6) * (1 + g).pow(3) +
                6 * b.pow(5) * (43 + 324 * g + 482 * g.pow(2) + 276 * g.pow(3) + 54 * g.pow(4)) +
                6 * b.pow(4) *
                    (49 + 757 * g + 1505 * g.pow(2) + 1196 * g.pow(3) + 426 * g.pow(4) +
                     54 * g.pow(5)) +
                b.pow(3) *
                    (271 + 5778 * g + 14082 * g.pow(2) + 14328 * g.pow(3) + 7176 * g.pow(4) +
                     1656 * g.pow(5) + 120 * g.pow(6)) +
                b * (81 + 1408 * g + 4189 * g.pow(2) + 5778 * g.pow(3) + 4542 * g.pow(4) +
                     1944 * g.pow(5) + 360 * g.pow(6)) +
                b.pow(2) *
                    (219 + 4189 * g + 11592 * g.pow(2) + 14082 * g.pow(3) + 9030 * g.pow(4) +
                     2892 * g.pow(5) + 360 * g.pow(6))) +
           8 * a.pow(2) *
               (3 + 58 * g + 162 * g.pow(2) + 219 * g.pow(3) + 236 * g.pow(4) + 186 * g.pow(5) +
                90 * g.pow(6) + 90 * b.pow(6) * (1 + g).pow(4) +
                6 * b.pow(5) *
                    (31 + 275 * g + 550 * g.pow(2) + 482 * g.pow(3) + 196 * g.pow(4) +
                     28 * g.pow(5)) +
                b.pow(4) *
                    (236 + 3576 * g + 8631 * g.pow(2) + 9030 * g.pow(3) + 4812 * g.pow(4) +
                     1176 * g.pow(5) + 90 * g.pow(6)) +
                3 * b.pow(2) *
                    (54 + 944 * g + 2838 * g.pow(2) + 3864 * g.pow(3) + 2877 * g.pow(4) +
                     1100 * g.pow(5) + 180 * g.pow(6)) +
                b * (58 + 906 * g + 2832 * g.pow(2) + 4189 * g.pow(3) + 3576 * g.pow(4) +
                     1650 * g.pow(5) + 360 * g.pow(6)) +
                b.pow(3) *
                    (219 + 4189 * g + 11592 * g.pow(2) + 14082 * g.pow(3) + 9030 * g.pow(4) +
                     2892 * g.pow(5) + 360 * g.pow(6)));
}

// Value of the extremal potential at the hexagon vertex (alpha, 0) in
// scaled coordinates; carries 24 pi over the DP3 master denominator.
inline MPoly dp3_vertex_num() {
    return 24 * (1 + 10 * g + 32 * g.pow(2) + 48 * g.pow(3) + 36 * g.pow(4) + 8 * g.pow(5) +
                 8 * b.pow(5) * (1 + g).pow(4) + 8 * a.pow(5) * (1 + b + g).pow(4) +
                 4 * b.pow(4) *
                     (9 + 44 * g + 80 * g.pow(2) + 68 * g.pow(3) + 25 * g.pow(4) + 2 * g.pow(5)) +
                 8 * b.pow(3) *
                     (6 + 37 * g + 80 * g.pow(2) + 78 * g.pow(3) + 34 * g.pow(4) + 4 * g.pow(5)) +
                 4 * b.pow(2) *
                     (8 + 60 * g + 147 * g.pow(2) + 160 * g.pow(3) + 80 * g.pow(4) +
                      12 * g.pow(5)) +
                 2 * b *
                     (5 + 44 * g + 120 * g.pow(2) + 148 * g.pow(3) + 88 * g.pow(4) +
                      16 * g.pow(5)) +
                 4 * a.pow(4) *
                     (5 + 2 * b.pow(5) + 24 * g + 40 * g.pow(2) + 32 * g.pow(3) + 13 * g.pow(4) +
                      2 * g.pow(5) + b.pow(4) * (19 + 18 * g) +
                      b.pow(3) * (50 + 96 * g + 40 * g.pow(2)) +
                      2 * b.pow(2) * (29 + 84 * g + 72 * g.pow(2) + 20 * g.pow(3)) +
                      2 * b * (15 + 58 * g + 75 * g.pow(2) + 42 * g.pow(3) + 9 * g.pow(4))) +
                 8 * a.pow(3) *
                     (3 + 17 * g + 34 * g.pow(2) + 35 * g.pow(3) + 19 * g.pow(4) + 4 * g.pow(5) +
                      4 * b.pow(5) * (1 + g) + b.pow(4) * (25 + 48 * g + 20 * g.pow(2)) +
                      b.pow(3) * (52 + 151 * g + 125 * g.pow(2) + 30 * g.pow(3)) +
                      b.pow(2) * (52 + 201 * g + 246 * g.pow(2) + 122 * g.pow(3) + 20 * g.pow(4)) +
                      b * (23 + 110 * g + 177 * g.pow(2) + 133 * g.pow(3) + 45 * g.pow(4) +
                           4 * g.pow(5))) +
                 4 * a.pow(2) *
                     (4 + 28 * g + 69 * g.pow(2) + 84 * g.pow(3) + 52 * g.pow(4) + 12 * g.pow(5) +
                      12 * b.pow(5) * (1 + g).pow(2) +
                      2 * b.pow(4) * (31 + 90 * g + 78 * g.pow(2) + 20 * g.pow(3)) +
                      2 * b.pow(3) * (53 + 210 * g + 267 * g.pow(2) + 128 * g.pow(3) +
                                      20 * g.pow(4)) +
                      6 * b.pow(2) *
                          (15 + 75 * g + 123 * g.pow(2) + 86 * g.pow(3) + 25 * g.pow(4) +
                           2 * g.pow(5)) +
                      b * (35 + 210 * g + 420 * g.pow(2) + 388 * g.pow(3) + 168 * g.pow(4) +
                           24 * g.pow(5))) +
                 2 * a *
                     (3 + 26 * g + 74 * g.pow(2) + 100 * g.pow(3) + 68 * g.pow(4) + 16 * g.pow(5) +
                      16 * b.pow(5) * (1 + g).pow(3) +
                      4 * b.pow(4) * (19 + 74 * g + 99 * g.pow(2) + 54 * g.pow(3) + 9 * g.pow(4)) +
                      4 * b.pow(3) *
                          (28 + 142 * g + 243 * g.pow(2) + 175 * g.pow(3) + 51 * g.pow(4) +
                           4 * g.pow(5)) +
                      2 * b.pow(2) *
                          (41 + 258 * g + 528 * g.pow(2) + 470 * g.pow(3) + 186 * g.pow(4) +
                           24 * g.pow(5)) +
                      b * (28 + 210 * g + 498 * g.pow(2) + 536 * g.pow(3) + 276 * g.pow(4) +
                           48 * g.pow(5))));
}

// Degree-10 master denominator on DP3 (also the second factor of the
// published calB denominator; its alpha = 0 slice is dp2_master_den).
inline MPoly dp3_master_den() {
    return 1 + 10 * g + 36 * g.pow(2) + 64 * g.pow(3) + 60 * g.pow(4) + 24 * g.pow(5) +
           24 * b.pow(5) * (1 + g).pow(5) + 24 * a.pow(5) * (1 + b + g).pow(5) +
           12 * b.pow(4) * (1 + g).pow(2) * (5 + 20 * g + 23 * g.pow(2) + 10 * g.pow(3)) +
           16 * b.pow(3) *
               (4 + 28 * g + 72 * g.pow(2) + 90 * g.pow(3) + 57 * g.pow(4) + 15 * g.pow(5)) +
           12 * b.pow(2) *
               (3 + 24 * g + 69 * g.pow(2) + 96 * g.pow(3) + 68 * g.pow(4) + 20 * g.pow(5)) +
           2 * b * (5 + 45 * g + 144 * g.pow(2) + 224 * g.pow(3) + 180 * g.pow(4) + 60 * g.pow(5)) +
           12 * a.pow(4) * (1 + b + g).pow(2) *
               (5 + 20 * g + 23 * g.pow(2) + 10 * g.pow(3) + 10 * b.pow(3) * (1 + g) +
                b.pow(2) * (23 + 46 * g + 16 * g.pow(2)) +
                2 * b * (10 + 30 * g + 23 * g.pow(2) + 5 * g.pow(3))) +
           16 * a.pow(3) *
               (4 + 28 * g + 72 * g.pow(2) + 90 * g.pow(3) + 57 * g.pow(4) + 15 * g.pow(5) +
                15 * b.pow(5) * (1 + g).pow(2) +
                3 * b.pow(4) * (19 + 57 * g + 50 * g.pow(2) + 13 * g.pow(3)) +
                3 * b.pow(3) * (30 + 120 * g + 155 * g.pow(2) + 78 * g.pow(3) + 13 * g.pow(4)) +
                3 * b.pow(2) *
                    (24 + 120 * g + 206 * g.pow(2) + 155 * g.pow(3) + 50 * g.pow(4) +
                     5 * g.pow(5)) +
                b * (28 + 168 * g + 360 * g.pow(2) + 360 * g.pow(3) + 171 * g.pow(4) +
                     30 * g.pow(5))) +
           12 * a.pow(2) *
               (3 + 24 * g + 69 * g.pow(2) + 96 * g.pow(3) + 68 * g.pow(4) + 20 * g.pow(5) +
                20 * b.pow(5) * (1 + g).pow(3) +
                b.pow(4) * (68 + 272 * g + 366 * g.pow(2) + 200 * g.pow(3) + 36 * g.pow(4)) +
                4 * b.pow(3) *
                    (24 + 120 * g + 206 * g.pow(2) + 155 * g.pow(3) + 50 * g.pow(4) +
                     5 * g.pow(5)) +
                2 * b *
                    (12 + 84 * g + 207 * g.pow(2) + 240 * g.pow(3) + 136 * g.pow(4) +
                     30 * g.pow(5)) +
                b.pow(2) *
                    (69 + 414 * g + 864 * g.pow(2) + 824 * g.pow(3) + 366 * g.pow(4) +
                     60 * g.pow(5))) +
           2 * a *
               (5 + 45 * g + 144 * g.pow(2) + 224 * g.pow(3) + 180 * g.pow(4) + 60 * g.pow(5) +
                60 * b.pow(5) * (1 + g).pow(4) +
                12 * b.pow(4) *
                    (15 + 75 * g + 136 * g.pow(2) + 114 * g.pow(3) + 43 * g.pow(4) +
                     5 * g.pow(5)) +
                12 * b.pow(2) *
                    (12 + 84 * g + 207 * g.pow(2) + 240 * g.pow(3) + 136 * g.pow(4) +
                     30 * g.pow(5)) +
                8 * b.pow(3) *
                    (28 + 168 * g + 360 * g.pow(2) + 360 * g.pow(3) + 171 * g.pow(4) +
                     30 * g.pow(5)) +
                3 * b *
                    (15 + 120 * g + 336 * g.pow(2) + 448 * g.pow(3) + 300 * g.pow(4) +
                     80 * g.pow(5)));
}

} // namespace transcribed
