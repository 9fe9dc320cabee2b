#pragma once

#include <map>
#include <string>
#include <vector>

#include "toricinv/cohomology.hpp"
#include "toricinv/invariants.hpp"

namespace toricinv {

struct Bracket {
    Rat lo, hi;
    int sign_lo = 0, sign_hi = 0;
    int iterations = 0;
};

namespace detail {

inline bool is_univariate(const MPoly& p, Var v) {
    int iv = static_cast<int>(v);
    for (const auto& [e, c] : p.terms())
        for (int i = 0; i < 4; ++i)
            if (i != iv && e[i] != 0) return false;
    return true;
}

inline int exact_sign(const RatFn& f, Var v, const Rat& x) {
    std::array<Rat, 4> pt{x, x, x, x};
    (void)v;
    return f.sign_at(pt);
}

} // namespace detail

/// Exact-sign bisection of a univariate rational function: every sign
/// evaluation is rational arithmetic, no floats anywhere in the loop.
/// Preconditions: f univariate in v with opposite exact signs at lo, hi.
/// Iteration cap 256 guards pathological tolerances.
inline Bracket sign_bisection(const RatFn& f, Var v, Rat lo, Rat hi, const Rat& tol) {
    if (!(detail::is_univariate(f.num(), v) && detail::is_univariate(f.den(), v)))
        throw UsageError("sign_bisection: function is not univariate in the given variable");
    if (!(lo < hi)) throw UsageError("sign_bisection: empty interval");
    if (tol <= 0) throw UsageError("sign_bisection: tolerance must be positive");
    Bracket br;
    br.sign_lo = detail::exact_sign(f, v, lo);
    br.sign_hi = detail::exact_sign(f, v, hi);
    if (br.sign_lo == 0) return {lo, lo, 0, 0, 0};
    if (br.sign_hi == 0) return {hi, hi, 0, 0, 0};
    if (br.sign_lo == br.sign_hi)
        throw SameSignError("sign_bisection: no sign change across the interval");
    int iter = 0;
    while (hi - lo > tol) {
        if (++iter > 256)
            throw ToleranceTooSmall("sign_bisection: iteration cap (256) exceeded");
        Rat mid = (lo + hi) / 2;
        int sm = detail::exact_sign(f, v, mid);
        if (sm == 0) {
            lo = hi = mid;
            break;
        }
        if (sm == br.sign_lo) lo = mid;
        else hi = mid;
    }
    br.lo = lo;
    br.hi = hi;
    br.iterations = iter;
    return br;
}

struct MinimizationResult {
    KahlerParams params_star;   // delta = 1 slice, beta = gamma
    Rat calA_star;              // exact value at the rational witness
    double gradient_norm = 0;   // diagnostic only
    Rat certified_below;        // target 29/4
    bool inside_Y = false;      // |eta^2| < 7/29 strictly
    bool diagonal_symmetry_ok = false;
    bool partials_flip_ok = false;
    bool offdiagonal_ok = false;  // 1/100-grid over Y found nothing smaller
    Rat grid_min;
    KahlerParams grid_argmin;
    Bracket bracket;
};

namespace detail {

/// calA on the delta = 1 slice of DP2, specialized for bulk evaluation.
struct CalAEvaluatorDP2 {
    MPoly N, D, V, P;

    CalAEvaluatorDP2() {
        const auto& [Nh, Dh] = calB_pair(SurfaceKind::DP2);
        N = Nh.substitute(Var::delta, Rat(1));
        D = Dh.substitute(Var::delta, Rat(1));
        V = symbolic_invariants(SurfaceKind::DP2).V.substitute(Var::delta, Rat(1));
        P = MPoly(Rat(3)) + MPoly(Rat(2)) * MPoly::var(Var::beta) +
            MPoly(Rat(2)) * MPoly::var(Var::gamma);
    }

    Rat calT(const Rat& b, const Rat& g) const {
        std::array<Rat, 4> x{Rat(0), b, g, Rat(1)};
        Rat per = P.eval(x);
        return per * per / (2 * V.eval(x));
    }
    Rat calA(const Rat& b, const Rat& g) const {
        std::array<Rat, 4> x{Rat(0), b, g, Rat(1)};
        Rat per = P.eval(x);
        return per * per / (2 * V.eval(x)) + N.eval(x) / D.eval(x);
    }
};

} // namespace detail

/// Locates the minimizing Kahler class of the action functional on DP2.
/// Strategy: calA is symmetric in (beta, gamma) (verified symbolically),
/// so the critical class is bracketed by exact-sign bisection of
/// d(calA)/d(beta) along the diagonal inside Y_{29/4}; both partial
/// derivatives must change sign across the bracket, and a 1/100 grid over
/// Y_{29/4} must find no smaller value off the diagonal.
inline MinimizationResult minimize_calA_dp2(const Rat& tolerance) {
    if (tolerance <= 0) throw UsageError("minimize_calA_dp2: tolerance must be positive");
    MinimizationResult res;
    res.certified_below = Rat(29, 4);

    RatFn calA = calA_symbolic(SurfaceKind::DP2).substitute(Var::delta, Rat(1));
    res.diagonal_symmetry_ok = ratfn_eq(calA, calA.swap_vars(Var::beta, Var::gamma));

    RatFn dbeta = calA.derivative(Var::beta);
    RatFn dgamma = calA.derivative(Var::gamma);
    RatFn diag = dbeta.substitute_var(Var::gamma, Var::beta);

    // Probe the diagonal section of Y_{29/4} (beta in roughly
    // [0.397, 2.936], from |eta^2| <= 7/29) for a sign change.
    Rat lo(2, 5), hi(29, 10);
    const int probes = 25;
    Rat prev_x = lo;
    int prev_sign = detail::exact_sign(diag, Var::beta, lo);
    Rat blo, bhi;
    bool found = (prev_sign == 0);
    if (found) blo = bhi = lo;
    for (int i = 1; i <= probes && !found; ++i) {
        Rat x = lo + (hi - lo) * rat(i, probes);
        int s = detail::exact_sign(diag, Var::beta, x);
        if (s == 0) {
            blo = bhi = x;
            found = true;
            break;
        }
        if (s != prev_sign) {
            blo = prev_x;
            bhi = x;
            found = true;
            break;
        }
        prev_x = x;
        prev_sign = s;
    }
    if (!found)
        throw BracketFailure("no sign change of the diagonal derivative inside Y_{29/4}");

    res.bracket = (blo == bhi) ? Bracket{blo, bhi, 0, 0, 0}
                               : sign_bisection(diag, Var::beta, blo, bhi, tolerance);

    Rat beta_star = (res.bracket.lo + res.bracket.hi) / 2;
    res.params_star = KahlerParams{Rat(0), beta_star, beta_star, Rat(1)};
    std::array<Rat, 4> w{Rat(0), beta_star, beta_star, Rat(1)};
    res.calA_star = calA.eval(w);

    // Both partials change sign across the bracket in the full 2-D problem.
    if (res.bracket.lo < res.bracket.hi) {
        std::array<Rat, 4> plo{Rat(0), res.bracket.lo, res.bracket.lo, Rat(1)};
        std::array<Rat, 4> phi{Rat(0), res.bracket.hi, res.bracket.hi, Rat(1)};
        res.partials_flip_ok = dbeta.sign_at(plo) * dbeta.sign_at(phi) < 0 &&
                               dgamma.sign_at(plo) * dgamma.sign_at(phi) < 0;
    } else {
        res.partials_flip_ok = true;  // landed exactly on the critical point
    }

    // Interior-to-Y check: calT < 29/4 and |eta^2| < 7/29 strictly.
    CohClass witness = class_from_params(SurfaceKind::DP2, res.params_star);
    Rat cd = intersect(c1_class(SurfaceKind::DP2), witness);
    Rat sq = intersect(witness, witness);
    Rat abs_eta_sq = 7 - 49 * sq / (cd * cd);
    res.inside_Y = (cd * cd / sq < Rat(29, 4)) && (abs_eta_sq < Rat(7, 29));

    // Off-diagonal exclusion: exact calA at every 1/100-grid point of
    // Y_{29/4} (the region lies inside [1/3, 3]^2).
    detail::CalAEvaluatorDP2 ev;
    bool have_grid = false;
    for (long i = 33; i <= 300; ++i) {
        for (long j = i; j <= 300; ++j) {  // symmetry: scan j >= i
            Rat b = rat(i, 100), g = rat(j, 100);
            if (ev.calT(b, g) > Rat(29, 4)) continue;
            Rat val = ev.calA(b, g);
            if (!have_grid || val < res.grid_min) {
                res.grid_min = val;
                res.grid_argmin = KahlerParams{Rat(0), b, g, Rat(1)};
                have_grid = true;
            }
        }
    }
    res.offdiagonal_ok = have_grid && res.grid_min >= res.calA_star;

    std::array<Rat, 4> wpt{Rat(0), beta_star, beta_star, Rat(1)};
    double gb = to_double(dbeta.eval(wpt));
    double gg = to_double(dgamma.eval(wpt));
    res.gradient_norm = std::sqrt(gb * gb + gg * gg);
    return res;
}

// ---------------------------------------------------------------------
// Grid sweeps
// ---------------------------------------------------------------------

/// One sweep axis: either a numeric range lo:hi:step or a link to another
/// variable ("gamma = beta" sweeps the diagonal).
struct SweepRange {
    Var var;
    bool linked = false;
    Var link = Var::beta;
    Rat lo, hi, step;
};

struct SweepRow {
    KahlerParams params;
    bool cone_ok = false;
    std::vector<PiScalar> values;  // parallel to SweepTable::quantities
};

struct SweepTable {
    std::vector<std::string> quantities;
    std::vector<SweepRow> rows;
};

namespace detail {

inline PiScalar sweep_quantity(SurfaceKind kind, const KahlerParams& p,
                               const std::string& name) {
    if (name == "calT") return PiScalar(toricinv::calT(kind, p));
    if (name == "calB") return PiScalar(toricinv::calB(kind, p));
    if (name == "calA") {
        FunctionalValue f = functional_value(kind, p);
        return PiScalar(f.calA);
    }
    if (name == "V") return PiScalar(invariant_set(kind, p).V);
    if (name == "s0") return invariant_set(kind, p).s0;
    if (name == "F1") return PiScalar(invariant_set(kind, p).F1);
    if (name == "F2") return PiScalar(invariant_set(kind, p).F2);
    if (name == "a") return invariant_set(kind, p).a;
    if (name == "b") return invariant_set(kind, p).b;
    if (name == "smin") return scalar_bounds(kind, p).first;
    if (name == "smax") return scalar_bounds(kind, p).second;
    throw UsageError("unknown sweep quantity: " + name);
}

} // namespace detail

/// Deterministic product grid over the numeric ranges (linked variables
/// copy their source).  Rows outside the Kahler cone are emitted with
/// cone_ok = false and no values, never dropped silently.
inline SweepTable grid_sweep(SurfaceKind kind, const std::vector<SweepRange>& ranges,
                             const std::vector<std::string>& quantities) {
    SweepTable table;
    table.quantities = quantities;

    std::vector<const SweepRange*> axes;
    for (const auto& r : ranges)
        if (!r.linked) {
            if (r.step <= 0) throw UsageError("sweep step must be positive");
            axes.push_back(&r);
        }

    // materialize each axis
    std::vector<std::vector<Rat>> grids;
    for (const auto* r : axes) {
        std::vector<Rat> g;
        for (Rat x = r->lo; x <= r->hi; x += r->step) g.push_back(x);
        grids.push_back(std::move(g));
    }
    for (const auto& g : grids)
        if (g.empty()) return table;  // empty range -> empty table

    std::vector<std::size_t> idx(axes.size(), 0);
    auto defaults = [&]() -> KahlerParams {
        if (kind == SurfaceKind::DP2) return {Rat(0), Rat(1), Rat(1), Rat(1)};
        return {Rat(1), Rat(1), Rat(1), Rat(1)};
    };
    for (;;) {
        KahlerParams p = defaults();
        auto set_var = [&](Var v, const Rat& x) {
            switch (v) {
                case Var::alpha: p.alpha = x; break;
                case Var::beta: p.beta = x; break;
                case Var::gamma: p.gamma = x; break;
                case Var::delta: p.delta = x; break;
            }
        };
        auto get_var = [&](Var v) -> Rat {
            switch (v) {
                case Var::alpha: return p.alpha;
                case Var::beta: return p.beta;
                case Var::gamma: return p.gamma;
                default: return p.delta;
            }
        };
        for (std::size_t k = 0; k < axes.size(); ++k)
            set_var(axes[k]->var, grids[k][idx[k]]);
        for (const auto& r : ranges)
            if (r.linked) set_var(r.var, get_var(r.link));

        SweepRow row;
        row.params = p;
        row.cone_ok = in_kahler_cone(kind, p);
        if (row.cone_ok)
            for (const auto& q : quantities)
                row.values.push_back(detail::sweep_quantity(kind, p, q));
        table.rows.push_back(std::move(row));

        // odometer increment, last axis fastest; wrapping ends the sweep
        if (axes.empty()) return table;
        std::size_t k = axes.size();
        for (;;) {
            --k;
            if (++idx[k] < grids[k].size()) break;
            idx[k] = 0;
            if (k == 0) return table;
        }
    }
}

} // namespace toricinv
