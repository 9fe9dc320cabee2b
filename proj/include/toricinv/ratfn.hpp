#pragma once

#include <optional>
#include <utility>

#include "toricinv/mpoly.hpp"
#include "toricinv/pi_scalar.hpp"

namespace toricinv {

/// Quotient of two MPoly.  Deliberately NOT reduced by multivariate gcd:
/// equality and sign queries go through cross-multiplication and exact
/// evaluation instead.  The denominator is sign-normalized to a positive
/// leading coefficient (grlex).
class RatFn {
  public:
    RatFn() : num_(), den_(Rat(1)) {}
    explicit RatFn(MPoly n) : num_(std::move(n)), den_(Rat(1)) {}
    RatFn(MPoly n, MPoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw DenominatorVanishes("RatFn with zero denominator");
        if (den_.leading_coefficient() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFn operator-() const { return RatFn(-num_, den_); }
    RatFn operator+(const RatFn& o) const {
        return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFn operator-(const RatFn& o) const {
        return RatFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFn operator*(const RatFn& o) const {
        return RatFn(num_ * o.num_, den_ * o.den_);
    }
    RatFn operator/(const RatFn& o) const {
        if (o.num_.is_zero()) throw DenominatorVanishes("RatFn division by zero");
        return RatFn(num_ * o.den_, den_ * o.num_);
    }
    RatFn operator*(const Rat& r) const { return RatFn(num_ * r, den_); }

    /// Quotient-rule derivative, unreduced.
    RatFn derivative(Var v) const {
        return RatFn(num_.partial(v) * den_ - num_ * den_.partial(v), den_ * den_);
    }

    RatFn substitute(Var v, const Rat& r) const {
        MPoly d = den_.substitute(v, r);
        if (d.is_zero())
            throw DenominatorVanishes("RatFn substitution kills the denominator");
        return RatFn(num_.substitute(v, r), std::move(d));
    }

    RatFn substitute_var(Var v, Var w) const {
        MPoly d = den_.substitute_var(v, w);
        if (d.is_zero())
            throw DenominatorVanishes("RatFn substitution kills the denominator");
        return RatFn(num_.substitute_var(v, w), std::move(d));
    }

    RatFn swap_vars(Var v, Var w) const {
        return RatFn(num_.swap_vars(v, w), den_.swap_vars(v, w));
    }

    Rat eval(const std::array<Rat, 4>& x) const {
        Rat d = den_.eval(x);
        if (d == 0) throw DenominatorVanishes("RatFn evaluation at a pole");
        return num_.eval(x) / d;
    }

    /// Exact sign at a point (denominator sign folded in).
    int sign_at(const std::array<Rat, 4>& x) const {
        Rat d = den_.eval(x);
        if (d == 0) throw DenominatorVanishes("RatFn sign at a pole");
        return sgn(num_.eval(x)) * sgn(d);
    }

  private:
    MPoly num_, den_;
};

/// f == g as rational functions, decided by cross-multiplication; no
/// multivariate gcd anywhere.
inline bool ratfn_eq(const RatFn& f, const RatFn& g) {
    return (f.num() * g.den() - g.num() * f.den()).is_zero();
}

/// RatFn with an attached power of pi, mirroring PiScalar.
struct PiRatFn {
    RatFn fn;
    int pi_power = 0;

    PiRatFn() = default;
    PiRatFn(RatFn f, int k) : fn(std::move(f)), pi_power(k) {}

    PiRatFn substitute(Var v, const Rat& r) const { return {fn.substitute(v, r), pi_power}; }

    PiScalar eval(const std::array<Rat, 4>& x) const {
        return PiScalar(fn.eval(x), pi_power);
    }
};

inline bool piratfn_eq(const PiRatFn& f, const PiRatFn& g) {
    if (f.fn.is_zero() && g.fn.is_zero()) return true;
    return f.pi_power == g.pi_power && ratfn_eq(f.fn, g.fn);
}

/// Canonical numerator/denominator pair of a RatFn relative to a known
/// common factor: repeatedly cancels `common` while it divides both
/// exactly, then divides by the joint content gcd(content(num),
/// content(den)) and fixes the denominator's leading sign.  The result is
/// the unique jointly-primitive integer pair, which is what the printed
/// appendix displays use.
inline std::pair<MPoly, MPoly> canonical_pair(const RatFn& f, const MPoly& common) {
    MPoly n = f.num(), d = f.den();
    if (!common.is_zero() && common.degree() > 0) {
        for (;;) {
            auto qn = n.div_exact(common);
            if (!qn) break;
            auto qd = d.div_exact(common);
            if (!qd) break;
            n = *qn;
            d = *qd;
        }
    }
    Rat g = rat_gcd(n.content(), d.content());
    if (g != 0 && g != 1) {
        n = n / g;
        d = d / g;
    }
    if (d.leading_coefficient() < 0) {
        n = -n;
        d = -d;
    }
    return {std::move(n), std::move(d)};
}

} // namespace toricinv
