#pragma once

#include <string>

#include "toricinv/rational.hpp"

namespace toricinv {

/// Exact scalar of the form coeff * pi^pi_power.  Every quantity in the
/// moment-polygon calculus is of this shape; the grade bookkeeping makes
/// it impossible to silently add, say, a volume (pi^0) to a mean scalar
/// curvature (pi^1).
///
/// Canonical zero: coeff == 0 forces pi_power == 0.
struct PiScalar {
    Rat coeff;
    int pi_power = 0;

    PiScalar() : coeff(0), pi_power(0) {}
    PiScalar(Rat c, int k) : coeff(std::move(c)), pi_power(k) {
        if (coeff == 0) pi_power = 0;
    }
    explicit PiScalar(Rat c) : PiScalar(std::move(c), 0) {}

    bool is_zero() const { return coeff == 0; }

    PiScalar operator-() const { return PiScalar(-coeff, pi_power); }

    PiScalar operator+(const PiScalar& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (pi_power != o.pi_power)
            throw PiGradeMismatch("PiScalar addition across grades pi^" +
                                  std::to_string(pi_power) + " and pi^" +
                                  std::to_string(o.pi_power));
        return PiScalar(coeff + o.coeff, pi_power);
    }
    PiScalar operator-(const PiScalar& o) const { return *this + (-o); }

    PiScalar operator*(const PiScalar& o) const {
        if (is_zero() || o.is_zero()) return PiScalar();
        return PiScalar(coeff * o.coeff, pi_power + o.pi_power);
    }
    PiScalar operator*(const Rat& r) const {
        if (r == 0) return PiScalar();
        return PiScalar(coeff * r, pi_power);
    }
    PiScalar operator/(const PiScalar& o) const {
        if (o.is_zero()) throw DenominatorVanishes("PiScalar division by zero");
        if (is_zero()) return PiScalar();
        return PiScalar(coeff / o.coeff, pi_power - o.pi_power);
    }

    bool operator==(const PiScalar& o) const {
        return coeff == o.coeff && pi_power == o.pi_power;
    }
    bool operator!=(const PiScalar& o) const { return !(*this == o); }

    /// Only the rendering layer ever touches a floating-point pi.
    double to_double() const {
        return toricinv::to_double(coeff) * std::pow(M_PI, pi_power);
    }

    std::string to_string() const {
        if (pi_power == 0) return to_fraction_string(coeff);
        std::string s = to_fraction_string(coeff);
        s += " * pi";
        if (pi_power != 1) s += "^" + std::to_string(pi_power);
        return s;
    }
};

inline PiScalar operator*(const Rat& r, const PiScalar& s) { return s * r; }

/// pi^k as a PiScalar.
inline PiScalar pi_power(int k) { return PiScalar(Rat(1), k); }

} // namespace toricinv
