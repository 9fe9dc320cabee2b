#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toricinv/rational.hpp"

namespace toricinv {

/// The fixed variable tuple of the whole toolkit.  Every polynomial lives
/// in Q[alpha, beta, gamma, delta]; surfaces that do not use alpha simply
/// never produce a nonzero alpha exponent.
enum class Var : int { alpha = 0, beta = 1, gamma = 2, delta = 3 };

constexpr std::array<const char*, 4> kVarNames = {"alpha", "beta", "gamma", "delta"};

using Expt = std::array<int, 4>;

inline int expt_degree(const Expt& e) { return e[0] + e[1] + e[2] + e[3]; }

/// Graded lexicographic order with alpha < beta < gamma < delta.
/// Used both as the canonical term order of fixtures and to pick leading
/// terms for exact division and sign normalization.
struct GrlexLess {
    bool operator()(const Expt& a, const Expt& b) const {
        int da = expt_degree(a), db = expt_degree(b);
        if (da != db) return da < db;
        for (int i = 3; i >= 0; --i)  // delta is the largest variable
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

/// Sparse multivariate polynomial over the rationals in (alpha, beta,
/// gamma, delta).  Term map is canonical: no zero coefficients are stored.
class MPoly {
  public:
    using TermMap = std::map<Expt, Rat, GrlexLess>;

    MPoly() = default;
    explicit MPoly(const Rat& c) {
        if (c != 0) terms_[{0, 0, 0, 0}] = c;
    }

    static MPoly var(Var v) {
        MPoly p;
        Expt e{0, 0, 0, 0};
        e[static_cast<int>(v)] = 1;
        p.terms_[e] = Rat(1);
        return p;
    }

    static MPoly monomial(const Rat& c, const Expt& e) {
        MPoly p;
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Degree of the zero polynomial is -1 by convention.
    int degree() const {
        return terms_.empty() ? -1 : expt_degree(terms_.rbegin()->first);
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = expt_degree(terms_.begin()->first);
        for (const auto& [e, c] : terms_)
            if (expt_degree(e) != d) return false;
        return true;
    }

    bool uses(Var v) const {
        int i = static_cast<int>(v);
        for (const auto& [e, c] : terms_)
            if (e[i] != 0) return true;
        return false;
    }

    /// Smallest exponent of v over all terms (0 for the zero polynomial);
    /// v^k divides the polynomial exactly when this is >= k.
    int min_exponent(Var v) const {
        if (terms_.empty()) return 0;
        int i = static_cast<int>(v);
        int m = -1;
        for (const auto& [e, c] : terms_) {
            if (m < 0 || e[i] < m) m = e[i];
            if (m == 0) break;
        }
        return m;
    }

    Rat coefficient(const Expt& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    /// Minimum over stored coefficients; 0 for the zero polynomial.
    Rat min_coefficient() const {
        if (terms_.empty()) return Rat(0);
        auto it = terms_.begin();
        Rat m = it->second;
        for (++it; it != terms_.end(); ++it)
            if (it->second < m) m = it->second;
        return m;
    }

    /// Leading (grlex-maximal) coefficient; 0 for the zero polynomial.
    Rat leading_coefficient() const {
        return terms_.empty() ? Rat(0) : terms_.rbegin()->second;
    }

    /// gcd of all coefficients (positive), 0 for the zero polynomial.
    /// Dividing by it yields a primitive integer-coefficient polynomial.
    Rat content() const {
        Rat g(0);
        for (const auto& [e, c] : terms_) g = rat_gcd(g, c);
        return g;
    }

    MPoly operator-() const {
        MPoly out;
        for (const auto& [e, c] : terms_) out.terms_[e] = -c;
        return out;
    }

    MPoly& operator+=(const MPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    MPoly operator+(const MPoly& o) const {
        MPoly out = *this;
        out += o;
        return out;
    }
    MPoly operator-(const MPoly& o) const {
        MPoly out = *this;
        out -= o;
        return out;
    }

    MPoly operator*(const MPoly& o) const {
        MPoly out;
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                Expt e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly operator*(const Rat& r) const {
        MPoly out;
        if (r == 0) return out;
        for (const auto& [e, c] : terms_) out.terms_[e] = c * r;
        return out;
    }
    MPoly operator/(const Rat& r) const {
        if (r == 0) throw DenominatorVanishes("MPoly division by zero scalar");
        return *this * Rat(Rat(1) / r);
    }

    MPoly pow(long k) const {
        if (k < 0) throw UsageError("MPoly::pow: negative exponent");
        MPoly out(Rat(1));
        MPoly acc = *this;
        while (k > 0) {
            if (k & 1) out *= acc;
            k >>= 1;
            if (k) acc *= acc;
        }
        return out;
    }

    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    Rat eval(const std::array<Rat, 4>& x) const {
        std::array<std::vector<Rat>, 4> powers;
        for (int i = 0; i < 4; ++i) powers[i].push_back(Rat(1));
        Rat out(0);
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (int i = 0; i < 4; ++i) {
                while (static_cast<int>(powers[i].size()) <= e[i])
                    powers[i].push_back(powers[i].back() * x[i]);
                if (e[i]) t *= powers[i][e[i]];
            }
            out += t;
        }
        return out;
    }

    /// Formal partial derivative.
    MPoly partial(Var v) const {
        int i = static_cast<int>(v);
        MPoly out;
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Expt f = e;
            f[i] -= 1;
            out.add_term(f, c * Rat(e[i]));
        }
        return out;
    }

    /// Partial evaluation v := r.
    MPoly substitute(Var v, const Rat& r) const {
        int i = static_cast<int>(v);
        MPoly out;
        for (const auto& [e, c] : terms_) {
            Expt f = e;
            f[i] = 0;
            out.add_term(f, c * rat_pow(r, e[i]));
        }
        return out;
    }

    /// Variable substitution v := w (exponents transfer onto w).
    MPoly substitute_var(Var v, Var w) const {
        if (v == w) return *this;
        int i = static_cast<int>(v), j = static_cast<int>(w);
        MPoly out;
        for (const auto& [e, c] : terms_) {
            Expt f = e;
            f[j] += f[i];
            f[i] = 0;
            out.add_term(f, c);
        }
        return out;
    }

    MPoly swap_vars(Var v, Var w) const {
        int i = static_cast<int>(v), j = static_cast<int>(w);
        MPoly out;
        for (const auto& [e, c] : terms_) {
            Expt f = e;
            std::swap(f[i], f[j]);
            out.add_term(f, c);
        }
        return out;
    }

    /// Multiplies each monomial of degree d by v^(target - d).  Specializing
    /// v = 1 afterwards recovers the original polynomial.
    MPoly homogenize(Var v, int target) const {
        if (!terms_.empty() && target < degree())
            throw UsageError("homogenize: target degree below polynomial degree");
        int i = static_cast<int>(v);
        MPoly out;
        for (const auto& [e, c] : terms_) {
            Expt f = e;
            f[i] += target - expt_degree(e);
            out.add_term(f, c);
        }
        return out;
    }

    /// Exact division: returns q with *this == q * d, or nullopt if the
    /// division leaves a remainder.  Leading-term division under grlex.
    std::optional<MPoly> div_exact(const MPoly& d) const {
        if (d.is_zero()) throw DenominatorVanishes("MPoly::div_exact by zero");
        MPoly r = *this;
        MPoly q;
        const auto& [de, dc] = *d.terms_.rbegin();
        while (!r.is_zero()) {
            const auto& [re, rc] = *r.terms_.rbegin();
            Expt qe;
            for (int i = 0; i < 4; ++i) {
                qe[i] = re[i] - de[i];
                if (qe[i] < 0) return std::nullopt;
            }
            Rat qc = rc / dc;
            q.add_term(qe, qc);
            r -= d * MPoly::monomial(qc, qe);
        }
        return q;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) s += (c > 0) ? " + " : " - ";
            else if (c < 0) s += "-";
            first = false;
            Rat a = rat_abs(c);
            bool bare = (e == Expt{0, 0, 0, 0});
            if (a != 1 || bare) s += to_fraction_string(a);
            for (int i = 0; i < 4; ++i) {
                if (e[i] == 0) continue;
                if (s.size() && s.back() != ' ' && s.back() != '-') s += "*";
                s += kVarNames[i];
                if (e[i] > 1) s += "^" + std::to_string(e[i]);
            }
        }
        return s;
    }

  private:
    void add_term(const Expt& e, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline MPoly operator*(const Rat& r, const MPoly& p) { return p * r; }
inline MPoly operator+(const MPoly& p, const Rat& r) { return p + MPoly(r); }
inline MPoly operator+(const Rat& r, const MPoly& p) { return p + MPoly(r); }
inline MPoly operator-(const MPoly& p, const Rat& r) { return p - MPoly(r); }
inline MPoly operator-(const Rat& r, const MPoly& p) { return MPoly(r) - p; }

} // namespace toricinv
