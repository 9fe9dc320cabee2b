#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "toricinv/mpoly.hpp"
#include "toricinv/ratfn.hpp"

namespace toricinv {

/// One polynomial per fixture record.  Coefficients are decimal integer
/// strings, term order is ascending grlex, so serialization is bit-exact
/// and deterministic.
struct PolyFixture {
    std::string name;
    int pi_power = 0;
    MPoly poly;
};

inline nlohmann::ordered_json fixture_to_json(const PolyFixture& fx) {
    nlohmann::ordered_json j;
    j["name"] = fx.name;
    j["vars"] = {"alpha", "beta", "gamma", "delta"};
    j["pi_power"] = fx.pi_power;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : fx.poly.terms()) {
        nlohmann::ordered_json t;
        t["exp"] = {e[0], e[1], e[2], e[3]};
        t["num"] = c.get_num().get_str();
        t["den"] = c.get_den().get_str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline PolyFixture fixture_from_json(const nlohmann::json& j) {
    PolyFixture fx;
    fx.name = j.value("name", "");
    if (j.contains("vars")) {
        auto vars = j["vars"];
        if (vars.size() != 4) throw FixtureError("fixture must use the 4 canonical vars");
        for (int i = 0; i < 4; ++i)
            if (vars[i].get<std::string>() != kVarNames[i])
                throw FixtureError("unexpected variable order in fixture " + fx.name);
    }
    fx.pi_power = j.value("pi_power", 0);
    for (const auto& t : j.at("terms")) {
        const auto& ev = t.at("exp");
        if (ev.size() != 4) throw FixtureError("bad exponent tuple in " + fx.name);
        Expt e{ev[0].get<int>(), ev[1].get<int>(), ev[2].get<int>(), ev[3].get<int>()};
        Int num(t.at("num").get<std::string>());
        Int den(t.at("den").get<std::string>());
        if (den == 0) throw FixtureError("zero denominator in " + fx.name);
        Rat c(num, den);
        c.canonicalize();
        fx.poly += MPoly::monomial(c, e);
    }
    return fx;
}

inline void write_fixture(const std::string& path, const PolyFixture& fx) {
    std::ofstream out(path);
    if (!out) throw FixtureError("cannot open fixture for writing: " + path);
    out << fixture_to_json(fx).dump(1) << "\n";
}

inline PolyFixture read_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("missing fixture: " + path);
    nlohmann::json j;
    in >> j;
    return fixture_from_json(j);
}

/// Rational-function fixture: a _num/_den pair of polynomial records.
/// The net pi grade is num.pi_power - den.pi_power.
struct RatFnFixture {
    PolyFixture num, den;

    PiRatFn value() const {
        return PiRatFn(RatFn(num.poly, den.poly), num.pi_power - den.pi_power);
    }
};

inline RatFnFixture read_ratfn_fixture(const std::string& base_path) {
    return RatFnFixture{read_fixture(base_path + "_num.json"),
                        read_fixture(base_path + "_den.json")};
}

} // namespace toricinv
