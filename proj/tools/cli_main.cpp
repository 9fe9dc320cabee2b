// toricinv — exact-arithmetic toolkit for Kahler classes on the toric
// del Pezzo surfaces DP2 and DP3: invariants of the action functional,
// positivity certificates, exceptional-class enumeration, certified
// minimization, sweeps and fixture regression.
//
// Exit codes: 0 success, 2 cone violation, 3 verification/regression
// failure, 64 usage or configuration error.  Output honors NO_COLOR
// trivially (nothing is ever colorized) and is byte-deterministic for a
// fixed argv and seed.

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "toricinv/certify.hpp"
#include "toricinv/cohomology.hpp"
#include "toricinv/fixture_io.hpp"
#include "toricinv/invariants.hpp"
#include "toricinv/optimize.hpp"

using nlohmann::ordered_json;
using namespace toricinv;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCone = 2;
constexpr int kExitNotVerified = 3;
constexpr int kExitUsage = 64;

struct Options {
    std::string surface = "dp2";
    std::string format = "text";
    std::string out;
    std::uint64_t seed = 1;
};

SurfaceKind parse_surface(const std::string& s) {
    if (s == "dp2") return SurfaceKind::DP2;
    if (s == "dp3") return SurfaceKind::DP3;
    throw UsageError("unknown surface: " + s);
}

std::ostream& open_out(const Options& opt, std::unique_ptr<std::ofstream>& holder) {
    if (opt.out.empty()) return std::cout;
    holder = std::make_unique<std::ofstream>(opt.out);
    if (!*holder) throw UsageError("cannot open output file: " + opt.out);
    return *holder;
}

KahlerParams parse_class(SurfaceKind kind, const std::string& text) {
    std::vector<Rat> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(rat_from_string(item));
    if (kind == SurfaceKind::DP2) {
        if (vals.size() == 2) vals.push_back(Rat(1));
        if (vals.size() != 3) throw UsageError("dp2 class needs beta,gamma[,delta]");
        return {Rat(0), vals[0], vals[1], vals[2]};
    }
    if (vals.size() == 3) vals.push_back(Rat(1));
    if (vals.size() != 4) throw UsageError("dp3 class needs alpha,beta,gamma[,delta]");
    return {vals[0], vals[1], vals[2], vals[3]};
}

ordered_json scalar_json(const PiScalar& v) {
    ordered_json j;
    j["fraction"] = to_fraction_string(v.coeff);
    j["pi_power"] = v.pi_power;
    j["float"] = format_double(v.to_double());
    return j;
}

std::string scalar_text(const PiScalar& v) {
    return v.to_string() + " = " + format_double(v.to_double());
}

// ------------------------------------------------------------ derive

struct DerivedQuantity {
    PolyFixture num, den;
    bool single = false;  // polynomial quantity (V, difference polys)
};

DerivedQuantity derived_quantity(SurfaceKind kind, const std::string& what) {
    const auto& sym = symbolic_invariants(kind);
    auto at1 = [](const MPoly& p) { return p.substitute(Var::delta, Rat(1)); };
    std::string prefix = surface_name(kind);
    DerivedQuantity d;
    if (what == "V") {
        d.num = {prefix + "_V", 0, at1(sym.V)};
        d.single = true;
        return d;
    }
    if (what == "F1" || what == "F2") {
        d.num = {prefix + "_" + what + "_num", 0, at1(what == "F1" ? sym.Ft1 : sym.Ft2)};
        d.den = {prefix + "_" + what + "_den", 0, at1(sym.V)};
        return d;
    }
    if (what == "A" || what == "B" || what == "C") {
        const MPoly& t = (what == "A") ? sym.At : (what == "B") ? sym.Bt : sym.Ct;
        d.num = {prefix + "_" + what + "_num", 0, at1(t)};
        d.den = {prefix + "_" + what + "_den", 2, at1(MPoly(Rat(4)) * sym.V)};
        return d;
    }
    if (what == "calB") {
        const auto& [n, dd] = calB_pair(kind);
        d.num = {prefix + "_calB_num", 0, at1(n)};
        d.den = {prefix + "_calB_den", 0, at1(dd)};
        return d;
    }
    if (what == "a") {
        d.num = {prefix + "_a_num", 2, at1(MPoly(Rat(4)) * sym.Za)};
        d.den = {prefix + "_a_den", 0, at1(sym.T)};
        return d;
    }
    if (what == "smin" && kind == SurfaceKind::DP2) {
        auto [n, dd] = box_corner_pair_dp2();
        d.num = {"dp2_smin_num", 1, at1(n)};
        d.den = {"dp2_smin_den", 0, at1(dd)};
        return d;
    }
    if (what == "vertex" && kind == SurfaceKind::DP3) {
        auto pairs = vertex_value_pairs(kind);
        d.num = {"dp3_vertex_num", 1, at1(pairs[0].first)};
        d.den = {"dp3_vertex_den", 0, at1(pairs[0].second)};
        return d;
    }
    if (what == "updiff") {
        const auto& [n, dd] = calB_pair(kind);
        d.num = {prefix + (kind == SurfaceKind::DP2 ? "_up1_diff" : "_up2_diff"), 0,
                 at1(dd) - MPoly(Rat(4)) * at1(n)};
        d.single = true;
        return d;
    }
    throw UsageError("cannot derive '" + what + "' on " + prefix);
}

bool compare_with_fixture(const DerivedQuantity& d, const std::string& base,
                          std::ostream& os) {
    bool ok;
    if (d.single) {
        PolyFixture fx = read_fixture(base + ".json");
        // exact polynomial identity for polynomial quantities
        ok = (fx.pi_power == d.num.pi_power) && (fx.poly == d.num.poly);
        if (!ok) {
            MPoly diff = fx.poly - d.num.poly;
            os << "  first differing monomial: "
               << (diff.is_zero() ? std::string("(pi grade)")
                                  : MPoly::monomial(diff.terms().begin()->second,
                                                    diff.terms().begin()->first)
                                        .to_string())
               << "\n";
        }
    } else {
        RatFnFixture fx = read_ratfn_fixture(base);
        PiRatFn derived(RatFn(d.num.poly, d.den.poly), d.num.pi_power - d.den.pi_power);
        ok = piratfn_eq(derived, fx.value());
    }
    return ok;
}

int cmd_derive(const Options& opt, const std::string& what, const std::string& fixture,
               const std::string& fixture_dir) {
    std::unique_ptr<std::ofstream> holder;
    std::ostream& os = open_out(opt, holder);
    SurfaceKind kind = parse_surface(opt.surface);

    if (what == "all") {
        // full fixture regression over both surfaces
        std::string dir = fixture_dir.empty() ? "fixtures" : fixture_dir;
        struct Item {
            SurfaceKind kind;
            const char* what;
            const char* base;
            bool mandatory;
        };
        const std::vector<Item> items = {
            {SurfaceKind::DP2, "V", "dp2_V", true},
            {SurfaceKind::DP2, "F1", "dp2_F1", true},
            {SurfaceKind::DP2, "F2", "dp2_F2", true},
            {SurfaceKind::DP2, "A", "dp2_A", true},
            {SurfaceKind::DP2, "B", "dp2_B", true},
            {SurfaceKind::DP2, "C", "dp2_C", true},
            {SurfaceKind::DP2, "calB", "dp2_calB", true},
            {SurfaceKind::DP2, "a", "dp2_a", true},
            {SurfaceKind::DP2, "smin", "dp2_smin", true},
            {SurfaceKind::DP2, "updiff", "dp2_up1_diff", false},
            {SurfaceKind::DP3, "V", "dp3_V", true},
            {SurfaceKind::DP3, "F1", "dp3_F1", true},
            {SurfaceKind::DP3, "F2", "dp3_F2", true},
            {SurfaceKind::DP3, "A", "dp3_A", true},
            {SurfaceKind::DP3, "B", "dp3_B", true},
            {SurfaceKind::DP3, "C", "dp3_C", true},
            {SurfaceKind::DP3, "updiff", "dp3_up2_diff", false},
            {SurfaceKind::DP3, "vertex", "dp3_vertex", false},
        };
        bool all_ok = true;
        for (const auto& it : items) {
            DerivedQuantity d = derived_quantity(it.kind, it.what);
            std::string base = dir + "/" + it.base;
            bool present = static_cast<bool>(
                std::ifstream(d.single ? base + ".json" : base + "_num.json"));
            if (!present) {
                if (it.mandatory) {
                    std::cerr << "missing mandatory fixture: " << it.base << "\n";
                    return kExitUsage;
                }
                os << it.base << ": SKIPPED (optional fixture not present)\n";
                continue;
            }
            bool ok = compare_with_fixture(d, base, os);
            os << it.base << ": " << (ok ? "pass" : "FAIL") << "\n";
            all_ok = all_ok && ok;
        }
        return all_ok ? kExitOk : kExitNotVerified;
    }

    DerivedQuantity d = derived_quantity(kind, what);
    if (!fixture.empty()) {
        bool ok = compare_with_fixture(d, fixture, os);
        os << d.num.name << (d.single ? "" : " / " + d.den.name) << ": "
           << (ok ? "pass" : "FAIL") << "\n";
        return ok ? kExitOk : kExitNotVerified;
    }
    if (d.single) {
        os << fixture_to_json(d.num).dump(1) << "\n";
    } else {
        ordered_json j;
        j["num"] = fixture_to_json(d.num);
        j["den"] = fixture_to_json(d.den);
        os << j.dump(1) << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------ verify

ordered_json certificate_json(const Certificate& c) {
    ordered_json j;
    j["statement"] = c.statement;
    j["verified"] = c.verified;
    j["witness_forms"] = c.witness_forms;
    if (!c.offending.empty()) j["offending"] = c.offending;
    j["residual"] = fixture_to_json(PolyFixture{"residual", 0, c.residual});
    return j;
}

int cmd_verify(const Options& opt, bool surface_given, const std::string& lemma,
               const std::string& emit, int spotcheck) {
    std::unique_ptr<std::ofstream> holder;
    std::ostream& os = open_out(opt, holder);

    std::vector<std::string> lemmas;
    if (lemma == "all") lemmas = {"up1", "up2", "pos2", "pos3"};
    else lemmas = {lemma};

    bool all_ok = true;
    ordered_json jout = ordered_json::array();
    for (const auto& lm : lemmas) {
        SurfaceKind kind;
        Certificate cert;
        if (lm == "up1") cert = verify_B_bound(kind = SurfaceKind::DP2);
        else if (lm == "up2") cert = verify_B_bound(kind = SurfaceKind::DP3);
        else if (lm == "pos2") cert = verify_scalar_positivity(kind = SurfaceKind::DP2);
        else if (lm == "pos3") cert = verify_scalar_positivity(kind = SurfaceKind::DP3);
        else throw UsageError("unknown lemma: " + lm);

        if (lemma != "all" && surface_given && parse_surface(opt.surface) != kind)
            throw UsageError("lemma " + lm + " lives on " +
                             std::string(surface_name(kind)));

        all_ok = all_ok && cert.verified;
        if (opt.format == "json") {
            jout.push_back(certificate_json(cert));
        } else {
            os << lm << ": " << (cert.verified ? "VERIFIED" : "NOT VERIFIED") << " -- "
               << cert.statement << " (residual min coefficient "
               << to_fraction_string(cert.residual.min_coefficient()) << ")\n";
            for (const auto& offend : cert.offending) os << "    offending: " << offend << "\n";
        }
        if (!emit.empty()) {
            std::string path = (lemmas.size() == 1) ? emit : emit + "." + lm + ".json";
            write_fixture(path, PolyFixture{lm + "_residual", 0, cert.residual});
        }
        if (spotcheck > 0 && (lm == "up1" || lm == "up2")) {
            auto rep = numeric_spotcheck_B(kind, spotcheck, opt.seed);
            all_ok = all_ok && rep.all_passed;
            if (opt.format != "json")
                os << "    spotcheck " << rep.n_samples << " points: "
                   << (rep.all_passed ? "pass" : "FAIL")
                   << ", max calB = " << to_fraction_string(rep.max_calB) << " = "
                   << format_double(to_double(rep.max_calB)) << "\n";
        }
        if (spotcheck > 0 && (lm == "pos2" || lm == "pos3")) {
            auto rep = numeric_spotcheck_scalar(kind, spotcheck, opt.seed);
            all_ok = all_ok && rep.all_passed;
            if (opt.format != "json")
                os << "    spotcheck " << rep.n_samples
                   << " points: " << (rep.all_passed ? "pass" : "FAIL") << "\n";
        }
    }
    if (opt.format == "json") os << jout.dump(1) << "\n";
    return all_ok ? kExitOk : kExitNotVerified;
}

// ------------------------------------------------------------ eval

int cmd_eval(const Options& opt, const std::string& cls, std::string what_list,
             bool dump_polygon) {
    std::unique_ptr<std::ofstream> holder;
    std::ostream& os = open_out(opt, holder);
    SurfaceKind kind = parse_surface(opt.surface);
    KahlerParams p = parse_class(kind, cls);
    require_cone(kind, p);

    if (what_list.empty()) what_list = "calT,calB,calA";
    std::vector<std::string> whats;
    std::stringstream ss(what_list);
    std::string item;
    while (std::getline(ss, item, ',')) whats.push_back(item);

    InvariantSet inv = invariant_set(kind, p);
    auto quantity = [&](const std::string& q) -> PiScalar {
        if (q == "V") return PiScalar(inv.V);
        if (q == "x0") return PiScalar(inv.x0);
        if (q == "y0") return PiScalar(inv.y0);
        if (q == "s0") return inv.s0;
        if (q == "F1") return PiScalar(inv.F1);
        if (q == "F2") return PiScalar(inv.F2);
        if (q == "A") return inv.A;
        if (q == "B") return inv.B;
        if (q == "C") return inv.C;
        if (q == "a") return inv.a;
        if (q == "b") return inv.b;
        if (q == "calT") return PiScalar(calT(kind, p));
        if (q == "calB") return PiScalar(calB(kind, p));
        if (q == "calA") return PiScalar(functional_value(kind, p).calA);
        if (q == "smin") return scalar_bounds(kind, p).first;
        if (q == "smax") return scalar_bounds(kind, p).second;
        if (q == "corner" && kind == SurfaceKind::DP2) return box_corner_bound_dp2(p);
        throw UsageError("unknown quantity: " + q);
    };

    ordered_json j;
    j["surface"] = surface_name(kind);
    j["params"] = {{"alpha", to_fraction_string(p.alpha)},
                   {"beta", to_fraction_string(p.beta)},
                   {"gamma", to_fraction_string(p.gamma)},
                   {"delta", to_fraction_string(p.delta)}};
    ordered_json vals;
    for (const auto& q : whats) vals[q] = scalar_json(quantity(q));
    j["values"] = vals;

    if (dump_polygon) {
        MomentPolygon P = build_polygon(kind, p);
        if (opt.format == "json") {
            ordered_json pj;
            for (const auto& v : P.vertices)
                pj["vertices"].push_back({to_fraction_string(v[0]), to_fraction_string(v[1])});
            for (const auto& e : P.edges)
                pj["edges"].push_back({{"normal", {e.normal[0], e.normal[1]}},
                                       {"lattice_length", to_fraction_string(e.length)}});
            j["polygon"] = pj;
        } else {
            os << "# polygon vertices (scaled coordinates)\n";
            for (const auto& v : P.vertices)
                os << to_fraction_string(v[0]) << " " << to_fraction_string(v[1]) << "\n";
            os << "# edges: normal, lattice length\n";
            for (const auto& e : P.edges)
                os << "(" << e.normal[0] << "," << e.normal[1] << ") "
                   << to_fraction_string(e.length) << "\n";
        }
    }

    if (opt.format == "json") {
        os << j.dump(1) << "\n";
    } else if (opt.format == "csv") {
        os << "quantity,fraction,pi_power,float\n";
        for (const auto& q : whats) {
            PiScalar v = quantity(q);
            os << q << "," << to_fraction_string(v.coeff) << "," << v.pi_power << ","
               << format_double(v.to_double()) << "\n";
        }
    } else {
        for (const auto& q : whats) os << q << " = " << scalar_text(quantity(q)) << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------ minimize

int cmd_minimize(const Options& opt, const std::string& tol_text) {
    std::unique_ptr<std::ofstream> holder;
    std::ostream& os = open_out(opt, holder);
    Rat tol = tol_text.empty() ? Rat(1, 100000000) : rat_from_string(tol_text);
    MinimizationResult res = minimize_calA_dp2(tol);

    ordered_json j;
    j["surface"] = "dp2";
    j["params"] = {{"beta", to_fraction_string(res.params_star.beta)},
                   {"gamma", to_fraction_string(res.params_star.gamma)},
                   {"delta", to_fraction_string(res.params_star.delta)}};
    j["calA"] = {{"fraction", to_fraction_string(res.calA_star)},
                 {"float", format_double(to_double(res.calA_star))}};
    j["certified_below"] = to_fraction_string(res.certified_below);
    j["calA_below_certificate"] = (res.calA_star < res.certified_below);
    j["inside_Y"] = res.inside_Y;
    j["bracket"] = {{"lo", to_fraction_string(res.bracket.lo)},
                    {"hi", to_fraction_string(res.bracket.hi)},
                    {"iterations", res.bracket.iterations}};
    j["checks"] = {{"diagonal_symmetry", res.diagonal_symmetry_ok},
                   {"partials_flip", res.partials_flip_ok},
                   {"offdiagonal_grid", res.offdiagonal_ok}};
    j["grid_min"] = {{"fraction", to_fraction_string(res.grid_min)},
                     {"float", format_double(to_double(res.grid_min))}};
    j["gradient_norm"] = format_double(res.gradient_norm);
    os << j.dump(1) << "\n";

    bool ok = res.calA_star < res.certified_below && res.inside_Y &&
              res.diagonal_symmetry_ok && res.partials_flip_ok && res.offdiagonal_ok;
    return ok ? kExitOk : kExitNotVerified;
}

// ------------------------------------------------------------ sweep

Var parse_var(const std::string& name) {
    for (int i = 0; i < 4; ++i)
        if (name == kVarNames[i]) return static_cast<Var>(i);
    throw UsageError("unknown variable: " + name);
}

int cmd_sweep(const Options& opt, const std::vector<std::string>& range_specs,
              std::string what_list) {
    std::unique_ptr<std::ofstream> holder;
    std::ostream& os = open_out(opt, holder);
    SurfaceKind kind = parse_surface(opt.surface);

    std::vector<SweepRange> ranges;
    for (const auto& spec : range_specs) {
        auto eq = spec.find('=');
        if (eq == std::string::npos) throw UsageError("range must be VAR=lo:hi:step or VAR=VAR");
        SweepRange r;
        r.var = parse_var(spec.substr(0, eq));
        std::string rest = spec.substr(eq + 1);
        if (rest.find(':') == std::string::npos) {
            r.linked = true;
            r.link = parse_var(rest);
        } else {
            std::stringstream ss(rest);
            std::string lo, hi, step;
            if (!std::getline(ss, lo, ':') || !std::getline(ss, hi, ':') ||
                !std::getline(ss, step, ':'))
                throw UsageError("range must be VAR=lo:hi:step");
            r.lo = rat_from_string(lo);
            r.hi = rat_from_string(hi);
            r.step = rat_from_string(step);
        }
        ranges.push_back(r);
    }

    if (what_list.empty()) what_list = "calT,calB,calA";
    std::vector<std::string> whats;
    std::stringstream ss(what_list);
    std::string item;
    while (std::getline(ss, item, ',')) whats.push_back(item);

    SweepTable table = grid_sweep(kind, ranges, whats);

    os << "alpha,beta,gamma,delta,cone_ok";
    for (const auto& q : table.quantities)
        os << "," << q << "_fraction," << q << "_pi_power," << q << "_float";
    os << "\n";
    for (const auto& row : table.rows) {
        os << to_fraction_string(row.params.alpha) << ","
           << to_fraction_string(row.params.beta) << ","
           << to_fraction_string(row.params.gamma) << ","
           << to_fraction_string(row.params.delta) << "," << (row.cone_ok ? 1 : 0);
        if (row.cone_ok) {
            for (const auto& v : row.values)
                os << "," << to_fraction_string(v.coeff) << "," << v.pi_power << ","
                   << format_double(v.to_double());
        } else {
            for (std::size_t i = 0; i < table.quantities.size(); ++i) os << ",,,";
        }
        os << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------ classes

int cmd_classes(const Options& opt, long k_self) {
    std::unique_ptr<std::ofstream> holder;
    std::ostream& os = open_out(opt, holder);
    SurfaceKind kind = parse_surface(opt.surface);
    auto tuples = enumerate_negative_classes(kind, k_self);
    for (const auto& t : tuples) os << format_homology_tuple(t) << "\n";
    return kExitOk;
}

// ------------------------------------------------------------ path

int cmd_path(const Options& opt, const std::string& omega, long steps) {
    std::unique_ptr<std::ofstream> holder;
    std::ostream& os = open_out(opt, holder);
    if (steps < 1) throw UsageError("path needs --steps >= 1");
    KahlerParams p2 = parse_class(SurfaceKind::DP2, omega);
    require_cone(SurfaceKind::DP2, p2);
    CohClass omega2 = class_from_params(SurfaceKind::DP2, p2);

    os << "t,e1_area,calT_fraction,calT_float,calB_fraction,calB_float,"
          "smin_fraction,smax_fraction,cone_ok\n";
    for (long i = 0; i <= steps; ++i) {
        Rat t = rat(i, steps);
        CohClass c = degeneration_path(omega2, t);
        KahlerParams p = params_from_class(c);
        Rat tval = calT(c);
        os << to_fraction_string(t) << "," << to_fraction_string(c.e[0]) << ","
           << to_fraction_string(tval) << "," << format_double(to_double(tval));
        if (is_kahler(c)) {
            Rat bval = calB(SurfaceKind::DP3, p);
            auto [smin, smax] = scalar_bounds(SurfaceKind::DP3, p);
            os << "," << to_fraction_string(bval) << ","
               << format_double(to_double(bval)) << ","
               << to_fraction_string(smin.coeff) << "*pi,"
               << to_fraction_string(smax.coeff) << "*pi,1\n";
        } else {
            os << ",,,,,0\n";
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"toricinv: exact Kahler-class invariants of toric del Pezzo surfaces"};
    app.require_subcommand(1);

    Options opt;
    auto* surface_opt =
        app.add_option("--surface", opt.surface, "dp2 or dp3")->capture_default_str();
    app.add_option("--format", opt.format, "json, csv or text")->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for randomized spot checks")
        ->capture_default_str();
    app.add_option("--out", opt.out, "write output to a file instead of stdout");

    auto* verify = app.add_subcommand("verify", "machine-check the positivity lemmas");
    std::string lemma = "all", emit;
    int spotcheck = 0;
    verify->add_option("--lemma", lemma, "up1, up2, pos2, pos3 or all")
        ->capture_default_str();
    verify->add_option("--emit-certificate", emit, "write residual in fixture format");
    verify->add_option("--spotcheck", spotcheck, "random exact spot checks per lemma");

    auto* derive = app.add_subcommand("derive", "derive symbolic invariants");
    std::string what = "V", fixture, fixture_dir;
    derive->add_option("--what", what, "V, F1, F2, A, B, C, calB, a, smin, vertex, updiff or all");
    derive->add_option("--fixture", fixture, "fixture base path to compare against");
    derive->add_option("--fixture-dir", fixture_dir, "fixture directory for --what all");

    auto* eval = app.add_subcommand("eval", "evaluate invariants at a class");
    std::string cls, eval_what;
    bool dump_polygon = false;
    eval->add_option("--class", cls, "beta,gamma[,delta] (dp2) or alpha,beta,gamma[,delta] (dp3)")
        ->required();
    eval->add_option("--what", eval_what, "comma list of quantities");
    eval->add_flag("--dump-polygon", dump_polygon, "print the moment polygon");

    auto* minimize = app.add_subcommand("minimize", "certified minimization of calA on dp2");
    std::string tol;
    minimize->add_option("--tol", tol, "bracket tolerance (default 1e-8)");

    auto* sweep = app.add_subcommand("sweep", "grid sweep, CSV output");
    std::vector<std::string> range_specs;
    std::string sweep_what;
    sweep->add_option("--range", range_specs, "VAR=lo:hi:step or VAR=OTHERVAR (repeatable)");
    sweep->add_option("--what", sweep_what, "comma list of quantities");

    auto* classes = app.add_subcommand("classes", "enumerate exceptional classes");
    long k_self = 1;
    classes->add_option("--k", k_self, "self-intersection -k")->capture_default_str();

    auto* path = app.add_subcommand("path", "degeneration-path diagnostics");
    std::string omega;
    long steps = 10;
    path->add_option("--omega", omega, "dp2 class beta,gamma[,delta]")->required();
    path->add_option("--steps", steps, "number of steps")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(verify))
            return cmd_verify(opt, surface_opt->count() > 0, lemma, emit, spotcheck);
        if (app.got_subcommand(derive)) return cmd_derive(opt, what, fixture, fixture_dir);
        if (app.got_subcommand(eval)) return cmd_eval(opt, cls, eval_what, dump_polygon);
        if (app.got_subcommand(minimize)) return cmd_minimize(opt, tol);
        if (app.got_subcommand(sweep)) return cmd_sweep(opt, range_specs, sweep_what);
        if (app.got_subcommand(classes)) return cmd_classes(opt, k_self);
        if (app.got_subcommand(path)) return cmd_path(opt, omega, steps);
    } catch (const ConeViolation& e) {
        std::cerr << "cone violation: " << e.what() << "\n";
        return kExitCone;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const FixtureError& e) {
        std::cerr << "fixture error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotVerified;
    }
    return kExitUsage;
}
