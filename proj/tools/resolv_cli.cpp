// Command-line front end for the resolvent pipelines.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "resolv/elliptic.hpp"
#include "resolv/json_io.hpp"
#include "resolv/oracle.hpp"
#include "resolv/resolvent.hpp"

using namespace resolv;

namespace {

unsigned precision_bits() {
    if (const char* env = std::getenv("RESOLVENT_PRECISION_BITS")) {
        int v = std::atoi(env);
        if (v >= 64) return static_cast<unsigned>(v);
    }
    return 256;
}

void print_poly(const std::string& label, const MultiPoly& p, bool as_json) {
    if (as_json) {
        json j = {{"name", label}, {"polynomial", poly_to_json(p)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << label << " = " << format_poly(p) << "\n";
    }
}

struct Sample {
    BigRat a, b, z, w;
};

std::vector<Sample> default_samples() {
    return {{BigRat(1), BigRat(-1), BigRat(1), BigRat(1)},
            {BigRat(1), BigRat(-1), BigRat(2), BigRat(3)},
            {BigRat(-2), BigRat(1), BigRat(1), BigRat(0)},
            {BigRat(3), BigRat(0), BigRat(1), BigRat(2)},
            {BigRat(2), BigRat(1), BigRat(1), BigRat(2)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact resolvent constructions for elliptic-curve division "
                 "fields: the quartic's resolvent cubic, the four-division "
                 "quartic, division/torsion polynomials, and the three "
                 "S4-quotient resolvents of the generic octic."};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of plain text");
    std::string golden_dir = "golden";
    app.add_option("--golden-dir", golden_dir,
                   "directory with reference polynomial files");

    auto* cubic = app.add_subcommand(
        "resolvent-cubic", "resolvent cubic of the generic monic quartic");

    auto* adel = app.add_subcommand(
        "adelmann", "four-division resolvent quartic and its shifted form");

    auto* hol = app.add_subcommand(
        "holq8", "the three S4-quotient resolvents of the generic octic");

    int dp_n = 0;
    bool dp_gamma = false;
    auto* div = app.add_subcommand("divpoly", "division polynomial A_n");
    div->add_option("n", dp_n, "index n >= 1")->required();
    div->add_flag("--gamma", dp_gamma, "print Gamma_n instead of A_n");

    bool t4_alt = false;
    auto* t4 = app.add_subcommand("t4", "4-torsion field polynomial T_4");
    t4->add_flag("--alt-sign", t4_alt,
                 "use the source's X^2 - (Y^3 - a*Y - b) quadratic");

    std::string gi_scenario;
    auto* gi = app.add_subcommand("group-info", "group data for a scenario");
    gi->add_option("scenario", gi_scenario, "warmup | four-division | octic")
        ->required();

    std::vector<std::string> points;
    auto* ver = app.add_subcommand(
        "verify", "numeric oracle check of the octic resolvents");
    ver->add_option("--point", points,
                    "curve point a,b,z,w (repeatable; default: built-in set)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cubic->parsed()) {
            auto s = scenarios::warmup();
            auto conj = conjugates_of_poly(left_transversal(s.G, s.F), s.P);
            MultiPoly g = engine_symmetric(vieta_expand(conj, "x"), "x", 4,
                                           {"a0", "a1", "a2", "a3"});
            print_poly("g", g, as_json);
        } else if (adel->parsed()) {
            auto r = adelmann_pipeline();
            if (as_json) {
                json j = report_to_json(r.report);
                j["shifted"] = poly_to_json(r.shifted);
                j["B"] = poly_to_json(r.b_poly);
                std::cout << j.dump(2) << "\n";
            } else {
                print_poly("R_{G,P}", r.r_poly, false);
                print_poly("B", r.b_poly, false);
                std::cout << "  where Delta = -16*(4*a^3 + 27*b^2)\n";
            }
        } else if (hol->parsed()) {
            auto r = holq8_pipeline();
            if (as_json) {
                json j = json::object();
                for (int i = 0; i < 3; ++i) {
                    json rep = report_to_json(r.reports[i]);
                    rep["raw"] = poly_to_json(r.raw[i]);
                    j["h" + std::to_string(i + 1)] = rep;
                }
                j["omega_v35"] = poly_to_json(r.omega_v35);
                j["notes"] = r.notes;
                std::cout << j.dump(2) << "\n";
            } else {
                for (int i = 0; i < 3; ++i)
                    print_poly("h" + std::to_string(i + 1),
                               r.reports[i].resolvent, false);
                print_poly("omega(v35)", r.omega_v35, false);
                for (auto& n : r.notes) std::cout << "note: " << n << "\n";
            }
        } else if (div->parsed()) {
            if (dp_n < 1 || (dp_gamma && dp_n < 2)) {
                std::cerr << "divpoly: n out of range\n";
                return 2;
            }
            MultiPoly p = dp_gamma ? gamma_n(dp_n) : division_poly(dp_n);
            print_poly((dp_gamma ? "Gamma_" : "A_") + std::to_string(dp_n), p,
                       as_json);
        } else if (t4->parsed()) {
            print_poly("T_4", torsion_field_poly(4, !t4_alt), as_json);
            if (!as_json)
                std::cout << "convention: " << torsion_field_convention() << "\n";
        } else if (gi->parsed()) {
            json j = json::object();
            if (gi_scenario == "warmup") {
                auto s = scenarios::warmup();
                j = {{"G", group_to_json(s.G)},
                     {"H", group_to_json(s.H)},
                     {"F", group_to_json(s.F)},
                     {"P", format_poly(s.P)}};
            } else if (gi_scenario == "four-division") {
                auto s = scenarios::four_division();
                j = {{"G", group_to_json(s.G)},
                     {"H", group_to_json(s.H)},
                     {"F", group_to_json(s.F)},
                     {"P", format_poly(s.P)}};
            } else if (gi_scenario == "octic") {
                auto s = scenarios::octic_quotients();
                j["G"] = group_to_json(s.G);
                for (int i = 0; i < 3; ++i) {
                    std::string k = std::to_string(i + 1);
                    j["H" + k] = group_to_json(s.H[i]);
                    j["F" + k] = group_to_json(s.F[i]);
                    j["P" + k] = format_poly(s.P[i]);
                }
            } else {
                std::cerr << "group-info: unknown scenario '" << gi_scenario
                          << "'\n";
                return 2;
            }
            std::cout << j.dump(2) << "\n";
        } else if (ver->parsed()) {
            std::vector<Sample> samples;
            for (auto& spec : points) {
                std::vector<BigRat> vals;
                std::stringstream ss(spec);
                std::string tok;
                while (std::getline(ss, tok, ',')) vals.emplace_back(tok);
                if (vals.size() != 4) {
                    std::cerr << "verify: --point needs a,b,z,w\n";
                    return 2;
                }
                samples.push_back({vals[0], vals[1], vals[2], vals[3]});
            }
            if (samples.empty()) samples = default_samples();

            unsigned bits = precision_bits();
            Real tol = boost::multiprecision::pow(
                Real(2), -static_cast<int>(bits) / 4);
            auto pipe = holq8_pipeline();
            auto s = scenarios::octic_quotients();
            bool all_ok = true;
            json results = json::array();
            for (auto& sm : samples) {
                CurvePoint pt{Curve{sm.a, sm.b}, sm.z, sm.w};
                auto roots = find_roots(octic_f(pt), bits);
                RootLabeling lab = pair_by_negation(roots, tol);
                std::map<std::string, MultiPoly> sub;
                for (auto& [k, val] : pt.bindings()) sub[k] = MultiPoly(val);
                for (int i = 0; i < 3; ++i) {
                    auto conj = conjugates_of_poly(
                        left_transversal(s.G, s.F[i]), s.P[i]);
                    std::string name = "h" + std::to_string(i + 1);
                    json row = {{"a", sm.a.str()}, {"b", sm.b.str()},
                                {"z", sm.z.str()}, {"w", sm.w.str()},
                                {"resolvent", name}};
                    try {
                        auto rep = verify_resolvent(
                            pipe.raw[i].substitute(sub), "x", conj, lab, tol);
                        row["pass"] = rep.pass;
                        row["max_deviation"] = rep.max_deviation.str(8);
                        if (!rep.pass) all_ok = false;
                    } catch (const no_labeling_matches&) {
                        row["pass"] = false;
                        all_ok = false;
                    }
                    results.push_back(row);
                    if (!as_json)
                        std::cout << (row["pass"].get<bool>() ? "ok  " : "FAIL")
                                  << "  " << name << " at (a,b,z,w)=("
                                  << sm.a.str() << "," << sm.b.str() << ","
                                  << sm.z.str() << "," << sm.w.str() << ")\n";
                }
            }
            if (as_json) std::cout << results.dump(2) << "\n";
            if (!all_ok) return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
