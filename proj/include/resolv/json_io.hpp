#ifndef RESOLV_JSON_IO_HPP
#define RESOLV_JSON_IO_HPP

#include <json.hpp>

#include "resolv/permgroup.hpp"
#include "resolv/poly_text.hpp"
#include "resolv/resolvent.hpp"

namespace resolv {

using json = nlohmann::ordered_json;

inline json poly_to_json(const MultiPoly& p) {
    const MultiPoly pc = p.compacted();
    json terms = json::array();
    for (auto& [mono, c] : pc.named_terms()) {
        json exps = json::object();
        for (auto& [v, e] : mono) exps[v] = e;
        terms.push_back({{"exps", exps},
                         {"num", c.num().get_str()},
                         {"den", c.den().get_str()}});
    }
    return {{"text", format_poly(pc)}, {"terms", terms}};
}

inline MultiPoly poly_from_json(const json& j) {
    if (j.contains("text")) return parse_poly(j["text"].get<std::string>());
    MultiPoly out;
    for (auto& t : j["terms"]) {
        MultiPoly m(BigRat(t["num"].get<std::string>() + "/" +
                           t["den"].get<std::string>()));
        for (auto& [v, e] : t["exps"].items())
            m *= MultiPoly::var(v, e.get<int>());
        out += m;
    }
    return out;
}

inline json group_to_json(const PermGroup& g) {
    json gens = json::array();
    for (auto& p : g.generators()) gens.push_back(p.to_cycles());
    return {{"degree", g.degree()}, {"order", g.order()}, {"generators", gens}};
}

inline PermGroup group_from_json(const json& j) {
    std::vector<std::string> gens;
    for (auto& s : j["generators"]) gens.push_back(s.get<std::string>());
    return PermGroup::from_cycles(j["degree"].get<int>(), gens);
}

inline json report_to_json(const ResolventReport& r) {
    return {{"scenario", r.scenario},
            {"variable", r.variable},
            {"invariant", r.invariant},
            {"conjugates", r.conjugates},
            {"resolvent", poly_to_json(r.resolvent)},
            {"engines", r.engines},
            {"verification", r.verification},
            {"notes", r.notes}};
}

}  // namespace resolv

#endif
