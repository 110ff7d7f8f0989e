#include "tropbn/json_io.hpp"

#include "tropbn/errors.hpp"

namespace tropbn {

Json chain_to_json(const ChainOfCycles& chain) {
    Json j;
    j["g"] = chain.g;
    j["k"] = chain.k ? Json(*chain.k) : Json(nullptr);
    j["cycles"] = Json::array();
    for (const auto& c : chain.cycles)
        j["cycles"].push_back({{"l", rat_str(c.top)}, {"m", rat_str(c.bottom)}, {"mu", c.mu}});
    j["bridges"] = Json::array();
    for (const auto& b : chain.bridges) j["bridges"].push_back(rat_str(b));
    return j;
}

ChainOfCycles chain_from_json(const Json& j) {
    ChainOfCycles chain;
    try {
        chain.g = j.at("g").get<long long>();
        if (j.contains("k") && !j.at("k").is_null()) chain.k = j.at("k").get<long long>();
        for (const auto& c : j.at("cycles")) {
            Cycle cy;
            cy.top = parse_rat(c.at("l").get<std::string>());
            cy.bottom = parse_rat(c.at("m").get<std::string>());
            cy.mu = c.at("mu").get<long long>();
            chain.cycles.push_back(cy);
        }
        for (const auto& b : j.at("bridges")) chain.bridges.push_back(parse_rat(b.get<std::string>()));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed chain JSON: ") + e.what());
    }
    validate_chain(chain);
    return chain;
}

Json divisor_to_json(const Divisor& d) {
    Json xi = Json::array();
    for (const auto& x : d.xi) xi.push_back(rat_str(x));
    return Json{{"normal", {{"d", d.degree}, {"xi", xi}}}};
}

Json chips_to_json(const ChipList& chips) {
    Json arr = Json::array();
    for (const auto& c : chips.chips) {
        Json at;
        if (std::holds_alternative<CyclePoint>(c.at)) {
            const auto& p = std::get<CyclePoint>(c.at);
            if (p.xi == -1)
                at = Json{{"vertex", "v" + std::to_string(p.cycle)}};
            else if (p.xi == 0)
                at = Json{{"vertex", "w" + std::to_string(p.cycle)}};
            else
                at = Json{{"cycle", p.cycle}, {"xi", rat_str(p.xi)}};
        } else {
            const auto& p = std::get<BridgePoint>(c.at);
            at = Json{{"bridge", p.bridge}, {"t", rat_str(p.t)}};
        }
        arr.push_back({{"at", at}, {"mult", c.mult}});
    }
    return Json{{"chips", arr}};
}

ChipList divisor_chips_from_json(const ChainOfCycles& chain, const Json& j) {
    try {
        if (j.contains("normal")) {
            const Json& n = j.at("normal");
            Divisor d;
            d.degree = n.at("d").get<long long>();
            for (const auto& x : n.at("xi")) d.xi.push_back(parse_rat(x.get<std::string>()));
            require_input(static_cast<long long>(d.xi.size()) == chain.g,
                          "normal form has the wrong number of coordinates");
            return chips_of(chain, d);
        }
        require_input(j.contains("chips"), "divisor JSON needs 'normal' or 'chips'");
        ChipList out;
        for (const auto& c : j.at("chips")) {
            long long mult = c.at("mult").get<long long>();
            const Json& at = c.at("at");
            if (at.contains("vertex")) {
                std::string v = at.at("vertex").get<std::string>();
                require_input(v.size() >= 2 && (v[0] == 'v' || v[0] == 'w'), "bad vertex name: " + v);
                long long idx = std::stoll(v.substr(1));
                out.add(v[0] == 'v' ? vertex_v(idx) : vertex_w(idx), mult);
            } else if (at.contains("bridge")) {
                out.add(BridgePoint{at.at("bridge").get<long long>(),
                                    parse_rat(at.at("t").get<std::string>())},
                        mult);
            } else {
                out.add(CyclePoint{at.at("cycle").get<long long>(),
                                   parse_rat(at.at("xi").get<std::string>())},
                        mult);
            }
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed divisor JSON: ") + e.what());
    }
}

Json tableau_to_json(const Tableau& t) {
    Json rows = Json::array();
    for (int y = 0; y < t.rows; ++y) {
        Json row = Json::array();
        for (int x = 0; x < t.cols; ++x) row.push_back(t.at(x, y));
        rows.push_back(row);
    }
    return rows;
}

Tableau tableau_from_json(const Json& j) {
    try {
        std::vector<std::vector<int>> rows;
        for (const auto& row : j) rows.push_back(row.get<std::vector<int>>());
        return make_tableau(rows);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed tableau JSON: ") + e.what());
    }
}

Json skeleton_to_json(const Skeleton& skel) {
    Json j;
    j["n"] = skel.n;
    j["g"] = skel.g;
    j["vertices"] = Json::array();
    for (size_t v = 0; v < skel.vertices.size(); ++v) {
        Json pos = Json::array();
        for (const auto& x : skel.vertices[v].pos) pos.push_back(rat_str(x));
        j["vertices"].push_back({{"id", v},
                                 {"pos", pos},
                                 {"cycle", skel.vertices[v].cycle},
                                 {"label", skel.vertices[v].label}});
    }
    j["edges"] = Json::array();
    for (const auto& e : skel.edges) {
        Json dir = Json::array();
        for (long long d : e.dir) dir.push_back(d);
        j["edges"].push_back({{"u", e.u},
                              {"v", e.infinite ? Json(nullptr) : Json(e.v)},
                              {"dir", dir},
                              {"len", e.infinite ? Json("inf") : Json(rat_str(e.len))}});
    }
    j["cycles"] = Json::array();
    for (const auto& cyc : skel.cycle_edges) j["cycles"].push_back(cyc);
    j["bridges"] = skel.bridge_edges;
    j["trees"] = Json::array();
    for (const auto& t : skel.trees)
        j["trees"].push_back({{"base", t.base},
                              {"cycle", t.cycle},
                              {"leaves", t.leaf_divisors},
                              {"leaf_mults", t.leaf_mults},
                              {"edges", t.edge_ids}});
    j["divisor_legend"] = skel.divisor_names;
    return j;
}

Json assumption_report_to_json(const AssumptionReport& rep) {
    Json spans = Json::array();
    for (const auto& s : rep.spans) {
        Json e{{"cycle", s.cycle}, {"dim", s.dim}};
        if (s.chi) e["chi"] = *s.chi;
        spans.push_back(e);
    }
    return Json{{"trivalent", rep.trivalent},
                {"valence_violations", rep.valence_violations},
                {"codim_at_most_one", rep.codim_at_most_one},
                {"consecutive_transverse", rep.consecutive_transverse},
                {"superabundant", rep.superabundant},
                {"contracted_cycles", rep.contracted_cycles},
                {"spans", spans},
                {"all_pass", rep.all_pass()}};
}

Json ws_report_to_json(const WellSpacednessReport& rep) {
    Json cycles = Json::array();
    for (const auto& c : rep.cycles) {
        Json e{{"cycle", c.cycle}, {"has_condition", c.has_condition}};
        if (c.has_condition) {
            e["chi"] = c.chi;
            Json dists = Json::array();
            for (const auto& d : c.escape_distances) dists.push_back(rat_str(d));
            e["escape_distances"] = dists;
            e["well_spaced"] = c.well_spaced;
            if (c.unbounded_component) e["unbounded_component"] = true;
            if (c.merged_other_cycle) e["merged_other_cycle"] = true;
            if (!c.unique_shortest_paths) e["unique_shortest_paths"] = false;
        }
        if (c.skipped_high_codim) e["skipped_high_codim"] = true;
        cycles.push_back(e);
    }
    return Json{{"cycles", cycles}, {"overall", rep.overall}, {"vacuous", rep.vacuous}};
}

}  // namespace tropbn
