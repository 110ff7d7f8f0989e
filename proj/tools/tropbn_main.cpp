#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tropbn/enumerate.hpp"
#include "tropbn/errors.hpp"
#include "tropbn/json_io.hpp"
#include "tropbn/numerics.hpp"
#include "tropbn/plf.hpp"
#include "tropbn/reps.hpp"
#include "tropbn/scrollar.hpp"
#include "tropbn/svg.hpp"
#include "tropbn/tropmap.hpp"

namespace {

constexpr const char* kVersion = "tropbn 0.1.0";

using tropbn::Json;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw tropbn::InputError("cannot open output file: " + path);
    out << content;
}

void emit(const Json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tropbn::InputError("cannot open input file: " + path);
    try {
        Json j;
        in >> j;
        return j;
    } catch (const nlohmann::json::exception& e) {
        throw tropbn::InputError("malformed JSON in " + path + ": " + e.what());
    }
}

tropbn::ChainOfCycles load_chain(const std::string& path) {
    return tropbn::chain_from_json(load_json(path));
}

tropbn::Tableau load_tableau(const std::string& path) {
    return tropbn::tableau_from_json(load_json(path));
}

std::vector<tropbn::Rat> parse_xi(const std::string& csv) {
    std::vector<tropbn::Rat> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(tropbn::parse_rat(item));
    return out;
}

std::vector<tropbn::Rat> xi_for(const tropbn::ChainOfCycles& chain, const tropbn::Tableau& t,
                                const std::string& xi_csv) {
    if (xi_csv.empty()) return tropbn::construction_xi_generic(chain, t);
    auto xi = parse_xi(xi_csv);
    tropbn::require_input(static_cast<long long>(xi.size()) == chain.g,
                          "--xi needs exactly g comma-separated rationals");
    return xi;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace tropbn;
    CLI::App app{"Combinatorial Brill-Noether theory on chains of cycles"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // shared option storage
    long long g = 0, r = 0, d = 0, k = 0, m = 0, xmax = 0, ymax = 0, limit = -1;
    int a = 1, b = 0, cols = 1, rows = 1, proj_x = 0, proj_y = 1;
    bool parallel = false, strict = false, tune = false;
    std::string chain_path, tableau_path, divisor_path, divisor_b_path, out_path, svg_path,
        csv_path, xi_csv, kind = "scroll", b_scale = "1000", out_dir = ".";

    // ---- numerics ----
    auto* c_rho = app.add_subcommand("rho", "Brill-Noether number g-(r+1)(g-d+r)");
    c_rho->add_option("--g", g)->required();
    c_rho->add_option("--r", r)->required();
    c_rho->add_option("--d", d)->required();
    c_rho->add_option("--out", out_path);
    c_rho->callback([&] {
        emit(Json{{"g", g}, {"r", r}, {"d", d}, {"rho", rho(g, r, d)},
                  {"r_prime", r_prime(g, r, d)}},
             out_path);
    });

    auto* c_rhobar = app.add_subcommand("rho-bar", "gonality-bounded Brill-Noether number");
    c_rhobar->add_option("--g", g)->required();
    c_rhobar->add_option("--r", r)->required();
    c_rhobar->add_option("--d", d)->required();
    c_rhobar->add_option("--k", k)->required();
    c_rhobar->add_option("--out", out_path);
    c_rhobar->callback([&] {
        auto res = rho_bar(g, r, d, k);
        emit(Json{{"g", g}, {"r", r}, {"d", d}, {"k", k}, {"value", res.value},
                  {"maximizers", res.maximizers}},
             out_path);
    });

    auto* c_region = app.add_subcommand("bn-region", "nonempty locus in the (r+1, g-d+r) plane");
    c_region->add_option("--g", g)->required();
    c_region->add_option("--k", k)->required();
    c_region->add_option("--x-max", xmax)->required();
    c_region->add_option("--y-max", ymax)->required();
    c_region->add_option("--csv", csv_path);
    c_region->add_option("--svg", svg_path);
    c_region->add_option("--out", out_path);
    c_region->callback([&] {
        BNRegion region = bn_region(g, k, xmax, ymax);
        if (!csv_path.empty()) {
            std::ostringstream os;
            os << "# " << kVersion << " bn-region g=" << g << " k=" << k << "\n";
            os << "x,y,r,d,rho_bar,nonempty\n";
            for (const auto& p : region.grid)
                os << p.x << "," << p.y << "," << p.r << "," << p.d << "," << p.rho_bar_value
                   << "," << (p.nonempty ? 1 : 0) << "\n";
            write_file(csv_path, os.str());
        }
        if (!svg_path.empty()) write_file(svg_path, bn_region_svg(region, g, k));
        Json grid = Json::array();
        for (const auto& p : region.grid)
            grid.push_back({{"x", p.x}, {"y", p.y}, {"r", p.r}, {"d", p.d},
                            {"rho_bar", p.rho_bar_value}, {"nonempty", p.nonempty}});
        emit(Json{{"g", g}, {"k", k}, {"grid", grid}}, out_path);
    });

    // ---- chain ----
    auto* c_chain = app.add_subcommand("chain", "chains of cycles");
    auto* c_chain_new = c_chain->add_subcommand("new", "build a k-gonal or generic chain");
    c_chain_new->add_option("--g", g)->required();
    c_chain_new->add_option("--k", k);
    c_chain_new->add_option("--out", out_path);
    c_chain_new->callback([&] {
        ChainOfCycles chain = k > 0 ? k_gonal_chain(g, k) : generic_chain(g);
        emit(chain_to_json(chain), out_path);
    });
    auto* c_chain_show = c_chain->add_subcommand("show", "summarize a chain file");
    c_chain_show->add_option("--chain", chain_path)->required();
    c_chain_show->add_option("--out", out_path);
    c_chain_show->callback([&] {
        ChainOfCycles chain = load_chain(chain_path);
        Json torsion = Json::array();
        for (long long mu : chain.torsion_profile()) torsion.push_back(mu);
        emit(Json{{"g", chain.g},
                  {"k", chain.k ? Json(*chain.k) : Json(nullptr)},
                  {"torsion_profile", torsion},
                  {"chain", chain_to_json(chain)}},
             out_path);
    });

    // ---- divisor ----
    auto* c_div = app.add_subcommand("divisor", "divisor classes on a chain");
    auto* c_nf = c_div->add_subcommand("normal-form", "unique normal form of a chip list");
    c_nf->add_option("--chain", chain_path)->required();
    c_nf->add_option("--divisor", divisor_path)->required();
    c_nf->add_option("--out", out_path);
    c_nf->callback([&] {
        ChainOfCycles chain = load_chain(chain_path);
        ChipList chips = divisor_chips_from_json(chain, load_json(divisor_path));
        emit(divisor_to_json(normal_form(chain, chips)), out_path);
    });
    auto* c_eq = c_div->add_subcommand("equivalent", "linear equivalence of two divisors");
    c_eq->add_option("--chain", chain_path)->required();
    c_eq->add_option("--a", divisor_path)->required();
    c_eq->add_option("--b", divisor_b_path)->required();
    c_eq->add_option("--out", out_path);
    c_eq->callback([&] {
        ChainOfCycles chain = load_chain(chain_path);
        ChipList x = divisor_chips_from_json(chain, load_json(divisor_path));
        ChipList y = divisor_chips_from_json(chain, load_json(divisor_b_path));
        emit(Json{{"equivalent", is_equivalent(chain, x, y)}}, out_path);
    });
    auto* c_rank = c_div->add_subcommand("rank", "Baker-Norine rank");
    c_rank->add_option("--chain", chain_path)->required();
    c_rank->add_option("--divisor", divisor_path)->required();
    c_rank->add_flag("--parallel", parallel);
    c_rank->add_option("--out", out_path);
    c_rank->callback([&] {
        ChainOfCycles chain = load_chain(chain_path);
        ChipList chips = divisor_chips_from_json(chain, load_json(divisor_path));
        Divisor nf = normal_form(chain, chips);
        emit(Json{{"degree", nf.degree}, {"rank", rank(chain, nf, parallel)},
                  {"normal_form", divisor_to_json(nf)}},
             out_path);
    });
    auto* c_canon = c_div->add_subcommand("canonical", "canonical divisor of a chain");
    c_canon->add_option("--chain", chain_path)->required();
    c_canon->add_option("--out", out_path);
    c_canon->callback([&] {
        ChainOfCycles chain = load_chain(chain_path);
        ChipList kdiv = canonical_divisor(chain);
        emit(Json{{"chips", chips_to_json(kdiv)["chips"]},
                  {"normal_form", divisor_to_json(normal_form(chain, kdiv))}},
             out_path);
    });
    auto* c_gon = c_div->add_subcommand("gonality", "gonality pencil representatives E, E_0, E_1");
    c_gon->add_option("--chain", chain_path)->required();
    c_gon->add_option("--k", k)->required();
    c_gon->add_option("--out", out_path);
    c_gon->callback([&] {
        ChainOfCycles chain = load_chain(chain_path);
        auto reps = gonality_representatives(chain, k);
        emit(Json{{"E", chips_to_json(reps.E)},
                  {"E_0", chips_to_json(reps.E0)},
                  {"E_1", chips_to_json(reps.E1)},
                  {"normal_form", divisor_to_json(normal_form(chain, reps.E))},
                  {"mutually_equivalent", is_equivalent(chain, reps.E, reps.E0) &&
                                              is_equivalent(chain, reps.E, reps.E1)}},
             out_path);
    });

    // ---- tableaux ----
    auto* c_tab = app.add_subcommand("tableaux", "displacement tableaux");
    auto* c_enum = c_tab->add_subcommand("enumerate", "stream tableaux as JSON lines");
    c_enum->add_option("--chain", chain_path)->required();
    c_enum->add_option("--cols", cols)->required();
    c_enum->add_option("--rows", rows)->required();
    c_enum->add_option("--divisor", divisor_path);
    c_enum->add_option("--limit", limit);
    c_enum->add_flag("--parallel", parallel);
    c_enum->add_option("--out", out_path);
    c_enum->callback([&] {
        ChainOfCycles chain = load_chain(chain_path);
        EnumOptions opts;
        opts.limit = limit;
        opts.parallel = parallel;
        SymbolFilter filter;
        if (!divisor_path.empty()) {
            ChipList chips = divisor_chips_from_json(chain, load_json(divisor_path));
            filter = make_filter(chain, normal_form(chain, chips));
            opts.filter = &filter;
        }
        std::ostringstream os;
        enumerate_tableaux(chain.g, chain.torsion_profile(), cols, rows, opts,
                           [&](const Tableau& t) {
                               os << tableau_to_json(t).dump() << "\n";
                               return true;
                           });
        if (out_path.empty())
            std::cout << os.str();
        else
            write_file(out_path, os.str());
    });
    auto* c_val = c_tab->add_subcommand("validate", "displacement check for a filling");
    c_val->add_option("--chain", chain_path)->required();
    c_val->add_option("--tableau", tableau_path)->required();
    c_val->add_option("--out", out_path);
    c_val->callback([&] {
        ChainOfCycles chain = load_chain(chain_path);
        Tableau t = load_tableau(tableau_path);
        std::string reason;
        bool ok = is_displacement_tableau(t, chain.torsion_profile(), &reason);
        Json j{{"valid", ok}};
        if (!ok) j["reason"] = reason;
        if (ok) j["torus_dimension"] = torus_dimension(t, chain.g);
        for (long long mu : chain.torsion_profile())
            if (mu == 1) j["warning"] = "torsion order 1 makes every residue condition vacuous";
        emit(j, out_path);
    });
    auto* c_dim = c_tab->add_subcommand("dim-wrd", "dimension of the special divisor locus");
    c_dim->add_option("--chain", chain_path)->required();
    c_dim->add_option("--r", r)->required();
    c_dim->add_option("--d", d)->required();
    c_dim->add_flag("--parallel", parallel);
    c_dim->add_option("--out", out_path);
    c_dim->callback([&] {
        ChainOfCycles chain = load_chain(chain_path);
        emit(Json{{"r", r}, {"d", d}, {"dim", dim_wrd(chain, r, d, parallel)}}, out_path);
    });
    auto* c_path = c_tab->add_subcommand("lattice-path", "lingering lattice path of a tableau");
    c_path->add_option("--g", g)->required();
    c_path->add_option("--tableau", tableau_path)->required();
    c_path->add_option("--out", out_path);
    c_path->callback([&] {
        Tableau t = load_tableau(tableau_path);
        LatticePath p = lattice_path(t, g);
        Json steps = Json::array();
        for (const auto& v : p.p) steps.push_back(v);
        Json slopes = Json::array();
        for (int i = 0; i <= t.cols - 1; ++i) slopes.push_back(psi_bridge_slopes(t, g, i));
        emit(Json{{"r", p.r}, {"p", steps}, {"bridge_slopes", slopes}}, out_path);
    });

    // ---- scrollar ----
    auto* c_scr = app.add_subcommand("scrollar", "scrollar tableaux");
    auto* c_gen = c_scr->add_subcommand("generate", "canonical scrollar filling");
    c_gen->add_option("--a", a)->required();
    c_gen->add_option("--b", b)->required();
    c_gen->add_option("--k", k)->required();
    c_gen->add_option("--cols", cols)->required();
    c_gen->add_option("--rows", rows)->required();
    c_gen->add_option("--out", out_path);
    c_gen->callback([&] {
        Tableau t = generate_scrollar(ScrollarType{a, b, static_cast<int>(k)}, cols, rows);
        emit(tableau_to_json(t), out_path);
    });
    auto* c_m1 = c_scr->add_subcommand("minus-one", "the contraction t(-1)");
    c_m1->add_option("--a", a)->required();
    c_m1->add_option("--b", b)->required();
    c_m1->add_option("--k", k)->required();
    c_m1->add_option("--tableau", tableau_path)->required();
    c_m1->add_option("--out", out_path);
    c_m1->callback([&] {
        Tableau t = load_tableau(tableau_path);
        emit(tableau_to_json(t_minus_one(t, ScrollarType{a, b, static_cast<int>(k)})), out_path);
    });
    auto* c_chk = c_scr->add_subcommand("check-dim", "torus dimension vs the remainder formula");
    c_chk->add_option("--a", a)->required();
    c_chk->add_option("--b", b)->required();
    c_chk->add_option("--k", k)->required();
    c_chk->add_option("--g", g)->required();
    c_chk->add_option("--tableau", tableau_path)->required();
    c_chk->add_option("--out", out_path);
    c_chk->callback([&] {
        Tableau t = load_tableau(tableau_path);
        auto chk = component_dimension_check(t, ScrollarType{a, b, static_cast<int>(k)}, g);
        emit(Json{{"dim", chk.dim}, {"ell", chk.ell}, {"formula", chk.formula},
                  {"agrees", chk.agrees}, {"rho_bar", chk.rho_bar_value},
                  {"achieves_rho_bar", chk.achieves_rho_bar}},
             out_path);
    });
    auto* c_slopes = c_scr->add_subcommand("slopes", "independence slopes along beta_{k-1}");
    c_slopes->add_option("--a", a)->required();
    c_slopes->add_option("--b", b)->required();
    c_slopes->add_option("--k", k)->required();
    c_slopes->add_option("--g", g)->required();
    c_slopes->add_option("--tableau", tableau_path)->required();
    c_slopes->add_option("--out", out_path);
    c_slopes->callback([&] {
        Tableau t = load_tableau(tableau_path);
        auto s = independence_slopes(t, ScrollarType{a, b, static_cast<int>(k)}, g);
        emit(Json{{"slopes", s.slopes}, {"distinct", s.distinct}}, out_path);
    });
    auto* c_ser = c_scr->add_subcommand("serial-subtract", "D(-1)..D(-m) with certificates");
    c_ser->add_option("--chain", chain_path)->required();
    c_ser->add_option("--a", a)->required();
    c_ser->add_option("--b", b)->required();
    c_ser->add_option("--k", k)->required();
    c_ser->add_option("--tableau", tableau_path)->required();
    c_ser->add_option("--divisor", divisor_path)->required();
    c_ser->add_option("--m", m)->required();
    c_ser->add_option("--out", out_path);
    c_ser->callback([&] {
        ChainOfCycles chain = load_chain(chain_path);
        Tableau t = load_tableau(tableau_path);
        ChipList chips = divisor_chips_from_json(chain, load_json(divisor_path));
        auto steps =
            serial_subtract(chain, t, ScrollarType{a, b, static_cast<int>(k)},
                            normal_form(chain, chips), m);
        Json arr = Json::array();
        for (const auto& s : steps)
            arr.push_back({{"i", s.i}, {"tableau", tableau_to_json(s.tableau)},
                           {"divisor", divisor_to_json(s.divisor)}, {"member", s.member}});
        emit(Json{{"steps", arr}}, out_path);
    });

    // ---- map ----
    auto* c_map = app.add_subcommand("map", "tropical maps and realizability certificates");
    auto* c_bg = c_map->add_subcommand("build-generic", "map to R^r from a generic chain");
    c_bg->add_option("--chain", chain_path)->required();
    c_bg->add_option("--tableau", tableau_path)->required();
    c_bg->add_option("--xi", xi_csv);
    c_bg->add_option("--out", out_path);
    c_bg->add_option("--svg", svg_path);
    c_bg->add_option("--proj-x", proj_x);
    c_bg->add_option("--proj-y", proj_y);
    c_bg->callback([&] {
        ChainOfCycles chain = load_chain(chain_path);
        Tableau t = load_tableau(tableau_path);
        GenericMap map = build_generic_map(chain, t, xi_for(chain, t, xi_csv));
        if (!svg_path.empty()) write_file(svg_path, skeleton_svg(map.skeleton, proj_x, proj_y));
        emit(skeleton_to_json(map.skeleton), out_path);
    });
    auto* c_bs = c_map->add_subcommand("build-scroll", "map to the scroll fan's ambient space");
    c_bs->add_option("--chain", chain_path)->required();
    c_bs->add_option("--tableau", tableau_path)->required();
    c_bs->add_option("--a", a)->required();
    c_bs->add_option("--b", b)->required();
    c_bs->add_option("--xi", xi_csv);
    c_bs->add_flag("--tune", tune);
    c_bs->add_option("--B", b_scale);
    c_bs->add_option("--out", out_path);
    c_bs->add_option("--svg", svg_path);
    c_bs->add_option("--proj-x", proj_x);
    c_bs->add_option("--proj-y", proj_y);
    c_bs->callback([&] {
        ChainOfCycles chain = load_chain(chain_path);
        Tableau t = load_tableau(tableau_path);
        ScrollarType type{a, b, static_cast<int>(chain.k ? *chain.k : 0)};
        ScrollMap map = build_scroll_map(chain, t, type, xi_for(chain, t, xi_csv));
        if (tune) assign_well_spaced_lengths(map.data, map.skeleton, parse_rat(b_scale));
        if (!svg_path.empty()) write_file(svg_path, skeleton_svg(map.skeleton, proj_x, proj_y));
        emit(skeleton_to_json(map.skeleton), out_path);
    });
    std::vector<std::string> tree_len_overrides;
    auto* c_cert = c_map->add_subcommand("certify", "assumption + well-spacedness certificates");
    c_cert->add_option("--chain", chain_path)->required();
    c_cert->add_option("--tableau", tableau_path)->required();
    c_cert->add_option("--kind", kind)->check(CLI::IsMember({"generic", "scroll"}));
    c_cert->add_option("--a", a);
    c_cert->add_option("--b", b);
    c_cert->add_option("--xi", xi_csv);
    c_cert->add_flag("--tune", tune);
    c_cert->add_option("--B", b_scale);
    c_cert->add_option("--tree-len", tree_len_overrides,
                       "override a tree branch length, cycle:xi:length (after tuning)");
    c_cert->add_flag("--strict", strict);
    c_cert->add_option("--out", out_path);
    c_cert->callback([&] {
        ChainOfCycles chain = load_chain(chain_path);
        Tableau t = load_tableau(tableau_path);
        Skeleton skel;
        if (kind == "generic") {
            skel = build_generic_map(chain, t, xi_for(chain, t, xi_csv)).skeleton;
        } else {
            ScrollarType type{a, b, static_cast<int>(chain.k ? *chain.k : 0)};
            ScrollMap map = build_scroll_map(chain, t, type, xi_for(chain, t, xi_csv));
            if (tune) assign_well_spaced_lengths(map.data, map.skeleton, parse_rat(b_scale));
            for (const auto& ov : tree_len_overrides) {
                auto c1 = ov.find(':');
                auto c2 = ov.find(':', c1 == std::string::npos ? 0 : c1 + 1);
                require_input(c1 != std::string::npos && c2 != std::string::npos,
                              "--tree-len wants cycle:xi:length");
                long long cyc = std::stoll(ov.substr(0, c1));
                std::string key = ov.substr(c1 + 1, c2 - c1 - 1);
                map.data.tree_root_len[{cyc, key}] = parse_rat(ov.substr(c2 + 1));
            }
            if (!tree_len_overrides.empty()) map.skeleton = realize_map(map.data);
            skel = map.skeleton;
        }
        AssumptionReport ar = check_assumptions(skel);
        WellSpacednessReport ws = naive_well_spacedness(skel);
        emit(Json{{"assumptions", assumption_report_to_json(ar)},
                  {"naively_well_spaced", ws.overall},
                  {"well_spacedness", ws_report_to_json(ws)}},
             out_path);
        if (strict && (!ar.all_pass() || !ws.overall))
            throw CertificateError("certificates failed in strict mode");
    });

    // ---- worked example ----
    auto* c_ex = app.add_subcommand("example", "packaged reproductions");
    auto* c_g5 = c_ex->add_subcommand("genus5", "the complete trigonal genus-5 walkthrough");
    c_g5->add_option("--out-dir", out_dir);
    c_g5->add_option("--out", out_path);
    c_g5->callback([&] {
        ChainOfCycles chain = k_gonal_chain(5, 3);
        auto gon = gonality_representatives(chain, 3);
        ChipList kdiv = canonical_divisor(chain);

        Tableau canonical_t = make_tableau({{1, 2, 3, 4, 5}});
        Tableau g13 = make_tableau({{1, 3}, {2, 4}, {3, 5}});
        ScrollarType f1{1, 1, 3};
        Tableau tm1 = t_minus_one(canonical_t, f1);
        Tableau tm2 = t_minus_one(tm1, f1);

        Json rank_table = Json::array();
        std::vector<std::pair<std::string, ChipList>> table{
            {"K", kdiv},
            {"K-E", kdiv - gon.E},
            {"K-2E", kdiv - 2 * gon.E},
            {"K-3E", kdiv - 3 * gon.E}};
        for (const auto& [name, chips] : table) {
            Divisor nf = normal_form(chain, chips);
            rank_table.push_back({{"divisor", name}, {"degree", nf.degree},
                                  {"rank", rank(chain, nf)},
                                  {"normal_form", divisor_to_json(nf)}});
        }

        Json memberships = Json::array();
        memberships.push_back(
            {{"divisor", "K"}, {"tableau", tableau_to_json(canonical_t)},
             {"member", contains(chain, canonical_t, normal_form(chain, kdiv))}});
        memberships.push_back({{"divisor", "K-E"}, {"tableau", tableau_to_json(tm1)},
                               {"member", contains(chain, tm1, normal_form(chain, kdiv - gon.E))}});
        memberships.push_back(
            {{"divisor", "K-2E"}, {"tableau", tableau_to_json(tm2)},
             {"member", contains(chain, tm2, normal_form(chain, kdiv - 2 * gon.E))}});

        std::vector<Rat> xi = construction_xi(chain, canonical_t);
        ScrollMap map = build_scroll_map(chain, canonical_t, f1, xi);
        // figure with the default lengths, certificates with the tuned ones
        write_file(out_dir + "/genus5_skeleton.json", skeleton_to_json(map.skeleton).dump(2) + "\n");
        write_file(out_dir + "/genus5_skeleton.svg", skeleton_svg(map.skeleton, 0, 1));
        TuneReport tuned = assign_well_spaced_lengths(map.data, map.skeleton);
        AssumptionReport ar = check_assumptions(map.skeleton);
        WellSpacednessReport ws = naive_well_spacedness(map.skeleton);
        write_file(out_dir + "/genus5_skeleton_tuned.json",
                   skeleton_to_json(map.skeleton).dump(2) + "\n");

        Json result{{"chain", chain_to_json(chain)},
                    {"gonality_tableau", tableau_to_json(g13)},
                    {"psi0_bridge_slopes", psi_bridge_slopes(g13, 5, 0)},
                    {"canonical_tableau", tableau_to_json(canonical_t)},
                    {"t_minus_1", tableau_to_json(tm1)},
                    {"t_minus_2", tableau_to_json(tm2)},
                    {"rank_table", rank_table},
                    {"memberships", memberships},
                    {"skeleton_file", out_dir + "/genus5_skeleton.json"},
                    {"tuned_skeleton_file", out_dir + "/genus5_skeleton_tuned.json"},
                    {"svg_file", out_dir + "/genus5_skeleton.svg"},
                    {"certificates",
                     Json{{"assumptions", assumption_report_to_json(ar)},
                          {"naively_well_spaced", ws.overall},
                          {"well_spacedness", ws_report_to_json(ws)}}}};
        emit(result, out_path);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const tropbn::InputError& e) {
        Json err{{"error", "input"}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 2;
    } catch (const tropbn::CertificateError& e) {
        Json err{{"error", "certificate"}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 3;
    } catch (const tropbn::InternalError& e) {
        Json err{{"error", "internal"}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 4;
    }
    return 0;
}
