#include <set>

#include "doctest.h"
#include "tropbn/enumerate.hpp"
#include "tropbn/errors.hpp"
#include "tropbn/reps.hpp"
#include "tropbn/tropmap.hpp"

using namespace tropbn;

namespace {

ScrollMap genus5_scroll_map() {
    auto chain = k_gonal_chain(5, 3);
    Tableau row = make_tableau({{1, 2, 3, 4, 5}});
    std::vector<Rat> xi = construction_xi(chain, row);
    return build_scroll_map(chain, row, ScrollarType{1, 1, 3}, xi);
}

std::vector<long long> bridge_dir(const Skeleton& skel, long long j) {
    return skel.edges[static_cast<size_t>(skel.bridge_edges[static_cast<size_t>(j - 1)])].dir;
}

}  // namespace

TEST_CASE("genus-5 scroll map geometry") {
    ScrollMap map = genus5_scroll_map();
    const Skeleton& skel = map.skeleton;
    CHECK(skel.n == 2);
    CHECK(map.m == 2);

    // class of D is the canonical class
    auto chain = map.data.chain;
    CHECK(map.divisor_class == normal_form(chain, canonical_divisor(chain)));

    // bridge directions (phi_0, psi_1)
    CHECK(bridge_dir(skel, 1) == std::vector<long long>{2, 0});
    CHECK(bridge_dir(skel, 2) == std::vector<long long>{3, 2});
    CHECK(bridge_dir(skel, 3) == std::vector<long long>{3, 1});
    CHECK(bridge_dir(skel, 4) == std::vector<long long>{2, 2});

    // span dimensions (1,2,2,2,1): first and last cycles contract to segments
    std::vector<int> dims;
    for (long long j = 1; j <= 5; ++j) dims.push_back(cycle_span(skel, j).dim);
    CHECK(dims == std::vector<int>{1, 2, 2, 2, 1});

    // the pencil coordinate has slopes (1,2,2,2,1) along the bottom edges
    // (the chip-free wrap arc from v_j to w_j is the last arc of each cycle)
    std::vector<long long> bottom;
    for (long long j = 1; j <= 5; ++j) {
        int eid = skel.cycle_edges[static_cast<size_t>(j - 1)].back();
        bottom.push_back(skel.edges[static_cast<size_t>(eid)].dir[0]);
    }
    CHECK(bottom == std::vector<long long>{1, 2, 2, 2, 1});

    AssumptionReport rep = check_assumptions(skel);
    CHECK(rep.trivalent);
    CHECK(rep.codim_at_most_one);
    CHECK(rep.consecutive_transverse);
    CHECK(rep.superabundant);
    CHECK(rep.contracted_cycles == std::vector<long long>{1, 5});

    // four two-leaf trees (v_1, <1>_1, <-2>_5, w_5) and five single rays
    int two_leaf = 0, single = 0;
    for (const auto& t : skel.trees) {
        if (t.leaf_divisors.size() == 2) ++two_leaf;
        if (t.leaf_divisors.size() == 1) ++single;
    }
    CHECK(two_leaf == 4);
    CHECK(single == 5);
}

TEST_CASE("genus-5 well-spacedness recipe") {
    ScrollMap map = genus5_scroll_map();
    TuneReport tune = assign_well_spaced_lengths(map.data, map.skeleton);
    CHECK(tune.verdict.overall);
    CHECK_FALSE(tune.verdict.vacuous);

    // bridges follow B^{k-i} on the left band, 1 in the middle, and
    // B^{i-(g-k+1)} on the right band, with B = 1000
    CHECK(map.data.chain.bridges[0] == Rat(1000000));
    CHECK(map.data.chain.bridges[1] == Rat(1000));
    CHECK(map.data.chain.bridges[2] == Rat(1));
    CHECK(map.data.chain.bridges[3] == Rat(1000));

    WellSpacednessReport ws = naive_well_spacedness(map.skeleton);
    CHECK(ws.overall);
    int conditions = 0;
    for (const auto& c : ws.cycles)
        if (c.has_condition) {
            ++conditions;
            REQUIRE(c.escape_distances.size() >= 2);
            CHECK(c.escape_distances[0] == c.escape_distances[1]);
        }
    CHECK(conditions == 2);

    // halving B re-tunes successfully
    ScrollMap map2 = genus5_scroll_map();
    TuneReport tune2 = assign_well_spaced_lengths(map2.data, map2.skeleton, Rat(500));
    CHECK(tune2.verdict.overall);

    // a single downward perturbation of a tuned branch breaks the tie
    ScrollMap map3 = genus5_scroll_map();
    assign_well_spaced_lengths(map3.data, map3.skeleton);
    bool perturbed = false;
    for (auto& [key, len] : map3.data.tree_root_len) {
        if (!perturbed && len > 1) {
            len -= Rat(1, 2);
            perturbed = true;
        }
    }
    REQUIRE(perturbed);
    Skeleton broken = realize_map(map3.data);
    CHECK_FALSE(naive_well_spacedness(broken).overall);
}

TEST_CASE("generic map of the canonical series on a generic genus-5 chain") {
    auto chain = generic_chain(5);
    Tableau row = make_tableau({{1, 2, 3, 4, 5}});
    std::vector<Rat> xi = construction_xi(chain, row);
    REQUIRE(is_vertex_avoiding(chain, row, xi));
    GenericMap map = build_generic_map(chain, row, xi);
    CHECK(map.skeleton.n == 4);

    AssumptionReport rep = check_assumptions(map.skeleton);
    CHECK(rep.trivalent);
    CHECK_FALSE(rep.superabundant);
    for (const auto& span : rep.spans) CHECK(span.dim == 4);

    // bridge directions are the lattice path vectors truncated to 0..r-1
    LatticePath p = lattice_path(row, 5);
    for (long long j = 1; j <= 4; ++j) {
        std::vector<long long> expect;
        for (int i = 0; i < 4; ++i) expect.push_back(p.value(j, i));
        CHECK(map.skeleton.edges[static_cast<size_t>(
                                     map.skeleton.bridge_edges[static_cast<size_t>(j - 1)])]
                  .dir == expect);
    }

    WellSpacednessReport ws = naive_well_spacedness(map.skeleton);
    CHECK(ws.overall);
    CHECK(ws.vacuous);
}

TEST_CASE("consecutive contracted cycles in one hyperplane fail clause (C)") {
    // hand-built skeleton: two cycles both mapping onto the x-axis of R^2,
    // joined by a bridge along the same axis
    Skeleton skel;
    skel.g = 2;
    skel.n = 2;
    auto vert = [&](long long cycle, Rat x) {
        skel.vertices.push_back({{x, Rat(0)}, cycle, "v" + std::to_string(skel.vertices.size())});
        return static_cast<int>(skel.vertices.size() - 1);
    };
    auto edge = [&](int u, int v, std::vector<long long> dir, Rat len, bool inf = false) {
        skel.edges.push_back({u, v, std::move(dir), len, inf});
        return static_cast<int>(skel.edges.size() - 1);
    };
    int a0 = vert(1, Rat(0)), a1 = vert(1, Rat(1));
    int b0 = vert(2, Rat(3)), b1 = vert(2, Rat(4));
    skel.cycle_edges.push_back({edge(a0, a1, {1, 0}, Rat(1)), edge(a1, a0, {-1, 0}, Rat(1))});
    skel.cycle_edges.push_back({edge(b0, b1, {1, 0}, Rat(1)), edge(b1, b0, {-1, 0}, Rat(1))});
    skel.bridge_edges.push_back(edge(a1, b0, {2, 0}, Rat(1)));
    AssumptionReport rep = check_assumptions(skel);
    CHECK(rep.superabundant);
    CHECK(rep.codim_at_most_one);
    CHECK_FALSE(rep.consecutive_transverse);
}

TEST_CASE("generic map with torus dimension one") {
    auto chain = generic_chain(5);
    // r = 1, d = 4: rho = 1, shape 2 x 2
    std::vector<Tableau> pool;
    enumerate_tableaux(5, chain.torsion_profile(), 2, 2, {}, [&](const Tableau& t) {
        pool.push_back(t);
        return true;
    });
    REQUIRE(!pool.empty());
    int built = 0;
    for (const auto& t : pool) {
        std::vector<Rat> xi = construction_xi(chain, t);
        auto present = symbols_present(t, 5);
        std::vector<bool> in_t(6, false);
        for (int s : present) in_t[static_cast<size_t>(s)] = true;
        // nudge the free symbol off the bad loci
        for (long long j = 1; j <= 5; ++j)
            if (!in_t[static_cast<size_t>(j)]) xi[static_cast<size_t>(j - 1)] = Rat(7, 3);
        if (!is_vertex_avoiding(chain, t, xi)) continue;
        GenericMap map = build_generic_map(chain, t, xi);
        AssumptionReport rep = check_assumptions(map.skeleton);
        CHECK(rep.trivalent);
        CHECK_FALSE(rep.superabundant);
        ++built;
    }
    CHECK(built >= 3);
}

TEST_CASE("the 25-symbol scroll instance") {
    auto chain = k_gonal_chain(25, 5);
    ScrollarType type{1, 2, 5};
    Tableau t = generate_scrollar(type, 8, 5);
    std::vector<Rat> xi = construction_xi(chain, t);
    ScrollMap map = build_scroll_map(chain, t, type, xi);
    CHECK(map.skeleton.n == 3);
    CHECK(map.m == 2);

    AssumptionReport rep = check_assumptions(map.skeleton);
    CHECK(rep.trivalent);
    CHECK(rep.codim_at_most_one);
    CHECK(rep.consecutive_transverse);
    CHECK(rep.superabundant);

    // middle cycles span R^3; the phi_0 slope is k on every middle bridge, and
    // on bridges whose left cycle is in the middle band the direction is
    // exactly (k, p_j(n..n+b-2), p_j(b..n-1))
    for (long long j = 5; j <= 21; ++j) CHECK(cycle_span(map.skeleton, j).dim == 3);
    Tableau tm1 = t_minus_one(t, type);
    LatticePath p = lattice_path(tm1, 25);
    for (long long j = 4; j <= 21; ++j) CHECK(bridge_dir(map.skeleton, j)[0] == 5);
    for (long long j = 5; j <= 21; ++j) {
        std::vector<long long> expect{5, p.value(j, 3), p.value(j, 2)};
        CHECK(bridge_dir(map.skeleton, j) == expect);
    }
    // the five scroll-collection functions have distinct slopes along beta_{k-1};
    // the actual slopes differ from the lemma's p-values by a common shift
    {
        auto dir4 = bridge_dir(map.skeleton, 4);  // (phi_0, psi_0, psi_2)
        long long phi0 = dir4[0], psi0 = dir4[1], psi2 = dir4[2];
        std::set<long long> sigmas{phi0 + psi0, phi0 + 0, 0 + psi0, 0, psi2};
        CHECK(sigmas.size() == 5);
        auto lemma = independence_slopes(t, type, 25);
        CHECK(lemma.distinct);
    }

    TuneReport tune = assign_well_spaced_lengths(map.data, map.skeleton);
    CHECK(tune.verdict.overall);
    CHECK_FALSE(tune.verdict.vacuous);
}

TEST_CASE("hyperelliptic pencil maps to the line") {
    auto chain = k_gonal_chain(8, 2);
    ScrollarType type{1, 0, 2};
    Tableau t = generate_scrollar(type, 2, 7);
    // t is the two-column staircase with symbols 1..8
    REQUIRE(symbols_present(t, 8).size() == 8);
    std::vector<Rat> xi = construction_xi(chain, t);
    ScrollMap map = build_scroll_map(chain, t, type, xi);
    CHECK(map.skeleton.n == 1);
    AssumptionReport rep = check_assumptions(map.skeleton);
    CHECK(rep.trivalent);
    // the pencil has slope 2 through every cycle; nothing maps to a point
    CHECK(rep.contracted_cycles.empty());
    CHECK_FALSE(rep.superabundant);
    CHECK(rep.consecutive_transverse);
    TuneReport tune = assign_well_spaced_lengths(map.data, map.skeleton);
    CHECK(tune.verdict.overall);
    CHECK(tune.verdict.vacuous);
}
