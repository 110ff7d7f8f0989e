#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropbn/chain.hpp"
#include "tropbn/scrollar.hpp"
#include "tropbn/tableau.hpp"

namespace tropbn {

struct SkeletonVertex {
    std::vector<Rat> pos;  // in Q^n
    long long cycle = 0;   // 1..g when the vertex lies on a cycle, else 0
    std::string label;
};

struct SkeletonEdge {
    int u = -1;
    int v = -1;  // -1 for infinite rays
    std::vector<long long> dir;  // slope vector in Z^n, oriented u -> v
    Rat len;                     // unused when infinite
    bool infinite = false;
};

struct SkeletonTree {
    int base = -1;
    long long cycle = 0;
    std::string base_key;                 // canonical xi of the base point, as a string
    std::vector<int> leaf_divisors;       // one entry per leaf, in divisor order
    std::vector<long long> leaf_mults;
    std::vector<int> edge_ids;            // root edge first, then internal/leaf edges
    std::vector<int> internal_vertices;   // caterpillar spine, outward order
};

struct Skeleton {
    long long g = 0;
    int n = 0;
    std::vector<SkeletonVertex> vertices;
    std::vector<SkeletonEdge> edges;
    std::vector<std::vector<int>> cycle_edges;  // index j-1: arc edge ids of cycle j
    std::vector<int> bridge_edges;              // index j-1: bridge j edge id
    std::vector<SkeletonTree> trees;
    std::vector<std::string> divisor_names;
};

// Everything needed to (re)build a skeleton: the chain (bridge lengths live
// here), the effective divisors with their ray directions, the coordinate
// functions as signed divisor combinations, and the tunable tree root lengths.
struct MapBuildData {
    ChainOfCycles chain;
    int n = 0;
    std::vector<std::string> divisor_names;
    std::vector<ChipList> divisors;
    std::vector<std::vector<long long>> divisor_ray;
    std::vector<std::vector<std::pair<int, int>>> coords;  // (divisor index, +-1)
    std::map<std::pair<long long, std::string>, Rat> tree_root_len;
    Rat default_tree_len = Rat(1);
};

Skeleton realize_map(const MapBuildData& data);

struct GenericMap {
    MapBuildData data;
    Skeleton skeleton;
};

// The map Psi = (psi_0, ..., psi_{r-1}) of a vertex-avoiding divisor on a
// fully generic chain, with an infinite ray in direction e_i at every support
// point of D_i and end trees at v_1 and w_g.
GenericMap build_generic_map(const ChainOfCycles& chain, const Tableau& t,
                             const std::vector<Rat>& xi);

struct ScrollMap {
    MapBuildData data;
    Skeleton skeleton;
    ScrollarType type;
    Tableau t;
    long long m = 0;
    Divisor divisor_class;  // class of D
};

// The map into the scroll fan's ambient R^n determined by a scrollar tableau
// without vertical steps and a class D in T(t); trees resolve shared support.
ScrollMap build_scroll_map(const ChainOfCycles& chain, const Tableau& t, const ScrollarType& type,
                           const std::vector<Rat>& xi);

struct CycleSpan {
    long long cycle = 0;
    int dim = 0;
    std::vector<std::vector<long long>> basis;
    std::optional<std::vector<long long>> chi;  // primitive normal when codim 1
};

CycleSpan cycle_span(const Skeleton& skel, long long cycle);

struct AssumptionReport {
    bool trivalent = true;
    std::vector<std::string> valence_violations;
    bool codim_at_most_one = true;   // clause (B)
    bool consecutive_transverse = true;  // clause (C)
    std::vector<long long> contracted_cycles;  // cycles inside an affine hyperplane
    bool superabundant = false;
    std::vector<CycleSpan> spans;
    bool all_pass() const { return trivalent && codim_at_most_one && consecutive_transverse; }
};

AssumptionReport check_assumptions(const Skeleton& skel);

struct CycleWellSpacedness {
    long long cycle = 0;
    bool has_condition = false;  // codim-1 span; codim >= 2 is skipped and noted
    std::vector<long long> chi;
    std::vector<Rat> escape_distances;  // sorted multiset
    bool unbounded_component = false;   // an H-parallel infinite ray joined the component
    bool merged_other_cycle = false;
    bool unique_shortest_paths = true;
    bool skipped_high_codim = false;
    bool well_spaced = true;
};

struct WellSpacednessReport {
    std::vector<CycleWellSpacedness> cycles;
    bool overall = true;
    bool vacuous = true;  // no codim-1 cycle produced a condition
};

WellSpacednessReport naive_well_spacedness(const Skeleton& skel);

struct TuneReport {
    Rat B;
    std::vector<std::pair<long long, Rat>> tuned;  // (cycle, branch distance)
    std::vector<Rat> margins;  // per tuned cycle: next fixed escape minus the min
    WellSpacednessReport verdict;
};

// The edge-length recipe: bridges n_i = B^{k-i} on the left band, mirrored on
// the right, 1 in the middle; every tunable tree branch distance is set to the
// nearest fixed escape distance of its cycle.  Post: naive well-spacedness.
TuneReport assign_well_spaced_lengths(MapBuildData& data, Skeleton& skel, const Rat& B = Rat(1000));

}  // namespace tropbn
