#pragma once

#include <map>
#include <vector>

#include "tropbn/chain.hpp"

namespace tropbn {

// Edges of the chain, all oriented counterclockwise / left-to-right:
//   Top j    : w_j -> v_j, length l_j  (counterclockwise from w_j)
//   Bottom j : v_j -> w_j, length m_j
//   Bridge j : w_j -> v_{j+1}, length n_j
enum class EdgeKind : int { Top = 0, Bottom = 1, Bridge = 2 };

struct EdgeKey {
    EdgeKind kind = EdgeKind::Top;
    long long j = 1;
    auto operator<=>(const EdgeKey&) const = default;
};

Rat edge_length(const ChainOfCycles& chain, const EdgeKey& e);

// Geometric position of <xi>_j on the circle, in length units counterclockwise
// from w_j, reduced into [0, C_j).  On generic cycles the named coordinate must
// stay inside the window (-C/2, C/2) in length units, else the finite stand-in
// circle cannot represent it faithfully.
Rat circle_position(const ChainOfCycles& chain, long long j, const Rat& xi);

// Inverse naming: torsion cycles get the canonical representative in [0, mu),
// generic cycles are named through the mid-circle cut, so positions past C/2
// get negative names.
Rat circle_name(const ChainOfCycles& chain, long long j, const Rat& u);

struct PLSegment {
    Rat start;  // offset from edge start
    Rat end;
    Rat slope;  // per unit length, in edge orientation; must be an integer
};

// Continuous piecewise linear function on the chain with integer slopes.
// Edges absent from the map carry slope 0.  The value is determined up to the
// additive constant `base` (value at v_1).
struct PLFunction {
    std::map<EdgeKey, std::vector<PLSegment>> edges;
    Rat base;
};

// Throws InputError on non-integer slopes, uncovered edges, cycle closure
// failures, or nonzero slope across a generic cycle's cut point.
void pl_validate(const ChainOfCycles& chain, const PLFunction& f);

PLFunction pl_add(const ChainOfCycles& chain, const PLFunction& a, const PLFunction& b);
PLFunction pl_scale(const PLFunction& a, long long s);

// div(f): at each point the order is the sum of incoming slopes.  The output
// lists only points of nonzero order; total degree is always 0.
ChipList pl_divisor(const ChainOfCycles& chain, const PLFunction& f);

// Witness for free chip transport along bridge j: slope 1 from w_j to v_{j+1},
// div = v_{j+1} - w_j.
PLFunction witness_bridge_transport(const ChainOfCycles& chain, long long j);

// Witness for the circle identity <0>_j + <a>_j ~ <-1>_j + <a+1>_j:
// div = <0> + <a> - <-1> - <a+1> on cycle j (degenerates to 0 when the four
// points collide on a torsion cycle).
PLFunction witness_cycle_identity(const ChainOfCycles& chain, long long j, const Rat& a);

// --- shared circle solver ----------------------------------------------------
//
// Computes the counterclockwise slope profile of a PL function on cycle j with
// prescribed orders (incoming-slope convention) at given circle positions and
// prescribed rightward slopes on the two adjacent bridges.  On torsion cycles
// the profile is pinned by the closure equation; on generic cycles it is pinned
// by the zero slope across the cut, and closure is then verified exactly.

struct CircleChip {
    Rat u;  // position in [0, C)
    long long ord = 0;
};

struct CircleProfile {
    std::vector<Rat> pos;              // sorted positions, always containing w (0) and v (l)
    std::vector<long long> arc_slope;  // arc i runs from pos[i] to pos[i+1], last wraps to pos[0]+C
};

CircleProfile solve_circle(const ChainOfCycles& chain, long long j,
                           std::vector<CircleChip> chips, long long slope_in,
                           long long slope_out);

}  // namespace tropbn
