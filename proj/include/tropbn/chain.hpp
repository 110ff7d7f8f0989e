#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tropbn/rational.hpp"

namespace tropbn {

// One cycle of the chain: top edge length l, bottom edge length m, torsion
// order mu.  mu == 0 flags a generic cycle: the stored lengths are finite
// rational stand-ins for "irrational ratio" lengths, and point identification
// on such a cycle is exact equality of xi-coordinates, never reduction.
struct Cycle {
    Rat top;     // l_j
    Rat bottom;  // m_j
    long long mu = 0;
};

struct ChainOfCycles {
    long long g = 0;
    std::optional<long long> k;  // gonality when built by k_gonal_chain
    std::vector<Cycle> cycles;   // size g, index 0 = cycle 1
    std::vector<Rat> bridges;    // size g-1, bridge j joins w_j to v_{j+1}

    const Cycle& cycle(long long j) const { return cycles.at(static_cast<size_t>(j - 1)); }
    long long mu(long long j) const { return cycle(j).mu; }
    Rat circumference(long long j) const {  // in length units
        return cycle(j).top + cycle(j).bottom;
    }
    // Circumference of cycle j in xi-units (the unit is m_j); only meaningful
    // as an identification modulus on torsion cycles.
    Rat xi_circumference(long long j) const { return circumference(j) / cycle(j).bottom; }
    std::vector<long long> torsion_profile() const;
    bool same_shape(const ChainOfCycles& other) const;
};

// Minimal positive mu with mu*m an integer multiple of l+m; 0 when the cycle
// is flagged generic (irrational length ratio).
long long torsion_order(const Rat& l, const Rat& m, bool generic = false);

// Positive lengths everywhere; torsion cycles must satisfy l+m = mu*m so that
// point identification is exactly xi mod mu (the normalization all coordinate
// arithmetic relies on).
void validate_chain(const ChainOfCycles& chain);

// Chain with mu_j = k for k <= j <= g-k+1 and 0 otherwise.  Torsion cycles are
// normalized to m = 1, l = k-1 so that point identification is xi mod k on the
// nose; generic cycles get large finite stand-in lengths; bridges default to 1.
ChainOfCycles k_gonal_chain(long long g, long long k);

// Fully generic chain (every mu_j = 0).
ChainOfCycles generic_chain(long long g);

// A point <xi>_j on cycle j, located xi*m_j units counterclockwise from w_j.
// v_j = <-1>_j and w_j = <0>_j.
struct CyclePoint {
    long long cycle = 1;  // 1-based
    Rat xi;
};

// A point on bridge j at distance t from w_j (0 <= t <= n_j).
struct BridgePoint {
    long long bridge = 1;  // 1-based
    Rat t;
};

using Location = std::variant<CyclePoint, BridgePoint>;

struct Chip {
    Location at;
    long long mult = 1;
};

// Finite formal sum of points; multiplicities may be negative since divisor
// classes, not effective representatives, are the working currency.
struct ChipList {
    std::vector<Chip> chips;

    long long degree() const;
    ChipList& add(Location loc, long long mult = 1);
    ChipList& add(const ChipList& other, long long scale = 1);
};

ChipList operator+(const ChipList& a, const ChipList& b);
ChipList operator-(const ChipList& a, const ChipList& b);
ChipList operator*(long long s, const ChipList& a);

CyclePoint vertex_v(long long j);  // <-1>_j
CyclePoint vertex_w(long long j);  // <0>_j

// Canonical coordinate of a point: reduced into [0, mu) on torsion cycles,
// exact on generic cycles.
Rat canonical_xi(const ChainOfCycles& chain, long long j, const Rat& xi);
bool same_point(const ChainOfCycles& chain, const CyclePoint& a, const CyclePoint& b);

// Unique normal form (d-g) w_g + sum_j <xi_j>_j of a divisor class.
struct Divisor {
    long long degree = 0;
    std::vector<Rat> xi;  // size g, canonical coordinates

    bool operator==(const Divisor& other) const = default;
};

// Left-to-right sweep computing the normal form of an arbitrary chip list.
// Bridge chips are transported to the entering count of the next cycle.
Divisor normal_form(const ChainOfCycles& chain, const ChipList& chips);

// Chip list of a normal form: (d-g) w_g + sum <xi_j>_j.
ChipList chips_of(const ChainOfCycles& chain, const Divisor& d);

// The linear functional xi~_j: (sum of resident xi-coordinates on cycle j)
// minus the total multiplicity strictly left of cycle j.  Agrees with
// xi_j - (j-1) on normal forms; additive on chip lists.
Rat xi_tilde(const ChainOfCycles& chain, const ChipList& chips, long long j);
Rat xi_tilde(const ChainOfCycles& chain, const Divisor& d, long long j);

bool is_equivalent(const ChainOfCycles& chain, const ChipList& a, const ChipList& b);
bool is_equivalent(const ChainOfCycles& chain, const Divisor& a, const Divisor& b);

// K = sum_{j=2}^{g} v_j + sum_{j=1}^{g-1} w_j (valence-3 vertices), degree 2g-2.
ChipList canonical_divisor(const ChainOfCycles& chain);

struct GonalityReps {
    ChipList E;    // k v_k
    ChipList E0;   // w_g + sum_{j=g-k+2}^{g} <j-(g+2)>_j
    ChipList E1;   // v_1 + sum_{j=1}^{k-1} <j>_j
};

GonalityReps gonality_representatives(const ChainOfCycles& chain, long long k);

std::string location_str(const Location& loc);
std::string chiplist_str(const ChipList& chips);

}  // namespace tropbn
