#include "tropbn/chain.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tropbn/errors.hpp"

namespace tropbn {

std::vector<long long> ChainOfCycles::torsion_profile() const {
    std::vector<long long> mu;
    mu.reserve(cycles.size());
    for (const auto& c : cycles) mu.push_back(c.mu);
    return mu;
}

bool ChainOfCycles::same_shape(const ChainOfCycles& other) const {
    if (g != other.g) return false;
    for (long long j = 1; j <= g; ++j) {
        if (mu(j) != other.mu(j)) return false;
        if (cycle(j).top != other.cycle(j).top) return false;
        if (cycle(j).bottom != other.cycle(j).bottom) return false;
    }
    return bridges == other.bridges;
}

long long torsion_order(const Rat& l, const Rat& m, bool generic) {
    require_input(l > 0 && m > 0, "cycle edge lengths must be positive");
    if (generic) return 0;
    // mu*m in Z*(l+m)  <=>  mu * (m/(l+m)) in Z; with m/(l+m) = p/q reduced,
    // the minimal mu is q.
    Rat ratio = m / (l + m);
    return to_ll(rat_den(ratio));
}

void validate_chain(const ChainOfCycles& chain) {
    require_input(chain.g >= 1, "genus must be >= 1");
    require_input(static_cast<long long>(chain.cycles.size()) == chain.g, "cycle count != g");
    require_input(static_cast<long long>(chain.bridges.size()) == chain.g - 1, "bridge count != g-1");
    for (long long j = 1; j <= chain.g; ++j) {
        const Cycle& c = chain.cycle(j);
        require_input(c.top > 0 && c.bottom > 0, "cycle edge lengths must be positive");
        require_input(c.mu >= 0, "torsion order must be >= 0");
        if (c.mu > 0)
            require_input(c.top + c.bottom == Rat(c.mu) * c.bottom,
                          "torsion cycle " + std::to_string(j) +
                              " is not normalized: l+m must equal mu*m");
    }
    for (const auto& b : chain.bridges) require_input(b > 0, "bridge lengths must be positive");
}

namespace {

// Stand-in length for a "generic" (irrational-ratio) cycle.  The xi-range in
// play stays far below this, so distinct rational coordinates never collide
// on the circle; collisions are still detected when skeletons are built.
Rat generic_top_length(long long j) { return Rat(257 + 2 * j) - 1; }

}  // namespace

ChainOfCycles k_gonal_chain(long long g, long long k) {
    require_input(k >= 2, "gonality must be >= 2");
    require_input(g >= 1, "genus must be >= 1");
    ChainOfCycles chain;
    chain.g = g;
    chain.k = k;
    chain.cycles.resize(static_cast<size_t>(g));
    for (long long j = 1; j <= g; ++j) {
        Cycle& c = chain.cycles[static_cast<size_t>(j - 1)];
        if (j >= k && j <= g - k + 1) {
            c.mu = k;
            c.bottom = 1;
            c.top = Rat(k) - 1;  // circumference k in xi-units
        } else {
            c.mu = 0;
            c.bottom = 1;
            c.top = generic_top_length(j);
        }
    }
    chain.bridges.assign(static_cast<size_t>(g > 0 ? g - 1 : 0), Rat(1));
    return chain;
}

ChainOfCycles generic_chain(long long g) {
    require_input(g >= 1, "genus must be >= 1");
    ChainOfCycles chain;
    chain.g = g;
    chain.cycles.resize(static_cast<size_t>(g));
    for (long long j = 1; j <= g; ++j) {
        Cycle& c = chain.cycles[static_cast<size_t>(j - 1)];
        c.mu = 0;
        c.bottom = 1;
        c.top = generic_top_length(j);
    }
    chain.bridges.assign(static_cast<size_t>(g > 0 ? g - 1 : 0), Rat(1));
    return chain;
}

long long ChipList_degree_impl(const std::vector<Chip>& chips) {
    long long d = 0;
    for (const auto& c : chips) d += c.mult;
    return d;
}

long long ChipList::degree() const { return ChipList_degree_impl(chips); }

ChipList& ChipList::add(Location loc, long long mult) {
    if (mult != 0) chips.push_back({std::move(loc), mult});
    return *this;
}

ChipList& ChipList::add(const ChipList& other, long long scale) {
    for (const auto& c : other.chips)
        if (c.mult * scale != 0) chips.push_back({c.at, c.mult * scale});
    return *this;
}

ChipList operator+(const ChipList& a, const ChipList& b) {
    ChipList out = a;
    out.add(b);
    return out;
}

ChipList operator-(const ChipList& a, const ChipList& b) {
    ChipList out = a;
    out.add(b, -1);
    return out;
}

ChipList operator*(long long s, const ChipList& a) {
    ChipList out;
    out.add(a, s);
    return out;
}

CyclePoint vertex_v(long long j) { return CyclePoint{j, Rat(-1)}; }
CyclePoint vertex_w(long long j) { return CyclePoint{j, Rat(0)}; }

Rat canonical_xi(const ChainOfCycles& chain, long long j, const Rat& xi) {
    require_input(j >= 1 && j <= chain.g, "cycle index out of range");
    long long mu = chain.mu(j);
    if (mu == 0) return xi;
    return rat_mod(xi, Int(mu));
}

bool same_point(const ChainOfCycles& chain, const CyclePoint& a, const CyclePoint& b) {
    if (a.cycle != b.cycle) return false;
    return canonical_xi(chain, a.cycle, a.xi) == canonical_xi(chain, b.cycle, b.xi);
}

namespace {

struct ResidentData {
    Rat coord_sum;         // sum of xi-coordinates weighted by multiplicity
    long long mult = 0;    // total multiplicity on the cycle
};

// Splits chips by cycle.  Bridge chips are attributed "left of" the next
// cycle: a chip on bridge j joins the count entering cycle j+1.
void tally(const ChainOfCycles& chain, const ChipList& chips,
           std::vector<ResidentData>& resident, std::vector<long long>& entering) {
    resident.assign(static_cast<size_t>(chain.g), ResidentData{});
    entering.assign(static_cast<size_t>(chain.g + 1), 0);
    for (const auto& chip : chips.chips) {
        if (std::holds_alternative<CyclePoint>(chip.at)) {
            const auto& p = std::get<CyclePoint>(chip.at);
            require_input(p.cycle >= 1 && p.cycle <= chain.g, "chip cycle index out of range");
            auto& r = resident[static_cast<size_t>(p.cycle - 1)];
            r.coord_sum += p.xi * chip.mult;
            r.mult += chip.mult;
        } else {
            const auto& p = std::get<BridgePoint>(chip.at);
            require_input(p.bridge >= 1 && p.bridge <= chain.g - 1, "chip bridge index out of range");
            require_input(p.t >= 0 && p.t <= chain.bridges[static_cast<size_t>(p.bridge - 1)],
                          "bridge offset out of range");
            entering[static_cast<size_t>(p.bridge)] += chip.mult;  // enters cycle bridge+1
        }
    }
}

}  // namespace

Divisor normal_form(const ChainOfCycles& chain, const ChipList& chips) {
    std::vector<ResidentData> resident;
    std::vector<long long> entering;
    tally(chain, chips, resident, entering);

    Divisor out;
    out.degree = chips.degree();
    out.xi.resize(static_cast<size_t>(chain.g));
    long long carried = 0;  // chips entering the current cycle at <-1>_j
    for (long long j = 1; j <= chain.g; ++j) {
        carried += entering[static_cast<size_t>(j - 1)];
        const auto& r = resident[static_cast<size_t>(j - 1)];
        // Linear equivalence on a circle preserves the coordinate sum, so the
        // representative chip sits at -(carried) + (sum of residents).
        Rat xi = Rat(-carried) + r.coord_sum;
        out.xi[static_cast<size_t>(j - 1)] = canonical_xi(chain, j, xi);
        carried = carried + r.mult - 1;  // one chip stays, the rest move on
    }
    require_internal(carried == out.degree - chain.g,
                     "normal_form: terminal passed count != d - g");
    return out;
}

ChipList chips_of(const ChainOfCycles& chain, const Divisor& d) {
    require_input(static_cast<long long>(d.xi.size()) == chain.g, "divisor/chain size mismatch");
    ChipList out;
    for (long long j = 1; j <= chain.g; ++j)
        out.add(CyclePoint{j, d.xi[static_cast<size_t>(j - 1)]});
    out.add(vertex_w(chain.g), d.degree - chain.g);
    return out;
}

Rat xi_tilde(const ChainOfCycles& chain, const ChipList& chips, long long j) {
    require_input(j >= 1 && j <= chain.g, "cycle index out of range");
    std::vector<ResidentData> resident;
    std::vector<long long> entering;
    tally(chain, chips, resident, entering);
    long long left = 0;
    for (long long i = 1; i < j; ++i) {
        left += resident[static_cast<size_t>(i - 1)].mult;
        left += entering[static_cast<size_t>(i)];  // bridge i sits left of cycle i+1..j
    }
    left += entering[0];
    return resident[static_cast<size_t>(j - 1)].coord_sum - left;
}

Rat xi_tilde(const ChainOfCycles& chain, const Divisor& d, long long j) {
    require_input(j >= 1 && j <= chain.g, "cycle index out of range");
    return d.xi[static_cast<size_t>(j - 1)] - (j - 1);
}

bool is_equivalent(const ChainOfCycles& chain, const Divisor& a, const Divisor& b) {
    if (a.degree != b.degree) return false;
    for (long long j = 1; j <= chain.g; ++j)
        if (canonical_xi(chain, j, a.xi[static_cast<size_t>(j - 1)]) !=
            canonical_xi(chain, j, b.xi[static_cast<size_t>(j - 1)]))
            return false;
    return true;
}

bool is_equivalent(const ChainOfCycles& chain, const ChipList& a, const ChipList& b) {
    return is_equivalent(chain, normal_form(chain, a), normal_form(chain, b));
}

ChipList canonical_divisor(const ChainOfCycles& chain) {
    ChipList out;
    for (long long j = 2; j <= chain.g; ++j) out.add(vertex_v(j));
    for (long long j = 1; j <= chain.g - 1; ++j) out.add(vertex_w(j));
    return out;
}

GonalityReps gonality_representatives(const ChainOfCycles& chain, long long k) {
    require_input(chain.k && *chain.k == k, "chain was not built with this gonality");
    require_input(k >= 2 && chain.g >= k, "invalid gonality for this genus");
    for (long long j = 1; j <= chain.g; ++j) {
        long long want = (j >= k && j <= chain.g - k + 1) ? k : 0;
        require_input(chain.mu(j) == want, "chain does not carry the k-gonal torsion profile");
    }
    GonalityReps reps;
    reps.E.add(vertex_v(k), k);
    reps.E1.add(vertex_v(1));
    for (long long j = 1; j <= k - 1; ++j) reps.E1.add(CyclePoint{j, Rat(j)});
    reps.E0.add(vertex_w(chain.g));
    for (long long j = chain.g - k + 2; j <= chain.g; ++j)
        reps.E0.add(CyclePoint{j, Rat(j - (chain.g + 2))});
    return reps;
}

std::string location_str(const Location& loc) {
    std::ostringstream os;
    if (std::holds_alternative<CyclePoint>(loc)) {
        const auto& p = std::get<CyclePoint>(loc);
        if (p.xi == -1)
            os << "v" << p.cycle;
        else if (p.xi == 0)
            os << "w" << p.cycle;
        else
            os << "<" << rat_str(p.xi) << ">_" << p.cycle;
    } else {
        const auto& p = std::get<BridgePoint>(loc);
        os << "beta" << p.bridge << "@" << rat_str(p.t);
    }
    return os.str();
}

std::string chiplist_str(const ChipList& chips) {
    std::ostringstream os;
    bool first = true;
    for (const auto& c : chips.chips) {
        if (!first) os << " + ";
        first = false;
        if (c.mult != 1) os << c.mult << "*";
        os << location_str(c.at);
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace tropbn
