#include "tropbn/plf.hpp"

#include <algorithm>

#include "tropbn/errors.hpp"

namespace tropbn {

Rat edge_length(const ChainOfCycles& chain, const EdgeKey& e) {
    switch (e.kind) {
        case EdgeKind::Top: return chain.cycle(e.j).top;
        case EdgeKind::Bottom: return chain.cycle(e.j).bottom;
        case EdgeKind::Bridge: return chain.bridges.at(static_cast<size_t>(e.j - 1));
    }
    throw InternalError("bad edge kind");
}

Rat circle_position(const ChainOfCycles& chain, long long j, const Rat& xi) {
    const Cycle& c = chain.cycle(j);
    Rat C = c.top + c.bottom;
    Rat u = xi * c.bottom;
    if (c.mu == 0) {
        require_input(2 * u > -C && 2 * u < C,
                      "coordinate " + rat_str(xi) + " on generic cycle " + std::to_string(j) +
                          " exceeds the modeled window; enlarge the stand-in cycle length");
        if (u < 0) u += C;
        return u;
    }
    // torsion: circumference is mu in xi-units by normalization or by data
    u -= C * Rat(rat_floor(u / C));
    return u;
}

Rat circle_name(const ChainOfCycles& chain, long long j, const Rat& u) {
    const Cycle& c = chain.cycle(j);
    Rat C = c.top + c.bottom;
    require_internal(u >= 0 && u < C, "circle position out of range");
    if (c.mu == 0 && 2 * u > C) return (u - C) / c.bottom;
    return u / c.bottom;
}

namespace {

std::vector<PLSegment> normalized_segments(const ChainOfCycles& chain, const EdgeKey& e,
                                           const std::vector<PLSegment>& segs) {
    Rat len = edge_length(chain, e);
    require_input(!segs.empty(), "empty segment list");
    std::vector<PLSegment> out = segs;
    std::sort(out.begin(), out.end(),
              [](const PLSegment& a, const PLSegment& b) { return a.start < b.start; });
    require_input(out.front().start == 0 && out.back().end == len,
                  "segments must cover the whole edge");
    for (size_t i = 0; i < out.size(); ++i) {
        require_input(out[i].start < out[i].end, "degenerate segment");
        require_input(is_integer(out[i].slope), "non-integer slope");
        if (i + 1 < out.size())
            require_input(out[i].end == out[i + 1].start, "segments must tile the edge");
    }
    // merge equal adjacent slopes
    std::vector<PLSegment> merged;
    for (const auto& s : out) {
        if (!merged.empty() && merged.back().slope == s.slope)
            merged.back().end = s.end;
        else
            merged.push_back(s);
    }
    return merged;
}

Rat edge_integral(const std::vector<PLSegment>& segs) {
    Rat total = 0;
    for (const auto& s : segs) total += s.slope * (s.end - s.start);
    return total;
}

Rat slope_at(const std::vector<PLSegment>& segs, const Rat& u, bool from_left) {
    for (const auto& s : segs) {
        if (from_left ? (s.start < u && u <= s.end) : (s.start <= u && u < s.end)) return s.slope;
    }
    throw InternalError("slope_at: offset outside edge");
}

}  // namespace

void pl_validate(const ChainOfCycles& chain, const PLFunction& f) {
    PLFunction g;  // normalized copy used only for checks
    for (const auto& [key, segs] : f.edges) {
        require_input(key.j >= 1 && key.j <= (key.kind == EdgeKind::Bridge ? chain.g - 1 : chain.g),
                      "edge index out of range");
        g.edges[key] = normalized_segments(chain, key, segs);
    }
    for (long long j = 1; j <= chain.g; ++j) {
        Rat top = 0, bottom = 0;
        if (auto it = g.edges.find({EdgeKind::Top, j}); it != g.edges.end())
            top = edge_integral(it->second);
        if (auto it = g.edges.find({EdgeKind::Bottom, j}); it != g.edges.end())
            bottom = edge_integral(it->second);
        // Top runs w->v, bottom v->w; around the cycle the increments cancel.
        require_input(top + bottom == 0,
                      "cycle closure fails on cycle " + std::to_string(j));
        if (chain.mu(j) == 0) {
            // no winding across the stand-in cut on a generic cycle
            Rat C = chain.circumference(j);
            Rat cut = C / 2;
            Rat l = chain.cycle(j).top;
            Rat slope = 0;
            if (cut < l) {
                if (auto it = g.edges.find({EdgeKind::Top, j}); it != g.edges.end())
                    slope = slope_at(it->second, cut, false);
            } else {
                if (auto it = g.edges.find({EdgeKind::Bottom, j}); it != g.edges.end())
                    slope = slope_at(it->second, cut - l, false);
            }
            require_input(slope == 0,
                          "nonzero slope across the cut of generic cycle " + std::to_string(j));
        }
    }
}

PLFunction pl_add(const ChainOfCycles& chain, const PLFunction& a, const PLFunction& b) {
    PLFunction out;
    out.base = a.base + b.base;
    auto keys = [&](const PLFunction& f, std::vector<EdgeKey>& ks) {
        for (const auto& [k, _] : f.edges) ks.push_back(k);
    };
    std::vector<EdgeKey> ks;
    keys(a, ks);
    keys(b, ks);
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    for (const auto& k : ks) {
        Rat len = edge_length(chain, k);
        std::vector<Rat> cuts{0, len};
        auto collect = [&](const PLFunction& f) {
            if (auto it = f.edges.find(k); it != f.edges.end())
                for (const auto& s : it->second) {
                    cuts.push_back(s.start);
                    cuts.push_back(s.end);
                }
        };
        collect(a);
        collect(b);
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        auto slope_of = [&](const PLFunction& f, const Rat& u) -> Rat {
            auto it = f.edges.find(k);
            if (it == f.edges.end()) return 0;
            return slope_at(it->second, u, false);
        };
        std::vector<PLSegment> segs;
        for (size_t i = 0; i + 1 < cuts.size(); ++i)
            segs.push_back({cuts[i], cuts[i + 1], slope_of(a, cuts[i]) + slope_of(b, cuts[i])});
        out.edges[k] = segs;
    }
    return out;
}

PLFunction pl_scale(const PLFunction& a, long long s) {
    PLFunction out = a;
    out.base = a.base * s;
    for (auto& [_, segs] : out.edges)
        for (auto& seg : segs) seg.slope *= s;
    return out;
}

ChipList pl_divisor(const ChainOfCycles& chain, const PLFunction& f) {
    pl_validate(chain, f);
    PLFunction g;
    for (const auto& [key, segs] : f.edges) g.edges[key] = normalized_segments(chain, key, segs);

    ChipList out;
    auto first_slope = [&](EdgeKind kind, long long j) -> Rat {
        auto it = g.edges.find({kind, j});
        return it == g.edges.end() ? Rat(0) : it->second.front().slope;
    };
    auto last_slope = [&](EdgeKind kind, long long j) -> Rat {
        auto it = g.edges.find({kind, j});
        return it == g.edges.end() ? Rat(0) : it->second.back().slope;
    };

    // interior breakpoints: ord = slope_before - slope_after
    for (const auto& [key, segs] : g.edges) {
        for (size_t i = 0; i + 1 < segs.size(); ++i) {
            Rat ord = segs[i].slope - segs[i + 1].slope;
            if (ord == 0) continue;
            Rat u = segs[i].end;
            if (key.kind == EdgeKind::Bridge) {
                out.add(BridgePoint{key.j, u}, rat_to_ll(ord));
            } else {
                Rat pos = key.kind == EdgeKind::Top ? u : chain.cycle(key.j).top + u;
                out.add(CyclePoint{key.j, circle_name(chain, key.j, pos)}, rat_to_ll(ord));
            }
        }
    }
    // vertices: sum of incoming slopes over incident edge ends
    for (long long j = 1; j <= chain.g; ++j) {
        // v_j: Top j ends here, Bottom j starts here, Bridge j-1 ends here.
        Rat ord_v = last_slope(EdgeKind::Top, j) - first_slope(EdgeKind::Bottom, j);
        if (j >= 2) ord_v += last_slope(EdgeKind::Bridge, j - 1);
        if (ord_v != 0) out.add(vertex_v(j), rat_to_ll(ord_v));
        // w_j: Top j starts here, Bottom j ends here, Bridge j starts here.
        Rat ord_w = last_slope(EdgeKind::Bottom, j) - first_slope(EdgeKind::Top, j);
        if (j <= chain.g - 1) ord_w -= first_slope(EdgeKind::Bridge, j);
        if (ord_w != 0) out.add(vertex_w(j), rat_to_ll(ord_w));
    }
    require_internal(out.degree() == 0, "pl_divisor: nonzero total degree");
    return out;
}

PLFunction witness_bridge_transport(const ChainOfCycles& chain, long long j) {
    require_input(j >= 1 && j <= chain.g - 1, "bridge index out of range");
    PLFunction f;
    Rat len = chain.bridges[static_cast<size_t>(j - 1)];
    f.edges[{EdgeKind::Bridge, j}] = {{Rat(0), len, Rat(1)}};
    return f;
}

CircleProfile solve_circle(const ChainOfCycles& chain, long long j, std::vector<CircleChip> chips,
                           long long slope_in, long long slope_out) {
    const Cycle& c = chain.cycle(j);
    Rat C = c.top + c.bottom;
    Rat l = c.top;

    // make sure w (u=0) and v (u=l) appear as breakpoints
    auto ensure = [&](const Rat& u) {
        for (auto& ch : chips)
            if (ch.u == u) return;
        chips.push_back({u, 0});
    };
    ensure(Rat(0));
    ensure(l);
    std::sort(chips.begin(), chips.end(), [](const CircleChip& a, const CircleChip& b) {
        return a.u < b.u;
    });
    for (size_t i = 0; i + 1 < chips.size(); ++i)
        require_internal(chips[i].u < chips[i + 1].u, "duplicate circle positions");
    require_internal(chips.front().u >= 0 && chips.back().u < C, "circle position out of range");

    long long total = 0;
    for (const auto& ch : chips) total += ch.ord;
    require_internal(total == slope_in - slope_out,
                     "circle solve: bridge slopes inconsistent with cycle degree");

    const size_t t = chips.size();
    // slope on arc i (from pos[i] to pos[i+1]) = s0 + accum[i]
    std::vector<long long> accum(t, 0);
    long long acc = 0;
    for (size_t i = 1; i < t; ++i) {
        long long delta = -chips[i].ord;
        if (chips[i].u == l) delta += slope_in;  // bridge ends at v
        // (w is chips[0]; its update closes the loop and is implied)
        acc += delta;
        accum[i] = acc;
    }

    CircleProfile prof;
    prof.pos.reserve(t);
    for (const auto& ch : chips) prof.pos.push_back(ch.u);
    prof.arc_slope.resize(t);

    std::vector<Rat> arc_len(t);
    for (size_t i = 0; i < t; ++i) {
        Rat next = (i + 1 < t) ? chips[i + 1].u : chips[0].u + C;
        arc_len[i] = next - chips[i].u;
    }

    Rat s0;
    if (c.mu == 0) {
        // pin via zero slope across the cut, then verify closure exactly
        Rat cut = C / 2;
        size_t gap = t;  // arc containing cut
        for (size_t i = 0; i < t; ++i) {
            Rat next = (i + 1 < t) ? chips[i + 1].u : chips[0].u + C;
            require_internal(chips[i].u != cut, "breakpoint exactly on the generic cut");
            if (chips[i].u < cut && cut < next) gap = i;
        }
        require_internal(gap < t, "generic cut arc not found");
        s0 = Rat(-accum[gap]);
        Rat closure = 0;
        for (size_t i = 0; i < t; ++i) closure += (s0 + accum[i]) * arc_len[i];
        require_internal(closure == 0,
                         "circle solve: divisor not principal on generic cycle " + std::to_string(j));
    } else {
        Rat weighted = 0;
        for (size_t i = 0; i < t; ++i) weighted += Rat(accum[i]) * arc_len[i];
        s0 = -weighted / C;
        require_internal(is_integer(s0),
                         "circle solve: non-integer slope on torsion cycle " + std::to_string(j));
    }
    for (size_t i = 0; i < t; ++i) prof.arc_slope[i] = rat_to_ll(s0 + Rat(accum[i]));
    return prof;
}

namespace {

// Converts a circle slope profile into per-edge segments of a PLFunction.
void profile_to_segments(const ChainOfCycles& chain, long long j, const CircleProfile& prof,
                         PLFunction& f) {
    Rat l = chain.cycle(j).top;
    Rat C = chain.circumference(j);
    std::vector<PLSegment> top, bottom;
    const size_t t = prof.pos.size();
    for (size_t i = 0; i < t; ++i) {
        Rat a = prof.pos[i];
        Rat b = (i + 1 < t) ? prof.pos[i + 1] : prof.pos[0] + C;
        Rat slope = Rat(prof.arc_slope[i]);
        // intersect (a, b) with top [0, l] and bottom [l, C]
        Rat ta = std::max(a, Rat(0)), tb = std::min(b, l);
        if (ta < tb) top.push_back({ta, tb, slope});
        Rat ba = std::max(a, l), bb = std::min(b, C);
        if (ba < bb) bottom.push_back({ba - l, bb - l, slope});
        if (b > C) {  // wrapped tail lands at the start of the top edge
            Rat wa = 0, wb = std::min(b - C, l);
            if (wa < wb) top.push_back({wa, wb, slope});
        }
    }
    if (!top.empty()) f.edges[{EdgeKind::Top, j}] = top;
    if (!bottom.empty()) f.edges[{EdgeKind::Bottom, j}] = bottom;
}

}  // namespace

PLFunction witness_cycle_identity(const ChainOfCycles& chain, long long j, const Rat& a) {
    require_input(j >= 1 && j <= chain.g, "cycle index out of range");
    // div = <0> + <a> - <-1> - <a+1>
    std::vector<std::pair<Rat, long long>> named{{Rat(0), 1}, {a, 1}, {Rat(-1), -1}, {a + 1, -1}};
    std::map<Rat, long long> by_pos;
    for (const auto& [xi, ord] : named) by_pos[circle_position(chain, j, xi)] += ord;
    std::vector<CircleChip> chips;
    for (const auto& [u, ord] : by_pos)
        if (ord != 0) chips.push_back({u, ord});
    PLFunction f;
    if (chips.empty()) return f;  // points collided, divisor is 0
    CircleProfile prof = solve_circle(chain, j, chips, 0, 0);
    profile_to_segments(chain, j, prof, f);
    return f;
}

}  // namespace tropbn
