#include "tropbn/tropmap.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "tropbn/errors.hpp"
#include "tropbn/plf.hpp"
#include "tropbn/reps.hpp"

namespace tropbn {

namespace {

// ---- small exact linear algebra over Q ----

int matrix_rank(std::vector<std::vector<Rat>> m) {
    int rank = 0;
    if (m.empty()) return 0;
    size_t cols = m[0].size();
    for (size_t col = 0; col < cols && rank < static_cast<int>(m.size()); ++col) {
        size_t pivot = static_cast<size_t>(rank);
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[static_cast<size_t>(rank)], m[pivot]);
        for (size_t row = 0; row < m.size(); ++row) {
            if (row == static_cast<size_t>(rank) || m[row][col] == 0) continue;
            Rat f = m[row][col] / m[static_cast<size_t>(rank)][col];
            for (size_t c2 = col; c2 < cols; ++c2) m[row][c2] -= f * m[static_cast<size_t>(rank)][c2];
        }
        ++rank;
    }
    return rank;
}

// Primitive integer normal of a corank-1 row space.
std::vector<long long> primitive_normal(const std::vector<std::vector<long long>>& dirs, int n) {
    // Reduce the row space, then solve for the 1-dimensional kernel of the
    // transpose action: chi with dirs * chi = 0.
    std::vector<std::vector<Rat>> m;
    for (const auto& d : dirs) {
        std::vector<Rat> row(d.begin(), d.end());
        m.push_back(row);
    }
    // RREF
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(m.size()); ++col) {
        size_t pivot = static_cast<size_t>(rank);
        while (pivot < m.size() && m[pivot][static_cast<size_t>(col)] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[static_cast<size_t>(rank)], m[pivot]);
        Rat lead = m[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        for (auto& x : m[static_cast<size_t>(rank)]) x /= lead;
        for (size_t row = 0; row < m.size(); ++row) {
            if (row == static_cast<size_t>(rank)) continue;
            Rat f = m[row][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int c2 = 0; c2 < n; ++c2)
                m[row][static_cast<size_t>(c2)] -= f * m[static_cast<size_t>(rank)][static_cast<size_t>(c2)];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    require_internal(rank == n - 1, "primitive_normal expects a corank-1 span");
    // free column = the one not among pivots
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    int free_col = -1;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free_col = c;
    std::vector<Rat> chi(static_cast<size_t>(n), Rat(0));
    chi[static_cast<size_t>(free_col)] = 1;
    for (int rrow = 0; rrow < rank; ++rrow)
        chi[static_cast<size_t>(pivot_col[static_cast<size_t>(rrow)])] =
            -m[static_cast<size_t>(rrow)][static_cast<size_t>(free_col)];
    // clear denominators, divide by gcd, normalize sign
    Int lcm = 1;
    for (const auto& x : chi) lcm = boost::multiprecision::lcm(lcm, rat_den(x));
    std::vector<Int> v;
    for (const auto& x : chi) v.push_back(rat_num(x * Rat(lcm)));
    Int gcd = 0;
    for (const auto& x : v) gcd = boost::multiprecision::gcd(gcd, x);
    require_internal(gcd != 0, "zero normal vector");
    for (auto& x : v) x /= gcd;
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    std::vector<long long> out;
    for (const auto& x : v) out.push_back(to_ll(x));
    return out;
}

long long dot(const std::vector<long long>& a, const std::vector<long long>& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

struct SupportPoint {
    Rat xi;  // canonical
    Rat u;   // circle position
    std::vector<std::pair<int, long long>> divisor_mults;
    std::vector<long long> ord;  // per coordinate
};

}  // namespace

Skeleton realize_map(const MapBuildData& data) {
    const ChainOfCycles& chain = data.chain;
    const int n = data.n;
    const int ncoords = static_cast<int>(data.coords.size());
    require_internal(ncoords == n, "coordinate count must equal the target dimension");

    // ---- gather support points per cycle ----
    std::vector<std::map<Rat, SupportPoint>> support(static_cast<size_t>(chain.g + 1));
    for (int di = 0; di < static_cast<int>(data.divisors.size()); ++di) {
        std::map<std::pair<long long, Rat>, long long> merged;
        for (const auto& chip : data.divisors[static_cast<size_t>(di)].chips) {
            require_input(std::holds_alternative<CyclePoint>(chip.at),
                          "map divisors must be supported on cycles");
            require_input(chip.mult > 0, "map divisors must be effective");
            const auto& p = std::get<CyclePoint>(chip.at);
            merged[{p.cycle, canonical_xi(chain, p.cycle, p.xi)}] += chip.mult;
        }
        for (const auto& [key, mult] : merged) {
            auto [j, xi] = key;
            bool is_v = same_point(chain, CyclePoint{j, xi}, vertex_v(j));
            bool is_w = same_point(chain, CyclePoint{j, xi}, vertex_w(j));
            if ((is_v && j != 1) || (is_w && j != chain.g))
                throw InputError("divisor " + data.divisor_names[static_cast<size_t>(di)] +
                                 " is supported at the interior vertex " +
                                 location_str(CyclePoint{j, xi}) +
                                 "; the input is not vertex avoiding / sufficiently general");
            SupportPoint& sp = support[static_cast<size_t>(j)]
                                   .try_emplace(xi, SupportPoint{xi, circle_position(chain, j, xi),
                                                                 {}, std::vector<long long>(
                                                                         static_cast<size_t>(n), 0)})
                                   .first->second;
            sp.divisor_mults.push_back({di, mult});
        }
    }
    // geometric collision check (distinct names, same circle position)
    for (long long j = 1; j <= chain.g; ++j) {
        std::map<Rat, Rat> by_u;
        for (const auto& [xi, sp] : support[static_cast<size_t>(j)]) {
            auto [it, fresh] = by_u.try_emplace(sp.u, xi);
            require_internal(fresh, "distinct coordinates collide on the stand-in circle of cycle " +
                                        std::to_string(j));
        }
    }
    // per-coordinate orders
    for (long long j = 1; j <= chain.g; ++j)
        for (auto& [xi, sp] : support[static_cast<size_t>(j)])
            for (int c = 0; c < ncoords; ++c) {
                long long o = 0;
                for (const auto& [di, sign] : data.coords[static_cast<size_t>(c)])
                    for (const auto& [dj, mult] : sp.divisor_mults)
                        if (dj == di) o += sign * mult;
                sp.ord[static_cast<size_t>(c)] = o;
            }

    // ---- bridge slopes ----
    std::vector<std::vector<long long>> bridge_slope(static_cast<size_t>(chain.g));  // [j]: slope on bridge j
    {
        std::vector<long long> cum(static_cast<size_t>(n), 0);
        for (long long j = 1; j <= chain.g - 1; ++j) {
            for (const auto& [xi, sp] : support[static_cast<size_t>(j)])
                for (int c = 0; c < n; ++c) cum[static_cast<size_t>(c)] += sp.ord[static_cast<size_t>(c)];
            std::vector<long long> s(static_cast<size_t>(n));
            for (int c = 0; c < n; ++c) s[static_cast<size_t>(c)] = -cum[static_cast<size_t>(c)];
            bridge_slope[static_cast<size_t>(j)] = s;
        }
    }

    // ---- solve every cycle, coordinate by coordinate ----
    Skeleton skel;
    skel.g = chain.g;
    skel.n = n;
    skel.divisor_names = data.divisor_names;
    skel.cycle_edges.resize(static_cast<size_t>(chain.g));
    skel.bridge_edges.resize(static_cast<size_t>(chain.g - 1), -1);

    auto add_vertex = [&](long long cycle, const std::string& label) {
        skel.vertices.push_back({{}, cycle, label});
        return static_cast<int>(skel.vertices.size() - 1);
    };
    auto add_edge = [&](int u, int v, std::vector<long long> dir, Rat len, bool infinite) {
        skel.edges.push_back({u, v, std::move(dir), std::move(len), infinite});
        return static_cast<int>(skel.edges.size() - 1);
    };

    std::vector<int> v_vertex(static_cast<size_t>(chain.g + 1), -1);
    std::vector<int> w_vertex(static_cast<size_t>(chain.g + 1), -1);

    struct PendingTree {
        int base;
        long long cycle;
        Rat xi;
        std::vector<std::pair<int, long long>> leaves;  // (divisor, mult)
        std::vector<long long> ord;
    };
    std::vector<PendingTree> pending_trees;

    for (long long j = 1; j <= chain.g; ++j) {
        // breakpoints: always v and w, plus support points
        std::vector<CircleChip> pts;
        const Rat l = chain.cycle(j).top;
        const Rat C = chain.circumference(j);
        for (const auto& [xi, sp] : support[static_cast<size_t>(j)]) pts.push_back({sp.u, 0});
        auto ensure = [&](const Rat& u) {
            for (auto& p : pts)
                if (p.u == u) return;
            pts.push_back({u, 0});
        };
        ensure(Rat(0));
        ensure(l);
        std::sort(pts.begin(), pts.end(), [](const CircleChip& a, const CircleChip& b) { return a.u < b.u; });

        long long sl_in = 0, sl_out = 0;
        std::vector<std::vector<long long>> arc_dirs(pts.size(), std::vector<long long>(static_cast<size_t>(n), 0));
        for (int c = 0; c < n; ++c) {
            std::vector<CircleChip> chips = pts;
            for (auto& p : chips) {
                auto it = support[static_cast<size_t>(j)].end();
                for (auto s = support[static_cast<size_t>(j)].begin();
                     s != support[static_cast<size_t>(j)].end(); ++s)
                    if (s->second.u == p.u) it = s;
                p.ord = it == support[static_cast<size_t>(j)].end()
                            ? 0
                            : it->second.ord[static_cast<size_t>(c)];
            }
            sl_in = j >= 2 ? bridge_slope[static_cast<size_t>(j - 1)][static_cast<size_t>(c)] : 0;
            sl_out = j <= chain.g - 1 ? bridge_slope[static_cast<size_t>(j)][static_cast<size_t>(c)] : 0;
            CircleProfile prof = solve_circle(chain, j, chips, sl_in, sl_out);
            require_internal(prof.pos.size() == pts.size(), "circle profile breakpoint mismatch");
            for (size_t i = 0; i < pts.size(); ++i)
                arc_dirs[i][static_cast<size_t>(c)] = prof.arc_slope[i];
        }

        // vertices for the breakpoints
        std::vector<int> vid(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) {
            Rat name = circle_name(chain, j, pts[i].u);
            std::string label = location_str(CyclePoint{j, name});
            int id = add_vertex(j, label);
            vid[i] = id;
            if (pts[i].u == 0) w_vertex[static_cast<size_t>(j)] = id;
            if (pts[i].u == l) v_vertex[static_cast<size_t>(j)] = id;
        }
        // arcs
        for (size_t i = 0; i < pts.size(); ++i) {
            size_t next = (i + 1) % pts.size();
            Rat len = next == 0 ? C - pts[i].u + pts[0].u : pts[next].u - pts[i].u;
            int eid = add_edge(vid[i], vid[next], arc_dirs[i], len, false);
            skel.cycle_edges[static_cast<size_t>(j - 1)].push_back(eid);
        }
        // queue trees for the support points
        for (const auto& [xi, sp] : support[static_cast<size_t>(j)]) {
            int base = -1;
            for (size_t i = 0; i < pts.size(); ++i)
                if (pts[i].u == sp.u) base = vid[i];
            pending_trees.push_back({base, j, sp.xi, sp.divisor_mults, sp.ord});
        }
    }

    // bridges
    for (long long j = 1; j <= chain.g - 1; ++j) {
        int eid = add_edge(w_vertex[static_cast<size_t>(j)], v_vertex[static_cast<size_t>(j + 1)],
                           bridge_slope[static_cast<size_t>(j)],
                           chain.bridges[static_cast<size_t>(j - 1)], false);
        skel.bridge_edges[static_cast<size_t>(j - 1)] = eid;
    }

    // trees and rays
    for (const auto& pt : pending_trees) {
        std::vector<std::vector<long long>> leaf_dirs;
        std::vector<long long> total(static_cast<size_t>(n), 0);
        for (const auto& [di, mult] : pt.leaves) {
            std::vector<long long> d = data.divisor_ray[static_cast<size_t>(di)];
            for (auto& x : d) x *= mult;
            for (int c = 0; c < n; ++c) total[static_cast<size_t>(c)] += d[static_cast<size_t>(c)];
            leaf_dirs.push_back(std::move(d));
        }
        require_internal(total == pt.ord,
                         "ray directions do not balance the divisor orders at " +
                             location_str(CyclePoint{pt.cycle, pt.xi}));
        SkeletonTree tree;
        tree.base = pt.base;
        tree.cycle = pt.cycle;
        tree.base_key = rat_str(pt.xi);
        for (const auto& [di, mult] : pt.leaves) {
            tree.leaf_divisors.push_back(di);
            tree.leaf_mults.push_back(mult);
        }
        const size_t L = leaf_dirs.size();
        if (L == 1) {
            int eid = add_edge(pt.base, -1, leaf_dirs[0], Rat(0), true);
            tree.edge_ids.push_back(eid);
        } else {
            Rat root_len = data.default_tree_len;
            auto key = std::make_pair(pt.cycle, rat_str(pt.xi));
            if (auto it = data.tree_root_len.find(key); it != data.tree_root_len.end())
                root_len = it->second;
            // caterpillar: spine vertices q_1..q_{L-1}; q_t emits leaf t, the
            // last spine vertex emits the final two leaves
            int prev = pt.base;
            std::vector<long long> carried = total;
            for (size_t t = 0; t + 1 < L; ++t) {
                int q = add_vertex(0, "tree(" + location_str(CyclePoint{pt.cycle, pt.xi}) + ")#" +
                                          std::to_string(t + 1));
                Rat len = t == 0 ? root_len : data.default_tree_len;
                require_internal(!(carried == std::vector<long long>(static_cast<size_t>(n), 0)),
                                 "degenerate tree edge with zero direction");
                int eid = add_edge(prev, q, carried, len, false);
                tree.edge_ids.push_back(eid);
                tree.internal_vertices.push_back(q);
                int leid = add_edge(q, -1, leaf_dirs[t], Rat(0), true);
                tree.edge_ids.push_back(leid);
                for (int c = 0; c < n; ++c)
                    carried[static_cast<size_t>(c)] -= leaf_dirs[t][static_cast<size_t>(c)];
                prev = q;
            }
            int last = add_edge(prev, -1, leaf_dirs[L - 1], Rat(0), true);
            tree.edge_ids.push_back(last);
            require_internal(carried == leaf_dirs[L - 1], "caterpillar bookkeeping broke");
        }
        skel.trees.push_back(std::move(tree));
    }

    // ---- positions by traversal, with cycle-closure verification ----
    for (auto& v : skel.vertices) v.pos.assign(static_cast<size_t>(n), Rat(0));
    std::vector<char> placed(skel.vertices.size(), 0);
    require_internal(!skel.vertices.empty(), "empty skeleton");
    std::queue<int> bfs;
    placed[0] = 1;
    bfs.push(0);
    std::vector<std::vector<int>> incident(skel.vertices.size());
    for (int e = 0; e < static_cast<int>(skel.edges.size()); ++e) {
        const auto& ed = skel.edges[static_cast<size_t>(e)];
        incident[static_cast<size_t>(ed.u)].push_back(e);
        if (!ed.infinite) incident[static_cast<size_t>(ed.v)].push_back(e);
    }
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int e : incident[static_cast<size_t>(u)]) {
            const auto& ed = skel.edges[static_cast<size_t>(e)];
            if (ed.infinite) continue;
            int other = ed.u == u ? ed.v : ed.u;
            int sign = ed.u == u ? 1 : -1;
            std::vector<Rat> p = skel.vertices[static_cast<size_t>(u)].pos;
            for (int c = 0; c < n; ++c)
                p[static_cast<size_t>(c)] += Rat(sign) * Rat(ed.dir[static_cast<size_t>(c)]) * ed.len;
            if (!placed[static_cast<size_t>(other)]) {
                skel.vertices[static_cast<size_t>(other)].pos = p;
                placed[static_cast<size_t>(other)] = 1;
                bfs.push(other);
            } else {
                require_internal(skel.vertices[static_cast<size_t>(other)].pos == p,
                                 "position integration is inconsistent around a cycle");
            }
        }
    }
    for (char p : placed) require_internal(p, "skeleton is disconnected");

    // ---- balancing at every vertex ----
    for (int v = 0; v < static_cast<int>(skel.vertices.size()); ++v) {
        std::vector<long long> sum(static_cast<size_t>(n), 0);
        for (int e : incident[static_cast<size_t>(v)]) {
            const auto& ed = skel.edges[static_cast<size_t>(e)];
            int sign = ed.u == v ? 1 : -1;
            for (int c = 0; c < n; ++c) sum[static_cast<size_t>(c)] += sign * ed.dir[static_cast<size_t>(c)];
        }
        require_internal(sum == std::vector<long long>(static_cast<size_t>(n), 0),
                         "balancing fails at vertex " + skel.vertices[static_cast<size_t>(v)].label);
    }
    return skel;
}

// ---------------------------------------------------------------------------

GenericMap build_generic_map(const ChainOfCycles& chain, const Tableau& t,
                             const std::vector<Rat>& xi) {
    for (long long j = 1; j <= chain.g; ++j)
        require_input(chain.mu(j) == 0, "build_generic_map needs a fully generic chain");
    const int r = t.cols - 1;
    require_input(r >= 1, "need rank at least 1 to build a map");
    std::string why;
    require_input(is_vertex_avoiding(chain, t, xi, &why),
                  "divisor data is not vertex avoiding: " + why);

    std::vector<ChipList> reps = special_representatives(chain, t, xi);

    MapBuildData data;
    data.chain = chain;
    data.n = r;
    for (int i = 0; i <= r; ++i) {
        data.divisor_names.push_back("D_" + std::to_string(i));
        data.divisors.push_back(reps[static_cast<size_t>(i)]);
        std::vector<long long> ray(static_cast<size_t>(r), 0);
        if (i < r)
            ray[static_cast<size_t>(i)] = 1;
        else
            ray.assign(static_cast<size_t>(r), -1);  // e_r
        data.divisor_ray.push_back(ray);
    }
    // psi_i = D_i - D_r for i = 0..r-1
    for (int i = 0; i < r; ++i) data.coords.push_back({{i, 1}, {r, -1}});

    GenericMap out;
    out.data = std::move(data);
    out.skeleton = realize_map(out.data);
    return out;
}

ScrollMap build_scroll_map(const ChainOfCycles& chain, const Tableau& t, const ScrollarType& type,
                           const std::vector<Rat>& xi) {
    std::string why;
    require_input(is_scrollar(t, type, &why), "not a scrollar tableau: " + why);
    require_input(chain.k && *chain.k == type.k, "chain gonality does not match the scrollar type");
    const int n = type.n(), b = type.b, k = type.k;
    require_input(n == 1 || !has_vertical_step(t),
                  "scrollar tableau has a vertical step; the scroll map needs none");

    const long long m = t.cols / n;
    require_input(m >= 1, "tableau has fewer than n columns");

    // classes D, D(-m+1), D(-m)
    std::vector<ChipList> reps_t = special_representatives(chain, t, xi);
    Divisor d_class = normal_form(chain, reps_t.back());

    ChipList e_chips;
    e_chips.add(vertex_v(k), k);

    Tableau tm1 = t;
    for (long long i = 1; i < m; ++i) tm1 = t_minus_one(tm1, type);

    Divisor dm1 = normal_form(chain, chips_of(chain, d_class) - (m - 1) * e_chips);
    require_internal(contains(chain, tm1, dm1), "D(-m+1) escaped its torus");
    std::vector<Rat> xi_m1 = construction_xi_for_class(chain, tm1, dm1);
    std::vector<ChipList> reps_m1 = special_representatives(chain, tm1, xi_m1);

    std::vector<ChipList> reps_m;
    if (b >= 1) {
        Tableau tm = t_minus_one(tm1, type);
        Divisor dm = normal_form(chain, chips_of(chain, d_class) - m * e_chips);
        require_internal(contains(chain, tm, dm), "D(-m) escaped its torus");
        std::vector<Rat> xi_m = construction_xi_for_class(chain, tm, dm);
        require_input(is_vertex_avoiding(chain, tm, xi_m, &why),
                      "D(-m) is not vertex avoiding: " + why);
        reps_m = special_representatives(chain, tm, xi_m);
    }

    GonalityReps gon = gonality_representatives(chain, k);

    MapBuildData data;
    data.chain = chain;
    data.n = n;

    auto unit = [&](int c) {
        std::vector<long long> v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(c)] = 1;
        return v;
    };
    std::vector<long long> e0(static_cast<size_t>(n), -1);
    e0[0] = 0;  // e_0 = -(e_1 + ... + e_{n-1})
    std::vector<long long> u1 = unit(0);
    std::vector<long long> u0(static_cast<size_t>(n), 0);
    u0[0] = -1;
    for (int c = std::max(b, 1); c <= n - 1; ++c) u0[static_cast<size_t>(c)] -= 1;
    if (b == 0)
        for (int c = 1; c <= n - 1; ++c) u0[static_cast<size_t>(c)] = 0;  // u_0 = -u_1

    int idx_e0div = -1;
    data.divisor_names.push_back("E_0");
    data.divisors.push_back(gon.E0);
    data.divisor_ray.push_back(u1);
    data.divisor_names.push_back("E_1");
    data.divisors.push_back(gon.E1);
    data.divisor_ray.push_back(u0);
    std::vector<int> idx_dm(static_cast<size_t>(std::max(b, 1)), -1);
    for (int i = 0; i < b; ++i) {
        data.divisor_names.push_back("D(-" + std::to_string(m) + ")_" + std::to_string(i));
        data.divisors.push_back(reps_m[static_cast<size_t>(i)]);
        data.divisor_ray.push_back(i == b - 1 ? e0 : unit(i + 1));
        idx_dm[static_cast<size_t>(i)] = static_cast<int>(data.divisors.size() - 1);
    }
    std::vector<int> idx_dm1(static_cast<size_t>(n), -1);
    if (b >= 1) {
        for (int i = b; i <= n - 1; ++i) {
            data.divisor_names.push_back("D(-" + std::to_string(m - 1) + ")_" + std::to_string(i));
            data.divisors.push_back(reps_m1[static_cast<size_t>(i)]);
            data.divisor_ray.push_back(unit(i));
            idx_dm1[static_cast<size_t>(i)] = static_cast<int>(data.divisors.size() - 1);
        }
    } else if (n >= 2) {
        for (int i = 0; i <= n - 2; ++i) {
            data.divisor_names.push_back("D(-" + std::to_string(m - 1) + ")_" + std::to_string(i));
            data.divisors.push_back(reps_m1[static_cast<size_t>(i)]);
            data.divisor_ray.push_back(unit(i + 1));
            idx_dm1[static_cast<size_t>(i)] = static_cast<int>(data.divisors.size() - 1);
        }
        data.divisor_names.push_back("D(-" + std::to_string(m - 1) + ")_" + std::to_string(n - 1));
        data.divisors.push_back(reps_m1[static_cast<size_t>(n - 1)]);
        data.divisor_ray.push_back(e0);
        idx_e0div = static_cast<int>(data.divisors.size() - 1);
    }

    // coordinates: phi_0 = E_0 - E_1; then psi_0..psi_{b-2}; then psi_b..psi_{n-1}
    data.coords.push_back({{0, 1}, {1, -1}});
    if (b >= 1) {
        for (int i = 0; i <= b - 2; ++i)
            data.coords.push_back({{idx_dm[static_cast<size_t>(i)], 1},
                                   {idx_dm[static_cast<size_t>(b - 1)], -1}});
        for (int i = b; i <= n - 1; ++i)
            data.coords.push_back({{idx_dm1[static_cast<size_t>(i)], 1},
                                   {idx_dm[static_cast<size_t>(b - 1)], -1},
                                   {1, -1}});
    } else {
        for (int i = 0; i <= n - 2; ++i)
            data.coords.push_back({{idx_dm1[static_cast<size_t>(i)], 1}, {idx_e0div, -1}});
    }

    ScrollMap out;
    out.type = type;
    out.t = t;
    out.m = m;
    out.divisor_class = d_class;
    out.data = std::move(data);
    out.skeleton = realize_map(out.data);
    return out;
}

// ---------------------------------------------------------------------------

CycleSpan cycle_span(const Skeleton& skel, long long cycle) {
    require_input(cycle >= 1 && cycle <= skel.g, "cycle index out of range");
    CycleSpan out;
    out.cycle = cycle;
    std::vector<std::vector<long long>> dirs;
    for (int e : skel.cycle_edges[static_cast<size_t>(cycle - 1)])
        dirs.push_back(skel.edges[static_cast<size_t>(e)].dir);
    std::vector<std::vector<Rat>> m;
    for (const auto& d : dirs) m.push_back(std::vector<Rat>(d.begin(), d.end()));
    out.dim = matrix_rank(m);
    // greedy basis
    std::vector<std::vector<Rat>> picked;
    for (const auto& d : dirs) {
        auto trial = picked;
        trial.push_back(std::vector<Rat>(d.begin(), d.end()));
        if (matrix_rank(trial) > static_cast<int>(picked.size())) {
            picked = trial;
            out.basis.push_back(d);
        }
    }
    if (out.dim == skel.n - 1) out.chi = primitive_normal(out.basis, skel.n);
    return out;
}

AssumptionReport check_assumptions(const Skeleton& skel) {
    AssumptionReport rep;
    // (A) trivalence
    std::vector<int> valence(skel.vertices.size(), 0);
    for (const auto& e : skel.edges) {
        ++valence[static_cast<size_t>(e.u)];
        if (!e.infinite) ++valence[static_cast<size_t>(e.v)];
    }
    for (size_t v = 0; v < skel.vertices.size(); ++v)
        if (valence[v] != 3) {
            rep.trivalent = false;
            rep.valence_violations.push_back(skel.vertices[v].label + " has valence " +
                                             std::to_string(valence[v]));
        }
    // (B), superabundance, spans
    for (long long j = 1; j <= skel.g; ++j) {
        CycleSpan span = cycle_span(skel, j);
        if (span.dim < skel.n) {
            rep.superabundant = true;
            rep.contracted_cycles.push_back(j);
        }
        if (span.dim < skel.n - 1) rep.codim_at_most_one = false;
        rep.spans.push_back(std::move(span));
    }
    // (C) consecutive cycles jointly span
    for (long long j = 1; j + 1 <= skel.g; ++j) {
        std::vector<std::vector<Rat>> m;
        for (long long jj : {j, j + 1})
            for (int e : skel.cycle_edges[static_cast<size_t>(jj - 1)]) {
                const auto& d = skel.edges[static_cast<size_t>(e)].dir;
                m.push_back(std::vector<Rat>(d.begin(), d.end()));
            }
        if (matrix_rank(m) < skel.n) rep.consecutive_transverse = false;
    }
    return rep;
}

namespace {

struct ComponentData {
    std::vector<char> in_component;       // per vertex
    std::vector<char> edge_in_component;  // per edge (finite edges and rays)
    bool unbounded = false;
};

ComponentData hyperplane_component(const Skeleton& skel, long long cycle,
                                   const std::vector<long long>& chi) {
    ComponentData comp;
    comp.in_component.assign(skel.vertices.size(), 0);
    comp.edge_in_component.assign(skel.edges.size(), 0);
    std::vector<std::vector<int>> incident(skel.vertices.size());
    for (int e = 0; e < static_cast<int>(skel.edges.size()); ++e) {
        incident[static_cast<size_t>(skel.edges[static_cast<size_t>(e)].u)].push_back(e);
        if (!skel.edges[static_cast<size_t>(e)].infinite)
            incident[static_cast<size_t>(skel.edges[static_cast<size_t>(e)].v)].push_back(e);
    }
    std::queue<int> bfs;
    for (int v = 0; v < static_cast<int>(skel.vertices.size()); ++v)
        if (skel.vertices[static_cast<size_t>(v)].cycle == cycle) {
            comp.in_component[static_cast<size_t>(v)] = 1;
            bfs.push(v);
        }
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int e : incident[static_cast<size_t>(u)]) {
            const auto& ed = skel.edges[static_cast<size_t>(e)];
            if (dot(chi, ed.dir) != 0) continue;
            comp.edge_in_component[static_cast<size_t>(e)] = 1;
            if (ed.infinite) {
                comp.unbounded = true;
                continue;
            }
            int other = ed.u == u ? ed.v : ed.u;
            if (!comp.in_component[static_cast<size_t>(other)]) {
                comp.in_component[static_cast<size_t>(other)] = 1;
                bfs.push(other);
            }
        }
    }
    return comp;
}

}  // namespace

WellSpacednessReport naive_well_spacedness(const Skeleton& skel) {
    WellSpacednessReport report;
    for (long long j = 1; j <= skel.g; ++j) {
        CycleWellSpacedness cw;
        cw.cycle = j;
        CycleSpan span = cycle_span(skel, j);
        if (span.dim == skel.n) {
            report.cycles.push_back(std::move(cw));
            continue;
        }
        if (span.dim < skel.n - 1) {
            cw.skipped_high_codim = true;
            report.cycles.push_back(std::move(cw));
            continue;
        }
        cw.has_condition = true;
        report.vacuous = false;
        cw.chi = *span.chi;

        ComponentData comp = hyperplane_component(skel, j, cw.chi);
        cw.unbounded_component = comp.unbounded;

        // does the component absorb some other whole cycle?
        for (long long j2 = 1; j2 <= skel.g; ++j2) {
            if (j2 == j) continue;
            bool whole = true;
            for (int e : skel.cycle_edges[static_cast<size_t>(j2 - 1)])
                if (!comp.edge_in_component[static_cast<size_t>(e)]) whole = false;
            if (whole) cw.merged_other_cycle = true;
        }

        // valence within the component
        std::vector<int> cvalence(skel.vertices.size(), 0);
        for (int e = 0; e < static_cast<int>(skel.edges.size()); ++e) {
            if (!comp.edge_in_component[static_cast<size_t>(e)]) continue;
            const auto& ed = skel.edges[static_cast<size_t>(e)];
            ++cvalence[static_cast<size_t>(ed.u)];
            if (!ed.infinite) ++cvalence[static_cast<size_t>(ed.v)];
        }
        // multi-source Dijkstra from the cycle's vertices over component edges
        std::vector<Rat> dist(skel.vertices.size(), Rat(-1));
        using Item = std::pair<Rat, int>;
        auto cmp = [](const Item& a, const Item& b) { return a.first > b.first; };
        std::priority_queue<Item, std::vector<Item>, decltype(cmp)> pq(cmp);
        for (int v = 0; v < static_cast<int>(skel.vertices.size()); ++v)
            if (skel.vertices[static_cast<size_t>(v)].cycle == j) {
                dist[static_cast<size_t>(v)] = 0;
                pq.push({Rat(0), v});
            }
        std::vector<std::vector<int>> incident(skel.vertices.size());
        for (int e = 0; e < static_cast<int>(skel.edges.size()); ++e) {
            if (!comp.edge_in_component[static_cast<size_t>(e)]) continue;
            const auto& ed = skel.edges[static_cast<size_t>(e)];
            if (ed.infinite) continue;
            incident[static_cast<size_t>(ed.u)].push_back(e);
            incident[static_cast<size_t>(ed.v)].push_back(e);
        }
        while (!pq.empty()) {
            auto [du, u] = pq.top();
            pq.pop();
            if (dist[static_cast<size_t>(u)] != du) continue;
            for (int e : incident[static_cast<size_t>(u)]) {
                const auto& ed = skel.edges[static_cast<size_t>(e)];
                int other = ed.u == u ? ed.v : ed.u;
                Rat nd = du + ed.len;
                if (dist[static_cast<size_t>(other)] < 0 || nd < dist[static_cast<size_t>(other)]) {
                    dist[static_cast<size_t>(other)] = nd;
                    pq.push({nd, other});
                } else if (nd == dist[static_cast<size_t>(other)] &&
                           skel.vertices[static_cast<size_t>(other)].cycle != j) {
                    cw.unique_shortest_paths = false;
                }
            }
        }
        // 1-valent vertices of the component are the escape points
        for (int v = 0; v < static_cast<int>(skel.vertices.size()); ++v) {
            if (!comp.in_component[static_cast<size_t>(v)]) continue;
            if (cvalence[static_cast<size_t>(v)] != 1) continue;
            require_internal(dist[static_cast<size_t>(v)] >= 0, "escape vertex unreachable");
            cw.escape_distances.push_back(dist[static_cast<size_t>(v)]);
        }
        std::sort(cw.escape_distances.begin(), cw.escape_distances.end());
        // Infinite rays inside H make the component unbounded but contribute
        // no 1-valent vertex; the condition reads the finite escape multiset.
        if (cw.escape_distances.empty()) {
            cw.well_spaced = true;  // vacuous; flagged in the report
        } else {
            int mult = 0;
            for (const auto& d : cw.escape_distances)
                if (d == cw.escape_distances.front()) ++mult;
            cw.well_spaced = mult >= 2;
        }
        if (!cw.well_spaced) report.overall = false;
        report.cycles.push_back(std::move(cw));
    }
    return report;
}

TuneReport assign_well_spaced_lengths(MapBuildData& data, Skeleton& skel, const Rat& B) {
    require_input(B > 1, "scale parameter B must exceed 1");
    require_input(data.chain.k.has_value(), "the edge-length recipe needs a k-gonal chain");
    const long long k = *data.chain.k;
    const long long g = data.chain.g;
    for (long long i = 1; i <= g - 1; ++i) {
        Rat len(1);
        if (i <= k - 1) {
            len = 1;
            for (long long p = 0; p < k - i; ++p) len *= B;
        } else if (i >= g - k + 2) {
            len = 1;
            for (long long p = 0; p < i - (g - k + 1); ++p) len *= B;
        }
        data.chain.bridges[static_cast<size_t>(i - 1)] = len;
    }

    TuneReport report;
    report.B = B;
    // Tunable branch lengths can shift other cycles' escape routes, so iterate
    // to a fixpoint (two passes settle every case that arises here).
    for (int pass = 0; pass < 4; ++pass) {
        skel = realize_map(data);
        bool changed = false;
        WellSpacednessReport ws = naive_well_spacedness(skel);
        report.tuned.clear();
        report.margins.clear();
        for (const auto& cw : ws.cycles) {
            if (!cw.has_condition || cw.escape_distances.empty()) continue;
            // split escapes into tree-tunable (trees based on this cycle) and fixed
            ComponentData comp = hyperplane_component(skel, cw.cycle, cw.chi);
            std::vector<int> cvalence(skel.vertices.size(), 0);
            for (int e = 0; e < static_cast<int>(skel.edges.size()); ++e) {
                if (!comp.edge_in_component[static_cast<size_t>(e)]) continue;
                const auto& ed = skel.edges[static_cast<size_t>(e)];
                ++cvalence[static_cast<size_t>(ed.u)];
                if (!ed.infinite) ++cvalence[static_cast<size_t>(ed.v)];
            }
            // recompute distances (same as naive_well_spacedness internals)
            std::vector<Rat> dist(skel.vertices.size(), Rat(-1));
            using Item = std::pair<Rat, int>;
            auto cmp = [](const Item& a, const Item& b) { return a.first > b.first; };
            std::priority_queue<Item, std::vector<Item>, decltype(cmp)> pq(cmp);
            for (int v = 0; v < static_cast<int>(skel.vertices.size()); ++v)
                if (skel.vertices[static_cast<size_t>(v)].cycle == cw.cycle) {
                    dist[static_cast<size_t>(v)] = 0;
                    pq.push({Rat(0), v});
                }
            std::vector<std::vector<int>> incident(skel.vertices.size());
            for (int e = 0; e < static_cast<int>(skel.edges.size()); ++e) {
                if (!comp.edge_in_component[static_cast<size_t>(e)]) continue;
                const auto& ed = skel.edges[static_cast<size_t>(e)];
                if (ed.infinite) continue;
                incident[static_cast<size_t>(ed.u)].push_back(e);
                incident[static_cast<size_t>(ed.v)].push_back(e);
            }
            while (!pq.empty()) {
                auto [du, u] = pq.top();
                pq.pop();
                if (dist[static_cast<size_t>(u)] != du) continue;
                for (int e : incident[static_cast<size_t>(u)]) {
                    const auto& ed = skel.edges[static_cast<size_t>(e)];
                    int other = ed.u == u ? ed.v : ed.u;
                    Rat nd = du + ed.len;
                    if (dist[static_cast<size_t>(other)] < 0 || nd < dist[static_cast<size_t>(other)]) {
                        dist[static_cast<size_t>(other)] = nd;
                        pq.push({nd, other});
                    }
                }
            }
            struct Tunable {
                const SkeletonTree* tree;
                Rat extra;  // escape distance minus the current root length
            };
            std::vector<Tunable> tunables;
            std::vector<Rat> fixed;
            for (int v = 0; v < static_cast<int>(skel.vertices.size()); ++v) {
                if (!comp.in_component[static_cast<size_t>(v)] || cvalence[static_cast<size_t>(v)] != 1)
                    continue;
                const SkeletonTree* owner = nullptr;
                for (const auto& tree : skel.trees)
                    for (int iv : tree.internal_vertices)
                        if (iv == v) owner = &tree;
                if (owner && owner->cycle == cw.cycle) {
                    Rat root_len = skel.edges[static_cast<size_t>(owner->edge_ids[0])].len;
                    tunables.push_back({owner, dist[static_cast<size_t>(v)] - root_len});
                } else {
                    fixed.push_back(dist[static_cast<size_t>(v)]);
                }
            }
            if (fixed.empty())
                throw CertificateError("cycle " + std::to_string(cw.cycle) +
                                       " has no fixed escape to match");
            std::sort(fixed.begin(), fixed.end());
            Rat dstar = fixed.front();
            Rat margin = fixed.size() >= 2 ? fixed[1] - dstar : Rat(0);
            for (const auto& tn : tunables) {
                Rat want = dstar - tn.extra;
                if (want <= 0)
                    throw CertificateError("tuned branch length would be nonpositive on cycle " +
                                           std::to_string(cw.cycle));
                Rat cur = skel.edges[static_cast<size_t>(tn.tree->edge_ids[0])].len;
                if (cur != want) changed = true;
                data.tree_root_len[{tn.tree->cycle, tn.tree->base_key}] = want;
            }
            report.tuned.push_back({cw.cycle, dstar});
            report.margins.push_back(margin);
        }
        if (!changed) break;
    }
    skel = realize_map(data);
    report.verdict = naive_well_spacedness(skel);
    if (!report.verdict.overall)
        throw CertificateError("edge-length recipe failed to reach naive well-spacedness");
    return report;
}

}  // namespace tropbn
