#include "tropbn/tableau.hpp"

#include <algorithm>
#include <sstream>

#include "tropbn/errors.hpp"

namespace tropbn {

Tableau make_tableau(const std::vector<std::vector<int>>& rows) {
    require_input(!rows.empty(), "tableau needs at least one row");
    Tableau t;
    t.rows = static_cast<int>(rows.size());
    t.cols = static_cast<int>(rows[0].size());
    require_input(t.cols >= 1, "tableau needs at least one column");
    for (const auto& row : rows)
        require_input(static_cast<int>(row.size()) == t.cols, "ragged tableau rejected");
    t.cells.reserve(static_cast<size_t>(t.rows) * t.cols);
    for (const auto& row : rows)
        for (int v : row) t.cells.push_back(v);
    return t;
}

std::string tableau_str(const Tableau& t) {
    std::ostringstream os;
    os << "[";
    for (int y = 0; y < t.rows; ++y) {
        if (y) os << ",";
        os << "[";
        for (int x = 0; x < t.cols; ++x) {
            if (x) os << ",";
            os << t.at(x, y);
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

bool is_displacement_tableau(const Tableau& t, const std::vector<long long>& profile,
                             std::string* reason) {
    auto fail = [&](const std::string& msg) {
        if (reason) *reason = msg;
        return false;
    };
    const long long g = static_cast<long long>(profile.size());
    for (int y = 0; y < t.rows; ++y)
        for (int x = 0; x < t.cols; ++x) {
            int v = t.at(x, y);
            if (v < 1 || v > g) return fail("entry out of alphabet at box (" + std::to_string(x) + "," + std::to_string(y) + ")");
            if (x > 0 && t.at(x - 1, y) >= v) return fail("row not strictly increasing");
            if (y > 0 && t.at(x, y - 1) >= v) return fail("column not strictly increasing");
        }
    for (int y = 0; y < t.rows; ++y)
        for (int x = 0; x < t.cols; ++x)
            for (int y2 = y; y2 < t.rows; ++y2)
                for (int x2 = (y2 == y ? x + 1 : 0); x2 < t.cols; ++x2) {
                    if (t.at(x, y) != t.at(x2, y2)) continue;
                    long long mu = profile[static_cast<size_t>(t.at(x, y) - 1)];
                    long long dist = std::abs(x - x2) + std::abs(y - y2);
                    if (mu == 0)
                        return fail("symbol " + std::to_string(t.at(x, y)) + " repeats on a generic cycle");
                    if (dist % mu != 0)
                        return fail("symbol " + std::to_string(t.at(x, y)) +
                                    " repeats at lattice distance " + std::to_string(dist) +
                                    ", not a multiple of its torsion order");
                }
    return true;
}

std::vector<int> symbols_present(const Tableau& t, long long g) {
    std::vector<bool> seen(static_cast<size_t>(g) + 1, false);
    for (int v : t.cells)
        if (v >= 1 && v <= g) seen[static_cast<size_t>(v)] = true;
    std::vector<int> out;
    for (long long j = 1; j <= g; ++j)
        if (seen[static_cast<size_t>(j)]) out.push_back(static_cast<int>(j));
    return out;
}

long long torus_dimension(const Tableau& t, long long g) {
    return g - static_cast<long long>(symbols_present(t, g).size());
}

LatticePath lattice_path(const Tableau& t, long long g) {
    LatticePath path;
    path.r = t.cols - 1;
    const int r = path.r;
    std::vector<long long> cur(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) cur[static_cast<size_t>(i)] = r - i;
    path.p.push_back(cur);

    // columns touched by each symbol
    std::vector<std::vector<int>> cols_of(static_cast<size_t>(g) + 1);
    for (int y = 0; y < t.rows; ++y)
        for (int x = 0; x < t.cols; ++x) {
            int v = t.at(x, y);
            if (v >= 1 && v <= g) {
                auto& cs = cols_of[static_cast<size_t>(v)];
                if (std::find(cs.begin(), cs.end(), x) == cs.end()) cs.push_back(x);
            }
        }
    for (long long j = 1; j <= g; ++j) {
        for (int x : cols_of[static_cast<size_t>(j)]) {
            if (x == r) {
                for (auto& c : cur) --c;  // e_r = (-1,...,-1)
            } else {
                ++cur[static_cast<size_t>(x)];
            }
        }
        path.p.push_back(cur);
    }
    return path;
}

std::vector<long long> psi_bridge_slopes(const Tableau& t, long long g, int i) {
    require_input(i >= 0 && i <= t.cols - 1, "column index out of range");
    LatticePath path = lattice_path(t, g);
    std::vector<long long> out;
    for (long long j = 1; j <= g - 1; ++j) out.push_back(path.value(j, i));
    return out;
}

TorusComponent torus_component(const ChainOfCycles& chain, const Tableau& t) {
    std::string reason;
    require_input(is_displacement_tableau(t, chain.torsion_profile(), &reason),
                  "not a displacement tableau: " + reason);
    TorusComponent tc;
    tc.t = t;
    tc.g = chain.g;
    tc.profile = chain.torsion_profile();
    tc.constrained.assign(static_cast<size_t>(chain.g), false);
    tc.residue.assign(static_cast<size_t>(chain.g), Rat(0));
    for (int y = 0; y < t.rows; ++y)
        for (int x = 0; x < t.cols; ++x) {
            int j = t.at(x, y);
            tc.constrained[static_cast<size_t>(j - 1)] = true;
            tc.residue[static_cast<size_t>(j - 1)] = canonical_xi(chain, j, Rat(y - x));
        }
    tc.dimension = torus_dimension(t, chain.g);
    return tc;
}

bool contains(const TorusComponent& torus, const Divisor& d) {
    require_input(static_cast<long long>(d.xi.size()) == torus.g, "divisor/torus size mismatch");
    long long expected_degree = torus.g + (torus.t.cols - 1) - torus.t.rows;
    if (d.degree != expected_degree) return false;
    for (long long j = 1; j <= torus.g; ++j) {
        if (!torus.constrained[static_cast<size_t>(j - 1)]) continue;
        if (!congruent(d.xi[static_cast<size_t>(j - 1)], torus.residue[static_cast<size_t>(j - 1)],
                       torus.profile[static_cast<size_t>(j - 1)]))
            return false;
    }
    return true;
}

bool contains(const ChainOfCycles& chain, const Tableau& t, const Divisor& d) {
    require_input(static_cast<long long>(d.xi.size()) == chain.g, "divisor/chain size mismatch");
    long long expected_degree = chain.g + (t.cols - 1) - t.rows;
    if (d.degree != expected_degree) return false;
    for (int y = 0; y < t.rows; ++y)
        for (int x = 0; x < t.cols; ++x) {
            int j = t.at(x, y);
            require_input(j >= 1 && j <= chain.g, "tableau entry out of range for this chain");
            if (!congruent(d.xi[static_cast<size_t>(j - 1)], Rat(y - x), chain.mu(j)))
                return false;
        }
    return true;
}

}  // namespace tropbn
