#include "tropbn/scrollar.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tropbn/errors.hpp"

namespace tropbn {

void validate_scrollar_type(const ScrollarType& type) {
    require_input(type.a >= 1, "scrollar type needs a >= 1");
    require_input(type.b >= 0, "scrollar type needs b >= 0");
    require_input(type.k >= 2, "gonality must be >= 2");
    require_input(type.n() < type.k, "scrollar type needs n = a + b < k");
}

namespace {

std::vector<long long> k_gonal_profile(long long g, long long k) {
    std::vector<long long> mu(static_cast<size_t>(g), 0);
    for (long long j = k; j <= g - k + 1; ++j) mu[static_cast<size_t>(j - 1)] = k;
    return mu;
}

long long max_symbol(const Tableau& t) {
    return *std::max_element(t.cells.begin(), t.cells.end());
}

}  // namespace

bool is_scrollar(const Tableau& t, const ScrollarType& type, std::string* reason) {
    validate_scrollar_type(type);
    auto fail = [&](const std::string& msg) {
        if (reason) *reason = msg;
        return false;
    };
    const int n = type.n(), k = type.k;
    if (t.cols % n != type.b % n) return fail("column count is not congruent to b mod n");
    // Equal entries exactly along multiples of the translation (n, n-k).
    for (int y = 0; y < t.rows; ++y)
        for (int x = 0; x < t.cols; ++x)
            for (int y2 = 0; y2 < t.rows; ++y2)
                for (int x2 = 0; x2 < t.cols; ++x2) {
                    if (x == x2 && y == y2) continue;
                    int dx = x2 - x, dy = y2 - y;
                    bool translation = dx % n == 0 && dx / n * (n - k) == dy && dx != 0;
                    bool equal = t.at(x, y) == t.at(x2, y2);
                    if (equal != translation)
                        return fail("repetition rule fails between (" + std::to_string(x) + "," +
                                    std::to_string(y) + ") and (" + std::to_string(x2) + "," +
                                    std::to_string(y2) + ")");
                }
    long long g = max_symbol(t);
    std::string why;
    if (!is_displacement_tableau(t, k_gonal_profile(g, k), &why))
        return fail("not a displacement tableau for the k-gonal profile: " + why);
    return true;
}

Tableau generate_scrollar(const ScrollarType& type, int cols, int rows) {
    validate_scrollar_type(type);
    const int n = type.n(), k = type.k;
    require_input(cols >= 1 && rows >= 1, "shape must be positive");
    require_input(cols % n == type.b % n, "column count must be congruent to b mod n");
    require_input(rows >= k - n, "need at least k-n rows");

    Tableau t;
    t.cols = cols;
    t.rows = rows;
    t.cells.assign(static_cast<size_t>(cols) * rows, 0);
    int counter = 1;
    auto propagate = [&](int x, int y, int v) {
        for (int i = 0;; ++i) {
            int px = x + i * n, py = y - i * (k - n);
            if (px >= cols || py < 0) break;
            t.at(px, py) = v;
        }
    };
    for (int block = 0; block * n < cols; ++block) {
        int x0 = block * n, x1 = std::min((block + 1) * n, cols);
        int y0 = block == 0 ? 0 : rows - (k - n);
        for (int y = y0; y < rows; ++y)
            for (int x = x0; x < x1; ++x) {
                require_internal(t.at(x, y) == 0, "canonical filling collision");
                propagate(x, y, counter++);
            }
    }
    for (int v : t.cells) require_internal(v != 0, "canonical filling left a hole");
    std::string why;
    require_input(is_scrollar(t, type, &why), "infeasible scrollar shape: " + why);
    return t;
}

Tableau t_minus_one(const Tableau& t, const ScrollarType& type) {
    std::string why;
    require_input(is_scrollar(t, type, &why), "not a scrollar tableau: " + why);
    const int n = type.n(), k = type.k;
    require_input(t.cols > n, "t(-1) undefined for tableaux with at most n columns");
    Tableau out;
    out.cols = t.cols - n;
    out.rows = t.rows + (k - n);
    out.cells.assign(static_cast<size_t>(out.cols) * out.rows, 0);
    for (int y = 0; y < out.rows; ++y)
        for (int x = 0; x < out.cols; ++x)
            out.at(x, y) = y < t.rows ? t.at(x, y) : t.at(x + n, y - (k - n));
    return out;
}

Tableau t_plus_one(const Tableau& t, const ScrollarType& type) {
    std::string why;
    require_input(is_scrollar(t, type, &why), "not a scrollar tableau: " + why);
    const int n = type.n(), k = type.k;
    require_input(t.cols >= n, "inverse undefined: fewer than n columns");
    require_input(t.rows > k - n, "inverse undefined: not enough rows");
    Tableau out;
    out.cols = t.cols + n;
    out.rows = t.rows - (k - n);
    out.cells.assign(static_cast<size_t>(out.cols) * out.rows, 0);
    for (int y = 0; y < out.rows; ++y)
        for (int x = 0; x < out.cols; ++x)
            out.at(x, y) = x < t.cols ? t.at(x, y) : t.at(x - n, y + (k - n));
    return out;
}

bool has_vertical_step(const Tableau& t) {
    for (int y = 0; y + 1 < t.rows; ++y)
        for (int x = 0; x < t.cols; ++x)
            if (t.at(x, y + 1) == t.at(x, y) + 1) return true;
    return false;
}

std::vector<SerialStep> serial_subtract(const ChainOfCycles& chain, const Tableau& t,
                                        const ScrollarType& type, const Divisor& d, long long m) {
    require_input(chain.k && *chain.k == type.k, "chain gonality does not match the scrollar type");
    const int n = type.n();
    long long cap = type.b >= 1 ? (t.cols - type.b) / n : t.cols / n - 1;
    require_input(m >= 0 && m <= cap, "m exceeds the defined contraction range");
    require_input(contains(chain, t, d), "divisor is not in the torus of this tableau");

    ChipList e;
    e.add(vertex_v(type.k), type.k);
    Divisor e_nf = normal_form(chain, e);

    std::vector<SerialStep> steps;
    Tableau cur = t;
    for (long long i = 0; i <= m; ++i) {
        SerialStep step;
        step.i = i;
        step.tableau = cur;
        step.divisor = normal_form(chain, chips_of(chain, d) - i * e);
        step.member = contains(chain, cur, step.divisor);
        require_internal(step.member, "serial subtraction left the expected torus at step " +
                                          std::to_string(i));
        steps.push_back(step);
        if (i < m) cur = t_minus_one(cur, type);
    }
    return steps;
}

DimensionCheck component_dimension_check(const Tableau& t, const ScrollarType& type, long long g) {
    std::string why;
    require_input(is_scrollar(t, type, &why), "not a scrollar tableau: " + why);
    require_input(g >= max_symbol(t), "alphabet larger than the ambient genus");
    require_input(is_displacement_tableau(t, k_gonal_profile(g, type.k), &why),
                  "tableau invalid for the ambient k-gonal profile: " + why);
    DimensionCheck out;
    long long r = t.cols - 1;
    long long s = t.rows;
    long long d = g + r - s;
    out.ell = r + 1 - type.n();
    out.dim = torus_dimension(t, g);
    out.formula = rho(g, r - out.ell, d) - out.ell * type.k;
    out.agrees = out.dim == out.formula;
    out.rho_bar_value = rho_bar(g, r, d, type.k).value;
    out.achieves_rho_bar = out.dim == out.rho_bar_value;
    out.rho_bar_shape_exists = scrollar_shape_for(g, type.k, r, d).has_value();
    return out;
}

std::optional<Tableau> scrollar_shape_for(long long g, long long k, long long r, long long d) {
    long long rows = g - d + r;
    if (rows < 1 || r < 0) return std::nullopt;
    auto rb = rho_bar(g, r, d, k);
    for (long long ell : rb.maximizers) {
        long long n = r + 1 - ell;
        if (n < 1 || n >= k) continue;
        long long b = (r + 1) % n;
        long long a = n - b;
        if (a < 1) continue;
        if (rows < k - n) continue;
        ScrollarType type{static_cast<int>(a), static_cast<int>(b), static_cast<int>(k)};
        Tableau t;
        try {
            t = generate_scrollar(type, static_cast<int>(r + 1), static_cast<int>(rows));
        } catch (const InputError&) {
            continue;
        }
        if (max_symbol(t) > g) continue;
        std::string why;
        if (!is_displacement_tableau(t, k_gonal_profile(g, k), &why)) continue;
        return t;
    }
    return std::nullopt;
}

IndependenceSlopes independence_slopes(const Tableau& t, const ScrollarType& type, long long g) {
    std::string why;
    require_input(is_scrollar(t, type, &why), "not a scrollar tableau: " + why);
    const int n = type.n(), b = type.b, k = type.k;
    require_input(g >= std::max<long long>(max_symbol(t), k), "ambient genus too small");
    long long m = t.cols / n;
    require_input(m >= 1, "tableau has fewer than n columns");

    Tableau tm1 = t;
    for (long long i = 1; i < m; ++i) tm1 = t_minus_one(tm1, type);
    require_internal(tm1.cols == n + b, "t(-m+1) does not have n+b columns");

    LatticePath path = lattice_path(tm1, g);
    // strict descent including the virtual p_j(r) = 0
    for (long long j = 0; j <= g; ++j)
        for (int i = 0; i < tm1.cols - 1; ++i)
            require_internal(path.value(j, i) > path.value(j, i + 1),
                             "lattice path lost strict descent");

    IndependenceSlopes out;
    for (int i = 0; i < b; ++i) out.slopes.push_back(path.value(k - 1, i));       // phi_0 + psi_i
    for (int i = 0; i < b; ++i) out.slopes.push_back(path.value(k - 1, n + i));   // phi_1 + psi_i
    for (int i = b; i < n; ++i) out.slopes.push_back(path.value(k - 1, i));       // psi_i
    std::set<long long> uniq(out.slopes.begin(), out.slopes.end());
    out.distinct = uniq.size() == out.slopes.size();
    return out;
}

}  // namespace tropbn
