#include "tropbn/enumerate.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tropbn/errors.hpp"

namespace tropbn {

SymbolFilter make_filter(const ChainOfCycles& chain, const Divisor& d) {
    require_input(static_cast<long long>(d.xi.size()) == chain.g, "divisor/chain size mismatch");
    SymbolFilter f;
    f.mode.resize(static_cast<size_t>(chain.g), 0);
    f.data.resize(static_cast<size_t>(chain.g), 0);
    f.mu.resize(static_cast<size_t>(chain.g), 0);
    for (long long j = 1; j <= chain.g; ++j) {
        const Rat& xi = d.xi[static_cast<size_t>(j - 1)];
        long long mu = chain.mu(j);
        f.mu[static_cast<size_t>(j - 1)] = mu;
        if (!is_integer(xi)) continue;  // no box congruence can hold
        long long v = to_ll(rat_num(xi));
        if (mu > 0) {
            f.mode[static_cast<size_t>(j - 1)] = 1;
            long long res = v % mu;
            if (res < 0) res += mu;
            f.data[static_cast<size_t>(j - 1)] = res;
        } else {
            f.mode[static_cast<size_t>(j - 1)] = 2;
            f.data[static_cast<size_t>(j - 1)] = v;
        }
    }
    return f;
}

namespace {

// Column-major backtracking over displacement tableaux.  Box idx covers
// column idx/rows, row idx%rows; candidates ascend, so tableaux come out in
// lexicographic order of the column-major reading word.
struct Filler {
    int cols, rows;
    int g;
    const std::vector<long long>* profile;
    const SymbolFilter* filter = nullptr;
    std::vector<int> grid;  // row-major, 0 = empty
    std::vector<std::vector<std::pair<int, int>>> occ;  // per symbol: boxes so far
    const std::function<bool(int)>* report;             // arg: first box index NOT filled
    std::atomic<bool>* cancel = nullptr;
    int stop_idx = 0;

    int cell(int x, int y) const { return grid[static_cast<size_t>(y) * cols + x]; }

    bool admissible(int v, int x, int y) const {
        long long mu = (*profile)[static_cast<size_t>(v - 1)];
        const auto& seen = occ[static_cast<size_t>(v - 1)];
        if (!seen.empty()) {
            if (mu == 0) return false;
            for (const auto& [px, py] : seen)
                if ((std::abs(x - px) + std::abs(y - py)) % mu != 0) return false;
        }
        if (filter && !filter->admits(v, x, y)) return false;
        return true;
    }

    bool fill(int idx) {
        if (cancel && cancel->load(std::memory_order_relaxed)) return false;
        if (idx == stop_idx) return (*report)(idx);
        int x = idx / rows, y = idx % rows;
        int lo = 1;
        if (y > 0) lo = std::max(lo, cell(x, y - 1) + 1);
        if (x > 0) lo = std::max(lo, cell(x - 1, y) + 1);
        int hi = g - std::max(rows - 1 - y, cols - 1 - x);
        for (int v = lo; v <= hi; ++v) {
            if (!admissible(v, x, y)) continue;
            grid[static_cast<size_t>(y) * cols + x] = v;
            occ[static_cast<size_t>(v - 1)].push_back({x, y});
            bool go_on = fill(idx + 1);
            occ[static_cast<size_t>(v - 1)].pop_back();
            grid[static_cast<size_t>(y) * cols + x] = 0;
            if (!go_on) return false;
        }
        return true;
    }
};

Filler make_filler(long long g, const std::vector<long long>& profile, int cols, int rows,
                   const SymbolFilter* filter) {
    require_input(cols >= 1 && rows >= 1, "tableau shape must be positive");
    require_input(g >= 1 && static_cast<long long>(profile.size()) == g, "profile size must equal g");
    Filler f;
    f.cols = cols;
    f.rows = rows;
    f.g = static_cast<int>(g);
    f.profile = &profile;
    f.filter = filter;
    f.grid.assign(static_cast<size_t>(cols) * rows, 0);
    f.occ.assign(static_cast<size_t>(g), {});
    f.stop_idx = cols * rows;
    return f;
}

Tableau snapshot(const Filler& f) {
    Tableau t;
    t.cols = f.cols;
    t.rows = f.rows;
    t.cells = f.grid;
    return t;
}

// First-column prefixes, the unit of parallel splitting.
struct Prefix {
    std::vector<int> column;
};

std::vector<Prefix> first_column_prefixes(long long g, const std::vector<long long>& profile,
                                          int cols, int rows, const SymbolFilter* filter) {
    Filler f = make_filler(g, profile, cols, rows, filter);
    f.stop_idx = rows;
    std::vector<Prefix> out;
    std::function<bool(int)> rep = [&](int) {
        Prefix p;
        for (int y = 0; y < rows; ++y) p.column.push_back(f.cell(0, y));
        out.push_back(std::move(p));
        return true;
    };
    f.report = &rep;
    f.fill(0);
    return out;
}

void load_prefix(Filler& f, const Prefix& p) {
    for (int y = 0; y < f.rows; ++y) {
        int v = p.column[static_cast<size_t>(y)];
        f.grid[static_cast<size_t>(y) * f.cols] = v;
        f.occ[static_cast<size_t>(v - 1)].push_back({0, y});
    }
}

template <typename PerJob, typename Merge>
void run_parallel(long long g, const std::vector<long long>& profile, int cols, int rows,
                  const SymbolFilter* filter, std::atomic<bool>* cancel, PerJob per_job,
                  Merge merge) {
    auto prefixes = first_column_prefixes(g, profile, cols, rows, filter);
    const long long n = static_cast<long long>(prefixes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < n; ++i) {
        if (cancel && cancel->load(std::memory_order_relaxed)) continue;
        Filler f = make_filler(g, profile, cols, rows, filter);
        f.cancel = cancel;
        load_prefix(f, prefixes[static_cast<size_t>(i)]);
        auto result = per_job(f);
        merge(i, result);
    }
}

}  // namespace

void enumerate_tableaux(long long g, const std::vector<long long>& profile, int cols, int rows,
                        const EnumOptions& opts, const std::function<bool(const Tableau&)>& cb) {
    if (!opts.parallel) {
        Filler f = make_filler(g, profile, cols, rows, opts.filter);
        long long seen = 0;
        std::function<bool(int)> rep = [&](int) {
            if (opts.limit >= 0 && seen >= opts.limit) return false;
            ++seen;
            return cb(snapshot(f));
        };
        f.report = &rep;
        f.fill(0);
        return;
    }
    // Parallel streaming: jobs are first-column prefixes; per-job buffers are
    // emitted in job order, which preserves the lexicographic stream.
    std::atomic<bool> cancel{false};
    std::vector<std::vector<Tableau>> buffers;
    auto prefixes = first_column_prefixes(g, profile, cols, rows, opts.filter);
    buffers.resize(prefixes.size());
    const long long n = static_cast<long long>(prefixes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < n; ++i) {
        if (cancel.load(std::memory_order_relaxed)) continue;
        Filler f = make_filler(g, profile, cols, rows, opts.filter);
        f.cancel = &cancel;
        load_prefix(f, prefixes[static_cast<size_t>(i)]);
        std::vector<Tableau>& buf = buffers[static_cast<size_t>(i)];
        std::function<bool(int)> rep = [&](int) {
            buf.push_back(snapshot(f));
            // a limited stream needs at most `limit` items from any one prefix
            return opts.limit < 0 || static_cast<long long>(buf.size()) < opts.limit;
        };
        f.report = &rep;
        f.fill(f.rows);
    }
    long long seen = 0;
    for (auto& buf : buffers)
        for (auto& t : buf) {
            if (opts.limit >= 0 && seen >= opts.limit) return;
            ++seen;
            if (!cb(t)) return;
        }
}

unsigned long long count_tableaux(long long g, const std::vector<long long>& profile, int cols,
                                  int rows, const EnumOptions& opts) {
    if (!opts.parallel) {
        unsigned long long count = 0;
        Filler f = make_filler(g, profile, cols, rows, opts.filter);
        std::function<bool(int)> rep = [&](int) {
            ++count;
            return opts.limit < 0 || static_cast<long long>(count) < opts.limit;
        };
        f.report = &rep;
        f.fill(0);
        return count;
    }
    std::atomic<unsigned long long> total{0};
    run_parallel(
        g, profile, cols, rows, opts.filter, nullptr,
        [&](Filler& f) {
            unsigned long long count = 0;
            std::function<bool(int)> rep = [&](int) {
                ++count;
                return true;
            };
            f.report = &rep;
            f.fill(f.rows);
            return count;
        },
        [&](long long, unsigned long long c) { total += c; });
    return total.load();
}

long long max_torus_dimension(long long g, const std::vector<long long>& profile, int cols,
                              int rows, const EnumOptions& opts) {
    auto scan = [&](Filler& f, int start_idx) -> long long {
        long long best = -1;
        std::function<bool(int)> rep = [&](int) {
            long long used = 0;
            for (const auto& o : f.occ)
                if (!o.empty()) ++used;
            best = std::max(best, g - used);
            return true;
        };
        f.report = &rep;
        f.fill(start_idx);
        return best;
    };
    if (!opts.parallel) {
        Filler f = make_filler(g, profile, cols, rows, opts.filter);
        return scan(f, 0);
    }
    std::atomic<long long> best{-1};
    run_parallel(
        g, profile, cols, rows, opts.filter, nullptr,
        [&](Filler& f) { return scan(f, f.rows); },
        [&](long long, long long b) {
            long long cur = best.load();
            while (b > cur && !best.compare_exchange_weak(cur, b)) {
            }
        });
    return best.load();
}

bool exists_tableau(long long g, const std::vector<long long>& profile, int cols, int rows,
                    const EnumOptions& opts) {
    if (cols + rows - 1 > g) return false;  // strict increase cannot fit
    if (!opts.parallel) {
        bool found = false;
        Filler f = make_filler(g, profile, cols, rows, opts.filter);
        std::function<bool(int)> rep = [&](int) {
            found = true;
            return false;
        };
        f.report = &rep;
        f.fill(0);
        return found;
    }
    std::atomic<bool> found{false};
    run_parallel(
        g, profile, cols, rows, opts.filter, &found,
        [&](Filler& f) {
            bool hit = false;
            std::function<bool(int)> rep = [&](int) {
                hit = true;
                return false;
            };
            f.report = &rep;
            f.fill(f.rows);
            return hit;
        },
        [&](long long, bool hit) {
            if (hit) found.store(true, std::memory_order_relaxed);
        });
    return found.load();
}

long long dim_wrd(const ChainOfCycles& chain, long long r, long long d, bool parallel) {
    require_input(r >= 0, "rank must be >= 0");
    long long rows = chain.g - d + r;
    if (rows <= 0) return chain.g;  // nonspecial range: the whole Picard torus
    if (r + 1 + rows - 1 > chain.g) return -1;
    EnumOptions opts;
    opts.parallel = parallel;
    return max_torus_dimension(chain.g, chain.torsion_profile(), static_cast<int>(r + 1),
                               static_cast<int>(rows), opts);
}

long long rank(const ChainOfCycles& chain, const Divisor& d, bool parallel) {
    if (d.degree < 0) return -1;
    SymbolFilter filter = make_filter(chain, d);
    EnumOptions opts;
    opts.filter = &filter;
    opts.parallel = parallel;
    long long best = d.degree - chain.g >= 0 ? d.degree - chain.g : -1;
    for (long long r = best + 1; r <= d.degree; ++r) {
        long long rows = chain.g - d.degree + r;
        require_internal(rows >= 1, "rank search entered the nonspecial range");
        if (r + 1 + rows - 1 > chain.g) break;
        if (!exists_tableau(chain.g, chain.torsion_profile(), static_cast<int>(r + 1),
                            static_cast<int>(rows), opts))
            break;
        best = r;
    }
    return best;
}

long long rank(const ChainOfCycles& chain, const ChipList& chips, bool parallel) {
    return rank(chain, normal_form(chain, chips), parallel);
}

}  // namespace tropbn
