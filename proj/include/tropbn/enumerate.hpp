#pragma once

#include <functional>
#include <optional>

#include "tropbn/chain.hpp"
#include "tropbn/tableau.hpp"

namespace tropbn {

// Per-symbol admissibility derived from a target divisor: symbol j may occupy
// box (x, y) only if xi_j == y - x (mod mu_j), exact when mu_j = 0.  Symbols
// whose coordinate cannot meet any box congruence are excluded outright.
struct SymbolFilter {
    std::vector<int> mode;        // 0 = free symbol never usable, 1 = residue, 2 = exact diag
    std::vector<long long> data;  // residue mod mu, or exact y-x value

    bool admits(int symbol, int x, int y) const {
        switch (mode[static_cast<size_t>(symbol - 1)]) {
            case 1: {
                long long mu_val = mu[static_cast<size_t>(symbol - 1)];
                long long want = data[static_cast<size_t>(symbol - 1)];
                long long have = (y - x) % mu_val;
                if (have < 0) have += mu_val;
                return have == want;
            }
            case 2: return static_cast<long long>(y) - x == data[static_cast<size_t>(symbol - 1)];
            default: return false;
        }
    }
    std::vector<long long> mu;
};

SymbolFilter make_filter(const ChainOfCycles& chain, const Divisor& d);

struct EnumOptions {
    const SymbolFilter* filter = nullptr;
    long long limit = -1;  // stop after this many tableaux (< 0: unlimited)
    bool parallel = false;
};

// Visits every displacement tableau of the given shape exactly once, in
// lexicographic order of the column-major reading word.  The callback returns
// false to stop early.  This is the serial reference implementation.
void enumerate_tableaux(long long g, const std::vector<long long>& profile, int cols, int rows,
                        const EnumOptions& opts, const std::function<bool(const Tableau&)>& cb);

unsigned long long count_tableaux(long long g, const std::vector<long long>& profile, int cols,
                                  int rows, const EnumOptions& opts);

// Maximum of torus_dimension over the stream; -1 when the stream is empty.
long long max_torus_dimension(long long g, const std::vector<long long>& profile, int cols,
                              int rows, const EnumOptions& opts);

bool exists_tableau(long long g, const std::vector<long long>& profile, int cols, int rows,
                    const EnumOptions& opts);

// dim W^r_d(Gamma): g in the nonspecial range g-d+r <= 0, else the maximal
// torus dimension over all (r+1) x (g-d+r) displacement tableaux, or -1.
long long dim_wrd(const ChainOfCycles& chain, long long r, long long d, bool parallel = false);

// Exact Baker-Norine rank of a divisor class.
long long rank(const ChainOfCycles& chain, const Divisor& d, bool parallel = false);
long long rank(const ChainOfCycles& chain, const ChipList& chips, bool parallel = false);

}  // namespace tropbn
