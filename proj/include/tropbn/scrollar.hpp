#pragma once

#include <optional>

#include "tropbn/chain.hpp"
#include "tropbn/numerics.hpp"
#include "tropbn/tableau.hpp"

namespace tropbn {

// Scrollar type (a, b): a > 0, b >= 0, n = a + b < k.  Symbols repeat exactly
// along the translation (n, -(k-n)), and the column count is b mod n.
struct ScrollarType {
    int a = 1;
    int b = 0;
    int k = 2;
    int n() const { return a + b; }
};

void validate_scrollar_type(const ScrollarType& type);

// Repetition rule: equal entries iff the box offset is an integer multiple of
// (n, n-k); column count congruent to b mod n; valid displacement tableau for
// the k-gonal profile on the inferred alphabet.
bool is_scrollar(const Tableau& t, const ScrollarType& type, std::string* reason = nullptr);

// Canonical scrollar filling: block 0 (first n columns) row-major, then for
// each later column block the fresh boxes in the last k-n rows, propagating
// values along the translation rule.  Matches the repetition structure of any
// valid filling up to relabeling.
Tableau generate_scrollar(const ScrollarType& type, int cols, int rows);

// Contraction: r+1-n columns, s+(k-n) rows; rejects cols <= n (the middle
// columns cannot be recovered from the result in that range).
Tableau t_minus_one(const Tableau& t, const ScrollarType& type);

// Inverse of t_minus_one, defined when the input has at least n columns.
Tableau t_plus_one(const Tableau& t, const ScrollarType& type);

// Some column contains consecutive integers in consecutive rows.
bool has_vertical_step(const Tableau& t);

struct SerialStep {
    long long i = 0;       // number of copies of E subtracted
    Tableau tableau;       // t(-i)
    Divisor divisor;       // normal form of D - i E
    bool member = false;   // contains(T(t(-i)), D(-i)); guaranteed, verified anyway
};

// D(-i) = D - i*E together with the tableau chain t(-i) and per-step
// membership certificates, i = 0..m.
std::vector<SerialStep> serial_subtract(const ChainOfCycles& chain, const Tableau& t,
                                        const ScrollarType& type, const Divisor& d, long long m);

struct DimensionCheck {
    long long dim = 0;            // torus_dimension(t, g)
    long long ell = 0;            // r + 1 - n
    long long formula = 0;        // rho(g, r-ell, d) - ell*k
    bool agrees = false;
    long long rho_bar_value = 0;    // rho_bar_k(g, r, d)
    bool achieves_rho_bar = false;  // this tableau's torus is a largest one
    bool rho_bar_shape_exists = false;  // some scrollar shape achieves rho_bar
};

DimensionCheck component_dimension_check(const Tableau& t, const ScrollarType& type, long long g);

// A scrollar tableau with r+1 columns and g-d+r rows whose torus dimension is
// rho_bar_k(g,r,d), when one of the maximizing ell admits a valid shape.
std::optional<Tableau> scrollar_shape_for(long long g, long long k, long long r, long long d);

struct IndependenceSlopes {
    std::vector<long long> slopes;  // sigma_{k-1} of phi_0+psi_i, phi_1+psi_i, psi_i
    bool distinct = false;
};

// Slopes along bridge beta_{k-1} of the 2b+a functions of the tropical
// scroll collection, read off the lattice path of t(-m+1).
IndependenceSlopes independence_slopes(const Tableau& t, const ScrollarType& type, long long g);

}  // namespace tropbn
