#pragma once

#include <string>
#include <vector>

#include "tropbn/chain.hpp"

namespace tropbn {

// Rectangular filling on the alphabet {1..g}, English orientation: t(x, y) is
// the entry in column x, row y, with (0, 0) the top-left box.
struct Tableau {
    int cols = 0;
    int rows = 0;
    std::vector<int> cells;  // row-major

    int at(int x, int y) const { return cells[static_cast<size_t>(y) * cols + x]; }
    int& at(int x, int y) { return cells[static_cast<size_t>(y) * cols + x]; }
    int rank() const { return cols - 1; }
    bool operator==(const Tableau&) const = default;
};

Tableau make_tableau(const std::vector<std::vector<int>>& rows);
std::string tableau_str(const Tableau& t);

// Strict increase along rows and columns, entries in {1..g}, and for any two
// boxes sharing a symbol j: mu_j > 0 and the lattice (L1) distance between
// them is a multiple of mu_j.
bool is_displacement_tableau(const Tableau& t, const std::vector<long long>& profile,
                             std::string* reason = nullptr);

std::vector<int> symbols_present(const Tableau& t, long long g);

// Number of symbols of {1..g} absent from t = dim T(t).
long long torus_dimension(const Tableau& t, long long g);

// Lingering lattice path p_0..p_g attached to a tableau with r+1 columns.
// Entries are stored for coordinates 0..r-1; p_j(r) = 0 by convention, and a
// symbol in column r contributes e_r = (-1,...,-1) to the stored coordinates.
struct LatticePath {
    int r = 0;
    std::vector<std::vector<long long>> p;  // p[j] for j = 0..g, each of size r

    long long value(long long j, int i) const {
        if (i == r) return 0;
        return p[static_cast<size_t>(j)][static_cast<size_t>(i)];
    }
};

LatticePath lattice_path(const Tableau& t, long long g);

// Bridge slopes (p_1(i), ..., p_{g-1}(i)) of the distinguished function psi_i.
std::vector<long long> psi_bridge_slopes(const Tableau& t, long long g, int i);

// The congruence data of the torus T(t) on a chain: for each symbol present in
// t, the required residue of xi_j (mod mu_j; exact equality when mu_j = 0).
struct TorusComponent {
    Tableau t;
    std::vector<long long> profile;
    long long g = 0;
    // residue[j-1]: required value of xi_j for present symbols (canonical), or
    // unset for free symbols.
    std::vector<bool> constrained;
    std::vector<Rat> residue;
    long long dimension = 0;
};

TorusComponent torus_component(const ChainOfCycles& chain, const Tableau& t);

// Membership of a normal-form divisor in T(t): degree matches the shape and
// xi_{t(x,y)} == y - x (mod mu) box by box (exact when mu = 0).
bool contains(const ChainOfCycles& chain, const Tableau& t, const Divisor& d);
bool contains(const TorusComponent& torus, const Divisor& d);

}  // namespace tropbn
