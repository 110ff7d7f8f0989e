#pragma once

#include "tropbn/chain.hpp"
#include "tropbn/tableau.hpp"

namespace tropbn {

// Construction coordinates for the distinguished representatives: values
// satisfying xi_{t(x,y)} == p_{t(x,y)-1}(x) (mod mu).  Present symbols are
// pinned (exactly on generic cycles, mod mu on torsion cycles); absent symbols
// default to 0 and parametrize the torus.
std::vector<Rat> construction_xi(const ChainOfCycles& chain, const Tableau& t);

// Same, but symbols absent from t get distinct half-integer coordinates.
// Half-integers can never meet the integral congruences of the vertex-
// avoiding clauses, so free symbols stay off the bad loci.
std::vector<Rat> construction_xi_generic(const ChainOfCycles& chain, const Tableau& t);

// Throws InputError when the congruence precondition fails.
void validate_construction_xi(const ChainOfCycles& chain, const Tableau& t,
                              const std::vector<Rat>& xi);

// Construction coordinates whose representative class has normal form
// `target`; requires contains(chain, t, target).
std::vector<Rat> construction_xi_for_class(const ChainOfCycles& chain, const Tableau& t,
                                           const Divisor& target);

// D_i = i v_1 + (r-i) w_g + sum_{j not in column i} <xi_j - p_{j-1}(i)>_j for
// i = 0..r.  Postconditions (all D_i equivalent, all in T(t)) are verified.
std::vector<ChipList> special_representatives(const ChainOfCycles& chain, const Tableau& t,
                                              const std::vector<Rat>& xi);

// xi_j - p_{j-1}(i) != -1 (mod mu_j) for all i, j, and whenever it is 0 the
// symbol j must sit in column i.  Exact arithmetic when mu_j = 0.
bool is_vertex_avoiding(const ChainOfCycles& chain, const Tableau& t, const std::vector<Rat>& xi,
                        std::string* reason = nullptr);

}  // namespace tropbn
