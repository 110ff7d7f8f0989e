#include "tropbn/reps.hpp"

#include "tropbn/errors.hpp"

namespace tropbn {

std::vector<Rat> construction_xi(const ChainOfCycles& chain, const Tableau& t) {
    LatticePath path = lattice_path(t, chain.g);
    std::vector<Rat> xi(static_cast<size_t>(chain.g), Rat(0));
    std::vector<bool> set(static_cast<size_t>(chain.g), false);
    for (int y = 0; y < t.rows; ++y)
        for (int x = 0; x < t.cols; ++x) {
            int j = t.at(x, y);
            if (set[static_cast<size_t>(j - 1)]) continue;
            xi[static_cast<size_t>(j - 1)] = Rat(path.value(j - 1, x));
            set[static_cast<size_t>(j - 1)] = true;
        }
    return xi;
}

std::vector<Rat> construction_xi_generic(const ChainOfCycles& chain, const Tableau& t) {
    std::vector<Rat> xi = construction_xi(chain, t);
    std::vector<bool> in_t(static_cast<size_t>(chain.g) + 1, false);
    for (int s : symbols_present(t, chain.g)) in_t[static_cast<size_t>(s)] = true;
    for (long long j = 1; j <= chain.g; ++j)
        if (!in_t[static_cast<size_t>(j)]) xi[static_cast<size_t>(j - 1)] = Rat(2 * j + 1, 2);
    return xi;
}

void validate_construction_xi(const ChainOfCycles& chain, const Tableau& t,
                              const std::vector<Rat>& xi) {
    require_input(static_cast<long long>(xi.size()) == chain.g, "coordinate vector size != g");
    LatticePath path = lattice_path(t, chain.g);
    for (int y = 0; y < t.rows; ++y)
        for (int x = 0; x < t.cols; ++x) {
            int j = t.at(x, y);
            if (!congruent(xi[static_cast<size_t>(j - 1)], Rat(path.value(j - 1, x)), chain.mu(j)))
                throw InputError("construction coordinate for symbol " + std::to_string(j) +
                                 " violates the congruence at box (" + std::to_string(x) + "," +
                                 std::to_string(y) + ")");
        }
}

std::vector<ChipList> special_representatives(const ChainOfCycles& chain, const Tableau& t,
                                              const std::vector<Rat>& xi) {
    validate_construction_xi(chain, t, xi);
    LatticePath path = lattice_path(t, chain.g);
    const int r = t.cols - 1;

    std::vector<std::vector<bool>> in_column(static_cast<size_t>(r + 1),
                                             std::vector<bool>(static_cast<size_t>(chain.g) + 1, false));
    for (int y = 0; y < t.rows; ++y)
        for (int x = 0; x < t.cols; ++x)
            in_column[static_cast<size_t>(x)][static_cast<size_t>(t.at(x, y))] = true;

    std::vector<ChipList> reps;
    for (int i = 0; i <= r; ++i) {
        ChipList d;
        d.add(vertex_v(1), i);
        d.add(vertex_w(chain.g), r - i);
        for (long long j = 1; j <= chain.g; ++j) {
            if (in_column[static_cast<size_t>(i)][static_cast<size_t>(j)]) continue;
            Rat coord = xi[static_cast<size_t>(j - 1)] - Rat(path.value(j - 1, i));
            d.add(CyclePoint{j, coord});
        }
        reps.push_back(std::move(d));
    }

    Divisor first = normal_form(chain, reps[0]);
    for (size_t i = 1; i < reps.size(); ++i)
        require_internal(is_equivalent(chain, first, normal_form(chain, reps[i])),
                         "representatives D_0..D_r are not all equivalent");
    for (const auto& rep : reps)
        require_internal(contains(chain, t, normal_form(chain, rep)),
                         "representative escapes the torus of its tableau");
    return reps;
}

bool is_vertex_avoiding(const ChainOfCycles& chain, const Tableau& t, const std::vector<Rat>& xi,
                        std::string* reason) {
    require_input(static_cast<long long>(xi.size()) == chain.g, "coordinate vector size != g");
    LatticePath path = lattice_path(t, chain.g);
    const int r = t.cols - 1;
    auto fail = [&](const std::string& msg) {
        if (reason) *reason = msg;
        return false;
    };
    for (int i = 0; i <= r; ++i)
        for (long long j = 1; j <= chain.g; ++j) {
            Rat value = xi[static_cast<size_t>(j - 1)] - Rat(path.value(j - 1, i));
            long long mu = chain.mu(j);
            if (congruent(value, Rat(-1), mu))
                return fail("xi_" + std::to_string(j) + " - p_" + std::to_string(j - 1) + "(" +
                            std::to_string(i) + ") = -1");
            if (congruent(value, Rat(0), mu)) {
                bool in_col = false;
                for (int y = 0; y < t.rows; ++y)
                    if (t.at(i, y) == j) in_col = true;
                if (!in_col)
                    return fail("xi_" + std::to_string(j) + " - p_" + std::to_string(j - 1) + "(" +
                                std::to_string(i) + ") = 0 but " + std::to_string(j) +
                                " is not in column " + std::to_string(i));
            }
        }
    return true;
}

std::vector<Rat> construction_xi_for_class(const ChainOfCycles& chain, const Tableau& t,
                                           const Divisor& target) {
    require_input(contains(chain, t, target), "target divisor is not in the torus of this tableau");
    std::vector<Rat> xi = construction_xi(chain, t);
    // Shifting xi_j by delta moves the normal-form coordinate on cycle j by
    // exactly delta and touches nothing else, so the adjustment is diagonal.
    std::vector<ChipList> reps = special_representatives(chain, t, xi);
    Divisor base = normal_form(chain, reps.back());
    for (long long j = 1; j <= chain.g; ++j) {
        Rat delta = target.xi[static_cast<size_t>(j - 1)] - base.xi[static_cast<size_t>(j - 1)];
        long long mu = chain.mu(j);
        // Present symbols already agree (exactly on generic cycles, mod mu on
        // torsion cycles, both being in T(t)), so only free symbols move.
        if (mu > 0) delta = rat_mod(delta, Int(mu));
        xi[static_cast<size_t>(j - 1)] += delta;
    }
    // Post: the representatives now land exactly on the target class.
    std::vector<ChipList> adjusted = special_representatives(chain, t, xi);
    require_internal(normal_form(chain, adjusted.back()) == target,
                     "construction coordinates failed to hit the target class");
    return xi;
}

}  // namespace tropbn
