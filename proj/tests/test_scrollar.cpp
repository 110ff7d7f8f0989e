#include <random>

#include "doctest.h"
#include "tropbn/enumerate.hpp"
#include "tropbn/errors.hpp"
#include "tropbn/reps.hpp"
#include "tropbn/scrollar.hpp"

using namespace tropbn;

namespace {

// The type-(1,2), k=5 scrollar tableau on 25 symbols and its contraction.
Tableau scroll25_tableau() {
    return make_tableau({{1, 2, 3, 7, 8, 9, 13, 14},
                         {4, 5, 6, 10, 11, 12, 16, 17},
                         {7, 8, 9, 13, 14, 15, 19, 20},
                         {10, 11, 12, 16, 17, 18, 22, 23},
                         {13, 14, 15, 19, 20, 21, 24, 25}});
}

Tableau scroll25_tm1() {
    return make_tableau({{1, 2, 3, 7, 8},
                         {4, 5, 6, 10, 11},
                         {7, 8, 9, 13, 14},
                         {10, 11, 12, 16, 17},
                         {13, 14, 15, 19, 20},
                         {16, 17, 18, 22, 23},
                         {19, 20, 21, 24, 25}});
}

}  // namespace

TEST_CASE("scrollar recognition") {
    ScrollarType type{1, 2, 5};
    Tableau t = scroll25_tableau();
    CHECK(is_scrollar(t, type));

    Tableau broken = t;
    broken.at(4, 2) = 15;  // alter one middle box
    CHECK_FALSE(is_scrollar(broken, type));

    // a standard Young tableau is scrollar of type (cols, 0)
    Tableau syt = make_tableau({{1, 2}, {3, 5}});
    CHECK(is_scrollar(syt, ScrollarType{2, 0, 3}));
    CHECK_THROWS_AS(validate_scrollar_type(ScrollarType{1, 2, 3}), InputError);  // n = k
}

TEST_CASE("canonical generation reproduces the worked example") {
    Tableau t = generate_scrollar(ScrollarType{1, 2, 5}, 8, 5);
    CHECK(t == scroll25_tableau());
    CHECK(torus_dimension(t, 25) == 0);
    CHECK_FALSE(has_vertical_step(t));
    // symbol count n(s-l) + l k = 3*0 + 5*5
    CHECK(symbols_present(t, 25).size() == 25);
    CHECK_THROWS_AS(generate_scrollar(ScrollarType{1, 2, 5}, 8, 1), InputError);   // rows < k-n
    CHECK_THROWS_AS(generate_scrollar(ScrollarType{1, 2, 5}, 7, 5), InputError);   // cols mod n
}

TEST_CASE("contraction and its inverse") {
    ScrollarType type{1, 2, 5};
    Tableau t = scroll25_tableau();
    Tableau tm1 = t_minus_one(t, type);
    CHECK(tm1 == scroll25_tm1());
    CHECK(is_scrollar(tm1, type));
    CHECK(t_plus_one(tm1, type) == t);

    // genus-5: the canonical row contracts twice under type (1,1), k=3
    ScrollarType f1{1, 1, 3};
    Tableau row = make_tableau({{1, 2, 3, 4, 5}});
    CHECK(is_scrollar(row, f1));
    Tableau km1 = t_minus_one(row, f1);
    CHECK(km1 == make_tableau({{1, 2, 3}, {3, 4, 5}}));
    Tableau km2 = t_minus_one(km1, f1);
    CHECK(km2 == make_tableau({{1}, {3}, {5}}));
    CHECK_THROWS_AS(t_minus_one(km2, f1), InputError);
    CHECK(t_plus_one(km1, f1) == row);
    // with fewer than n columns the middle columns cannot be recovered
    CHECK_THROWS_AS(t_plus_one(km2, f1), InputError);
}

TEST_CASE("vertical steps") {
    CHECK(has_vertical_step(make_tableau({{1, 3}, {2, 4}, {3, 5}})));
    CHECK_FALSE(has_vertical_step(scroll25_tableau()));
    CHECK_FALSE(has_vertical_step(make_tableau({{1, 2, 3, 4, 5}})));
}

TEST_CASE("serial subtraction of the gonality pencil") {
    auto chain = k_gonal_chain(5, 3);
    ChipList kdiv = canonical_divisor(chain);
    Divisor K = normal_form(chain, kdiv);
    ScrollarType f1{1, 1, 3};
    Tableau row = make_tableau({{1, 2, 3, 4, 5}});

    auto steps = serial_subtract(chain, row, f1, K, 2);
    REQUIRE(steps.size() == 3);
    CHECK(steps[0].divisor == K);
    CHECK(steps[1].tableau == make_tableau({{1, 2, 3}, {3, 4, 5}}));
    CHECK(steps[2].tableau == make_tableau({{1}, {3}, {5}}));
    for (const auto& s : steps) CHECK(s.member);

    std::vector<Rat> kme{Rat(0), Rat(-1), Rat(1), Rat(0), Rat(-1)};
    CHECK(steps[1].divisor.xi == kme);
    std::vector<Rat> km2e{Rat(0), Rat(-1), Rat(1), Rat(3), Rat(2)};
    CHECK(steps[2].divisor.xi == km2e);

    // m = 0 is the identity
    auto id = serial_subtract(chain, row, f1, K, 0);
    CHECK(id.size() == 1);
    CHECK(id[0].divisor == K);

    // rank chain: r(D(-m)) = b - 1 and r(D(-m-1)) = -1
    auto gon = gonality_representatives(chain, 3);
    CHECK(rank(chain, kdiv - 2 * gon.E) == f1.b - 1);
    CHECK(rank(chain, kdiv - 3 * gon.E) == -1);

    // scroll rank bookkeeping on D = K - E: r(D) >= n+b-1, r(D-E) = b-1,
    // r(D-2E) = -1, and h^0(D + mE) >= (m+1)n + b for m = 0, 1
    long long n = f1.n(), b = f1.b;
    CHECK(rank(chain, kdiv - gon.E) >= n + b - 1);
    for (long long mm = 0; mm <= 1; ++mm) {
        long long h0 = rank(chain, kdiv + (mm - 1) * gon.E) + 1;
        CHECK(h0 >= (mm + 1) * n + b);
    }
}

TEST_CASE("component dimension bookkeeping") {
    ScrollarType type{1, 2, 5};
    Tableau t = scroll25_tableau();
    auto chk25 = component_dimension_check(t, type, 25);
    CHECK(chk25.dim == 0);
    CHECK(chk25.ell == 5);
    CHECK(chk25.formula == 0);
    CHECK(chk25.agrees);
    // rho_bar_5(25,7,27) = 1, achieved by a type-(4,0) shape, not this one
    CHECK(chk25.rho_bar_value == 1);
    CHECK_FALSE(chk25.achieves_rho_bar);
    CHECK(chk25.rho_bar_shape_exists);

    auto chk26 = component_dimension_check(t, type, 26);
    CHECK(chk26.dim == 1);
    CHECK(chk26.agrees);
}

TEST_CASE("random scrollar shapes satisfy the dimension formula") {
    std::mt19937 rng(777);
    int tested = 0;
    while (tested < 120) {
        int k = 2 + static_cast<int>(rng() % 6);           // 2..7
        int n = 1 + static_cast<int>(rng() % (k - 1));     // 1..k-1
        int b = static_cast<int>(rng() % n);               // 0..n-1
        int a = n - b;
        int q = 1 + static_cast<int>(rng() % 3);
        int cols = b + q * n;
        int rows = (k - n) + static_cast<int>(rng() % 4);
        ScrollarType type{a, b, k};
        Tableau t;
        try {
            t = generate_scrollar(type, cols, rows);
        } catch (const InputError&) {
            continue;
        }
        long long symbols = static_cast<long long>(symbols_present(t, 10000).size());
        long long ell = cols - n;
        CHECK(symbols == n * (rows - ell) + ell * k);
        if (symbols > 45) continue;
        long long g = symbols + static_cast<long long>(rng() % 4);
        auto chk = component_dimension_check(t, type, g);
        CHECK(chk.agrees);
        // round trip through the contraction where defined
        if (cols - n >= n) {
            Tableau down = t_minus_one(t, type);
            CHECK(t_plus_one(down, type) == t);
        }
        ++tested;
    }
}

TEST_CASE("serial subtraction certificates hold on random scrollar data") {
    std::mt19937 rng(515);
    int tested = 0;
    while (tested < 40) {
        int k = 2 + static_cast<int>(rng() % 4);  // 2..5
        int n = 1 + static_cast<int>(rng() % (k - 1));
        int b = static_cast<int>(rng() % n);
        int a = n - b;
        int q = 1 + static_cast<int>(rng() % 2);
        int cols = b + q * n;
        int rows = (k - n) + static_cast<int>(rng() % 3);
        Tableau t;
        try {
            t = generate_scrollar(ScrollarType{a, b, k}, cols, rows);
        } catch (const InputError&) {
            continue;
        }
        int maxsym = 0;
        for (int v : t.cells) maxsym = std::max(maxsym, v);
        long long g = maxsym;
        if (g > 12 || g < 2 * k - 2) continue;
        auto chain = k_gonal_chain(g, k);
        std::string why;
        if (!is_displacement_tableau(t, chain.torsion_profile(), &why)) continue;
        // a class in T(t), with free symbols at generic half-integers
        std::vector<Rat> xi = construction_xi_generic(chain, t);
        auto reps = special_representatives(chain, t, xi);
        Divisor d = normal_form(chain, reps.back());
        long long cap = b >= 1 ? (cols - b) / n : cols / n - 1;
        // every step's membership certificate is verified inside the call
        auto steps = serial_subtract(chain, t, ScrollarType{a, b, k}, d, cap);
        CHECK(static_cast<long long>(steps.size()) == cap + 1);
        for (const auto& s : steps) CHECK(s.member);
        ++tested;
    }
    CHECK(tested == 40);
}

TEST_CASE("independence slopes are distinct") {
    ScrollarType type{1, 2, 5};
    Tableau t = scroll25_tableau();
    auto slopes = independence_slopes(t, type, 25);
    CHECK(slopes.slopes.size() == 2 * type.b + type.a);
    CHECK(slopes.distinct);

    // genus-5 triple, read off p_2 of the path of t(-1)
    ScrollarType f1{1, 1, 3};
    auto s5 = independence_slopes(make_tableau({{1, 2, 3, 4, 5}}), f1, 5);
    CHECK(s5.slopes.size() == 3);
    CHECK(s5.distinct);
    CHECK(s5.slopes == std::vector<long long>{3, 0, 2});

    // b = 0: the a slopes are strictly decreasing
    Tableau b0 = generate_scrollar(ScrollarType{2, 0, 3}, 4, 2);
    auto s0 = independence_slopes(b0, ScrollarType{2, 0, 3}, 8);
    CHECK(s0.slopes.size() == 2);
    CHECK(s0.distinct);
    CHECK(s0.slopes[0] > s0.slopes[1]);

    std::mt19937 rng(31337);
    int tested = 0;
    while (tested < 100) {
        int k = 3 + static_cast<int>(rng() % 5);  // 3..7
        int n = 2 + static_cast<int>(rng() % (k - 2));
        int b = static_cast<int>(rng() % n);
        int a = n - b;
        if (a < 1) continue;
        int q = 1 + static_cast<int>(rng() % 3);
        int cols = b + q * n;
        int rows = (k - n) + static_cast<int>(rng() % 3);
        Tableau t2;
        try {
            t2 = generate_scrollar(ScrollarType{a, b, k}, cols, rows);
        } catch (const InputError&) {
            continue;
        }
        long long g = std::max<long long>(
            k, static_cast<long long>(symbols_present(t2, 10000).size()));
        auto s = independence_slopes(t2, ScrollarType{a, b, k}, g);
        CHECK(s.slopes.size() == static_cast<size_t>(2 * b + a));
        CHECK(s.distinct);
        ++tested;
    }
}
