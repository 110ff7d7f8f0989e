#include "doctest.h"
#include "tropbn/errors.hpp"
#include "tropbn/numerics.hpp"

using namespace tropbn;

TEST_CASE("rho closed form") {
    CHECK(rho(2, 1, 2) == 0);
    CHECK(rho(5, 2, 5) == -1);
    for (long long g = 1; g <= 12; ++g)
        for (long long d = 0; d <= g; ++d) CHECK(rho(g, 0, d) == d);
    CHECK_THROWS_AS(rho(-1, 0, 0), InputError);
    CHECK_THROWS_AS(rho(3, -1, 0), InputError);
}

TEST_CASE("r_prime") {
    CHECK(r_prime(5, 2, 5) == 1);
    CHECK(r_prime(5, 4, 8) == 0);
    CHECK(r_prime(4, 1, 3) == 1);
}

TEST_CASE("rho_bar values and maximizers") {
    auto a = rho_bar(5, 2, 5, 3);
    CHECK(a.value == 0);
    CHECK(a.maximizers == std::set<long long>{1});

    auto b = rho_bar(5, 4, 8, 3);
    CHECK(b.value == 0);
    CHECK(b.maximizers == std::set<long long>{0});

    auto c = rho_bar(4, 1, 3, 2);
    CHECK(c.value == 1);
    CHECK(c.maximizers == std::set<long long>{1});
}

TEST_CASE("rho_bar dominates rho and matches brute force") {
    for (long long g = 1; g <= 10; ++g)
        for (long long r = 0; r <= 6; ++r)
            for (long long d = 0; d <= 2 * g; ++d)
                for (long long k = 2; k <= max_gonality(g); ++k) {
                    auto res = rho_bar(g, r, d, k);
                    CHECK(res.value >= rho(g, r, d));
                    // independent evaluation through the expanded quadratic
                    long long top = std::max<long long>(r_prime(g, r, d), 0);
                    long long best = rho(g, r, d);
                    std::set<long long> arg;
                    for (long long ell = 0; ell <= top; ++ell) {
                        long long v = rho(g, r, d) + ell * (g - d + 2 * r + 1 - ell - k);
                        if (v > best) best = v;
                    }
                    for (long long ell = 0; ell <= top; ++ell) {
                        long long v = rho(g, r, d) + ell * (g - d + 2 * r + 1 - ell - k);
                        if (v == best) arg.insert(ell);
                    }
                    CHECK(res.value == best);
                    CHECK(res.maximizers == arg);
                }
}

TEST_CASE("hyperelliptic collapse on a small grid") {
    for (long long g = 2; g <= 10; ++g)
        for (long long r = 1; r <= g; ++r)
            for (long long d = r; d <= g - 1; ++d) CHECK(rho_bar(g, r, d, 2).value == d - 2 * r);
}

TEST_CASE("bn_region classification") {
    auto reg = bn_region(5, 3, 6, 6);
    bool found = false;
    for (const auto& p : reg.grid)
        if (p.x == 3 && p.y == 2) {
            CHECK(p.r == 2);
            CHECK(p.d == 5);
            CHECK(p.nonempty);
            found = true;
        }
    CHECK(found);
    CHECK(!reg.boundary.empty());

    // k = 2: nonempty integer points satisfy x + y <= g + 1
    for (long long g : {4, 7, 11}) {
        auto r2 = bn_region(g, 2, g + 3, g + 3);
        for (const auto& p : r2.grid) CHECK(p.nonempty == (p.x + p.y <= g + 1));
    }
    // maximal gonality: nonempty iff xy <= g
    for (long long g : {4, 7, 11}) {
        auto rmax = bn_region(g, max_gonality(g), g + 2, g + 2);
        for (const auto& p : rmax.grid) CHECK(p.nonempty == (p.x * p.y <= g));
    }
    CHECK_THROWS_AS(bn_region(5, 9, 4, 4), InputError);
}
