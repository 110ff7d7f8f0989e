#include "tropbn/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "tropbn/errors.hpp"

namespace tropbn {

long long max_gonality(long long g) { return (g + 3) / 2; }

void validate_bn(const BNParams& p, bool need_k) {
    require_input(p.g >= 1, "genus must be >= 1");
    require_input(p.r >= 0, "rank must be >= 0");
    require_input(p.d >= 0, "degree must be >= 0");
    if (need_k) require_input(p.k >= 2, "gonality must be >= 2");
}

long long rho(long long g, long long r, long long d) {
    validate_bn({g, r, d, 0}, false);
    return g - (r + 1) * (g - d + r);
}

long long r_prime(long long g, long long r, long long d) {
    validate_bn({g, r, d, 0}, false);
    return std::min(r, g - d + r - 1);
}

RhoBarResult rho_bar(long long g, long long r, long long d, long long k) {
    validate_bn({g, r, d, k}, true);
    const long long top = std::max<long long>(r_prime(g, r, d), 0);
    RhoBarResult res;
    bool first = true;
    for (long long ell = 0; ell <= top; ++ell) {
        long long v = rho(g, r - ell, d) - ell * k;
        if (first || v > res.value) {
            res.value = v;
            res.maximizers.clear();
            first = false;
        }
        if (v == res.value) res.maximizers.insert(ell);
    }
    return res;
}

BNRegion bn_region(long long g, long long k, long long x_max, long long y_max, double step) {
    require_input(g >= 1, "genus must be >= 1");
    require_input(k >= 2 && k <= max_gonality(g), "gonality outside the valid range [2, floor((g+3)/2)]");
    require_input(x_max >= 1 && y_max >= 1, "sampling bounds must be positive");
    require_input(step > 0, "step must be positive");

    BNRegion region;
    for (long long x = 1; x <= x_max; ++x) {
        for (long long y = 1; y <= y_max; ++y) {
            // (x, y) = (r+1, g-d+r)
            long long r = x - 1;
            long long d = g + r - y;
            if (d < 0) continue;
            BNRegionPoint pt;
            pt.x = x;
            pt.y = y;
            pt.r = r;
            pt.d = d;
            pt.rho_bar_value = rho_bar(g, r, d, k).value;
            pt.nonempty = pt.rho_bar_value >= 0;
            region.grid.push_back(pt);
        }
    }

    // Boundary: for sampled x, the largest y with min_ell (x-ell)(y-ell)+ell*k <= g.
    // For each admissible ell the level curve solves to y = ell + (g-ell*k)/(x-ell).
    for (double x = step; x <= static_cast<double>(x_max) + 1e-9; x += step) {
        double best = -1.0;
        long long ell_top = std::max<long long>(0, static_cast<long long>(std::floor(x)));
        for (long long ell = 0; ell <= ell_top; ++ell) {
            double dx = x - static_cast<double>(ell);
            if (dx <= 1e-12) continue;
            double num = static_cast<double>(g - ell * k);
            double y = static_cast<double>(ell) + num / dx;
            // The ell-range {0..r'} requires ell <= y - 1 as well.
            if (static_cast<double>(ell) > y - 1.0 + 1e-9 && ell > 0) continue;
            best = std::max(best, y);
        }
        if (best > 0) region.boundary.emplace_back(x, best);
    }
    return region;
}

}  // namespace tropbn
