#pragma once

#include <set>
#include <vector>

namespace tropbn {

// Parameter bundle for the closed-form Brill-Noether quantities.  k is the
// gonality and is only required by the gonality-aware quantities; k = 0 means
// "not supplied".
struct BNParams {
    long long g = 1;
    long long r = 0;
    long long d = 0;
    long long k = 0;
};

long long max_gonality(long long g);  // floor((g + 3) / 2)

void validate_bn(const BNParams& p, bool need_k);

// g - (r+1)(g-d+r)
long long rho(long long g, long long r, long long d);

// min(r, g-d+r-1); may be negative, callers clamp the ell-range at 0.
long long r_prime(long long g, long long r, long long d);

struct RhoBarResult {
    long long value = 0;
    std::set<long long> maximizers;  // every ell attaining the max
};

// max over ell in {0..max(r',0)} of rho(g, r-ell, d) - ell*k
RhoBarResult rho_bar(long long g, long long r, long long d, long long k);

struct BNRegionPoint {
    long long x = 0;  // r + 1
    long long y = 0;  // g - d + r
    long long r = 0;
    long long d = 0;
    long long rho_bar_value = 0;
    bool nonempty = false;
};

struct BNRegion {
    std::vector<BNRegionPoint> grid;
    // Float-sampled boundary of g = min_ell (x-ell)(y-ell) + ell*k, for
    // rendering only; never feeds back into the exact classification.
    std::vector<std::pair<double, double>> boundary;
};

BNRegion bn_region(long long g, long long k, long long x_max, long long y_max,
                   double step = 0.0625);

}  // namespace tropbn
