#pragma once

#include <string>

#include "tropbn/numerics.hpp"
#include "tropbn/tropmap.hpp"

namespace tropbn {

// BN region figure: integer grid points (filled iff nonempty) and the sampled
// boundary curve.
std::string bn_region_svg(const BNRegion& region, long long g, long long k);

// Projection of a skeleton onto two chosen coordinates; rays are drawn with a
// fixed display length.
std::string skeleton_svg(const Skeleton& skel, int coord_x = 0, int coord_y = 1);

}  // namespace tropbn
