#pragma once

#include <string>

#include "letgrid/gridding.hpp"
#include "letgrid/permutation.hpp"

namespace letgrid {

// Point plot of pi without axes.
std::string permutation_svg(const Permutation& pi);
// Point plot with all s+1 vertical and t+1 horizontal grid lines of the gridding.
std::string gridding_svg(const Permutation& pi, const GridMatrix& m, const Gridding& g);

}  // namespace letgrid
