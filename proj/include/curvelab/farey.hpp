#pragma once

#include "curvelab/slope.hpp"

namespace curvelab {

// Distance in the Farey graph (slopes, joined when |ps - qr| = 1). This is
// the curve-graph distance on both S_{1,1} (where adjacency is i = 1) and
// S_{0,4} (where adjacency is i = 2).
int farey_distance(const Slope& a, const Slope& b);

// A geodesic from a to b: farey_distance(a, b) + 1 slopes with consecutive
// ones adjacent.
std::vector<Slope> farey_path(const Slope& a, const Slope& b);

} // namespace curvelab
