#pragma once

#include "curvelab/normal.hpp"

#include <optional>
#include <utility>

namespace curvelab {

// Slopes p/q (coprime, canonical with q > 0, or (1,0)) parameterize the
// curves on the once-punctured torus and the four-punctured sphere; two
// slopes satisfy i = |ps - qr| on S_{1,1} and i = 2|ps - qr| on S_{0,4}.
struct Slope {
    int64_t p = 1, q = 0;
    bool operator==(const Slope&) const = default;
};

Slope canonical_slope(int64_t p, int64_t q);

// Normal coordinates of the slope curve on the standard triangulations.
Weights curve_from_slope11(const Slope& s);
Weights curve_from_slope04(const Slope& s);

// Inverse maps: slope and multiplicity, or nullopt when the weights are not
// a multiple of a slope curve.
std::optional<std::pair<Slope, int64_t>> slope_of_curve11(const Weights& w);
std::optional<std::pair<Slope, int64_t>> slope_of_curve04(const Weights& w);

// Slope with |p| = x, |q| = y and |p - q| = z (the relative sign comes from
// z), plus the common multiplicity. Used both by the inverse maps above and
// by Farey charts, where (x, y, z) are intersection numbers with the chart
// triple.
std::optional<std::pair<Slope, int64_t>> slope_of_triple(int64_t x, int64_t y, int64_t z);

} // namespace curvelab
