#pragma once

#include "curvelab/diagram.hpp"

namespace curvelab {

// Geometric intersection number of two multicurves, computed pairwise over
// their components (equal components are disjoint, so they contribute 0
// without building a diagram).
int64_t intersection_number(const Triangulation& tri, const Weights& a, const Weights& b);

// a union b fills the surface: every complementary region is a disk or a
// once-punctured disk.
bool fills(const Triangulation& tri, const Weights& a, const Weights& b);

// Essential, non-peripheral boundary components of a regular neighborhood of
// a union b, deduplicated. Empty when the pair fills.
std::vector<Weights> neighborhood_boundary(const Triangulation& tri, const Weights& a,
                                           const Weights& b);

// k-fold Dehn twist of the multicurve x about the essential simple closed
// curve c; positive k twists to the left.
Weights dehn_twist(const Triangulation& tri, const Weights& x, const Weights& c, int64_t k);

struct TwistStep {
    Weights curve;
    int64_t power;
};
using TwistWord = std::vector<TwistStep>;

// Applies the twists of `word` to x in order (word[0] acts first).
Weights apply_twist_word(const Triangulation& tri, const Weights& x, const TwistWord& word);

// Oriented smoothing of one crossing of d: both strands keep their
// direction, the crossing is resolved, and the resulting closed curve is
// reduced to normal coordinates. For curves with i(a,b)=1 this is the
// "mediant" of the pair.
Weights oriented_smoothing(const JointDiagram& d, int crossing);

// All essential, non-peripheral single curves with every edge weight at most
// perEdgeMax, by exhaustive scan (the fixed triangulations have at most 9
// edges).
std::vector<Weights> small_curves(const Triangulation& tri, int64_t perEdgeMax);

} // namespace curvelab
