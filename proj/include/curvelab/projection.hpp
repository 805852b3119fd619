#pragma once

#include "curvelab/farey.hpp"
#include "curvelab/ops.hpp"

#include <optional>

namespace curvelab {

// ---------------------------------------------------------------------------
// Annular projections. The distance between the projections of x and y to
// the annulus around `core` is estimated by untwisting: the relative
// twisting of x and y about the core is the power t minimizing
// i(T_core^t(x), y), and the reported distance is |t| + 1. Returns 0 when
// either curve misses the core.
// ---------------------------------------------------------------------------
int64_t annular_distance(const Triangulation& tri, const Weights& core, const Weights& x,
                         const Weights& y);

// The minimizing power itself (relative twisting), 0 when undefined.
int64_t relative_twisting(const Triangulation& tri, const Weights& core, const Weights& x,
                          const Weights& y);

// ---------------------------------------------------------------------------
// Non-annular domains: complexity-one complementary pieces of a multicurve.
// The curve graph of such a piece is a Farey graph; a chart is a triple of
// curves inside the piece forming a Farey triangle (pairwise intersection
// `edgeval`: 1 on a one-holed-torus piece, 2 on a holed-sphere piece), which
// turns every curve of the piece into a slope.
// ---------------------------------------------------------------------------
struct FareyChart {
    Weights alpha, beta, delta;
    int64_t edgeval = 1;
};

struct Domain {
    Weights boundary;             // the multicurve this piece is cut along
    std::pair<int, int> anchor;   // (boundary component, side) facing the piece
    int64_t chiHat = 0;           // Euler characteristic with punctures filled
    int punctures = 0;
    int genus = 0;
    int cuffs = 0;                // boundary circles
    std::vector<Weights> cuffCurves; // reduced cuff classes (essential ones)
    FareyChart chart;
};

// All complexity-one complementary pieces of the boundary multicurve, each
// with a chart found among small curves and the supplied hints. Throws when
// a piece admits no chart within the enumeration budget.
std::vector<Domain> domains_of(const Triangulation& tri, const Weights& boundary,
                               const std::vector<Weights>& hints = {});

// One essential, non-peripheral curve obtained by surgering x through a
// complementary region of the boundary multicurve: an arc of x between
// consecutive boundary crossings is closed up along the region's boundary
// (components of x disjoint from the boundary are kept as they are).
// `region` indexes regionize(false) of (boundary, x).
struct SurgeryOutcome {
    int region = -1;
    Weights curve;
};
struct SurgeryResult {
    JointDiagram::Regions regions;
    std::vector<SurgeryOutcome> outcomes; // traversal order, first kept on dedup
};
SurgeryResult surgery_outcomes(const Triangulation& tri, const Weights& boundary,
                               const Weights& x);

// Index of the region carrying the given (boundary component, side) circle.
int region_with_anchor(const JointDiagram::Regions& regs, std::pair<int, int> anchor);

// Chart coordinates of a curve lying in the chart's piece.
std::optional<Slope> chart_slope(const Triangulation& tri, const FareyChart& chart,
                                 const Weights& curve);

// Subsurface projection of the multicurve x to the domain: chart slopes of
// the curves obtained by surgering the arcs of x through the piece along the
// piece's boundary. Empty when x misses the piece.
std::vector<Slope> project(const Triangulation& tri, const Domain& dom, const Weights& x);

// diam(project(x) union project(y)) in the Farey graph; 0 when either
// projection is empty.
int64_t subsurface_distance(const Triangulation& tri, const Domain& dom, const Weights& x,
                            const Weights& y);

} // namespace curvelab
