#pragma once

#include "curvelab/surface.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace curvelab {

using Weights = std::vector<int64_t>;

// Admissibility of normal coordinates: per triangle the three side weights
// have even sum and satisfy the triangle inequalities (so every corner count
// is a nonnegative integer). Returns an explanation on failure.
std::optional<std::string> admissibility_error(const Triangulation& tri, const Weights& w);

// Corner count of triangle t at corner s for weights w: number of arcs
// cutting the corner between slots s-1 and s.
int64_t corner_count(const Triangulation& tri, const Weights& w, int t, int s);

// An isotopy class of an essential, non-peripheral simple closed curve, in
// normal coordinates on a fixed triangulation. Normal coordinates determine
// the class uniquely, so equality is weight-vector equality.
class NormalCurve {
public:
    NormalCurve(const Triangulation& tri, Weights w);

    const Triangulation& tri() const { return *tri_; }
    const Weights& weights() const { return w_; }
    int64_t weight(int e) const { return w_[e]; }
    int64_t totalWeight() const;

    bool operator==(const NormalCurve& o) const { return w_ == o.w_; }
    bool operator<(const NormalCurve& o) const { return w_ < o.w_; }

    // Validating constructor: checks admissibility, single closed component,
    // essential, non-peripheral. Throws std::invalid_argument otherwise.
    static NormalCurve validate(const Triangulation& tri, const Weights& w);

private:
    const Triangulation* tri_;
    Weights w_;
};

// Decomposes an admissible weight vector into the weight vectors of its
// traced components, in trace order; peripheral (vertex-linking) components
// are reported with their vertex id. No curves are discarded here.
struct TracedComponent {
    Weights weights;
    int peripheralVertex = -1; // -1 when essential
};
std::vector<TracedComponent> trace_components(const Triangulation& tri, const Weights& w);

// One crossing point of a traced component, in traversal order: the
// component crosses `edge` at intrinsic position `pos` (1-based) and enters
// the triangle on the forward side of the edge iff viaFwd.
struct TracePoint {
    int edge = -1;
    int64_t pos = 0;
    bool viaFwd = true;

    bool operator==(const TracePoint&) const = default;
};

// Full traversal cycles of the components of an admissible vector, one cycle
// per component, in the same order as trace_components.
std::vector<std::vector<TracePoint>> trace_cycles(const Triangulation& tri, const Weights& w);

// One arc step: the strand entering at (edge, pos) via the given side
// crosses a triangle and exits. Every normal arc cuts exactly one corner,
// reported as cornerSlot. Used by the diagram machinery.
struct ArcStep {
    int edge;
    int64_t pos;
    bool exitedFwd; // exits through the forward side of `edge`
    int tri;
    int cornerSlot;
};
ArcStep arc_step(const Triangulation& tri, const Weights& w, int edge, int64_t pos, bool viaFwd);

// Essential components of an admissible vector, peripheral pieces discarded,
// parallel copies deduplicated. Throws on inadmissible weights.
std::vector<NormalCurve> components(const Triangulation& tri, const Weights& w);

// Pairwise-disjoint, pairwise-distinct curves on one triangulation. The
// disjointness itself is checked by callers that own an intersection engine;
// this type only enforces structure.
class Multicurve {
public:
    Multicurve() = default;
    explicit Multicurve(std::vector<NormalCurve> comps);

    const std::vector<NormalCurve>& curves() const { return comps_; }
    bool empty() const { return comps_.empty(); }
    size_t size() const { return comps_.size(); }
    bool contains(const NormalCurve& c) const;

    // Sum of component weights: the normal coordinates of the multicurve.
    Weights weights(const Triangulation& tri) const;

    bool operator==(const Multicurve&) const = default;

private:
    std::vector<NormalCurve> comps_; // sorted, unique
};

} // namespace curvelab
