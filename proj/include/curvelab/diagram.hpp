#pragma once

#include "curvelab/normal.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace curvelab {

// Joint diagram of two curve systems (each an admissible weight vector whose
// components are pairwise non-isotopic across the systems). Token orders on
// the edges are seeded by a divergence comparator and then corrected by
// removing innermost empty bigons until the configuration is bigon-free, so
// crossings() is the geometric intersection number of the two systems.
//
// The per-triangle picture is an exact straight-chord arrangement over
// rational boundary points; all orientation and ordering decisions are made
// with integer arithmetic.
class JointDiagram {
public:
    JointDiagram(const Triangulation& tri, Weights sysA, Weights sysB);

    const Triangulation& tri() const { return *tri_; }
    const Weights& weights(int sys) const { return w_[sys]; }

    int64_t crossings() const { return (int64_t)crossings_.size(); }
    int eliminationRounds() const { return rounds_; }

    // Traversal cycles per system; arc m of a cycle runs from point m to
    // point m+1 (cyclically) through one triangle.
    const std::vector<std::vector<TracePoint>>& cycles(int sys) const { return cycles_[sys]; }

    struct Crossing {
        int comp[2];     // component index within each system
        int arc[2];      // arc index within the component cycle
        int rank[2];     // 0-based rank among the crossings of that arc, in traversal order
        int sign;        // +1 when sys-1's direction is counterclockwise from sys-0's
    };
    const std::vector<Crossing>& crossingList() const { return crossings_; }

    // Crossing ids along one arc, ordered by traversal.
    const std::vector<int>& arcCrossings(int sys, int comp, int arc) const;

    // Token order on an edge: (system, intrinsic position) pairs.
    const std::vector<std::pair<int, int64_t>>& tokenOrder(int edge) const { return order_[edge]; }

    // --- complementary regions ---
    //
    // cutB=true cuts along both systems; cutB=false treats system 1 as
    // transparent (regions of S minus system 0 only). chi is the Euler
    // characteristic of the compactified region (punctures filled back in,
    // boundary left intact). corners counts the boundary corners coming from
    // crossings of the two systems (0 when cutB=false).
    struct Region {
        int64_t chi = 0;
        int punctures = 0;
        int64_t corners = 0;
        int64_t faces = 0;
        // Edge sequences of the pushed-off boundary components, in walk order.
        std::vector<std::vector<int>> boundaryWalks;
        // For cutB=false: boundary circle labels parallel to the walks above,
        // as (component of system 0, side) with side=0 meaning the region
        // lies to the left of the component's traversal direction.
        std::vector<std::pair<int, int>> circleLabels;

        bool isDisk() const { return chi == 1 && punctures == 0; }
        bool isOncePuncturedDisk() const { return chi == 1 && punctures == 1; }
        bool isTrivial() const { return isDisk() || isOncePuncturedDisk(); }
    };
    struct CirclePos {
        int region = -1;
        int walk = -1;   // index into the region's boundaryWalks
        int64_t pos = 0; // edges recorded on that walk before the passage
        int64_t seq = 0; // passage index along the walk (breaks pos ties)
    };
    struct Regions {
        std::vector<Region> list;
        // cutB=false only: region index of every arc of system 1, indexed by
        // global arc id.
        std::vector<int> arcRegion1;
        // cutB=false only: where the pushed-off circle on each side of
        // system 0 passes each crossing; keyed by (crossing id, side) with
        // side 0 = left of system 0's traversal direction.
        std::map<std::pair<int, int>, CirclePos> circleOf;
    };
    Regions regionize(bool cutB) const;

    // Global arc numbering for system `sys`: arcs of all components
    // concatenated in cycle order.
    int globalArc(int sys, int comp, int arc) const;
    int arcCount(int sys) const;

private:
    struct Impl;
    struct RegionsFull {
        Regions pub;
        // per region: the edge intervals (edge, index) on its boundary
        std::vector<std::vector<std::pair<int, int64_t>>> intervals;
        // per region: arrangement vertex ids of its corner crossings
        std::vector<std::vector<int>> cornerVerts;
    };
    void build();
    void buildArrangementAndRegions();
    RegionsFull regionizeInternal(bool cutB, bool wantIntervals) const;

    const Triangulation* tri_;
    Weights w_[2];
    std::vector<std::vector<TracePoint>> cycles_[2];
    std::vector<std::vector<std::pair<int, int64_t>>> order_; // per edge
    std::vector<Crossing> crossings_;
    std::vector<std::vector<int>> arcCross_[2]; // by global arc id
    std::vector<int> arcOffset_[2];             // comp -> first global arc id
    int rounds_ = 0;
    std::shared_ptr<Impl> impl_; // final arrangement, kept for region queries
};

// Cyclic closed-walk reduction: a walk is the cyclic sequence of edges a
// closed curve crosses. Any two consecutive crossings of the same edge cut
// off a vertex-free disk inside one triangle and can be erased; the fixed
// point is a normal weight vector (or nothing, for a contractible walk).
// Returns the traced component of the reduced walk: empty weights when the
// walk is contractible, otherwise the weights plus peripheral marker.
TracedComponent reduce_closed_walk(const Triangulation& tri, std::vector<int> walkEdges);

} // namespace curvelab
