#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace curvelab {

// A surface S_{g,n}. Boundary components are modeled as punctures, so the
// triangulations below are ideal (all vertices at punctures).
struct SurfaceSpec {
    int genus = 0;
    int punctures = 0;

    int complexity() const { return 3 * genus + punctures - 3; }

    bool operator==(const SurfaceSpec&) const = default;
    std::string name() const;
};

// Throws std::invalid_argument when 3g + n - 3 < 1.
SurfaceSpec make_surface(int genus, int punctures);

// One side of an edge as seen from a triangle: slot i of a triangle traverses
// the edge either along its intrinsic direction (fwd) or against it.
struct EdgeRef {
    int edge = -1;
    bool fwd = true;

    bool operator==(const EdgeRef&) const = default;
};

struct Triangle {
    std::array<EdgeRef, 3> side;
};

// Ideal triangulation. Triangles are oriented counterclockwise; every edge
// appears in exactly two slots, once forward and once backward, which encodes
// the gluing and keeps the glued surface oriented.
class Triangulation {
public:
    Triangulation(SurfaceSpec spec, std::vector<Triangle> triangles);

    const SurfaceSpec& spec() const { return spec_; }
    int edgeCount() const { return edge_count_; }
    int triangleCount() const { return static_cast<int>(tris_.size()); }
    const std::vector<Triangle>& triangles() const { return tris_; }
    const Triangle& tri(int t) const { return tris_[t]; }

    // Occurrences of an edge: (triangle, slot) for the forward and the
    // backward side.
    struct EdgeSides {
        int triFwd = -1, slotFwd = -1;
        int triBwd = -1, slotBwd = -1;
    };
    const EdgeSides& sides(int edge) const { return sides_[edge]; }

    // Vertex (= puncture) class of the corner of triangle t at the start of
    // slot s.
    int cornerVertex(int t, int s) const { return corner_vertex_[3 * t + s]; }
    int vertexCount() const { return vertex_count_; }

    // Edge weight contribution of the link of a vertex: number of edge ends
    // of e incident to vertex v.
    std::vector<int> vertexLinkWeights(int v) const;

    bool flippable(int edge) const;

    // Canonical string invariant under triangle relabeling and edge
    // renaming; used to compare combinatorial types.
    std::string combinatorialType() const;

    bool operator==(const Triangulation& o) const {
        return spec_ == o.spec_ && tris_size_eq(o);
    }

private:
    bool tris_size_eq(const Triangulation& o) const;
    void validate();

    SurfaceSpec spec_;
    std::vector<Triangle> tris_;
    std::vector<EdgeSides> sides_;
    std::vector<int> corner_vertex_;
    int edge_count_ = 0;
    int vertex_count_ = 0;
};

// Fixed, documented triangulations for the supported surfaces
// (S_{1,1}, S_{0,4}, S_{0,5}, S_{1,2}). Throws for anything else.
const Triangulation& standard_triangulation(const SurfaceSpec& spec);

// Diagonal exchange. Throws when the edge is not flippable (both sides in
// one triangle).
Triangulation flip(const Triangulation& tri, int edge);

// JSON-ish text form used by the CLI: triangle list with gluing implied by
// edge ids and orientations.
std::string triangulation_to_json(const Triangulation& tri);

} // namespace curvelab
