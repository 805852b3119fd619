#include "curvelab/surface.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace curvelab {

std::string SurfaceSpec::name() const {
    return "S_{" + std::to_string(genus) + "," + std::to_string(punctures) + "}";
}

SurfaceSpec make_surface(int genus, int punctures) {
    if (genus < 0 || punctures < 1)
        throw std::invalid_argument("surface: need genus >= 0 and at least one puncture");
    SurfaceSpec s{genus, punctures};
    if (s.complexity() < 1)
        throw std::invalid_argument("surface " + s.name() + " has complexity " +
                                    std::to_string(s.complexity()) + " < 1");
    return s;
}

Triangulation::Triangulation(SurfaceSpec spec, std::vector<Triangle> triangles)
    : spec_(spec), tris_(std::move(triangles)) {
    validate();
}

bool Triangulation::tris_size_eq(const Triangulation& o) const {
    if (tris_.size() != o.tris_.size()) return false;
    for (size_t i = 0; i < tris_.size(); ++i)
        if (!(tris_[i].side == o.tris_[i].side)) return false;
    return true;
}

void Triangulation::validate() {
    int maxEdge = -1;
    for (const auto& t : tris_)
        for (const auto& s : t.side) maxEdge = std::max(maxEdge, s.edge);
    edge_count_ = maxEdge + 1;

    sides_.assign(edge_count_, EdgeSides{});
    for (int t = 0; t < (int)tris_.size(); ++t) {
        for (int s = 0; s < 3; ++s) {
            const EdgeRef& r = tris_[t].side[s];
            if (r.edge < 0) throw std::invalid_argument("triangulation: bad edge id");
            EdgeSides& es = sides_[r.edge];
            if (r.fwd) {
                if (es.triFwd != -1)
                    throw std::invalid_argument("triangulation: edge used forward twice");
                es.triFwd = t;
                es.slotFwd = s;
            } else {
                if (es.triBwd != -1)
                    throw std::invalid_argument("triangulation: edge used backward twice");
                es.triBwd = t;
                es.slotBwd = s;
            }
        }
    }
    for (int e = 0; e < edge_count_; ++e)
        if (sides_[e].triFwd == -1 || sides_[e].triBwd == -1)
            throw std::invalid_argument("triangulation: edge " + std::to_string(e) +
                                        " not glued on both sides");

    // Vertex classes: walk corners around each vertex. Slot s starts at
    // corner s; the other side of that edge ends at its corner, so the next
    // corner clockwise around the vertex is (t', s'+1) where (t', s') is the
    // opposite occurrence.
    corner_vertex_.assign(3 * tris_.size(), -1);
    vertex_count_ = 0;
    for (int c0 = 0; c0 < (int)corner_vertex_.size(); ++c0) {
        if (corner_vertex_[c0] != -1) continue;
        int v = vertex_count_++;
        int c = c0;
        do {
            corner_vertex_[c] = v;
            int t = c / 3, s = c % 3;
            const EdgeRef& r = tris_[t].side[s];
            const EdgeSides& es = sides_[r.edge];
            int t2 = r.fwd ? es.triBwd : es.triFwd;
            int s2 = r.fwd ? es.slotBwd : es.slotFwd;
            c = 3 * t2 + (s2 + 1) % 3;
        } while (c != c0);
    }

    // Connectivity over triangles.
    std::vector<int> seen(tris_.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int s = 0; s < 3; ++s) {
            const EdgeRef& r = tris_[t].side[s];
            const EdgeSides& es = sides_[r.edge];
            for (int t2 : {es.triFwd, es.triBwd})
                if (!seen[t2]) {
                    seen[t2] = 1;
                    stack.push_back(t2);
                }
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw std::invalid_argument("triangulation: not connected");

    // Euler counts for the declared surface.
    int expectedEdges = 6 * spec_.genus + 3 * spec_.punctures - 6;
    int expectedTris = 4 * spec_.genus + 2 * spec_.punctures - 4;
    int chi = vertex_count_ - edge_count_ + (int)tris_.size();
    if (edge_count_ != expectedEdges || (int)tris_.size() != expectedTris ||
        vertex_count_ != spec_.punctures || chi != 2 - 2 * spec_.genus)
        throw std::invalid_argument("triangulation: counts do not match " + spec_.name());
}

std::vector<int> Triangulation::vertexLinkWeights(int v) const {
    std::vector<int> w(edge_count_, 0);
    for (int t = 0; t < (int)tris_.size(); ++t)
        for (int s = 0; s < 3; ++s)
            if (cornerVertex(t, s) == v) {
                // Corner s is cut by the link once; the link crosses the two
                // edges at slots s and s-1 of this corner.
                w[tris_[t].side[s].edge] += 1;
                w[tris_[t].side[(s + 2) % 3].edge] += 1;
            }
    // Each crossing got counted from exactly one corner, but an edge end at v
    // is shared by two corners of the fan; halve.
    for (auto& x : w) x /= 2;
    return w;
}

bool Triangulation::flippable(int edge) const {
    const EdgeSides& es = sides_[edge];
    return es.triFwd != es.triBwd;
}

std::string Triangulation::combinatorialType() const {
    // Canonical form: BFS relabeling from every (triangle, rotation) start,
    // take the lexicographically least encoding.
    std::string best;
    for (int t0 = 0; t0 < (int)tris_.size(); ++t0) {
        for (int rot = 0; rot < 3; ++rot) {
            // Rename edges in discovery order and reorient each so that its
            // first occurrence reads forward; a relabeling-invariant form
            // must forget the arbitrary stored orientation.
            std::map<int, std::pair<int, bool>> edgeLabel;
            auto lab = [&](int e, bool fwd) {
                auto it = edgeLabel.find(e);
                if (it == edgeLabel.end()) {
                    int l = (int)edgeLabel.size();
                    edgeLabel[e] = {l, fwd};
                    return std::make_pair(l, true);
                }
                return std::make_pair(it->second.first, fwd == it->second.second);
            };
            std::vector<int> triOrder;
            std::vector<int> triPos(tris_.size(), -1);
            std::vector<int> triRot(tris_.size(), 0);
            triOrder.push_back(t0);
            triPos[t0] = 0;
            triRot[t0] = rot;
            std::ostringstream enc;
            for (size_t i = 0; i < triOrder.size(); ++i) {
                int t = triOrder[i];
                for (int k = 0; k < 3; ++k) {
                    const EdgeRef& r = tris_[t].side[(triRot[t] + k) % 3];
                    auto [l, pos] = lab(r.edge, r.fwd);
                    enc << l << (pos ? '+' : '-') << ',';
                    const EdgeSides& es = sides_[r.edge];
                    int t2 = r.fwd ? es.triBwd : es.triFwd;
                    int s2 = r.fwd ? es.slotBwd : es.slotFwd;
                    if (triPos[t2] == -1) {
                        triPos[t2] = (int)triOrder.size();
                        triRot[t2] = s2;
                        triOrder.push_back(t2);
                    }
                }
                enc << ';';
            }
            std::string s = enc.str();
            if (best.empty() || s < best) best = s;
        }
    }
    return best;
}

namespace {

Triangulation make_s11() {
    // Square torus, one vertex: edges a=0 (bottom), b=1 (right), c=2
    // (diagonal).
    std::vector<Triangle> ts = {
        Triangle{{EdgeRef{0, true}, EdgeRef{1, true}, EdgeRef{2, false}}},
        Triangle{{EdgeRef{2, true}, EdgeRef{0, false}, EdgeRef{1, false}}},
    };
    return Triangulation(SurfaceSpec{1, 1}, std::move(ts));
}

Triangulation make_s04() {
    // Boundary of a tetrahedron on vertices 1..4.
    // Edges: e12=0 e13=1 e14=2 e23=3 e24=4 e34=5, oriented low->high vertex.
    std::vector<Triangle> ts = {
        Triangle{{EdgeRef{0, true}, EdgeRef{3, true}, EdgeRef{1, false}}},  // (1,2,3)
        Triangle{{EdgeRef{1, true}, EdgeRef{5, true}, EdgeRef{2, false}}},  // (1,3,4)
        Triangle{{EdgeRef{2, true}, EdgeRef{4, false}, EdgeRef{0, false}}}, // (1,4,2)
        Triangle{{EdgeRef{4, true}, EdgeRef{5, false}, EdgeRef{3, false}}}, // (2,4,3)
    };
    return Triangulation(SurfaceSpec{0, 4}, std::move(ts));
}

Triangulation make_s05() {
    // Triangular bipyramid: equator vertices 1,2,3, apexes T, B.
    // Edges: e12=0 e23=1 e31=2, u1=3 u2=4 u3=5 (i->T), l1=6 l2=7 l3=8 (i->B).
    std::vector<Triangle> ts = {
        Triangle{{EdgeRef{0, true}, EdgeRef{4, true}, EdgeRef{3, false}}},  // (1,2,T)
        Triangle{{EdgeRef{1, true}, EdgeRef{5, true}, EdgeRef{4, false}}},  // (2,3,T)
        Triangle{{EdgeRef{2, true}, EdgeRef{3, true}, EdgeRef{5, false}}},  // (3,1,T)
        Triangle{{EdgeRef{0, false}, EdgeRef{6, true}, EdgeRef{7, false}}}, // (2,1,B)
        Triangle{{EdgeRef{1, false}, EdgeRef{7, true}, EdgeRef{8, false}}}, // (3,2,B)
        Triangle{{EdgeRef{2, false}, EdgeRef{8, true}, EdgeRef{6, false}}}, // (1,3,B)
    };
    return Triangulation(SurfaceSpec{0, 5}, std::move(ts));
}

Triangulation make_s12() {
    // Torus as a 2x1 rectangle of squares, each cut by a diagonal; two
    // vertices u, v. Edges: h1=0 (u->v), h2=1 (v->u), w1=2 (loop at u),
    // w2=3 (loop at v), d1=4 (u->v), d2=5 (v->u).
    std::vector<Triangle> ts = {
        Triangle{{EdgeRef{0, true}, EdgeRef{3, true}, EdgeRef{4, false}}},  // lower-right sq1
        Triangle{{EdgeRef{4, true}, EdgeRef{0, false}, EdgeRef{2, false}}}, // upper-left sq1
        Triangle{{EdgeRef{1, true}, EdgeRef{2, true}, EdgeRef{5, false}}},  // lower-right sq2
        Triangle{{EdgeRef{5, true}, EdgeRef{1, false}, EdgeRef{3, false}}}, // upper-left sq2
    };
    return Triangulation(SurfaceSpec{1, 2}, std::move(ts));
}

} // namespace

const Triangulation& standard_triangulation(const SurfaceSpec& spec) {
    static const Triangulation s11 = make_s11();
    static const Triangulation s04 = make_s04();
    static const Triangulation s05 = make_s05();
    static const Triangulation s12 = make_s12();
    if (spec == SurfaceSpec{1, 1}) return s11;
    if (spec == SurfaceSpec{0, 4}) return s04;
    if (spec == SurfaceSpec{0, 5}) return s05;
    if (spec == SurfaceSpec{1, 2}) return s12;
    throw std::invalid_argument("no standard triangulation for " + spec.name());
}

Triangulation flip(const Triangulation& tri, int edge) {
    if (edge < 0 || edge >= tri.edgeCount())
        throw std::invalid_argument("flip: no such edge");
    if (!tri.flippable(edge))
        throw std::invalid_argument("flip: edge " + std::to_string(edge) +
                                    " is self-folded, not flippable");
    const auto& es = tri.sides(edge);
    int tA = es.triFwd, sA = es.slotFwd;
    int tB = es.triBwd, sB = es.slotBwd;
    // Quad around the edge, ccw: a, b from triangle A; c, d from triangle B.
    EdgeRef a = tri.tri(tA).side[(sA + 1) % 3];
    EdgeRef b = tri.tri(tA).side[(sA + 2) % 3];
    EdgeRef c = tri.tri(tB).side[(sB + 1) % 3];
    EdgeRef d = tri.tri(tB).side[(sB + 2) % 3];
    std::vector<Triangle> ts = tri.triangles();
    // New diagonal joins the corners opposite the old edge.
    ts[tA] = Triangle{{EdgeRef{edge, true}, b, c}};
    ts[tB] = Triangle{{EdgeRef{edge, false}, d, a}};
    return Triangulation(tri.spec(), std::move(ts));
}

std::string triangulation_to_json(const Triangulation& tri) {
    std::ostringstream os;
    os << "{\"schema\":\"curvelab/triangulation/1\",\"genus\":" << tri.spec().genus
       << ",\"punctures\":" << tri.spec().punctures << ",\"triangles\":[";
    for (int t = 0; t < tri.triangleCount(); ++t) {
        if (t) os << ",";
        os << "[";
        for (int s = 0; s < 3; ++s) {
            if (s) os << ",";
            const EdgeRef& r = tri.tri(t).side[s];
            os << "[" << r.edge << "," << (r.fwd ? 1 : 0) << "]";
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

} // namespace curvelab
