#include "curvelab/normal.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace curvelab {

std::optional<std::string> admissibility_error(const Triangulation& tri, const Weights& w) {
    if ((int)w.size() != tri.edgeCount())
        return "weight vector length " + std::to_string(w.size()) + " != edge count " +
               std::to_string(tri.edgeCount());
    for (auto x : w)
        if (x < 0) return std::string("negative edge weight");
    for (int t = 0; t < tri.triangleCount(); ++t) {
        int64_t a = w[tri.tri(t).side[0].edge];
        int64_t b = w[tri.tri(t).side[1].edge];
        int64_t c = w[tri.tri(t).side[2].edge];
        if ((a + b + c) % 2 != 0)
            return "parity violation in triangle " + std::to_string(t);
        if (a > b + c || b > a + c || c > a + b)
            return "triangle inequality violation in triangle " + std::to_string(t);
    }
    return std::nullopt;
}

int64_t corner_count(const Triangulation& tri, const Weights& w, int t, int s) {
    int64_t ws = w[tri.tri(t).side[s].edge];
    int64_t wPrev = w[tri.tri(t).side[(s + 2) % 3].edge];
    int64_t wNext = w[tri.tri(t).side[(s + 1) % 3].edge];
    return (ws + wPrev - wNext) / 2;
}

namespace {

// Enter the triangle on the given side of `edge` at intrinsic position pos;
// returns the exit edge, exit intrinsic position, whether we exited through
// the forward occurrence, and the corner (t,s) that the arc cuts.
struct StepResult {
    int edge;
    int64_t pos;
    bool exitedFwd;
    int cornerTri;
    int cornerSlot;
};

StepResult trace_step(const Triangulation& tri, const Weights& w, int edge, int64_t pos,
                      bool viaFwd) {
    const auto& es = tri.sides(edge);
    int t = viaFwd ? es.triFwd : es.triBwd;
    int s = viaFwd ? es.slotFwd : es.slotBwd;
    int64_t we = w[edge];
    int64_t q = viaFwd ? pos : we + 1 - pos;

    int64_t nHere = corner_count(tri, w, t, s);
    int exitSlot;
    int64_t exitLocal;
    int cornerSlot;
    if (q <= nHere) {
        cornerSlot = s;
        exitSlot = (s + 2) % 3;
        exitLocal = w[tri.tri(t).side[exitSlot].edge] + 1 - q;
    } else {
        cornerSlot = (s + 1) % 3;
        exitSlot = (s + 1) % 3;
        exitLocal = we + 1 - q;
    }
    const EdgeRef& xr = tri.tri(t).side[exitSlot];
    int64_t wx = w[xr.edge];
    int64_t exitPos = xr.fwd ? exitLocal : wx + 1 - exitLocal;
    return StepResult{xr.edge, exitPos, xr.fwd, t, cornerSlot};
}

} // namespace

ArcStep arc_step(const Triangulation& tri, const Weights& w, int edge, int64_t pos, bool viaFwd) {
    StepResult r = trace_step(tri, w, edge, pos, viaFwd);
    return ArcStep{r.edge, r.pos, r.exitedFwd, r.cornerTri, r.cornerSlot};
}

std::vector<std::vector<TracePoint>> trace_cycles(const Triangulation& tri, const Weights& w) {
    if (auto err = admissibility_error(tri, w))
        throw std::invalid_argument("trace: " + *err);

    std::vector<std::vector<char>> visited(tri.edgeCount());
    for (int e = 0; e < tri.edgeCount(); ++e) visited[e].assign((size_t)w[e], 0);

    std::vector<std::vector<TracePoint>> out;
    for (int e0 = 0; e0 < tri.edgeCount(); ++e0) {
        for (int64_t p0 = 1; p0 <= w[e0]; ++p0) {
            if (visited[e0][(size_t)(p0 - 1)]) continue;
            std::vector<TracePoint> cycle;
            TracePoint start{e0, p0, true};
            TracePoint cur = start;
            do {
                visited[cur.edge][(size_t)(cur.pos - 1)] = 1;
                cycle.push_back(cur);
                StepResult r = trace_step(tri, w, cur.edge, cur.pos, cur.viaFwd);
                // Continue through the opposite side of the exit edge.
                cur = TracePoint{r.edge, r.pos, !r.exitedFwd};
            } while (!(cur == start));
            out.push_back(std::move(cycle));
        }
    }
    return out;
}

std::vector<TracedComponent> trace_components(const Triangulation& tri, const Weights& w) {
    std::vector<TracedComponent> out;
    for (const auto& cycle : trace_cycles(tri, w)) {
        TracedComponent comp;
        comp.weights.assign(tri.edgeCount(), 0);
        for (const auto& p : cycle) comp.weights[p.edge] += 1;
        // Normal coordinates are unique per isotopy class, so a component
        // is peripheral exactly when its weights are a vertex link.
        for (int v = 0; v < tri.vertexCount(); ++v) {
            auto lw = tri.vertexLinkWeights(v);
            bool same = true;
            for (int e = 0; e < tri.edgeCount(); ++e)
                if (comp.weights[e] != lw[e]) { same = false; break; }
            if (same) { comp.peripheralVertex = v; break; }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

NormalCurve::NormalCurve(const Triangulation& tri, Weights w) : tri_(&tri), w_(std::move(w)) {}

int64_t NormalCurve::totalWeight() const {
    return std::accumulate(w_.begin(), w_.end(), int64_t{0});
}

NormalCurve NormalCurve::validate(const Triangulation& tri, const Weights& w) {
    if (auto err = admissibility_error(tri, w))
        throw std::invalid_argument("curve: " + *err);
    auto comps = trace_components(tri, w);
    if (comps.empty())
        throw std::invalid_argument("curve: empty weight vector traces no component");
    if (comps.size() > 1)
        throw std::invalid_argument(
            "curve: weights trace " + std::to_string(comps.size()) +
            " components; use components() for multicurves");
    if (comps[0].peripheralVertex != -1)
        throw std::invalid_argument("curve: peripheral (links puncture " +
                                    std::to_string(comps[0].peripheralVertex) + ")");
    return NormalCurve(tri, w);
}

std::vector<NormalCurve> components(const Triangulation& tri, const Weights& w) {
    auto traced = trace_components(tri, w);
    std::vector<NormalCurve> out;
    for (auto& c : traced) {
        if (c.peripheralVertex != -1) continue;
        NormalCurve nc(tri, std::move(c.weights));
        if (std::find(out.begin(), out.end(), nc) == out.end()) out.push_back(std::move(nc));
    }
    return out;
}

Multicurve::Multicurve(std::vector<NormalCurve> comps) : comps_(std::move(comps)) {
    std::sort(comps_.begin(), comps_.end());
    comps_.erase(std::unique(comps_.begin(), comps_.end()), comps_.end());
}

bool Multicurve::contains(const NormalCurve& c) const {
    return std::find(comps_.begin(), comps_.end(), c) != comps_.end();
}

Weights Multicurve::weights(const Triangulation& tri) const {
    Weights w(tri.edgeCount(), 0);
    for (const auto& c : comps_)
        for (int e = 0; e < tri.edgeCount(); ++e) w[e] += c.weight(e);
    return w;
}

} // namespace curvelab
