#include "curvelab/ops.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace curvelab {

namespace {

// component weight vectors with multiplicities
std::map<Weights, int64_t> component_multiset(const Triangulation& tri, const Weights& w) {
    std::map<Weights, int64_t> out;
    for (const auto& c : trace_components(tri, w)) out[c.weights] += 1;
    return out;
}

// Edge walk of component `comp` of system 0, with |k| trips around system 1
// inserted at every crossing. k = 0 inserts nothing; onlyCrossing >= 0
// restricts the insertion (one forward trip) to that crossing.
std::vector<int> walk_with_insertions(const JointDiagram& d, int comp, int64_t k,
                                      int onlyCrossing) {
    const auto& cyc = d.cycles(0)[(size_t)comp];
    std::vector<int> walk;
    for (size_t m = 0; m < cyc.size(); ++m) {
        walk.push_back(cyc[m].edge);
        for (int id : d.arcCrossings(0, comp, (int)m)) {
            const auto& x = d.crossingList()[(size_t)id];
            bool fwd;
            int64_t trips;
            if (onlyCrossing >= 0) {
                if (id != onlyCrossing) continue;
                fwd = true;
                trips = 1;
            } else {
                if (k == 0) continue;
                // left twist follows c forward when c comes in clockwise
                fwd = (k > 0) ? (x.sign == -1) : (x.sign == 1);
                trips = k > 0 ? k : -k;
            }
            const auto& cyc1 = d.cycles(1)[(size_t)x.comp[1]];
            int64_t n1 = (int64_t)cyc1.size();
            for (int64_t j = 0; j < trips * n1; ++j) {
                int64_t idx = fwd ? (x.arc[1] + 1 + j) % n1
                                  : ((x.arc[1] - j) % n1 + n1) % n1;
                walk.push_back(cyc1[(size_t)idx].edge);
            }
        }
    }
    return walk;
}

void add_weights(Weights& acc, const Weights& w) {
    for (size_t e = 0; e < acc.size(); ++e) acc[e] += w[e];
}

} // namespace

int64_t intersection_number(const Triangulation& tri, const Weights& a, const Weights& b) {
    auto ca = component_multiset(tri, a);
    auto cb = component_multiset(tri, b);
    int64_t total = 0;
    for (const auto& [wa, ma] : ca) {
        for (const auto& [wb, mb] : cb) {
            if (wa == wb) continue; // identical curves are disjoint
            total += ma * mb * JointDiagram(tri, wa, wb).crossings();
        }
    }
    return total;
}

bool fills(const Triangulation& tri, const Weights& a, const Weights& b) {
    JointDiagram d(tri, a, b);
    auto regs = d.regionize(true);
    for (const auto& r : regs.list)
        if (!r.isTrivial()) return false;
    return true;
}

std::vector<Weights> neighborhood_boundary(const Triangulation& tri, const Weights& a,
                                           const Weights& b) {
    JointDiagram d(tri, a, b);
    auto regs = d.regionize(true);
    std::vector<Weights> out;
    for (const auto& r : regs.list) {
        for (const auto& walk : r.boundaryWalks) {
            auto c = reduce_closed_walk(tri, walk);
            if (!c.weights.empty() && c.peripheralVertex < 0) out.push_back(c.weights);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Weights dehn_twist(const Triangulation& tri, const Weights& x, const Weights& c, int64_t k) {
    if (k == 0) return x;
    {
        auto cc = trace_components(tri, c);
        if (cc.size() != 1 || cc[0].peripheralVertex >= 0)
            throw std::invalid_argument("dehn_twist: twisting curve must be a single essential curve");
    }
    JointDiagram d(tri, x, c);
    if (d.crossings() == 0) return x;
    Weights out((size_t)tri.edgeCount(), 0);
    for (size_t comp = 0; comp < d.cycles(0).size(); ++comp) {
        auto walk = walk_with_insertions(d, (int)comp, k, -1);
        auto tc = reduce_closed_walk(tri, walk);
        if (tc.weights.empty())
            throw std::logic_error("dehn_twist: image component became trivial");
        add_weights(out, tc.weights);
    }
    return out;
}

Weights apply_twist_word(const Triangulation& tri, const Weights& x, const TwistWord& word) {
    Weights cur = x;
    for (const auto& step : word) cur = dehn_twist(tri, cur, step.curve, step.power);
    return cur;
}

Weights oriented_smoothing(const JointDiagram& d, int crossing) {
    const auto& x = d.crossingList()[(size_t)crossing];
    auto walk = walk_with_insertions(d, x.comp[0], 0, crossing);
    auto tc = reduce_closed_walk(d.tri(), walk);
    if (tc.weights.empty())
        throw std::logic_error("oriented_smoothing: smoothed curve is trivial");
    return tc.weights;
}

std::vector<Weights> small_curves(const Triangulation& tri, int64_t perEdgeMax) {
    int E = tri.edgeCount();
    if (E > 9) throw std::invalid_argument("small_curves: too many edges for exhaustive scan");
    // the scan is pure in the triangulation, so cache per gluing
    std::string key = std::to_string(perEdgeMax);
    for (const auto& t : tri.triangles())
        for (int s = 0; s < 3; ++s)
            key += "," + std::to_string(t.side[(size_t)s].edge) +
                   (t.side[(size_t)s].fwd ? "f" : "b");
    static std::mutex mtx;
    static std::map<std::string, std::vector<Weights>> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::vector<Weights> out;
    Weights w((size_t)E, 0);
    int64_t base = perEdgeMax + 1;
    int64_t total = 1;
    for (int e = 0; e < E; ++e) total *= base;
    for (int64_t code = 1; code < total; ++code) {
        int64_t v = code;
        for (int e = 0; e < E; ++e) {
            w[(size_t)e] = v % base;
            v /= base;
        }
        if (admissibility_error(tri, w)) continue;
        auto comps = trace_components(tri, w);
        if (comps.size() == 1 && comps[0].peripheralVertex < 0) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

} // namespace curvelab
