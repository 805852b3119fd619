#include "curvelab/projection.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace curvelab {

// ---------------------------------------------------------------------------
// Annular projections
// ---------------------------------------------------------------------------

namespace {

int64_t argmin_twist(const Triangulation& tri, const Weights& core, const Weights& x,
                     const Weights& y) {
    int64_t ixc = intersection_number(tri, x, core);
    int64_t iyc = intersection_number(tri, y, core);
    if (ixc == 0 || iyc == 0) return 0;
    int64_t ixy = intersection_number(tri, x, y);
    // by the twist inequalities the minimizer satisfies |k| <= ixy/(ixc*iyc)+1
    int64_t K = ixy / (ixc * iyc) + 2;
    int64_t bestK = 0, bestV = -1;
    for (int64_t k = -K; k <= K; ++k) {
        int64_t v = intersection_number(tri, dehn_twist(tri, x, core, k), y);
        if (bestV < 0 || v < bestV || (v == bestV && std::abs(k) < std::abs(bestK))) {
            bestV = v;
            bestK = k;
        }
    }
    return bestK;
}

} // namespace

int64_t relative_twisting(const Triangulation& tri, const Weights& core, const Weights& x,
                          const Weights& y) {
    return argmin_twist(tri, core, x, y);
}

int64_t annular_distance(const Triangulation& tri, const Weights& core, const Weights& x,
                         const Weights& y) {
    if (intersection_number(tri, x, core) == 0 || intersection_number(tri, y, core) == 0)
        return 0;
    return std::abs(argmin_twist(tri, core, x, y)) + 1;
}

// ---------------------------------------------------------------------------
// Non-annular domains
// ---------------------------------------------------------------------------

int region_with_anchor(const JointDiagram::Regions& regs, std::pair<int, int> anchor) {
    for (size_t r = 0; r < regs.list.size(); ++r)
        for (const auto& lbl : regs.list[r].circleLabels)
            if (lbl == anchor) return (int)r;
    throw std::logic_error("projection: anchor circle not found among regions");
}

namespace {

// whole curve (disjoint from the boundary) lies in the anchored piece
bool curve_in_piece(const Triangulation& tri, const Weights& boundary,
                    std::pair<int, int> anchor, const Weights& curve) {
    JointDiagram d(tri, boundary, curve);
    if (d.crossings() != 0) return false;
    auto regs = d.regionize(false);
    int r = region_with_anchor(regs, anchor);
    for (int g = 0; g < d.arcCount(1); ++g)
        if (regs.arcRegion1[(size_t)g] != r) return false;
    return true;
}

std::vector<int> rotated(const std::vector<int>& w, int64_t pos, int64_t count) {
    std::vector<int> out;
    int64_t L = (int64_t)w.size();
    out.reserve((size_t)count);
    for (int64_t j = 0; j < count; ++j) out.push_back(w[(size_t)((pos + j) % L)]);
    return out;
}

} // namespace

std::optional<Slope> chart_slope(const Triangulation& tri, const FareyChart& chart,
                                 const Weights& curve) {
    int64_t e = chart.edgeval;
    int64_t ia = intersection_number(tri, curve, chart.alpha);
    int64_t ib = intersection_number(tri, curve, chart.beta);
    int64_t id = intersection_number(tri, curve, chart.delta);
    if (ia % e || ib % e || id % e) return std::nullopt;
    auto r = slope_of_triple(ib / e, ia / e, id / e);
    if (!r || r->second != 1) return std::nullopt;
    return r->first;
}

std::vector<Domain> domains_of(const Triangulation& tri, const Weights& boundary,
                               const std::vector<Weights>& hints) {
    Weights zero((size_t)tri.edgeCount(), 0);
    JointDiagram d(tri, boundary, zero);
    auto regs = d.regionize(false);

    std::vector<Domain> out;
    for (size_t r = 0; r < regs.list.size(); ++r) {
        const auto& reg = regs.list[r];
        Domain dom;
        dom.boundary = boundary;
        dom.chiHat = reg.chi;
        dom.punctures = reg.punctures;
        dom.cuffs = (int)reg.boundaryWalks.size();
        dom.genus = (int)((2 - dom.cuffs - dom.chiHat) / 2);
        int64_t xi = 3 * (int64_t)dom.genus - 3 + dom.cuffs + dom.punctures;
        if (xi != 1) continue;
        dom.anchor = *std::min_element(reg.circleLabels.begin(), reg.circleLabels.end());
        for (const auto& walk : reg.boundaryWalks) {
            auto tc = reduce_closed_walk(tri, walk);
            if (!tc.weights.empty() && tc.peripheralVertex < 0)
                dom.cuffCurves.push_back(tc.weights);
        }
        std::sort(dom.cuffCurves.begin(), dom.cuffCurves.end());
        dom.cuffCurves.erase(std::unique(dom.cuffCurves.begin(), dom.cuffCurves.end()),
                             dom.cuffCurves.end());

        // chart: search hinted curves first, then increasingly large scans;
        // if that fails, grow the pool of in-piece curves by twisting the
        // ones we have about each other until a Farey triple shows up.
        int64_t e = dom.genus == 1 ? 1 : 2;
        dom.chart.edgeval = e;
        bool found = false;
        std::vector<Weights> pool;
        std::set<Weights> inPool;
        std::map<std::pair<size_t, size_t>, int64_t> pairNum;
        auto pairwise = [&](size_t i, size_t j) {
            auto key = std::minmax(i, j);
            auto it = pairNum.find(key);
            if (it != pairNum.end()) return it->second;
            int64_t v = intersection_number(tri, pool[key.first], pool[key.second]);
            pairNum.emplace(key, v);
            return v;
        };
        int64_t sumB = std::accumulate(boundary.begin(), boundary.end(), int64_t{0});
        int64_t weightCap = 8 * std::max<int64_t>(sumB, 8);
        auto admit = [&](const Weights& c) {
            if (inPool.count(c)) return;
            if (std::accumulate(c.begin(), c.end(), int64_t{0}) > weightCap) return;
            if (std::binary_search(dom.cuffCurves.begin(), dom.cuffCurves.end(), c))
                return;
            if (intersection_number(tri, c, boundary) != 0) return;
            if (!curve_in_piece(tri, boundary, dom.anchor, c)) return;
            inPool.insert(c);
            pool.push_back(c);
        };
        auto tripleSearch = [&]() {
            size_t n = std::min<size_t>(pool.size(), 60);
            for (size_t i = 0; i < n && !found; ++i)
                for (size_t j = i + 1; j < n && !found; ++j) {
                    if (pairwise(i, j) != e) continue;
                    for (size_t k = 0; k < n && !found; ++k) {
                        if (k == i || k == j) continue;
                        if (pairwise(k, i) != e) continue;
                        if (pairwise(k, j) != e) continue;
                        dom.chart.alpha = pool[i];
                        dom.chart.beta = pool[j];
                        dom.chart.delta = pool[k];
                        found = true;
                    }
                }
        };
        for (int64_t budget = 0; budget <= 3 && !found; ++budget) {
            std::vector<Weights> cands;
            if (budget == 0) cands = hints;
            else cands = small_curves(tri, budget);
            for (const auto& c : cands) admit(c);
            std::sort(pool.begin(), pool.end(), [](const Weights& a, const Weights& b) {
                int64_t sa = std::accumulate(a.begin(), a.end(), int64_t{0});
                int64_t sb = std::accumulate(b.begin(), b.end(), int64_t{0});
                return sa != sb ? sa < sb : a < b;
            });
            pairNum.clear();
            tripleSearch();
        }
        // Enrichment: work from the in-piece pair with the smallest positive
        // intersection; its smoothings, twists and mutual surgeries produce
        // closer Farey classes until an adjacent triple appears.
        auto resort = [&]() {
            std::sort(pool.begin(), pool.end(), [](const Weights& a, const Weights& b) {
                int64_t sa = std::accumulate(a.begin(), a.end(), int64_t{0});
                int64_t sb = std::accumulate(b.begin(), b.end(), int64_t{0});
                return sa != sb ? sa < sb : a < b;
            });
            pairNum.clear();
        };
        for (int round = 0; round < 6 && !found && !pool.empty(); ++round) {
            size_t n = std::min<size_t>(pool.size(), 24);
            size_t bi = n, bj = n;
            int64_t best = -1;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j) {
                    int64_t v = pairwise(i, j);
                    if (v > 0 && (best < 0 || v < best)) {
                        best = v;
                        bi = i;
                        bj = j;
                    }
                }
            if (best < 0) break; // pool is pairwise disjoint, nothing to generate from
            const Weights a = pool[bi], b = pool[bj];
            std::vector<Weights> gen;
            JointDiagram jd(tri, a, b);
            int nc = (int)jd.crossingList().size();
            for (int ci = 0; ci < nc && ci < 8; ++ci) {
                try {
                    gen.push_back(oriented_smoothing(jd, ci));
                } catch (const std::logic_error&) {
                }
            }
            for (int64_t sgn : {int64_t{1}, int64_t{-1}}) {
                gen.push_back(dehn_twist(tri, a, b, sgn));
                gen.push_back(dehn_twist(tri, b, a, sgn));
            }
            for (const auto& o : surgery_outcomes(tri, a, b).outcomes) gen.push_back(o.curve);
            for (const auto& o : surgery_outcomes(tri, b, a).outcomes) gen.push_back(o.curve);
            for (const auto& g : gen) admit(g);
            resort();
            tripleSearch();
        }
        if (!found)
            throw std::runtime_error(
                "projection: no Farey chart found for a piece within the enumeration budget");
        out.push_back(std::move(dom));
    }
    return out;
}

SurgeryResult surgery_outcomes(const Triangulation& tri, const Weights& boundary,
                               const Weights& x) {
    JointDiagram d(tri, boundary, x);
    SurgeryResult out;
    out.regions = d.regionize(false);
    const auto& regs = out.regions;

    std::set<std::pair<int, Weights>> seen;
    auto add = [&](int region, Weights w) {
        if (w.empty()) return;
        if (seen.insert({region, w}).second)
            out.outcomes.push_back({region, std::move(w)});
    };
    auto addWalk = [&](int region, std::vector<int> walk) {
        if (walk.empty()) return;
        auto tc = reduce_closed_walk(tri, std::move(walk));
        if (tc.peripheralVertex >= 0) return;
        add(region, std::move(tc.weights));
    };

    auto xComps = trace_components(tri, x);
    for (size_t comp = 0; comp < d.cycles(1).size(); ++comp) {
        const auto& cyc = d.cycles(1)[comp];
        int64_t n1 = (int64_t)cyc.size();
        // crossings along this component, in traversal order
        std::vector<int> xs;
        std::vector<int64_t> xarc;
        for (size_t m = 0; m < cyc.size(); ++m)
            for (int id : d.arcCrossings(1, (int)comp, (int)m)) {
                xs.push_back(id);
                xarc.push_back((int64_t)m);
            }
        if (xs.empty()) {
            // component disjoint from the boundary lies in one region whole
            if (xComps[comp].peripheralVertex >= 0) continue;
            int r0 = regs.arcRegion1[(size_t)d.globalArc(1, (int)comp, 0)];
            add(r0, xComps[comp].weights);
            continue;
        }
        size_t n = xs.size();
        for (size_t idx = 0; idx < n; ++idx) {
            int X1 = xs[idx], X2 = xs[(idx + 1) % n];
            const auto& c1 = d.crossingList()[(size_t)X1];
            const auto& c2 = d.crossingList()[(size_t)X2];
            int s1 = c1.sign > 0 ? 0 : 1; // side the segment leaves on
            int s2 = c2.sign < 0 ? 0 : 1; // side the segment arrives on
            auto cp1 = regs.circleOf.at({X1, s1});
            auto cp2 = regs.circleOf.at({X2, s2});
            if (cp1.region != cp2.region)
                throw std::logic_error("projection: segment endpoints in different regions");
            int r = cp1.region;
            // edges the segment crosses between the two crossings
            int64_t a1 = xarc[idx], a2 = xarc[(idx + 1) % n];
            int64_t count;
            if (a1 == a2) {
                int64_t r1 = c1.rank[1], r2 = c2.rank[1];
                count = r2 > r1 ? 0 : n1;
            } else {
                count = (a2 - a1 + n1) % n1;
            }
            std::vector<int> segEdges;
            for (int64_t j = 0; j < count; ++j)
                segEdges.push_back(cyc[(size_t)((a1 + 1 + j) % n1)].edge);

            const auto& reg = regs.list[(size_t)r];
            if (cp1.walk != cp2.walk) {
                const auto& W1 = reg.boundaryWalks[(size_t)cp1.walk];
                const auto& W2 = reg.boundaryWalks[(size_t)cp2.walk];
                std::vector<int> walk = segEdges;
                auto loop2 = rotated(W2, cp2.pos, (int64_t)W2.size());
                walk.insert(walk.end(), loop2.begin(), loop2.end());
                walk.insert(walk.end(), segEdges.rbegin(), segEdges.rend());
                auto loop1 = rotated(W1, cp1.pos, (int64_t)W1.size());
                walk.insert(walk.end(), loop1.begin(), loop1.end());
                addWalk(r, std::move(walk));
            } else {
                const auto& W = reg.boundaryWalks[(size_t)cp1.walk];
                int64_t L = (int64_t)W.size();
                // forward sub-arc from the arrival back to the departure;
                // equal positions are disambiguated by passage order
                int64_t f = ((cp1.pos - cp2.pos) % L + L) % L;
                if (cp1.pos == cp2.pos) f = cp1.seq > cp2.seq ? 0 : L;
                std::vector<int> w1 = segEdges;
                auto arcF = rotated(W, cp2.pos, f);
                w1.insert(w1.end(), arcF.begin(), arcF.end());
                addWalk(r, std::move(w1));
                // backward sub-arc (the complementary one)
                std::vector<int> w2 = segEdges;
                auto arcB = rotated(W, cp1.pos, L - f);
                w2.insert(w2.end(), arcB.rbegin(), arcB.rend());
                addWalk(r, std::move(w2));
            }
        }
    }
    return out;
}

std::vector<Slope> project(const Triangulation& tri, const Domain& dom, const Weights& x) {
    auto sr = surgery_outcomes(tri, dom.boundary, x);
    int r = region_with_anchor(sr.regions, dom.anchor);
    std::vector<Slope> slopes;
    for (const auto& o : sr.outcomes) {
        if (o.region != r) continue;
        bool cuff = false;
        for (const auto& c : dom.cuffCurves)
            if (o.curve == c) cuff = true;
        if (cuff) continue;
        auto s = chart_slope(tri, dom.chart, o.curve);
        if (s) slopes.push_back(*s);
    }
    std::sort(slopes.begin(), slopes.end(),
              [](const Slope& a, const Slope& b) { return std::tie(a.p, a.q) < std::tie(b.p, b.q); });
    slopes.erase(std::unique(slopes.begin(), slopes.end()), slopes.end());
    return slopes;
}

int64_t subsurface_distance(const Triangulation& tri, const Domain& dom, const Weights& x,
                            const Weights& y) {
    auto px = project(tri, dom, x);
    auto py = project(tri, dom, y);
    if (px.empty() || py.empty()) return 0;
    std::vector<Slope> all = px;
    all.insert(all.end(), py.begin(), py.end());
    int64_t best = 0;
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            best = std::max(best, (int64_t)farey_distance(all[i], all[j]));
    return best;
}

} // namespace curvelab
