#include "curvelab/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <numeric>
#include <set>
#include <stdexcept>

namespace curvelab {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

int sgn(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// ---------------------------------------------------------------------------
// Exact comparison of |a|*|b| vs |c|*|d| for 128-bit operands (256-bit via
// 64-bit limbs), then sign-aware product comparison. Keeps every geometric
// predicate exact without a bignum dependency.
// ---------------------------------------------------------------------------

struct U256 {
    uint64_t w[4];
};

U256 mulU128(u128 a, u128 b) {
    uint64_t a0 = (uint64_t)a, a1 = (uint64_t)(a >> 64);
    uint64_t b0 = (uint64_t)b, b1 = (uint64_t)(b >> 64);
    u128 p00 = (u128)a0 * b0;
    u128 p01 = (u128)a0 * b1;
    u128 p10 = (u128)a1 * b0;
    u128 p11 = (u128)a1 * b1;
    U256 r;
    r.w[0] = (uint64_t)p00;
    u128 mid = (p00 >> 64) + (uint64_t)p01 + (uint64_t)p10;
    r.w[1] = (uint64_t)mid;
    u128 hi = (mid >> 64) + (p01 >> 64) + (p10 >> 64) + p11;
    r.w[2] = (uint64_t)hi;
    r.w[3] = (uint64_t)(hi >> 64);
    return r;
}

int cmpU256(const U256& a, const U256& b) {
    for (int i = 3; i >= 0; --i) {
        if (a.w[i] != b.w[i]) return a.w[i] < b.w[i] ? -1 : 1;
    }
    return 0;
}

// sign of a*b - c*d, exact.
int cmp_prod(i128 a, i128 b, i128 c, i128 d) {
    int s1 = sgn(a) * sgn(b), s2 = sgn(c) * sgn(d);
    if (s1 != s2) return s1 < s2 ? -1 : 1;
    if (s1 == 0) return 0;
    u128 ua = a < 0 ? (u128)(-a) : (u128)a;
    u128 ub = b < 0 ? (u128)(-b) : (u128)b;
    u128 uc = c < 0 ? (u128)(-c) : (u128)c;
    u128 ud = d < 0 ? (u128)(-d) : (u128)d;
    U256 p1 = mulU128(ua, ub), p2 = mulU128(uc, ud);
    int c0 = cmpU256(p1, p2);
    return s1 > 0 ? c0 : -c0;
}

// Rational with positive denominator.
struct Rat {
    i128 n = 0, d = 1;
    Rat() = default;
    Rat(i128 nn, i128 dd) : n(nn), d(dd) {
        if (d < 0) { n = -n; d = -d; }
        if (d == 0) throw std::logic_error("diagram: zero denominator");
    }
};

int cmpRat(const Rat& a, const Rat& b) { return cmp_prod(a.n, b.d, b.n, a.d); }

// Rational point in triangle coordinates, corners (0,0), (1,0), (0,1).
struct Pt {
    int64_t nx = 0, ny = 0, den = 1;
};

// Direction b - a with the (positive) common denominator cleared.
struct Vec {
    i128 x = 0, y = 0;
};

Vec dirv(const Pt& a, const Pt& b) {
    return Vec{(i128)b.nx * a.den - (i128)a.nx * b.den,
               (i128)b.ny * a.den - (i128)a.ny * b.den};
}

i128 vcross(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }
i128 vdot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y; }

// Counterclockwise angular order, starting just above the positive x-axis.
bool angLess(const Vec& u, const Vec& v) {
    auto half = [](const Vec& w) { return (w.y > 0 || (w.y == 0 && w.x > 0)) ? 0 : 1; };
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    i128 c = vcross(u, v);
    if (c == 0) throw std::logic_error("diagram: collinear darts in rotation");
    return c > 0;
}

// ---------------------------------------------------------------------------
// Token order seeding: two copies of a strand state are walked forward in
// parallel; at the first triangle where they cut different corners their
// order at the original edge is decided. The entering-local order of a
// parallel pair is constant along the run (corner passage and edge flip each
// reverse it), so the strand cutting the near corner at divergence is the
// one nearer the start of the original edge.
// ---------------------------------------------------------------------------

struct Strand {
    int edge;
    int64_t pos;
    bool viaFwd;
};

bool token_less(const Triangulation& tri, const Weights& w0, const Weights& w1, int edge,
                int64_t p0, int64_t p1) {
    Strand a{edge, p0, true}, b{edge, p1, true};
    int64_t cap = 8;
    for (auto x : w0) cap += x;
    for (auto x : w1) cap += x;
    const Weights* ws[2] = {&w0, &w1};
    for (int64_t step = 0; step < cap; ++step) {
        const auto& es = tri.sides(a.edge);
        int t = a.viaFwd ? es.triFwd : es.triBwd;
        int s = a.viaFwd ? es.slotFwd : es.slotBwd;
        bool corner[2];
        Strand* cur[2] = {&a, &b};
        for (int i = 0; i < 2; ++i) {
            int64_t we = (*ws[i])[cur[i]->edge];
            int64_t q = cur[i]->viaFwd ? cur[i]->pos : we + 1 - cur[i]->pos;
            corner[i] = q <= corner_count(tri, *ws[i], t, s);
        }
        if (corner[0] != corner[1]) return corner[0];
        for (int i = 0; i < 2; ++i) {
            ArcStep r = arc_step(tri, *ws[i], cur[i]->edge, cur[i]->pos, cur[i]->viaFwd);
            *cur[i] = Strand{r.edge, r.pos, !r.exitedFwd};
        }
        if (a.edge != b.edge || a.viaFwd != b.viaFwd)
            throw std::logic_error("diagram: parallel strands desynchronized");
    }
    return true; // effectively parallel: system 0 first, bigon pass corrects ties
}

} // namespace

// ---------------------------------------------------------------------------
// Arrangement (one elimination round): exact chords, crossings, planar faces
// per triangle, with enough bookkeeping to glue faces into regions.
// ---------------------------------------------------------------------------

struct JointDiagram::Impl {
    // crossing records, global
    struct Cross {
        int gArc[2];   // global arc per system
        Rat t[2];      // parameter along each chord
        int sign;      // sgn(cross(dir0, dir1))
        int vert = -1; // arrangement vertex id
    };
    std::vector<Cross> cross;

    struct Dart {
        int head = -1;
        int twin = -1;
        int nif = -1;  // next dart of the face to the left
        int face = -1;
        int8_t type = 0; // 0 boundary, 1 segment
        // segment darts
        int8_t sys = -1;
        int gArc = -1;
        bool co = false; // co-oriented with the arc traversal
        // boundary darts
        int edge = -1;
        int64_t interval = -1; // intrinsic interval index 0..M
        bool ccw = false;      // counterclockwise around its triangle
    };
    std::vector<Dart> darts;

    struct Vert {
        int8_t kind; // 0 corner, 1 token, 2 crossing
        int tri = -1;
        int a = -1;     // corner: slot; token: edge; crossing: cross id
        int64_t b = -1; // token: joint index (1-based)
    };
    std::vector<Vert> verts;

    int faceN = 0;
    std::vector<bool> faceOuter;
    std::vector<int> faceTri;

    // ccw darts of each interval, per side: [edge][k] -> {fwd-side dart, bwd-side dart}
    std::vector<std::vector<std::array<int, 2>>> intervalDart;

    // co-oriented segment darts of each chord, in traversal order: [sys][gArc]
    std::vector<std::vector<int>> chordSegs[2];

    int64_t tokenTotal = 0, segTotal = 0, intervalTotal = 0;
};

namespace {

// Per-arc chord data gathered before face building.
struct ChordGeom {
    int tri = -1;
    Pt p[2];       // entry, exit
    Vec dir;
    int64_t rank[2]; // boundary ranks of the endpoints
    int64_t jointIdx[2]; // joint index on the entry/exit edge (1-based)
    int edge[2];
    int slot[2];
};

} // namespace

int JointDiagram::globalArc(int sys, int comp, int arc) const {
    return arcOffset_[sys][comp] + arc;
}

int JointDiagram::arcCount(int sys) const {
    return arcOffset_[sys].empty() ? 0 : arcOffset_[sys].back();
}

const std::vector<int>& JointDiagram::arcCrossings(int sys, int comp, int arc) const {
    return arcCross_[sys][globalArc(sys, comp, arc)];
}

JointDiagram::JointDiagram(const Triangulation& tri, Weights sysA, Weights sysB)
    : tri_(&tri) {
    w_[0] = std::move(sysA);
    w_[1] = std::move(sysB);
    for (int s = 0; s < 2; ++s) {
        if (auto err = admissibility_error(tri, w_[s]))
            throw std::invalid_argument("diagram: system " + std::to_string(s) + ": " + *err);
        cycles_[s] = trace_cycles(tri, w_[s]);
        arcOffset_[s].assign(cycles_[s].size() + 1, 0);
        for (size_t c = 0; c < cycles_[s].size(); ++c)
            arcOffset_[s][c + 1] = arcOffset_[s][c] + (int)cycles_[s][c].size();
    }
    build();
}

namespace {

// Arrangement builder for the current token orders.
struct ArrBuilder {
    const Triangulation& tri;
    const Weights* w[2];
    const std::vector<std::vector<TracePoint>>* cycles[2];
    const std::vector<std::vector<std::pair<int, int64_t>>>& order;
    const std::vector<int>* arcOffset;

    // joint index per (sys, edge, ownpos): 1-based
    std::vector<std::vector<int64_t>> jointIdx[2];

    std::vector<ChordGeom> chords[2];

    explicit ArrBuilder(const Triangulation& t, const Weights* w0, const Weights* w1,
                        const std::vector<std::vector<TracePoint>>* c0,
                        const std::vector<std::vector<TracePoint>>* c1,
                        const std::vector<std::vector<std::pair<int, int64_t>>>& ord,
                        const std::vector<int>* offs)
        : tri(t), order(ord), arcOffset(offs) {
        w[0] = w0; w[1] = w1;
        cycles[0] = c0; cycles[1] = c1;
        for (int s = 0; s < 2; ++s) {
            jointIdx[s].assign(tri.edgeCount(), {});
            for (int e = 0; e < tri.edgeCount(); ++e)
                jointIdx[s][e].assign((size_t)(*w[s])[e], 0);
        }
        for (int e = 0; e < tri.edgeCount(); ++e) {
            for (size_t j = 0; j < order[e].size(); ++j) {
                auto [sys, pos] = order[e][j];
                jointIdx[sys][e][(size_t)(pos - 1)] = (int64_t)j + 1;
            }
        }
    }

    int64_t tokens(int e) const { return (int64_t)order[e].size(); }

    // Boundary geometry of slot s in triangle t.
    struct SlotGeo {
        int edge;
        bool fwd;
        int64_t M;
    };
    SlotGeo slotGeo(int t, int s) const {
        const EdgeRef& r = tri.tri(t).side[s];
        return {r.edge, r.fwd, tokens(r.edge)};
    }

    // Point of the token with joint local index lj (1..M) on slot s.
    static Pt slotPoint(int s, int64_t lj, int64_t M) {
        int64_t den = M + 1;
        switch (s) {
            case 0: return Pt{lj, 0, den};
            case 1: return Pt{den - lj, lj, den};
            default: return Pt{0, den - lj, den};
        }
    }

    // Boundary rank: corner s at offset, tokens after it.
    int64_t slotRankBase(int t, int s) const {
        int64_t r = 0;
        for (int k = 0; k < s; ++k) r += slotGeo(t, k).M + 1;
        return r; // rank of corner k is slotRankBase, tokens base+1..base+M
    }

    void buildChords() {
        for (int sys = 0; sys < 2; ++sys) {
            chords[sys].clear();
            chords[sys].resize((size_t)arcOffset[sys].back());
            for (size_t c = 0; c < cycles[sys]->size(); ++c) {
                const auto& cyc = (*cycles[sys])[c];
                int n = (int)cyc.size();
                for (int j = 0; j < n; ++j) {
                    const TracePoint& in = cyc[j];
                    const TracePoint& out = cyc[(j + 1) % n];
                    ChordGeom g;
                    const auto& es = tri.sides(in.edge);
                    g.tri = in.viaFwd ? es.triFwd : es.triBwd;
                    int sIn = in.viaFwd ? es.slotFwd : es.slotBwd;
                    // exit slot: the slot of g.tri holding out.edge on the side
                    // opposite to the one `out` enters through
                    int sOut = -1;
                    for (int k = 0; k < 3; ++k) {
                        const EdgeRef& r = tri.tri(g.tri).side[k];
                        if (r.edge == out.edge && r.fwd == !out.viaFwd) { sOut = k; break; }
                    }
                    if (sOut < 0) throw std::logic_error("diagram: broken cycle step");
                    int slots[2] = {sIn, sOut};
                    int64_t pos[2] = {in.pos, out.pos};
                    int edges[2] = {in.edge, out.edge};
                    for (int q = 0; q < 2; ++q) {
                        auto sg = slotGeo(g.tri, slots[q]);
                        int64_t ji = jointIdx[sys][edges[q]][(size_t)(pos[q] - 1)];
                        int64_t lj = sg.fwd ? ji : sg.M + 1 - ji;
                        g.p[q] = slotPoint(slots[q], lj, sg.M);
                        g.rank[q] = slotRankBase(g.tri, slots[q]) + lj;
                        g.jointIdx[q] = ji;
                        g.edge[q] = edges[q];
                        g.slot[q] = slots[q];
                    }
                    g.dir = dirv(g.p[0], g.p[1]);
                    chords[sys][(size_t)(arcOffset[sys][c] + j)] = g;
                }
            }
        }
    }
};

} // namespace

void JointDiagram::build() {
    const Triangulation& tri = *tri_;

    // --- seed token orders by divergence walking ---
    order_.assign(tri.edgeCount(), {});
    for (int e = 0; e < tri.edgeCount(); ++e) {
        int64_t n0 = w_[0][e], n1 = w_[1][e];
        // exact arithmetic headroom: boundary denominators enter predicates
        // to the tenth power, which 256-bit comparisons cover up to ~1e6
        if (n0 + n1 > 999999)
            throw std::invalid_argument("diagram: more than 999999 strands on one edge");
        auto& ord = order_[e];
        ord.reserve((size_t)(n0 + n1));
        int64_t i = 1, j = 1;
        while (i <= n0 || j <= n1) {
            if (i <= n0 && (j > n1 || token_less(tri, w_[0], w_[1], e, i, j)))
                ord.emplace_back(0, i++);
            else
                ord.emplace_back(1, j++);
        }
    }

    // --- elimination loop ---
    int64_t lastCrossings = -1;
    for (;;) {
        buildArrangementAndRegions();
        int64_t nc = (int64_t)crossings_.size();
        if (lastCrossings >= 0 && nc >= lastCrossings)
            throw std::logic_error("diagram: bigon elimination did not reduce crossings");
        lastCrossings = nc;
        // look for empty bigons in the both-cut regions; removing one bigon
        // means swapping the adjacent token pair across each of its edge
        // intervals
        auto regs = regionizeInternal(true, true);
        std::vector<std::pair<int, int64_t>> swaps;
        // take every empty bigon that shares no token and no corner crossing
        // with one already claimed this round, so all swaps commute
        std::set<std::pair<int, int64_t>> claimed;
        std::set<int> claimedCorners;
        for (size_t r = 0; r < regs.pub.list.size(); ++r) {
            const auto& reg = regs.pub.list[r];
            if (reg.chi == 1 && reg.punctures == 0 && reg.corners == 1)
                throw std::logic_error("diagram: monogon region");
            if (!(reg.chi == 1 && reg.punctures == 0 && reg.corners == 2)) continue;
            bool ok = true;
            for (int v : regs.cornerVerts[r])
                if (claimedCorners.count(v)) ok = false;
            std::set<std::pair<int, int64_t>> mine;
            for (auto& [e, k] : regs.intervals[r]) {
                if (!ok) break;
                for (int64_t t : {k - 1, k}) {
                    if (claimed.count({e, t}) || !mine.insert({e, t}).second) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
            claimed.merge(mine);
            claimedCorners.insert(regs.cornerVerts[r].begin(), regs.cornerVerts[r].end());
            for (auto& iv : regs.intervals[r]) swaps.push_back(iv);
        }
        if (swaps.empty()) break;
        for (auto [e, k] : swaps) {
            if (k < 1 || k >= (int64_t)order_[e].size())
                throw std::logic_error("diagram: bigon interval at a corner");
            auto& ord = order_[e];
            if (ord[(size_t)k - 1].first == ord[(size_t)k].first)
                throw std::logic_error("diagram: bigon interval between same-system tokens");
            std::swap(ord[(size_t)k - 1], ord[(size_t)k]);
        }
        ++rounds_;
    }
}

// ---------------------------------------------------------------------------
// One full arrangement build for the current token order. Populates impl_,
// crossings_ and arcCross_.
// ---------------------------------------------------------------------------

void JointDiagram::buildArrangementAndRegions() {
    const Triangulation& tri = *tri_;
    auto impl = std::make_shared<Impl>();

    ArrBuilder B(tri, &w_[0], &w_[1], &cycles_[0], &cycles_[1], order_, arcOffset_);
    B.buildChords();

    // --- crossings: cross-system chords in the same triangle with interleaved
    // endpoint ranks ---
    std::vector<std::vector<int>> chordsInTri[2];
    for (int s = 0; s < 2; ++s) {
        chordsInTri[s].assign((size_t)tri.triangleCount(), {});
        for (size_t g = 0; g < B.chords[s].size(); ++g)
            chordsInTri[s][(size_t)B.chords[s][g].tri].push_back((int)g);
    }

    auto& xs = impl->cross;
    xs.clear();
    for (int t = 0; t < tri.triangleCount(); ++t) {
        for (int ga : chordsInTri[0][(size_t)t]) {
            const ChordGeom& A = B.chords[0][(size_t)ga];
            int64_t a1 = std::min(A.rank[0], A.rank[1]), a2 = std::max(A.rank[0], A.rank[1]);
            for (int gb : chordsInTri[1][(size_t)t]) {
                const ChordGeom& Bc = B.chords[1][(size_t)gb];
                bool in1 = a1 < Bc.rank[0] && Bc.rank[0] < a2;
                bool in2 = a1 < Bc.rank[1] && Bc.rank[1] < a2;
                if (in1 == in2) continue;
                Impl::Cross c;
                c.gArc[0] = ga;
                c.gArc[1] = gb;
                // parameter along A: cross(b1-a1, b2-b1) / cross(a2-a1, b2-b1),
                // denominators folded in exactly.
                {
                    Vec n1 = dirv(A.p[0], Bc.p[0]);
                    Vec d1 = Bc.dir;
                    i128 N = vcross(n1, d1);
                    i128 D = vcross(A.dir, d1);
                    // hidden den of n1: A.p[0].den * Bc.p[0].den; of A.dir:
                    // A.p[0].den * A.p[1].den. Shared factors cancel.
                    c.t[0] = Rat(N * A.p[1].den, D * Bc.p[0].den);
                }
                {
                    Vec n1 = dirv(Bc.p[0], A.p[0]);
                    i128 N = vcross(n1, A.dir);
                    i128 D = vcross(Bc.dir, A.dir);
                    c.t[1] = Rat(N * Bc.p[1].den, D * A.p[0].den);
                }
                c.sign = sgn(vcross(A.dir, Bc.dir));
                if (c.sign == 0) throw std::logic_error("diagram: collinear crossing");
                xs.push_back(c);
            }
        }
    }

    // --- order crossings along each chord (exact, with a deterministic
    // symbolic perturbation for concurrent chords) ---
    auto chordId = [&](int sys, int gArc) { return sys * (int)B.chords[0].size() + gArc + sys; };
    // ids merely need to be distinct and fixed; the formula above is fine.

    auto tieLess = [&](int sys, const ChordGeom& A, int idA, const Impl::Cross& x,
                       const Impl::Cross& y) -> bool {
        // x, y are crossings on chord A (system sys) at the same point.
        int osys = 1 - sys;
        const ChordGeom& Bc = B.chords[osys][(size_t)x.gArc[osys]];
        const ChordGeom& Cc = B.chords[osys][(size_t)y.gArc[osys]];
        int idB = chordId(osys, x.gArc[osys]);
        int idC = chordId(osys, y.gArc[osys]);
        int m = std::min(idA, std::min(idB, idC));
        if (m == idA) {
            // A shifts to its left: order by -cot of the angle to each chord.
            Rat vb(-vdot(A.dir, Bc.dir), vcross(A.dir, Bc.dir));
            Rat vc(-vdot(A.dir, Cc.dir), vcross(A.dir, Cc.dir));
            int c = cmpRat(vb, vc);
            if (c == 0) throw std::logic_error("diagram: unresolved crossing tie");
            return c < 0;
        }
        if (m == idB) return vcross(A.dir, Bc.dir) < 0;
        return vcross(A.dir, Cc.dir) > 0;
    };

    // crossings per chord
    std::vector<std::vector<int>> onChord[2];
    for (int s = 0; s < 2; ++s) onChord[s].assign(B.chords[s].size(), {});
    for (size_t i = 0; i < xs.size(); ++i) {
        onChord[0][(size_t)xs[i].gArc[0]].push_back((int)i);
        onChord[1][(size_t)xs[i].gArc[1]].push_back((int)i);
    }
    for (int s = 0; s < 2; ++s) {
        for (size_t g = 0; g < onChord[s].size(); ++g) {
            auto& v = onChord[s][(size_t)g];
            const ChordGeom& A = B.chords[s][(size_t)g];
            int idA = chordId(s, (int)g);
            std::sort(v.begin(), v.end(), [&](int i, int j) {
                int c = cmpRat(xs[(size_t)i].t[s], xs[(size_t)j].t[s]);
                if (c != 0) return c < 0;
                return tieLess(s, A, idA, xs[(size_t)i], xs[(size_t)j]);
            });
        }
    }

    // --- public crossing records ---
    crossings_.assign(xs.size(), Crossing{});
    for (int s = 0; s < 2; ++s) {
        arcCross_[s].assign(B.chords[s].size(), {});
        for (size_t g = 0; g < onChord[s].size(); ++g) {
            // locate comp/arc of global arc g
            int comp = (int)(std::upper_bound(arcOffset_[s].begin(), arcOffset_[s].end(), (int)g) -
                             arcOffset_[s].begin()) - 1;
            int arc = (int)g - arcOffset_[s][comp];
            for (size_t r = 0; r < onChord[s][g].size(); ++r) {
                Crossing& pc = crossings_[(size_t)onChord[s][g][r]];
                pc.comp[s] = comp;
                pc.arc[s] = arc;
                pc.rank[s] = (int)r;
                pc.sign = xs[(size_t)onChord[s][g][r]].sign;
            }
            arcCross_[s][g] = onChord[s][g];
        }
    }

    // --- planar faces per triangle ---
    auto& darts = impl->darts;
    auto& verts = impl->verts;
    impl->intervalDart.assign((size_t)tri.edgeCount(), {});
    for (int e = 0; e < tri.edgeCount(); ++e)
        impl->intervalDart[(size_t)e].assign(order_[(size_t)e].size() + 1, {-1, -1});
    impl->chordSegs[0].assign(B.chords[0].size(), {});
    impl->chordSegs[1].assign(B.chords[1].size(), {});

    std::vector<int> crossVert(xs.size(), -1);

    for (int t = 0; t < tri.triangleCount(); ++t) {
        int vBase = (int)verts.size();
        // vertices: corners 0..2, then tokens per slot, then crossings
        int64_t Ms[3];
        int64_t tokBase[3];
        for (int s = 0; s < 3; ++s) {
            Ms[s] = B.slotGeo(t, s).M;
        }
        for (int s = 0; s < 3; ++s) {
            Impl::Vert v;
            v.kind = 0; v.tri = t; v.a = s;
            verts.push_back(v);
        }
        for (int s = 0; s < 3; ++s) {
            auto sg = B.slotGeo(t, s);
            tokBase[s] = (int64_t)verts.size();
            for (int64_t lj = 1; lj <= Ms[s]; ++lj) {
                int64_t ji = sg.fwd ? lj : Ms[s] + 1 - lj;
                Impl::Vert v;
                v.kind = 1; v.tri = t; v.a = sg.edge; v.b = ji;
                verts.push_back(v);
            }
        }
        // boundary vertex id of (slot s, joint local lj); lj=0 -> corner s,
        // lj=M+1 -> corner s+1
        auto bVert = [&](int s, int64_t lj) -> int {
            if (lj == 0) return vBase + s;
            if (lj == Ms[s] + 1) return vBase + (s + 1) % 3;
            return (int)(tokBase[s] + lj - 1);
        };

        // segment darts of chords
        struct OutDart {
            int vert;
            Vec dir;
            int dart;
        };
        std::vector<OutDart> outs;

        auto addDartPair = [&](int v1, int v2, const Vec& d12) -> std::pair<int, int> {
            int a = (int)darts.size();
            Impl::Dart d1, d2;
            d1.head = v2; d2.head = v1;
            d1.twin = a + 1; d2.twin = a;
            darts.push_back(d1);
            darts.push_back(d2);
            outs.push_back({v1, d12, a});
            outs.push_back({v2, Vec{-d12.x, -d12.y}, a + 1});
            return {a, a + 1};
        };

        // boundary darts
        Vec sideDir[3];
        {
            Pt C[3] = {Pt{0, 0, 1}, Pt{1, 0, 1}, Pt{0, 1, 1}};
            for (int s = 0; s < 3; ++s) sideDir[s] = dirv(C[s], C[(s + 1) % 3]);
        }
        for (int s = 0; s < 3; ++s) {
            auto sg = B.slotGeo(t, s);
            for (int64_t l = 0; l <= Ms[s]; ++l) {
                auto [dc, dw] = addDartPair(bVert(s, l), bVert(s, l + 1), sideDir[s]);
                int64_t k = sg.fwd ? l : Ms[s] - l; // intrinsic interval index
                darts[(size_t)dc].type = 0;
                darts[(size_t)dc].edge = sg.edge;
                darts[(size_t)dc].interval = k;
                darts[(size_t)dc].ccw = true;
                darts[(size_t)dw].type = 0;
                darts[(size_t)dw].edge = sg.edge;
                darts[(size_t)dw].interval = k;
                darts[(size_t)dw].ccw = false;
                impl->intervalDart[(size_t)sg.edge][(size_t)k][sg.fwd ? 0 : 1] = dc;
            }
        }

        // chord segments and crossing vertices
        for (int sys = 0; sys < 2; ++sys) {
            for (int g : chordsInTri[sys][(size_t)t]) {
                const ChordGeom& A = B.chords[sys][(size_t)g];
                const auto& cl = onChord[sys][(size_t)g];
                // vertex ids along the chord
                std::vector<int> vseq;
                int64_t lj0 = A.rank[0] - B.slotRankBase(t, A.slot[0]);
                int64_t lj1 = A.rank[1] - B.slotRankBase(t, A.slot[1]);
                vseq.push_back(bVert(A.slot[0], lj0));
                for (int ci : cl) {
                    if (crossVert[(size_t)ci] == -1) {
                        crossVert[(size_t)ci] = (int)verts.size();
                        Impl::Vert v;
                        v.kind = 2; v.tri = t; v.a = ci;
                        verts.push_back(v);
                    }
                    vseq.push_back(crossVert[(size_t)ci]);
                }
                vseq.push_back(bVert(A.slot[1], lj1));
                for (size_t j = 0; j + 1 < vseq.size(); ++j) {
                    auto [dc, dr] = addDartPair(vseq[j], vseq[j + 1], A.dir);
                    darts[(size_t)dc].type = 1;
                    darts[(size_t)dc].sys = (int8_t)sys;
                    darts[(size_t)dc].gArc = g;
                    darts[(size_t)dc].co = true;
                    darts[(size_t)dr].type = 1;
                    darts[(size_t)dr].sys = (int8_t)sys;
                    darts[(size_t)dr].gArc = g;
                    darts[(size_t)dr].co = false;
                    impl->chordSegs[sys][(size_t)g].push_back(dc);
                    impl->segTotal += 1;
                }
            }
        }

        // rotations: group outgoing darts per vertex, sort by angle
        std::vector<std::vector<std::pair<Vec, int>>> rot(verts.size() - (size_t)vBase);
        for (auto& od : outs)
            rot[(size_t)(od.vert - vBase)].push_back({od.dir, od.dart});
        for (auto& rv : rot)
            std::sort(rv.begin(), rv.end(),
                      [&](const auto& a, const auto& b) { return angLess(a.first, b.first); });
        // next-in-face: predecessor of twin(d) in the rotation at head(d)
        for (auto& od : outs) {
            int d = od.dart;
            int h = darts[(size_t)d].head;
            auto& rv = rot[(size_t)(h - vBase)];
            int tw = darts[(size_t)d].twin;
            int idx = -1;
            for (size_t k = 0; k < rv.size(); ++k)
                if (rv[k].second == tw) { idx = (int)k; break; }
            if (idx < 0) throw std::logic_error("diagram: twin missing from rotation");
            int prev = (idx + (int)rv.size() - 1) % (int)rv.size();
            darts[(size_t)d].nif = rv[(size_t)prev].second;
        }
    }

    for (size_t i = 0; i < xs.size(); ++i) xs[i].vert = crossVert[i];

    // --- face labeling ---
    impl->faceN = 0;
    impl->faceOuter.clear();
    impl->faceTri.clear();
    for (auto& d : darts) d.face = -1;
    for (size_t d0 = 0; d0 < darts.size(); ++d0) {
        if (darts[d0].face != -1) continue;
        int f = impl->faceN++;
        bool outer = false;
        int d = (int)d0;
        do {
            darts[(size_t)d].face = f;
            if (darts[(size_t)d].type == 0 && !darts[(size_t)d].ccw) outer = true;
            d = darts[(size_t)d].nif;
        } while (d != (int)d0);
        impl->faceOuter.push_back(outer);
        impl->faceTri.push_back(verts[(size_t)darts[d0].head].tri);
    }

    for (int e = 0; e < tri.edgeCount(); ++e) {
        impl->tokenTotal += (int64_t)order_[(size_t)e].size();
        impl->intervalTotal += (int64_t)order_[(size_t)e].size() + 1;
    }

    impl_ = impl;

    // --- global Euler check: catches any inconsistent face structure ---
    int64_t V = tri.spec().punctures + impl->tokenTotal + (int64_t)xs.size();
    int64_t E = impl->intervalTotal + impl->segTotal;
    int64_t F = 0;
    for (int f = 0; f < impl->faceN; ++f)
        if (!impl->faceOuter[(size_t)f]) ++F;
    int64_t chi = V - E + F;
    if (chi != 2 - 2 * tri.spec().genus)
        throw std::logic_error("diagram: arrangement Euler characteristic " +
                               std::to_string((long long)chi) + " != " +
                               std::to_string(2 - 2 * tri.spec().genus));
}

// ---------------------------------------------------------------------------
// Regions: union-find over interior faces, glued across edge intervals and
// (for transparent system 1) across its segments.
// ---------------------------------------------------------------------------

namespace {
struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { while (p[(size_t)x] != x) x = p[(size_t)x] = p[(size_t)p[(size_t)x]]; return x; }
    void uni(int a, int b) { p[(size_t)find(a)] = find(b); }
};
} // namespace

JointDiagram::RegionsFull JointDiagram::regionizeInternal(bool cutB, bool wantIntervals) const {
    const Triangulation& tri = *tri_;
    const Impl& im = *impl_;

    DSU dsu(im.faceN);
    for (int e = 0; e < tri.edgeCount(); ++e) {
        for (auto& iv : im.intervalDart[(size_t)e]) {
            int f1 = im.darts[(size_t)iv[0]].face;
            int f2 = im.darts[(size_t)iv[1]].face;
            dsu.uni(f1, f2);
        }
    }
    if (!cutB) {
        for (const auto& segs : im.chordSegs[1])
            for (int d : segs)
                dsu.uni(im.darts[(size_t)d].face, im.darts[(size_t)im.darts[(size_t)d].twin].face);
    }

    // compact region ids over interior faces
    std::vector<int> regOf(im.faceN, -1);
    int nreg = 0;
    for (int f = 0; f < im.faceN; ++f) {
        if (im.faceOuter[(size_t)f]) continue;
        int r = dsu.find(f);
        if (regOf[(size_t)r] == -1) regOf[(size_t)r] = nreg++;
    }
    auto region = [&](int f) { return regOf[(size_t)dsu.find(f)]; };

    RegionsFull out;
    out.pub.list.assign((size_t)nreg, Region{});
    out.intervals.assign((size_t)nreg, {});
    out.cornerVerts.assign((size_t)nreg, {});

    std::vector<int64_t> I(nreg, 0), Eseg(nreg, 0), Vtok(nreg, 0), Q(nreg, 0), P(nreg, 0),
        Fc(nreg, 0);

    for (int f = 0; f < im.faceN; ++f)
        if (!im.faceOuter[(size_t)f]) Fc[(size_t)region(f)] += 1;

    for (int e = 0; e < tri.edgeCount(); ++e) {
        const auto& ivs = im.intervalDart[(size_t)e];
        int64_t M = (int64_t)ivs.size() - 1;
        std::vector<int> ivReg(ivs.size());
        for (size_t k = 0; k < ivs.size(); ++k) {
            ivReg[k] = region(im.darts[(size_t)ivs[k][0]].face);
            I[(size_t)ivReg[k]] += 1;
            if (wantIntervals) out.intervals[(size_t)ivReg[k]].push_back({e, (int64_t)k});
        }
        for (int64_t j = 1; j <= M; ++j) {
            auto [sys, pos] = order_[(size_t)e][(size_t)(j - 1)];
            if (cutB || sys == 0) {
                Vtok[(size_t)ivReg[(size_t)(j - 1)]] += 1;
                Vtok[(size_t)ivReg[(size_t)j]] += 1;
            } else {
                Vtok[(size_t)ivReg[(size_t)j]] += 1; // interior vertex, once
            }
        }
    }

    for (size_t d = 0; d < im.darts.size(); ++d) {
        const auto& dr = im.darts[d];
        if (dr.type != 1) continue;
        if (im.faceOuter[(size_t)dr.face]) throw std::logic_error("diagram: segment on outer face");
        int r = region(dr.face);
        if (cutB || dr.sys == 0) Eseg[(size_t)r] += 1;
        else if (dr.co) Eseg[(size_t)r] += 1; // interior 1-cell, once
        if (im.verts[(size_t)dr.head].kind == 2) {
            Q[(size_t)r] += 1;
            if (wantIntervals) out.cornerVerts[(size_t)r].push_back(dr.head);
        }
    }

    // punctures: interior corner faces per triangle corner, grouped by class
    std::vector<int> vertexRegion((size_t)tri.vertexCount(), -1);
    for (size_t d = 0; d < im.darts.size(); ++d) {
        const auto& dr = im.darts[d];
        if (dr.type != 0 || !dr.ccw) continue;
        const auto& hv = im.verts[(size_t)dr.head];
        if (hv.kind != 0) continue;
        int cls = tri.cornerVertex(hv.tri, hv.a);
        int r = region(dr.face);
        if (vertexRegion[(size_t)cls] == -1) vertexRegion[(size_t)cls] = r;
        else if (vertexRegion[(size_t)cls] != r)
            throw std::logic_error("diagram: puncture fan spans regions");
    }
    for (int v = 0; v < tri.vertexCount(); ++v) {
        if (vertexRegion[(size_t)v] < 0) throw std::logic_error("diagram: lost puncture");
        P[(size_t)vertexRegion[(size_t)v]] += 1;
    }

    for (int r = 0; r < nreg; ++r) {
        auto& reg = out.pub.list[(size_t)r];
        int64_t vc;
        if (cutB) {
            vc = Q[(size_t)r];
            reg.corners = Q[(size_t)r];
        } else {
            if (Q[(size_t)r] % 2 != 0) throw std::logic_error("diagram: odd quadrant count");
            vc = Q[(size_t)r] / 2;
            reg.corners = 0;
        }
        reg.punctures = (int)P[(size_t)r];
        reg.faces = Fc[(size_t)r];
        reg.chi = (P[(size_t)r] + Vtok[(size_t)r] + vc) - (I[(size_t)r] + Eseg[(size_t)r]) +
                  Fc[(size_t)r];
    }

    // --- boundary walks ---
    std::vector<char> seen(im.darts.size(), 0);
    // The stored interval darts are the ccw ones; the ccw darts of the two
    // sides of an edge point in opposite directions along it, so the ccw
    // dart of the other triangle always heads back to the vertex the walk is
    // turning around.
    auto otherSide = [&](int d) -> int {
        const auto& dr = im.darts[(size_t)d];
        auto& iv = im.intervalDart[(size_t)dr.edge][(size_t)dr.interval];
        int dc = dr.ccw ? d : im.darts[(size_t)d].twin;
        return iv[0] == dc ? iv[1] : iv[0];
    };

    for (size_t d0 = 0; d0 < im.darts.size(); ++d0) {
        const auto& dr0 = im.darts[d0];
        if (dr0.type != 1 || seen[d0]) continue;
        if (!cutB && dr0.sys != 0) continue;
        int r = region(dr0.face);
        std::vector<int> walkEdges;
        struct CrossRec { int cross; int side; int64_t pos; };
        std::vector<CrossRec> walkCross;
        bool sideLeft = dr0.co;
        int d = (int)d0;
        do {
            seen[(size_t)d] = 1;
            int w = im.darts[(size_t)d].nif;
            for (;;) {
                const auto& wr = im.darts[(size_t)w];
                if (wr.type == 1) {
                    if (cutB || wr.sys == 0) break;
                    // transparent crossing: record and pass through
                    int tailVert = im.darts[(size_t)wr.twin].head;
                    const auto& tv = im.verts[(size_t)tailVert];
                    if (tv.kind == 2)
                        walkCross.push_back({tv.a, sideLeft ? 0 : 1, (int64_t)walkEdges.size()});
                    w = im.darts[(size_t)wr.twin].nif;
                } else {
                    walkEdges.push_back(wr.edge);
                    w = im.darts[(size_t)otherSide(w)].nif;
                }
            }
            d = w;
        } while (d != (int)d0);

        auto& reg = out.pub.list[(size_t)r];
        int walkIdx = (int)reg.boundaryWalks.size();
        reg.boundaryWalks.push_back(std::move(walkEdges));
        if (!cutB) {
            int s = 0, g = im.darts[d0].gArc;
            int comp = (int)(std::upper_bound(arcOffset_[s].begin(), arcOffset_[s].end(), g) -
                             arcOffset_[s].begin()) - 1;
            reg.circleLabels.push_back({comp, sideLeft ? 0 : 1});
            for (size_t wi = 0; wi < walkCross.size(); ++wi) {
                const auto& wc = walkCross[wi];
                out.pub.circleOf[{wc.cross, wc.side}] =
                    CirclePos{r, walkIdx, wc.pos, (int64_t)wi};
            }
        }
    }

    // arc regions for transparent system 1
    if (!cutB) {
        out.pub.arcRegion1.assign(im.chordSegs[1].size(), -1);
        for (size_t g = 0; g < im.chordSegs[1].size(); ++g) {
            if (im.chordSegs[1][g].empty()) continue;
            out.pub.arcRegion1[g] = region(im.darts[(size_t)im.chordSegs[1][g][0]].face);
        }
    }

    return out;
}

JointDiagram::Regions JointDiagram::regionize(bool cutB) const {
    return regionizeInternal(cutB, false).pub;
}

// ---------------------------------------------------------------------------
// Closed-walk reduction.
// ---------------------------------------------------------------------------

TracedComponent reduce_closed_walk(const Triangulation& tri, std::vector<int> walkEdges) {
    bool changed = true;
    while (changed && walkEdges.size() >= 2) {
        changed = false;
        size_t n = walkEdges.size();
        for (size_t i = 0; i < n; ++i) {
            size_t j = (i + 1) % n;
            if (walkEdges[i] != walkEdges[j]) continue;
            // erase the higher index first so the lower one stays valid
            walkEdges.erase(walkEdges.begin() + (long)std::max(i, j));
            walkEdges.erase(walkEdges.begin() + (long)std::min(i, j));
            changed = true;
            break;
        }
    }
    TracedComponent out;
    if (walkEdges.empty()) return out;
    out.weights.assign((size_t)tri.edgeCount(), 0);
    if (walkEdges.size() == 1) throw std::logic_error("walk: odd reduced walk");
    for (int e : walkEdges) out.weights[(size_t)e] += 1;
    auto comps = trace_components(tri, out.weights);
    if (comps.size() != 1)
        throw std::logic_error("walk: reduced walk traces to " + std::to_string(comps.size()) +
                               " components");
    return comps[0];
}

} // namespace curvelab
