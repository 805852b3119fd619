#include "curvelab/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace curvelab {

namespace {

Weights sum_level(const std::vector<Weights>& vs) {
    Weights s(vs.at(0).size(), 0);
    for (const Weights& w : vs)
        for (size_t e = 0; e < s.size(); ++e) s[e] += w[e];
    return s;
}

// T_alpha acts on chart slopes as (p, q) -> (p + ca*q, q) and T_beta as
// (p, q) -> (p, q + cb*p): the chart curves sit at (1,0), (0,1) and (1,1),
// and a twist about a chart curve fixes its own slope and shears the rest.
// The shear constants are measured from single-twist images.
struct WindowTwists {
    int64_t ca = 0, cb = 0;
};

WindowTwists measure_twists(const Triangulation& tri, const FareyChart& ch) {
    WindowTwists wt;
    auto tb = chart_slope(tri, ch, dehn_twist(tri, ch.beta, ch.alpha, 1));
    auto ta = chart_slope(tri, ch, dehn_twist(tri, ch.alpha, ch.beta, 1));
    if (!tb || !ta) throw std::logic_error("window twists: twisted chart curve left the chart");
    if (tb->q != 1 || std::abs(ta->p) != 1)
        throw std::logic_error("window twists: unexpected twist image");
    wt.ca = tb->p;
    wt.cb = ta->p > 0 ? ta->q : -ta->q;
    // Cross-check on the third chart curve: T_alpha(delta) -> (1 + ca, 1).
    auto td = chart_slope(tri, ch, dehn_twist(tri, ch.delta, ch.alpha, 1));
    if (!td || *td != canonical_slope(1 + wt.ca, 1))
        throw std::logic_error("window twists: shear constant inconsistent");
    return wt;
}

WindowTwists twists_for(const Triangulation& tri, const FareyChart& ch) {
    static std::mutex mu;
    static std::map<std::vector<Weights>, WindowTwists> cache;
    std::vector<Weights> key = {ch.alpha, ch.beta, ch.delta};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    WindowTwists wt = measure_twists(tri, ch);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::move(key), wt);
    return wt;
}

int64_t nearest_k(int64_t p, int64_t d) { // argmin_k |p + k*d|, d != 0
    int64_t k = (int64_t)std::llround(-(double)p / (double)d);
    int64_t best = k;
    for (int64_t c : {k - 1, k, k + 1})
        if (std::abs(p + c * d) < std::abs(p + best * d)) best = c;
    return best;
}

// Farthest k (in direction d from inside point `start`) with fk(k) <= bound,
// for fk convex in k. Secant jumps from the inside certify skipped points,
// so probes beyond the sublevel boundary stay near it.
template <class F>
int64_t convex_edge(F&& fk, int64_t bound, int d, int64_t start, int64_t cap) {
    int64_t kin = 0; // offsets from start, in units of d
    int64_t fin = fk(start);
    int64_t kprev = 0, fprev = fin;
    int64_t out = -1; // least known-outside offset, -1 while unknown
    for (;;) {
        if (out >= 0 && out - kin <= 1) return start + d * kin;
        int64_t next;
        if (out < 0) {
            int64_t g = kin > kprev ? (fin - fprev) / (kin - kprev) : 0;
            int64_t jump = g > 0 ? (bound - fin) / g + 1 : 1;
            // keep probes within a doubling of the boundary: curves grow
            // with |k|, so far overshoots are the expensive evaluations
            next = kin + std::clamp<int64_t>(jump, 1, std::max<int64_t>(8, kin));
        } else {
            next = kin + (out - kin) / 2;
        }
        if (next > cap)
            throw std::invalid_argument(
                "link_candidates: unbounded sublevel set (pair does not fill)");
        int64_t fn = fk(start + d * next);
        if (fn <= bound) {
            kprev = kin;
            fprev = fin;
            kin = next;
            fin = fn;
        } else {
            out = next;
        }
    }
}

void ext_gcd(int64_t a, int64_t b, int64_t& x, int64_t& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return;
    }
    int64_t x1, y1;
    ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
}

} // namespace

Weights curve_in_window(const Triangulation& tri, const Domain& dom, const Slope& s0) {
    const FareyChart& ch = dom.chart;
    WindowTwists wt = twists_for(tri, ch);
    Slope s = canonical_slope(s0.p, s0.q);
    int64_t p = s.p, q = s.q;

    struct Step {
        bool aboutAlpha;
        int64_t k;
    };
    std::vector<Step> word;
    auto applyA = [&](int64_t k) {
        p += k * wt.ca * q;
        word.push_back({true, k});
    };
    auto applyB = [&](int64_t k) {
        q += k * wt.cb * p;
        word.push_back({false, k});
    };

    for (int guard = 0;; ++guard) {
        if (guard > 512) throw std::runtime_error("curve_in_window: slope reduction diverged");
        if (q == 0 || p == 0 || (std::abs(p) == 1 && std::abs(q) == 1)) break;
        int64_t ka = nearest_k(p, wt.ca * q);
        int64_t kb = nearest_k(q, wt.cb * p);
        if (ka != 0 && std::abs(p + ka * wt.ca * q) < std::abs(p)) applyA(ka);
        else if (kb != 0 && std::abs(q + kb * wt.cb * p) < std::abs(q)) applyB(kb);
        else throw std::logic_error("curve_in_window: slope reduction stalled");
    }
    if (std::abs(p) == 1 && std::abs(q) == 1 && p != q) {
        // (1,-1) is not a chart slope; one more shear carries it to (1,1).
        if (2 % wt.ca != 0) throw std::logic_error("curve_in_window: cannot fix slope sign");
        applyA(2 / wt.ca);
    }

    Weights cur;
    if (q == 0) cur = ch.alpha;
    else if (p == 0) cur = ch.beta;
    else cur = ch.delta;
    // The recorded word carries s to the seed slope, so the inverse word,
    // applied innermost-first, carries the seed curve back to slope s.
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        cur = dehn_twist(tri, cur, it->aboutAlpha ? ch.alpha : ch.beta, -it->k);

    auto got = chart_slope(tri, ch, cur);
    if (!got || *got != s) throw std::logic_error("curve_in_window: slope verification failed");
    return cur;
}

CandidateSet link_candidates(const Triangulation& tri, const Weights& x, const Weights& y,
                             int64_t bound) {
    // Surgering y along x yields curves that actually live in x's window,
    // which seeds the chart search when no small curve misses x.
    std::vector<Weights> hints{y};
    for (auto& o : surgery_outcomes(tri, x, y).outcomes) hints.push_back(o.curve);
    auto doms = domains_of(tri, x, hints);
    if (doms.size() != 1)
        throw std::invalid_argument("link_candidates: expected one complexity-one window");
    const Domain& dom = doms[0];

    CandidateSet out;
    out.bound = bound;
    out.window = dom;

    std::map<std::pair<int64_t, int64_t>, Weights> curves;
    std::map<std::pair<int64_t, int64_t>, int64_t> fval;
    auto key = [](const Slope& s) { return std::make_pair(s.p, s.q); };
    auto curveOf = [&](const Slope& s) -> const Weights& {
        auto it = curves.find(key(s));
        if (it == curves.end()) it = curves.emplace(key(s), curve_in_window(tri, dom, s)).first;
        return it->second;
    };
    auto f = [&](const Slope& s) -> int64_t {
        auto it = fval.find(key(s));
        if (it == fval.end())
            it = fval.emplace(key(s), intersection_number(tri, curveOf(s), y)).first;
        return it->second;
    };

    // The Farey neighbors of s are exactly the slopes t0 + k*s where
    // cross(s, t0) = 1; f is convex along this family, so its sublevel set
    // is one interval of k, located by descent from k = 0.
    struct Scan {
        std::vector<Slope> below;
        Slope best;
        int64_t bestF = 0;
    };
    auto scan_family = [&](const Slope& s) {
        int64_t a, b;
        ext_gcd(s.p, s.q, a, b); // a*s.p + b*s.q = 1
        auto at = [&](int64_t k) { return canonical_slope(-b + k * s.p, a + k * s.q); };
        auto fk = [&](int64_t k) { return f(at(k)); };
        // Bracket the minimum by doubling steps, then shrink by ternary
        // search (convexity makes fk unimodal in k).
        int64_t lo = -1, hi = 1;
        int dir = fk(1) < fk(0) ? 1 : (fk(-1) < fk(0) ? -1 : 0);
        if (dir != 0) {
            int64_t prev = 0, cur = dir;
            while (fk(cur * 2) < fk(cur)) {
                prev = cur;
                cur *= 2;
                if (std::abs(cur) > ((int64_t)1 << 40))
                    throw std::runtime_error("link_candidates: descent diverged");
            }
            lo = std::min(prev, cur * 2);
            hi = std::max(prev, cur * 2);
        }
        while (hi - lo > 2) {
            int64_t m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
            if (fk(m1) <= fk(m2)) hi = m2;
            else lo = m1;
        }
        int64_t k = lo;
        for (int64_t j = lo + 1; j <= hi; ++j)
            if (fk(j) < fk(k)) k = j;

        Scan sc;
        sc.best = at(k);
        sc.bestF = fk(k);
        if (sc.bestF <= bound) {
            // The sublevel set is the interval [left, right]: push its edge
            // out by doubling, then pull back by halving.
            // With a filling pair f grows at least linearly along the
            // family, so the interval stays within a few multiples of the
            // bound; a longer run means some window curve misses y.
            int64_t cap = 64 * (bound + 2);
            int64_t right = convex_edge(fk, bound, +1, k, cap);
            int64_t left = convex_edge(fk, bound, -1, k, cap);
            for (int64_t j = left; j <= right; ++j) sc.below.push_back(at(j));
        }
        return sc;
    };

    // The sublevel interval of the family of s through a neighbor already
    // known to lie in the sublevel set: no need to locate the family
    // minimum, just push the edges out from the neighbor.
    auto below_through = [&](const Slope& s, const Slope& base) {
        auto at = [&](int64_t k) { return canonical_slope(base.p + k * s.p, base.q + k * s.q); };
        auto fk = [&](int64_t k) { return f(at(k)); };
        int64_t cap = 64 * (bound + 2);
        std::vector<Slope> below;
        int64_t right = convex_edge(fk, bound, +1, 0, cap);
        int64_t left = convex_edge(fk, bound, -1, 0, cap);
        for (int64_t j = left; j <= right; ++j) below.push_back(at(j));
        return below;
    };

    std::set<std::pair<int64_t, int64_t>> seen;
    struct QItem {
        Slope s, parent;
    };
    std::vector<QItem> queue;
    // Slopes from a `below` list need no re-evaluation: the interval
    // endpoints were checked and convexity covers the interior.
    auto accept = [&](const Slope& s, const Slope& parent) {
        if (seen.insert(key(s)).second) queue.push_back({s, parent});
    };

    // Projection slopes of y land at or near the minimum of f; the chart
    // slopes back them up (descending from them when out of the sublevel).
    std::vector<Slope> seeds = project(tri, dom, y);
    for (auto s : {canonical_slope(1, 0), canonical_slope(0, 1), canonical_slope(1, 1)})
        seeds.push_back(s);
    for (Slope s : seeds) {
        if (!seen.empty()) break; // one connected sublevel set: already found
        for (int guard = 0; guard < 4096 && f(s) > bound; ++guard) {
            Scan sc = scan_family(s);
            if (sc.bestF >= f(s)) break;
            s = sc.best;
        }
        if (f(s) > bound) continue;
        seen.insert(key(s));
        for (const Slope& t : scan_family(s).below) accept(t, s);
    }
    while (!queue.empty()) {
        auto [s, parent] = queue.back();
        queue.pop_back();
        for (const Slope& t : below_through(s, parent)) accept(t, s);
        if (seen.size() > 20000) throw std::runtime_error("link_candidates: budget exceeded");
    }

    for (const auto& k : seen) out.slopes.push_back(Slope{k.first, k.second});
    std::sort(out.slopes.begin(), out.slopes.end(),
              [](const Slope& a, const Slope& b) { return std::tie(a.q, a.p) < std::tie(b.q, b.p); });
    for (const Slope& s : out.slopes) out.curves.push_back(curveOf(s));
    return out;
}

DistanceResult distance(const Triangulation& tri, const Weights& x, const Weights& y,
                        int64_t R) {
    NormalCurve::validate(tri, x);
    NormalCurve::validate(tri, y);
    DistanceResult res;
    res.R = R;
    if (x == y) {
        res.lower = res.upper = 0;
        res.path = {x};
        return res;
    }
    int64_t ixy = intersection_number(tri, x, y);
    if (ixy == 0) {
        res.lower = res.upper = 1;
        res.path = {x, y};
        return res;
    }

    SurfaceSpec spec = tri.spec();
    if (spec.complexity() == 1) {
        auto slopeOf = [&](const Weights& w) {
            auto s = spec.genus == 1 ? slope_of_curve11(w) : slope_of_curve04(w);
            if (!s || s->second != 1) throw std::logic_error("distance: bad slope curve");
            return s->first;
        };
        auto curveOf = [&](const Slope& s) {
            return spec.genus == 1 ? curve_from_slope11(s) : curve_from_slope04(s);
        };
        std::vector<Slope> path = farey_path(slopeOf(x), slopeOf(y));
        res.lower = res.upper = (int64_t)path.size() - 1;
        for (const Slope& s : path) res.path.push_back(curveOf(s));
        return res;
    }

    if (!fills(tri, x, y)) {
        res.lower = res.upper = 2;
        res.path = {x, neighborhood_boundary(tri, x, y).at(0), y};
        return res;
    }

    // Filling pairs: d >= 3. A non-filling candidate neighbor settles d = 3,
    // and cheap small-bound sweeps usually find one before the full
    // candidate sweep at the growth bound R*i is needed.
    CandidateSet Lx;
    for (int64_t B : {ixy, R * ixy}) {
        if (B > R * ixy) continue;
        Lx = link_candidates(tri, x, y, B);
        std::vector<size_t> order(Lx.curves.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return intersection_number(tri, Lx.curves[a], y) <
                   intersection_number(tri, Lx.curves[b], y);
        });
        for (size_t i : order) {
            const Weights& v1 = Lx.curves[i];
            if (fills(tri, v1, y)) continue;
            res.lower = res.upper = 3;
            res.path = {x, v1, neighborhood_boundary(tri, v1, y).at(0), y};
            return res;
        }
        if (B == R * ixy) break;
    }

    // Every candidate neighbor of x fills with y: d >= 4, conditional on
    // the candidate set containing some vertex of a geodesic.
    res.conditional = true;
    CandidateSet Ly = link_candidates(tri, y, x, R * ixy);
    for (const Weights& v1 : Lx.curves)
        for (const Weights& v3 : Ly.curves) {
            if (fills(tri, v1, v3)) continue;
            res.lower = res.upper = 4;
            res.path = {x, v1, neighborhood_boundary(tri, v1, v3).at(0), v3, y};
            return res;
        }

    // d >= 5: bracket with a recursive upper bound through the candidate
    // neighbor of x closest to y.
    res.lower = 5;
    const Weights* best = nullptr;
    int64_t bestI = 0;
    for (const Weights& v1 : Lx.curves) {
        int64_t iv = intersection_number(tri, v1, y);
        if (!best || iv < bestI) {
            best = &v1;
            bestI = iv;
        }
    }
    if (!best) throw std::runtime_error("distance: empty candidate link");
    DistanceResult sub = distance(tri, *best, y, R);
    if (sub.upper > 30) throw std::runtime_error("distance: upper-bound recursion diverged");
    res.upper = sub.upper + 1;
    res.path = {x};
    res.path.insert(res.path.end(), sub.path.begin(), sub.path.end());
    return res;
}

TightGeodesic tight_geodesic(const Triangulation& tri, const Weights& x, const Weights& y,
                             int64_t R) {
    TightGeodesic g;
    g.dist = distance(tri, x, y, R);
    if (!g.dist.exact()) throw std::runtime_error("tight_geodesic: distance not certified");
    int d = (int)g.dist.upper;
    g.V.assign(d + 1, {});
    for (int i = 0; i <= d; ++i) g.V[i] = {g.dist.path[i]};

    // Gauss-Seidel tightening: replace each interior level with the
    // neighborhood boundary of its neighbors until nothing moves. On a
    // complexity-one surface every geodesic is tight, so the path stands.
    bool settled = (d < 2) || tri.spec().complexity() == 1;
    for (int pass = 0; pass < 20 && !settled; ++pass) {
        settled = true;
        for (int i = 1; i < d; ++i) {
            std::vector<Weights> nb =
                neighborhood_boundary(tri, sum_level(g.V[i - 1]), sum_level(g.V[i + 1]));
            if (nb.empty()) throw std::runtime_error("tight_geodesic: neighbors fill");
            std::sort(nb.begin(), nb.end());
            if (nb != g.V[i]) {
                g.V[i] = nb;
                settled = false;
            }
        }
    }
    if (!settled) throw std::runtime_error("tight_geodesic: tightening did not settle");
    for (int i = 0; i <= d; ++i) g.reps.push_back(g.V[i].front());
    return g;
}

TightCheck is_tight(const Triangulation& tri, const TightGeodesic& g) {
    TightCheck c;
    auto fail = [&](int i, const std::string& r) {
        c.ok = false;
        c.failIndex = i;
        c.reason = r;
        return c;
    };
    int n = (int)g.V.size();
    if (n == 0) return fail(-1, "empty record");
    int D = n - 1;
    if (g.V.front().size() != 1 || g.V.back().size() != 1)
        return fail(0, "endpoints must be single curves");
    if ((int)g.reps.size() != n) return fail(-1, "one representative per level required");
    for (int i = 0; i < n; ++i) {
        if (g.V[i].empty()) return fail(i, "empty level");
        if (std::find(g.V[i].begin(), g.V[i].end(), g.reps[i]) == g.V[i].end())
            return fail(i, "representative not in its level");
        for (size_t a = 0; a < g.V[i].size(); ++a)
            for (size_t b = a + 1; b < g.V[i].size(); ++b) {
                if (g.V[i][a] == g.V[i][b]) return fail(i, "repeated component in a level");
                if (intersection_number(tri, g.V[i][a], g.V[i][b]) != 0)
                    return fail(i, "level is not a multicurve");
            }
    }
    // Complexity one: adjacency in the Farey graph, every geodesic tight.
    if (tri.spec().complexity() == 1) {
        bool torus = tri.spec().genus == 1;
        std::vector<Slope> s((size_t)n);
        for (int i = 0; i < n; ++i) {
            if (g.V[(size_t)i].size() != 1)
                return fail(i, "levels on a complexity-one surface are single curves");
            auto got = torus ? slope_of_curve11(g.V[(size_t)i][0])
                             : slope_of_curve04(g.V[(size_t)i][0]);
            if (!got || got->second != 1) return fail(i, "level is not a slope curve");
            s[(size_t)i] = got->first;
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (farey_distance(s[(size_t)i], s[(size_t)j]) != j - i)
                    return fail(j, "levels violate the multigeodesic property");
        return c;
    }

    // Pairwise distance pattern d(v_i, v_j) = |i - j| across components.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (const Weights& a : g.V[i])
                for (const Weights& b : g.V[j]) {
                    if (j - i == 1) {
                        if (a == b) return fail(j, "adjacent levels share a curve");
                        if (intersection_number(tri, a, b) != 0)
                            return fail(j, "adjacent levels intersect");
                    } else if (j - i == 2) {
                        if (intersection_number(tri, a, b) == 0)
                            return fail(j, "levels two apart are disjoint");
                        if (fills(tri, a, b)) return fail(j, "levels two apart fill");
                    } else {
                        if (!fills(tri, a, b)) return fail(j, "distant levels do not fill");
                    }
                }
    for (int i = 1; i < D; ++i) {
        std::vector<Weights> nb =
            neighborhood_boundary(tri, sum_level(g.V[i - 1]), sum_level(g.V[i + 1]));
        std::sort(nb.begin(), nb.end());
        std::vector<Weights> have = g.V[i];
        std::sort(have.begin(), have.end());
        if (nb != have) return fail(i, "level is not the neighborhood boundary of its neighbors");
    }
    return c;
}

Lemma25Report lemma25_check(const Triangulation& tri, const TightGeodesic& g, const Domain& Z,
                            int64_t M) {
    Lemma25Report rep;
    const auto& v = g.reps;
    int n = (int)v.size();
    std::vector<bool> hits(n);
    for (int i = 0; i < n; ++i) hits[i] = !project(tri, Z, v[i]).empty();
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            if (!hits[p] || !hits[q] || !hits[0] || !hits[n - 1]) {
                ++rep.skipped;
                continue;
            }
            if (subsurface_distance(tri, Z, v[p], v[q]) <= M) {
                ++rep.vacuous;
                continue;
            }
            bool ok = subsurface_distance(tri, Z, v[0], v[p]) <= M &&
                      subsurface_distance(tri, Z, v[q], v[n - 1]) <= M;
            ++(ok ? rep.active : rep.violated);
        }
    return rep;
}

Lemma25Report lemma25_check_annular(const Triangulation& tri, const TightGeodesic& g,
                                    const Weights& core, int64_t M) {
    Lemma25Report rep;
    const auto& v = g.reps;
    int n = (int)v.size();
    std::vector<bool> hits(n);
    for (int i = 0; i < n; ++i)
        hits[i] = v[i] != core && intersection_number(tri, core, v[i]) > 0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            if (!hits[p] || !hits[q] || !hits[0] || !hits[n - 1]) {
                ++rep.skipped;
                continue;
            }
            if (annular_distance(tri, core, v[p], v[q]) <= M) {
                ++rep.vacuous;
                continue;
            }
            bool ok = annular_distance(tri, core, v[0], v[p]) <= M &&
                      annular_distance(tri, core, v[q], v[n - 1]) <= M;
            ++(ok ? rep.active : rep.violated);
        }
    return rep;
}

std::vector<int> theorem12_violations(const Triangulation& tri, const TightGeodesic& g,
                                      int64_t R) {
    std::vector<int> bad;
    const auto& v = g.reps;
    int n = (int)v.size();
    if (n == 0) return bad;
    int64_t ixy = intersection_number(tri, v.front(), v.back());
    int64_t powR = 1;
    for (int p = 0; p < n; ++p) {
        if (intersection_number(tri, v[p], v.back()) > powR * ixy) bad.push_back(p);
        if (powR <= (int64_t)1 << 40) powR *= R;
    }
    return bad;
}

} // namespace curvelab
