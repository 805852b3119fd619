#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvelab/geodesic.hpp"

#include <map>
#include <queue>
#include <set>

using namespace curvelab;

namespace {

// All canonical slopes with |p|, |q| <= lim.
std::vector<Slope> slopes_upto(int64_t lim) {
    std::vector<Slope> out;
    for (int64_t p = -lim; p <= lim; ++p)
        for (int64_t q = 0; q <= lim; ++q) {
            if (p == 0 && q == 0) continue;
            Slope s = canonical_slope(p, q);
            if (std::abs(s.p) != std::abs(p) || s.q != std::abs(q)) continue; // not coprime
            if (out.empty() || !(out.back() == s))
                if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
        }
    return out;
}

// Exhaustive BFS distance in the Farey graph restricted to |p|, |q| <= box.
// The box is generous enough that geodesics between small slopes stay inside.
int bfs_farey(const Slope& a, const Slope& b, int64_t box) {
    if (a == b) return 0;
    std::map<std::pair<int64_t, int64_t>, int> dist;
    std::queue<Slope> q;
    dist[{a.p, a.q}] = 0;
    q.push(a);
    while (!q.empty()) {
        Slope s = q.front();
        q.pop();
        int d = dist[{s.p, s.q}];
        for (int64_t p = -box; p <= box; ++p)
            for (int64_t qq = 0; qq <= box; ++qq) {
                if (std::abs(s.p * qq - s.q * p) != 1) continue;
                Slope t = canonical_slope(p, qq);
                if (dist.count({t.p, t.q})) continue;
                if (t == b) return d + 1;
                dist[{t.p, t.q}] = d + 1;
                q.push(t);
            }
    }
    return -1;
}

const Weights kX05 = {0, 1, 1, 0, 0, 1, 1, 1, 0};
const Weights kY05 = {1, 1, 2, 1, 2, 1, 0, 1, 2}; // fills with kX05 at distance 3

} // namespace

TEST_CASE("complexity-one distance agrees with exhaustive Farey search") {
    auto tri = standard_triangulation(SurfaceSpec{1, 1});
    auto ss = slopes_upto(12);
    // spot-check farey_distance against the blind BFS oracle
    for (size_t i = 0; i < ss.size(); i += 9)
        for (size_t j = i + 1; j < ss.size(); j += 11) {
            CAPTURE(ss[i].p); CAPTURE(ss[i].q); CAPTURE(ss[j].p); CAPTURE(ss[j].q);
            REQUIRE(farey_distance(ss[i], ss[j]) == bfs_farey(ss[i], ss[j], 40));
        }
    // full sweep: the distance routine must match the Farey metric exactly
    for (size_t i = 0; i < ss.size(); ++i)
        for (size_t j = i; j < ss.size(); ++j) {
            auto d = distance(tri, curve_from_slope11(ss[i]), curve_from_slope11(ss[j]));
            CAPTURE(ss[i].p); CAPTURE(ss[i].q); CAPTURE(ss[j].p); CAPTURE(ss[j].q);
            REQUIRE(d.exact());
            REQUIRE(d.upper == farey_distance(ss[i], ss[j]));
            REQUIRE((int64_t)d.path.size() == d.upper + 1);
        }
}

TEST_CASE("complexity-one paths step through Farey neighbors") {
    auto tri04 = standard_triangulation(SurfaceSpec{0, 4});
    auto ss = slopes_upto(12);
    for (size_t i = 0; i < ss.size(); i += 13)
        for (size_t j = i + 1; j < ss.size(); j += 17) {
            auto d = distance(tri04, curve_from_slope04(ss[i]), curve_from_slope04(ss[j]));
            REQUIRE(d.exact());
            REQUIRE(d.upper == farey_distance(ss[i], ss[j]));
            for (size_t k = 0; k + 1 < d.path.size(); ++k)
                CHECK(intersection_number(tri04, d.path[k], d.path[k + 1]) == 2);
        }
}

TEST_CASE("distances 0, 1 and 2 are decided directly") {
    auto tri = standard_triangulation(SurfaceSpec{0, 5});
    auto cs = small_curves(tri, 1);
    REQUIRE(!cs.empty());

    auto d0 = distance(tri, kX05, kX05);
    CHECK(d0.upper == 0);
    CHECK(d0.path == std::vector<Weights>{kX05});

    // disjoint non-isotopic pair
    bool found1 = false, found2 = false;
    for (const auto& c : cs) {
        if (c == kX05) continue;
        int64_t i = intersection_number(tri, kX05, c);
        if (i == 0 && !found1) {
            auto d = distance(tri, kX05, c);
            CHECK(d.exact());
            CHECK(d.upper == 1);
            found1 = true;
        }
        if (i > 0 && !fills(tri, kX05, c) && !found2) {
            auto d = distance(tri, kX05, c);
            CHECK(d.exact());
            CHECK(d.upper == 2);
            REQUIRE(d.path.size() == 3);
            CHECK(intersection_number(tri, d.path[1], kX05) == 0);
            CHECK(intersection_number(tri, d.path[1], c) == 0);
            found2 = true;
        }
    }
    CHECK(found1);
    CHECK(found2);
}

TEST_CASE("distance is symmetric and satisfies the triangle inequality") {
    auto tri = standard_triangulation(SurfaceSpec{0, 5});
    std::vector<Weights> pts = {kX05, kY05};
    for (const auto& c : small_curves(tri, 1)) {
        if (pts.size() >= 5) break;
        if (std::find(pts.begin(), pts.end(), c) == pts.end()) pts.push_back(c);
    }
    std::vector<std::vector<int64_t>> d(pts.size(), std::vector<int64_t>(pts.size()));
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = 0; j < pts.size(); ++j) {
            auto r = distance(tri, pts[i], pts[j]);
            REQUIRE(r.exact());
            d[i][j] = r.upper;
        }
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = 0; j < pts.size(); ++j) {
            CHECK(d[i][j] == d[j][i]);
            for (size_t k = 0; k < pts.size(); ++k)
                CHECK(d[i][j] <= d[i][k] + d[k][j]);
        }
}

TEST_CASE("link candidates exhaust the bounded link of a curve") {
    auto tri = standard_triangulation(SurfaceSpec{0, 5});
    int64_t B = intersection_number(tri, kX05, kY05);
    auto L = link_candidates(tri, kX05, kY05, B);
    CHECK(L.bound == B);
    CHECK(L.slopes.size() == L.curves.size());
    std::set<Weights> got(L.curves.begin(), L.curves.end());
    CHECK(got.size() == L.curves.size());
    for (const auto& c : L.curves) {
        CHECK(intersection_number(tri, c, kX05) == 0);
        CHECK(intersection_number(tri, c, kY05) <= B);
    }
    // oracle: every small curve in the link with i(., y) <= B must appear
    for (const auto& w : small_curves(tri, 3)) {
        if (w == kX05) continue;
        if (intersection_number(tri, w, kX05) != 0) continue;
        if (intersection_number(tri, w, kY05) > B) continue;
        CAPTURE(w[0]);
        CHECK(got.count(w) == 1);
    }
}

TEST_CASE("a distance-3 pair on S05 yields a certified tight geodesic") {
    auto tri = standard_triangulation(SurfaceSpec{0, 5});
    REQUIRE(fills(tri, kX05, kY05));
    auto d = distance(tri, kX05, kY05);
    REQUIRE(d.exact());
    REQUIRE(d.upper == 3);
    CHECK(!d.conditional);
    REQUIRE(d.path.size() == 4);
    for (size_t i = 0; i + 1 < d.path.size(); ++i)
        CHECK(intersection_number(tri, d.path[i], d.path[i + 1]) == 0);

    auto g = tight_geodesic(tri, kX05, kY05);
    REQUIRE(g.V.size() == 4);
    CHECK(g.V.front() == std::vector<Weights>{kX05});
    CHECK(g.V.back() == std::vector<Weights>{kY05});
    auto check = is_tight(tri, g);
    CAPTURE(check.reason);
    CHECK(check.ok);
    CHECK(theorem12_violations(tri, g, 4).empty());
}

TEST_CASE("tampered records fail tightness at the right index") {
    auto tri = standard_triangulation(SurfaceSpec{0, 5});
    auto g = tight_geodesic(tri, kX05, kY05);
    REQUIRE(is_tight(tri, g).ok);

    SUBCASE("interior level crossing the next level") {
        // a curve disjoint from x but meeting V[2] plants a defect on the
        // edge between levels 1 and 2, detected at index 2
        Weights w;
        for (const auto& c : small_curves(tri, 1)) {
            if (c == kX05 || intersection_number(tri, c, kX05) != 0) continue;
            if (intersection_number(tri, c, g.V[2][0]) == 0) continue;
            w = c;
            break;
        }
        REQUIRE(!w.empty());
        g.V[1] = {w};
        g.reps[1] = w;
        auto check = is_tight(tri, g);
        CHECK(!check.ok);
        CHECK(check.failIndex == 2);
    }
    SUBCASE("duplicated component in an interior level") {
        g.V[1].push_back(g.V[1][0]);
        auto check = is_tight(tri, g);
        CHECK(!check.ok);
        CHECK(check.failIndex == 1);
    }
    SUBCASE("a representative outside its level") {
        g.reps[1] = kY05;
        auto check = is_tight(tri, g);
        CHECK(!check.ok);
        CHECK(check.failIndex == 1);
    }
    SUBCASE("endpoint turned into a multicurve") {
        g.V[0].push_back(g.V[1][0]);
        CHECK(!is_tight(tri, g).ok);
    }
}

TEST_CASE("lemma 2.5 reports on a distance-3 record") {
    auto tri = standard_triangulation(SurfaceSpec{0, 5});
    auto g = tight_geodesic(tri, kX05, kY05);
    REQUIRE(is_tight(tri, g).ok);
    int n = (int)g.reps.size();
    int pairs = n * (n - 1) / 2;

    auto doms = domains_of(tri, kX05, {kY05});
    REQUIRE(doms.size() == 1);
    auto rep = lemma25_check(tri, g, doms[0], 200);
    CHECK(rep.skipped + rep.vacuous + rep.active + rep.violated == pairs);
    CHECK(rep.violated == 0);

    auto repA = lemma25_check_annular(tri, g, g.reps[1], 200);
    CHECK(repA.skipped + repA.vacuous + repA.active + repA.violated == pairs);
    CHECK(repA.violated == 0);
}
