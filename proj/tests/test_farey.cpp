#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvelab/farey.hpp"

#include <map>
#include <numeric>
#include <queue>
#include <vector>

using namespace curvelab;

namespace {

// Breadth-first search oracle on the Farey graph truncated to |p|,|q| <= box.
// For small sources/targets the box is wide enough to contain geodesics.
std::map<std::pair<int64_t, int64_t>, int> bfs_from(const Slope& src, int64_t box) {
    std::vector<Slope> verts;
    verts.push_back({1, 0});
    for (int64_t q = 1; q <= box; ++q)
        for (int64_t p = -box; p <= box; ++p)
            if (std::gcd(std::abs(p), q) == 1) verts.push_back({p, q});
    std::map<std::pair<int64_t, int64_t>, int> idx;
    for (size_t i = 0; i < verts.size(); ++i) idx[{verts[i].p, verts[i].q}] = (int)i;
    std::vector<std::vector<int>> adj(verts.size());
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (std::abs(verts[i].p * verts[j].q - verts[i].q * verts[j].p) == 1) {
                adj[i].push_back((int)j);
                adj[j].push_back((int)i);
            }
    std::vector<int> dist(verts.size(), -1);
    std::queue<int> bq;
    int s = idx.at({src.p, src.q});
    dist[(size_t)s] = 0;
    bq.push(s);
    while (!bq.empty()) {
        int v = bq.front();
        bq.pop();
        for (int u : adj[(size_t)v])
            if (dist[(size_t)u] < 0) {
                dist[(size_t)u] = dist[(size_t)v] + 1;
                bq.push(u);
            }
    }
    std::map<std::pair<int64_t, int64_t>, int> out;
    for (size_t i = 0; i < verts.size(); ++i) out[{verts[i].p, verts[i].q}] = dist[(size_t)i];
    return out;
}

std::vector<Slope> small_slopes(int64_t bound) {
    std::vector<Slope> out;
    out.push_back({1, 0});
    for (int64_t q = 1; q <= bound; ++q)
        for (int64_t p = -bound; p <= bound; ++p)
            if (std::gcd(std::abs(p), q) == 1) out.push_back({p, q});
    return out;
}

} // namespace

TEST_CASE("farey distance basics") {
    CHECK(farey_distance({1, 0}, {1, 0}) == 0);
    CHECK(farey_distance({1, 0}, {0, 1}) == 1);
    CHECK(farey_distance({1, 0}, {5, 1}) == 1);
    CHECK(farey_distance({0, 1}, {1, 2}) == 1);
    CHECK(farey_distance({1, 0}, {1, 2}) == 2);
    CHECK(farey_distance({2, 5}, {2, 5}) == 0);
}

TEST_CASE("farey distance matches breadth-first search") {
    auto targets = small_slopes(6);
    for (const Slope& src : small_slopes(3)) {
        auto oracle = bfs_from(src, 25);
        for (const Slope& t : targets) {
            int d = farey_distance(src, t);
            CAPTURE(src.p); CAPTURE(src.q); CAPTURE(t.p); CAPTURE(t.q);
            CHECK(d == oracle.at({t.p, t.q}));
        }
    }
}

TEST_CASE("farey distance is a metric on small slopes") {
    auto ss = small_slopes(4);
    for (const auto& a : ss)
        for (const auto& b : ss) {
            int dab = farey_distance(a, b);
            CHECK(dab == farey_distance(b, a));
            CHECK((dab == 0) == (a == b));
            // adjacency is exactly determinant one
            int64_t det = std::abs(a.p * b.q - a.q * b.p);
            if (det == 1) CHECK(dab == 1);
            if (dab == 1) CHECK(det == 1);
        }
}

TEST_CASE("high-denominator slopes are far from infinity") {
    // continued fraction [0;2,2,2,...] gives distance growing with depth
    int64_t p = 0, q = 1, pp = 1, qq = 0;
    int prev = 0;
    for (int k = 0; k < 8; ++k) {
        int64_t np = pp + 2 * p, nq = qq + 2 * q;
        pp = p; qq = q; p = np; q = nq;
        int d = farey_distance({1, 0}, canonical_slope(p, q));
        CHECK(d >= prev);
        prev = d;
    }
    CHECK(prev >= 4);
}
