#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvelab/normal.hpp"

#include <numeric>

using namespace curvelab;

namespace {
// Torus-with-one-puncture slope weights on the standard triangulation
// (edges a, b, c with c the diagonal): |p| strands over a, |q| over b.
Weights slope11(int64_t p, int64_t q) {
    return {std::abs(p), std::abs(q), std::abs(p - q)};
}
} // namespace

TEST_CASE("admissibility") {
    const Triangulation& tri = standard_triangulation({1, 1});
    CHECK(!admissibility_error(tri, slope11(1, 0)));
    CHECK(!admissibility_error(tri, slope11(2, 3)));
    CHECK(admissibility_error(tri, {1, 0, 0}));    // parity fails
    CHECK(admissibility_error(tri, {5, 1, 1}));    // triangle inequality fails
    CHECK(admissibility_error(tri, {1, 1}));       // wrong length
    CHECK(admissibility_error(tri, {-1, 1, 0}));   // negative
}

TEST_CASE("slope curves on the once-punctured torus trace to one component") {
    const Triangulation& tri = standard_triangulation({1, 1});
    for (int p = -6; p <= 6; ++p) {
        for (int q = -6; q <= 6; ++q) {
            if (std::gcd(p, q) != 1) continue;
            auto comps = trace_components(tri, slope11(p, q));
            REQUIRE(comps.size() == 1);
            CHECK(comps[0].peripheralVertex == -1);
            CHECK(comps[0].weights == slope11(p, q));
            CHECK_NOTHROW(NormalCurve::validate(tri, slope11(p, q)));
        }
    }
}

TEST_CASE("multiples of a slope trace to parallel copies") {
    const Triangulation& tri = standard_triangulation({1, 1});
    Weights w = slope11(2, 1);
    Weights w3 = {3 * w[0], 3 * w[1], 3 * w[2]};
    auto comps = trace_components(tri, w3);
    REQUIRE(comps.size() == 3);
    for (auto& c : comps) CHECK(c.weights == w);
    CHECK(components(tri, w3).size() == 1); // dedup of parallel copies
    CHECK_THROWS(NormalCurve::validate(tri, w3));
}

TEST_CASE("vertex links are recognized as peripheral") {
    const Triangulation& tri = standard_triangulation({0, 5});
    for (int v = 0; v < tri.vertexCount(); ++v) {
        auto lw = tri.vertexLinkWeights(v);
        Weights w(lw.begin(), lw.end());
        auto comps = trace_components(tri, w);
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].peripheralVertex == v);
        CHECK(components(tri, w).empty());
    }
}

TEST_CASE("zero vector traces to nothing") {
    const Triangulation& tri = standard_triangulation({0, 4});
    CHECK(trace_components(tri, Weights(tri.edgeCount(), 0)).empty());
}

TEST_CASE("curves on the four-punctured sphere") {
    const Triangulation& tri = standard_triangulation({0, 4});
    // The opposite-edge-pair coordinates (2,2,0,0,2,2)-style: slope 0/1.
    // Edges: e12=0, e13=1, e14=2, e23=3, e24=4, e34=5; opposite pairs
    // (e12,e34), (e13,e24), (e14,e23).
    Weights w = {0, 1, 1, 1, 1, 0};
    auto comps = trace_components(tri, w);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].peripheralVertex == -1);
}

TEST_CASE("multicurve keeps components sorted and unique") {
    const Triangulation& tri = standard_triangulation({1, 1});
    NormalCurve a = NormalCurve::validate(tri, slope11(1, 0));
    NormalCurve b = NormalCurve::validate(tri, slope11(0, 1));
    Multicurve m({b, a, a});
    REQUIRE(m.size() == 2);
    CHECK(m.curves()[0] < m.curves()[1]);
    CHECK(m.contains(a));
}
