#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvelab/ops.hpp"

#include <numeric>

using namespace curvelab;

namespace {

Weights slope11(int64_t p, int64_t q) {
    return {std::abs(p), std::abs(q), std::abs(p - q)};
}

Weights scaled(const Weights& w, int64_t k) {
    Weights out = w;
    for (auto& x : out) x *= k;
    return out;
}

Weights sum(const Weights& a, const Weights& b) {
    Weights out = a;
    for (size_t e = 0; e < out.size(); ++e) out[e] += b[e];
    return out;
}

} // namespace

TEST_CASE("intersection_number matches the S11 determinant formula") {
    auto tri = standard_triangulation(SurfaceSpec{1, 1});
    CHECK(intersection_number(tri, slope11(1, 0), slope11(0, 1)) == 1);
    CHECK(intersection_number(tri, slope11(2, 1), slope11(1, -1)) == 3);
    CHECK(intersection_number(tri, slope11(1, 0), slope11(1, 0)) == 0);
    CHECK(intersection_number(tri, scaled(slope11(1, 0), 4), scaled(slope11(0, 1), 3)) == 12);
}

TEST_CASE("dehn twist oracle on the torus") {
    auto tri = standard_triangulation(SurfaceSpec{1, 1});
    Weights a = slope11(1, 0), b = slope11(0, 1);
    Weights t1 = dehn_twist(tri, a, b, 1);
    CHECK(intersection_number(tri, t1, a) == 1);
    CHECK(intersection_number(tri, t1, b) == 1);
    bool mediant = (t1 == slope11(1, 1)) || (t1 == slope11(1, -1));
    CHECK(mediant);
    // opposite twists land on the two different Farey neighbors
    CHECK(dehn_twist(tri, a, b, 1) != dehn_twist(tri, a, b, -1));

    Weights t3 = dehn_twist(tri, a, b, 3);
    CHECK(intersection_number(tri, t3, a) == 3);
    CHECK(intersection_number(tri, t3, b) == 1);
    CHECK(dehn_twist(tri, t3, b, -3) == a);

    // twisting about a disjoint curve does nothing
    CHECK(dehn_twist(tri, scaled(b, 2), b, 5) == scaled(b, 2));
}

TEST_CASE("twist words compose") {
    auto tri = standard_triangulation(SurfaceSpec{1, 1});
    Weights a = slope11(1, 0), b = slope11(0, 1);
    TwistWord w = {{b, 2}, {a, -1}, {b, 1}};
    Weights img = apply_twist_word(tri, a, w);
    Weights chk = dehn_twist(tri, dehn_twist(tri, dehn_twist(tri, a, b, 2), a, -1), b, 1);
    CHECK(img == chk);
}

TEST_CASE("oriented smoothing of a once-crossing pair is a mediant") {
    auto tri = standard_triangulation(SurfaceSpec{1, 1});
    JointDiagram d(tri, slope11(1, 0), slope11(0, 1));
    REQUIRE(d.crossings() == 1);
    Weights m = oriented_smoothing(d, 0);
    bool mediant = (m == slope11(1, 1)) || (m == slope11(1, -1));
    CHECK(mediant);
    CHECK(intersection_number(tri, m, slope11(1, 0)) == 1);
    CHECK(intersection_number(tri, m, slope11(0, 1)) == 1);
}

TEST_CASE("fills and neighborhood boundaries") {
    auto tri = standard_triangulation(SurfaceSpec{1, 1});
    Weights a = slope11(1, 0), b = slope11(0, 1);
    CHECK(fills(tri, a, b));
    CHECK(!fills(tri, a, a));
    CHECK(neighborhood_boundary(tri, a, b).empty());
}

TEST_CASE("small curve scan and multicurves on S05") {
    auto tri = standard_triangulation(SurfaceSpec{0, 5});
    auto curves = small_curves(tri, 1);
    REQUIRE(curves.size() >= 2);
    // find a disjoint non-isotopic pair
    Weights a, b;
    bool found = false;
    for (size_t i = 0; i < curves.size() && !found; ++i)
        for (size_t j = i + 1; j < curves.size() && !found; ++j)
            if (intersection_number(tri, curves[i], curves[j]) == 0) {
                a = curves[i];
                b = curves[j];
                found = true;
            }
    REQUIRE(found);
    Weights m = sum(a, b);
    auto comps = trace_components(tri, m);
    REQUIRE(comps.size() == 2);
    CHECK(((comps[0].weights == a && comps[1].weights == b) ||
           (comps[0].weights == b && comps[1].weights == a)));
    // intersection numbers are additive over disjoint unions
    Weights c;
    for (const auto& w : curves)
        if (intersection_number(tri, w, a) > 0 && intersection_number(tri, w, b) > 0) {
            c = w;
            break;
        }
    REQUIRE(!c.empty());
    CHECK(intersection_number(tri, m, c) ==
          intersection_number(tri, a, c) + intersection_number(tri, b, c));
}

TEST_CASE("twists behave on S05 with mixed crossing signs") {
    auto tri = standard_triangulation(SurfaceSpec{0, 5});
    auto curves = small_curves(tri, 1);
    Weights x, c;
    int64_t best = 0;
    for (size_t i = 0; i < curves.size(); ++i)
        for (size_t j = 0; j < curves.size(); ++j) {
            int64_t v = intersection_number(tri, curves[i], curves[j]);
            if (v > best) {
                best = v;
                x = curves[i];
                c = curves[j];
            }
        }
    REQUIRE(best >= 2);
    int64_t ixc = intersection_number(tri, x, c);
    for (int64_t k : {1, -1, 2, -2, 3}) {
        Weights tx = dehn_twist(tri, x, c, k);
        CAPTURE(k);
        // twisting preserves the intersection with the twisting curve
        CHECK(intersection_number(tri, tx, c) == ixc);
        // round trip
        CHECK(dehn_twist(tri, tx, c, -k) == x);
        // standard bilinear bounds for twist images
        int64_t v = intersection_number(tri, tx, x);
        int64_t kk = k > 0 ? k : -k;
        if (kk >= 2) {
            CHECK(v >= (kk - 1) * ixc * ixc);
            CHECK(v <= kk * ixc * ixc);
        }
    }
    // boundary of a non-filling pair is disjoint from the pair
    if (!fills(tri, x, c)) {
        for (const auto& bd : neighborhood_boundary(tri, x, c)) {
            CHECK(intersection_number(tri, bd, x) == 0);
            CHECK(intersection_number(tri, bd, c) == 0);
        }
    }
}

TEST_CASE("operations run on the genus-one two-puncture surface") {
    auto tri = standard_triangulation(SurfaceSpec{1, 2});
    auto curves = small_curves(tri, 2);
    REQUIRE(curves.size() >= 2);
    Weights x, c;
    int64_t best = 0;
    for (size_t i = 0; i < curves.size(); ++i)
        for (size_t j = 0; j < curves.size(); ++j) {
            int64_t v = intersection_number(tri, curves[i], curves[j]);
            if (v > best) {
                best = v;
                x = curves[i];
                c = curves[j];
            }
        }
    REQUIRE(best >= 1);
    Weights tx = dehn_twist(tri, x, c, 2);
    CHECK(intersection_number(tri, tx, c) == intersection_number(tri, x, c));
    CHECK(dehn_twist(tri, tx, c, -2) == x);
}
