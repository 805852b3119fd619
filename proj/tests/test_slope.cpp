#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvelab/ops.hpp"
#include "curvelab/slope.hpp"

#include <numeric>

using namespace curvelab;

TEST_CASE("slope canonicalization") {
    CHECK(canonical_slope(2, 4) == Slope{1, 2});
    CHECK(canonical_slope(-2, -4) == Slope{1, 2});
    CHECK(canonical_slope(2, -4) == Slope{-1, 2});
    CHECK(canonical_slope(-3, 0) == Slope{1, 0});
    CHECK_THROWS(canonical_slope(0, 0));
}

TEST_CASE("slope curves round-trip on both surfaces") {
    for (int q = 0; q <= 7; ++q) {
        for (int p = -7; p <= 7; ++p) {
            if (std::gcd(std::abs(p), q) != 1) continue;
            if (q == 0 && p != 1) continue;
            Slope s{p, q};
            for (int64_t m = 1; m <= 3; ++m) {
                Weights w11 = curve_from_slope11(s);
                for (auto& x : w11) x *= m;
                auto r11 = slope_of_curve11(w11);
                REQUIRE(r11.has_value());
                CHECK(r11->first == s);
                CHECK(r11->second == m);

                Weights w04 = curve_from_slope04(s);
                for (auto& x : w04) x *= m;
                auto r04 = slope_of_curve04(w04);
                REQUIRE(r04.has_value());
                CHECK(r04->first == s);
                CHECK(r04->second == m);
            }
        }
    }
}

TEST_CASE("non-slope weight vectors are rejected") {
    CHECK(!slope_of_curve11({1, 1, 3}).has_value());
    CHECK(!slope_of_curve11({1, 2, 4}).has_value()); // not a slope multiple
    CHECK(slope_of_curve11({2, 4, 2}).has_value());  // 2 * (1, 2, 1)
    CHECK(!slope_of_curve11({0, 0, 0}).has_value());
    CHECK(!slope_of_curve04({1, 1, 0, 0, 1, 2}).has_value()); // pair mismatch
    CHECK(!slope_of_curve04({1, 1, 1, 1, 1, 1}).has_value());
}

TEST_CASE("slope curves trace correctly and meet per the determinant") {
    auto t11 = standard_triangulation(SurfaceSpec{1, 1});
    auto t04 = standard_triangulation(SurfaceSpec{0, 4});
    Slope a{3, 2}, b{1, -3};
    for (auto [tri, mult] : {std::pair<const Triangulation*, int64_t>{&t11, 1}, {&t04, 2}}) {
        Weights wa = tri == &t11 ? curve_from_slope11(a) : curve_from_slope04(a);
        Weights wb = tri == &t11 ? curve_from_slope11(b) : curve_from_slope04(b);
        auto ca = trace_components(*tri, wa);
        REQUIRE(ca.size() == 1);
        CHECK(ca[0].peripheralVertex == -1);
        CHECK(intersection_number(*tri, wa, wb) ==
              mult * std::abs(a.p * b.q - a.q * b.p));
    }
}
