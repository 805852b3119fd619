#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvelab/marking.hpp"

using namespace curvelab;

namespace {

// first filling pair among the small curves and single twists of them
std::pair<Weights, Weights> filling_pair(const Triangulation& tri) {
    auto cs = small_curves(tri, 1);
    std::vector<Weights> cand = cs;
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = 0; j < cs.size(); ++j)
            if (intersection_number(tri, cs[i], cs[j]) > 0)
                cand.push_back(dehn_twist(tri, cs[i], cs[j], 1));
    for (size_t i = 0; i < cand.size(); ++i)
        for (size_t j = i + 1; j < cand.size(); ++j)
            if (fills(tri, cand[i], cand[j])) return {cand[i], cand[j]};
    throw std::runtime_error("no filling pair found");
}

Weights sum2(const Triangulation& tri, const std::vector<Weights>& cs) {
    Weights s((size_t)tri.edgeCount(), 0);
    for (const auto& c : cs)
        for (size_t e = 0; e < s.size(); ++e) s[e] += c[e];
    return s;
}

} // namespace

TEST_CASE("pants completion on the five-punctured sphere") {
    auto tri = standard_triangulation(SurfaceSpec{0, 5});
    auto [x, y] = filling_pair(tri);
    auto pp = pants_completion(tri, x, y);

    CHECK(pp.sigmaP.size() == 2);
    CHECK(pp.tauP.size() == 2);
    CHECK(pp.sigmaP[0] == x);
    CHECK(pp.tauP[0] == y);
    CHECK(is_pants_decomposition(tri, pp.sigmaP));
    CHECK(is_pants_decomposition(tri, pp.tauP));

    // xi(S05) = 2: exactly one completion step, four recorded bounds
    CHECK(pp.trace.xSeq.size() == 2);
    CHECK(pp.trace.ixy.size() == 2);
    CHECK(pp.trace.ixy[0] == intersection_number(tri, x, y));
    CHECK(pp.trace.ledger.size() == 4);
    for (const auto& row : pp.trace.ledger) {
        CAPTURE(row.name);
        CHECK(row.lhs <= row.rhs);
    }
    // the trace really reaches the final pants decompositions
    CHECK(pp.trace.ixy.back() ==
          intersection_number(tri, sum2(tri, pp.sigmaP), sum2(tri, pp.tauP)));
}

TEST_CASE("transversal construction satisfies the step bounds") {
    auto tri = standard_triangulation(SurfaceSpec{0, 5});
    auto [x, y] = filling_pair(tri);
    auto pp = pants_completion(tri, x, y);
    auto mp = add_transversals(tri, pp.sigmaP, pp.tauP, x, y);

    CHECK(is_marking(tri, mp.sigma));
    CHECK(is_marking(tri, mp.tau));
    CHECK(mp.sigma.transversals.size() == 2);
    CHECK(mp.tau.transversals.size() == 2);
    // xi per-a rows + eq(1) + ddagger + 3 per-b rows + eq(2)
    CHECK(mp.ledger.size() == 2 + 2 + 3 * 2 + 1);
    for (const auto& row : mp.ledger) {
        CAPTURE(row.name);
        CHECK(row.lhs <= row.rhs);
    }

    // the markings contain the pair, so their intersection dominates it
    CHECK(mp.iXY == intersection_number(tri, x, y));
    CHECK(mp.iSigmaTau >= mp.iXY);

    // each transversal lives in the window of its pants curve: it meets the
    // curve and misses the rest of the decomposition
    for (size_t i = 0; i < 2; ++i) {
        CHECK(intersection_number(tri, mp.sigma.transversals[i], mp.sigma.pants[i]) >= 1);
        CHECK(intersection_number(tri, mp.sigma.transversals[i], mp.sigma.pants[1 - i]) == 0);
        CHECK(intersection_number(tri, mp.tau.transversals[i], mp.tau.pants[i]) >= 1);
        CHECK(intersection_number(tri, mp.tau.transversals[i], mp.tau.pants[1 - i]) == 0);
    }
}

TEST_CASE("marking from pair over a twist family is deterministic") {
    auto tri = standard_triangulation(SurfaceSpec{0, 5});
    auto [x, c] = filling_pair(tri);
    int processed = 0;
    for (int64_t k = 1; k <= 5; ++k) {
        Weights y = dehn_twist(tri, x, c, k);
        if (!fills(tri, x, y)) continue;
        CAPTURE(k);
        auto a = marking_from_pair(tri, x, y);
        auto b = marking_from_pair(tri, x, y);
        CHECK(a.markings.sigma.pants == b.markings.sigma.pants);
        CHECK(a.markings.sigma.transversals == b.markings.sigma.transversals);
        CHECK(a.markings.tau.pants == b.markings.tau.pants);
        CHECK(a.markings.tau.transversals == b.markings.tau.transversals);
        CHECK(a.markings.sigma.pants[0] == x);
        CHECK(a.markings.tau.pants[0] == y);
        CHECK(is_marking(tri, a.markings.sigma));
        CHECK(is_marking(tri, a.markings.tau));
        ++processed;
    }
    CHECK(processed >= 3);
}

TEST_CASE("non-filling input is rejected") {
    auto tri = standard_triangulation(SurfaceSpec{0, 5});
    auto curves = small_curves(tri, 1);
    REQUIRE(curves.size() >= 2);
    CHECK_THROWS_AS(pants_completion(tri, curves[0], curves[0]), std::invalid_argument);
    // a pair of small curves that misses part of the surface
    bool foundNonFilling = false;
    for (size_t i = 0; i < curves.size() && !foundNonFilling; ++i)
        for (size_t j = i + 1; j < curves.size() && !foundNonFilling; ++j)
            if (!fills(tri, curves[i], curves[j])) {
                CHECK_THROWS_AS(pants_completion(tri, curves[i], curves[j]),
                                std::invalid_argument);
                foundNonFilling = true;
            }
    CHECK(foundNonFilling);
}

TEST_CASE("pants decomposition validity checks") {
    auto tri = standard_triangulation(SurfaceSpec{0, 5});
    auto [x, y] = filling_pair(tri);
    auto pp = pants_completion(tri, x, y);
    CHECK(!is_pants_decomposition(tri, {pp.sigmaP[0]}));           // too few
    CHECK(!is_pants_decomposition(tri, {x, y}));                   // crossing
    CHECK(!is_pants_decomposition(tri, {pp.sigmaP[0], pp.sigmaP[0]})); // repeated
}

TEST_CASE("full marking construction on the genus-one two-puncture surface") {
    auto tri = standard_triangulation(SurfaceSpec{1, 2});
    auto [x, y] = filling_pair(tri);
    auto m = marking_from_pair(tri, x, y);
    CHECK(is_marking(tri, m.markings.sigma));
    CHECK(is_marking(tri, m.markings.tau));
    CHECK(m.markings.sigma.pants[0] == x);
    CHECK(m.markings.tau.pants[0] == y);
    for (const auto& row : m.markings.ledger) {
        CAPTURE(row.name);
        CHECK(row.lhs <= row.rhs);
    }
    CHECK(m.markings.iSigmaTau >= m.markings.iXY);
}
