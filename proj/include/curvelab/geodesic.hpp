#pragma once

#include "curvelab/projection.hpp"

#include <string>

namespace curvelab {

// Curve-graph distance with a certificate. The bracket [lower, upper] is
// exact when the two agree. d <= 2 and (on complexity-one surfaces) all
// distances are decided unconditionally; on larger surfaces d = 3 is
// certified unconditionally (filling + explicit path), while lower bounds
// of 4 rest on the completeness of the candidate sets, which follows the
// i(v_p, y) <= R^p i(x,y) growth bound for tight geodesics. `conditional`
// marks such results; R records the constant used.
struct DistanceResult {
    int64_t lower = 0;
    int64_t upper = 0;
    std::vector<Weights> path; // upper + 1 curves witnessing the upper bound
    bool conditional = false;
    int64_t R = 0;

    bool exact() const { return lower == upper; }
};
DistanceResult distance(const Triangulation& tri, const Weights& x, const Weights& y,
                        int64_t R = 4);

// Curves at distance one from x whose intersection with y is at most
// `bound`: the curves of the complexity-one window of x, enumerated through
// the window's Farey chart (the intersection with y is a convex function of
// the chart slope, so a sublevel set is a Farey-connected set which slope
// walking exhausts).
struct CandidateSet {
    int64_t bound = 0;
    Domain window;
    std::vector<Slope> slopes;
    std::vector<Weights> curves; // parallel to slopes
};
CandidateSet link_candidates(const Triangulation& tri, const Weights& x, const Weights& y,
                             int64_t bound);

// The curve of the window with the given chart slope, built by applying the
// twist word (about the chart's alpha and beta) that carries a chart curve
// to the slope. Throws when the slope cannot be reached (non-primitive).
Weights curve_in_window(const Triangulation& tri, const Domain& dom, const Slope& s);

// Tight (multi)geodesic record: V[0] = {x}, V[d] = {y}, interior V[i] equal
// to the essential neighborhood boundary of their neighbors.
struct TightGeodesic {
    std::vector<std::vector<Weights>> V;
    std::vector<Weights> reps; // one representative per level
    DistanceResult dist;
};
TightGeodesic tight_geodesic(const Triangulation& tri, const Weights& x, const Weights& y,
                             int64_t R = 4);

struct TightCheck {
    bool ok = true;
    int failIndex = -1;
    std::string reason;
};
TightCheck is_tight(const Triangulation& tri, const TightGeodesic& g);

// Lemma 2.5 exercise over all representative pairs p < q: when
// d_Z(v_p, v_q) > M, both d_Z(x, v_p) <= M and d_Z(v_q, y) <= M must hold.
// Pairs where either projection is empty are skipped.
struct Lemma25Report {
    int skipped = 0;  // a projection was empty
    int vacuous = 0;  // hypothesis did not fire
    int active = 0;   // hypothesis fired and the conclusion held
    int violated = 0; // hypothesis fired and the conclusion failed
};
Lemma25Report lemma25_check(const Triangulation& tri, const TightGeodesic& g, const Domain& Z,
                            int64_t M);
Lemma25Report lemma25_check_annular(const Triangulation& tri, const TightGeodesic& g,
                                    const Weights& core, int64_t M);

// Indices p with i(v_p, y) > R^p i(x, y) (expected empty; a non-empty list
// flags the candidate-set premise).
std::vector<int> theorem12_violations(const Triangulation& tri, const TightGeodesic& g,
                                      int64_t R);

} // namespace curvelab
