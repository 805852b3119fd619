#pragma once

#include "curvelab/projection.hpp"

#include <string>

namespace curvelab {

// A marking: xi(S) pairwise-disjoint pants curves plus one transversal per
// pants curve, in matching order. Such a collection fills S exactly when
// every transversal meets its pants curve, because a curve disjoint from a
// pants decomposition is isotopic to one of its components.
struct Marking {
    std::vector<Weights> pants;
    std::vector<Weights> transversals;
};

// One exact inequality from the construction, recorded with the attained
// value and the bound. Violations abort with std::logic_error, so a
// returned ledger always satisfies lhs <= rhs.
struct IneqRecord {
    std::string name;
    int64_t lhs = 0;
    int64_t rhs = 0;
};

// Trace of the pants completion: x_1 = x, and each level adds to x_i one
// curve surgered from y through the complement of x_i (likewise on the y
// side), terminating when both sides are pants decompositions.
struct CompletionTrace {
    std::vector<std::vector<Weights>> xSeq, ySeq; // component lists per level
    std::vector<int64_t> ixy;                     // i(x_i, y_i) per level
    std::vector<IneqRecord> ledger;               // per-step bounds
};

struct PantsPair {
    std::vector<Weights> sigmaP, tauP;
    CompletionTrace trace;
};

// Pants decompositions sigma^p, tau^p with x = sigmaP[0], y = tauP[0] and
// i(sigma^p, tau^p) controlled by i(x, y). Per step the ledger records
//   (1)      i(pi_{S-x_i}(y), y_i)              <= 2 i(x_i, y_i)
//   (2)      i(x_i, pi_{S-y_i}(x))              <= 2 i(x_i, y_i)
//   (3)      i(pi_{S-x_i}(y), pi_{S-y_i}(x))    <= 4 i(x_i, y_i) + 4 i(x, y)
//   (dagger) i(x_{i+1}, y_{i+1})                <= 9 i(x_i, y_i) + 4 i(x, y)
// Each projection is the first admissible surgery outcome in traversal
// order (essential, in a non-pants complementary piece, not already a
// component). Throws std::invalid_argument when x, y do not fill S or
// xi(S) <= 1.
PantsPair pants_completion(const Triangulation& tri, const Weights& x, const Weights& y);

struct MarkingPair {
    Marking sigma, tau;
    std::vector<IneqRecord> ledger;
    int64_t iXY = 0, iSigmaPTauP = 0, iSigmaTau = 0;
};

// Transversal construction: for each pants curve a of sigma^p, the window W
// is the complexity-one component of S cut along sigma^p minus a, and
// a^t is the first surgery outcome of y in W meeting a (on the tau side,
// b^t comes from x). The ledger records, exactly:
//   per a:     i(a^t, tau^p)   <= 2 i(sigma^p, tau^p)
//   eq (1):    i(sigma^t, tau^p) <= 2 xi i(sigma^p, tau^p)
//   (ddagger): i(sigma^t, x)     <= 2 xi i(x, y)
//   per b (i): i(sigma^p, b^t)   <= 2 i(sigma^p, tau^p)
//   per b (ii):i(sigma^t, b^t)   <= 4 xi i(sigma^p, tau^p) + 4 xi i(x, y)
//   per b:     i(sigma, b^t)     <= 6 xi (i(sigma^p, tau^p) + i(x, y))
//   eq (2):    i(sigma, tau^t)   <= 6 xi^2 (i(sigma^p, tau^p) + i(x, y))
MarkingPair add_transversals(const Triangulation& tri, const std::vector<Weights>& sigmaP,
                             const std::vector<Weights>& tauP, const Weights& x,
                             const Weights& y);

// pants_completion followed by add_transversals; x is sigma.pants[0] and
// y is tau.pants[0].
struct MarkingFromPair {
    MarkingPair markings;
    PantsPair pantsStage;
};
MarkingFromPair marking_from_pair(const Triangulation& tri, const Weights& x, const Weights& y);

// Exactly xi(S) pairwise-disjoint, pairwise non-isotopic essential curves
// cutting S into pants.
bool is_pants_decomposition(const Triangulation& tri, const std::vector<Weights>& curves);

// Valid pants decomposition plus one transversal per curve, each meeting
// its pants curve (which makes the collection fill S).
bool is_marking(const Triangulation& tri, const Marking& m);

} // namespace curvelab
