#pragma once

#include "curvelab/geodesic.hpp"

namespace curvelab {

// Working constants of the distance-formula verifiers. k and l are the
// section-3 cutoffs; validate() enforces the stated constraints between
// them. Defaults: M = 200 (bounded geodesic image), N = 6 (>= 4 for the
// non-filling case plus annular slack), R = 4 (tight-geodesic growth,
// engineering default), k = 806 >= N + 2M, l = floor(k / 2).
struct ConstantsConfig {
    int64_t M = 200;
    int64_t N = 6;
    int64_t R = 4;
    int64_t k = 806;
    int64_t l = 403;

    void validate() const; // throws std::invalid_argument on violation
};

// Threshold bracket [m]_n: m if m > n, else 0.
int64_t cutoff(int64_t m, int64_t n);

// A proper domain seen by the pair (x, y): the annulus around a core curve,
// or the complexity-one window of the core's complement (identified by its
// core). d is the subsurface distance of the pair in the domain (annular:
// |relative twist| + 1); for window terms both projections are nonempty.
struct DomainTerm {
    bool annular = false;
    Weights core;
    int64_t d = 0;
};

// Enumerated proper domains with cores drawn from small curves subject to
// i(c,x) + i(c,y) <= bound. The envelope is heuristic (no effective bound
// links a large projection distance to the core's intersection numbers),
// so the bound used is always recorded with the result.
struct DomainLedger {
    std::vector<DomainTerm> terms;
    int64_t bound = 0;
};
int64_t default_domain_bound(int64_t ixy, int64_t n); // 4 * (ixy + n)
DomainLedger enumerate_domains(const Triangulation& tri, const Weights& x, const Weights& y,
                               int64_t bound);

// Right-hand side of the distance formula at threshold n: the surviving
// bracket terms, with annular contributions entering through log base 2.
struct CutoffSum {
    int64_t n = 0;
    std::vector<DomainTerm> nonAnnular, annular; // terms with d > n only
    int64_t wholeSurface = 0;                    // [d_S(x,y)]_n
    double total = 0;
};
CutoffSum cutoff_sum(const Triangulation& tri, const Weights& x, const Weights& y, int64_t n,
                     const DomainLedger& led);
CutoffSum cutoff_sum(const Triangulation& tri, const Weights& x, const Weights& y, int64_t n);

// Theorem 1.3 exercise on a certified tight record with i(x,y) >= 2: ratio
// statistic max log2 i(v_p,v_q) / log2 i(x,y) over all p < q, plus the
// domain ledger of the proof: for every enumerated W with
// [d_W(v_p,v_q)]_k > 0,
//   d_W(x,y) >= d_W(v_p,v_q) - 2M,
//   [d_W(v_p,v_q)]_k <= 2 [d_W(x,y)]_{k-2M}   (log form on annular W),
// and the whole-surface term [d_S(v_p,v_q)]_k <= [d_S(x,y)]_{k-2M}.
struct Thm13Report {
    int pairs = 0;
    double maxRho = 0;
    int ledgerTerms = 0;
    int shiftViolations = 0;
    int doublingViolations = 0;
    int wholeSurfaceViolations = 0;
};
Thm13Report verify_thm13(const Triangulation& tri, const TightGeodesic& g,
                         const ConstantsConfig& cfg);

// Theorem 1.5 exercise on a plain geodesic v_0..v_d, d >= 5 (tightness not
// required), with the conventions i(x,v_1) = 1 and i(v_{d-1},y) = 1. For
// every p < q with q - p > 2: the ratio statistic
// log2 i(x,y) / log2(i(x,v_p) i(v_p,y) i(x,v_q) i(v_q,y)), the W^p cup W^q
// covering of every enumerated domain meeting x and y, and for domains with
// [d_W(x,y)]_k > 0 the halving inequality
//   [d_W(x,y)]_k <= 2 ([d_W(x,v_p)]_l + [d_W(v_p,y)]_l)
// on a side whose family contains W (log form on annular W).
struct Thm15Report {
    int pairs = 0;
    double maxTau = 0;
    int ledgerTerms = 0;
    int coveringViolations = 0;
    int halvingViolations = 0;
};
Thm15Report verify_thm15(const Triangulation& tri, const std::vector<Weights>& v,
                         const ConstantsConfig& cfg);

// Corollary 1.6: interior indices p where i(x,y) > (i(x,v_p) i(v_p,y))^{2V}
// fails, under the endpoint conventions. The caller checks the returned set
// is at most 3 consecutive indices.
std::vector<int> cor16_exceptional(const Triangulation& tri, const std::vector<Weights>& v,
                                   double V);

// Corollary 1.7 two-sided bound on a tight record, |p - q| > 2:
//   (i(x,v_p) i(v_p,y) i(x,v_q) i(v_q,y))^{1/4U} <= i(x,y) <= (same)^V.
struct Cor17Report {
    int pairs = 0;
    int lowerViolations = 0;
    int upperViolations = 0;
};
Cor17Report verify_cor17(const Triangulation& tri, const TightGeodesic& g, double U, double V);

} // namespace curvelab
