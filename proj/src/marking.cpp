#include "curvelab/marking.hpp"

#include <algorithm>
#include <stdexcept>

namespace curvelab {

namespace {

Weights sum_weights(const Triangulation& tri, const std::vector<Weights>& curves) {
    Weights s((size_t)tri.edgeCount(), 0);
    for (const auto& c : curves)
        for (size_t e = 0; e < s.size(); ++e) s[e] += c[e];
    return s;
}

// pairwise intersection of two sets of curves that may cross within a set
int64_t set_intersection(const Triangulation& tri, const std::vector<Weights>& A,
                         const std::vector<Weights>& B) {
    int64_t total = 0;
    for (const auto& a : A)
        for (const auto& b : B) total += intersection_number(tri, a, b);
    return total;
}

int64_t region_complexity(const JointDiagram::Region& reg) {
    int64_t cuffs = (int64_t)reg.boundaryWalks.size();
    int64_t genus = (2 - cuffs - reg.chi) / 2;
    return 3 * genus - 3 + cuffs + reg.punctures;
}

void check(std::vector<IneqRecord>& ledger, std::string name, int64_t lhs, int64_t rhs) {
    if (lhs > rhs)
        throw std::logic_error("marking construction bound violated: " + name);
    ledger.push_back({std::move(name), lhs, rhs});
}

// First surgery outcome of `from` through the complement of the disjoint
// curves `delta`: essential, in a non-pants piece, not a component of delta.
Weights completion_curve(const Triangulation& tri, const std::vector<Weights>& delta,
                         const Weights& from) {
    Weights deltaSum = sum_weights(tri, delta);
    auto sr = surgery_outcomes(tri, deltaSum, from);
    for (const auto& o : sr.outcomes) {
        if (region_complexity(sr.regions.list[(size_t)o.region]) < 1) continue;
        if (std::find(delta.begin(), delta.end(), o.curve) != delta.end()) continue;
        if (intersection_number(tri, o.curve, deltaSum) != 0)
            throw std::logic_error("pants completion: surgery outcome meets the multicurve");
        return o.curve;
    }
    throw std::logic_error("pants completion: no admissible surgery outcome");
}

// First surgery outcome of `from` in the complexity-one window of
// pants[which] (the piece of S cut along the other pants curves that
// contains it) meeting the curve.
Weights transversal_curve(const Triangulation& tri, const std::vector<Weights>& pants,
                          size_t which, const Weights& from) {
    const Weights& a = pants[which];
    std::vector<Weights> rest;
    for (size_t j = 0; j < pants.size(); ++j)
        if (j != which) rest.push_back(pants[j]);
    Weights deltaSum = sum_weights(tri, rest);

    // anchor circle of the window containing a
    std::pair<int, int> anchor;
    {
        JointDiagram d(tri, deltaSum, a);
        if (d.crossings() != 0)
            throw std::invalid_argument("transversal construction: pants curves intersect");
        auto regs = d.regionize(false);
        int r = regs.arcRegion1[(size_t)d.globalArc(1, 0, 0)];
        const auto& labels = regs.list[(size_t)r].circleLabels;
        anchor = *std::min_element(labels.begin(), labels.end());
    }

    auto sr = surgery_outcomes(tri, deltaSum, from);
    int r = region_with_anchor(sr.regions, anchor);
    for (const auto& o : sr.outcomes) {
        if (o.region != r) continue;
        // disjoint from a means isotopic to a or to a cuff of the window
        if (intersection_number(tri, o.curve, a) == 0) continue;
        return o.curve;
    }
    throw std::logic_error("transversal construction: projection produced no transversal");
}

} // namespace

PantsPair pants_completion(const Triangulation& tri, const Weights& x, const Weights& y) {
    int xi = tri.spec().complexity();
    if (xi <= 1) throw std::invalid_argument("pants completion requires xi(S) > 1");
    if (!fills(tri, x, y))
        throw std::invalid_argument("pants completion requires a filling pair");

    PantsPair out;
    auto& xs = out.sigmaP;
    auto& ys = out.tauP;
    xs.push_back(x);
    ys.push_back(y);
    int64_t ixyTotal = intersection_number(tri, x, y);
    out.trace.xSeq.push_back(xs);
    out.trace.ySeq.push_back(ys);
    out.trace.ixy.push_back(ixyTotal);

    while ((int)xs.size() < xi) {
        int64_t ii = out.trace.ixy.back();
        Weights px = completion_curve(tri, xs, y);
        Weights py = completion_curve(tri, ys, x);
        Weights xSum = sum_weights(tri, xs);
        Weights ySum = sum_weights(tri, ys);
        auto& led = out.trace.ledger;
        int lvl = (int)xs.size();
        std::string sfx = " @" + std::to_string(lvl);
        check(led, "(1)" + sfx, intersection_number(tri, px, ySum), 2 * ii);
        check(led, "(2)" + sfx, intersection_number(tri, xSum, py), 2 * ii);
        check(led, "(3)" + sfx, intersection_number(tri, px, py), 4 * ii + 4 * ixyTotal);
        xs.push_back(px);
        ys.push_back(py);
        int64_t inext =
            intersection_number(tri, sum_weights(tri, xs), sum_weights(tri, ys));
        check(led, "(dagger)" + sfx, inext, 9 * ii + 4 * ixyTotal);
        out.trace.xSeq.push_back(xs);
        out.trace.ySeq.push_back(ys);
        out.trace.ixy.push_back(inext);
    }

    if (!is_pants_decomposition(tri, xs) || !is_pants_decomposition(tri, ys))
        throw std::logic_error("pants completion: result is not a pants decomposition");
    return out;
}

MarkingPair add_transversals(const Triangulation& tri, const std::vector<Weights>& sigmaP,
                             const std::vector<Weights>& tauP, const Weights& x,
                             const Weights& y) {
    int64_t xi = tri.spec().complexity();
    if (!is_pants_decomposition(tri, sigmaP) || !is_pants_decomposition(tri, tauP))
        throw std::invalid_argument("add_transversals: invalid pants decomposition");
    if (std::find(sigmaP.begin(), sigmaP.end(), x) == sigmaP.end() ||
        std::find(tauP.begin(), tauP.end(), y) == tauP.end())
        throw std::invalid_argument("add_transversals: x, y must belong to the decompositions");
    if (!fills(tri, x, y))
        throw std::invalid_argument("add_transversals: x, y must fill");

    MarkingPair out;
    out.iXY = intersection_number(tri, x, y);
    out.iSigmaPTauP = set_intersection(tri, sigmaP, tauP);
    auto& led = out.ledger;

    // Step 1: transversals for sigma^p come from y
    std::vector<Weights> sigmaT;
    for (size_t ai = 0; ai < sigmaP.size(); ++ai) {
        Weights at = transversal_curve(tri, sigmaP, ai, y);
        check(led, "step1 a" + std::to_string(ai),
              set_intersection(tri, {at}, tauP), 2 * out.iSigmaPTauP);
        sigmaT.push_back(std::move(at));
    }
    check(led, "eq(1)", set_intersection(tri, sigmaT, tauP), 2 * xi * out.iSigmaPTauP);
    check(led, "(ddagger)", set_intersection(tri, sigmaT, {x}), 2 * xi * out.iXY);

    // Step 2: transversals for tau^p come from x
    std::vector<Weights> tauT;
    for (size_t bi = 0; bi < tauP.size(); ++bi) {
        Weights bt = transversal_curve(tri, tauP, bi, x);
        std::string sfx = " b" + std::to_string(bi);
        check(led, "(i)" + sfx, set_intersection(tri, sigmaP, {bt}), 2 * out.iSigmaPTauP);
        check(led, "(ii)" + sfx, set_intersection(tri, sigmaT, {bt}),
              4 * xi * out.iSigmaPTauP + 4 * xi * out.iXY);
        check(led, "combined" + sfx,
              set_intersection(tri, sigmaP, {bt}) + set_intersection(tri, sigmaT, {bt}),
              6 * xi * (out.iSigmaPTauP + out.iXY));
        tauT.push_back(std::move(bt));
    }
    check(led, "eq(2)",
          set_intersection(tri, sigmaP, tauT) + set_intersection(tri, sigmaT, tauT),
          6 * xi * xi * (out.iSigmaPTauP + out.iXY));

    out.sigma = {sigmaP, std::move(sigmaT)};
    out.tau = {tauP, std::move(tauT)};
    out.iSigmaTau = set_intersection(tri, out.sigma.pants, out.tau.pants) +
                    set_intersection(tri, out.sigma.pants, out.tau.transversals) +
                    set_intersection(tri, out.sigma.transversals, out.tau.pants) +
                    set_intersection(tri, out.sigma.transversals, out.tau.transversals);
    if (!is_marking(tri, out.sigma) || !is_marking(tri, out.tau))
        throw std::logic_error("add_transversals: result is not a marking");
    return out;
}

MarkingFromPair marking_from_pair(const Triangulation& tri, const Weights& x, const Weights& y) {
    MarkingFromPair out;
    out.pantsStage = pants_completion(tri, x, y);
    out.markings = add_transversals(tri, out.pantsStage.sigmaP, out.pantsStage.tauP, x, y);
    return out;
}

bool is_pants_decomposition(const Triangulation& tri, const std::vector<Weights>& curves) {
    if ((int)curves.size() != tri.spec().complexity()) return false;
    for (const auto& c : curves) {
        auto comps = trace_components(tri, c);
        if (comps.size() != 1 || comps[0].peripheralVertex >= 0) return false;
    }
    for (size_t i = 0; i < curves.size(); ++i)
        for (size_t j = i + 1; j < curves.size(); ++j) {
            if (curves[i] == curves[j]) return false;
            if (intersection_number(tri, curves[i], curves[j]) != 0) return false;
        }
    Weights zero((size_t)tri.edgeCount(), 0);
    JointDiagram d(tri, sum_weights(tri, curves), zero);
    auto regs = d.regionize(false);
    for (const auto& reg : regs.list)
        if (region_complexity(reg) != 0) return false;
    return true;
}

bool is_marking(const Triangulation& tri, const Marking& m) {
    if (!is_pants_decomposition(tri, m.pants)) return false;
    if (m.transversals.size() != m.pants.size()) return false;
    for (size_t i = 0; i < m.pants.size(); ++i) {
        auto comps = trace_components(tri, m.transversals[i]);
        if (comps.size() != 1 || comps[0].peripheralVertex >= 0) return false;
        if (intersection_number(tri, m.pants[i], m.transversals[i]) == 0) return false;
    }
    return true;
}

} // namespace curvelab
