#include "curvelab/formula.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace curvelab {

void ConstantsConfig::validate() const {
    if (M < 0 || N < 4 || R < 2) throw std::invalid_argument("config: M >= 0, N >= 4, R >= 2");
    if (k < N + 2 * M) throw std::invalid_argument("config: k >= N + 2M required");
    if (k < 2 * N) throw std::invalid_argument("config: k >= 2N required");
    if (l != k / 2) throw std::invalid_argument("config: l = floor(k / 2) required");
    int64_t s = k - 2 * M;
    if (k > 2 * s || k > s * s) throw std::invalid_argument("config: k too small against 2M");
}

int64_t cutoff(int64_t m, int64_t n) {
    if (m < 0 || n < 0) throw std::invalid_argument("cutoff: arguments must be nonnegative");
    return m > n ? m : 0;
}

int64_t default_domain_bound(int64_t ixy, int64_t n) { return 4 * (ixy + n); }

namespace {

// Subsurface distance of (a, b) in the domain identified by a term's core.
int64_t term_distance(const Triangulation& tri, const DomainTerm& t, const Weights& a,
                      const Weights& b) {
    if (t.annular) return annular_distance(tri, t.core, a, b);
    auto doms = domains_of(tri, t.core, {a, b});
    int64_t best = 0;
    for (const auto& dom : doms) best = std::max(best, subsurface_distance(tri, dom, a, b));
    return best;
}

bool term_sees(const Triangulation& tri, const DomainTerm& t, const Weights& v) {
    if (t.annular) return v != t.core && intersection_number(tri, t.core, v) > 0;
    for (const auto& dom : domains_of(tri, t.core, {v}))
        if (!project(tri, dom, v).empty()) return true;
    return false;
}

// Whole-surface distance, exact only when it can exceed the threshold n: a
// middle curve within distance 2 of both sides witnesses d <= 4 cheaply.
int64_t whole_surface_distance(const Triangulation& tri, const Weights& x, const Weights& y,
                               int64_t n) {
    if (x == y) return 0;
    if (intersection_number(tri, x, y) == 0) return 1;
    if (!fills(tri, x, y)) return 2;
    if (n >= 4)
        for (const auto& c : small_curves(tri, 1)) {
            bool nearX = c == x || intersection_number(tri, c, x) == 0 || !fills(tri, c, x);
            bool nearY = c == y || intersection_number(tri, c, y) == 0 || !fills(tri, c, y);
            if (nearX && nearY) return 4;
        }
    auto d = distance(tri, x, y);
    return d.upper;
}

} // namespace

DomainLedger enumerate_domains(const Triangulation& tri, const Weights& x, const Weights& y,
                               int64_t bound) {
    DomainLedger led;
    led.bound = bound;
    for (const auto& c : small_curves(tri, 3)) {
        int64_t icx = intersection_number(tri, c, x);
        int64_t icy = intersection_number(tri, c, y);
        if (icx + icy > bound) continue;
        if (c != x && c != y && icx > 0 && icy > 0)
            led.terms.push_back({true, c, annular_distance(tri, c, x, y)});
        if (tri.spec().complexity() < 2) continue; // no complexity-one windows
        for (const auto& dom : domains_of(tri, c, {x, y})) {
            if (project(tri, dom, x).empty() || project(tri, dom, y).empty()) continue;
            led.terms.push_back({false, c, subsurface_distance(tri, dom, x, y)});
        }
    }
    return led;
}

CutoffSum cutoff_sum(const Triangulation& tri, const Weights& x, const Weights& y, int64_t n,
                     const DomainLedger& led) {
    CutoffSum cs;
    cs.n = n;
    for (const auto& t : led.terms) {
        int64_t c = cutoff(t.d, n);
        if (c == 0) continue;
        if (t.annular) {
            cs.annular.push_back(t);
            cs.total += std::log2((double)c);
        } else {
            cs.nonAnnular.push_back(t);
            cs.total += (double)c;
        }
    }
    cs.wholeSurface = cutoff(whole_surface_distance(tri, x, y, n), n);
    cs.total += (double)cs.wholeSurface;
    return cs;
}

CutoffSum cutoff_sum(const Triangulation& tri, const Weights& x, const Weights& y, int64_t n) {
    int64_t ixy = intersection_number(tri, x, y);
    return cutoff_sum(tri, x, y, n, enumerate_domains(tri, x, y, default_domain_bound(ixy, n)));
}

Thm13Report verify_thm13(const Triangulation& tri, const TightGeodesic& g,
                         const ConstantsConfig& cfg) {
    cfg.validate();
    if (g.reps.size() < 3) throw std::invalid_argument("verify_thm13: record of length >= 2");
    const Weights& x = g.reps.front();
    const Weights& y = g.reps.back();
    int64_t ixy = intersection_number(tri, x, y);
    if (ixy < 2) throw std::invalid_argument("verify_thm13: i(x,y) >= 2 required");
    double logixy = std::log2((double)ixy);
    int d = (int)g.reps.size() - 1;

    Thm13Report rep;
    for (int p = 0; p <= d; ++p)
        for (int q = p + 1; q <= d; ++q) {
            const Weights& vp = g.reps[(size_t)p];
            const Weights& vq = g.reps[(size_t)q];
            int64_t ivv = intersection_number(tri, vp, vq);
            if (ivv == 0) continue;
            ++rep.pairs;
            double rho = ivv == 1 ? 0.0 : std::log2((double)ivv) / logixy;
            rep.maxRho = std::max(rep.maxRho, rho);

            auto led = enumerate_domains(tri, vp, vq, default_domain_bound(ivv, cfg.N));
            for (const auto& t : led.terms) {
                int64_t lhs = cutoff(t.d, cfg.k);
                if (lhs == 0) continue;
                ++rep.ledgerTerms;
                int64_t dxy = term_distance(tri, t, x, y);
                if (dxy < t.d - 2 * cfg.M) ++rep.shiftViolations;
                int64_t rhs = cutoff(dxy, cfg.k - 2 * cfg.M);
                bool ok = t.annular ? (rhs > 0 && std::log2((double)lhs) <=
                                                      2.0 * std::log2((double)rhs))
                                    : lhs <= 2 * rhs;
                if (!ok) ++rep.doublingViolations;
            }
            if (cutoff(q - p, cfg.k) > cutoff((int64_t)d, cfg.k - 2 * cfg.M))
                ++rep.wholeSurfaceViolations;
        }
    return rep;
}

namespace {

// i(x, v_p) and i(v_p, y) with the endpoint conventions of Theorem 1.5.
int64_t conv_left(const Triangulation& tri, const std::vector<Weights>& v, int p) {
    if (p == 1) return 1;
    return intersection_number(tri, v.front(), v[(size_t)p]);
}
int64_t conv_right(const Triangulation& tri, const std::vector<Weights>& v, int p) {
    int d = (int)v.size() - 1;
    if (p == d - 1) return 1;
    return intersection_number(tri, v[(size_t)p], v.back());
}

} // namespace

Thm15Report verify_thm15(const Triangulation& tri, const std::vector<Weights>& v,
                         const ConstantsConfig& cfg) {
    cfg.validate();
    int d = (int)v.size() - 1;
    if (d < 5) throw std::invalid_argument("verify_thm15: geodesic of length >= 5 required");
    const Weights& x = v.front();
    const Weights& y = v.back();
    int64_t ixy = intersection_number(tri, x, y);
    if (ixy < 2) throw std::invalid_argument("verify_thm15: i(x,y) >= 2 required");
    double logixy = std::log2((double)ixy);

    Thm15Report rep;
    auto led = enumerate_domains(tri, x, y, default_domain_bound(ixy, cfg.N));
    std::map<std::pair<size_t, int>, int64_t> leftCut, rightCut; // (term, index) -> [.]_l
    std::map<std::pair<size_t, int>, bool> sees;
    auto seesAt = [&](size_t ti, int p) {
        auto key = std::make_pair(ti, p);
        auto it = sees.find(key);
        if (it == sees.end())
            it = sees.emplace(key, term_sees(tri, led.terms[ti], v[(size_t)p])).first;
        return it->second;
    };
    auto cutAt = [&](std::map<std::pair<size_t, int>, int64_t>& memo, size_t ti, int p,
                     bool left) {
        auto key = std::make_pair(ti, p);
        auto it = memo.find(key);
        if (it == memo.end()) {
            const auto& t = led.terms[ti];
            int64_t dd = left ? term_distance(tri, t, x, v[(size_t)p])
                              : term_distance(tri, t, v[(size_t)p], y);
            it = memo.emplace(key, cutoff(dd, cfg.l)).first;
        }
        return it->second;
    };

    for (int p = 1; p < d; ++p)
        for (int q = p + 3; q < d; ++q) {
            ++rep.pairs;
            double logProd = std::log2((double)conv_left(tri, v, p)) +
                             std::log2((double)conv_right(tri, v, p)) +
                             std::log2((double)conv_left(tri, v, q)) +
                             std::log2((double)conv_right(tri, v, q));
            if (logProd > 0) rep.maxTau = std::max(rep.maxTau, logixy / logProd);

            for (size_t ti = 0; ti < led.terms.size(); ++ti) {
                bool inP = seesAt(ti, p), inQ = seesAt(ti, q);
                if (!inP && !inQ) {
                    ++rep.coveringViolations;
                    continue;
                }
                int64_t lhs = cutoff(led.terms[ti].d, cfg.k);
                if (lhs == 0) continue;
                ++rep.ledgerTerms;
                auto sideOk = [&](int idx) {
                    int64_t a = cutAt(leftCut, ti, idx, true);
                    int64_t b = cutAt(rightCut, ti, idx, false);
                    if (!led.terms[ti].annular) return lhs <= 2 * (a + b);
                    double la = a > 0 ? std::log2((double)a) : 0.0;
                    double lb = b > 0 ? std::log2((double)b) : 0.0;
                    return (a > 0 || b > 0) && std::log2((double)lhs) <= 2.0 * (la + lb);
                };
                if (!((inP && sideOk(p)) || (inQ && sideOk(q)))) ++rep.halvingViolations;
            }
        }
    return rep;
}

std::vector<int> cor16_exceptional(const Triangulation& tri, const std::vector<Weights>& v,
                                   double V) {
    int d = (int)v.size() - 1;
    if (d < 5) throw std::invalid_argument("cor16: geodesic of length >= 5 required");
    int64_t ixy = intersection_number(tri, v.front(), v.back());
    if (ixy < 2) return {};
    double logixy = std::log2((double)ixy);
    std::vector<int> bad;
    for (int p = 1; p < d; ++p) {
        double logProd = std::log2((double)conv_left(tri, v, p)) +
                         std::log2((double)conv_right(tri, v, p));
        if (logixy > 2.0 * V * logProd + 1e-9) bad.push_back(p);
    }
    return bad;
}

Cor17Report verify_cor17(const Triangulation& tri, const TightGeodesic& g, double U, double V) {
    const auto& v = g.reps;
    int d = (int)v.size() - 1;
    if (d < 5) throw std::invalid_argument("cor17: record of length >= 5 required");
    int64_t ixy = intersection_number(tri, v.front(), v.back());
    if (ixy < 2) throw std::invalid_argument("cor17: i(x,y) >= 2 required");
    double logixy = std::log2((double)ixy);

    Cor17Report rep;
    for (int p = 1; p < d; ++p)
        for (int q = p + 3; q < d; ++q) {
            ++rep.pairs;
            double logProd = std::log2((double)conv_left(tri, v, p)) +
                             std::log2((double)conv_right(tri, v, p)) +
                             std::log2((double)conv_left(tri, v, q)) +
                             std::log2((double)conv_right(tri, v, q));
            if (logixy + 1e-9 < logProd / (4.0 * U)) ++rep.lowerViolations;
            if (logixy > V * logProd + 1e-9) ++rep.upperViolations;
        }
    return rep;
}

} // namespace curvelab
