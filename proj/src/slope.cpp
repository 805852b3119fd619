#include "curvelab/slope.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace curvelab {

Slope canonical_slope(int64_t p, int64_t q) {
    if (p == 0 && q == 0) throw std::invalid_argument("slope: 0/0");
    int64_t g = std::gcd(std::abs(p), std::abs(q));
    p /= g;
    q /= g;
    if (q < 0 || (q == 0 && p < 0)) { p = -p; q = -q; }
    return Slope{p, q};
}

Weights curve_from_slope11(const Slope& s) {
    return {std::abs(s.p), std::abs(s.q), std::abs(s.p - s.q)};
}

Weights curve_from_slope04(const Slope& s) {
    int64_t a = std::abs(s.p), b = std::abs(s.q), c = std::abs(s.p - s.q);
    return {a, b, c, c, b, a};
}

std::optional<std::pair<Slope, int64_t>> slope_of_triple(int64_t x, int64_t y, int64_t z) {
    int64_t m = std::gcd(std::gcd(x, y), z);
    if (m == 0) return std::nullopt;
    int64_t a = x / m, b = y / m, c = z / m;
    if (std::gcd(a, b) != 1) return std::nullopt;
    Slope s;
    if (c == std::abs(a - b)) s = canonical_slope(a, b);
    else if (c == a + b) s = canonical_slope(-a, b);
    else return std::nullopt;
    return std::make_pair(s, m);
}

std::optional<std::pair<Slope, int64_t>> slope_of_curve11(const Weights& w) {
    if (w.size() != 3) return std::nullopt;
    auto r = slope_of_triple(w[0], w[1], w[2]);
    if (!r) return std::nullopt;
    Weights base = curve_from_slope11(r->first);
    for (size_t e = 0; e < 3; ++e)
        if (base[e] * r->second != w[e]) return std::nullopt;
    return r;
}

std::optional<std::pair<Slope, int64_t>> slope_of_curve04(const Weights& w) {
    if (w.size() != 6) return std::nullopt;
    if (w[0] != w[5] || w[1] != w[4] || w[2] != w[3]) return std::nullopt;
    auto r = slope_of_triple(w[0], w[1], w[2]);
    if (!r) return std::nullopt;
    Weights base = curve_from_slope04(r->first);
    for (size_t e = 0; e < 6; ++e)
        if (base[e] * r->second != w[e]) return std::nullopt;
    return r;
}

} // namespace curvelab
