#include "curvelab/farey.hpp"

#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

namespace curvelab {

namespace {

// Distance from p/q to 1/0 (= infinity). Every path to infinity ends at an
// integer n, and d(p/q, n) = d(q/(p - nq), infinity) after translating and
// inverting; a geodesic can always route through one of the two integers
// closest to p/q, which strictly reduces the denominator.
int dist_to_infty(int64_t p, int64_t q, std::map<std::pair<int64_t, int64_t>, int>& memo) {
    if (q < 0) { p = -p; q = -q; }
    if (q == 0) return 0;
    if (q == 1) return 1;
    auto key = std::make_pair(p, q);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    memo[key] = 1 << 20; // cycle guard; real value set below
    int64_t fl = p >= 0 ? p / q : -((-p + q - 1) / q);
    int best = 1 << 20;
    for (int64_t n : {fl, fl + 1}) {
        int64_t r = p - n * q;
        if (r == 0) { best = std::min(best, 1); continue; }
        best = std::min(best, 1 + dist_to_infty(q, r, memo));
    }
    memo[key] = best;
    return best;
}

// Geodesic from p/q to infinity in the same recursion: route through the
// better of the two nearest integers, solve in the coordinates z' =
// 1/(z - n), and map the sub-path back through z = n + 1/z'.
std::vector<std::pair<int64_t, int64_t>> path_to_infty(
    int64_t p, int64_t q, std::map<std::pair<int64_t, int64_t>, int>& memo) {
    if (q < 0) { p = -p; q = -q; }
    if (q == 0) return {{1, 0}};
    if (q == 1) return {{p, 1}, {1, 0}};
    int64_t fl = p >= 0 ? p / q : -((-p + q - 1) / q);
    int64_t n = fl;
    if (dist_to_infty(q, p - (fl + 1) * q, memo) < dist_to_infty(q, p - fl * q, memo))
        n = fl + 1;
    auto sub = path_to_infty(q, p - n * q, memo);
    std::vector<std::pair<int64_t, int64_t>> path;
    for (auto [pp, qq] : sub) path.push_back({n * pp + qq, pp});
    path.push_back({1, 0});
    return path;
}

} // namespace

int farey_distance(const Slope& a, const Slope& b) {
    if (a == b) return 0;
    // Moebius map sending b to infinity: rows (x, y) and (-b.q, b.p) with
    // x*b.p + y*b.q = 1 (extended gcd), determinant 1.
    int64_t x = 0, y = 0;
    {
        int64_t r0 = b.p, r1 = b.q, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (r1 != 0) {
            int64_t k = r0 / r1;
            r0 -= k * r1; std::swap(r0, r1);
            s0 -= k * s1; std::swap(s0, s1);
            t0 -= k * t1; std::swap(t0, t1);
        }
        if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
        if (r0 != 1) throw std::invalid_argument("farey: slope not primitive");
        x = s0;
        y = t0;
    }
    int64_t p = x * a.p + y * a.q;
    int64_t q = -b.q * a.p + b.p * a.q;
    if (q == 0) return 0;
    std::map<std::pair<int64_t, int64_t>, int> memo;
    return dist_to_infty(p, q, memo);
}

std::vector<Slope> farey_path(const Slope& a, const Slope& b) {
    if (a == b) return {canonical_slope(a.p, a.q)};
    int64_t x = 0, y = 0;
    {
        int64_t r0 = b.p, r1 = b.q, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (r1 != 0) {
            int64_t k = r0 / r1;
            r0 -= k * r1; std::swap(r0, r1);
            s0 -= k * s1; std::swap(s0, s1);
            t0 -= k * t1; std::swap(t0, t1);
        }
        if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
        if (r0 != 1) throw std::invalid_argument("farey: slope not primitive");
        x = s0;
        y = t0;
    }
    int64_t p = x * a.p + y * a.q;
    int64_t q = -b.q * a.p + b.p * a.q;
    std::map<std::pair<int64_t, int64_t>, int> memo;
    auto mapped = path_to_infty(p, q, memo);
    std::vector<Slope> path;
    for (auto [pp, qq] : mapped) // inverse Moebius: columns (b.p, b.q), (-y, x)
        path.push_back(canonical_slope(b.p * pp - y * qq, b.q * pp + x * qq));
    return path;
}

} // namespace curvelab
