#include "epc/exactpoly/newton.hpp"

#include "epc/error.hpp"

#include <algorithm>
#include <map>

namespace epc {

namespace {

struct Point {
    int e;
    int u;
};

// Cross product sign of (b - a) x (c - a); <= 0 means b is not strictly
// below the segment a-c.
Integer cross(const Point& a, const Point& b, const Point& c) {
    return Integer(b.e - a.e) * Integer(c.u - a.u) - Integer(b.u - a.u) * Integer(c.e - a.e);
}

}  // namespace

DominantBalances dominant_balances(const BiPoly& p) {
    if (p.is_zero()) throw InvalidArgument("dominant_balances: zero polynomial");
    if (p.degree_e() < 1) throw InvalidArgument("dominant_balances: polynomial does not depend on E");

    // Lowest u-power for each E-power.
    std::map<int, int> lowest;
    for (const auto& [ex, c] : p.terms()) {
        auto [it, inserted] = lowest.try_emplace(ex.first, ex.second);
        if (!inserted && ex.second < it->second) it->second = ex.second;
    }

    std::vector<Point> hull;
    for (const auto& [e, u] : lowest) {
        Point pt{e, u};
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
        hull.push_back(pt);
    }

    DominantBalances out;
    out.exact_zero_roots = hull.front().e;
    const int m = p.scale_base();
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        const Point& a = hull[k];
        const Point& b = hull[k + 1];
        Rational u_slope(Integer(a.u - b.u), Integer(b.e - a.e));
        if (u_slope.sign() < 0) {
            out.infinite_branches += b.e - a.e;
            continue;
        }
        // Terms with j + i*s equal to the edge value lie on the edge.
        Rational level = Rational(a.u) + Rational(a.e) * u_slope;
        std::vector<Rational> cs(static_cast<std::size_t>(b.e - a.e) + 1);
        for (const auto& [ex, c] : p.terms()) {
            if (ex.first < a.e || ex.first > b.e) continue;
            if (Rational(ex.second) + Rational(ex.first) * u_slope == level)
                cs[static_cast<std::size_t>(ex.first - a.e)] += c;
        }
        out.balances.push_back({u_slope / m, u_slope, UniPoly(std::move(cs))});
    }
    // Hull order gives decreasing slopes; report largest roots first.
    std::reverse(out.balances.begin(), out.balances.end());
    return out;
}

}  // namespace epc
