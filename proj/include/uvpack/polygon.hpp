#pragma once

#include <algorithm>
#include <vector>

#include "uvpack/vec.hpp"

namespace uvpack {

using Loop = std::vector<Vec2>; // closed implicitly (last vertex connects to first)

inline double signed_area(const Loop& loop) {
    double a = 0.0;
    const size_t n = loop.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++)
        a += cross(loop[j], loop[i]);
    return 0.5 * a;
}

/// Area-weighted centroid contribution of a loop; add contributions of the
/// outer loop and holes, then divide by the total signed area.
inline Vec2 loop_centroid_times_area(const Loop& loop) {
    Vec2 c{0.0, 0.0};
    const size_t n = loop.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const double w = cross(loop[j], loop[i]);
        c.x += (loop[j].x + loop[i].x) * w;
        c.y += (loop[j].y + loop[i].y) * w;
    }
    return c / 6.0;
}

inline Rect loop_bounds(const Loop& loop) {
    Rect r;
    for (const Vec2& p : loop) r.expand(p);
    return r;
}

/// Even-odd crossing test against a single loop.
inline bool point_in_loop(const Vec2& p, const Loop& loop) {
    bool in = false;
    const size_t n = loop.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& a = loop[j];
        const Vec2& b = loop[i];
        if ((b.y > p.y) != (a.y > p.y)) {
            const double xi = b.x + (p.y - b.y) / (a.y - b.y) * (a.x - b.x);
            if (p.x < xi) in = !in;
        }
    }
    return in;
}

inline double point_segment_dist2(const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 ab = b - a;
    const double len2 = norm2(ab);
    double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const Vec2 c = a + t * ab;
    return norm2(p - c);
}

inline double segment_segment_dist2(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    const double d1 = cross(b - a, c - a);
    const double d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c);
    const double d4 = cross(d - c, b - c);
    if (((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) &&
        ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0)))
        return 0.0; // proper crossing
    double m = point_segment_dist2(a, c, d);
    m = std::min(m, point_segment_dist2(b, c, d));
    m = std::min(m, point_segment_dist2(c, a, b));
    m = std::min(m, point_segment_dist2(d, a, b));
    return m;
}

/// Strict interior crossing: segments cross at a single interior point of both.
inline bool segments_cross_properly(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    const double d1 = cross(b - a, c - a);
    const double d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c);
    const double d4 = cross(d - c, b - c);
    return ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) &&
           ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0));
}

struct Triangle {
    Vec2 a, b, c;

    double area() const { return 0.5 * cross(b - a, c - a); }
    Vec2 centroid() const { return (a + b + c) / 3.0; }
    Rect bounds() const {
        Rect r;
        r.expand(a);
        r.expand(b);
        r.expand(c);
        return r;
    }
};

/// Open-set separating-axis test: true iff the triangle interiors intersect.
/// Touching boundaries do not count.
inline bool triangle_interiors_overlap(const Triangle& s, const Triangle& t, double eps = 1e-12) {
    const Vec2* tri[2][3] = {{&s.a, &s.b, &s.c}, {&t.a, &t.b, &t.c}};
    for (int k = 0; k < 2; ++k) {
        for (int e = 0; e < 3; ++e) {
            const Vec2 p = *tri[k][e];
            const Vec2 q = *tri[k][(e + 1) % 3];
            const Vec2 n = perp(q - p);
            double mins = std::numeric_limits<double>::infinity(), maxs = -mins;
            double mint = mins, maxt = -mins;
            for (int i = 0; i < 3; ++i) {
                const double ps = dot(*tri[0][i], n);
                const double pt = dot(*tri[1][i], n);
                mins = std::min(mins, ps); maxs = std::max(maxs, ps);
                mint = std::min(mint, pt); maxt = std::max(maxt, pt);
            }
            const double scale = std::max(maxs - mins, maxt - mint);
            if (maxs <= mint + eps * scale || maxt <= mins + eps * scale)
                return false;
        }
    }
    return true;
}

/// Monotone-chain convex hull, CCW, no duplicate endpoint.
inline Loop convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n < 3) return pts;
    Loop h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0.0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = n - 1, lo = k + 1; i-- > 0;) {
        while (k >= lo && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0.0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

/// Douglas-Peucker simplification of a closed loop.
inline Loop simplify_loop(const Loop& loop, double tol) {
    const size_t n = loop.size();
    if (n < 4) return loop;
    std::vector<char> keep(n, 0);
    // Anchor on the two extreme points so the split is well conditioned.
    size_t i0 = 0, i1 = 0;
    for (size_t i = 1; i < n; ++i) {
        if (loop[i].x < loop[i0].x || (loop[i].x == loop[i0].x && loop[i].y < loop[i0].y)) i0 = i;
        if (loop[i].x > loop[i1].x || (loop[i].x == loop[i1].x && loop[i].y > loop[i1].y)) i1 = i;
    }
    if (i0 == i1) return loop;
    keep[i0] = keep[i1] = 1;
    const double tol2 = tol * tol;
    // Iterative stack over index ranges (circular).
    std::vector<std::pair<size_t, size_t>> stack{{i0, i1}, {i1, i0}};
    while (!stack.empty()) {
        auto [s, e] = stack.back();
        stack.pop_back();
        double dmax = tol2;
        size_t imax = s;
        for (size_t i = (s + 1) % n; i != e; i = (i + 1) % n) {
            const double d = point_segment_dist2(loop[i], loop[s], loop[e]);
            if (d > dmax) { dmax = d; imax = i; }
        }
        if (imax != s) {
            keep[imax] = 1;
            stack.push_back({s, imax});
            stack.push_back({imax, e});
        }
    }
    Loop out;
    for (size_t i = 0; i < n; ++i)
        if (keep[i]) out.push_back(loop[i]);
    return out;
}

} // namespace uvpack
