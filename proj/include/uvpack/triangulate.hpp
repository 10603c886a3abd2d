#pragma once

#include <cstdlib>
#include <vector>

#include "uvpack/errors.hpp"
#include "uvpack/polygon.hpp"

namespace uvpack {
namespace detail {

inline bool point_in_triangle(const Vec2& p, const Vec2& a, const Vec2& b, const Vec2& c, double eps) {
    const double d1 = cross(b - a, p - a);
    const double d2 = cross(c - b, p - b);
    const double d3 = cross(a - c, p - c);
    return d1 >= -eps && d2 >= -eps && d3 >= -eps;
}

// Does the open segment (a,b) properly cross any edge of the loop?
inline bool segment_hits_loop(const Vec2& a, const Vec2& b, const Loop& loop) {
    const size_t n = loop.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++)
        if (segments_cross_properly(a, b, loop[j], loop[i]))
            return true;
    return false;
}

} // namespace detail

/// Ear-clipping triangulation of a polygon with holes.
/// Holes are merged into the outer boundary through bridge edges, then the
/// resulting (weakly simple) polygon is clipped. Expects outer CCW, holes CW.
inline std::vector<Triangle> triangulate(const Loop& outer, const std::vector<Loop>& holes) {
    if (outer.size() < 3) throw DegeneratePatch("outer loop has fewer than 3 vertices");
    Loop poly = outer;

    // Bridge each hole (rightmost first) to the current boundary with a
    // mutually visible vertex pair.
    std::vector<const Loop*> pending;
    for (const Loop& h : holes) pending.push_back(&h);
    std::sort(pending.begin(), pending.end(), [](const Loop* a, const Loop* b) {
        return loop_bounds(*a).max.x > loop_bounds(*b).max.x;
    });
    std::vector<Loop> remaining_holes;
    for (const Loop* hp : pending) remaining_holes.push_back(*hp);

    for (size_t hi = 0; hi < remaining_holes.size(); ++hi) {
        const Loop& hole = remaining_holes[hi];
        if (hole.size() < 3) continue;
        bool bridged = false;
        // Candidate pairs ordered by distance keeps bridges short and robust.
        struct Cand { double d2; size_t vi; size_t pi; };
        std::vector<Cand> cands;
        cands.reserve(hole.size() * poly.size());
        for (size_t vi = 0; vi < hole.size(); ++vi)
            for (size_t pi = 0; pi < poly.size(); ++pi)
                cands.push_back({norm2(hole[vi] - poly[pi]), vi, pi});
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.d2 < b.d2; });
        for (const Cand& c : cands) {
            const Vec2& hv = hole[c.vi];
            const Vec2& pv = poly[c.pi];
            if (detail::segment_hits_loop(hv, pv, poly)) continue;
            bool blocked = false;
            for (size_t hj = hi; hj < remaining_holes.size() && !blocked; ++hj)
                blocked = detail::segment_hits_loop(hv, pv, remaining_holes[hj]);
            if (blocked) continue;
            // Splice: poly[0..pi], hole[vi..], hole[..vi], poly[pi..].
            Loop merged;
            merged.reserve(poly.size() + hole.size() + 2);
            for (size_t i = 0; i <= c.pi; ++i) merged.push_back(poly[i]);
            for (size_t k = 0; k <= hole.size(); ++k) merged.push_back(hole[(c.vi + k) % hole.size()]);
            for (size_t i = c.pi; i < poly.size(); ++i) merged.push_back(poly[i]);
            poly.swap(merged);
            bridged = true;
            break;
        }
        if (!bridged) throw DegeneratePatch("could not bridge hole into outer boundary");
    }

    // Ear clipping with the degenerate-lock fallback of clipping the
    // flattest remaining corner so the loop always terminates.
    std::vector<Triangle> tris;
    std::vector<size_t> idx(poly.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    const Rect bb = loop_bounds(poly);
    const double eps = 1e-12 * std::max(1.0, bb.diagonal() * bb.diagonal());

    while (idx.size() > 3) {
        const size_t m = idx.size();
        bool clipped = false;
        size_t flattest = 0;
        double flattest_abs = std::numeric_limits<double>::infinity();
        for (size_t k = 0; k < m; ++k) {
            const Vec2& a = poly[idx[(k + m - 1) % m]];
            const Vec2& b = poly[idx[k]];
            const Vec2& c = poly[idx[(k + 1) % m]];
            const double cr = cross(b - a, c - b);
            if (std::abs(cr) < flattest_abs) { flattest_abs = std::abs(cr); flattest = k; }
            if (cr <= eps) continue; // reflex or flat corner
            bool contains_other = false;
            for (size_t j = 0; j < m && !contains_other; ++j) {
                if (j == k || j == (k + m - 1) % m || j == (k + 1) % m) continue;
                const Vec2& p = poly[idx[j]];
                if (p == a || p == b || p == c) continue; // bridge duplicates
                contains_other = detail::point_in_triangle(p, a, b, c, eps);
            }
            if (contains_other) continue;
            tris.push_back({a, b, c});
            idx.erase(idx.begin() + static_cast<long>(k));
            clipped = true;
            break;
        }
        if (!clipped) {
            const size_t k = flattest;
            const Vec2& a = poly[idx[(k + m - 1) % m]];
            const Vec2& b = poly[idx[k]];
            const Vec2& c = poly[idx[(k + 1) % m]];
            if (cross(b - a, c - b) > 0.0) tris.push_back({a, b, c});
            idx.erase(idx.begin() + static_cast<long>(k));
        }
    }
    if (idx.size() == 3) {
        const Triangle t{poly[idx[0]], poly[idx[1]], poly[idx[2]]};
        if (t.area() > 0.0) tris.push_back(t);
    }
    return tris;
}

} // namespace uvpack
