#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace uvpack {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

inline Vec2 operator*(double s, const Vec2& v) { return {s * v.x, s * v.y}; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm2(const Vec2& a) { return a.x * a.x + a.y * a.y; }
inline double norm(const Vec2& a) { return std::sqrt(norm2(a)); }
inline Vec2 perp(const Vec2& a) { return {-a.y, a.x}; }

/// Rigid motion in the plane: rotation by theta followed by translation.
struct RigidPose {
    double theta = 0.0; // stored in [0, 2*pi)
    Vec2 t{};

    Vec2 apply(const Vec2& v) const {
        const double c = std::cos(theta), s = std::sin(theta);
        return {c * v.x - s * v.y + t.x, s * v.x + c * v.y + t.y};
    }
};

inline double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    if (a == kTwoPi) a = 0.0;
    return a;
}

/// compose(a, b): apply b first, then a.
inline RigidPose compose(const RigidPose& a, const RigidPose& b) {
    RigidPose r;
    r.theta = wrap_angle(a.theta + b.theta);
    const double c = std::cos(a.theta), s = std::sin(a.theta);
    r.t = {c * b.t.x - s * b.t.y + a.t.x, s * b.t.x + c * b.t.y + a.t.y};
    return r;
}

struct Rect {
    Vec2 min{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    Vec2 max{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};

    bool valid() const { return min.x <= max.x && min.y <= max.y; }
    double width() const { return max.x - min.x; }
    double height() const { return max.y - min.y; }
    double area() const { return valid() ? width() * height() : 0.0; }
    double diagonal() const { return valid() ? std::hypot(width(), height()) : 0.0; }
    Vec2 center() const { return {(min.x + max.x) * 0.5, (min.y + max.y) * 0.5}; }

    void expand(const Vec2& p) {
        min.x = std::min(min.x, p.x);
        min.y = std::min(min.y, p.y);
        max.x = std::max(max.x, p.x);
        max.y = std::max(max.y, p.y);
    }
    void expand(const Rect& r) {
        if (!r.valid()) return;
        expand(r.min);
        expand(r.max);
    }
    bool contains(const Vec2& p, double eps = 0.0) const {
        return p.x >= min.x - eps && p.x <= max.x + eps && p.y >= min.y - eps && p.y <= max.y + eps;
    }
    bool overlaps(const Rect& o) const {
        return min.x <= o.max.x && o.min.x <= max.x && min.y <= o.max.y && o.min.y <= max.y;
    }
    Rect united(const Rect& o) const {
        Rect r = *this;
        r.expand(o);
        return r;
    }
};

/// Squared distance between a point and an axis-aligned box (0 inside).
inline double rect_point_dist2(const Rect& r, const Vec2& p) {
    const double dx = std::max({r.min.x - p.x, 0.0, p.x - r.max.x});
    const double dy = std::max({r.min.y - p.y, 0.0, p.y - r.max.y});
    return dx * dx + dy * dy;
}

inline double rect_rect_dist2(const Rect& a, const Rect& b) {
    const double dx = std::max({a.min.x - b.max.x, 0.0, b.min.x - a.max.x});
    const double dy = std::max({a.min.y - b.max.y, 0.0, b.min.y - a.max.y});
    return dx * dx + dy * dy;
}

} // namespace uvpack
