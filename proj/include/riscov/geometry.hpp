#pragma once

#include <cmath>

namespace riscov::geom {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::sqrt(norm2(a)); }

// Left-hand normal; (1,0) -> (0,1).
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

inline Vec2 polar(double r, double theta) { return {r * std::cos(theta), r * std::sin(theta)}; }

// Squared distance from p to the segment [a, b].  a == b degenerates to the point.
double point_segment_dist2(Vec2 p, Vec2 a, Vec2 b);

// Exact area of the intersection of a simple polygon (vertices in order,
// either orientation) with the disk of radius `radius` centered at the origin.
double polygon_disk_area(const Vec2* verts, int n, double radius);

} // namespace riscov::geom
