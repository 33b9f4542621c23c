#include "riscov/geometry.hpp"

#include <algorithm>

namespace riscov::geom {

double point_segment_dist2(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 d = b - a;
    const double len2 = norm2(d);
    if (len2 == 0.0) return norm2(p - a);
    const double t = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
    return norm2(p - (a + d * t));
}

namespace {

// Signed area of triangle(origin, a, b) clipped to the origin-centered disk.
// Summing over the directed edges of a polygon yields the polygon/disk
// intersection area (positive for counter-clockwise order).
double tri_disk_area(Vec2 a, Vec2 b, double R) {
    const double R2 = R * R;
    const auto sector = [R2](Vec2 p, Vec2 q) {
        return 0.5 * R2 * std::atan2(cross(p, q), dot(p, q));
    };

    const bool a_in = norm2(a) <= R2;
    const bool b_in = norm2(b) <= R2;
    if (a_in && b_in) return 0.5 * cross(a, b);

    // Chord parameters of segment a + t(b-a) against the circle.
    const Vec2 d = b - a;
    const double A = norm2(d);
    const double B = dot(a, d);
    const double C = norm2(a) - R2;
    const double disc = B * B - A * C;

    if (a_in) { // exits through t2
        const double t2 = (-B + std::sqrt(std::max(disc, 0.0))) / A;
        const Vec2 p = a + d * t2;
        return 0.5 * cross(a, p) + sector(p, b);
    }
    if (b_in) { // enters through t1
        const double t1 = (-B - std::sqrt(std::max(disc, 0.0))) / A;
        const Vec2 p = a + d * t1;
        return sector(a, p) + 0.5 * cross(p, b);
    }

    // Both endpoints outside: the segment may still cut a chord.
    if (disc > 0.0) {
        const double sq = std::sqrt(disc);
        const double t1 = (-B - sq) / A;
        const double t2 = (-B + sq) / A;
        if (t1 > 0.0 && t2 < 1.0 && t1 < t2) {
            const Vec2 p = a + d * t1;
            const Vec2 q = a + d * t2;
            return sector(a, p) + 0.5 * cross(p, q) + sector(q, b);
        }
    }
    return sector(a, b);
}

} // namespace

double polygon_disk_area(const Vec2* verts, int n, double radius) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        acc += tri_disk_area(verts[i], verts[(i + 1) % n], radius);
    }
    return std::abs(acc);
}

} // namespace riscov::geom
