#pragma once

#include <cmath>
#include <vector>

namespace isodens {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }

    double norm() const { return std::hypot(x, y); }
    double norm2() const { return x * x + y * y; }
    Vec2 normalized() const {
        const double n = norm();
        return {x / n, y / n};
    }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

/// Closed polygon given by its ordered vertex list (counterclockwise for
/// positive signed area). The closing edge back(last, first) is implicit.
struct Polygon {
    std::vector<Vec2> vertices;

    std::size_t size() const { return vertices.size(); }

    double signed_area() const {
        double a = 0.0;
        const std::size_t n = vertices.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2& p = vertices[i];
            const Vec2& q = vertices[(i + 1) % n];
            a += cross(p, q);
        }
        return 0.5 * a;
    }

    double euclidean_perimeter() const {
        double p = 0.0;
        const std::size_t n = vertices.size();
        for (std::size_t i = 0; i < n; ++i)
            p += (vertices[(i + 1) % n] - vertices[i]).norm();
        return p;
    }

    void reverse() { std::vector<Vec2>(vertices.rbegin(), vertices.rend()).swap(vertices); }
};

/// Clips a polygon against the half-plane {p : dot(n, p) <= c}
/// (Sutherland-Hodgman). Exact for straight interfaces; the result may
/// contain degenerate edges, which do not affect signed area.
inline Polygon clip_halfplane(const Polygon& poly, const Vec2& n, double c) {
    Polygon out;
    const std::size_t m = poly.size();
    if (m == 0) return out;
    for (std::size_t i = 0; i < m; ++i) {
        const Vec2& a = poly.vertices[i];
        const Vec2& b = poly.vertices[(i + 1) % m];
        const double da = dot(n, a) - c;
        const double db = dot(n, b) - c;
        if (da <= 0.0) {
            out.vertices.push_back(a);
            if (db > 0.0) {
                const double t = da / (da - db);
                out.vertices.push_back(a + t * (b - a));
            }
        } else if (db <= 0.0) {
            const double t = da / (da - db);
            out.vertices.push_back(a + t * (b - a));
        }
    }
    return out;
}

}  // namespace isodens
