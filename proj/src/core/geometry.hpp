#ifndef OPTICROUTE_CORE_GEOMETRY_HPP
#define OPTICROUTE_CORE_GEOMETRY_HPP

#include <cmath>

namespace opticroute {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double k) const { return {x * k, y * k}; }
  Vec2 operator/(double k) const { return {x / k, y / k}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  Vec2 normalized() const {
    const double n = norm();
    return {x / n, y / n};
  }
};

// Position in the plane, meters.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator-(Point2 o) const { return {x - o.x, y - o.y}; }
  Point2 operator+(Vec2 v) const { return {x + v.x, y + v.y}; }
  bool operator==(const Point2&) const = default;
};

inline double distance(Point2 a, Point2 b) { return (a - b).norm(); }

inline bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline Point2 lerp(Point2 a, Point2 b, double t) {
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

}  // namespace opticroute

#endif
