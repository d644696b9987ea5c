#ifndef OPTICROUTE_CORE_EIKONAL_HPP
#define OPTICROUTE_CORE_EIKONAL_HPP

#include <memory>
#include <variant>
#include <vector>

#include "core/field.hpp"
#include "core/geometry.hpp"

namespace opticroute {

// Region of zero accumulated cost that wavefronts expand from: a point, a
// disk, or a simple polygon, all inside the grid rectangle.
class SourceSet {
 public:
  struct Point {
    Point2 p;
  };
  struct Disk {
    Point2 center;
    double radius;
  };
  struct Polygon {
    std::vector<Point2> vertices;
  };

  static SourceSet point(Point2 p);
  static SourceSet disk(Point2 center, double radius);
  static SourceSet polygon(std::vector<Point2> vertices);  // simple, >= 3 vertices

  bool is_point() const { return std::holds_alternative<Point>(v_); }
  const Point* as_point() const { return std::get_if<Point>(&v_); }
  const Disk* as_disk() const { return std::get_if<Disk>(&v_); }
  const Polygon* as_polygon() const { return std::get_if<Polygon>(&v_); }

  bool contains(Point2 p) const;        // inside or on the source geometry
  Point2 nearest_point(Point2 p) const; // closest point of the source to p
  void check_inside(const GridSpec& spec) const;  // DomainError if outside grid

 private:
  std::variant<Point, Disk, Polygon> v_;
};

// Iso-contour of the eikonal field at one level: one open or closed polyline.
struct Contour {
  double level = 0.0;
  bool closed = false;
  std::vector<Point2> points;
};

// Minimum accumulated cost S from the source to every grid node, with
// S = 0 on the source: the viscosity (first-arrival) solution of
// |grad S| = c. Immutable; rays may be extracted concurrently.
class EikonalSolution {
 public:
  EikonalSolution(FieldPtr cost, SourceSet source, ScalarField2D s);

  const ScalarField2D& s() const { return s_; }
  const ScalarField2D& cost() const { return *cost_; }
  FieldPtr cost_ptr() const { return cost_; }
  const SourceSet& source() const { return source_; }

  double value(Point2 p) const { return s_.sample(p); }

  // Marching-squares iso-contours at each level (positive, sorted). Levels
  // above max(S) yield no contours for that level, which is not an error.
  std::vector<Contour> extract_wavefronts(std::span<const double> levels) const;

  // Steepest-descent polyline from `from` to the source, returned oriented
  // source -> from, with optical_length filled from the cost field.
  // step <= h/2. Descent stops once S < c * step and connects to the nearest
  // source point; a stagnating gradient raises ConvergenceError.
  Trajectory trace_descent_ray(Point2 from, double step) const;

 private:
  FieldPtr cost_;
  SourceSet source_;
  ScalarField2D s_;
};

// First-order upwind fast marching from the source over the cost field.
// Point sources seed the four surrounding nodes with their exact local
// distances; region sources rasterize to S = 0 on covered nodes. Accepted
// values are verified to be nondecreasing as the front marches.
EikonalSolution solve_eikonal(FieldPtr cost, const SourceSet& source);

}  // namespace opticroute

#endif
