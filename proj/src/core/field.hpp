#ifndef OPTICROUTE_CORE_FIELD_HPP
#define OPTICROUTE_CORE_FIELD_HPP

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "core/geometry.hpp"

namespace opticroute {

// Uniform square grid: one spacing h shared by both axes.
struct GridSpec {
  double x_min = 0.0;
  double y_min = 0.0;
  int nx = 2;
  int ny = 2;
  double h = 1.0;

  double x_max() const { return x_min + (nx - 1) * h; }
  double y_max() const { return y_min + (ny - 1) * h; }
  double x_at(int ix) const { return x_min + ix * h; }
  double y_at(int iy) const { return y_min + iy * h; }
  std::size_t node_count() const { return static_cast<std::size_t>(nx) * ny; }
  bool contains(Point2 p) const {
    return p.x >= x_min && p.x <= x_max() && p.y >= y_min && p.y <= y_max();
  }
  // Distance to the nearest edge of the grid rectangle (negative outside).
  double boundary_distance(Point2 p) const;
  void validate() const;  // throws ParamError on a malformed spec

  bool operator==(const GridSpec&) const = default;
};

enum class FieldKind { Density, Cost, Eikonal };

// Oriented polyline with its arc length and, once a line integral has been
// taken along it, its accumulated cost (optical length).
struct Trajectory {
  std::vector<Point2> points;
  double arc_length = 0.0;
  double optical_length = 0.0;

  // Validates >= 2 finite points with distinct consecutive entries and fills
  // arc_length.
  static Trajectory from_points(std::vector<Point2> pts);

  Point2 front() const { return points.front(); }
  Point2 back() const { return points.back(); }
};

// Sampled scalar function on a rectangular grid: node density (nodes/m^2),
// cost (unitless), or eikonal values (meters). Immutable after construction;
// all member operations are const and safe to call concurrently.
class ScalarField2D {
 public:
  // values are row-major over grid nodes: index = iy * nx + ix.
  ScalarField2D(GridSpec spec, std::vector<double> values, FieldKind kind);

  // Rasterizes an analytic expression onto the grid.
  static ScalarField2D from_function(const GridSpec& spec,
                                     const std::function<double(double, double)>& f,
                                     FieldKind kind);

  const GridSpec& spec() const { return spec_; }
  FieldKind kind() const { return kind_; }
  std::span<const double> values() const { return values_; }
  double at(int ix, int iy) const { return values_[static_cast<std::size_t>(iy) * spec_.nx + ix]; }
  double min_value() const { return min_; }
  double max_value() const { return max_; }

  // Bilinear interpolation of the four surrounding grid values; exact at
  // grid nodes. Out-of-domain points raise DomainError: extrapolation is
  // never performed.
  double sample(Point2 p) const;

  // Central difference of the bilinear interpolant sampled at +-h/2 per axis.
  // Requires p at distance >= h from the boundary.
  Vec2 gradient(Point2 p) const;

 private:
  GridSpec spec_;
  std::vector<double> values_;
  FieldKind kind_;
  double min_ = 0.0;
  double max_ = 0.0;
};

using FieldPtr = std::shared_ptr<const ScalarField2D>;

// Composite-midpoint quadrature of the field along the polyline, sub-steps
// <= h/2. Raises DomainError if the trajectory leaves the grid rectangle.
double line_integral(const ScalarField2D& field, std::span<const Point2> polyline);

// Same, storing the result in traj.optical_length.
double line_integral(const ScalarField2D& field, Trajectory& traj);

// Cumulative (arc length, cost integral) at every vertex; used by CSV export.
// Segment sums match line_integral exactly, so concatenation is additive.
std::vector<std::pair<double, double>> cumulative_line_integral(const ScalarField2D& field,
                                                                std::span<const Point2> polyline);

}  // namespace opticroute

#endif
