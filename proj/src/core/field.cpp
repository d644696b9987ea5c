#include "core/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace opticroute {

namespace {

std::string point_str(Point2 p) {
  return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

const char* kind_name(FieldKind k) {
  switch (k) {
    case FieldKind::Density: return "density";
    case FieldKind::Cost: return "cost";
    case FieldKind::Eikonal: return "eikonal";
  }
  return "?";
}

}  // namespace

double GridSpec::boundary_distance(Point2 p) const {
  const double dx = std::min(p.x - x_min, x_max() - p.x);
  const double dy = std::min(p.y - y_min, y_max() - p.y);
  return std::min(dx, dy);
}

void GridSpec::validate() const {
  if (!(std::isfinite(x_min) && std::isfinite(y_min) && std::isfinite(h)))
    throw ParamError("grid spec: non-finite origin or spacing");
  if (nx < 2 || ny < 2) throw ParamError("grid spec: nx and ny must be >= 2");
  if (!(h > 0.0)) throw ParamError("grid spec: spacing h must be positive");
}

Trajectory Trajectory::from_points(std::vector<Point2> pts) {
  if (pts.size() < 2) throw ParamError("trajectory needs at least 2 points");
  double arc = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!finite(pts[i])) throw ParamError("trajectory contains a non-finite point");
    if (i > 0) {
      const double d = distance(pts[i - 1], pts[i]);
      if (d == 0.0) throw ParamError("trajectory has coincident consecutive points");
      arc += d;
    }
  }
  Trajectory t;
  t.points = std::move(pts);
  t.arc_length = arc;
  return t;
}

ScalarField2D::ScalarField2D(GridSpec spec, std::vector<double> values, FieldKind kind)
    : spec_(spec), values_(std::move(values)), kind_(kind) {
  spec_.validate();
  if (values_.size() != spec_.node_count())
    throw ParamError("field: value count " + std::to_string(values_.size()) +
                     " does not match grid " + std::to_string(spec_.nx) + "x" +
                     std::to_string(spec_.ny));
  min_ = values_[0];
  max_ = values_[0];
  for (double v : values_) {
    if (!std::isfinite(v)) throw ParamError("field: non-finite value");
    min_ = std::min(min_, v);
    max_ = std::max(max_, v);
  }
  if ((kind_ == FieldKind::Density || kind_ == FieldKind::Cost) && !(min_ > 0.0))
    throw ParamError(std::string("field: ") + kind_name(kind_) +
                     " values must be strictly positive (min = " + std::to_string(min_) + ")");
  if (kind_ == FieldKind::Eikonal && min_ < 0.0)
    throw ParamError("field: eikonal values must be nonnegative");
}

ScalarField2D ScalarField2D::from_function(const GridSpec& spec,
                                           const std::function<double(double, double)>& f,
                                           FieldKind kind) {
  spec.validate();
  std::vector<double> values(spec.node_count());
  for (int iy = 0; iy < spec.ny; ++iy)
    for (int ix = 0; ix < spec.nx; ++ix)
      values[static_cast<std::size_t>(iy) * spec.nx + ix] = f(spec.x_at(ix), spec.y_at(iy));
  return ScalarField2D(spec, std::move(values), kind);
}

double ScalarField2D::sample(Point2 p) const {
  if (!finite(p) || !spec_.contains(p))
    throw DomainError("sample: point " + point_str(p) + " outside field domain");
  // Cell index clamped so the top/right edges land in the last cell with t=1.
  double fx = (p.x - spec_.x_min) / spec_.h;
  double fy = (p.y - spec_.y_min) / spec_.h;
  int ix = std::min(static_cast<int>(fx), spec_.nx - 2);
  int iy = std::min(static_cast<int>(fy), spec_.ny - 2);
  ix = std::max(ix, 0);
  iy = std::max(iy, 0);
  const double tx = (p.x - spec_.x_at(ix)) / spec_.h;
  const double ty = (p.y - spec_.y_at(iy)) / spec_.h;
  const double v00 = at(ix, iy);
  const double v10 = at(ix + 1, iy);
  const double v01 = at(ix, iy + 1);
  const double v11 = at(ix + 1, iy + 1);
  return (1 - tx) * (1 - ty) * v00 + tx * (1 - ty) * v10 + (1 - tx) * ty * v01 + tx * ty * v11;
}

Vec2 ScalarField2D::gradient(Point2 p) const {
  if (!finite(p)) throw DomainError("gradient: non-finite point");
  const double margin = spec_.h * (1.0 - 1e-12);
  if (spec_.boundary_distance(p) < margin)
    throw DomainError("gradient: point " + point_str(p) + " closer than h to the boundary");
  const double half = spec_.h / 2.0;
  const double gx = (sample({p.x + half, p.y}) - sample({p.x - half, p.y})) / spec_.h;
  const double gy = (sample({p.x, p.y + half}) - sample({p.x, p.y - half})) / spec_.h;
  return {gx, gy};
}

double line_integral(const ScalarField2D& field, std::span<const Point2> polyline) {
  if (polyline.size() < 2) throw ParamError("line_integral: need at least 2 points");
  const double max_step = field.spec().h / 2.0;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
    const Point2 a = polyline[i];
    const Point2 b = polyline[i + 1];
    const double len = distance(a, b);
    if (len == 0.0) continue;
    const int n_sub = std::max(1, static_cast<int>(std::ceil(len / max_step)));
    const double ds = len / n_sub;
    double seg = 0.0;
    for (int k = 0; k < n_sub; ++k) {
      const Point2 mid = lerp(a, b, (k + 0.5) / n_sub);
      seg += field.sample(mid);
    }
    total += seg * ds;
  }
  return total;
}

double line_integral(const ScalarField2D& field, Trajectory& traj) {
  traj.optical_length = line_integral(field, traj.points);
  return traj.optical_length;
}

std::vector<std::pair<double, double>> cumulative_line_integral(const ScalarField2D& field,
                                                                std::span<const Point2> polyline) {
  std::vector<std::pair<double, double>> out;
  out.reserve(polyline.size());
  out.emplace_back(0.0, 0.0);
  double s = 0.0, c = 0.0;
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
    const Point2 seg[2] = {polyline[i], polyline[i + 1]};
    s += distance(seg[0], seg[1]);
    c += line_integral(field, std::span<const Point2>(seg, 2));
    out.emplace_back(s, c);
  }
  return out;
}

}  // namespace opticroute
