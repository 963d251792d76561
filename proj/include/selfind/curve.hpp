#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "selfind/vec3.hpp"

namespace selfind {

struct QuadratureSpec;

enum class CurveKind { circle, ellipse, harmonic_knot, helix, segment, offset };

const char* to_string(CurveKind kind);
CurveKind curve_kind_from_string(std::string_view name);

// Position and the first three derivatives with respect to the raw parameter.
struct Derivatives {
  Vec3 p, d1, d2, d3;
};

struct PointTangent {
  Vec3 point;
  Vec3 tangent;  // unit
};

struct FrenetData {
  Vec3 point;
  Vec3 tangent;
  Vec3 normal;
  Vec3 binormal;
  double curvature = 0.0;
  double torsion = 0.0;
  double curvature_derivative = 0.0;  // d(kappa)/ds
};

// A parametrization u -> gamma(u) on [0, period()]. Implementations are
// immutable and C^3; closed shapes must match derivatives at the endpoints.
class CurveShape {
 public:
  virtual ~CurveShape() = default;
  virtual CurveKind kind() const = 0;
  virtual double period() const = 0;
  virtual bool closed() const = 0;
  virtual Derivatives eval(double u) const = 0;
  // Position and first derivative only; shapes override when cheaper.
  virtual std::pair<Vec3, Vec3> eval1(double u) const {
    const Derivatives d = eval(u);
    return {d.p, d.d1};
  }
  virtual std::optional<double> constant_speed() const { return std::nullopt; }
};

// Similarity transform x -> scale * R x + translation.
struct Transform {
  double scale = 1.0;
  Mat3 rotation;
  Vec3 translation;

  Transform then(const Transform& outer) const;
};

// Monotone map between the raw parameter u and arc length s, built by
// adaptive dense sampling with cubic Hermite interpolation of u(s).
class ArcTable {
 public:
  ArcTable() = default;
  static ArcTable build(std::function<double(double)> speed, double period, double rel_tol = 1e-13);
  static ArcTable uniform(double speed, double period);

  double total_length() const { return total_; }
  double param_at(double s) const;  // s clamped to [0, total_length]
  double arc_at(double u) const;    // u clamped to [0, period]
  std::size_t size() const { return params_.size(); }
  double max_interpolation_error() const { return max_err_; }

 private:
  std::vector<double> params_, arcs_, dudx_;
  std::shared_ptr<const std::function<double(double)>> speed_;
  double total_ = 0.0;
  double period_ = 0.0;
  double uniform_speed_ = 0.0;  // > 0 when the table is exact
  double max_err_ = 0.0;

  friend class ParametricLoop;
};

class ParametricLoop {
 public:
  ParametricLoop(std::shared_ptr<const CurveShape> shape, const Transform& transform = {},
                 bool reversed = false);

  CurveKind kind() const;
  bool closed() const;
  double period() const;
  const CurveShape& shape() const;
  const Transform& transform() const;
  bool is_reversed() const;

  Derivatives derivatives(double u) const;
  const ArcTable& arc_table() const;
  double length() const;

  // Arc length -> raw parameter. Wraps cyclically for closed curves.
  double param_at(double s) const;
  double arc_at(double u) const;
  PointTangent point_tangent(double s) const;
  Vec3 point(double s) const;
  FrenetData frenet(double s) const;

  ParametricLoop transformed(const Transform& outer) const;
  ParametricLoop scaled(double factor) const;
  ParametricLoop reversed() const;

  bool same_as(const ParametricLoop& other) const { return impl_ == other.impl_; }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// Curve library.
ParametricLoop make_circle(double radius);
ParametricLoop make_ellipse(double a, double b);

struct FourierTerm {
  int k = 1;
  double cos_coef = 0.0;
  double sin_coef = 0.0;
};

// x(u) = sum_k (a_k cos ku + b_k sin ku), likewise y and z; u in [0, 2pi].
struct HarmonicKnotParams {
  std::vector<FourierTerm> x, y, z;
  static HarmonicKnotParams trefoil();
};
ParametricLoop make_harmonic_knot(const HarmonicKnotParams& params);

// Open helix (r cos 2 pi n u, r sin 2 pi n u, u), u in [0, length].
ParametricLoop make_helix(double radius, double length, double turns_per_length);
ParametricLoop make_segment(double length);

double total_arclength(const ParametricLoop& loop);
FrenetData eval_by_arclength(const ParametricLoop& loop, double s);
double chord_length(const ParametricLoop& loop, double s1, double s2);
double curvature_sq_integral(const ParametricLoop& loop, const QuadratureSpec& spec);
double curvature_sq_integral(const ParametricLoop& loop);

// Displaces the curve along its principal normal, x + delta n(x).
ParametricLoop offset_curve(const ParametricLoop& loop, double delta);

struct CurvatureRange {
  double min = 0.0;
  double max = 0.0;
};
CurvatureRange curvature_range(const ParametricLoop& loop, int samples = 4096);

struct ClosestPair {
  double distance = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
};

// Brute-force grid search refined by local minimisation.
ClosestPair min_distance(const ParametricLoop& a, const ParametricLoop& b, int grid = 2048);

// Nearest point of `loop` to `x`, seeded from `samples` evenly spaced arc-length samples.
ClosestPair nearest_point(const ParametricLoop& loop, const Vec3& x, std::span<const Vec3> samples);

// Half the smallest chord between points at least pi/kappa_max apart along
// the curve; offsets and chord balls below this scale stay local.
double self_separation_scale(const ParametricLoop& loop, int samples = 1024);

}  // namespace selfind
