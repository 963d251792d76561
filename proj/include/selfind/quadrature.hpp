#pragma once

#include <functional>
#include <span>
#include <vector>

#include "selfind/curve.hpp"

namespace selfind {

struct QuadratureSpec {
  int panel_order = 16;
  double panels_per_unit_arclength = 8.0;
  // Geometric ratio between neighbouring panels next to a singular edge and
  // the minimum number of graded layers.
  double grading = 2.0;
  int grading_layers = 6;
  double abs_tol = 1e-13;
  double rel_tol = 1e-8;

  void validate() const;
  // Widest panel allowed on an interval of the given length; never fewer
  // than eight panels per curve.
  double max_panel_width(double length) const;
};

// Gauss-Legendre rule on [-1, 1]. Rules are computed once per order and cached.
class GaussLegendre {
 public:
  static const GaussLegendre& of(int order);

  int order() const { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }

  template <class F>
  double integrate(F&& f, double a, double b) const {
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * f(mid + half * nodes_[i]);
    return sum * half;
  }

 private:
  explicit GaussLegendre(int order);
  std::vector<double> nodes_, weights_;
};

struct Panel {
  double a = 0.0;
  double b = 0.0;
};

std::vector<Panel> uniform_panels(double a, double b, double max_width);

// Panels on [a, b] growing geometrically away from `a`: the first has width
// `first_width`, each next one is `grading` times wider, until the width
// reaches `max_width`; the rest of the interval is covered uniformly.
std::vector<Panel> graded_panels(double a, double b, double first_width, double grading,
                                 double max_width);

struct Integral1D {
  double value = 0.0;
  double error_estimate = 0.0;
};

// Composite Gauss-Legendre with an order-doubling error estimate; panels are
// doubled until the estimate meets spec tolerances.
Integral1D integrate_1d(const std::function<double(double)>& f, double a, double b,
                        const QuadratureSpec& spec = {});

// Integrand of a double line integral: f(x1, t1, x2, t2) with unit tangents.
struct Kernel {
  std::function<double(const PointTangent&, const PointTangent&)> eval;
  // K(x1, x2) == K(x2, x1); halves the work on self integrals.
  bool symmetric = true;
};

// Double integral over {(s1, s2) : |s1 - s2| >= eps} (cyclic distance for
// closed curves) when `a` and `b` are the same curve, or over the full
// product when they are distinct, in which case eps is ignored.
double integrate_pair_minus_strip(const ParametricLoop& a, const ParametricLoop& b,
                                  const Kernel& kernel, double eps, const QuadratureSpec& spec);

// The same-curve case for a whole schedule of exclusion widths at once.
// Results are returned in the order of `eps`.
std::vector<double> integrate_self_strip(const ParametricLoop& loop, const Kernel& kernel,
                                         std::span<const double> eps, const QuadratureSpec& spec);

// Full double integral over a x b for disjoint curves, with panels graded
// toward the nearest points.
double integrate_pair(const ParametricLoop& a, const ParametricLoop& b, const Kernel& kernel,
                      const QuadratureSpec& spec);

// Full double integral of a closed curve against itself for a kernel with
// an integrable diagonal singularity K ~ |s1 - s2|^z, z > -1. The leading
// |s1 - s2|^z part is integrated in closed form.
double integrate_self_power_singular(const ParametricLoop& loop, const Kernel& kernel, double z,
                                     const QuadratureSpec& spec);

}  // namespace selfind
