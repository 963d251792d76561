#include "selfind/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>

#include "parallel.hpp"
#include "selfind/error.hpp"

namespace selfind {

void QuadratureSpec::validate() const {
  if (panel_order < 2 || panel_order > 64)
    fail(ErrorCode::invalid_argument, "panel_order must lie in [2, 64]");
  if (!(panels_per_unit_arclength > 0.0) || !std::isfinite(panels_per_unit_arclength))
    fail(ErrorCode::invalid_argument, "panels_per_unit_arclength must be positive");
  if (!(grading >= 1.0) || !std::isfinite(grading)) fail(ErrorCode::invalid_argument, "grading must be >= 1");
  if (grading_layers < 0) fail(ErrorCode::invalid_argument, "grading_layers must be non-negative");
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) fail(ErrorCode::invalid_argument, "tolerances must be positive");
}

double QuadratureSpec::max_panel_width(double length) const {
  return std::min(1.0 / panels_per_unit_arclength, length / 8.0);
}

GaussLegendre::GaussLegendre(int order) : nodes_(static_cast<std::size_t>(order)), weights_(nodes_.size()) {
  const int n = order;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i), hi = static_cast<std::size_t>(n - 1 - i);
    nodes_[lo] = -x;
    nodes_[hi] = x;
    weights_[lo] = weights_[hi] = w;
  }
  if (n % 2 == 1) nodes_[static_cast<std::size_t>(n / 2)] = 0.0;
}

const GaussLegendre& GaussLegendre::of(int order) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendre>> cache;
  if (order < 1 || order > 256) fail(ErrorCode::invalid_argument, "Gauss-Legendre order out of range");
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot.reset(new GaussLegendre(order));
  return *slot;
}

std::vector<Panel> uniform_panels(double a, double b, double max_width) {
  std::vector<Panel> out;
  if (!(b > a)) return out;
  const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil((b - a) / max_width - 1e-12)));
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x0 = a + (b - a) * static_cast<double>(i) / static_cast<double>(n);
    const double x1 = i + 1 == n ? b : a + (b - a) * static_cast<double>(i + 1) / static_cast<double>(n);
    out.push_back({x0, x1});
  }
  return out;
}

std::vector<Panel> graded_panels(double a, double b, double first_width, double grading, double max_width) {
  std::vector<Panel> out;
  if (!(b > a)) return out;
  double x = a, w = std::min(first_width, max_width);
  while (x < b) {
    if (w >= max_width) {
      for (const Panel& p : uniform_panels(x, b, max_width)) out.push_back(p);
      break;
    }
    double next = x + w;
    if (b - next < 0.25 * w) next = b;
    out.push_back({x, next});
    x = next;
    w = std::min(w * grading, max_width);
  }
  return out;
}

namespace {

// Mirror image of graded_panels: dense next to b instead of a.
std::vector<Panel> graded_panels_toward(double a, double b, double first_width, double grading, double max_width) {
  std::vector<Panel> fwd = graded_panels(0.0, b - a, first_width, grading, max_width);
  std::vector<Panel> out;
  out.reserve(fwd.size());
  for (auto it = fwd.rbegin(); it != fwd.rend(); ++it) out.push_back({b - it->b, b - it->a});
  if (!out.empty()) {
    out.front().a = a;
    out.back().b = b;
  }
  return out;
}

double composite(const std::function<double(double)>& f, const std::vector<Panel>& panels, const GaussLegendre& gl) {
  double sum = 0.0;
  for (const Panel& p : panels) sum += gl.integrate(f, p.a, p.b);
  return sum;
}

// Panels around `center` on a curve of the given length: both sides graded
// from the centre, covering one period if closed, else clipped to [0, len].
std::vector<Panel> centred_panels(double center, double len, bool closed, double first, double grading,
                                  double max_width) {
  double lo = closed ? center - 0.5 * len : 0.0;
  double hi = closed ? center + 0.5 * len : len;
  std::vector<Panel> out = graded_panels_toward(lo, center, first, grading, max_width);
  for (const Panel& p : graded_panels(center, hi, first, grading, max_width)) out.push_back(p);
  return out;
}

struct Node {
  double x, w;
};

std::vector<Node> expand(const std::vector<Panel>& panels, const GaussLegendre& gl) {
  std::vector<Node> out;
  out.reserve(panels.size() * static_cast<std::size_t>(gl.order()));
  for (const Panel& p : panels) {
    const double half = 0.5 * (p.b - p.a), mid = 0.5 * (p.a + p.b);
    for (int i = 0; i < gl.order(); ++i)
      out.push_back({mid + half * gl.nodes()[static_cast<std::size_t>(i)], half * gl.weights()[static_cast<std::size_t>(i)]});
  }
  return out;
}

// Sum over s1 of K(s1, s1 + sigma) (plus the reversed pair for asymmetric
// kernels), i.e. G+(sigma) + G-(sigma) for the self-strip integral.
class DiagonalSums {
 public:
  DiagonalSums(const ParametricLoop& loop, const Kernel& kernel, const QuadratureSpec& spec)
      : loop_(loop), kernel_(kernel), gl_(GaussLegendre::of(spec.panel_order)) {
    len_ = loop.length();
    h_ = spec.max_panel_width(len_);
    panels_ = uniform_panels(0.0, len_, h_);
    nodes_ = expand(panels_, gl_);
    base_.reserve(nodes_.size());
    for (const Node& n : nodes_) base_.push_back(loop.point_tangent(n.x));
  }

  double operator()(double sigma) const {
    const std::size_t p = static_cast<std::size_t>(gl_.order());
    if (loop_.closed()) {
      double sum = 0.0;
      for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const PointTangent x2 = loop_.point_tangent(nodes_[i].x + sigma);
        double v = kernel_.eval(base_[i], x2);
        if (kernel_.symmetric) {
          v *= 2.0;
        } else {
          v += kernel_.eval(base_[i], loop_.point_tangent(nodes_[i].x - sigma));
        }
        sum += nodes_[i].w * v;
      }
      return sum;
    }
    // Open curve: s1 in [0, len - sigma]; cached nodes on whole panels, a
    // fresh rule on the cut panel.
    const double upper = len_ - sigma;
    double sum = 0.0;
    auto pair = [&](const PointTangent& x1, double s1) {
      const PointTangent x2 = loop_.point_tangent(s1 + sigma);
      return kernel_.symmetric ? 2.0 * kernel_.eval(x1, x2) : kernel_.eval(x1, x2) + kernel_.eval(x2, x1);
    };
    for (std::size_t k = 0; k < panels_.size(); ++k) {
      const Panel& pan = panels_[k];
      if (pan.a >= upper) break;
      if (pan.b <= upper) {
        for (std::size_t j = k * p; j < (k + 1) * p; ++j) sum += nodes_[j].w * pair(base_[j], nodes_[j].x);
      } else {
        const double half = 0.5 * (upper - pan.a), mid = 0.5 * (upper + pan.a);
        for (std::size_t j = 0; j < p; ++j) {
          const double s1 = mid + half * gl_.nodes()[j];
          sum += half * gl_.weights()[j] * pair(loop_.point_tangent(s1), s1);
        }
      }
    }
    return sum;
  }

  double max_width() const { return h_; }

 private:
  const ParametricLoop& loop_;
  const Kernel& kernel_;
  const GaussLegendre& gl_;
  double len_ = 0.0, h_ = 0.0;
  std::vector<Panel> panels_;
  std::vector<Node> nodes_;
  std::vector<PointTangent> base_;
};

// Integrates sigma -> g(sigma) over every panel, evaluating nodes in
// parallel and reducing per panel in index order.
std::vector<double> panel_integrals(const std::vector<Panel>& panels, const GaussLegendre& gl,
                                    const std::function<double(double)>& g) {
  const std::vector<Node> nodes = expand(panels, gl);
  std::vector<double> values(nodes.size());
  detail::parallel_for(nodes.size(), [&](std::size_t i) { values[i] = g(nodes[i].x); });
  const std::size_t p = static_cast<std::size_t>(gl.order());
  std::vector<double> out(panels.size(), 0.0);
  for (std::size_t k = 0; k < panels.size(); ++k) {
    double s = 0.0;
    for (std::size_t j = k * p; j < (k + 1) * p; ++j) s += nodes[j].w * values[j];
    out[k] = s;
  }
  return out;
}

}  // namespace

Integral1D integrate_1d(const std::function<double(double)>& f, double a, double b, const QuadratureSpec& spec) {
  spec.validate();
  if (a == b) return {};
  const auto& gl = GaussLegendre::of(spec.panel_order);
  double width = spec.max_panel_width(std::abs(b - a));
  double coarse = composite(f, uniform_panels(std::min(a, b), std::max(a, b), width), gl);
  for (int level = 0; level < 14; ++level) {
    width *= 0.5;
    const double fine = composite(f, uniform_panels(std::min(a, b), std::max(a, b), width), gl);
    if (!std::isfinite(fine)) fail(ErrorCode::tolerance, "integrand is not finite on the interval");
    const double err = std::abs(fine - coarse);
    if (err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(fine))) {
      const double sign = b < a ? -1.0 : 1.0;
      return {sign * fine, err};
    }
    coarse = fine;
  }
  fail(ErrorCode::tolerance, "1-D quadrature did not converge after panel refinement");
}

std::vector<double> integrate_self_strip(const ParametricLoop& loop, const Kernel& kernel,
                                         std::span<const double> eps, const QuadratureSpec& spec) {
  spec.validate();
  if (eps.empty()) fail(ErrorCode::invalid_argument, "empty exclusion schedule");
  const double len = loop.length();
  const double sigma_max = loop.closed() ? 0.5 * len : len;
  std::vector<double> sorted(eps.begin(), eps.end());
  for (double e : sorted) {
    if (!(e > 0.0)) fail(ErrorCode::divergent_domain, "identical loops need a positive exclusion width");
    if (!(e < sigma_max)) fail(ErrorCode::domain, "exclusion width exceeds the diagonal reach of the curve");
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  DiagonalSums gsum(loop, kernel, spec);
  const double h = gsum.max_width();
  const double ratio = std::max(spec.grading, 1.0 + 1e-3) - 1.0;

  // Every exclusion width is a panel breakpoint; panels widen geometrically
  // (width proportional to the distance from the diagonal) up to h.
  std::vector<Panel> panels;
  std::vector<std::size_t> start(sorted.size());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    start[k] = panels.size();
    const double end = k + 1 < sorted.size() ? sorted[k + 1] : sigma_max;
    double x = sorted[k];
    while (x < end) {
      const double w = std::min(x * ratio, h);
      double next = x + w;
      if (end - next < 0.25 * w) next = end;
      panels.push_back({x, next});
      x = next;
    }
  }
  const auto& gl = GaussLegendre::of(spec.panel_order);
  const std::vector<double> parts = panel_integrals(panels, gl, [&](double s) { return gsum(s); });

  std::vector<double> suffix(panels.size() + 1, 0.0);
  for (std::size_t k = panels.size(); k-- > 0;) suffix[k] = suffix[k + 1] + parts[k];
  std::vector<double> out;
  out.reserve(eps.size());
  for (double e : eps) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), e);
    out.push_back(suffix[start[static_cast<std::size_t>(it - sorted.begin())]]);
  }
  return out;
}

double integrate_pair(const ParametricLoop& a, const ParametricLoop& b, const Kernel& kernel,
                      const QuadratureSpec& spec) {
  spec.validate();
  const ClosestPair cp = min_distance(a, b);
  if (!(cp.distance > 0.0)) fail(ErrorCode::proximity, "curves intersect");
  const auto& gl = GaussLegendre::of(spec.panel_order);
  const double la = a.length(), lb = b.length();
  const double ha = spec.max_panel_width(la), hb = spec.max_panel_width(lb);
  const double g = std::max(spec.grading, 1.5);

  const std::vector<Panel> outer = centred_panels(cp.s1, la, a.closed(), std::min(cp.distance, ha), g, ha);
  const std::vector<Node> nodes = expand(outer, gl);

  constexpr int kSamples = 1024;
  std::vector<Vec3> bsamples(kSamples);
  const double bstep = b.closed() ? lb / kSamples : lb / (kSamples - 1);
  for (int i = 0; i < kSamples; ++i) bsamples[static_cast<std::size_t>(i)] = b.point(bstep * i);

  std::vector<double> values(nodes.size());
  detail::parallel_for(nodes.size(), [&](std::size_t i) {
    const PointTangent x1 = a.point_tangent(nodes[i].x);
    const ClosestPair near = nearest_point(b, x1.point, bsamples);
    const double first = std::min(std::max(near.distance, 1e-3 * cp.distance), hb);
    const std::vector<Panel> inner = centred_panels(near.s2, lb, b.closed(), first, g, hb);
    double sum = 0.0;
    for (const Panel& p : inner)
      sum += gl.integrate([&](double s2) { return kernel.eval(x1, b.point_tangent(s2)); }, p.a, p.b);
    values[i] = sum;
  });
  double total = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) total += nodes[i].w * values[i];
  return total;
}

double integrate_pair_minus_strip(const ParametricLoop& a, const ParametricLoop& b, const Kernel& kernel,
                                  double eps, const QuadratureSpec& spec) {
  if (a.same_as(b)) {
    if (!(eps > 0.0)) fail(ErrorCode::divergent_domain, "identical loops need a positive exclusion width");
    const double e[1] = {eps};
    return integrate_self_strip(a, kernel, e, spec).front();
  }
  return integrate_pair(a, b, kernel, spec);
}

double integrate_self_power_singular(const ParametricLoop& loop, const Kernel& kernel, double z,
                                     const QuadratureSpec& spec) {
  spec.validate();
  if (!(z > -1.0)) fail(ErrorCode::domain, "power must exceed -1 for a direct integral");
  if (!loop.closed()) fail(ErrorCode::unsupported_curve, "power-singular self integral needs a closed curve");
  const double len = loop.length();
  const double half = 0.5 * len;
  DiagonalSums gsum(loop, kernel, spec);
  const double h = gsum.max_width();
  // Below sigma_c the remainder Gsum - 2 L sigma^z ~ c sigma^(z+2) is taken
  // from its leading term; chords that short lose digits to cancellation.
  const double sigma_c = 1e-3 * h;
  auto remainder = [&](double s) { return gsum(s) - 2.0 * len * std::pow(s, z); };

  const auto& gl = GaussLegendre::of(spec.panel_order);
  const std::vector<Panel> panels = graded_panels(sigma_c, half, sigma_c, 2.0, h);
  const std::vector<double> parts = panel_integrals(panels, gl, remainder);
  double body = 0.0;
  for (double p : parts) body += p;
  const double c = remainder(sigma_c) / std::pow(sigma_c, z + 2.0);
  const double tail = c * std::pow(sigma_c, z + 3.0) / (z + 3.0);
  const double leading = 2.0 * len * std::pow(half, z + 1.0) / (z + 1.0);
  return leading + body + tail;
}

}  // namespace selfind
