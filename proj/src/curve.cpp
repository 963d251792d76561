#include "selfind/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "selfind/curve_shapes.hpp"
#include "selfind/error.hpp"
#include "selfind/quadrature.hpp"

namespace selfind {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

FrenetData frenet_from(const Derivatives& d) {
  FrenetData f;
  f.point = d.p;
  const double v = norm(d.d1);
  f.tangent = d.d1 / v;
  const Vec3 c = cross(d.d1, d.d2);
  const double cn = norm(c);
  f.curvature = cn / (v * v * v);
  if (f.curvature * v < 1e-13 * norm(d.d2) || cn == 0.0) {
    // Straight point: any normal completes the frame.
    f.curvature = 0.0;
    const Vec3 t = f.tangent;
    const Vec3 trial = std::abs(t.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    f.normal = cross(cross(t, trial), t);
    f.normal = f.normal / norm(f.normal);
    f.binormal = cross(f.tangent, f.normal);
    return f;
  }
  f.binormal = c / cn;
  f.normal = cross(f.binormal, f.tangent);
  f.torsion = dot(c, d.d3) / (cn * cn);
  // d|c|/du = c.(d1 x d3)/|c| and dv/du = d1.d2/v.
  const double dcn = dot(c, cross(d.d1, d.d3)) / cn;
  const double dv = dot(d.d1, d.d2) / v;
  const double dkappa_du = dcn / (v * v * v) - 3.0 * cn * dv / (v * v * v * v);
  f.curvature_derivative = dkappa_du / v;
  return f;
}

double golden_minimize(const std::function<double(double)>& f, double lo, double hi,
                       int iterations = 60) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iterations && hi - lo > 1e-16 * (std::abs(lo) + std::abs(hi) + 1e-300); ++i) {
    if (f1 < f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - g * (hi - lo); f1 = f(x1);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + g * (hi - lo); f2 = f(x2);
    }
  }
  return f1 < f2 ? x1 : x2;
}

std::vector<double> arc_samples(const ParametricLoop& loop, int n) {
  std::vector<double> s(static_cast<std::size_t>(n));
  const double len = loop.length();
  const double step = loop.closed() ? len / n : len / (n - 1);
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = step * i;
  return s;
}

double clamp_arc(const ParametricLoop& loop, double s) {
  return loop.closed() ? s : std::clamp(s, 0.0, loop.length());
}

}  // namespace

const char* to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::circle: return "circle";
    case CurveKind::ellipse: return "ellipse";
    case CurveKind::harmonic_knot: return "harmonic-knot";
    case CurveKind::helix: return "helix";
    case CurveKind::segment: return "segment";
    case CurveKind::offset: return "offset";
  }
  return "?";
}

CurveKind curve_kind_from_string(std::string_view name) {
  for (CurveKind k : {CurveKind::circle, CurveKind::ellipse, CurveKind::harmonic_knot,
                      CurveKind::helix, CurveKind::segment, CurveKind::offset})
    if (name == to_string(k)) return k;
  fail(ErrorCode::parse, "unknown curve kind '" + std::string(name) + "'");
}

Transform Transform::then(const Transform& outer) const {
  Transform r;
  r.scale = outer.scale * scale;
  r.rotation = outer.rotation * rotation;
  r.translation = outer.scale * (outer.rotation * translation) + outer.translation;
  return r;
}

// ---------------------------------------------------------------------------
// ArcTable

ArcTable ArcTable::uniform(double speed, double period) {
  ArcTable t;
  t.uniform_speed_ = speed;
  t.period_ = period;
  t.total_ = speed * period;
  t.params_ = {0.0, period};
  t.arcs_ = {0.0, t.total_};
  t.dudx_ = {1.0 / speed, 1.0 / speed};
  return t;
}

ArcTable ArcTable::build(std::function<double(double)> speed, double period, double rel_tol) {
  const auto& gl = GaussLegendre::of(16);
  ArcTable t;
  t.period_ = period;
  t.speed_ = std::make_shared<const std::function<double(double)>>(std::move(speed));
  const auto& sp = *t.speed_;
  constexpr std::size_t kMaxIntervals = std::size_t{1} << 20;
  for (std::size_t n = 256;; n *= 2) {
    t.params_.assign(n + 1, 0.0);
    t.arcs_.assign(n + 1, 0.0);
    t.dudx_.assign(n + 1, 0.0);
    const double h = period / static_cast<double>(n);
    for (std::size_t i = 0; i <= n; ++i) {
      t.params_[i] = h * static_cast<double>(i);
      const double v = sp(t.params_[i]);
      if (!(v > 0.0) || !std::isfinite(v))
        fail(ErrorCode::degenerate_curve, "curve is not regular (vanishing derivative)");
      t.dudx_[i] = 1.0 / v;
      if (i > 0) t.arcs_[i] = t.arcs_[i - 1] + gl.integrate(sp, t.params_[i - 1], t.params_[i]);
    }
    t.total_ = t.arcs_[n];
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double um = 0.5 * (t.params_[i] + t.params_[i + 1]);
      const double sm = t.arcs_[i] + gl.integrate(sp, t.params_[i], um);
      err = std::max(err, std::abs(t.param_at(sm) - um));
    }
    t.max_err_ = err;
    if (err <= rel_tol * period || n >= kMaxIntervals) break;
  }
  return t;
}

double ArcTable::param_at(double s) const {
  s = std::clamp(s, 0.0, total_);
  if (uniform_speed_ > 0.0) return std::min(s / uniform_speed_, period_);
  auto it = std::upper_bound(arcs_.begin(), arcs_.end(), s);
  std::size_t i = static_cast<std::size_t>(std::distance(arcs_.begin(), it));
  i = std::clamp<std::size_t>(i, 1, arcs_.size() - 1) - 1;
  const double h = arcs_[i + 1] - arcs_[i];
  const double x = (s - arcs_[i]) / h;
  const double x2 = x * x, x3 = x2 * x;
  const double h00 = 2 * x3 - 3 * x2 + 1, h10 = x3 - 2 * x2 + x;
  const double h01 = -2 * x3 + 3 * x2, h11 = x3 - x2;
  return h00 * params_[i] + h10 * h * dudx_[i] + h01 * params_[i + 1] + h11 * h * dudx_[i + 1];
}

double ArcTable::arc_at(double u) const {
  u = std::clamp(u, 0.0, period_);
  if (uniform_speed_ > 0.0) return u * uniform_speed_;
  const std::size_t n = params_.size() - 1;
  std::size_t i = static_cast<std::size_t>(u / period_ * static_cast<double>(n));
  i = std::min(i, n - 1);
  return arcs_[i] + GaussLegendre::of(16).integrate(*speed_, params_[i], u);
}

// ---------------------------------------------------------------------------
// ParametricLoop

struct ParametricLoop::Impl {
  std::shared_ptr<const CurveShape> shape;
  Transform transform;
  bool reversed = false;
  ArcTable table;

  double raw(double u) const { return reversed ? shape->period() - u : u; }
};

ParametricLoop::ParametricLoop(std::shared_ptr<const CurveShape> shape, const Transform& transform,
                               bool reversed) {
  if (!shape) fail(ErrorCode::invalid_argument, "null curve shape");
  if (!(transform.scale > 0.0)) fail(ErrorCode::invalid_argument, "transform scale must be positive");
  auto impl = std::make_shared<Impl>();
  impl->shape = std::move(shape);
  impl->transform = transform;
  impl->reversed = reversed;
  const double period = impl->shape->period();
  if (auto v = impl->shape->constant_speed()) {
    if (!(*v > 0.0)) fail(ErrorCode::degenerate_curve, "curve is not regular (zero speed)");
    impl->table = ArcTable::uniform(*v * transform.scale, period);
  } else {
    auto sh = impl->shape;
    const double scale = transform.scale;
    const bool rev = reversed;
    impl->table = ArcTable::build(
        [sh, scale, rev, period](double u) { return scale * norm(sh->eval1(rev ? period - u : u).second); },
        period);
  }
  impl_ = std::move(impl);
}

CurveKind ParametricLoop::kind() const { return impl_->shape->kind(); }
bool ParametricLoop::closed() const { return impl_->shape->closed(); }
double ParametricLoop::period() const { return impl_->shape->period(); }
const CurveShape& ParametricLoop::shape() const { return *impl_->shape; }
const Transform& ParametricLoop::transform() const { return impl_->transform; }
bool ParametricLoop::is_reversed() const { return impl_->reversed; }
const ArcTable& ParametricLoop::arc_table() const { return impl_->table; }
double ParametricLoop::length() const { return impl_->table.total_length(); }

Derivatives ParametricLoop::derivatives(double u) const {
  Derivatives d = impl_->shape->eval(impl_->raw(u));
  if (impl_->reversed) {
    d.d1 = -d.d1;
    d.d3 = -d.d3;
  }
  const Transform& tf = impl_->transform;
  d.p = tf.scale * (tf.rotation * d.p) + tf.translation;
  d.d1 = tf.scale * (tf.rotation * d.d1);
  d.d2 = tf.scale * (tf.rotation * d.d2);
  d.d3 = tf.scale * (tf.rotation * d.d3);
  return d;
}

double ParametricLoop::param_at(double s) const {
  const double len = length();
  if (closed()) {
    s = std::fmod(s, len);
    if (s < 0.0) s += len;
  }
  return impl_->table.param_at(s);
}

double ParametricLoop::arc_at(double u) const { return impl_->table.arc_at(u); }

PointTangent ParametricLoop::point_tangent(double s) const {
  auto [p, d1] = impl_->shape->eval1(impl_->raw(param_at(s)));
  const Transform& tf = impl_->transform;
  Vec3 t = tf.rotation * d1;
  t = t / norm(t);
  if (impl_->reversed) t = -t;
  return {tf.scale * (tf.rotation * p) + tf.translation, t};
}

Vec3 ParametricLoop::point(double s) const { return point_tangent(s).point; }

FrenetData ParametricLoop::frenet(double s) const {
  const Derivatives d = derivatives(param_at(s));
  const double scale = length() / period();
  if (!(norm(d.d1) > 1e-10 * scale))
    fail(ErrorCode::degenerate_curve, "non-regular point at s = " + std::to_string(s));
  return frenet_from(d);
}

ParametricLoop ParametricLoop::transformed(const Transform& outer) const {
  return ParametricLoop(impl_->shape, impl_->transform.then(outer), impl_->reversed);
}

ParametricLoop ParametricLoop::scaled(double factor) const {
  Transform t;
  t.scale = factor;
  return transformed(t);
}

ParametricLoop ParametricLoop::reversed() const {
  return ParametricLoop(impl_->shape, impl_->transform, !impl_->reversed);
}

// ---------------------------------------------------------------------------
// Operations

double total_arclength(const ParametricLoop& loop) { return loop.length(); }

FrenetData eval_by_arclength(const ParametricLoop& loop, double s) {
  if (!loop.closed() && (s < 0.0 || s > loop.length()))
    fail(ErrorCode::invalid_argument, "arc length outside [0, L] on an open curve");
  return loop.frenet(s);
}

double chord_length(const ParametricLoop& loop, double s1, double s2) {
  return distance(loop.point(s1), loop.point(s2));
}

double curvature_sq_integral(const ParametricLoop& loop, const QuadratureSpec& spec) {
  auto f = [&](double u) {
    const Derivatives d = loop.derivatives(u);
    const double k = frenet_from(d).curvature;
    return k * k * norm(d.d1);
  };
  return integrate_1d(f, 0.0, loop.period(), spec).value;
}

double curvature_sq_integral(const ParametricLoop& loop) {
  QuadratureSpec spec;
  spec.rel_tol = 1e-12;
  return curvature_sq_integral(loop, spec);
}

CurvatureRange curvature_range(const ParametricLoop& loop, int samples) {
  CurvatureRange r{std::numeric_limits<double>::infinity(), 0.0};
  const int n = loop.closed() ? samples : samples + 1;
  for (int i = 0; i < n; ++i) {
    const double u = loop.period() * i / samples;
    const double k = frenet_from(loop.derivatives(u)).curvature;
    r.min = std::min(r.min, k);
    r.max = std::max(r.max, k);
  }
  return r;
}

ClosestPair nearest_point(const ParametricLoop& loop, const Vec3& x, std::span<const Vec3> samples) {
  const int n = static_cast<int>(samples.size());
  const double len = loop.length();
  const double step = loop.closed() ? len / n : len / (n - 1);
  int best = 0;
  double bd = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const Vec3 d = samples[static_cast<std::size_t>(i)] - x;
    const double q = dot(d, d);
    if (q < bd) { bd = q; best = i; }
  }
  double lo = step * (best - 1), hi = step * (best + 1);
  if (!loop.closed()) {
    lo = std::max(lo, 0.0);
    hi = std::min(hi, len);
  }
  auto f = [&](double s) {
    const Vec3 d = loop.point(s) - x;
    return dot(d, d);
  };
  double s = golden_minimize(f, lo, hi);
  if (loop.closed()) {
    s = std::fmod(s, len);
    if (s < 0.0) s += len;
  }
  return {std::sqrt(f(s)), 0.0, s};
}

ClosestPair min_distance(const ParametricLoop& a, const ParametricLoop& b, int grid) {
  if (grid < 4) fail(ErrorCode::invalid_argument, "distance grid too coarse");
  const auto sa = arc_samples(a, grid), sb = arc_samples(b, grid);
  std::vector<Vec3> pa(sa.size()), pb(sb.size());
  for (std::size_t i = 0; i < sa.size(); ++i) pa[i] = a.point(sa[i]);
  for (std::size_t j = 0; j < sb.size(); ++j) pb[j] = b.point(sb[j]);

  struct Cell { double d2; std::size_t i, j; };
  std::vector<Cell> rows(pa.size());
  for (std::size_t i = 0; i < pa.size(); ++i) {
    Cell c{std::numeric_limits<double>::infinity(), i, 0};
    for (std::size_t j = 0; j < pb.size(); ++j) {
      const Vec3 d = pb[j] - pa[i];
      const double q = dot(d, d);
      if (q < c.d2) { c.d2 = q; c.j = j; }
    }
    rows[i] = c;
  }
  const std::size_t keep = std::min<std::size_t>(8, rows.size());
  std::partial_sort(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(keep), rows.end(),
                    [](const Cell& x, const Cell& y) { return x.d2 < y.d2 || (x.d2 == y.d2 && x.i < y.i); });

  const double ha = sa.size() > 1 ? sa[1] - sa[0] : a.length();
  const double hb = sb.size() > 1 ? sb[1] - sb[0] : b.length();
  ClosestPair best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
  for (std::size_t c = 0; c < keep; ++c) {
    double s1 = sa[rows[c].i], s2 = sb[rows[c].j];
    const double c1 = s1, c2 = s2;
    for (int sweep = 0; sweep < 8; ++sweep) {
      const Vec3 x2 = b.point(s2);
      s1 = golden_minimize([&](double s) { const Vec3 d = a.point(clamp_arc(a, s)) - x2; return dot(d, d); },
                           c1 - ha, c1 + ha, 50);
      s1 = clamp_arc(a, s1);
      const Vec3 x1 = a.point(s1);
      s2 = golden_minimize([&](double s) { const Vec3 d = b.point(clamp_arc(b, s)) - x1; return dot(d, d); },
                           c2 - hb, c2 + hb, 50);
      s2 = clamp_arc(b, s2);
    }
    const double d = distance(a.point(s1), b.point(s2));
    if (d < best.distance) best = {d, s1, s2};
  }
  if (a.closed()) best.s1 = std::fmod(std::fmod(best.s1, a.length()) + a.length(), a.length());
  if (b.closed()) best.s2 = std::fmod(std::fmod(best.s2, b.length()) + b.length(), b.length());
  return best;
}

double self_separation_scale(const ParametricLoop& loop, int samples) {
  const CurvatureRange kr = curvature_range(loop, samples);
  const double len = loop.length();
  const double reach = loop.closed() ? len / 2 : len;
  double gap = kr.max > 0.0 ? std::numbers::pi / kr.max : reach;
  const auto s = arc_samples(loop, samples);
  const double step = s.size() > 1 ? s[1] - s[0] : len;
  gap = std::min(gap, reach) - step;
  std::vector<Vec3> p(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) p[i] = loop.point(s[i]);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      double sep = s[j] - s[i];
      if (loop.closed()) sep = std::min(sep, len - sep);
      if (sep < gap) continue;
      best = std::min(best, distance(p[i], p[j]));
    }
  return 0.5 * best;
}

ParametricLoop offset_curve(const ParametricLoop& loop, double delta) {
  if (!(delta >= 0.0) || !std::isfinite(delta))
    fail(ErrorCode::invalid_argument, "offset distance must be finite and non-negative");
  if (!loop.closed()) fail(ErrorCode::unsupported_curve, "offset curves need a closed loop");
  const CurvatureRange kr = curvature_range(loop);
  if (kr.min <= 1e-9 / loop.length())
    fail(ErrorCode::unsupported_curve, "offset needs non-vanishing curvature");
  if (delta == 0.0) return loop;
  if (delta >= 1.0 / kr.max)
    fail(ErrorCode::separation, "offset distance exceeds the minimal radius of curvature");
  if (delta >= self_separation_scale(loop))
    fail(ErrorCode::separation, "offset distance exceeds the curve's self-separation scale");
  ParametricLoop out(std::make_shared<OffsetShape>(loop, delta));
  if (!(min_distance(loop, out).distance > 0.5 * delta))
    fail(ErrorCode::separation, "offset curve is not disjoint from the base curve");
  return out;
}

// ---------------------------------------------------------------------------
// Shapes

CircleShape::CircleShape(double radius) : radius_(radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) fail(ErrorCode::invalid_argument, "circle radius must be positive");
}
double CircleShape::period() const { return kTwoPi; }
Derivatives CircleShape::eval(double u) const {
  const double c = std::cos(u), s = std::sin(u), r = radius_;
  return {{r * c, r * s, 0}, {-r * s, r * c, 0}, {-r * c, -r * s, 0}, {r * s, -r * c, 0}};
}
std::pair<Vec3, Vec3> CircleShape::eval1(double u) const {
  const double c = std::cos(u), s = std::sin(u), r = radius_;
  return {{r * c, r * s, 0}, {-r * s, r * c, 0}};
}

EllipseShape::EllipseShape(double a, double b) : a_(a), b_(b) {
  if (!(a > 0.0) || !(b > 0.0)) fail(ErrorCode::invalid_argument, "ellipse semi-axes must be positive");
}
double EllipseShape::period() const { return kTwoPi; }
Derivatives EllipseShape::eval(double u) const {
  const double c = std::cos(u), s = std::sin(u);
  return {{a_ * c, b_ * s, 0}, {-a_ * s, b_ * c, 0}, {-a_ * c, -b_ * s, 0}, {a_ * s, -b_ * c, 0}};
}
std::pair<Vec3, Vec3> EllipseShape::eval1(double u) const {
  const double c = std::cos(u), s = std::sin(u);
  return {{a_ * c, b_ * s, 0}, {-a_ * s, b_ * c, 0}};
}

HarmonicKnotParams HarmonicKnotParams::trefoil() {
  HarmonicKnotParams p;
  p.x = {{1, 0.0, 1.0}, {2, 0.0, 2.0}};
  p.y = {{1, 1.0, 0.0}, {2, -2.0, 0.0}};
  p.z = {{3, 0.0, -1.0}};
  return p;
}

HarmonicKnotShape::HarmonicKnotShape(HarmonicKnotParams params) : params_(std::move(params)) {
  if (params_.x.empty() && params_.y.empty() && params_.z.empty())
    fail(ErrorCode::invalid_argument, "harmonic knot needs at least one Fourier term");
  for (const auto* axis : {&params_.x, &params_.y, &params_.z})
    for (const auto& t : *axis)
      if (t.k < 0) fail(ErrorCode::invalid_argument, "Fourier frequencies must be non-negative");
}
double HarmonicKnotShape::period() const { return kTwoPi; }
Derivatives HarmonicKnotShape::eval(double u) const {
  double v[4][3] = {};
  const std::vector<FourierTerm>* axes[3] = {&params_.x, &params_.y, &params_.z};
  for (int a = 0; a < 3; ++a)
    for (const auto& t : *axes[a]) {
      const double k = t.k, c = std::cos(k * u), s = std::sin(k * u);
      v[0][a] += t.cos_coef * c + t.sin_coef * s;
      v[1][a] += k * (-t.cos_coef * s + t.sin_coef * c);
      v[2][a] += -k * k * (t.cos_coef * c + t.sin_coef * s);
      v[3][a] += k * k * k * (t.cos_coef * s - t.sin_coef * c);
    }
  return {{v[0][0], v[0][1], v[0][2]}, {v[1][0], v[1][1], v[1][2]},
          {v[2][0], v[2][1], v[2][2]}, {v[3][0], v[3][1], v[3][2]}};
}

HelixShape::HelixShape(double radius, double length, double turns_per_length)
    : radius_(radius), length_(length), turns_(turns_per_length) {
  if (!(radius > 0.0) || !(length > 0.0) || !(turns_per_length > 0.0))
    fail(ErrorCode::invalid_argument, "helix radius, length and winding density must be positive");
}
Derivatives HelixShape::eval(double u) const {
  const double w = kTwoPi * turns_, c = std::cos(w * u), s = std::sin(w * u), r = radius_;
  return {{r * c, r * s, u},
          {-r * w * s, r * w * c, 1.0},
          {-r * w * w * c, -r * w * w * s, 0.0},
          {r * w * w * w * s, -r * w * w * w * c, 0.0}};
}
std::pair<Vec3, Vec3> HelixShape::eval1(double u) const {
  const double w = kTwoPi * turns_, c = std::cos(w * u), s = std::sin(w * u), r = radius_;
  return {{r * c, r * s, u}, {-r * w * s, r * w * c, 1.0}};
}
std::optional<double> HelixShape::constant_speed() const {
  const double rw = kTwoPi * turns_ * radius_;
  return std::sqrt(rw * rw + 1.0);
}

SegmentShape::SegmentShape(double length) : length_(length) {
  if (!(length > 0.0)) fail(ErrorCode::invalid_argument, "segment length must be positive");
}
Derivatives SegmentShape::eval(double u) const { return {{u, 0, 0}, {1, 0, 0}, {}, {}}; }

OffsetShape::OffsetShape(ParametricLoop base, double delta) : base_(std::move(base)), delta_(delta) {}

std::pair<Vec3, Vec3> OffsetShape::eval1(double u) const {
  const Derivatives d = base_.derivatives(u);
  const FrenetData f = frenet_from(d);
  const double v = norm(d.d1);
  const Vec3 dn = v * (-f.curvature * f.tangent + f.torsion * f.binormal);
  return {d.p + delta_ * f.normal, d.d1 + delta_ * dn};
}

Derivatives OffsetShape::eval(double u) const {
  const double h = 1e-4 * period();
  const auto [p, d1] = eval1(u);
  const Vec3 fwd = eval1(u + h).second, back = eval1(u - h).second;
  return {p, d1, (fwd - back) / (2 * h), (fwd - 2.0 * d1 + back) / (h * h)};
}

ParametricLoop make_circle(double radius) { return ParametricLoop(std::make_shared<CircleShape>(radius)); }
ParametricLoop make_ellipse(double a, double b) { return ParametricLoop(std::make_shared<EllipseShape>(a, b)); }
ParametricLoop make_harmonic_knot(const HarmonicKnotParams& params) {
  return ParametricLoop(std::make_shared<HarmonicKnotShape>(params));
}
ParametricLoop make_helix(double radius, double length, double turns_per_length) {
  return ParametricLoop(std::make_shared<HelixShape>(radius, length, turns_per_length));
}
ParametricLoop make_segment(double length) { return ParametricLoop(std::make_shared<SegmentShape>(length)); }

}  // namespace selfind
