#pragma once

#include "selfind/curve.hpp"

namespace selfind {

class CircleShape final : public CurveShape {
 public:
  explicit CircleShape(double radius);
  CurveKind kind() const override { return CurveKind::circle; }
  double period() const override;
  bool closed() const override { return true; }
  Derivatives eval(double u) const override;
  std::pair<Vec3, Vec3> eval1(double u) const override;
  std::optional<double> constant_speed() const override { return radius_; }
  double radius() const { return radius_; }

 private:
  double radius_;
};

class EllipseShape final : public CurveShape {
 public:
  EllipseShape(double a, double b);
  CurveKind kind() const override { return CurveKind::ellipse; }
  double period() const override;
  bool closed() const override { return true; }
  Derivatives eval(double u) const override;
  std::pair<Vec3, Vec3> eval1(double u) const override;
  double a() const { return a_; }
  double b() const { return b_; }

 private:
  double a_, b_;
};

class HarmonicKnotShape final : public CurveShape {
 public:
  explicit HarmonicKnotShape(HarmonicKnotParams params);
  CurveKind kind() const override { return CurveKind::harmonic_knot; }
  double period() const override;
  bool closed() const override { return true; }
  Derivatives eval(double u) const override;
  const HarmonicKnotParams& params() const { return params_; }

 private:
  HarmonicKnotParams params_;
};

class HelixShape final : public CurveShape {
 public:
  HelixShape(double radius, double length, double turns_per_length);
  CurveKind kind() const override { return CurveKind::helix; }
  double period() const override { return length_; }
  bool closed() const override { return false; }
  Derivatives eval(double u) const override;
  std::pair<Vec3, Vec3> eval1(double u) const override;
  std::optional<double> constant_speed() const override;
  double radius() const { return radius_; }
  double length() const { return length_; }
  double turns_per_length() const { return turns_; }

 private:
  double radius_, length_, turns_;
};

class SegmentShape final : public CurveShape {
 public:
  explicit SegmentShape(double length);
  CurveKind kind() const override { return CurveKind::segment; }
  double period() const override { return length_; }
  bool closed() const override { return false; }
  Derivatives eval(double u) const override;
  std::optional<double> constant_speed() const override { return 1.0; }
  double length() const { return length_; }

 private:
  double length_;
};

// gamma(u) + delta N(u) over the base curve's raw parameter. Position and first
// derivative are exact (the latter uses the Frenet equations); higher
// derivatives come from central differences of the first.
class OffsetShape final : public CurveShape {
 public:
  OffsetShape(ParametricLoop base, double delta);
  CurveKind kind() const override { return CurveKind::offset; }
  double period() const override { return base_.period(); }
  bool closed() const override { return base_.closed(); }
  Derivatives eval(double u) const override;
  std::pair<Vec3, Vec3> eval1(double u) const override;
  const ParametricLoop& base() const { return base_; }
  double delta() const { return delta_; }

 private:
  ParametricLoop base_;
  double delta_;
};

}  // namespace selfind
