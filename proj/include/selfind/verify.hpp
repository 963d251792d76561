#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "selfind/quadrature.hpp"

namespace selfind {

struct VerifyCheck {
  std::string name;
  double value = 0.0;
  double expected = 0.0;
  double error = 0.0;      // relative or absolute, see `metric`
  double tolerance = 0.0;
  std::string metric;      // "relative" or "absolute"
  bool passed = false;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool all_passed() const;
  std::size_t failures() const;
  // Deterministic: no timings, fixed key order.
  nlohmann::ordered_json to_json() const;
};

// Runs the identity suite on the curve files in `curve_dir` (circle.json,
// ellipse.json, trefoil.json, helix.json, coaxial_lower.json,
// coaxial_upper.json). Reduced units throughout.
VerifyReport run_verify(const std::string& curve_dir, const QuadratureSpec& spec = {});

}  // namespace selfind
