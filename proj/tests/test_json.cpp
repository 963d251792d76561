#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "selfind/curve_spec.hpp"
#include "selfind/error.hpp"
#include "selfind/regularize.hpp"
#include "selfind/result.hpp"

using namespace selfind;
using oracle::pi;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::io;
}

}  // namespace

TEST_CASE("result JSON round-trips exactly") {
  const ParametricLoop c = make_ellipse(2.0, 1.0);
  const auto r = hadamard_self(c, InductanceForm::weber, default_epsilon_schedule(c), {}, UnitSystem::si);
  const std::string text = r.to_json().dump(2);
  const auto back = RegularizationResult::from_json(nlohmann::ordered_json::parse(text));
  CHECK(back == r);
  CHECK(back.to_json().dump(2) == text);

  RegularizationResult odd;
  odd.value = 0.1 + 0.2;
  odd.error_estimate = 1e-300;
  odd.method = Method::parallel_limit;
  odd.diagnostics = {{"tiny", 5e-324}, {"third", 1.0 / 3.0}};
  CHECK(RegularizationResult::from_json(nlohmann::ordered_json::parse(odd.to_json().dump())) == odd);
}

TEST_CASE("malformed result JSON is a parse error") {
  auto j = nlohmann::ordered_json::parse(R"({"value": 1.0, "method": "hadamard"})");
  CHECK(code_of([&] { RegularizationResult::from_json(j); }) == ErrorCode::parse);
  j = nlohmann::ordered_json::parse(R"({"value": 1.0, "method": "guess", "form": "neumann", "units": "reduced",
      "schedule_kind": "epsilon", "schedule": [], "fit_coefficients": {}, "diagnostics": {}, "error_estimate": 0})");
  CHECK(code_of([&] { RegularizationResult::from_json(j); }) == ErrorCode::parse);
}

TEST_CASE("curve specs build the expected geometry") {
  CHECK(curve_from_json_text(R"({"kind": "circle", "params": {"radius": 2}})").length() ==
        doctest::Approx(4.0 * pi).epsilon(1e-13));
  // Ellipse perimeter 4 a E(1 - b^2/a^2).
  CHECK(curve_from_json_text(R"({"kind": "ellipse", "params": {"a": 2, "b": 1}})").length() ==
        doctest::Approx(8.0 * oracle::carlson_E(0.75)).epsilon(1e-12));
  const auto helix = curve_from_json_text(R"({"kind": "helix", "params": {"radius": 1, "length": 2, "turns_per_length": 4}})");
  CHECK_FALSE(helix.closed());
  CHECK(helix.length() == doctest::Approx(2.0 * std::sqrt(64.0 * pi * pi + 1.0)).epsilon(1e-12));
  const auto moved = curve_from_json_text(
      R"({"kind": "circle", "params": {"radius": 1}, "transform": {"scale": 3, "rotate": {"axis": [1, 0, 0], "angle": 0.5}, "translate": [0, 0, 1]}})");
  CHECK(moved.length() == doctest::Approx(6.0 * pi).epsilon(1e-13));
  const auto off = curve_from_json_text(R"({"kind": "offset", "params": {"base": {"kind": "circle", "params": {"radius": 1}}, "delta": 0.25}})");
  // Offsetting a circle inward along its normal shrinks the radius.
  CHECK(off.length() == doctest::Approx(2.0 * pi * 0.75).epsilon(1e-10));
}

TEST_CASE("curve spec JSON round-trips") {
  const char* specs[] = {
      R"({"kind": "circle", "params": {"radius": 1.5}, "reverse": true})",
      R"({"kind": "ellipse", "params": {"a": 2, "b": 1}, "transform": {"translate": [1, 2, 3]}})",
      R"({"kind": "harmonic-knot", "params": {"preset": "trefoil"}})",
      R"({"kind": "segment", "params": {"length": 2}})",
  };
  for (const char* s : specs) {
    CAPTURE(s);
    const auto a = curve_from_json_text(s);
    const auto j = curve_to_json(a);
    const auto b = curve_from_json(j);
    CHECK(curve_to_json(b) == j);
    CHECK(b.length() == doctest::Approx(a.length()).epsilon(1e-14));
    const auto pa = a.point_tangent(0.37 * a.length()), pb = b.point_tangent(0.37 * b.length());
    CHECK(distance(pa.point, pb.point) < 1e-12);
  }
}

TEST_CASE("bad curve specs") {
  CHECK(code_of([] { curve_from_json_text("{not json"); }) == ErrorCode::parse);
  CHECK(code_of([] { curve_from_json_text(R"({"kind": "torus", "params": {}})"); }) == ErrorCode::parse);
  CHECK(code_of([] { curve_from_json_text(R"({"kind": "circle", "params": {}})"); }) == ErrorCode::parse);
  CHECK(code_of([] { curve_from_json_text(R"({"kind": "circle", "params": {"radius": "one"}})"); }) == ErrorCode::parse);
  CHECK(code_of([] { curve_from_json_text(R"({"kind": "circle", "params": {"radius": -1}})"); }) ==
        ErrorCode::invalid_argument);
  CHECK(code_of([] {
          curve_from_json_text(R"({"kind": "offset", "params": {"base": {"kind": "circle", "params": {"radius": 1}}, "delta": 1.5}})");
        }) == ErrorCode::separation);
  CHECK(code_of([] { load_curve_file("/nonexistent/curve.json"); }) == ErrorCode::io);
}

TEST_CASE("curve files load from disk") {
  const std::string path = "selfind_test_curve.json";
  {
    std::ofstream f(path);
    f << R"({"kind": "circle", "params": {"radius": 0.5}})";
  }
  CHECK(load_curve_file(path).length() == doctest::Approx(pi).epsilon(1e-13));
  std::remove(path.c_str());
}
