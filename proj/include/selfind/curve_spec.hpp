#pragma once

#include <string>

#include "json.hpp"
#include "selfind/curve.hpp"

namespace selfind {

// Curve spec files:
//   {"kind": "circle",        "params": {"radius": r}}
//   {"kind": "ellipse",       "params": {"a": a, "b": b}}
//   {"kind": "harmonic-knot", "params": {"preset": "trefoil"}}
//   {"kind": "harmonic-knot", "params": {"x": [{"k": 1, "cos": 0, "sin": 1}, ...], "y": [...], "z": [...]}}
//   {"kind": "helix",         "params": {"radius": r, "length": l, "turns_per_length": n}}
//   {"kind": "segment",       "params": {"length": l}}
//   {"kind": "offset",        "params": {"base": {...curve spec...}, "delta": d}}
// Optional members: "transform": {"scale": s, "rotate": {"axis": [x, y, z],
// "angle": radians} or "rotation_matrix": [[...], [...], [...]],
// "translate": [x, y, z]} and "reverse": true.
ParametricLoop curve_from_json(const nlohmann::json& spec);
nlohmann::json curve_to_json(const ParametricLoop& loop);

ParametricLoop curve_from_json_text(const std::string& text);
ParametricLoop load_curve_file(const std::string& path);

}  // namespace selfind
