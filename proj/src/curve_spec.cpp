#include "selfind/curve_spec.hpp"

#include <fstream>
#include <sstream>

#include "selfind/curve_shapes.hpp"
#include "selfind/error.hpp"

namespace selfind {

namespace {

using nlohmann::json;

double number(const json& obj, const char* key) {
  if (!obj.contains(key)) fail(ErrorCode::parse, std::string("missing parameter '") + key + "'");
  const json& v = obj.at(key);
  if (!v.is_number()) fail(ErrorCode::parse, std::string("parameter '") + key + "' must be a number");
  return v.get<double>();
}

Vec3 vec3(const json& v, const char* what) {
  if (!v.is_array() || v.size() != 3) fail(ErrorCode::parse, std::string(what) + " must be a 3-vector");
  for (const auto& x : v)
    if (!x.is_number()) fail(ErrorCode::parse, std::string(what) + " must be numeric");
  return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

std::vector<FourierTerm> terms(const json& params, const char* axis) {
  std::vector<FourierTerm> out;
  if (!params.contains(axis)) return out;
  const json& list = params.at(axis);
  if (!list.is_array()) fail(ErrorCode::parse, std::string("Fourier terms for ") + axis + " must be a list");
  for (const auto& t : list) {
    if (!t.is_object()) fail(ErrorCode::parse, "Fourier term must be an object");
    const double k = number(t, "k");
    if (k != std::floor(k)) fail(ErrorCode::parse, "Fourier frequency must be an integer");
    out.push_back({static_cast<int>(k), t.contains("cos") ? number(t, "cos") : 0.0,
                   t.contains("sin") ? number(t, "sin") : 0.0});
  }
  return out;
}

json terms_json(const std::vector<FourierTerm>& list) {
  json out = json::array();
  for (const auto& t : list) out.push_back({{"k", t.k}, {"cos", t.cos_coef}, {"sin", t.sin_coef}});
  return out;
}

Transform transform_from(const json& j) {
  if (!j.is_object()) fail(ErrorCode::parse, "transform must be an object");
  Transform t;
  if (j.contains("scale")) t.scale = number(j, "scale");
  if (j.contains("rotate") && j.contains("rotation_matrix"))
    fail(ErrorCode::parse, "give either rotate or rotation_matrix, not both");
  if (j.contains("rotate")) {
    const json& r = j.at("rotate");
    if (!r.is_object() || !r.contains("axis")) fail(ErrorCode::parse, "rotate needs an axis and an angle");
    t.rotation = Mat3::rotation(vec3(r.at("axis"), "rotation axis"), number(r, "angle"));
  }
  if (j.contains("rotation_matrix")) {
    const json& m = j.at("rotation_matrix");
    if (!m.is_array() || m.size() != 3) fail(ErrorCode::parse, "rotation_matrix must be 3x3");
    for (int i = 0; i < 3; ++i) {
      const Vec3 row = vec3(m[static_cast<std::size_t>(i)], "rotation_matrix row");
      t.rotation.m[i][0] = row.x;
      t.rotation.m[i][1] = row.y;
      t.rotation.m[i][2] = row.z;
    }
  }
  if (j.contains("translate")) t.translation = vec3(j.at("translate"), "translate");
  return t;
}

bool is_identity(const Transform& t) {
  const Transform id;
  if (t.scale != 1.0 || t.translation.x != 0.0 || t.translation.y != 0.0 || t.translation.z != 0.0) return false;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      if (t.rotation.m[i][k] != id.rotation.m[i][k]) return false;
  return true;
}

}  // namespace

ParametricLoop curve_from_json(const json& spec) {
  try {
    if (!spec.is_object()) fail(ErrorCode::parse, "curve spec must be a JSON object");
    if (!spec.contains("kind") || !spec.at("kind").is_string()) fail(ErrorCode::parse, "curve spec needs a string 'kind'");
    const CurveKind kind = curve_kind_from_string(spec.at("kind").get<std::string>());
    const json params = spec.contains("params") ? spec.at("params") : json::object();
    if (!params.is_object()) fail(ErrorCode::parse, "'params' must be an object");
    std::shared_ptr<const CurveShape> shape;
    switch (kind) {
      case CurveKind::circle: shape = std::make_shared<CircleShape>(number(params, "radius")); break;
      case CurveKind::ellipse: shape = std::make_shared<EllipseShape>(number(params, "a"), number(params, "b")); break;
      case CurveKind::harmonic_knot: {
        HarmonicKnotParams p;
        if (params.contains("preset")) {
          if (params.at("preset") != "trefoil") fail(ErrorCode::parse, "unknown harmonic-knot preset");
          p = HarmonicKnotParams::trefoil();
        } else {
          p.x = terms(params, "x");
          p.y = terms(params, "y");
          p.z = terms(params, "z");
        }
        shape = std::make_shared<HarmonicKnotShape>(p);
        break;
      }
      case CurveKind::helix:
        shape = std::make_shared<HelixShape>(number(params, "radius"), number(params, "length"),
                                             number(params, "turns_per_length"));
        break;
      case CurveKind::segment: shape = std::make_shared<SegmentShape>(number(params, "length")); break;
      case CurveKind::offset: {
        if (!params.contains("base")) fail(ErrorCode::parse, "offset curve needs a 'base' spec");
        const ParametricLoop base = curve_from_json(params.at("base"));
        const double delta = number(params, "delta");
        const ParametricLoop checked = offset_curve(base, delta);  // validates delta
        if (delta == 0.0) {
          // delta = 0 is the base curve itself.
          ParametricLoop out = checked;
          if (spec.contains("transform")) out = out.transformed(transform_from(spec.at("transform")));
          if (spec.contains("reverse") && spec.at("reverse").get<bool>()) out = out.reversed();
          return out;
        }
        shape = std::make_shared<OffsetShape>(base, delta);
        break;
      }
    }
    Transform t;
    if (spec.contains("transform")) t = transform_from(spec.at("transform"));
    bool rev = false;
    if (spec.contains("reverse")) {
      if (!spec.at("reverse").is_boolean()) fail(ErrorCode::parse, "'reverse' must be a boolean");
      rev = spec.at("reverse").get<bool>();
    }
    return ParametricLoop(shape, t, rev);
  } catch (const json::exception& e) {
    fail(ErrorCode::parse, std::string("malformed curve spec: ") + e.what());
  }
}

json curve_to_json(const ParametricLoop& loop) {
  json j;
  j["kind"] = to_string(loop.kind());
  const CurveShape& s = loop.shape();
  json p = json::object();
  if (auto* c = dynamic_cast<const CircleShape*>(&s)) {
    p["radius"] = c->radius();
  } else if (auto* e = dynamic_cast<const EllipseShape*>(&s)) {
    p["a"] = e->a();
    p["b"] = e->b();
  } else if (auto* k = dynamic_cast<const HarmonicKnotShape*>(&s)) {
    p["x"] = terms_json(k->params().x);
    p["y"] = terms_json(k->params().y);
    p["z"] = terms_json(k->params().z);
  } else if (auto* h = dynamic_cast<const HelixShape*>(&s)) {
    p["radius"] = h->radius();
    p["length"] = h->length();
    p["turns_per_length"] = h->turns_per_length();
  } else if (auto* g = dynamic_cast<const SegmentShape*>(&s)) {
    p["length"] = g->length();
  } else if (auto* o = dynamic_cast<const OffsetShape*>(&s)) {
    p["base"] = curve_to_json(o->base());
    p["delta"] = o->delta();
  }
  j["params"] = p;
  const Transform& t = loop.transform();
  if (!is_identity(t)) {
    json m = json::array();
    for (int i = 0; i < 3; ++i) m.push_back({t.rotation.m[i][0], t.rotation.m[i][1], t.rotation.m[i][2]});
    j["transform"] = {{"scale", t.scale},
                      {"rotation_matrix", m},
                      {"translate", {t.translation.x, t.translation.y, t.translation.z}}};
  }
  if (loop.is_reversed()) j["reverse"] = true;
  return j;
}

ParametricLoop curve_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::parse, std::string("invalid JSON: ") + e.what());
  }
  return curve_from_json(j);
}

ParametricLoop load_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io, "cannot open curve file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return curve_from_json_text(buf.str());
}

}  // namespace selfind
