#include "selfind/result.hpp"

#include <stdexcept>

#include "selfind/error.hpp"

namespace selfind {

const char* to_string(InductanceForm form) { return form == InductanceForm::weber ? "weber" : "neumann"; }
const char* to_string(UnitSystem units) { return units == UnitSystem::si ? "si" : "reduced"; }

InductanceForm form_from_string(std::string_view name) {
  if (name == "neumann") return InductanceForm::neumann;
  if (name == "weber") return InductanceForm::weber;
  fail(ErrorCode::parse, "unknown form '" + std::string(name) + "' (expected neumann or weber)");
}

UnitSystem units_from_string(std::string_view name) {
  if (name == "reduced") return UnitSystem::reduced;
  if (name == "si" || name == "SI") return UnitSystem::si;
  fail(ErrorCode::parse, "unknown unit system '" + std::string(name) + "' (expected reduced or si)");
}

const char* to_string(Method method) {
  switch (method) {
    case Method::hadamard: return "hadamard";
    case Method::continuation: return "continuation";
    case Method::parallel_limit: return "parallel-limit";
    case Method::power2: return "power2";
  }
  return "?";
}

Method method_from_string(std::string_view name) {
  for (Method m : {Method::hadamard, Method::continuation, Method::parallel_limit, Method::power2})
    if (name == to_string(m)) return m;
  fail(ErrorCode::parse, "unknown method '" + std::string(name) + "'");
}

namespace {

double lookup(const std::vector<NamedValue>& list, std::string_view name) {
  for (const auto& nv : list)
    if (nv.name == name) return nv.value;
  throw std::out_of_range("no entry named " + std::string(name));
}

nlohmann::ordered_json named_to_json(const std::vector<NamedValue>& list) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& nv : list) j[nv.name] = nv.value;
  return j;
}

std::vector<NamedValue> named_from_json(const nlohmann::ordered_json& j) {
  std::vector<NamedValue> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.push_back({it.key(), it.value().get<double>()});
  return out;
}

}  // namespace

double RegularizationResult::coefficient(std::string_view name) const { return lookup(fit_coefficients, name); }
double RegularizationResult::diagnostic(std::string_view name) const { return lookup(diagnostics, name); }

nlohmann::ordered_json RegularizationResult::to_json() const {
  nlohmann::ordered_json j;
  j["value"] = value;
  j["method"] = to_string(method);
  j["form"] = to_string(form);
  j["units"] = to_string(units);
  j["schedule_kind"] = schedule_kind;
  auto& sched = j["schedule"] = nlohmann::ordered_json::array();
  for (const auto& p : schedule)
    sched.push_back({{"parameter", p.parameter},
                     {"raw", p.raw},
                     {"counter_term", p.counter_term},
                     {"partial_sum", p.partial_sum}});
  j["fit_coefficients"] = named_to_json(fit_coefficients);
  j["diagnostics"] = named_to_json(diagnostics);
  j["error_estimate"] = error_estimate;
  return j;
}

RegularizationResult RegularizationResult::from_json(const nlohmann::ordered_json& j) {
  try {
    RegularizationResult r;
    r.value = j.at("value").get<double>();
    r.method = method_from_string(j.at("method").get<std::string>());
    r.form = form_from_string(j.at("form").get<std::string>());
    r.units = units_from_string(j.at("units").get<std::string>());
    r.schedule_kind = j.at("schedule_kind").get<std::string>();
    for (const auto& p : j.at("schedule"))
      r.schedule.push_back({p.at("parameter").get<double>(), p.at("raw").get<double>(),
                            p.at("counter_term").get<double>(), p.at("partial_sum").get<double>()});
    r.fit_coefficients = named_from_json(j.at("fit_coefficients"));
    r.diagnostics = named_from_json(j.at("diagnostics"));
    r.error_estimate = j.at("error_estimate").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse, std::string("malformed result JSON: ") + e.what());
  }
}

bool operator==(const SchedulePoint& a, const SchedulePoint& b) {
  return a.parameter == b.parameter && a.raw == b.raw && a.counter_term == b.counter_term &&
         a.partial_sum == b.partial_sum;
}
bool operator==(const NamedValue& a, const NamedValue& b) { return a.name == b.name && a.value == b.value; }
bool operator==(const RegularizationResult& a, const RegularizationResult& b) {
  return a.value == b.value && a.method == b.method && a.form == b.form && a.units == b.units &&
         a.schedule_kind == b.schedule_kind && a.schedule == b.schedule && a.fit_coefficients == b.fit_coefficients &&
         a.diagnostics == b.diagnostics && a.error_estimate == b.error_estimate;
}

}  // namespace selfind
