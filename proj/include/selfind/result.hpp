#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "selfind/forms.hpp"

namespace selfind {

enum class Method { hadamard, continuation, parallel_limit, power2 };

const char* to_string(Method method);
Method method_from_string(std::string_view name);

// One schedule entry. `parameter` is epsilon, z or delta; `raw` the
// integral at that point; `counter_term` what was subtracted; and
// `partial_sum` = raw - counter_term.
struct SchedulePoint {
  double parameter = 0.0;
  double raw = 0.0;
  double counter_term = 0.0;
  double partial_sum = 0.0;
};

struct NamedValue {
  std::string name;
  double value = 0.0;
};

// A regularized value with its counter-term ledger. Every quantity with the
// dimension of an inductance is expressed in `units`.
struct RegularizationResult {
  double value = 0.0;
  Method method = Method::hadamard;
  InductanceForm form = InductanceForm::neumann;
  UnitSystem units = UnitSystem::reduced;
  std::string schedule_kind;  // "epsilon", "z" or "delta"
  std::vector<SchedulePoint> schedule;
  std::vector<NamedValue> fit_coefficients;
  std::vector<NamedValue> diagnostics;
  double error_estimate = 0.0;

  // Throws std::out_of_range when absent.
  double coefficient(std::string_view name) const;
  double diagnostic(std::string_view name) const;

  nlohmann::ordered_json to_json() const;
  static RegularizationResult from_json(const nlohmann::ordered_json& j);
};

bool operator==(const SchedulePoint& a, const SchedulePoint& b);
bool operator==(const NamedValue& a, const NamedValue& b);
bool operator==(const RegularizationResult& a, const RegularizationResult& b);

}  // namespace selfind
