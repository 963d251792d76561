#pragma once

#include <string_view>

namespace selfind {

// Neumann: (T1.T2)/r.  Weber: (rhat.T1)(rhat.T2)/r.
enum class InductanceForm { neumann, weber };

// reduced: mu0/4pi = 1.  si: mu0 = 4 pi 1e-7 H/m.
enum class UnitSystem { reduced, si };

const char* to_string(InductanceForm form);
const char* to_string(UnitSystem units);
InductanceForm form_from_string(std::string_view name);
UnitSystem units_from_string(std::string_view name);

// mu0 / 4pi in the given system; all internal integrals carry no prefactor.
constexpr double prefactor(UnitSystem units) { return units == UnitSystem::si ? 1e-7 : 1.0; }

}  // namespace selfind
