#include "selfind/selfind.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "selfind/curve_spec.hpp"
#include "selfind/error.hpp"
#include "selfind/inductance.hpp"
#include "selfind/regularize.hpp"
#include "selfind/solenoid.hpp"
#include "selfind/verify.hpp"

struct sf_curve {
  selfind::ParametricLoop loop;
};

struct sf_result {
  selfind::RegularizationResult result;
};

namespace {

thread_local std::string last_error;

template <class F>
sf_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return SF_OK;
  } catch (const selfind::Error& e) {
    last_error = e.what();
    return static_cast<sf_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SF_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return SF_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) selfind::fail(selfind::ErrorCode::invalid_argument, std::string("null pointer: ") + what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

selfind::QuadratureSpec to_spec(const sf_quadrature_spec* s) {
  selfind::QuadratureSpec q;
  if (s) {
    q.panel_order = s->panel_order;
    q.panels_per_unit_arclength = s->panels_per_unit_arclength;
    q.grading = s->grading;
    q.grading_layers = s->grading_layers;
    q.abs_tol = s->abs_tol;
    q.rel_tol = s->rel_tol;
  }
  q.validate();
  return q;
}

selfind::InductanceForm to_form(sf_form f) {
  if (f != SF_NEUMANN && f != SF_WEBER) selfind::fail(selfind::ErrorCode::invalid_argument, "unknown form");
  return f == SF_WEBER ? selfind::InductanceForm::weber : selfind::InductanceForm::neumann;
}

selfind::UnitSystem to_units(sf_units u) {
  if (u != SF_REDUCED && u != SF_SI) selfind::fail(selfind::ErrorCode::invalid_argument, "unknown unit system");
  return u == SF_SI ? selfind::UnitSystem::si : selfind::UnitSystem::reduced;
}

std::vector<double> schedule_or(const double* values, size_t n, std::vector<double> fallback) {
  if (n == 0) return fallback;
  require(values, "schedule");
  return {values, values + n};
}

void write_list(const std::vector<double>& v, double* out, size_t cap, size_t* count) {
  require(count, "count");
  *count = v.size();
  if (out)
    for (size_t i = 0; i < v.size() && i < cap; ++i) out[i] = v[i];
}

sf_result* wrap(selfind::RegularizationResult r) { return new sf_result{std::move(r)}; }

}  // namespace

extern "C" {

const char* sf_version(void) { return "0.1.0"; }
const char* sf_last_error(void) { return last_error.c_str(); }

const char* sf_status_name(sf_status status) {
  if (status == SF_OK) return "ok";
  if (status == SF_ERR_INTERNAL) return "internal";
  if (status >= 1 && status <= 14) return selfind::to_string(static_cast<selfind::ErrorCode>(static_cast<int>(status)));
  return "unknown";
}

void sf_string_free(char* s) { std::free(s); }

void sf_quadrature_spec_default(sf_quadrature_spec* spec) {
  if (!spec) return;
  const selfind::QuadratureSpec q;
  *spec = {q.panel_order, q.panels_per_unit_arclength, q.grading, q.grading_layers, q.abs_tol, q.rel_tol};
}

sf_status sf_curve_from_json(const char* json, sf_curve** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new sf_curve{selfind::curve_from_json_text(json)};
  });
}

sf_status sf_curve_load(const char* path, sf_curve** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new sf_curve{selfind::load_curve_file(path)};
  });
}

sf_status sf_curve_to_json(const sf_curve* curve, char** out) {
  return guarded([&] {
    require(curve, "curve");
    require(out, "out");
    *out = copy_string(selfind::curve_to_json(curve->loop).dump());
  });
}

void sf_curve_free(sf_curve* curve) { delete curve; }

sf_status sf_curve_length(const sf_curve* curve, double* out) {
  return guarded([&] {
    require(curve, "curve");
    require(out, "out");
    *out = curve->loop.length();
  });
}

sf_status sf_curve_is_closed(const sf_curve* curve, int* out) {
  return guarded([&] {
    require(curve, "curve");
    require(out, "out");
    *out = curve->loop.closed() ? 1 : 0;
  });
}

sf_status sf_curve_scaled(const sf_curve* curve, double factor, sf_curve** out) {
  return guarded([&] {
    require(curve, "curve");
    require(out, "out");
    *out = new sf_curve{curve->loop.scaled(factor)};
  });
}

sf_status sf_curve_offset(const sf_curve* curve, double delta, sf_curve** out) {
  return guarded([&] {
    require(curve, "curve");
    require(out, "out");
    *out = new sf_curve{selfind::offset_curve(curve->loop, delta)};
  });
}

sf_status sf_default_epsilon_schedule(const sf_curve* curve, double* out, size_t cap, size_t* count) {
  return guarded([&] {
    require(curve, "curve");
    write_list(selfind::default_epsilon_schedule(curve->loop), out, cap, count);
  });
}

sf_status sf_default_z_schedule(double* out, size_t cap, size_t* count) {
  return guarded([&] { write_list(selfind::default_z_schedule(), out, cap, count); });
}

sf_status sf_default_delta_schedule(const sf_curve* curve, double* out, size_t cap, size_t* count) {
  return guarded([&] {
    require(curve, "curve");
    write_list(selfind::default_delta_schedule(curve->loop), out, cap, count);
  });
}

sf_status sf_mutual_inductance(const sf_curve* a, const sf_curve* b, sf_form form, sf_units units,
                               const sf_quadrature_spec* spec, double* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = selfind::mutual_inductance(a->loop, b->loop, to_form(form), to_units(units), to_spec(spec));
  });
}

sf_status sf_power_alpha_energy(const sf_curve* a, const sf_curve* b, double alpha, sf_form form,
                                const sf_quadrature_spec* spec, double* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = selfind::power_alpha_energy(a->loop, b->loop, alpha, to_form(form), to_spec(spec));
  });
}

sf_status sf_strip_integrals(const sf_curve* curve, sf_form form, const double* eps, size_t n, sf_units units,
                             const sf_quadrature_spec* spec, double* out) {
  return guarded([&] {
    require(curve, "curve");
    require(eps, "eps");
    require(out, "out");
    if (n == 0) selfind::fail(selfind::ErrorCode::invalid_argument, "empty epsilon list");
    const auto v = selfind::integrate_self_strip(curve->loop, selfind::inductance_kernel(to_form(form)),
                                                 std::span<const double>(eps, n), to_spec(spec));
    const double pf = selfind::prefactor(to_units(units));
    for (size_t i = 0; i < n; ++i) out[i] = pf * v[i];
  });
}

sf_status sf_z_energy(const sf_curve* curve, sf_form form, double z, sf_units units, const sf_quadrature_spec* spec,
                      double* out) {
  return guarded([&] {
    require(curve, "curve");
    require(out, "out");
    *out = selfind::z_energy(curve->loop, to_form(form), z, to_spec(spec), to_units(units)).value;
  });
}

sf_status sf_hadamard_self(const sf_curve* curve, sf_form form, const double* eps, size_t n, sf_units units,
                           const sf_quadrature_spec* spec, sf_result** out) {
  return guarded([&] {
    require(curve, "curve");
    require(out, "out");
    const auto sched = schedule_or(eps, n, n ? std::vector<double>{} : selfind::default_epsilon_schedule(curve->loop));
    *out = wrap(selfind::hadamard_self(curve->loop, to_form(form), sched, to_spec(spec), to_units(units)));
  });
}

sf_status sf_continuation_self(const sf_curve* curve, sf_form form, const double* z, size_t n, sf_units units,
                               const sf_quadrature_spec* spec, sf_result** out) {
  return guarded([&] {
    require(curve, "curve");
    require(out, "out");
    const auto sched = schedule_or(z, n, selfind::default_z_schedule());
    *out = wrap(selfind::continuation_self(curve->loop, to_form(form), sched, to_spec(spec), to_units(units)));
  });
}

sf_status sf_parallel_limit(const sf_curve* curve, const double* delta, size_t n, sf_units units,
                            const sf_quadrature_spec* spec, sf_result** out) {
  return guarded([&] {
    require(curve, "curve");
    require(out, "out");
    const auto sched = schedule_or(delta, n, n ? std::vector<double>{} : selfind::default_delta_schedule(curve->loop));
    *out = wrap(selfind::parallel_limit(curve->loop, sched, to_spec(spec), to_units(units)));
  });
}

sf_status sf_power2_self(const sf_curve* curve, sf_form form, const double* eps, size_t n, sf_units units,
                         const sf_quadrature_spec* spec, sf_result** out) {
  return guarded([&] {
    require(curve, "curve");
    require(out, "out");
    const auto sched = schedule_or(eps, n, n ? std::vector<double>{} : selfind::default_epsilon_schedule(curve->loop));
    *out = wrap(selfind::power2_self_regularized(curve->loop, to_form(form), sched, to_spec(spec), to_units(units)));
  });
}

sf_status sf_phi_local(const sf_curve* curve, double s1, double t, sf_form form, double* out) {
  return guarded([&] {
    require(curve, "curve");
    require(out, "out");
    *out = selfind::phi_local(curve->loop, s1, t, to_form(form));
  });
}

sf_status sf_residues(const sf_curve* curve, sf_form form, sf_units units, const sf_quadrature_spec* spec,
                      double out[4]) {
  return guarded([&] {
    require(curve, "curve");
    require(out, "out");
    const auto r = selfind::residue_estimates(curve->loop, to_form(form), {}, to_spec(spec), to_units(units));
    out[0] = r.res1;
    out[1] = r.res3;
    out[2] = r.res1_expected;
    out[3] = r.res3_expected;
  });
}

sf_status sf_result_value(const sf_result* result, double* out) {
  return guarded([&] {
    require(result, "result");
    require(out, "out");
    *out = result->result.value;
  });
}

sf_status sf_result_error_estimate(const sf_result* result, double* out) {
  return guarded([&] {
    require(result, "result");
    require(out, "out");
    *out = result->result.error_estimate;
  });
}

sf_status sf_result_to_json(const sf_result* result, char** out) {
  return guarded([&] {
    require(result, "result");
    require(out, "out");
    *out = copy_string(result->result.to_json().dump(2));
  });
}

sf_status sf_result_from_json(const char* json, sf_result** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(json);
    } catch (const nlohmann::json::exception& e) {
      selfind::fail(selfind::ErrorCode::parse, std::string("invalid JSON: ") + e.what());
    }
    *out = wrap(selfind::RegularizationResult::from_json(j));
  });
}

void sf_result_free(sf_result* result) { delete result; }

sf_status sf_solenoid_closed_form(double r, double length, sf_units units, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = selfind::closed_form_L(r, length, to_units(units));
  });
}

sf_status sf_solenoid_cylinder_oracle(double r, double length, sf_units units, const sf_quadrature_spec* spec,
                                      double* out) {
  return guarded([&] {
    require(out, "out");
    *out = selfind::cylinder_surface_oracle(r, length, to_units(units), to_spec(spec));
  });
}

sf_status sf_solenoid_asymptotic(double r, double length, sf_units units, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = selfind::asymptotic_L(r, length, to_units(units));
  });
}

sf_status sf_solenoid_convergence(double r, double length, const double* n_list, size_t count, sf_form form,
                                  sf_units units, const sf_quadrature_spec* spec, double* value, double* per_n2,
                                  double* arc_length) {
  return guarded([&] {
    require(n_list, "n_list");
    const auto rows = selfind::convergence_study(r, length, std::span<const double>(n_list, count), to_form(form),
                                                 to_spec(spec), to_units(units));
    for (size_t i = 0; i < rows.size(); ++i) {
      if (value) value[i] = rows[i].value;
      if (per_n2) per_n2[i] = rows[i].per_n2;
      if (arc_length) arc_length[i] = rows[i].length;
    }
  });
}

sf_status sf_verify(const char* curve_dir, const sf_quadrature_spec* spec, char** report, int* all_passed) {
  return guarded([&] {
    require(curve_dir, "curve_dir");
    require(report, "report");
    const auto r = selfind::run_verify(curve_dir, to_spec(spec));
    *report = copy_string(r.to_json().dump(2));
    if (all_passed) *all_passed = r.all_passed() ? 1 : 0;
  });
}

}  // extern "C"
