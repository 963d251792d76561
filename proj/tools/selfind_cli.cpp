// Command-line front end. Talks to the library only through selfind.h.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "selfind/selfind.h"

#ifndef SELFIND_DATA_DIR
#define SELFIND_DATA_DIR "data/curves"
#endif

namespace {

using json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_config = 2;
constexpr int exit_tolerance = 3;

struct Failure {
  int code;
  std::string message;
};

int exit_code_for(sf_status s) {
  switch (s) {
    case SF_OK: return exit_ok;
    case SF_ERR_FIT:
    case SF_ERR_COUNTER_TERM_MISMATCH:
    case SF_ERR_EXTRAPOLATION:
    case SF_ERR_TOLERANCE: return exit_tolerance;
    case SF_ERR_INTERNAL: return exit_internal;
    default: return exit_config;
  }
}

void check(sf_status s) {
  if (s != SF_OK) throw Failure{exit_code_for(s), std::string(sf_status_name(s)) + ": " + sf_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  sf_string_free(s);
  return out;
}

struct CurveDeleter {
  void operator()(sf_curve* c) const { sf_curve_free(c); }
};
struct ResultDeleter {
  void operator()(sf_result* r) const { sf_result_free(r); }
};
using CurvePtr = std::unique_ptr<sf_curve, CurveDeleter>;
using ResultPtr = std::unique_ptr<sf_result, ResultDeleter>;

// Bare file names that do not exist locally fall back to the shipped curve set.
std::string resolve_curve_path(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
  const fs::path shipped = fs::path(SELFIND_DATA_DIR) / path;
  if (fs::path(path).parent_path().empty() && fs::exists(shipped)) return shipped.string();
  return path;
}

CurvePtr load_curve(const std::string& path) {
  sf_curve* c = nullptr;
  check(sf_curve_load(resolve_curve_path(path).c_str(), &c));
  return CurvePtr(c);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size() && item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Failure{exit_config, std::string("bad number '") + item + "' in " + flag};
    }
  }
  return out;
}

struct Common {
  std::string form = "neumann";
  std::string units = "reduced";
  std::string format;
  std::string out;
  int panel_order = 0;
  double panels_per_unit = 0.0;

  sf_form form_value() const { return form == "weber" ? SF_WEBER : SF_NEUMANN; }
  sf_units units_value() const { return units == "si" ? SF_SI : SF_REDUCED; }
  sf_quadrature_spec spec() const {
    sf_quadrature_spec q;
    sf_quadrature_spec_default(&q);
    if (panel_order > 0) q.panel_order = panel_order;
    if (panels_per_unit > 0) q.panels_per_unit_arclength = panels_per_unit;
    return q;
  }
  bool csv(const char* fallback) const { return (format.empty() ? std::string(fallback) : format) == "csv"; }
};

void add_common(CLI::App* app, Common& c, bool with_form = true) {
  if (with_form)
    app->add_option("--form", c.form, "neumann or weber")->check(CLI::IsMember({"neumann", "weber"}))->capture_default_str();
  app->add_option("--units", c.units, "reduced (mu0/4pi = 1) or si")
      ->check(CLI::IsMember({"reduced", "si"}))
      ->capture_default_str();
  app->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--out", c.out, "output file (default stdout)");
  app->add_option("--panel-order", c.panel_order, "Gauss-Legendre points per panel");
  app->add_option("--panels-per-unit", c.panels_per_unit, "panels per unit arc length");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Failure{exit_config, "cannot open output file " + c.out};
  f << text;
  if (!f) throw Failure{exit_config, "failed writing " + c.out};
}

// Key/value CSV of a result plus its schedule table.
std::string result_csv(const json& j) {
  std::ostringstream o;
  o << "key,value\n";
  o << "value," << fmt(j["value"].get<double>()) << "\n";
  o << "error_estimate," << fmt(j["error_estimate"].get<double>()) << "\n";
  for (auto& [k, v] : j["fit_coefficients"].items()) o << "coefficient." << k << "," << fmt(v.get<double>()) << "\n";
  for (auto& [k, v] : j["diagnostics"].items()) o << "diagnostic." << k << "," << fmt(v.get<double>()) << "\n";
  o << "\nparameter,raw,counter_term,partial_sum\n";
  for (auto& p : j["schedule"])
    o << fmt(p["parameter"].get<double>()) << "," << fmt(p["raw"].get<double>()) << ","
      << fmt(p["counter_term"].get<double>()) << "," << fmt(p["partial_sum"].get<double>()) << "\n";
  return o.str();
}

void emit_result(const Common& c, sf_result* r) {
  char* text = nullptr;
  check(sf_result_to_json(r, &text));
  std::string s = take(text);
  if (c.csv("json"))
    emit(c, result_csv(json::parse(s)));
  else
    emit(c, s + "\n");
}

double curve_length(const sf_curve* c) {
  double L = 0;
  check(sf_curve_length(c, &L));
  return L;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutual and regularized self-inductance of space curves"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sf_version()));

  Common c;
  std::string curve_path, eps_text, z_text, delta_text, n_text = "2,4,8";
  std::vector<std::string> pair;
  std::string curves_dir = SELFIND_DATA_DIR;
  int power = 1;
  double alpha = 0.0, radius = 1.0, length = 2.0;
  bool with_oracle = false;

  auto* self = app.add_subcommand("self", "regularized self-inductance (Hadamard finite part)");
  self->add_option("--curve", curve_path, "curve JSON file")->required();
  self->add_option("--eps", eps_text, "comma-separated strip widths, decreasing");
  self->add_option("--power", power, "1 for inductance, 2 for the power-2 energy")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  add_common(self, c);

  auto* mutual = app.add_subcommand("mutual", "mutual inductance of two disjoint curves");
  mutual->add_option("--curve", pair, "two curve JSON files")->required()->expected(2);
  mutual->add_option("--alpha", alpha, "use the 1/r^alpha energy instead (reduced units only)");
  add_common(mutual, c);

  auto* sweep = app.add_subcommand("sweep", "strip-excluded integrals over an epsilon schedule");
  sweep->add_option("--curve", curve_path, "curve JSON file")->required();
  sweep->add_option("--eps", eps_text, "comma-separated strip widths, decreasing");
  add_common(sweep, c);

  auto* cont = app.add_subcommand("continuation", "self-inductance by analytic continuation in z");
  cont->add_option("--curve", curve_path, "curve JSON file")->required();
  cont->add_option("--z", z_text, "comma-separated exponents in (-1,-0.5], decreasing");
  add_common(cont, c);

  auto* par = app.add_subcommand("parallel-limit", "limit of L(G, G_delta) + 2L log(delta)");
  par->add_option("--curve", curve_path, "curve JSON file")->required();
  par->add_option("--delta", delta_text, "comma-separated offsets, decreasing");
  add_common(par, c, false);

  auto* sol = app.add_subcommand("solenoid", "helix self-inductance against the solenoid limit");
  sol->add_option("--radius", radius, "solenoid radius")->capture_default_str();
  sol->add_option("--length", length, "solenoid length")->capture_default_str();
  sol->add_option("--n", n_text, "comma-separated turns per unit length")->capture_default_str();
  sol->add_flag("--oracle", with_oracle, "also evaluate the cylinder-surface quadrature");
  add_common(sol, c);

  auto* ver = app.add_subcommand("verify", "run the identity suite on a curve set");
  ver->add_option("--curves", curves_dir, "directory with the curve files")->capture_default_str();
  add_common(ver, c, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_config;
  }

  try {
    const sf_quadrature_spec spec = c.spec();

    if (*self) {
      CurvePtr curve = load_curve(curve_path);
      const auto eps = parse_list(eps_text, "--eps");
      sf_result* r = nullptr;
      if (power == 2)
        check(sf_power2_self(curve.get(), c.form_value(), eps.data(), eps.size(), c.units_value(), &spec, &r));
      else
        check(sf_hadamard_self(curve.get(), c.form_value(), eps.data(), eps.size(), c.units_value(), &spec, &r));
      ResultPtr res(r);
      emit_result(c, res.get());
    } else if (*mutual) {
      CurvePtr a = load_curve(pair[0]);
      CurvePtr b = load_curve(pair[1]);
      double value = 0;
      if (mutual->count("--alpha"))
        check(sf_power_alpha_energy(a.get(), b.get(), alpha, c.form_value(), &spec, &value));
      else
        check(sf_mutual_inductance(a.get(), b.get(), c.form_value(), c.units_value(), &spec, &value));
      if (c.csv("csv")) {
        emit(c, "quantity,value\n" + std::string(mutual->count("--alpha") ? "energy," : "mutual_inductance,") +
                    fmt(value) + "\n");
      } else {
        json j;
        j["form"] = c.form;
        j["units"] = c.units;
        if (mutual->count("--alpha")) j["alpha"] = alpha;
        j[mutual->count("--alpha") ? "energy" : "mutual_inductance"] = value;
        emit(c, j.dump(2) + "\n");
      }
    } else if (*sweep) {
      CurvePtr curve = load_curve(curve_path);
      std::vector<double> eps = parse_list(eps_text, "--eps");
      if (eps.empty()) {
        size_t n = 0;
        check(sf_default_epsilon_schedule(curve.get(), nullptr, 0, &n));
        eps.resize(n);
        check(sf_default_epsilon_schedule(curve.get(), eps.data(), n, &n));
      }
      std::vector<double> raw(eps.size());
      check(sf_strip_integrals(curve.get(), c.form_value(), eps.data(), eps.size(), c.units_value(), &spec,
                               raw.data()));
      const double pf = c.units_value() == SF_SI ? 1e-7 : 1.0;
      const double L = curve_length(curve.get());
      json rows = json::array();
      std::ostringstream o;
      o << "epsilon,raw_integral,counter_term,partial_sum\n";
      for (size_t i = 0; i < eps.size(); ++i) {
        const double counter = pf * 2.0 * L * std::log(1.0 / eps[i]);
        o << fmt(eps[i]) << "," << fmt(raw[i]) << "," << fmt(counter) << "," << fmt(raw[i] - counter) << "\n";
        rows.push_back({{"epsilon", eps[i]}, {"raw_integral", raw[i]}, {"counter_term", counter},
                        {"partial_sum", raw[i] - counter}});
      }
      if (c.csv("csv"))
        emit(c, o.str());
      else
        emit(c, json{{"form", c.form}, {"units", c.units}, {"rows", rows}}.dump(2) + "\n");
    } else if (*cont) {
      CurvePtr curve = load_curve(curve_path);
      const auto z = parse_list(z_text, "--z");
      sf_result* r = nullptr;
      check(sf_continuation_self(curve.get(), c.form_value(), z.data(), z.size(), c.units_value(), &spec, &r));
      ResultPtr res(r);
      emit_result(c, res.get());
    } else if (*par) {
      CurvePtr curve = load_curve(curve_path);
      const auto delta = parse_list(delta_text, "--delta");
      sf_result* r = nullptr;
      check(sf_parallel_limit(curve.get(), delta.data(), delta.size(), c.units_value(), &spec, &r));
      ResultPtr res(r);
      emit_result(c, res.get());
    } else if (*sol) {
      const auto ns = parse_list(n_text, "--n");
      if (ns.empty()) throw Failure{exit_config, "--n needs at least one value"};
      const sf_units u = c.units_value();
      double closed = 0, asym = 0, oracle = 0;
      check(sf_solenoid_closed_form(radius, length, u, &closed));
      check(sf_solenoid_asymptotic(radius, length, u, &asym));
      if (with_oracle) check(sf_solenoid_cylinder_oracle(radius, length, u, &spec, &oracle));
      std::vector<double> value(ns.size()), per(ns.size()), arc(ns.size());
      check(sf_solenoid_convergence(radius, length, ns.data(), ns.size(), c.form_value(), u, &spec, value.data(),
                                    per.data(), arc.data()));
      if (c.csv("csv")) {
        std::ostringstream o;
        o << "n,arc_length,value,per_n2,closed_form,deviation\n";
        for (size_t i = 0; i < ns.size(); ++i)
          o << fmt(ns[i]) << "," << fmt(arc[i]) << "," << fmt(value[i]) << "," << fmt(per[i]) << "," << fmt(closed)
            << "," << fmt(std::abs(per[i] - closed)) << "\n";
        emit(c, o.str());
      } else {
        json j;
        j["radius"] = radius;
        j["length"] = length;
        j["form"] = c.form;
        j["units"] = c.units;
        j["closed_form"] = closed;
        j["asymptotic"] = asym;
        if (with_oracle) j["cylinder_oracle"] = oracle;
        auto& rows = j["rows"] = json::array();
        for (size_t i = 0; i < ns.size(); ++i)
          rows.push_back({{"n", ns[i]}, {"arc_length", arc[i]}, {"value", value[i]}, {"per_n2", per[i]},
                          {"deviation", std::abs(per[i] - closed)}});
        emit(c, j.dump(2) + "\n");
      }
    } else if (*ver) {
      char* text = nullptr;
      int passed = 0;
      check(sf_verify(curves_dir.c_str(), &spec, &text, &passed));
      const std::string report = take(text);
      if (c.csv("json")) {
        const json j = json::parse(report);
        std::ostringstream o;
        o << "name,value,expected,error,tolerance,metric,passed\n";
        for (auto& k : j["checks"])
          o << k["name"].get<std::string>() << "," << fmt(k["value"].get<double>()) << ","
            << fmt(k["expected"].get<double>()) << "," << fmt(k["error"].get<double>()) << ","
            << fmt(k["tolerance"].get<double>()) << "," << k["metric"].get<std::string>() << ","
            << (k["passed"].get<bool>() ? "true" : "false") << "\n";
        emit(c, o.str());
      } else {
        emit(c, report + "\n");
      }
      if (!passed) {
        std::cerr << "verify: one or more checks exceeded tolerance\n";
        return exit_tolerance;
      }
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_internal;
  }
  return exit_ok;
}
