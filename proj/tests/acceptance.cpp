// One PASS/FAIL line per acceptance criterion. Usage:
//   acceptance <path-to-selfind_cli> <curve-dir> <scratch-dir>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "oracles.hpp"
#include "selfind/curve.hpp"
#include "selfind/curve_spec.hpp"
#include "selfind/inductance.hpp"
#include "selfind/regularize.hpp"
#include "selfind/solenoid.hpp"

using namespace selfind;
using oracle::pi;

namespace {

const InductanceForm N = InductanceForm::neumann;
const InductanceForm W = InductanceForm::weber;

double rel(double value, double expected) { return std::abs(value - expected) / std::abs(expected); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Collects sub-check outcomes and a short detail string for one criterion.
struct Criterion {
  bool ok = true;
  std::ostringstream detail;

  void check(bool pass, const std::string& what) {
    if (!pass) {
      ok = false;
      detail << " [miss: " << what << "]";
    }
  }
};

int failed = 0;

void report(int id, const char* title, const std::function<void(Criterion&)>& body) {
  Criterion c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << " [error: " << e.what() << "]";
  }
  if (!c.ok) ++failed;
  std::printf("%s criterion %d: %s;%s\n", c.ok ? "PASS" : "FAIL", id, title, c.detail.str().c_str());
  std::fflush(stdout);
}

RegularizationResult hadamard(const ParametricLoop& c, InductanceForm f) {
  return hadamard_self(c, f, default_epsilon_schedule(c));
}

ParametricLoop moved(const ParametricLoop& loop, Vec3 shift, Vec3 axis = {0, 0, 1}, double angle = 0.0) {
  Transform t;
  t.rotation = Mat3::rotation(axis, angle);
  t.translation = shift;
  return loop.transformed(t);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 4) {
    std::fprintf(stderr, "usage: acceptance <selfind_cli> <curve-dir> <scratch-dir>\n");
    return 2;
  }
  const std::string cli = argv[1], curves = argv[2], scratch = argv[3];
  const ParametricLoop circle = make_circle(1.0);
  const ParametricLoop ellipse = make_ellipse(2.0, 1.0);
  const double H_circle = 8.0 * pi * (std::log(2.0) - 1.0);

  report(1, "unit-circle Hadamard value 8 pi (log 2 - 1), 1e-5 relative, under 10 s", [&](Criterion& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const double h = hadamard(circle, N).value;
    const double t = seconds_since(t0);
    c.detail << " value " << h << " expected " << H_circle << " rel " << rel(h, H_circle) << " time " << t << " s";
    c.check(rel(h, H_circle) < 1e-5, "value");
    c.check(t < 10.0, "runtime");
  });

  report(2, "Weber - Neumann = 2L (reduced), 1e-4 relative on circle, ellipse, trefoil, helix", [&](Criterion& c) {
    const std::pair<const char*, ParametricLoop> curves_[] = {
        {"circle", circle},
        {"ellipse", ellipse},
        {"trefoil", make_harmonic_knot(HarmonicKnotParams::trefoil())},
        {"helix", make_helix(1.0, 2.0, 4.0)},
    };
    for (const auto& [name, loop] : curves_) {
      const double diff = hadamard(loop, W).value - hadamard(loop, N).value;
      const double expected = 2.0 * loop.length();
      c.detail << " " << name << " rel " << rel(diff, expected);
      c.check(rel(diff, expected) < 1e-4, std::string(name) + " W-N=" + std::to_string(diff) + " vs 2L=" +
                                               std::to_string(expected));
    }
  });

  report(3, "Hadamard vs continuation, 1e-3 relative on circle and ellipse, under 60 s each", [&](Criterion& c) {
    for (const auto& [name, loop] : {std::pair{"circle", circle}, std::pair{"ellipse", ellipse}}) {
      for (InductanceForm f : {N, W}) {
        const auto t0 = std::chrono::steady_clock::now();
        const double h = hadamard(loop, f).value;
        const double z = continuation_self(loop, f, default_z_schedule()).value;
        const double t = seconds_since(t0);
        c.detail << " " << name << "/" << to_string(f) << " rel " << rel(z, h) << " (" << t << " s)";
        c.check(rel(z, h) < 1e-3, std::string(name) + " agreement");
        c.check(t < 60.0, std::string(name) + " runtime");
      }
    }
  });

  report(4, "free log coefficient 0.1%, eps^2 coefficient 1% (11/24, 5/24 of int kappa^2)", [&](Criterion& c) {
    for (const auto& [name, loop] : {std::pair{"circle", circle}, std::pair{"ellipse", ellipse}}) {
      const double k2 = curvature_sq_integral(loop), L = loop.length();
      for (auto [f, ratio] : {std::pair{N, 11.0 / 24.0}, std::pair{W, 5.0 / 24.0}}) {
        const auto r = hadamard(loop, f);
        const double e_log = rel(r.diagnostic("free_c_log"), 2.0 * L);
        const double e_c2 = rel(r.coefficient("c2"), ratio * k2);
        c.detail << " " << name << "/" << to_string(f) << " log " << e_log << " eps2 " << e_c2;
        c.check(e_log < 1e-3 && e_c2 < 1e-2, name);
      }
    }
  });

  report(5, "residues: phi(0) = 2 to 1e-6, first residue 0.1%, second residue 1%", [&](Criterion& c) {
    for (const auto& [name, loop] : {std::pair{"circle", circle}, std::pair{"ellipse", ellipse}}) {
      for (InductanceForm f : {N, W}) {
        const auto r = residue_estimates(loop, f);
        c.detail << " " << name << "/" << to_string(f) << " phi0 " << r.max_phi0_error << " res1 "
                 << rel(r.res1, r.res1_expected) << " res3 " << rel(r.res3, r.res3_expected);
        c.check(r.max_phi0_error < 1e-6 && rel(r.res1, r.res1_expected) < 1e-3 && rel(r.res3, r.res3_expected) < 1e-2,
                name);
      }
    }
    // Exact circle values.
    c.check(rel(residue_estimates(circle, N).res3, -1.5 * pi) < 1e-2, "circle -3pi/2");
    c.check(rel(residue_estimates(circle, W).res3, -0.5 * pi) < 1e-2, "circle -pi/2");
  });

  report(6, "parallel limit = H_N + 4 pi log 2 within 1e-3; implied H_N within 1e-3", [&](Criterion& c) {
    const auto r = parallel_limit(circle, default_delta_schedule(circle));
    const double expected = H_circle + 4.0 * pi * std::log(2.0);
    const double implied = r.diagnostic("implied_H");
    c.detail << " value " << r.value << " expected " << expected << " implied H " << implied;
    c.check(std::abs(r.value - expected) < 1e-3, "limit");
    c.check(std::abs(implied - H_circle) < 1e-3, "implied H");
  });

  report(7, "Neumann = Weber on 5 disjoint pairs (1e-6); alpha identity for 0.5, 1, 2, 3 (1e-6)", [&](Criterion& c) {
    const std::vector<std::pair<ParametricLoop, ParametricLoop>> pairs = {
        {circle, moved(make_circle(0.7), {0, 0, 0.8})},
        {circle, moved(make_circle(0.9), {1.1, 0.2, 0.1}, {1, 0.3, 0}, 1.3)},
        {ellipse, moved(circle, {0.5, -0.3, 1.5}, {1, 1, 0}, 0.6)},
        {make_harmonic_knot(HarmonicKnotParams::trefoil()), moved(circle, {0, 0, 4})},
        {circle, moved(make_ellipse(1.2, 0.6), {3.5, 0.2, 0.1}, {0, 1, 0}, 0.4)},
    };
    double worst = 0.0, worst_alpha = 0.0;
    for (const auto& [a, b] : pairs) {
      const double n = mutual_inductance(a, b, N), w = mutual_inductance(a, b, W);
      worst = std::max(worst, std::abs(n - w) / std::max(std::abs(n), 1.0));
      for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
        const double pn = power_alpha_energy(a, b, alpha, N), pw = power_alpha_energy(a, b, alpha, W);
        worst_alpha = std::max(worst_alpha, rel(pn, alpha * pw));
      }
    }
    c.detail << " worst N-W " << worst << " worst alpha " << worst_alpha;
    c.check(worst < 1e-6, "Neumann = Weber");
    c.check(worst_alpha < 1e-6, "alpha identity");
  });

  report(8, "coaxial circles vs Maxwell's elliptic formula, 1e-4 relative at d = 0.5, 1, 2", [&](Criterion& c) {
    for (double d : {0.5, 1.0, 2.0}) {
      const double m = mutual_inductance(circle, moved(circle, {0, 0, d}), N);
      const double e = rel(m, 4.0 * pi * oracle::maxwell_over_mu0(1.0, 1.0, d));
      c.detail << " d=" << d << " rel " << e;
      c.check(e < 1e-4, "d=" + std::to_string(d));
    }
  });

  report(9, "solenoid: closed form vs cylinder oracle 1e-5; deviations decrease for n = 2, 4, 8; slope -1 +- 0.1",
         [&](Criterion& c) {
           double worst = 0.0;
           for (double r : {0.5, 1.0, 2.0})
             for (double l : {1.0, 2.0, 10.0}) worst = std::max(worst, rel(closed_form_L(r, l), cylinder_surface_oracle(r, l)));
           c.detail << " oracle worst " << worst;
           c.check(worst < 1e-5, "oracle grid");
           const std::vector<double> ns = {2.0, 4.0, 8.0};
           const auto rows = convergence_study(1.0, 2.0, ns, N);
           c.detail << " limit " << closed_form_L(1.0, 2.0) << " deviations";
           for (const auto& row : rows) c.detail << " " << row.deviation;
           c.check(rows[1].deviation < rows[0].deviation && rows[2].deviation < rows[1].deviation, "monotone");
           std::vector<double> x, y;
           for (double l : {10.0, 20.0, 40.0, 80.0}) {
             x.push_back(std::log(l));
             y.push_back(std::log(std::abs(closed_form_L(1.0, l) - asymptotic_L(1.0, l))));
           }
           const double slope = oracle::power_fit(x, y, {0, 1})[1];
           c.detail << " slope " << slope;
           c.check(std::abs(slope + 1.0) < 0.1, "slope");
         });

  report(10, "homothety on the circle for lambda = 1/2, 2, 1e-4 relative", [&](Criterion& c) {
    for (double lam : {0.5, 2.0}) {
      const double h = hadamard(circle.scaled(lam), N).value;
      const double expected = lam * (H_circle + 2.0 * circle.length() * std::log(lam));
      c.detail << " lambda=" << lam << " value " << h << " rel " << rel(h, expected);
      c.check(rel(h, expected) < 1e-4, "lambda=" + std::to_string(lam));
    }
  });

  report(11, "power-2 unit-circle Neumann energy = -2 pi^2, 1e-4 relative", [&](Criterion& c) {
    const double v = power2_self_regularized(circle, N, default_epsilon_schedule(circle)).value;
    c.detail << " value " << v << " rel " << rel(v, -2.0 * pi * pi);
    c.check(rel(v, -2.0 * pi * pi) < 1e-4, "value");
  });

  report(12, "two verify runs produce byte-identical output", [&](Criterion& c) {
    std::filesystem::create_directories(scratch);
    const std::string a = scratch + "/verify_a.json", b = scratch + "/verify_b.json";
    int codes[2];
    int i = 0;
    for (const std::string& out : {a, b}) {
      const std::string cmd = "\"" + cli + "\" verify --curves \"" + curves + "\" --out \"" + out + "\"";
      const int status = std::system(cmd.c_str());
      codes[i++] = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }
    const std::string ta = slurp(a), tb = slurp(b);
    c.detail << " exit codes " << codes[0] << "," << codes[1] << " bytes " << ta.size();
    c.check(codes[0] == 0 && codes[1] == 0, "verify exit status");
    c.check(!ta.empty() && ta == tb, "identical bytes");
  });

  std::printf("%d of 12 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
