// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "semiinf/basis.hpp"
#include "semiinf/errors.hpp"
#include "semiinf/newton.hpp"
#include "semiinf/oracle.hpp"
#include "semiinf/report.hpp"

using namespace semiinf;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string num9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

const ReferenceTable& ref(ReferenceId id) { return reference_table(id); }

// Max |value - column| over table rows with lo <= abscissa <= hi; `pick` selects f or f'.
double column_error(const SolutionTable& t, ReferenceId id, const std::string& column, double lo,
                    double hi, bool derivative) {
  double worst = 0.0;
  for (const auto& row : t.rows) {
    if (row.abscissa < lo || row.abscissa > hi) continue;
    const double v = derivative ? row.fprime : row.f;
    worst = std::max(worst, std::abs(v - ref(id).value(row.abscissa, column)));
  }
  return worst;
}

const char* const kLambdaTags[] = {"lam0", "lam1_4", "lam1_3", "lam1_2", "lam3_4", "lam1"};
const double kLambdas[] = {0.0, 0.25, 1.0 / 3.0, 0.5, 0.75, 1.0};

Check criterion1() {
  Check c;
  const SolutionTable t = run_case(preset_config("table1-mglf"));
  const double slope_err = std::abs(t.slope + 0.678297);
  const double f_err = column_error(t, ReferenceId::T1, "MGLF", 0.0, 1e300, false);
  c.require(t.rows.size() == 19, "expected 19 rows, got " + std::to_string(t.rows.size()));
  c.require(slope_err <= 5e-4, "f'(0) error " + num(slope_err));
  c.require(f_err <= 5e-4, "f error " + num(f_err));
  c.detail += (c.detail.empty() ? "" : " | ") + std::string("f'(0) = ") + num9(t.slope) +
              ", max |f - MGLF| = " + num(f_err);
  return c;
}

Check criterion2() {
  Check c;
  const SolutionTable t = run_case(preset_config("table1-hf"));
  const double f_err = column_error(t, ReferenceId::T1, "HF", 0.0, 1e300, false);
  c.require(t.slope == -0.678301, "f'(0) = " + num9(t.slope) + " is not -0.678301");
  c.require(f_err <= 1e-3, "f error " + num(f_err));
  c.detail += (c.detail.empty() ? "" : " | ") + std::string("f'(0) = ") + num9(t.slope) +
              ", max |f - HF| = " + num(f_err);
  return c;
}

Check criterion3() {
  Check c;
  const SolutionTable t = run_case(preset_config("table1-sf"));
  const double f_err = column_error(t, ReferenceId::T1, "SF", 0.2, 1e300, false);
  const double slope_err = std::abs(t.slope + 0.677843);
  c.require(f_err <= 2e-3, "f error " + num(f_err));
  c.require(slope_err <= 5e-3, "f'(0) error " + num(slope_err));
  c.detail += (c.detail.empty() ? "" : " | ") + std::string("f'(0) = ") + num9(t.slope) +
              ", max |f - SF| (z >= 0.2) = " + num(f_err);
  return c;
}

Check criterion4() {
  Check c;
  const SolutionTable t = run_case(preset_config("table2-hf"));
  const double y_err = column_error(t, ReferenceId::T2, "HF", 0.0, 4.0, false);
  c.require(t.slope == -1.588071, "y'(0) = " + num9(t.slope) + " is not -1.588071");
  c.require(y_err <= 5e-3, "y error " + num(y_err));
  c.detail += (c.detail.empty() ? "" : " | ") + std::string("y'(0) = ") + num9(t.slope) +
              ", max |y - HF| (x <= 4) = " + num(y_err);
  return c;
}

Check criterion5() {
  Check c;
  const SolutionTable t = run_case(preset_config("table2-mglf"));
  const double y_err = column_error(t, ReferenceId::T2, "Liao", 0.0, 4.0, false);
  const double slope_err = std::abs(t.slope + 1.158425);
  c.require(t.max_nodal_residual <= 1e-8, "nodal residual " + num(t.max_nodal_residual));
  c.require(y_err <= 1.5e-2, "y error " + num(y_err));
  c.require(slope_err <= 5e-2, "y'(0) error " + num(slope_err));
  c.detail += (c.detail.empty() ? "" : " | ") + std::string("residual ") +
              num(t.max_nodal_residual) + ", max |y - Liao| (x <= 4) = " + num(y_err) +
              ", y'(0) = " + num9(t.slope);
  return c;
}

Check criterion6() {
  Check c;
  std::string slopes;
  for (int i = 0; i < 6; ++i) {
    const SolutionTable t = run_case(preset_config(std::string("table3-") + kLambdaTags[i]));
    const double want = ref(ReferenceId::T3).value(kLambdas[i], "MGLF");
    const double err = std::abs(t.slope - want);
    c.require(err <= 1e-3, std::string(kLambdaTags[i]) + " f'(0) = " + num9(t.slope) + " vs " +
                               num9(want) + " (error " + num(err) + ")");
    slopes += (slopes.empty() ? "" : ", ") + num(err);
  }
  const std::pair<const char*, ReferenceId> profiles[] = {{"table6-mglf", ReferenceId::T6},
                                                          {"table7-mglf", ReferenceId::T7}};
  std::string prof;
  for (const auto& [preset, id] : profiles) {
    const SolutionTable t = run_case(preset_config(preset));
    const double err = column_error(t, id, "MGLF", 0.0, 2.0, true);
    c.require(err <= 2e-3, std::string(preset) + " f' error " + num(err));
    prof += (prof.empty() ? "" : ", ") + num(err);
  }
  c.detail += (c.detail.empty() ? "" : " | ") + std::string("slope errors [") + slopes +
              "], profile errors [" + prof + "]";
  return c;
}

Check criterion7() {
  Check c;
  double worst_slope = 0.0;
  double worst_profile = 0.0;
  for (int i = 0; i < 6; ++i) {
    const RunConfig cfg = preset_config(std::string("table4-") + kLambdaTags[i]);
    const double beta = *cfg.seed_beta;
    const SolutionTable t = run_case(cfg);
    const double slope_err = std::abs(t.slope - beta / 2.0);
    worst_slope = std::max(worst_slope, slope_err);
    c.require(slope_err <= 4 * std::numeric_limits<double>::epsilon() * beta,
              std::string(kLambdaTags[i]) + " f'(0) differs from beta/2 by " + num(slope_err));
    for (const auto& row : t.rows) {
      const double eta = row.abscissa;
      const double seed = beta * beta * beta / (2.0 * (beta + eta) * (beta + eta));
      const double err = std::abs(row.fprime - seed);
      worst_profile = std::max(worst_profile, err);
      c.require(err <= 1e-3, std::string(kLambdaTags[i]) + " f'(" + num(eta) + ") error " + num(err));
    }
  }
  c.detail += (c.detail.empty() ? "" : " | ") + std::string("max |f'(0) - beta/2| = ") +
              num(worst_slope) + ", max |f' - seed'| = " + num(worst_profile);
  return c;
}

Check criterion8() {
  Check c;
  std::string errs;
  double worst_res = 0.0;
  for (int i = 0; i < 6; ++i) {
    const SolutionTable t = run_case(preset_config(std::string("table5-") + kLambdaTags[i]));
    const double want = ref(ReferenceId::T5).value(kLambdas[i], "SF");
    const double err = std::abs(t.slope - want);
    worst_res = std::max(worst_res, t.max_nodal_residual);
    c.require(err <= 1e-4, std::string(kLambdaTags[i]) + " f'(0) = " + num9(t.slope) + " vs " +
                               num9(want) + " (error " + num(err) + ")");
    c.require(t.max_nodal_residual <= 1e-8,
              std::string(kLambdaTags[i]) + " residual " + num(t.max_nodal_residual));
    errs += (errs.empty() ? "" : ", ") + num(err);
  }
  c.detail += (c.detail.empty() ? "" : " | ") + std::string("slope errors [") + errs +
              "], max residual " + num(worst_res);
  return c;
}

Check criterion9() {
  Check c;
  double worst = 0.0;
  for (double lam : kLambdas) {
    const Problem p = ConeParams{lam};
    const double s = shoot(p, ShootConfig::defaults_for(p)).initial_slope;
    const double err = std::abs(s - ref(ReferenceId::T3).value(lam, "RK"));
    worst = std::max(worst, err);
    c.require(err <= 1e-4, "cone lambda " + num(lam) + " error " + num(err));
  }
  const Problem fluid = FluidParams::from_b1_b3(0.6, 0.5);
  const double sf = shoot(fluid, ShootConfig::defaults_for(fluid)).initial_slope;
  c.require(std::abs(sf + 0.678301) <= 1e-5, "fluid slope " + num9(sf));
  const Problem tf = ThomasFermiParams{};
  const double st = shoot(tf, ShootConfig::defaults_for(tf)).initial_slope;
  c.require(std::abs(st + 1.588071) <= 5e-4, "Thomas-Fermi slope " + num9(st));
  c.detail += (c.detail.empty() ? "" : " | ") + std::string("cone max error ") + num(worst) +
              ", fluid " + num9(sf) + ", Thomas-Fermi " + num9(st);
  return c;
}

Check criterion10() {
  Check c;

  double mglf = 0.0;
  for (double L : {0.5, 1.0, 2.0}) {
    const LaguerreBasis b(12, 1.0, L);
    const auto rule = mglf_quadrature_weights(b, laguerre_nodes(b));
    for (int m = 0; m < 12; ++m) {
      for (int n = 0; n < 12; ++n) {
        const double ip = discrete_inner_product([&](double x) { return mglf_eval(b, m, x, 0); },
                                                 [&](double x) { return mglf_eval(b, n, x, 0); }, rule);
        const double norm = (n + 1.0) / (L * L);
        mglf = std::max(mglf, std::abs(ip - (m == n ? norm : 0.0)) / norm);
      }
    }
  }
  c.require(mglf <= 1e-8, "MGLF orthogonality " + num(mglf));

  double herm = 0.0;
  for (double k : {0.5, 0.9, 1.2}) {
    const HermiteBasis b(8, k);
    const auto rule = hermite_trapezoid_rule(b);
    for (int m = 0; m <= 8; ++m) {
      for (int n = 0; n <= 8; ++n) {
        const double ip = discrete_inner_product(
            [&](double x) { return transformed_hermite_eval(b, m, x, 0); },
            [&](double x) { return transformed_hermite_eval(b, n, x, 0); }, rule);
        herm = std::max(herm, std::abs(ip - (m == n ? std::sqrt(std::numbers::pi) : 0.0)));
      }
    }
  }
  c.require(herm <= 1e-6, "Hermite orthogonality " + num(herm));

  double delta = 0.0;
  for (double h : {0.5, 1.0, 2.0}) {
    const int n = 5;
    for (int m = 1; m <= 3; ++m) {
      const DeltaMatrix d(m, h, n);
      const double e = (m == 3 ? 1e-2 : 1e-3) * h;
      for (int k = -n; k <= n; ++k) {
        for (int j = -n; j <= n; ++j) {
          const auto s = [&](double dp) { return sinc((j * h + dp - k * h) / h); };
          const auto central = [&](double q) {
            if (m == 1) return (s(q) - s(-q)) / (2 * q);
            if (m == 2) return (s(q) - 2 * s(0) + s(-q)) / (q * q);
            return (s(2 * q) - 2 * s(q) + 2 * s(-q) - s(-2 * q)) / (2 * q * q * q);
          };
          const double fd = (4.0 * central(e / 2) - central(e)) / 3.0;
          const double scale = std::max(std::abs(d(k, j)), 1e-2);
          delta = std::max(delta, std::abs(fd - d(k, j)) / scale);
        }
      }
    }
  }
  c.require(delta <= 1e-6, "Sinc delta vs finite differences " + num(delta));

  double deriv = 0.0;
  const std::vector<BasisSpec> bases{LaguerreBasis(10, 1.0, 0.8), HermiteBasis(8, 1.2),
                                     SincBasis(5, 1.0, SincMap::LogSinh, SincWeight::RationalX),
                                     SincBasis(5, 1.0, SincMap::Log, SincWeight::RationalX3)};
  for (const auto& basis : bases) {
    for (int i = 0; i < dimension(basis); ++i) {
      for (double x : {0.3, 0.9, 2.0, 4.5}) {
        for (int m = 1; m <= 3; ++m) {
          const auto central = [&](double q) {
            return (basis_eval(basis, i, x + q, m - 1) - basis_eval(basis, i, x - q, m - 1)) / (2 * q);
          };
          const double fd = (4.0 * central(5e-4) - central(1e-3)) / 3.0;
          deriv = std::max(deriv, std::abs(fd - basis_eval(basis, i, x, m)));
        }
      }
    }
  }
  c.require(deriv <= 1e-5, "basis derivatives vs central differences " + num(deriv));

  // Newton on x^2 - 4 from 3: e_{n+1} <= C e_n^2 with C = 1/4 in exact arithmetic.
  const VectorFunction f = [](std::span<const double> x) { return std::vector<double>{x[0] * x[0] - 4.0}; };
  NewtonConfig one;
  one.max_iter = 1;
  one.tol_residual = 1e-300;
  one.tol_step = 1e-300;
  std::vector<double> x{3.0};
  double worst_ratio = 0.0;
  for (int it = 0; it < 5; ++it) {
    const double before = std::abs(x[0] - 2.0);
    x = newton_solve(f, x, one).solution;
    const double after = std::abs(x[0] - 2.0);
    if (before > 1e-6) worst_ratio = std::max(worst_ratio, after / (before * before));
  }
  c.require(worst_ratio <= 0.3 && std::abs(x[0] - 2.0) <= 1e-12,
            "Newton ratio " + num(worst_ratio) + ", final error " + num(std::abs(x[0] - 2.0)));

  c.detail += (c.detail.empty() ? "" : " | ") + std::string("MGLF ") + num(mglf) + ", Hermite " +
              num(herm) + ", delta " + num(delta) + ", derivatives " + num(deriv) +
              ", Newton e_{n+1}/e_n^2 <= " + num(worst_ratio);
  return c;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Check()>> criteria[] = {
      {"1  Fluid/MGLF slope and Table 1 MGLF column (tol 5e-4)", criterion1},
      {"2  Fluid/Hermite seed slope and Table 1 HF column (tol 1e-3)", criterion2},
      {"3  Fluid/Sinc Table 1 SF column z >= 0.2 (tol 2e-3), slope (tol 5e-3)", criterion3},
      {"4  Thomas-Fermi/Hermite seed slope and Table 2 HF column x <= 4 (tol 5e-3)", criterion4},
      {"5  Thomas-Fermi/MGLF residual (1e-8), Liao x <= 4 (1.5e-2), slope (5e-2)", criterion5},
      {"6  Cone/MGLF Table 3 slopes (tol 1e-3), Tables 6/7 f' eta <= 2 (tol 2e-3)", criterion6},
      {"7  Cone/Hermite f'(0) = beta/2, f' vs seed derivative (tol 1e-3)", criterion7},
      {"8  Cone/Sinc Table 5 slopes (tol 1e-4), residual (1e-8)", criterion8},
      {"9  Oracle: Table 3 RK (1e-4), fluid (1e-5), Thomas-Fermi (5e-4)", criterion9},
      {"10 Property suites", criterion10},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    if (!c.ok) ++failed;
    std::printf("[%s] %s: %s\n", c.ok ? "PASS" : "FAIL", name, c.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
