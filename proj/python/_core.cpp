#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "semiinf/basis.hpp"
#include "semiinf/errors.hpp"
#include "semiinf/oracle.hpp"
#include "semiinf/report.hpp"

namespace py = pybind11;
using namespace semiinf;

namespace {

// Flags as keyword arguments; underscores are accepted in place of dashes.
FlagList flags_from(const py::kwargs& kwargs) {
  FlagList flags;
  for (const auto& [k, v] : kwargs) {
    flags.emplace_back(py::str(k).cast<std::string>(), py::str(v).cast<std::string>());
  }
  return flags;
}

py::dict table_dict(const SolutionTable& t) {
  std::vector<double> x, f, fp, r;
  for (const auto& row : t.rows) {
    x.push_back(row.abscissa);
    f.push_back(row.f);
    fp.push_back(row.fprime);
    r.push_back(row.residual);
  }
  py::dict d;
  d["abscissa"] = x;
  d["f"] = f;
  d["fprime"] = fp;
  d["residual"] = r;
  d["slope"] = t.slope;
  d["max_nodal_residual"] = t.max_nodal_residual;
  d["iterations"] = t.iterations;
  return d;
}

Problem problem_from(const std::string& name, double b1, double b3, double cone_lambda) {
  if (name == "fluid") return FluidParams::from_b1_b3(b1, b3);
  if (name == "thomas-fermi") return ThomasFermiParams{};
  if (name == "cone") return ConeParams{cone_lambda};
  throw UsageError("unknown problem '" + name + "' (fluid, thomas-fermi, cone)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spectral collocation on [0, inf): Laguerre, Hermite, and Sinc bases";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<UsageError>(m, "UsageError", base.ptr());
  py::register_exception<ConfigurationError>(m, "ConfigurationError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<SolveError>(m, "SolveError", base.ptr());
  py::register_exception<OracleError>(m, "OracleError", base.ptr());

  m.def(
      "laguerre_nodes",
      [](int n, double alpha, double scale) { return laguerre_nodes(LaguerreBasis(n, alpha, scale)).nodes; },
      py::arg("n"), py::arg("alpha") = 1.0, py::arg("scale") = 1.0);
  m.def(
      "mglf_eval",
      [](int n, double scale, int j, double x, int order) {
        return mglf_eval(LaguerreBasis(n, 1.0, scale), j, x, order);
      },
      py::arg("n"), py::arg("scale"), py::arg("j"), py::arg("x"), py::arg("order") = 0);
  m.def(
      "hermite_nodes", [](int n, double k) { return hermite_nodes(HermiteBasis(n, k)).nodes; },
      py::arg("n"), py::arg("k"));
  m.def(
      "transformed_hermite_eval",
      [](int n, double k, int i, double x, int order) {
        return transformed_hermite_eval(HermiteBasis(n, k), i, x, order);
      },
      py::arg("n"), py::arg("k"), py::arg("i"), py::arg("x"), py::arg("order") = 0);
  m.def(
      "delta_matrix",
      [](int order, double h, int n) {
        const DeltaMatrix d(order, h, n);
        std::vector<std::vector<double>> out(2 * n + 1, std::vector<double>(2 * n + 1));
        for (int k = -n; k <= n; ++k) {
          for (int j = -n; j <= n; ++j) out[k + n][j + n] = d(k, j);
        }
        return out;
      },
      py::arg("order"), py::arg("h"), py::arg("n"),
      "Rows k = -n..n, columns j = -n..n.");

  m.def("preset_names", &preset_names);
  m.def(
      "solve",
      [](const std::string& config, const py::kwargs& kwargs) {
        return table_dict(run_case(parse_config(config, flags_from(kwargs))));
      },
      py::arg("config") = "",
      "Solve a case given key=value text and/or keyword overrides (e.g. preset='table1-mglf').");
  m.def(
      "verify",
      [](const std::string& config, const py::kwargs& kwargs) {
        const RunConfig cfg = parse_config(config, flags_from(kwargs));
        const VerifyReport r = verify(cfg, run_case(cfg));
        py::dict d;
        d["passed"] = r.pass;
        d["max_abs_error"] = r.max_abs_error;
        d["report"] = r.to_text();
        return d;
      },
      py::arg("config") = "");
  m.def(
      "csv",
      [](const std::string& config, const py::kwargs& kwargs) {
        return format_csv(run_case(parse_config(config, flags_from(kwargs))));
      },
      py::arg("config") = "");
  m.def(
      "shoot",
      [](const std::string& problem, double b1, double b3, double cone_lambda) {
        const Problem p = problem_from(problem, b1, b3, cone_lambda);
        return shoot(p, ShootConfig::defaults_for(p)).initial_slope;
      },
      py::arg("problem"), py::arg("b1") = 0.6, py::arg("b3") = 0.5, py::arg("cone_lambda") = 0.0,
      "Initial slope of the RK4 shooting reference solution.");
}
