#include "semiinf/problems.hpp"

#include <array>
#include <cmath>
#include <iostream>
#include <string>

#include <Eigen/Dense>

#include "semiinf/errors.hpp"

namespace semiinf {

namespace {

using Jet = std::array<double, kMaxDerivativeOrder + 1>;

double fluid_jet(const FluidParams& p, const Jet& f) {
  const double f1sq = f[1] * f[1];
  return f[2] + p.b1 * f1sq * f[2] - p.b2 * f[0] * f1sq - p.b3 * f[0];
}

double thomas_fermi_jet(const Jet& y, double x) {
  if (!(x > 0.0)) throw DomainError("Thomas-Fermi residual needs x > 0");
  return y[2] - signed_three_halves(y[0]) / std::sqrt(x);
}

double cone_jet(const ConeParams& p, const Jet& f) {
  return f[3] + 0.5 * (p.lambda + 5.0) * f[0] * f[2] - (2.0 * p.lambda + 1.0) / 3.0 * f[1] * f[1];
}

double residual_jet(const Problem& problem, const Jet& f, double x) {
  return std::visit(
      [&](const auto& p) -> double {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, FluidParams>) return fluid_jet(p, f);
        else if constexpr (std::is_same_v<P, ThomasFermiParams>) return thomas_fermi_jet(f, x);
        else return cone_jet(p, f);
      },
      problem);
}

int highest_order(const Problem& problem) {
  return std::holds_alternative<ConeParams>(problem) ? 3 : 2;
}

// Abscissas at which each method enforces the residual, before dropping boundary rows.
std::vector<double> method_nodes(const Method& m) {
  return std::visit(
      [](const auto& method) -> std::vector<double> {
        using M = std::decay_t<decltype(method)>;
        if constexpr (std::is_same_v<M, MglfMethod>) return laguerre_nodes(method.basis).nodes;
        else if constexpr (std::is_same_v<M, HermiteMethod>) return hermite_nodes(method.basis).nodes;
        else return sinc_nodes(method.basis).nodes;
      },
      m);
}

constexpr double kMglfGuessLambda = 0.7;

}  // namespace

FluidParams FluidParams::from_b1_b3(double b1, double b3) {
  if (!(b1 >= 0.0) || !(b3 >= 0.0)) throw ConfigurationError("fluid coefficients must be >= 0");
  return FluidParams{b1, b1 * b3 / 3.0, b3};
}

FluidParams FluidParams::direct(double b1, double b2, double b3) {
  if (!(b1 >= 0.0) || !(b2 >= 0.0) || !(b3 >= 0.0)) {
    throw ConfigurationError("fluid coefficients must be >= 0");
  }
  FluidParams p{b1, b2, b3};
  if (!p.consistent()) {
    std::cerr << "warning: fluid coefficients violate b2 = b1*b3/3 (b2 = " << b2
              << ", b1*b3/3 = " << b1 * b3 / 3.0 << ")\n";
  }
  return p;
}

bool FluidParams::consistent() const noexcept { return std::abs(b2 - b1 * b3 / 3.0) <= 1e-12; }

double signed_three_halves(double u) {
  const double a = std::abs(u);
  return std::copysign(a * std::sqrt(a), u);
}

double residual_fluid(const Evaluator& f, const FluidParams& params, double z) {
  Jet j{};
  for (int m = 0; m <= 2; ++m) j[m] = f(z, m);
  return fluid_jet(params, j);
}

double residual_thomas_fermi(const Evaluator& y, double x) {
  if (!(x > 0.0)) throw DomainError("Thomas-Fermi residual needs x > 0");
  Jet j{};
  for (int m = 0; m <= 2; ++m) j[m] = y(x, m);
  return thomas_fermi_jet(j, x);
}

double residual_cone(const Evaluator& f, const ConeParams& params, double eta) {
  Jet j{};
  for (int m = 0; m <= 3; ++m) j[m] = f(eta, m);
  return cone_jet(params, j);
}

double residual(const Problem& problem, const Evaluator& f, double x) {
  if (std::holds_alternative<ThomasFermiParams>(problem) && !(x > 0.0)) {
    throw DomainError("Thomas-Fermi residual needs x > 0");
  }
  Jet j{};
  for (int m = 0; m <= highest_order(problem); ++m) j[m] = f(x, m);
  return residual_jet(problem, j, x);
}

std::string problem_name(const Problem& p) {
  switch (p.index()) {
    case 0:
      return "fluid";
    case 1:
      return "thomas-fermi";
    default:
      return "cone";
  }
}

std::string method_name(const Method& m) {
  switch (m.index()) {
    case 0:
      return "mglf";
    case 1:
      return "hermite";
    default:
      return "sinc";
  }
}

void ProblemSpec::validate() const {
  const bool cone = std::holds_alternative<ConeParams>(problem);
  const std::string where = problem_name(problem) + "/" + method_name(method) + ": ";
  if (const auto* fp = std::get_if<FluidParams>(&problem)) {
    if (!(fp->b1 >= 0.0) || !(fp->b2 >= 0.0) || !(fp->b3 >= 0.0)) {
      throw ConfigurationError(where + "fluid coefficients must be >= 0");
    }
  }
  if (const auto* cp = std::get_if<ConeParams>(&problem)) {
    if (!std::isfinite(cp->lambda)) throw ConfigurationError(where + "lambda is not finite");
  }
  if (const auto* m = std::get_if<MglfMethod>(&method)) {
    const int rows = cone ? 2 : 1;
    if (m->basis.n <= rows) {
      throw ConfigurationError(where + "N must exceed the " + std::to_string(rows) +
                               " boundary row(s)");
    }
    return;
  }
  const SeedProfile s = *seed();
  if (cone) {
    if (s.kind != SeedKind::ConeRational) {
      throw ConfigurationError(where + "the cone problem needs the cone-rational seed");
    }
  } else if (s.kind != SeedKind::RationalQuadratic && s.kind != SeedKind::RationalLinear) {
    throw ConfigurationError(where + "seed must be rational-quadratic or rational-linear");
  }
  const double q = s.parameter;
  if (!std::isfinite(q)) throw ConfigurationError(where + "seed parameter is not finite");
  if (s.kind == SeedKind::RationalQuadratic && !(q > -2.0)) {
    throw ConfigurationError(where + "rational-quadratic seed needs lambda > -2");
  }
  if ((s.kind == SeedKind::RationalLinear || s.kind == SeedKind::ConeRational) && !(q > 0.0)) {
    throw ConfigurationError(where + "seed parameter must be > 0");
  }
  if (const auto* sm = std::get_if<SincMethod>(&method)) {
    const bool ok = cone ? (sm->basis.map == SincMap::Log && sm->basis.weight == SincWeight::RationalX3)
                         : (sm->basis.map == SincMap::LogSinh &&
                            sm->basis.weight == SincWeight::RationalX);
    if (!ok) {
      throw ConfigurationError(where + (cone ? "Sinc needs the log map with the x^3/(x^3+1) weight"
                                             : "Sinc needs the log-sinh map with the x/(x^2+1) weight"));
    }
  }
}

BasisSpec ProblemSpec::basis() const {
  return std::visit([](const auto& m) -> BasisSpec { return m.basis; }, method);
}

std::optional<SeedProfile> ProblemSpec::seed() const {
  if (const auto* h = std::get_if<HermiteMethod>(&method)) return h->seed;
  if (const auto* s = std::get_if<SincMethod>(&method)) return s->seed;
  return std::nullopt;
}

NonlinearSystem::NonlinearSystem(ProblemSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  const BasisSpec basis = spec_.basis();
  dim_ = semiinf::dimension(basis);
  const int top = highest_order(spec_.problem);
  std::vector<double> nodes = method_nodes(spec_.method);

  if (std::holds_alternative<MglfMethod>(spec_.method)) {
    boundary_rows_ = std::holds_alternative<ConeParams>(spec_.problem) ? 2 : 1;
    nodes.resize(nodes.size() - boundary_rows_);
    boundary_.assign(kMaxDerivativeOrder + 1, std::vector<double>(dim_));
    for (int m = 0; m <= kMaxDerivativeOrder; ++m) {
      for (int i = 0; i < dim_; ++i) boundary_[m][i] = basis_eval(basis, i, 0.0, m);
    }
  }
  residual_nodes_ = nodes;

  const std::size_t count = residual_nodes_.size();
  const SeedProfile seed = spec_.seed().value_or(SeedProfile::none());
  table_.assign(top + 1, std::vector<double>(count * dim_));
  seed_.assign(top + 1, std::vector<double>(count));
  for (int m = 0; m <= top; ++m) {
    for (std::size_t j = 0; j < count; ++j) {
      const double x = residual_nodes_[j];
      for (int i = 0; i < dim_; ++i) table_[m][j * dim_ + i] = basis_eval(basis, i, x, m);
      seed_[m][j] = seed.eval(x, m);
    }
  }
}

std::vector<double> NonlinearSystem::operator()(std::span<const double> c) const {
  if (static_cast<int>(c.size()) != dim_) {
    throw ConfigurationError("coefficient vector has the wrong length");
  }
  const int top = highest_order(spec_.problem);
  std::vector<double> out;
  out.reserve(dim_);
  for (std::size_t j = 0; j < residual_nodes_.size(); ++j) {
    Jet f{};
    for (int m = 0; m <= top; ++m) {
      const double* row = &table_[m][j * dim_];
      double s = seed_[m][j];
      for (int i = 0; i < dim_; ++i) s += row[i] * c[i];
      f[m] = s;
    }
    out.push_back(residual_jet(spec_.problem, f, residual_nodes_[j]));
  }
  if (boundary_rows_ > 0) {
    auto dot = [&](int m) {
      double s = 0.0;
      for (int i = 0; i < dim_; ++i) s += boundary_[m][i] * c[i];
      return s;
    };
    if (boundary_rows_ == 1) {
      out.push_back(dot(0) - 1.0);
    } else {
      out.push_back(dot(0));
      out.push_back(dot(2) + 1.0);
    }
  }
  return out;
}

VectorFunction NonlinearSystem::as_function() const {
  return [this](std::span<const double> c) { return (*this)(c); };
}

std::vector<double> NonlinearSystem::initial_guess() const {
  if (boundary_rows_ == 0) return std::vector<double>(dim_, 0.0);

  const auto& mglf = std::get<MglfMethod>(spec_.method);
  Eigen::MatrixXd a(dim_, dim_);
  Eigen::VectorXd b(dim_);
  if (boundary_rows_ == 1) {
    // Interpolate 1/(1 + 0.7x + x^2) at all N Laguerre nodes.
    const std::vector<double> all = laguerre_nodes(mglf.basis).nodes;
    const SeedProfile guess = SeedProfile::rational_quadratic(kMglfGuessLambda);
    for (int j = 0; j < dim_; ++j) {
      for (int i = 0; i < dim_; ++i) a(j, i) = mglf.basis.eval(i, all[j], 0);
      b(j) = guess.eval(all[j], 0);
    }
  } else {
    // 1 - exp(-eta) through the residual nodes, with both boundary rows imposed exactly.
    const int interior = static_cast<int>(residual_nodes_.size());
    for (int j = 0; j < interior; ++j) {
      for (int i = 0; i < dim_; ++i) a(j, i) = table_[0][j * dim_ + i];
      b(j) = -std::expm1(-residual_nodes_[j]);
    }
    for (int i = 0; i < dim_; ++i) {
      a(interior, i) = boundary_[0][i];
      a(interior + 1, i) = boundary_[2][i];
    }
    b(interior) = 0.0;
    b(interior + 1) = -1.0;
  }
  const Eigen::VectorXd c = a.partialPivLu().solve(b);
  return std::vector<double>(c.data(), c.data() + dim_);
}

NonlinearSystem build_system(const ProblemSpec& spec) { return NonlinearSystem(spec); }

ProblemSolution solve_problem(const ProblemSpec& spec, const NewtonConfig& cfg) {
  const NonlinearSystem system(spec);
  const std::string context = problem_name(spec.problem) + "/" + method_name(spec.method);
  SolveReport report;
  try {
    report = newton_solve(system.as_function(), system.initial_guess(), cfg);
  } catch (const SingularJacobianError& e) {
    throw SingularJacobianError(context + ": " + e.what(), e.iterate(), e.rcond());
  } catch (const NumericError& e) {
    throw NumericError(context + ": " + e.what(), e.component());
  }
  if (!report.converged) {
    throw SolveError(context + ": Newton did not converge after " +
                         std::to_string(report.iterations) + " iterations (residual " +
                         std::to_string(report.final_residual_norm) + ")",
                     report.history);
  }
  Expansion expansion(spec.basis(), report.solution, spec.seed());
  const std::vector<double> values = system(report.solution);
  std::vector<double> nodal(values.begin(), values.begin() + system.residual_nodes().size());
  return ProblemSolution{std::move(expansion), std::move(report), system.residual_nodes(),
                         std::move(nodal)};
}

double sinc_slope_probe(const Problem& problem) {
  switch (problem.index()) {
    case 0:
      return 1e-5;
    case 1:
      return 1e-4;
    default:
      return 1e-7;
  }
}

double derived_slope(const Expansion& e, const ProblemSpec& spec) {
  if (std::holds_alternative<SincMethod>(spec.method)) {
    return eval_expansion(e, sinc_slope_probe(spec.problem), 1);
  }
  // MGLF: analytic sum at 0 plus any seed; Hermite: members vanish at 0, the seed remains.
  return eval_expansion(e, 0.0, 1);
}

double one_sided_slope(const std::function<double(double)>& f, double delta) {
  // Quartic through (k delta, f(k delta)), k = 1..5, differentiated at 0.
  double y[5];
  for (int k = 0; k < 5; ++k) y[k] = f((k + 1) * delta);
  return (-77.0 * y[0] + 214.0 * y[1] - 234.0 * y[2] + 122.0 * y[3] - 25.0 * y[4]) / (12.0 * delta);
}

}  // namespace semiinf
