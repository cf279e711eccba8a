#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "semiinf/basis.hpp"
#include "semiinf/newton.hpp"

namespace semiinf {

/// Third-grade fluid coefficients of f'' + b1 f'^2 f'' - b2 f f'^2 - b3 f = 0.
struct FluidParams {
  double b1 = 0.0;
  double b2 = 0.0;
  double b3 = 0.0;

  /// b2 = b1 b3 / 3, the only physically consistent choice.
  static FluidParams from_b1_b3(double b1, double b3);

  /// Independent coefficients; warns on stderr when b2 != b1 b3 / 3.
  static FluidParams direct(double b1, double b2, double b3);

  bool consistent() const noexcept;
};

/// y'' = y^{3/2} / sqrt(x), y(0) = 1, y(inf) = 0.
struct ThomasFermiParams {};

/// f''' + ((lambda+5)/2) f f'' - ((2 lambda+1)/3) f'^2 = 0, f(0) = 0, f''(0) = -1, f'(inf) = 0.
struct ConeParams {
  double lambda = 0.0;
};

using Problem = std::variant<FluidParams, ThomasFermiParams, ConeParams>;

struct MglfMethod {
  LaguerreBasis basis;
};

struct HermiteMethod {
  HermiteBasis basis;
  SeedProfile seed;
};

struct SincMethod {
  SincBasis basis;
  SeedProfile seed;
};

using Method = std::variant<MglfMethod, HermiteMethod, SincMethod>;

struct ProblemSpec {
  Problem problem;
  Method method;

  /// Throws ConfigurationError on a pairing the solver does not define.
  void validate() const;
  BasisSpec basis() const;
  std::optional<SeedProfile> seed() const;
};

std::string problem_name(const Problem& p);
std::string method_name(const Method& m);

/// f^(order)(x) of a trial approximant.
using Evaluator = std::function<double(double x, int order)>;

double residual_fluid(const Evaluator& f, const FluidParams& params, double z);
double residual_thomas_fermi(const Evaluator& y, double x);
double residual_cone(const Evaluator& f, const ConeParams& params, double eta);

/// sign(u) |u|^{3/2}.
double signed_three_halves(double u);

/// Residual of the governing equation for `problem` at x.
double residual(const Problem& problem, const Evaluator& f, double x);

/// Square residual map over the expansion coefficients, with cached basis tables.
class NonlinearSystem {
 public:
  explicit NonlinearSystem(ProblemSpec spec);

  const ProblemSpec& spec() const noexcept { return spec_; }
  int dimension() const noexcept { return dim_; }
  /// Abscissas at which the governing residual is enforced.
  const std::vector<double>& residual_nodes() const noexcept { return residual_nodes_; }
  /// Number of trailing boundary rows (MGLF only).
  int boundary_rows() const noexcept { return boundary_rows_; }

  std::vector<double> operator()(std::span<const double> coefficients) const;
  VectorFunction as_function() const;

  /// Starting coefficients: zeros when a seed carries the boundary data, a profile fit otherwise.
  std::vector<double> initial_guess() const;

 private:
  ProblemSpec spec_;
  int dim_ = 0;
  int boundary_rows_ = 0;
  std::vector<double> residual_nodes_;
  // table_[order][node * dim + i] = B_i^(order)(node); seed_[order][node]
  std::vector<std::vector<double>> table_;
  std::vector<std::vector<double>> seed_;
  std::vector<std::vector<double>> boundary_;  // MGLF rows at x = 0, orders 0..3
};

NonlinearSystem build_system(const ProblemSpec& spec);

struct ProblemSolution {
  Expansion expansion;
  SolveReport report;
  std::vector<double> nodes;
  std::vector<double> nodal_residuals;
};

/// Newton solve from the system's initial guess. Throws SolveError when not converged.
ProblemSolution solve_problem(const ProblemSpec& spec, const NewtonConfig& cfg = {});

/// f'(0) of a solved expansion.
///
/// MGLF: analytic sum a_j phi_j'(0). Hermite: the seed slope. Sinc: the approximant's
/// derivative at a small probe abscissa (see sinc_slope_probe).
double derived_slope(const Expansion& e, const ProblemSpec& spec);

/// Abscissa at which the Sinc slope is read for each problem.
double sinc_slope_probe(const Problem& problem);

/// Fourth-order one-sided difference of f on {delta, ..., 5 delta}, extrapolated to 0.
double one_sided_slope(const std::function<double(double)>& f, double delta = 1e-3);

}  // namespace semiinf
