#include "semiinf/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "semiinf/errors.hpp"

namespace semiinf {

namespace {

struct VerifyRule {
  ReferenceId table = ReferenceId::T1;
  std::string column;       // empty: slope-only check
  bool derivative = false;  // compare f' instead of f
  double min_abscissa = 0.0;
  double max_abscissa = 1e300;
  double tol = 0.0;
  std::string slope_source;
  double slope_ref = 0.0;
  double slope_tol = 0.0;
};

struct Preset {
  std::string name;
  RunConfig cfg;
  VerifyRule rule;
};

struct LambdaTag {
  const char* tag;
  double lambda;
};

constexpr LambdaTag kLambdas[] = {{"lam0", 0.0},      {"lam1_4", 0.25}, {"lam1_3", 1.0 / 3.0},
                                  {"lam1_2", 0.5},    {"lam3_4", 0.75}, {"lam1", 1.0}};

// Exact slope checks compare floating values produced by closed forms.
constexpr double kExactTol = 1e-12;

RunConfig fluid_base() {
  RunConfig c;
  c.problem = ProblemKind::Fluid;
  c.b1 = 0.6;
  c.b2 = 0.1;
  c.b3 = 0.5;
  return c;
}

RunConfig cone_base(double lambda) {
  RunConfig c;
  c.problem = ProblemKind::Cone;
  c.cone_lambda = lambda;
  return c;
}

RunConfig cone_mglf(double lambda) {
  const ReferenceTable& t3 = reference_table(ReferenceId::T3);
  RunConfig c = cone_base(lambda);
  c.method = MethodKind::Mglf;
  c.n = 13;
  c.alpha = t3.value(lambda, "alpha");
  c.scale_L = t3.value(lambda, "L");
  return c;
}

RunConfig cone_hermite(double lambda) {
  const ReferenceTable& t4 = reference_table(ReferenceId::T4);
  RunConfig c = cone_base(lambda);
  c.method = MethodKind::Hermite;
  c.n = 20;
  c.map_k = t4.value(lambda, "k");
  c.seed_beta = t4.value(lambda, "beta");
  return c;
}

RunConfig cone_sinc(double lambda) {
  const ReferenceTable& t5 = reference_table(ReferenceId::T5);
  RunConfig c = cone_base(lambda);
  c.method = MethodKind::Sinc;
  c.n = 30;
  c.mesh_h = t5.value(lambda, "h");
  c.seed_beta = t5.value(lambda, "beta");
  return c;
}

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = [] {
    std::vector<Preset> out;
    const ReferenceTable& t1 = reference_table(ReferenceId::T1);
    const ReferenceTable& t2 = reference_table(ReferenceId::T2);

    RunConfig c = fluid_base();
    c.method = MethodKind::Mglf;
    c.n = 20;
    c.alpha = 1.0;
    c.scale_L = 0.99;
    out.push_back({"table1-mglf", c,
                   {ReferenceId::T1, "MGLF", false, 0.0, 1e300, 5e-4, "T1 MGLF",
                    t1.slopes.at("MGLF"), 5e-4}});
    c = fluid_base();
    c.method = MethodKind::Hermite;
    c.n = 16;
    c.map_k = 1.2;
    c.seed_lambda = 0.678301;
    out.push_back({"table1-hf", c,
                   {ReferenceId::T1, "HF", false, 0.0, 1e300, 1e-3, "T1 HF", t1.slopes.at("HF"),
                    kExactTol}});
    c = fluid_base();
    c.method = MethodKind::Sinc;
    c.n = 17;
    c.mesh_h = 1.0;
    c.seed_lambda = 0.47;
    out.push_back({"table1-sf", c,
                   {ReferenceId::T1, "SF", false, 0.2, 1e300, 2e-3, "T1 SF", t1.slopes.at("SF"),
                    5e-3}});

    c = RunConfig{};
    c.problem = ProblemKind::ThomasFermi;
    c.method = MethodKind::Mglf;
    c.n = 7;
    c.alpha = 1.0;
    c.scale_L = 0.675;
    out.push_back({"table2-mglf", c,
                   {ReferenceId::T2, "Liao", false, 0.0, 4.0, 1.5e-2, "T2 MGLF",
                    t2.slopes.at("MGLF"), 5e-2}});
    c = RunConfig{};
    c.problem = ProblemKind::ThomasFermi;
    c.method = MethodKind::Hermite;
    c.n = 15;
    c.map_k = 0.9;
    c.seed_lambda = 1.588071;
    out.push_back({"table2-hf", c,
                   {ReferenceId::T2, "HF", false, 0.0, 4.0, 5e-3, "T2 HF", t2.slopes.at("HF"),
                    kExactTol}});
    c = RunConfig{};
    c.problem = ProblemKind::ThomasFermi;
    c.method = MethodKind::Sinc;
    c.n = 11;
    c.mesh_h = 1.0;
    c.seed_lambda = 0.77;
    out.push_back({"table2-sf", c,
                   {ReferenceId::T2, "SF", false, 0.0, 4.0, 5e-3, "T2 SF", t2.slopes.at("SF"),
                    5e-3}});

    for (const auto& [tag, lam] : kLambdas) {
      const std::string t(tag);
      out.push_back({"table3-" + t, cone_mglf(lam),
                     {ReferenceId::T3, "", true, 0.0, 0.0, 0.0, "T3 MGLF",
                      reference_table(ReferenceId::T3).value(lam, "MGLF"), 1e-3}});
    }
    for (const auto& [tag, lam] : kLambdas) {
      const std::string t(tag);
      out.push_back({"table4-" + t, cone_hermite(lam),
                     {ReferenceId::T4, "", true, 0.0, 0.0, 0.0, "T4 HF",
                      reference_table(ReferenceId::T4).value(lam, "HF"), 1e-9}});
    }
    for (const auto& [tag, lam] : kLambdas) {
      const std::string t(tag);
      out.push_back({"table5-" + t, cone_sinc(lam),
                     {ReferenceId::T5, "", true, 0.0, 0.0, 0.0, "T5 SF",
                      reference_table(ReferenceId::T5).value(lam, "SF"), 1e-4}});
    }
    const std::pair<ReferenceId, double> profiles[] = {{ReferenceId::T6, 0.25},
                                                       {ReferenceId::T7, 0.75}};
    for (const auto& [id, lam] : profiles) {
      const std::string prefix = id == ReferenceId::T6 ? "table6-" : "table7-";
      out.push_back({prefix + "mglf", cone_mglf(lam),
                     {id, "MGLF", true, 0.0, 2.0, 2e-3, "T3 MGLF",
                      reference_table(ReferenceId::T3).value(lam, "MGLF"), 1e-3}});
      out.push_back({prefix + "hf", cone_hermite(lam),
                     {id, "HF", true, 0.0, 2.0, 1e-3, "T4 HF",
                      reference_table(ReferenceId::T4).value(lam, "HF"), 1e-9}});
      out.push_back({prefix + "sf", cone_sinc(lam),
                     {id, "SF", true, 0.0, 2.0, 2e-3, "T5 SF",
                      reference_table(ReferenceId::T5).value(lam, "SF"), 1e-4}});
    }
    for (auto& p : out) p.cfg.preset = p.name;
    return out;
  }();
  return all;
}

const Preset* find_preset(const std::string& name) {
  for (const auto& p : presets()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw UsageError("malformed number '" + text + "' for key '" + key + "'");
  }
  return v;
}

int parse_int(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw UsageError("malformed integer '" + text + "' for key '" + key + "'");
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  throw UsageError("malformed flag '" + text + "' for key '" + key + "'");
}

std::string canonical_key(std::string key) {
  while (!key.empty() && key.front() == '-') key.erase(key.begin());
  std::replace(key.begin(), key.end(), '_', '-');
  if (key == "k") return "map-k";
  if (key == "h") return "mesh-h";
  if (key == "L") return "scale-L";
  return key;
}

ProblemKind parse_problem(const std::string& v) {
  if (v == "fluid") return ProblemKind::Fluid;
  if (v == "thomas-fermi" || v == "tf") return ProblemKind::ThomasFermi;
  if (v == "cone") return ProblemKind::Cone;
  throw UsageError("unknown problem '" + v + "' (fluid, thomas-fermi, cone)");
}

MethodKind parse_method(const std::string& v) {
  if (v == "mglf" || v == "laguerre") return MethodKind::Mglf;
  if (v == "hermite" || v == "hf") return MethodKind::Hermite;
  if (v == "sinc" || v == "sf") return MethodKind::Sinc;
  throw UsageError("unknown method '" + v + "' (mglf, hermite, sinc)");
}

void apply(RunConfig& cfg, const std::string& raw_key, const std::string& raw_value) {
  const std::string key = canonical_key(trim(raw_key));
  const std::string value = trim(raw_value);
  if (key == "preset") {
    const Preset* p = find_preset(value);
    if (!p) throw UsageError("unknown preset '" + value + "'");
    cfg = p->cfg;
  } else if (key == "problem") {
    cfg.problem = parse_problem(value);
  } else if (key == "method") {
    cfg.method = parse_method(value);
  } else if (key == "n") {
    cfg.n = parse_int(key, value);
  } else if (key == "alpha") {
    cfg.alpha = parse_double(key, value);
  } else if (key == "scale-L") {
    cfg.scale_L = parse_double(key, value);
  } else if (key == "map-k") {
    cfg.map_k = parse_double(key, value);
  } else if (key == "mesh-h") {
    cfg.mesh_h = parse_double(key, value);
  } else if (key == "seed-lambda") {
    cfg.seed_lambda = parse_double(key, value);
  } else if (key == "seed-beta") {
    cfg.seed_beta = parse_double(key, value);
  } else if (key == "b1") {
    cfg.b1 = parse_double(key, value);
  } else if (key == "b2") {
    cfg.b2 = parse_double(key, value);
  } else if (key == "b3") {
    cfg.b3 = parse_double(key, value);
  } else if (key == "cone-lambda") {
    cfg.cone_lambda = parse_double(key, value);
  } else if (key == "abscissas") {
    cfg.abscissas.clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) cfg.abscissas.push_back(parse_double(key, item));
  } else if (key == "out") {
    cfg.out = value;
  } else if (key == "tol") {
    cfg.tol = parse_double(key, value);
  } else if (key == "verify") {
    cfg.verify = parse_bool(key, value);
  } else {
    throw UsageError("unknown key '" + raw_key + "'");
  }
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%#.9g", v);
  return buf;
}

std::vector<double> default_abscissas(ProblemKind p) {
  const ReferenceId id = p == ProblemKind::Fluid         ? ReferenceId::T1
                         : p == ProblemKind::ThomasFermi ? ReferenceId::T2
                                                         : ReferenceId::T6;
  std::vector<double> xs;
  for (const auto& row : reference_table(id).rows) xs.push_back(row.first);
  return xs;
}

}  // namespace

std::string to_string(ProblemKind p) {
  switch (p) {
    case ProblemKind::Fluid:
      return "fluid";
    case ProblemKind::ThomasFermi:
      return "thomas-fermi";
    case ProblemKind::Cone:
      return "cone";
  }
  return "unknown";
}

std::string to_string(MethodKind m) {
  switch (m) {
    case MethodKind::Mglf:
      return "mglf";
    case MethodKind::Hermite:
      return "hermite";
    case MethodKind::Sinc:
      return "sinc";
  }
  return "unknown";
}

std::vector<std::string> RunConfig::missing_keys() const {
  std::vector<std::string> missing;
  if (!problem) missing.push_back("problem");
  if (!method) missing.push_back("method");
  if (!n) missing.push_back("n");
  if (method == MethodKind::Mglf) {
    if (!alpha) missing.push_back("alpha");
    if (!scale_L) missing.push_back("scale-L");
  }
  if (method == MethodKind::Hermite && !map_k) missing.push_back("map-k");
  if (method == MethodKind::Sinc && !mesh_h) missing.push_back("mesh-h");
  if (problem && method && method != MethodKind::Mglf) {
    if (problem == ProblemKind::Cone) {
      if (!seed_beta) missing.push_back("seed-beta");
    } else if (!seed_lambda) {
      missing.push_back("seed-lambda");
    }
  }
  if (problem == ProblemKind::Fluid) {
    if (!b1) missing.push_back("b1");
    if (!b3) missing.push_back("b3");
  }
  if (problem == ProblemKind::Cone && !cone_lambda) missing.push_back("cone-lambda");
  return missing;
}

ProblemSpec RunConfig::to_spec() const {
  const auto missing = missing_keys();
  if (!missing.empty()) {
    std::string list;
    for (const auto& k : missing) list += (list.empty() ? "" : ", ") + k;
    throw UsageError("missing required keys: " + list);
  }
  Problem prob;
  switch (*problem) {
    case ProblemKind::Fluid:
      prob = b2 ? FluidParams::direct(*b1, *b2, *b3) : FluidParams::from_b1_b3(*b1, *b3);
      break;
    case ProblemKind::ThomasFermi:
      prob = ThomasFermiParams{};
      break;
    case ProblemKind::Cone:
      prob = ConeParams{*cone_lambda};
      break;
  }
  Method meth = MglfMethod{LaguerreBasis(*n, alpha.value_or(1.0), scale_L.value_or(1.0))};
  SeedProfile seed;
  if (*problem == ProblemKind::Cone) {
    if (seed_beta) seed = SeedProfile::cone_rational(*seed_beta);
  } else if (seed_lambda) {
    seed = (*problem == ProblemKind::ThomasFermi && *method == MethodKind::Sinc)
               ? SeedProfile::rational_linear(*seed_lambda)
               : SeedProfile::rational_quadratic(*seed_lambda);
  }
  if (*method == MethodKind::Hermite) {
    meth = HermiteMethod{HermiteBasis(*n, *map_k), seed};
  } else if (*method == MethodKind::Sinc) {
    const bool cone = *problem == ProblemKind::Cone;
    meth = SincMethod{SincBasis(*n, *mesh_h, cone ? SincMap::Log : SincMap::LogSinh,
                                cone ? SincWeight::RationalX3 : SincWeight::RationalX),
                      seed};
  }
  ProblemSpec spec{prob, meth};
  spec.validate();
  return spec;
}

RunConfig parse_config(const std::string& text, const FlagList& flags) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("line " + std::to_string(lineno) + ": expected key=value, got '" + line + "'");
    }
    entries.emplace_back(trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  for (const auto& f : flags) entries.push_back(f);

  RunConfig cfg;
  // The preset (last one wins) is the base; every other key overrides it in order.
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    if (canonical_key(trim(it->first)) == "preset") {
      apply(cfg, it->first, it->second);
      break;
    }
  }
  for (const auto& [k, v] : entries) {
    if (canonical_key(trim(k)) != "preset") apply(cfg, k, v);
  }
  const auto missing = cfg.missing_keys();
  if (!missing.empty()) {
    std::string list;
    for (const auto& k : missing) list += (list.empty() ? "" : ", ") + k;
    throw UsageError("missing required keys: " + list);
  }
  return cfg;
}

std::string canonical_text(const RunConfig& cfg) {
  std::ostringstream out;
  if (!cfg.preset.empty()) out << "preset=" << cfg.preset << "\n";
  if (cfg.problem) out << "problem=" << to_string(*cfg.problem) << "\n";
  if (cfg.method) out << "method=" << to_string(*cfg.method) << "\n";
  if (cfg.n) out << "n=" << *cfg.n << "\n";
  const std::pair<const char*, const std::optional<double>*> reals[] = {
      {"alpha", &cfg.alpha},         {"scale-L", &cfg.scale_L},
      {"map-k", &cfg.map_k},         {"mesh-h", &cfg.mesh_h},
      {"seed-lambda", &cfg.seed_lambda}, {"seed-beta", &cfg.seed_beta},
      {"b1", &cfg.b1},               {"b2", &cfg.b2},
      {"b3", &cfg.b3},               {"cone-lambda", &cfg.cone_lambda},
      {"tol", &cfg.tol}};
  for (const auto& [key, value] : reals) {
    if (*value) out << key << "=" << fmt(**value) << "\n";
  }
  if (!cfg.abscissas.empty()) {
    out << "abscissas=";
    for (std::size_t i = 0; i < cfg.abscissas.size(); ++i) {
      out << (i ? "," : "") << fmt(cfg.abscissas[i]);
    }
    out << "\n";
  }
  if (!cfg.out.empty()) out << "out=" << cfg.out << "\n";
  out << "verify=" << (cfg.verify ? "true" : "false") << "\n";
  return out.str();
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& p : presets()) names.push_back(p.name);
  return names;
}

std::vector<std::string> expand_preset_group(const std::string& name) {
  if (find_preset(name)) return {name};
  std::vector<std::string> group;
  for (const auto& p : presets()) {
    if (p.name.rfind(name + "-", 0) == 0) group.push_back(p.name);
  }
  if (group.empty()) throw UsageError("unknown preset '" + name + "'");
  return group;
}

RunConfig preset_config(const std::string& name) {
  const Preset* p = find_preset(name);
  if (!p) throw UsageError("unknown preset '" + name + "'");
  return p->cfg;
}

SolutionTable run_case(const RunConfig& cfg) {
  const ProblemSpec spec = cfg.to_spec();
  const ProblemSolution sol = solve_problem(spec);
  SolutionTable table;
  table.slope = derived_slope(sol.expansion, spec);
  table.iterations = sol.report.iterations;
  for (double r : sol.nodal_residuals) {
    table.max_nodal_residual = std::max(table.max_nodal_residual, std::abs(r));
  }
  const std::vector<double> xs =
      cfg.abscissas.empty() ? default_abscissas(*cfg.problem) : cfg.abscissas;
  const Evaluator f = [&](double x, int order) { return eval_expansion(sol.expansion, x, order); };
  for (double x : xs) {
    SolutionRow row{x, f(x, 0), f(x, 1), std::nan("")};
    if (!(std::holds_alternative<ThomasFermiParams>(spec.problem) && x <= 0.0)) {
      row.residual = residual(spec.problem, f, x);
    }
    table.rows.push_back(row);
  }
  return table;
}

std::string format_csv(const SolutionTable& table) {
  if (table.rows.empty()) throw ConfigurationError("refusing to emit an empty table");
  std::string out = "abscissa,f,fprime,residual\n";
  for (const auto& r : table.rows) {
    out += fmt9(r.abscissa) + "," + fmt9(r.f) + "," + fmt9(r.fprime) + "," + fmt9(r.residual) + "\n";
  }
  return out;
}

void emit_csv(const SolutionTable& table, const std::string& path) {
  const std::string text = format_csv(table);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("write to '" + path + "' failed");
}

std::vector<RowError> VerifyReport::failures() const {
  std::vector<RowError> out;
  for (const auto& e : row_errors) {
    if (!(e.error <= tolerance)) out.push_back(e);
  }
  return out;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  out << "reference: " << reference_caption << "\n";
  if (!column.empty()) {
    out << "column " << column << ": " << row_errors.size() << " rows, max abs error "
        << fmt9(max_abs_error) << " (tol " << fmt9(tolerance) << ")\n";
    for (const auto& e : failures()) {
      out << "  FAIL row " << fmt9(e.abscissa) << ": value " << fmt9(e.value) << " reference "
          << fmt9(e.reference) << " error " << fmt9(e.error) << "\n";
    }
  }
  if (slope_error) {
    const bool ok = slope_error->error <= slope_tolerance;
    out << "slope (" << slope_error->column << "): value " << fmt9(slope_error->value)
        << " reference " << fmt9(slope_error->reference) << " error " << fmt9(slope_error->error)
        << " (tol " << fmt9(slope_tolerance) << ")" << (ok ? "" : "  FAIL") << "\n";
  }
  out << (pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

VerifyReport verify(const RunConfig& cfg, const SolutionTable& table) {
  const Preset* p = find_preset(cfg.preset);
  if (!p) {
    throw ConfigurationError(cfg.preset.empty() ? "verify needs a preset with reference data"
                                                : "no reference data for '" + cfg.preset + "'");
  }
  const VerifyRule& rule = p->rule;
  const ReferenceTable& ref = reference_table(rule.table);
  VerifyReport report;
  report.reference_caption = to_string(rule.table) + ": " + ref.caption;
  report.column = rule.column;
  report.tolerance = cfg.tol.value_or(rule.tol);
  report.slope_tolerance = rule.slope_tol;
  bool ok = true;

  if (!rule.column.empty()) {
    const int c = ref.column_index(rule.column);
    for (const auto& [x, values] : ref.rows) {
      if (x < rule.min_abscissa - 1e-12 || x > rule.max_abscissa + 1e-12) continue;
      const auto row = std::find_if(table.rows.begin(), table.rows.end(), [&](const SolutionRow& r) {
        return std::abs(r.abscissa - x) <= 1e-12 * (1.0 + std::abs(x));
      });
      if (row == table.rows.end()) {
        throw ConfigurationError("table has no row at reference abscissa " + fmt9(x));
      }
      const double v = rule.derivative ? row->fprime : row->f;
      const double err = std::abs(v - values[c]);
      report.row_errors.push_back({x, rule.column, v, values[c], err});
      report.max_abs_error = std::max(report.max_abs_error, std::isnan(err) ? INFINITY : err);
      if (!(err <= report.tolerance)) ok = false;
    }
  }
  const double serr = std::abs(table.slope - rule.slope_ref);
  report.slope_error = RowError{0.0, rule.slope_source, table.slope, rule.slope_ref, serr};
  if (!(serr <= rule.slope_tol)) ok = false;
  report.pass = ok;
  return report;
}

}  // namespace semiinf
