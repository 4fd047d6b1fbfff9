#include "edalab/cli.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edalab/csv.hpp"
#include "edalab/experiments.hpp"
#include "edalab/ini.hpp"
#include "edalab/svg.hpp"
#include "edalab/version.hpp"

namespace edalab {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitBudget = 2;

std::vector<double> parse_value_list(const std::string& text) {
  // "lo:hi:step" range or comma-separated list or a single value.
  std::vector<double> values;
  const auto parse_one = [](const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::runtime_error("bad number '" + s + "'");
    return v;
  };
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3)
      throw std::runtime_error("range must be lo:hi:step, got '" + text + "'");
    const double lo = parse_one(parts[0]);
    const double hi = parse_one(parts[1]);
    const double step = parse_one(parts[2]);
    if (!(step > 0.0) || hi < lo)
      throw std::runtime_error("bad range '" + text + "'");
    for (double v = lo; v <= hi + 1e-9; v += step) values.push_back(v);
    return values;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(parse_one(item));
  if (values.empty()) throw std::runtime_error("empty value list");
  return values;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_value_list(text)) {
    const int i = static_cast<int>(std::llround(v));
    if (std::abs(v - i) > 1e-9)
      throw std::runtime_error("expected integers in '" + text + "'");
    out.push_back(i);
  }
  return out;
}

/// margin syntax: "1/n" (default), "none", or an explicit value.
void apply_margin(EdaConfig& cfg, const std::string& text) {
  if (text == "1/n") {
    cfg.margin = 1.0 / cfg.n;
  } else if (text == "none") {
    cfg.margin.reset();
  } else {
    std::size_t pos = 0;
    const double m = std::stod(text, &pos);
    if (pos != text.size())
      throw std::runtime_error("margin must be 1/n, none, or a number");
    cfg.margin = m;
  }
}

int parse_mu(const std::string& text, int lambda) {
  if (text.rfind("lambda/", 0) == 0) {
    const int k = std::stoi(text.substr(7));
    if (k < 1) throw std::runtime_error("mu: divisor must be >= 1");
    return std::max(1, lambda / k);
  }
  return std::stoi(text);
}

EdaConfig build_config(const std::string& algo, int n, int lambda, int mu,
                       double rho, double K, double epsilon,
                       const std::string& margin) {
  EdaConfig cfg;
  cfg.algorithm = parse_algorithm(algo);
  cfg.n = n;
  switch (cfg.algorithm) {
    case Algorithm::umda:
      cfg = EdaConfig::umda(n, lambda, mu);
      break;
    case Algorithm::pbil:
      cfg = EdaConfig::pbil(n, lambda, mu, rho);
      break;
    case Algorithm::mmas_ib:
      cfg = EdaConfig::mmas_ib(n, lambda, rho);
      break;
    case Algorithm::cga:
      cfg = EdaConfig::cga(n, K);
      if (lambda > 0) cfg.lambda = lambda;
      break;
    case Algorithm::sig_cga:
      cfg = EdaConfig::sig_cga(n, epsilon);
      if (lambda > 0) cfg.lambda = lambda;
      break;
  }
  apply_margin(cfg, margin);
  cfg.validate();
  return cfg;
}

FitnessSpec build_fitness_spec(const std::string& fitness,
                               const std::string& target,
                               const std::string& perm,
                               const std::string& noise) {
  FitnessSpec spec = FitnessSpec::parse(fitness);
  if (!target.empty()) {
    if (target == "random") spec.target = FitnessSpec::TargetMode::random;
    else if (target == "ones") spec.target = FitnessSpec::TargetMode::ones;
    else {
      spec.target = FitnessSpec::TargetMode::bits;
      spec.target_bits = parse_bitstring(target);
    }
  }
  if (!perm.empty()) {
    if (perm == "random") spec.perm = FitnessSpec::PermMode::random;
    else if (perm == "identity") spec.perm = FitnessSpec::PermMode::identity;
    else throw std::runtime_error("perm must be identity or random");
  }
  if (!noise.empty()) {
    const FitnessSpec with_noise =
        FitnessSpec::parse(std::string("onemax+noise=") + noise);
    spec.noise = with_noise.noise;
    spec.noise_param = with_noise.noise_param;
  }
  return spec;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file '" + path + "'");
  return out;
}

std::string metadata_version_line() {
  return std::string(kToolName) + " " + std::string(kToolVersion) + " (rng: " +
         std::string(RngStream::kAlgorithm) + ")";
}

// ---------------------------------------------------------------- run ----

struct RunOptions {
  std::string algo;
  int n = 0;
  int lambda = 0;
  int mu = 0;
  double rho = 0.0;
  double K = 0.0;
  double epsilon = 0.0;
  std::string margin = "1/n";
  std::string fitness = "onemax";
  std::string target;
  std::string perm;
  std::string noise;
  std::uint64_t seed = 1;
  std::uint64_t max_evals = 0;
  std::string out_csv;
};

int cmd_run(const RunOptions& o, std::ostream& out) {
  const EdaConfig cfg = build_config(o.algo, o.n, o.lambda, o.mu, o.rho, o.K,
                                     o.epsilon, o.margin);
  const FitnessSpec spec =
      build_fitness_spec(o.fitness, o.target, o.perm, o.noise);
  spec.validate(cfg.n);
  const std::uint64_t budget =
      o.max_evals > 0 ? o.max_evals : default_budget(cfg);
  const RunResult res = run(cfg, spec, {budget}, o.seed);
  out << "hit=" << (res.hit ? "true" : "false") << "\n";
  if (res.hit) out << "evaluations_to_hit=" << res.evaluations_to_hit << "\n";
  out << "evaluations=" << res.evaluations << "\n"
      << "generations=" << res.generations << "\n"
      << "lower_border_hits=" << res.lower_border_hits << "\n"
      << "zero_absorptions=" << res.zero_absorptions << "\n"
      << "unreachable=" << (res.unreachable ? "true" : "false") << "\n";
  if (!o.out_csv.empty()) {
    auto f = open_output(o.out_csv);
    PointStats ps;
    ps.point = {cfg, spec};
    ps.stats = aggregate_runs(std::span<const RunResult>(&res, 1));
    const std::vector<std::string> meta = {
        metadata_version_line(),
        "command: run seed=" + format_u64(o.seed) +
            " max_evals=" + format_u64(budget) + " fitness=" + spec.to_string(),
    };
    write_sweep_csv(f, std::span<const PointStats>(&ps, 1), o.seed, meta);
  }
  return res.hit ? kExitOk : kExitBudget;
}

// -------------------------------------------------------------- sweep ----

struct SweepOptions {
  std::string config_path;
  std::string out_path;
  int threads = 0;
};

struct ParsedSweep {
  SweepProtocol protocol;
  std::vector<std::string> metadata;
};

ParsedSweep parse_sweep_config(const std::string& path) {
  IniFile ini = IniFile::parse_file(path);
  const std::string section = "sweep";
  if (!ini.sections().count(section))
    throw std::runtime_error("config: missing [sweep] section");

  const std::string algo = ini.take(section, "algo");
  const std::string fitness = ini.take_or(section, "fitness", "onemax");
  const std::string n_text = ini.take(section, "n");
  const std::string lambda_text = ini.take_or(section, "lambda", "");
  const std::string mu_text = ini.take_or(section, "mu", "");
  const std::string rho_text = ini.take_or(section, "rho", "");
  const std::string k_text = ini.take_or(section, "K", "");
  const std::string eps_text = ini.take_or(section, "epsilon", "");
  const std::string margin_text = ini.take_or(section, "margin", "1/n");
  const int replicates = std::stoi(ini.take_or(section, "replicates", "300"));
  const std::uint64_t master_seed =
      std::stoull(ini.take_or(section, "master_seed", "1"));
  const std::string budget_text = ini.take_or(section, "budget", "default");
  ini.finish();

  const Algorithm algorithm = parse_algorithm(algo);
  const std::vector<int> ns = parse_int_list(n_text);
  std::vector<double> lambdas =
      lambda_text.empty() ? std::vector<double>{} : parse_value_list(lambda_text);
  std::vector<double> ks =
      k_text.empty() ? std::vector<double>{} : parse_value_list(k_text);
  std::vector<double> rhos =
      rho_text.empty() ? std::vector<double>{} : parse_value_list(rho_text);
  std::vector<double> epss =
      eps_text.empty() ? std::vector<double>{} : parse_value_list(eps_text);

  std::size_t axes = 0;
  if (ns.size() > 1) ++axes;
  if (lambdas.size() > 1) ++axes;
  if (ks.size() > 1) ++axes;
  if (rhos.size() > 1) ++axes;
  if (epss.size() > 1) ++axes;
  if (axes > 1)
    throw std::runtime_error("config: at most one key may hold a list");

  ParsedSweep out;
  const FitnessSpec spec = FitnessSpec::parse(fitness);
  const auto add_point = [&](int n, int lambda, double rho, double K,
                             double eps) {
    int mu = 0;
    if (!mu_text.empty()) mu = parse_mu(mu_text, lambda);
    EdaConfig cfg = build_config(algo, n, lambda, mu, rho, K, eps, margin_text);
    spec.validate(cfg.n);
    out.protocol.grid.push_back({cfg, spec});
  };

  const auto lambda_at = [&](std::size_t i) {
    if (lambdas.empty()) return 0;
    return static_cast<int>(
        std::llround(lambdas[std::min(i, lambdas.size() - 1)]));
  };
  const auto value_at = [](const std::vector<double>& v, std::size_t i) {
    return v.empty() ? 0.0 : v[std::min(i, v.size() - 1)];
  };
  const std::size_t grid_size = std::max(
      {ns.size(), lambdas.size(), ks.size(), rhos.size(), epss.size()});
  for (std::size_t i = 0; i < grid_size; ++i) {
    const int n = ns[std::min(i, ns.size() - 1)];
    add_point(n, lambda_at(i), value_at(rhos, i), value_at(ks, i),
              value_at(epss, i));
  }

  out.protocol.replicates = replicates;
  out.protocol.master_seed = master_seed;
  if (budget_text != "default")
    out.protocol.max_evaluations = std::stoull(budget_text);

  out.metadata.push_back(metadata_version_line());
  out.metadata.push_back(
      "command: sweep algo=" + algo + " fitness=" + fitness + " n=" + n_text +
      (lambda_text.empty() ? "" : " lambda=" + lambda_text) +
      (mu_text.empty() ? "" : " mu=" + mu_text) +
      (rho_text.empty() ? "" : " rho=" + rho_text) +
      (k_text.empty() ? "" : " K=" + k_text) +
      (eps_text.empty() ? "" : " epsilon=" + eps_text) +
      " margin=" + margin_text + " replicates=" + std::to_string(replicates) +
      " budget=" + budget_text + " master_seed=" + format_u64(master_seed));
  return out;
}

int cmd_sweep(const SweepOptions& o, std::ostream& out) {
  ParsedSweep parsed = parse_sweep_config(o.config_path);
  const auto stats = sweep(parsed.protocol, o.threads);
  auto f = open_output(o.out_path);
  write_sweep_csv(f, stats, parsed.protocol.master_seed, parsed.metadata);
  out << "wrote " << stats.size() << " rows to " << o.out_path << "\n";
  return kExitOk;
}

// ------------------------------------------------------------ scaling ----

struct ScalingOptions {
  std::string algo;
  std::string fitness = "onemax";
  std::string n_text;
  double k_coeff = 7.0;
  double lambda_coeff = 40.0;
  double mu_coeff = 3.0;
  std::string lambda_rule = "log";  // log | sqrtlog
  double rho = 0.0;
  double epsilon = 13.0;
  int replicates = 100;
  std::uint64_t master_seed = 1;
  std::uint64_t budget = 0;
  int threads = 0;
  std::string out_path;
};

int cmd_scaling(const ScalingOptions& o, std::ostream& out) {
  const Algorithm algorithm = parse_algorithm(o.algo);
  const FitnessSpec spec = FitnessSpec::parse(o.fitness);
  const std::vector<int> ns = parse_int_list(o.n_text);
  const auto rule = [&](int n) -> GridPoint {
    switch (algorithm) {
      case Algorithm::cga:
        return {cga_sqrt_rule(n, o.k_coeff), spec};
      case Algorithm::sig_cga:
        return {EdaConfig::sig_cga(n, o.epsilon), spec};
      case Algorithm::umda:
      case Algorithm::pbil: {
        EdaConfig cfg = o.lambda_rule == "sqrtlog"
                            ? umda_sqrtlog_rule(n)
                            : umda_log_rule(n, o.lambda_coeff, o.mu_coeff);
        if (algorithm == Algorithm::pbil) {
          cfg.algorithm = Algorithm::pbil;
          cfg.rho = o.rho;
        }
        return {cfg, spec};
      }
      case Algorithm::mmas_ib: {
        const double denom = std::sqrt(double(n)) * std::log(double(n));
        EdaConfig cfg = EdaConfig::mmas_ib(n, 2, 1.0 / std::max(1.0, denom));
        return {cfg, spec};
      }
    }
    throw std::logic_error("scaling: unreachable");
  };
  const ScalingReport report =
      scaling_fit(rule, ns, o.replicates, o.master_seed, o.threads, o.budget);

  out << "slope=" << format_double(report.fit.slope)
      << " stderr=" << format_double(report.fit.stderr_slope)
      << " r2=" << format_double(report.fit.r2)
      << " budget_limited=" << (report.budget_limited ? "true" : "false")
      << "\n";
  if (!o.out_path.empty()) {
    auto f = open_output(o.out_path);
    std::vector<PointStats> stats;
    for (const auto& p : report.points) stats.push_back(p.stats);
    const std::vector<std::string> meta = {
        metadata_version_line(),
        "command: scaling algo=" + o.algo + " fitness=" + o.fitness +
            " n=" + o.n_text + " replicates=" + std::to_string(o.replicates) +
            " master_seed=" + format_u64(o.master_seed),
        "fit: slope=" + format_double(report.fit.slope) +
            " stderr=" + format_double(report.fit.stderr_slope) +
            " r2=" + format_double(report.fit.r2) + " budget_limited=" +
            (report.budget_limited ? "true" : "false"),
    };
    write_sweep_csv(f, stats, o.master_seed, meta);
  }
  return kExitOk;
}

// ------------------------------------------------------------ compare ----

struct CompareOptions {
  std::string suite_path;
  std::string out_path;
  int threads = 0;
};

int cmd_compare(const CompareOptions& o, std::ostream& out) {
  IniFile ini = IniFile::parse_file(o.suite_path);
  if (!ini.sections().count("suite"))
    throw std::runtime_error("config: missing [suite] section");
  const std::vector<int> ns = parse_int_list(ini.take("suite", "n"));
  const int replicates = std::stoi(ini.take_or("suite", "replicates", "100"));
  const std::uint64_t master_seed =
      std::stoull(ini.take_or("suite", "master_seed", "1"));
  const std::string budget_text = ini.take_or("suite", "budget", "default");
  const std::uint64_t budget =
      budget_text == "default" ? 0 : std::stoull(budget_text);
  std::vector<FitnessSpec> fitnesses;
  {
    std::stringstream ss(ini.take_or("suite", "fitness", "onemax"));
    std::string item;
    while (std::getline(ss, item, ','))
      fitnesses.push_back(FitnessSpec::parse(item));
  }

  std::vector<CompareEntry> entries;
  for (const std::string& section : ini.sections()) {
    if (section.rfind("entry:", 0) != 0) continue;
    const std::string label = section.substr(6);
    const std::string algo = ini.take(section, "algo");
    const Algorithm algorithm = parse_algorithm(algo);
    CompareEntry entry;
    entry.label = label;
    switch (algorithm) {
      case Algorithm::sig_cga: {
        const double eps = std::stod(ini.take_or(section, "epsilon", "13"));
        entry.config_rule = [eps](int n) { return EdaConfig::sig_cga(n, eps); };
        break;
      }
      case Algorithm::cga: {
        const double c = std::stod(ini.take_or(section, "k_coeff", "1"));
        entry.config_rule = [c](int n) { return cga_sqrt_rule(n, c); };
        break;
      }
      case Algorithm::umda:
      case Algorithm::pbil: {
        const std::string rule = ini.take_or(section, "lambda_rule", "sqrtlog");
        const double c1 = std::stod(ini.take_or(section, "lambda_coeff", "40"));
        const double c2 = std::stod(ini.take_or(section, "mu_coeff", "3"));
        const double rho = std::stod(ini.take_or(section, "rho", "1"));
        const bool is_pbil = algorithm == Algorithm::pbil;
        entry.config_rule = [rule, c1, c2, rho, is_pbil](int n) {
          EdaConfig cfg = rule == "sqrtlog" ? umda_sqrtlog_rule(n)
                                            : umda_log_rule(n, c1, c2);
          if (is_pbil) {
            cfg.algorithm = Algorithm::pbil;
            cfg.rho = rho;
          }
          return cfg;
        };
        break;
      }
      case Algorithm::mmas_ib: {
        const double rho_coeff =
            std::stod(ini.take_or(section, "rho_coeff", "1"));
        entry.config_rule = [rho_coeff](int n) {
          const double denom =
              rho_coeff * std::sqrt(double(n)) * std::log(double(n));
          return EdaConfig::mmas_ib(n, 2, 1.0 / std::max(1.0, denom));
        };
        break;
      }
    }
    entries.push_back(std::move(entry));
  }
  ini.finish();
  if (entries.empty()) throw std::runtime_error("config: no [entry:*] sections");

  const CompareReport report = compare(entries, fitnesses, ns, replicates,
                                       master_seed, o.threads, budget);

  auto f = open_output(o.out_path);
  CsvWriter w(f);
  w.comment(metadata_version_line());
  w.comment("command: compare suite=" + o.suite_path +
            " replicates=" + std::to_string(replicates) +
            " master_seed=" + format_u64(master_seed));
  for (const CompareSeries& s : report.series) {
    w.comment("series: label=" + s.label + " fitness=" + s.fitness +
              " slope=" + format_double(s.fit.slope) +
              " stderr=" + format_double(s.fit.stderr_slope) +
              " r2=" + format_double(s.fit.r2) + " budget_limited=" +
              (s.budget_limited ? "true" : "false"));
  }
  f << "label,fitness,n,runs,success_rate,mean_evals,median_evals,std_evals,"
       "mean_border_hits,master_seed\n";
  for (const CompareCell& c : report.cells) {
    const RunStatsCore& s = c.stats;
    w.row({c.label, c.fitness, format_u64(std::uint64_t(c.n)),
           format_u64(std::uint64_t(s.runs)), format_double(s.success_rate),
           s.has_stats ? format_double(s.mean_evals) : "",
           s.has_stats ? format_double(s.median_evals) : "",
           s.has_stats ? format_double(s.std_evals) : "",
           format_double(s.mean_border_hits), format_u64(master_seed)});
  }
  out << "wrote " << report.cells.size() << " rows to " << o.out_path << "\n";
  return kExitOk;
}

// -------------------------------------------------------------- noise ----

struct NoiseOptions {
  std::string algo = "cga";
  std::string fitness = "onemax";
  std::string kind = "gauss";  // gauss | prior
  std::string levels_text = "0,1,2";
  int n = 100;
  double k_coeff = 7.0;
  double ea_c = 1.0;
  int replicates = 100;
  std::uint64_t master_seed = 1;
  std::uint64_t budget = 100000000ull;
  int threads = 0;
  std::string out_path;
};

int cmd_noise(const NoiseOptions& o, std::ostream& out) {
  if (parse_algorithm(o.algo) != Algorithm::cga)
    throw std::runtime_error("noise: only the cga rule is wired up");
  if (o.kind != "gauss" && o.kind != "prior")
    throw std::runtime_error("noise: kind must be gauss or prior");
  const std::vector<double> levels = parse_value_list(o.levels_text);
  const FitnessSpec base = FitnessSpec::parse(o.fitness);
  const bool gauss = o.kind == "gauss";
  const auto rule = [&](double level) -> GridPoint {
    FitnessSpec spec = base;
    if (level > 0.0) {
      spec.noise = gauss ? FitnessSpec::NoiseKind::gauss
                         : FitnessSpec::NoiseKind::prior;
      spec.noise_param = level;
    }
    const double sigma2 = gauss ? level * level : level;
    return {cga_noise_rule(o.n, o.k_coeff, sigma2), spec};
  };
  const auto rows = noise_study(levels, rule, o.ea_c, o.replicates,
                                o.master_seed, o.budget, o.threads);

  auto f = open_output(o.out_path);
  CsvWriter w(f);
  w.comment(metadata_version_line());
  w.comment("command: noise algo=" + o.algo + " fitness=" + o.fitness +
            " kind=" + o.kind + " levels=" + o.levels_text +
            " n=" + std::to_string(o.n) + " k_coeff=" + format_double(o.k_coeff) +
            " ea_c=" + format_double(o.ea_c) +
            " replicates=" + std::to_string(o.replicates) +
            " budget=" + format_u64(o.budget) +
            " master_seed=" + format_u64(o.master_seed));
  f << "noise,param,n,K,runs,success_rate,mean_evals,median_evals,"
       "ea_success_rate,ea_mean_evals,ea_median_evals,master_seed\n";
  for (const NoiseLevelRow& r : rows) {
    w.row({o.kind, format_double(r.noise_param),
           format_u64(std::uint64_t(o.n)), format_double(r.eda_point.cfg.K),
           format_u64(std::uint64_t(r.eda.runs)),
           format_double(r.eda.success_rate),
           r.eda.has_stats ? format_double(r.eda.mean_evals) : "",
           r.eda.has_stats ? format_double(r.eda.median_evals) : "",
           format_double(r.ea.success_rate),
           r.ea.has_stats ? format_double(r.ea.mean_evals) : "",
           r.ea.has_stats ? format_double(r.ea.median_evals) : "",
           format_u64(o.master_seed)});
  }
  out << "wrote " << rows.size() << " rows to " << o.out_path << "\n";
  return kExitOk;
}

// -------------------------------------------------------- drift-check ----

struct DriftCheckOptions {
  std::string chain;
  std::string trace_path;
  int bins = 10;
  std::uint64_t runs = 100000;
  std::uint64_t seed = 1;
};

int cmd_drift_check(const DriftCheckOptions& o, std::ostream& out) {
  if (!o.trace_path.empty()) {
    std::ifstream in(o.trace_path);
    if (!in)
      throw std::runtime_error("cannot read trace file '" + o.trace_path + "'");
    std::vector<double> series;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      std::size_t pos = 0;
      double v = 0.0;
      try {
        v = std::stod(line, &pos);
      } catch (const std::exception&) {
        throw std::runtime_error("trace: bad value at line " +
                                 std::to_string(lineno));
      }
      if (pos != line.size())
        throw std::runtime_error("trace: bad value at line " +
                                 std::to_string(lineno));
      series.push_back(v);
    }
    if (series.size() < 2)
      throw std::runtime_error("trace: need at least two values");
    double lo = series[0], hi = series[0];
    for (double v : series) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    hi += 1e-9;
    std::vector<double> edges(std::size_t(o.bins) + 1);
    for (std::size_t k = 0; k < edges.size(); ++k)
      edges[k] = lo + (hi - lo) * double(k) / double(o.bins);
    const DriftEstimate est = empirical_drift({series}, edges, 2);
    out << "bin_lo,bin_hi,count,mean_drift,stderr\n";
    for (const DriftBin& b : est.bins) {
      out << format_double(b.lo) << ',' << format_double(b.hi) << ','
          << b.count << ',' << (b.has_estimate ? format_double(b.mean) : "")
          << ',' << (b.has_estimate ? format_double(b.stderr_) : "") << "\n";
    }
    return kExitOk;
  }

  ChainValidation v;
  if (o.chain == "biased_walk")
    v = validate_additive_walk(o.runs, o.seed);
  else if (o.chain == "binomial_thinning")
    v = validate_multiplicative_thinning(o.runs, o.seed);
  else if (o.chain == "sqrt_decay")
    v = validate_variable_sqrt(o.runs, o.seed);
  else
    throw std::runtime_error(
        "drift-check: chain must be biased_walk|binomial_thinning|sqrt_decay");
  out << "chain=" << v.name << " theorem=\"" << v.theorem << "\""
      << " bound=" << format_double(v.bound)
      << " empirical_mean=" << format_double(v.empirical_mean)
      << " ci99=" << format_double(v.ci99_half) << " result="
      << (v.pass ? "PASS" : "FAIL") << "\n";
  return kExitOk;
}

// --------------------------------------------------------------- plot ----

struct PlotOptions {
  std::string in_path;
  std::string x_col;
  std::string y_col;
  std::string out_path;
};

int cmd_plot(const PlotOptions& o, std::ostream& out) {
  std::ifstream in(o.in_path);
  if (!in) throw std::runtime_error("cannot read input file '" + o.in_path + "'");
  const CsvTable table = CsvTable::parse(in);
  const std::size_t xi = table.column(o.x_col);
  const std::size_t yi = table.column(o.y_col);
  std::vector<double> xs, ys;
  for (const auto& row : table.rows) {
    if (xi >= row.size() || yi >= row.size()) continue;
    if (row[xi].empty() || row[yi].empty()) continue;  // absent statistics
    std::size_t px = 0, py = 0;
    const double x = std::stod(row[xi], &px);
    const double y = std::stod(row[yi], &py);
    if (px != row[xi].size() || py != row[yi].size())
      throw std::runtime_error("plot: non-numeric cell in column");
    xs.push_back(x);
    ys.push_back(y);
  }
  if (xs.empty()) throw std::runtime_error("plot: no plottable rows");
  auto f = open_output(o.out_path);
  write_line_plot_svg(f, xs, ys, o.x_col, o.y_col);
  out << "wrote " << o.out_path << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{std::string(kToolName) +
               " - univariate EDA laboratory (" + std::string(kToolVersion) +
               ")"};
  app.require_subcommand(1);

  RunOptions run_opt;
  auto* run_cmd = app.add_subcommand("run", "execute a single optimization run");
  run_cmd->add_option("--algo", run_opt.algo, "umda|pbil|mmas_ib|cga|sig_cga")
      ->required();
  run_cmd->add_option("--n", run_opt.n, "problem size")->required();
  run_cmd->add_option("--lambda", run_opt.lambda, "offspring population size");
  run_cmd->add_option("--mu", run_opt.mu, "effective population size");
  run_cmd->add_option("--rho", run_opt.rho, "learning/evaporation rate");
  run_cmd->add_option("--K", run_opt.K, "cGA population size");
  run_cmd->add_option("--epsilon", run_opt.epsilon, "sig-cGA significance");
  run_cmd->add_option("--margin", run_opt.margin, "1/n | none | value");
  run_cmd->add_option("--fitness", run_opt.fitness,
                      "onemax|leadingones|binval|needle (+modifiers)");
  run_cmd->add_option("--target", run_opt.target, "ones|random|<bitstring>");
  run_cmd->add_option("--perm", run_opt.perm, "identity|random");
  run_cmd->add_option("--noise", run_opt.noise, "gauss:<sigma>|prior:<q>");
  run_cmd->add_option("--seed", run_opt.seed, "run seed");
  run_cmd->add_option("--max-evals", run_opt.max_evals,
                      "evaluation budget (0 = default)");
  run_cmd->add_option("--out", run_opt.out_csv, "optional CSV row output");

  SweepOptions sweep_opt;
  auto* sweep_cmd = app.add_subcommand("sweep", "run a batch protocol from a config file");
  sweep_cmd->add_option("--config", sweep_opt.config_path, "INI protocol file")
      ->required();
  sweep_cmd->add_option("--out", sweep_opt.out_path, "CSV output path")
      ->required();
  sweep_cmd->add_option("--threads", sweep_opt.threads, "worker threads");

  ScalingOptions scaling_opt;
  auto* scaling_cmd =
      app.add_subcommand("scaling", "runtime scaling fit over an n grid");
  scaling_cmd->add_option("--algo", scaling_opt.algo)->required();
  scaling_cmd->add_option("--fitness", scaling_opt.fitness);
  scaling_cmd->add_option("--n", scaling_opt.n_text, "n grid, e.g. 100,200,400,800")
      ->required();
  scaling_cmd->add_option("--k-coeff", scaling_opt.k_coeff,
                          "cga: K = ceil(c sqrt(n) ln n)");
  scaling_cmd->add_option("--lambda-rule", scaling_opt.lambda_rule,
                          "umda: log | sqrtlog");
  scaling_cmd->add_option("--lambda-coeff", scaling_opt.lambda_coeff);
  scaling_cmd->add_option("--mu-coeff", scaling_opt.mu_coeff);
  scaling_cmd->add_option("--rho", scaling_opt.rho);
  scaling_cmd->add_option("--epsilon", scaling_opt.epsilon);
  scaling_cmd->add_option("--replicates", scaling_opt.replicates);
  scaling_cmd->add_option("--seed", scaling_opt.master_seed);
  scaling_cmd->add_option("--budget", scaling_opt.budget);
  scaling_cmd->add_option("--threads", scaling_opt.threads);
  scaling_cmd->add_option("--out", scaling_opt.out_path);

  CompareOptions compare_opt;
  auto* compare_cmd =
      app.add_subcommand("compare", "algorithm comparison table from a suite file");
  compare_cmd->add_option("--suite", compare_opt.suite_path)->required();
  compare_cmd->add_option("--out", compare_opt.out_path)->required();
  compare_cmd->add_option("--threads", compare_opt.threads);

  NoiseOptions noise_opt;
  auto* noise_cmd = app.add_subcommand("noise", "noise study with EA baseline");
  noise_cmd->add_option("--algo", noise_opt.algo);
  noise_cmd->add_option("--fitness", noise_opt.fitness);
  noise_cmd->add_option("--kind", noise_opt.kind, "gauss|prior");
  noise_cmd->add_option("--levels", noise_opt.levels_text,
                        "sigma (gauss) or q (prior) values");
  noise_cmd->add_option("--n", noise_opt.n);
  noise_cmd->add_option("--k-coeff", noise_opt.k_coeff,
                        "K = ceil(c (1+sigma^2) sqrt(n) ln n)");
  noise_cmd->add_option("--ea-c", noise_opt.ea_c, "EA mutation constant c/n");
  noise_cmd->add_option("--replicates", noise_opt.replicates);
  noise_cmd->add_option("--seed", noise_opt.master_seed);
  noise_cmd->add_option("--budget", noise_opt.budget);
  noise_cmd->add_option("--threads", noise_opt.threads);
  noise_cmd->add_option("--out", noise_opt.out_path)->required();

  DriftCheckOptions drift_opt;
  auto* drift_cmd =
      app.add_subcommand("drift-check", "drift theorem bound validation");
  drift_cmd->add_option("--chain", drift_opt.chain,
                        "biased_walk|binomial_thinning|sqrt_decay");
  drift_cmd->add_option("--trace", drift_opt.trace_path,
                        "trace file: one potential value per line");
  drift_cmd->add_option("--bins", drift_opt.bins);
  drift_cmd->add_option("--runs", drift_opt.runs);
  drift_cmd->add_option("--seed", drift_opt.seed);

  PlotOptions plot_opt;
  auto* plot_cmd = app.add_subcommand("plot", "render a CSV line plot as SVG");
  plot_cmd->add_option("--in", plot_opt.in_path)->required();
  plot_cmd->add_option("--x", plot_opt.x_col)->required();
  plot_cmd->add_option("--y", plot_opt.y_col)->required();
  plot_cmd->add_option("--out", plot_opt.out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(run_opt, out);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_opt, out);
    if (scaling_cmd->parsed()) return cmd_scaling(scaling_opt, out);
    if (compare_cmd->parsed()) return cmd_compare(compare_opt, out);
    if (noise_cmd->parsed()) return cmd_noise(noise_opt, out);
    if (drift_cmd->parsed()) return cmd_drift_check(drift_opt, out);
    if (plot_cmd->parsed()) return cmd_plot(plot_opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  err << "error: no command\n";
  return kExitConfigError;
}

}  // namespace edalab
