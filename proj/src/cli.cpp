// SPDX-License-Identifier: Apache-2.0
#include "semicop/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "semicop/config.hpp"
#include "semicop/copula.hpp"
#include "semicop/io.hpp"
#include "semicop/markov.hpp"
#include "semicop/measures.hpp"
#include "semicop/quadrature.hpp"
#include "semicop/regions.hpp"

namespace semicop {
namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

struct DiagonalOpts {
  std::string config;
  std::string family;
  double a = kUnset;
  double p = kUnset;
  double alpha = kUnset;
  double beta = kUnset;
  std::vector<double> knots;
  std::vector<double> exponents;
};

void add_diagonal_opts(CLI::App* cmd, DiagonalOpts& o) {
  cmd->add_option("--diagonal", o.config,
                  "Diagonal config: path to a JSON file, or inline JSON starting with '{'");
  cmd->add_option("--family", o.family,
                  "One of ua, la, power, frechet, example23, mo_product, piecewise")
      ->check(CLI::IsMember(
          {"ua", "la", "power", "frechet", "example23", "mo_product", "piecewise"}));
  cmd->add_option("--a", o.a, "Parameter a of ua / la");
  cmd->add_option("--p", o.p, "Exponent of the power family, in [1, 2]");
  cmd->add_option("--alpha", o.alpha, "Parameter alpha of frechet / mo_product");
  cmd->add_option("--beta", o.beta, "Parameter beta of mo_product");
  cmd->add_option("--knots", o.knots, "Comma-separated knots for piecewise")->delimiter(',');
  cmd->add_option("--exponents", o.exponents, "Comma-separated exponents for piecewise")
      ->delimiter(',');
}

Diagonal resolve_diagonal(const DiagonalOpts& o) {
  if (!o.config.empty()) return load_diagonal(o.config);
  if (o.family.empty()) throw config_error("no diagonal given (use --diagonal or --family)");
  auto need = [&o](double x, const char* flag) {
    if (std::isnan(x))
      throw config_error("--family " + o.family + " needs " + flag);
    return x;
  };
  if (o.family == "ua") return Diagonal::ua(need(o.a, "--a"));
  if (o.family == "la") return Diagonal::la(need(o.a, "--a"));
  if (o.family == "power") return Diagonal::power(need(o.p, "--p"));
  if (o.family == "frechet") return Diagonal::frechet(need(o.alpha, "--alpha"));
  if (o.family == "example23") return Diagonal::example23();
  if (o.family == "mo_product")
    return Diagonal::mo_product(need(o.alpha, "--alpha"), need(o.beta, "--beta"));
  // IsMember leaves only piecewise
  if (o.knots.empty() || o.exponents.empty())
    throw config_error("--family piecewise needs --knots and --exponents");
  return Diagonal::piecewise_power(o.knots, o.exponents);
}

RegionPair resolve_pair(const std::string& name) {
  const auto pair = region_pair_from_string(name);
  if (!pair) throw config_error("unknown region pair '" + name + "'");
  return *pair;
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw config_error(path + ": cannot write");
  return f;
}

int run_validate(const DiagonalOpts& dopts, int grid_n, std::ostream& out) {
  const ValidationReport report = validate(resolve_diagonal(dopts), grid_n);
  if (report.pass()) {
    out << "pass\n";
    return 0;
  }
  const std::size_t shown = std::min<std::size_t>(report.issues.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) {
    const ValidationIssue& is = report.issues[i];
    out << "violation check=" << is.check << " t=" << num17(is.t)
        << " slack=" << num17(is.slack) << '\n';
  }
  if (shown < report.issues.size()) out << "... (" << report.issues.size() - shown << " more)\n";
  out << "fail violations=" << report.issues.size() << '\n';
  return 1;
}

int run_measures(const DiagonalOpts& dopts, double tol, const std::string& route,
                 std::ostream& out) {
  const Diagonal d = resolve_diagonal(dopts);
  MeasureVector m;
  const ConcordanceTriple c = concordance(d, tol);
  m.tau = c.tau;
  m.rho = c.rho;
  m.phi = c.phi;
  m.xi = route == "markov" ? xi_via_markov(d, tol) : xi_closed(d, tol);
  out << "tau=" << num6(m.tau) << " rho=" << num6(m.rho) << " phi=" << num6(m.phi)
      << " xi=" << num6(m.xi) << '\n';
  if (route == "both") {
    const double xc = m.xi;
    const double xm = xi_via_markov(d, tol);
    out << "xi_closed=" << num17(xc) << " xi_markov=" << num17(xm)
        << " gap=" << num17(std::abs(xc - xm)) << '\n';
  }
  return 0;
}

int run_region(const DiagonalOpts& dopts, const std::string& pair_name, double x_opt,
               double y_opt, double slack, double tol, std::ostream& out) {
  const RegionPair pair = resolve_pair(pair_name);
  double x = x_opt, y = y_opt;
  if (std::isnan(x) != std::isnan(y))
    throw config_error("give both --x and --y, or neither");
  if (std::isnan(x)) {
    const MeasureVector m = measure_vector(resolve_diagonal(dopts), tol);
    pair_coords(pair, m, x, y);
  }
  const bool inside = region_contains(pair, x, y, slack);
  const RegionBounds b = region_bounds(pair, x);
  out << (inside ? "inside" : "outside") << " pair=" << to_string(pair) << " x=" << num17(x)
      << " y=" << num17(y) << " lower=" << num17(b.lower) << " upper=" << num17(b.upper)
      << '\n';
  return inside ? 0 : 1;
}

int run_area(const std::string& pair_name, std::ostream& out) {
  const RegionPair pair = resolve_pair(pair_name);
  const RegionArea area = region_area(pair);
  out << "analytic=" << num17(area.analytic) << " numeric=" << num17(area.numeric) << '\n';
  return 0;
}

int run_simulate(std::size_t n, std::uint64_t seed, int max_pieces, double tol, double slack,
                 const std::string& csv, std::ostream& out) {
  const std::vector<MeasureVector> points = simulate_cloud(n, seed, max_pieces, tol);

  struct Offender {
    RegionPair pair;
    std::size_t index;
    double x, y;
  };
  std::vector<Offender> offenders;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (RegionPair pair : kRegionPairs) {
      double x, y;
      pair_coords(pair, points[i], x, y);
      if (!region_contains(pair, x, y, slack)) offenders.push_back({pair, i, x, y});
    }
  }

  out << "points=" << n << " violations=" << offenders.size() << '\n';
  const std::size_t shown = std::min<std::size_t>(offenders.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) {
    const Offender& o = offenders[i];
    out << "violation pair=" << to_string(o.pair) << " index=" << o.index << " x=" << num17(o.x)
        << " y=" << num17(o.y) << '\n';
  }
  if (!csv.empty()) {
    std::ofstream f = open_csv(csv);
    write_cloud_csv(f, points);
    out << "csv=" << csv << '\n';
  }
  return offenders.empty() ? 0 : 4;
}

int run_sample(const DiagonalOpts& dopts, std::size_t n, std::uint64_t seed,
               const std::string& csv, std::ostream& out) {
  const SemilinearCopula copula(resolve_diagonal(dopts));
  const SampleBatch batch = copula.sample(n, seed);
  if (csv.empty()) {
    write_samples_csv(out, batch);
  } else {
    std::ofstream f = open_csv(csv);
    write_samples_csv(f, batch);
    out << "csv=" << csv << " n=" << n << '\n';
  }
  return 0;
}

int run_boundary(const std::string& pair_name, int grid_points, const std::string& csv,
                 std::ostream& out) {
  const RegionPair pair = resolve_pair(pair_name);
  if (csv.empty()) {
    write_boundary_csv(out, pair, grid_points);
  } else {
    std::ofstream f = open_csv(csv);
    write_boundary_csv(f, pair, grid_points);
    out << "csv=" << csv << " points=" << grid_points << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dependence measures of lower semilinear copulas"};
  app.require_subcommand(1);

  DiagonalOpts dopts;

  auto* validate_cmd = app.add_subcommand("validate", "Check a diagonal against the class constraints");
  add_diagonal_opts(validate_cmd, dopts);
  int grid_n = 10000;
  validate_cmd->add_option("--grid", grid_n, "Grid intervals")->check(CLI::PositiveNumber);

  auto* measures_cmd = app.add_subcommand("measures", "Closed-form tau, rho, phi, xi");
  add_diagonal_opts(measures_cmd, dopts);
  double tol = 1e-10;
  std::string route = "closed";
  measures_cmd->add_option("--tol", tol, "Quadrature tolerance")->check(CLI::PositiveNumber);
  measures_cmd->add_option("--route", route, "xi route: closed, markov, or both")
      ->check(CLI::IsMember({"closed", "markov", "both"}));

  auto* region_cmd = app.add_subcommand("region", "Test a point against an attainable region");
  add_diagonal_opts(region_cmd, dopts);
  std::string pair_name;
  double x_opt = kUnset, y_opt = kUnset, slack = 0.0, region_tol = 1e-10;
  region_cmd->add_option("--pair", pair_name, "tau_rho, tau_phi, phi_rho, or tau_xi")
      ->required();
  region_cmd->add_option("--x", x_opt, "Point abscissa (else computed from the diagonal)");
  region_cmd->add_option("--y", y_opt, "Point ordinate");
  region_cmd->add_option("--slack", slack, "Additive membership slack");
  region_cmd->add_option("--tol", region_tol, "Quadrature tolerance")
      ->check(CLI::PositiveNumber);

  auto* area_cmd = app.add_subcommand("area", "Analytic and numeric region area");
  std::string area_pair;
  area_cmd->add_option("--pair", area_pair, "tau_rho, tau_phi, phi_rho, or tau_xi")->required();

  auto* simulate_cmd =
      app.add_subcommand("simulate", "Measure cloud of random diagonals, checked against all regions");
  std::size_t sim_n = 100;
  std::uint64_t sim_seed = 1;
  int max_pieces = 8;
  double sim_tol = 1e-10, sim_slack = 1e-9;
  std::string sim_csv;
  simulate_cmd->add_option("--n", sim_n, "Number of diagonals");
  simulate_cmd->add_option("--seed", sim_seed, "Master seed");
  simulate_cmd->add_option("--max-pieces", max_pieces, "Piece-count cap")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--tol", sim_tol, "Quadrature tolerance")->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--slack", sim_slack, "Region membership slack");
  simulate_cmd->add_option("--out", sim_csv, "Write the cloud to this CSV file");

  auto* sample_cmd = app.add_subcommand("sample", "Draw from the copula by conditional inversion");
  add_diagonal_opts(sample_cmd, dopts);
  std::size_t sample_n = 1000;
  std::uint64_t sample_seed = 1;
  std::string sample_csv;
  sample_cmd->add_option("--n", sample_n, "Number of pairs");
  sample_cmd->add_option("--seed", sample_seed, "Master seed");
  sample_cmd->add_option("--out", sample_csv, "Write to this file instead of stdout");

  auto* boundary_cmd = app.add_subcommand("boundary", "Tabulate region boundary curves");
  std::string boundary_pair, boundary_csv;
  int grid_points = 1001;
  boundary_cmd->add_option("--pair", boundary_pair, "tau_rho, tau_phi, phi_rho, or tau_xi")
      ->required();
  boundary_cmd->add_option("--grid", grid_points, "Rows in the table")
      ->check(CLI::Range(2, 1 << 24));
  boundary_cmd->add_option("--out", boundary_csv, "Write to this file instead of stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("semicop");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (validate_cmd->parsed()) return run_validate(dopts, grid_n, out);
    if (measures_cmd->parsed()) return run_measures(dopts, tol, route, out);
    if (region_cmd->parsed())
      return run_region(dopts, pair_name, x_opt, y_opt, slack, region_tol, out);
    if (area_cmd->parsed()) return run_area(area_pair, out);
    if (simulate_cmd->parsed())
      return run_simulate(sim_n, sim_seed, max_pieces, sim_tol, sim_slack, sim_csv, out);
    if (sample_cmd->parsed()) return run_sample(dopts, sample_n, sample_seed, sample_csv, out);
    if (boundary_cmd->parsed())
      return run_boundary(boundary_pair, grid_points, boundary_csv, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const CLI::CallForHelp&) {
    CLI::App* active = &app;
    while (!active->get_subcommands().empty()) active = active->get_subcommands().front();
    out << active->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const accuracy_error& e) {
    err << "error: " << e.what() << " best=" << num17(e.best_estimate())
        << " err=" << num17(e.error_estimate()) << '\n';
    return 3;
  } catch (const config_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace semicop
