// Command-line front end: state evaluation, verification suites, convergence
// tables, and the finite-difference spectrum oracle.  Everything prints as CSV
// (17 significant digits, lossless double round-trip) or JSON.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include <semiosc/semiosc.hpp>

namespace {

using nlohmann::json;
using namespace semiosc;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json report_json(const CheckReport& r) {
  json d = json::array();
  for (const auto& e : r.details) d.push_back({{"location", e.location}, {"error", e.error}});
  return {{"name", r.name},
          {"max_abs_error", r.max_abs_error},
          {"tolerance", r.tolerance},
          {"pass", r.pass},
          {"details", d}};
}

void reports_csv(std::ostream& os, const std::vector<CheckReport>& reports) {
  os << "report,location,error,tolerance,pass\n";
  for (const auto& r : reports)
    for (const auto& e : r.details)
      os << r.name << ',' << e.location << ',' << num(e.error) << ',' << num(r.tolerance) << ','
         << (r.pass ? 1 : 0) << '\n';
}

json table_json(const ConvergenceTable& t) {
  return {{"name", t.name},
          {"parameter", t.parameter},
          {"columns", t.columns},
          {"parameter_values", t.parameter_values},
          {"residuals", t.residuals}};
}

void table_csv(std::ostream& os, const ConvergenceTable& t) {
  os << "# " << t.name << '\n' << t.parameter;
  for (const auto& c : t.columns) os << ',' << c;
  os << '\n';
  for (std::size_t i = 0; i < t.parameter_values.size(); ++i) {
    os << num(t.parameter_values[i]);
    for (double v : t.residuals[i]) os << ',' << num(v);
    os << '\n';
  }
}

struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;
  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    os = &file;
  }
};

int emit_reports(Sink& sink, const std::string& format, const std::vector<CheckReport>& reports) {
  bool all = true;
  for (const auto& r : reports) all = all && r.pass;
  if (format == "json") {
    json out = json::array();
    for (const auto& r : reports) out.push_back(report_json(r));
    *sink.os << out.dump(2) << '\n';
  } else {
    reports_csv(*sink.os, reports);
  }
  return all ? 0 : 1;
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto pos = s.find("..");
  if (pos == std::string::npos) {
    const int n = std::stoi(s);
    return {n, n};
  }
  return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semiconfined oscillator toolkit"};
  app.require_subcommand(1);

  double m0 = 1.0, omega = 1.0, hbar = 1.0, a = 1.0;
  std::string format = "csv", out_path;
  int seed = 0;  // reserved; nothing in the pipeline draws random numbers
  app.add_option("--m0", m0, "mass scale m0")->capture_default_str();
  app.add_option("--omega", omega, "frequency")->capture_default_str();
  app.add_option("--hbar", hbar, "Planck constant")->capture_default_str();
  app.add_option("--a", a, "confinement radius")->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--seed", seed, "reserved");

  auto* cmd_params = app.add_subcommand("params", "echo derived model parameters");
  cmd_params->fallthrough();

  auto* cmd_eval = app.add_subcommand("eval", "evaluate a stationary state");
  cmd_eval->fallthrough();
  std::string eval_model = "semiconfined";
  int eval_n = 0;
  std::vector<double> eval_x;
  cmd_eval->add_option("--model", eval_model, "model kind")
      ->check(CLI::IsMember({"constant", "semiconfined"}))
      ->capture_default_str();
  cmd_eval->add_option("--n", eval_n, "quantum number")->capture_default_str();
  cmd_eval->add_option("--x", eval_x, "evaluation points")->required();

  auto* cmd_spectrum = app.add_subcommand("spectrum", "exact energy levels");
  cmd_spectrum->fallthrough();
  int spectrum_nmax = 5;
  cmd_spectrum->add_option("--n-max", spectrum_nmax, "highest level")->capture_default_str();

  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->fallthrough();
  cmd_verify->require_subcommand(1);

  auto* v_algebra = cmd_verify->add_subcommand("algebra", "commutators, ladder, recovery");
  v_algebra->fallthrough();
  int alg_nmax = 12;
  double alg_tol = 1e-9;
  v_algebra->add_option("--nmax", alg_nmax, "matrix dimension")->capture_default_str();
  v_algebra->add_option("--tol", alg_tol, "matrix residual tolerance")->capture_default_str();

  auto* v_ident = cmd_verify->add_subcommand("identities", "weighted Laguerre integrals");
  v_ident->fallthrough();
  int id_nmax = 10;
  std::vector<double> id_alpha{1.5, 2.0, 8.0, 50.0};
  v_ident->add_option("--nmax", id_nmax, "highest polynomial degree")->capture_default_str();
  v_ident->add_option("--alpha", id_alpha, "weight exponents")->capture_default_str();

  auto* v_fact = cmd_verify->add_subcommand("factorization", "H = hw A+A- + E0 and eigenproblem");
  v_fact->fallthrough();
  auto* v_comm = cmd_verify->add_subcommand("commutators", "deformed commutator relations");
  v_comm->fallthrough();
  auto* v_heis = cmd_verify->add_subcommand("heisenberg", "Heisenberg-Lie equations of motion");
  v_heis->fallthrough();

  auto* cmd_unc = app.add_subcommand("uncertainty", "moments and uncertainty products");
  cmd_unc->fallthrough();
  std::string unc_range = "0..5", unc_mode = "closed";
  cmd_unc->add_option("--n-range", unc_range, "quantum numbers A..B")->capture_default_str();
  cmd_unc->add_option("--mode", unc_mode, "computation path")
      ->check(CLI::IsMember({"closed", "quadrature"}))
      ->capture_default_str();

  auto* cmd_limits = app.add_subcommand("limits", "large-a convergence tables");
  cmd_limits->fallthrough();
  std::vector<double> lim_a{2, 4, 8, 16};
  std::vector<double> lim_alpha{10, 100, 1000, 10000};
  cmd_limits->add_option("--a-list", lim_a, "confinement radii sweep")->capture_default_str();
  cmd_limits->add_option("--alpha", lim_alpha, "polynomial-limit exponent sweep")
      ->capture_default_str();

  auto* cmd_oracle = app.add_subcommand("oracle", "finite-difference spectrum cross-check");
  cmd_oracle->fallthrough();
  int or_points = 8000, or_k = 4;
  double or_tol = 5e-3;
  cmd_oracle->add_option("--points", or_points, "interior grid points")->capture_default_str();
  cmd_oracle->add_option("--k", or_k, "eigenvalue count")->capture_default_str();
  cmd_oracle->add_option("--tol", or_tol, "relative error gate")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return 2;
  }

  try {
    Sink sink;
    sink.open(out_path);
    std::ostream& os = *sink.os;
    const OscillatorParams p = make_params(m0, omega, hbar, a);

    if (*cmd_params) {
      const double threshold = std::sqrt(hbar / (2.0 * m0 * omega));
      if (format == "json") {
        os << json{{"m0", p.m0},       {"omega", p.omega},       {"hbar", p.hbar},
                   {"a", p.a},         {"lambda0", p.lambda0},   {"alpha", p.alpha},
                   {"e0", p.e0},       {"threshold_a", threshold}}
                  .dump(2)
           << '\n';
      } else {
        os << "name,value\n"
           << "m0," << num(p.m0) << "\nomega," << num(p.omega) << "\nhbar," << num(p.hbar)
           << "\na," << num(p.a) << "\nlambda0," << num(p.lambda0) << "\nalpha," << num(p.alpha)
           << "\ne0," << num(p.e0) << "\nthreshold_a," << num(threshold) << '\n';
      }
      return 0;
    }

    if (*cmd_eval) {
      const ModelKind model =
          (eval_model == "constant") ? ModelKind::ConstantMass : ModelKind::Semiconfined;
      if (format == "json") {
        json rows = json::array();
        for (double x : eval_x) {
          const EvalTriple t = eval_state({p, model, eval_n}, x);
          rows.push_back({{"x", x}, {"value", t.value}, {"d1", t.d1}, {"d2", t.d2}});
        }
        os << rows.dump(2) << '\n';
      } else {
        os << "x,value,d1,d2\n";
        for (double x : eval_x) {
          const EvalTriple t = eval_state({p, model, eval_n}, x);
          os << num(x) << ',' << num(t.value) << ',' << num(t.d1) << ',' << num(t.d2) << '\n';
        }
      }
      return 0;
    }

    if (*cmd_spectrum) {
      if (format == "json") {
        json rows = json::array();
        for (int n = 0; n <= spectrum_nmax; ++n) rows.push_back({{"n", n}, {"energy", energy(p, n)}});
        os << rows.dump(2) << '\n';
      } else {
        os << "n,energy\n";
        for (int n = 0; n <= spectrum_nmax; ++n) os << n << ',' << num(energy(p, n)) << '\n';
      }
      return 0;
    }

    if (*v_algebra) {
      std::vector<CheckReport> reports;
      reports.push_back(check_su11(p, alg_nmax, alg_tol));
      reports.push_back(check_casimir(p, alg_nmax, alg_tol));
      reports.push_back(check_generator_matrices(p, alg_nmax, alg_tol));
      const int n_top = std::min(8, alg_nmax - 2);
      const auto grid = make_check_grid(p, n_top + 1);
      for (int n = 1; n <= n_top; ++n) reports.push_back(check_ladder(p, n, grid));
      for (int n = 0; n <= std::min(4, n_top); ++n)
        reports.push_back(check_ladder_recovery(p, n, grid));
      return emit_reports(sink, format, reports);
    }

    if (*v_ident) return emit_reports(sink, format, {verify_identities(id_nmax, id_alpha)});

    if (*v_fact) {
      std::vector<CheckReport> reports;
      const auto sgrid = make_check_grid(p, 5);
      const auto cgrid = make_check_grid_constant(p, 5);
      for (int n = 0; n <= 5; ++n) {
        reports.push_back(check_factorization(p, ModelKind::ConstantMass, n, cgrid));
        reports.push_back(check_factorization(p, ModelKind::Semiconfined, n, sgrid));
      }
      return emit_reports(sink, format, reports);
    }

    if (*v_comm) {
      std::vector<CheckReport> reports;
      reports.push_back(check_pdem_commutators(p, make_check_grid(p, 3)));
      reports.push_back(check_commutator_recovery(p, make_check_grid_constant(p, 3)));
      return emit_reports(sink, format, reports);
    }

    if (*v_heis) {
      std::vector<CheckReport> reports;
      reports.push_back(check_heisenberg_lie(p, ModelKind::ConstantMass, make_check_grid_constant(p, 3)));
      reports.push_back(check_heisenberg_lie(p, ModelKind::Semiconfined, make_check_grid(p, 3)));
      return emit_reports(sink, format, reports);
    }

    if (*cmd_unc) {
      const auto [lo, hi] = parse_range(unc_range);
      if (lo < 0 || hi < lo) throw CLI::ValidationError("--n-range", "expected A..B with 0 <= A <= B");
      const MomentMethod mode =
          (unc_mode == "quadrature") ? MomentMethod::Quadrature : MomentMethod::ClosedForm;
      if (format == "json") {
        json rows = json::array();
        for (int n = lo; n <= hi; ++n) {
          const MomentSet m = moments_semiconfined(p, n, mode);
          rows.push_back({{"n", n},
                          {"mean_x", m.mean_x},
                          {"mean_p", m.mean_p},
                          {"var_x", m.var_x},
                          {"var_p", m.var_p},
                          {"product", m.product}});
        }
        os << rows.dump(2) << '\n';
      } else {
        os << "n,mean_x,mean_p,var_x,var_p,product\n";
        for (int n = lo; n <= hi; ++n) {
          const MomentSet m = moments_semiconfined(p, n, mode);
          os << n << ',' << num(m.mean_x) << ',' << num(m.mean_p) << ',' << num(m.var_x) << ','
             << num(m.var_p) << ',' << num(m.product) << '\n';
        }
      }
      return 0;
    }

    if (*cmd_limits) {
      std::vector<ConvergenceTable> tables;
      for (int n = 0; n <= 3; ++n) tables.push_back(wavefunction_limit(p, n, lim_a));
      for (int m = 0; m <= 1; ++m) tables.push_back(generator_limit(p, lim_a, m));
      for (int n = 0; n <= 6; ++n) tables.push_back(laguerre_hermite_limit(n, lim_alpha));
      bool all = true;
      for (const auto& t : tables) all = all && decreasing_or_negligible(t);
      if (format == "json") {
        json out = json::array();
        for (const auto& t : tables) out.push_back(table_json(t));
        os << out.dump(2) << '\n';
      } else {
        for (const auto& t : tables) table_csv(os, t);
      }
      return all ? 0 : 1;
    }

    if (*cmd_oracle) {
      const Grid g = default_oracle_grid(p, or_k, or_points);
      const std::vector<double> ev = oracle_spectrum(p, or_k, g);
      bool all = true;
      if (format == "json") {
        json rows = json::array();
        for (int n = 0; n < or_k; ++n) {
          const double exact = energy(p, n);
          const double rel = std::abs(ev[n] - exact) / exact;
          all = all && rel <= or_tol;
          rows.push_back(
              {{"n", n}, {"E_numeric", ev[n]}, {"E_exact", exact}, {"rel_error", rel}});
        }
        os << rows.dump(2) << '\n';
      } else {
        os << "n,E_numeric,E_exact,rel_error\n";
        for (int n = 0; n < or_k; ++n) {
          const double exact = energy(p, n);
          const double rel = std::abs(ev[n] - exact) / exact;
          all = all && rel <= or_tol;
          os << n << ',' << num(ev[n]) << ',' << num(exact) << ',' << num(rel) << '\n';
        }
      }
      return all ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
