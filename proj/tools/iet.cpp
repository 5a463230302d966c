// Command-line workbench for interval exchange maps: Rauzy-Veech induction,
// Zorich accelerations, growth diagnostics, the cohomological-equation
// solver, suspensions, the two loop families and seeded Monte Carlo probes.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "iet/families.hpp"
#include "iet/json_io.hpp"
#include "iet/mc.hpp"

using namespace iet;
namespace fs = std::filesystem;

namespace {

struct GlobalOpts {
  std::uint64_t seed = 1;
  std::string out_dir;
  std::string format = "json";
  int precision = 53;
};

double round_bits(double x, int bits) {
  if (bits >= 53 || x == 0 || !std::isfinite(x)) return x;
  int e = 0;
  double m = std::frexp(x, &e);
  m = std::ldexp(std::round(std::ldexp(m, bits)), -bits);
  return std::ldexp(m, e);
}

void round_floats(json& j, int bits) {
  if (j.is_number_float())
    j = round_bits(j.get<double>(), bits);
  else if (j.is_array() || j.is_object())
    for (auto& el : j) round_floats(el, bits);
}

void emit(const GlobalOpts& g, const std::string& name, json j) {
  round_floats(j, g.precision);
  if (g.out_dir.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  fs::create_directories(g.out_dir);
  std::ofstream f(fs::path(g.out_dir) / (name + ".json"));
  f << j.dump(2) << "\n";
}

void emit_csv(const GlobalOpts& g, const std::string& name,
              const std::string& header,
              const std::vector<std::vector<double>>& rows) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!g.out_dir.empty()) {
    fs::create_directories(g.out_dir);
    file.open(fs::path(g.out_dir) / (name + ".csv"));
    os = &file;
  } else if (g.format != "csv") {
    return;  // csv only on request when writing to stdout
  }
  *os << header << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      *os << (i ? "," : "") << round_bits(row[i], g.precision);
    *os << "\n";
  }
}

json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  json j;
  f >> j;
  return j;
}

Eigen::VectorXd lengths_as_vector(const Iem& t) {
  Eigen::VectorXd v(t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i)
    v(static_cast<int>(i)) = t.length(static_cast<int>(i)).get_d();
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interval exchange map workbench"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--seed", g.seed, "PRNG seed");
  app.add_option("--out", g.out_dir, "output directory");
  app.add_option("--format", g.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--precision", g.precision, "float mantissa bits in output");

  // diagram
  std::string base_path;
  bool reduced = false;
  auto* cmd_diagram = app.add_subcommand("diagram", "Rauzy diagram closure");
  cmd_diagram->add_option("--base", base_path, "combinatorial spec JSON")
      ->required();
  cmd_diagram->add_flag("--reduced", reduced, "quotient by renaming");

  // orbit
  std::string spec_path;
  std::size_t steps = 100;
  auto* cmd_orbit = app.add_subcommand("orbit", "Rauzy-Veech induction orbit");
  cmd_orbit->add_option("--spec", spec_path, "i.e.m. spec JSON")->required();
  cmd_orbit->add_option("--steps", steps, "number of basic steps");

  // accel
  int accel_d = 0;
  auto* cmd_accel = app.add_subcommand("accel", "Zorich-type acceleration");
  cmd_accel->add_option("--spec", spec_path, "i.e.m. spec JSON")->required();
  cmd_accel->add_option("--steps", steps, "raw induction budget");
  cmd_accel->add_option("--D", accel_d, "names per block (default d-1)");

  // roth
  auto* cmd_roth = app.add_subcommand("roth", "finite-horizon diagnostics");
  cmd_roth->add_option("--spec", spec_path, "i.e.m. spec JSON")->required();
  cmd_roth->add_option("--steps", steps, "raw induction budget");

  // solve
  std::string phi_path;
  std::size_t depth = 0;
  auto* cmd_solve = app.add_subcommand("solve", "cohomological equation");
  cmd_solve->add_option("--spec", spec_path, "i.e.m. spec JSON")->required();
  cmd_solve->add_option("--phi", phi_path, "piecewise data JSON")->required();
  cmd_solve->add_option("--depth", depth, "series depth (0 = auto)");

  // suspend / flow
  std::string tau_path;
  double flow_t = 0;
  std::string flow_scale;
  auto* cmd_suspend = app.add_subcommand("suspend", "suspension summary");
  cmd_suspend->add_option("--spec", spec_path, "i.e.m. spec JSON")->required();
  cmd_suspend->add_option("--tau", tau_path, "heights JSON")->required();
  auto* cmd_flow = app.add_subcommand("flow", "Teichmuller flow step");
  cmd_flow->add_option("--spec", spec_path, "i.e.m. spec JSON")->required();
  cmd_flow->add_option("--tau", tau_path, "heights JSON")->required();
  cmd_flow->add_option("--t", flow_t, "flow time (dyadic scale)");
  cmd_flow->add_option("--scale", flow_scale, "exact rational scale p/q");

  // family
  std::string family_name;
  long fam_n = 5, fam_n0 = 10;
  std::size_t fam_loops = 20, fam_k = 6;
  auto* cmd_family = app.add_subcommand("family", "loop-family certificates");
  cmd_family->add_option("name", family_name, "A or B")->required();
  cmd_family->add_option("--n", fam_n, "family A loop parameter");
  cmd_family->add_option("--loops", fam_loops, "family A loop count");
  cmd_family->add_option("--n0", fam_n0, "family B seed parameter");
  cmd_family->add_option("--k", fam_k, "family B loop count");

  // mc / probe-q47
  std::string mc_mode = "measure";
  std::string mc_top = "ABCD", mc_bottom = "DCBA";
  std::size_t mc_samples = 100, mc_depth = 15, mc_zorich = 20;
  double mc_a_thr = 0.25;
  auto* cmd_mc = app.add_subcommand("mc", "seeded Monte Carlo probes");
  cmd_mc->add_option("--mode", mc_mode, "measure|lyapunov")
      ->check(CLI::IsMember({"measure", "lyapunov"}));
  cmd_mc->add_option("--top", mc_top, "top row");
  cmd_mc->add_option("--bottom", mc_bottom, "bottom row");
  cmd_mc->add_option("--samples", mc_samples, "sample count");
  cmd_mc->add_option("--depth", mc_depth, "accelerated depth");
  cmd_mc->add_option("--zorich-depth", mc_zorich, "Zorich depth");
  cmd_mc->add_option("--a-threshold", mc_a_thr, "condition (a) verdict cut");
  auto* cmd_q47 = app.add_subcommand("probe-q47", "growth-comparison table");
  cmd_q47->add_option("--top", mc_top, "top row");
  cmd_q47->add_option("--bottom", mc_bottom, "bottom row");
  cmd_q47->add_option("--samples", mc_samples, "sample count");
  cmd_q47->add_option("--depth", mc_depth, "accelerated depth");

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();
  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_diagram) {
      CombinatorialData base = combo_from_json(load_json(base_path));
      RauzyDiagram dia = build_diagram(base);
      if (reduced)
        emit(g, "diagram", reduced_to_json(reduce_diagram(dia)));
      else
        emit(g, "diagram", diagram_to_json(dia));
    } else if (*cmd_orbit) {
      Iem t = iem_from_json(load_json(spec_path));
      CocycleOrbit orbit = iterate(t, steps);
      json j;
      j["names"] = orbit.name_string();
      json lam;
      for (std::size_t i = 0; i < t.dim(); ++i)
        lam[t.combo().symbol(static_cast<int>(i))] =
            to_string(orbit.lambda_at(orbit.size())[i]);
      j["lambda_final"] = lam;
      j["steps"] = orbit.size();
      j["halted"] = orbit.halted();
      if (orbit.halted()) {
        j["halt"] = {{"alpha", t.combo().symbol(orbit.halt_witness().alpha)},
                     {"beta", t.combo().symbol(orbit.halt_witness().beta)},
                     {"m", orbit.halt_witness().m}};
      }
      emit(g, "orbit", j);
      if (orbit.halted()) return 3;
    } else if (*cmd_accel) {
      Iem t = iem_from_json(load_json(spec_path));
      int d_param = accel_d > 0 ? accel_d : static_cast<int>(t.dim()) - 1;
      CocycleOrbit orbit = iterate(t, steps);
      AccelOrbit acc(orbit, d_param);
      json rows = json::array();
      for (std::size_t k = 1; k <= acc.block_count(); ++k) {
        rows.push_back({{"k", k},
                        {"nD", acc.breakpoint(k)},
                        {"Z_norm1", to_string(acc.z_block(k).sum_norm())},
                        {"Z_normInf", to_string(acc.z_block(k).sup_norm())},
                        {"Q_norm1", to_string(acc.q_prefix(k).sum_norm())}});
      }
      emit(g, "accel", rows);
    } else if (*cmd_roth) {
      Iem t = iem_from_json(load_json(spec_path));
      CocycleOrbit orbit = iterate(t, steps);
      AccelOrbit acc(orbit, static_cast<int>(t.dim()) - 1);
      RothReport rep = roth_diagnostics(acc, lengths_as_vector(t));
      emit(g, "roth", roth_to_json(rep));
      std::vector<std::vector<double>> rows;
      for (std::size_t k = 0; k < rep.a.ratio.size(); ++k) {
        double theta = k < rep.b.theta_hat.size() ? rep.b.theta_hat[k] : 0;
        rows.push_back({static_cast<double>(k + 1), rep.a.ratio[k], theta});
      }
      emit_csv(g, "roth_series", "k,a_ratio,theta_hat", rows);
    } else if (*cmd_solve) {
      Iem t = iem_from_json(load_json(spec_path));
      CocycleOrbit orbit = iterate(t, 100000);
      AccelOrbit acc(orbit, static_cast<int>(t.dim()) - 1);
      PiecewiseFunc phi = phi_from_json(load_json(phi_path), t);
      SolveOptions opt;
      opt.series_depth = depth;
      SolveReport rep = solve_cohomological(acc, phi, opt);
      emit(g, "solve", solve_to_json(rep));
      std::vector<std::vector<double>> rows;
      for (auto [n, v] : rep.psi)
        rows.push_back({static_cast<double>(n), -v});
      emit_csv(g, "birkhoff_sums", "N,S_N", rows);
    } else if (*cmd_suspend) {
      Iem t = iem_from_json(load_json(spec_path));
      std::vector<Rational> tau =
          tau_from_json(load_json(tau_path), t.combo());
      SuspensionData s = validate_suspension(t, tau);
      SurfaceSummary sum = surface_summary(t.combo());
      json j = surface_to_json(sum);
      j["area"] = s.area.get_d();
      j["area_exact"] = to_string(s.area);
      j["cell"] = zorich_cell(s);
      emit(g, "suspend", j);
    } else if (*cmd_flow) {
      Iem t = iem_from_json(load_json(spec_path));
      std::vector<Rational> tau =
          tau_from_json(load_json(tau_path), t.combo());
      SuspensionData s = validate_suspension(t, tau);
      SuspensionData moved =
          flow_scale.empty() ? teichmuller_flow_time(s, flow_t)
                             : teichmuller_flow(s, parse_rational(flow_scale));
      json j = iem_to_json(moved.iem);
      json taj;
      for (std::size_t i = 0; i < t.dim(); ++i)
        taj[t.combo().symbol(static_cast<int>(i))] = to_string(moved.tau[i]);
      j["tau"] = taj;
      j["area_exact"] = to_string(moved.area);
      j["cell"] = zorich_cell(moved);
      emit(g, "flow", j);
    } else if (*cmd_family) {
      if (family_name == "A" || family_name == "a") {
        std::vector<BigInt> ns(fam_loops, BigInt(fam_n));
        auto diag = family_a::diagnostics(ns);
        json j;
        j["n"] = fam_n;
        j["loops"] = fam_loops;
        j["matrix"] = matrix_to_json(family_a::m_matrix(fam_n));
        auto e = family_a::eigen_data(fam_n);
        j["eigen"] = {{"u_plus", e.u_plus},
                      {"u_minus", e.u_minus},
                      {"lam_u_plus", e.lam_u_plus},
                      {"lam_u_minus", e.lam_u_minus},
                      {"residual", e.residual},
                      {"transpose_convention", e.formula_matches_transpose}};
        j["roth"] = roth_to_json(diag.roth);
        emit(g, "family_a", j);
      } else if (family_name == "B" || family_name == "b") {
        auto cert = family_b::certificate(fam_n0, fam_k);
        json j;
        j["n0"] = fam_n0;
        j["k"] = fam_k;
        j["cluster_separation"] = cert.cluster_separation;
        j["dist_to_uA"] = cert.dist_to_uA;
        j["dist_to_uD"] = cert.dist_to_uD;
        j["drift"] = cert.drift;
        j["drift_scale"] = cert.drift_scale;
        j["growth_exponent"] = cert.growth_exponent;
        json cs = json::array();
        for (long kk = -1; kk <= 10; ++kk)
          cs.push_back(to_string(family_b::c_value(fam_n0, kk)));
        j["c_values"] = cs;
        j["roth"] = roth_to_json(family_b::diagnostics(fam_n0, 24));
        emit(g, "family_b", j);
      } else {
        throw std::invalid_argument("family must be A or B");
      }
    } else if (*cmd_mc) {
      ExperimentConfig cfg;
      cfg.seed = g.seed;
      cfg.samples = mc_samples;
      cfg.top = mc_top;
      cfg.bottom = mc_bottom;
      cfg.depth = mc_depth;
      cfg.zorich_depth = mc_zorich;
      cfg.a_threshold = mc_a_thr;
      if (mc_mode == "measure") {
        McReport rep = mc_full_measure(cfg);
        json j;
        j["completed"] = rep.completed;
        j["shallow"] = rep.shallow;
        j["frac_a"] = rep.frac_a;
        j["frac_b"] = rep.frac_b;
        j["frac_c"] = rep.frac_c;
        json rows = json::array();
        for (const auto& s : rep.samples)
          rows.push_back({{"index", s.index},
                          {"enough_depth", s.enough_depth},
                          {"blocks", s.blocks},
                          {"a", s.a_ok},
                          {"b", s.b_ok},
                          {"c", s.c_ok},
                          {"a_tail", s.a_tail},
                          {"theta_tail", s.theta_tail}});
        j["samples"] = rows;
        emit(g, "mc_measure", j);
      } else {
        LyapunovReport rep = mc_lyapunov(cfg);
        json j;
        j["top_mean"] = rep.top_mean;
        j["top_stderr"] = rep.top_stderr;
        j["gap_mean"] = rep.gap_mean;
        j["gap_stderr"] = rep.gap_stderr;
        j["completed"] = rep.completed;
        j["shallow"] = rep.shallow;
        j["tail_slope"] = rep.tail_slope;
        json tail = json::array();
        for (auto [n, p] : rep.tail) tail.push_back({{"N", n}, {"log2_p", p}});
        j["tail"] = tail;
        emit(g, "mc_lyapunov", j);
      }
    } else if (*cmd_q47) {
      ExperimentConfig cfg;
      cfg.seed = g.seed;
      cfg.samples = mc_samples;
      cfg.top = mc_top;
      cfg.bottom = mc_bottom;
      cfg.depth = mc_depth;
      Q47Report rep = probe_q47(cfg);
      json rows = json::array();
      for (const auto& r : rep.rows)
        rows.push_back({{"sample", r.sample},
                        {"k", r.k},
                        {"Znorm", r.log_z},
                        {"Qnorm", r.log_q},
                        {"C_hat", r.c_hat}});
      json j;
      j["rows"] = rows;
      j["tail_sup"] = rep.tail_sup;
      emit(g, "q47", j);
      std::vector<std::vector<double>> csv;
      for (const auto& r : rep.rows)
        csv.push_back({static_cast<double>(r.sample),
                       static_cast<double>(r.k), r.log_z, r.log_q, r.c_hat});
      emit_csv(g, "q47", "sample,k,Znorm,Qnorm,C_hat", csv);
    }
  } catch (const ConnexionHalt& e) {
    std::cerr << "connexion halt: " << e.what() << "\n";
    return 3;
  } catch (const SeriesDiverging& e) {
    std::cerr << "series diverging: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
