#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mcsl/csv.hpp"
#include "mcsl/runner.hpp"

namespace {

namespace fs = std::filesystem;

void write_file(const fs::path& dir, const std::string& name, const std::string& text) {
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
  std::cout << "wrote " << path.string() << "\n";
}

struct GlobalArgs {
  std::string scenario_path;
  std::string out_dir;
  int n_k = 0;
  int n_z = 0;
  long seed = 0;  // reserved; all computation is deterministic
};

mcsl::Scenario load(const GlobalArgs& g) {
  if (g.scenario_path.empty()) throw mcsl::ScenarioError("--scenario is required");
  mcsl::Scenario sc = mcsl::load_scenario(g.scenario_path);
  if (g.n_k > 0) sc.run.n_k = g.n_k;
  if (g.n_z > 0) sc.run.n_z = g.n_z;
  if (!g.out_dir.empty()) sc.run.out_dir = g.out_dir;
  return sc;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-color slow/stationary light laboratory"};
  app.require_subcommand(1);

  GlobalArgs g;
  app.add_option("--scenario", g.scenario_path, "scenario file (JSON)");
  app.add_option("--out", g.out_dir, "output directory");
  app.add_option("--nk", g.n_k, "spectral grid size override");
  app.add_option("--nz", g.n_z, "MB spatial cells override");
  app.add_option("--seed", g.seed, "reserved, unused (deterministic outputs)");

  auto* disp = app.add_subcommand("dispersion", "emit omega(k) sweep and design quantities");
  double disp_t = std::numeric_limits<double>::quiet_NaN();
  disp->add_option("--t", disp_t, "evaluation time (default run.t0)");

  auto* prop = app.add_subcommand("propagate", "spectral propagation snapshots");
  auto* gauss = app.add_subcommand("gaussian", "closed-form Gaussian engine table");
  auto* mb = app.add_subcommand("mb-check", "Maxwell-Bloch cross-validation");

  auto* two = app.add_subcommand("twophoton", "two-photon correlation tables");
  std::string fig2_list;
  double fig3_smax = 0.0, fig4_smax = 0.0;
  int fig3_n = 0, fig4_n = 0;
  double tp_a = 10.0, tp_b = 1.0;
  two->add_option("--a", tp_a, "pair correlation length (default 10)");
  two->add_option("--b", tp_b, "single-polariton length (default 1)");
  two->add_option("--fig2", fig2_list, "comma list of sqrt(s)/b values");
  two->add_option("--fig3", fig3_smax, "max spreading integral s");
  two->add_option("--fig3-n", fig3_n, "fig3 row count (default 201)");
  two->add_option("--fig4", fig4_smax, "max spreading integral s");
  two->add_option("--fig4-n", fig4_n, "fig4 row count (default 401)");

  auto* fig = app.add_subcommand("figure", "paper-default figure data");
  std::string fig_id;
  fig->add_option("id", fig_id, "fig2|fig3|fig4")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const fs::path out_dir = g.out_dir.empty() ? fs::path("out") : fs::path(g.out_dir);

    if (disp->parsed()) {
      mcsl::Scenario sc = load(g);
      const double t = std::isnan(disp_t) ? sc.run.t0 : disp_t;
      write_file(sc.run.out_dir, "dispersion.csv", mcsl::dispersion_csv(sc, t));
    } else if (prop->parsed()) {
      mcsl::Scenario sc = load(g);
      for (const auto& [name, text] : mcsl::propagate_csvs(sc))
        write_file(sc.run.out_dir, name, text);
    } else if (gauss->parsed()) {
      mcsl::Scenario sc = load(g);
      write_file(sc.run.out_dir, "gaussian.csv", mcsl::gaussian_csv(sc));
    } else if (mb->parsed()) {
      mcsl::Scenario sc = load(g);
      write_file(sc.run.out_dir, "mbcheck.csv", mcsl::mb_check_csv(sc));
    } else if (two->parsed()) {
      mcsl::TwoPhotonSpec spec{tp_a, tp_b, 0.0};
      bool any = false;
      if (!fig2_list.empty()) {
        any = true;
        for (const auto& [name, text] : mcsl::fig2_csvs(spec, parse_list(fig2_list), 161))
          write_file(out_dir, name, text);
      }
      if (fig3_smax > 0.0) {
        any = true;
        write_file(out_dir, "fig3.csv",
                   mcsl::fig3_csv(spec, fig3_smax, fig3_n > 1 ? fig3_n : 201));
      }
      if (fig4_smax > 0.0) {
        any = true;
        write_file(out_dir, "fig4.csv",
                   mcsl::fig4_csv(spec, fig4_smax, fig4_n > 1 ? fig4_n : 401));
      }
      if (!any) throw std::runtime_error("twophoton: pass --fig2, --fig3 or --fig4");
    } else if (fig->parsed()) {
      // Paper-default parameters a = 10 b, b = 1.
      mcsl::TwoPhotonSpec spec{10.0, 1.0, 0.0};
      if (fig_id == "fig2") {
        for (const auto& [name, text] : mcsl::fig2_csvs(spec, {5.0, 20.0, 40.0}, 161))
          write_file(out_dir, name, text);
      } else if (fig_id == "fig3") {
        write_file(out_dir, "fig3.csv", mcsl::fig3_csv(spec, 100.0, 201));
      } else if (fig_id == "fig4") {
        write_file(out_dir, "fig4.csv", mcsl::fig4_csv(spec, 400.0, 401));
      } else {
        throw std::runtime_error("unknown figure id '" + fig_id + "'");
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
