#ifndef MCSL_SCENARIO_HPP
#define MCSL_SCENARIO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "mcsl/medium.hpp"
#include "mcsl/pulse.hpp"

namespace mcsl {

struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ProbeSpec {
  std::string label;
  double a = 1.0;
  double l0 = 0.0;
  double center = 0.0;  // envelope center at run.t0
  double theta = 0.0;
};

struct RunSpec {
  double t0 = 0.0;        // adiabatic init time
  double t_start = 0.0;   // MB start (boundary-drive runs begin earlier)
  int n_k = 1024;
  int n_z = 512;
  double dt = 0.0;        // 0 selects dz/c
  std::string mb_init = "manifold";  // or "drive"
  std::vector<double> snapshots;
  std::string out_dir = "out";
};

struct Scenario {
  MediumSpec medium;
  std::vector<ChannelSpec> channels;
  ControlSchedule schedule;
  ProbeSpec probe;
  RunSpec run;

  void validate() const;
  const ChannelSpec& probe_channel() const;
  GaussianPulseSpec pulse() const;  // probe pulse resolved at run.t0
};

Scenario parse_scenario(const std::string& json_text, const std::string& origin);
Scenario load_scenario(const std::string& path);

/// Deterministic "# key = value" echo of every resolved parameter.
std::string echo_parameters(const Scenario& sc);

}  // namespace mcsl

#endif
