#include "mcsl/scenario.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mcsl {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ScenarioError("scenario error at '" + where + "': " + what);
}

void check_keys(const json& j, const std::vector<std::string>& allowed,
                const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const auto& item : j.items())
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
      fail(where + "." + item.key(), "unknown key");
}

const json& need(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where + "." + key, "missing key");
  return *it;
}

double need_num(const json& j, const char* key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_number()) fail(where + "." + key, "expected a number");
  return v.get<double>();
}

double opt_num(const json& j, const char* key, const std::string& where, double def) {
  auto it = j.find(key);
  if (it == j.end()) return def;
  if (!it->is_number()) fail(where + "." + key, "expected a number");
  return it->get<double>();
}

std::string need_str(const json& j, const char* key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_string()) fail(where + "." + key, "expected a string");
  return v.get<std::string>();
}

std::vector<double> num_list(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) fail(where, "expected an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

void Scenario::validate() const {
  medium.validate();
  if (channels.empty()) throw ScenarioError("scenario error at 'channels': empty channel list");
  for (const auto& ch : channels) ch.validate();
  for (size_t i = 0; i < channels.size(); ++i)
    for (size_t j = i + 1; j < channels.size(); ++j)
      if (channels[i].label == channels[j].label)
        throw ScenarioError("scenario error at 'channels': duplicate label '" +
                            channels[i].label + "'");
  for (const auto& ch : channels)
    if (!schedule.has(ch.label))
      throw ScenarioError("scenario error at 'schedule': channel '" + ch.label +
                          "' has no schedule entry");
  for (const auto& ch : schedule.channels()) {
    bool known = false;
    for (const auto& c : channels) known |= (c.label == ch.label);
    if (!known)
      throw ScenarioError("scenario error at 'schedule." + ch.label +
                          "': label does not match any channel");
  }
  if (probe.label.empty())
    throw ScenarioError("scenario error at 'probe.label': missing key");
  const ChannelSpec& pc = probe_channel();
  if (pc.direction != Direction::Forward)
    throw ScenarioError("scenario error at 'probe.label': probe channel must be forward");
  if (!(probe.l0 > 0.0))
    throw ScenarioError("scenario error at 'probe.l0': must be > 0");
  if (run.t0 < schedule.start_time())
    throw ScenarioError("scenario error at 'run.t0': precedes the schedule domain");
  if (run.mb_init != "manifold" && run.mb_init != "drive")
    throw ScenarioError("scenario error at 'run.mb_init': expected 'manifold' or 'drive'");
}

const ChannelSpec& Scenario::probe_channel() const {
  for (const auto& ch : channels)
    if (ch.label == probe.label) return ch;
  throw ScenarioError("scenario error at 'probe.label': unknown channel '" + probe.label + "'");
}

GaussianPulseSpec Scenario::pulse() const {
  const ChannelSpec& pc = probe_channel();
  const double rabi = schedule.rabi(probe.label, run.t0);
  const double v_l = c_light * sq(rabi / pc.g) / medium.n_line;
  return GaussianPulseSpec::from_center(probe.label, probe.a, probe.l0, probe.center,
                                        probe.theta, v_l, run.t0);
}

Scenario parse_scenario(const std::string& json_text, const std::string& origin) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ScenarioError("scenario error in " + origin + ": " + e.what());
  }
  check_keys(root, {"medium", "channels", "schedule", "probe", "run"}, origin);

  Scenario sc;
  {
    const json& m = need(root, "medium", origin);
    check_keys(m, {"n_line", "length", "k0", "gamma12", "gamma2"}, origin + ".medium");
    sc.medium.n_line = need_num(m, "n_line", origin + ".medium");
    sc.medium.length = need_num(m, "length", origin + ".medium");
    sc.medium.k0 = need_num(m, "k0", origin + ".medium");
    sc.medium.gamma12 = need_num(m, "gamma12", origin + ".medium");
    sc.medium.gamma2 = need_num(m, "gamma2", origin + ".medium");
  }
  {
    const json& cl = need(root, "channels", origin);
    if (!cl.is_array()) fail(origin + ".channels", "expected an array");
    int idx = 0;
    for (const auto& c : cl) {
      const std::string where = origin + ".channels[" + std::to_string(idx++) + "]";
      check_keys(c, {"label", "direction", "g", "gamma", "delta", "omega_opt"}, where);
      ChannelSpec ch;
      ch.label = need_str(c, "label", where);
      const std::string dir = need_str(c, "direction", where);
      if (dir == "forward")
        ch.direction = Direction::Forward;
      else if (dir == "backward")
        ch.direction = Direction::Backward;
      else
        fail(where + ".direction", "expected 'forward' or 'backward'");
      ch.g = need_num(c, "g", where);
      ch.gamma = need_num(c, "gamma", where);
      ch.delta = need_num(c, "delta", where);
      ch.omega_opt = need_num(c, "omega_opt", where);
      sc.channels.push_back(std::move(ch));
    }
  }
  {
    const json& sch = need(root, "schedule", origin);
    if (!sch.is_object()) fail(origin + ".schedule", "expected an object");
    for (const auto& item : sch.items()) {
      const std::string where = origin + ".schedule." + item.key();
      check_keys(item.value(), {"phase", "breakpoints", "values"}, where);
      ControlSchedule::Channel ch;
      ch.label = item.key();
      ch.phase = opt_num(item.value(), "phase", where, 0.0);
      ch.breakpoints = num_list(need(item.value(), "breakpoints", where), where + ".breakpoints");
      ch.values = num_list(need(item.value(), "values", where), where + ".values");
      try {
        sc.schedule.add_channel(std::move(ch));
      } catch (const std::exception& e) {
        fail(where, e.what());
      }
    }
  }
  {
    const json& p = need(root, "probe", origin);
    check_keys(p, {"label", "a", "l0", "center", "theta"}, origin + ".probe");
    sc.probe.label = need_str(p, "label", origin + ".probe");
    sc.probe.a = need_num(p, "a", origin + ".probe");
    sc.probe.l0 = need_num(p, "l0", origin + ".probe");
    sc.probe.center = need_num(p, "center", origin + ".probe");
    sc.probe.theta = opt_num(p, "theta", origin + ".probe", 0.0);
  }
  if (root.contains("run")) {
    const json& r = root["run"];
    check_keys(r, {"t0", "t_start", "nk", "nz", "dt", "mb_init", "snapshots", "out"},
               origin + ".run");
    sc.run.t0 = opt_num(r, "t0", origin + ".run", sc.schedule.start_time());
    sc.run.t_start = opt_num(r, "t_start", origin + ".run", sc.run.t0);
    sc.run.n_k = static_cast<int>(opt_num(r, "nk", origin + ".run", 1024));
    sc.run.n_z = static_cast<int>(opt_num(r, "nz", origin + ".run", 512));
    sc.run.dt = opt_num(r, "dt", origin + ".run", 0.0);
    if (r.contains("mb_init")) sc.run.mb_init = need_str(r, "mb_init", origin + ".run");
    if (r.contains("snapshots"))
      sc.run.snapshots = num_list(r["snapshots"], origin + ".run.snapshots");
    if (r.contains("out")) sc.run.out_dir = need_str(r, "out", origin + ".run");
  } else {
    sc.run.t0 = sc.schedule.start_time();
    sc.run.t_start = sc.run.t0;
  }

  try {
    sc.validate();
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception& e) {
    throw ScenarioError(std::string("scenario error: ") + e.what());
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("scenario error: cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), path);
}

std::string echo_parameters(const Scenario& sc) {
  std::ostringstream os;
  os << "# medium.n_line = " << fmt(sc.medium.n_line) << "\n"
     << "# medium.length = " << fmt(sc.medium.length) << "\n"
     << "# medium.k0 = " << fmt(sc.medium.k0) << "\n"
     << "# medium.gamma12 = " << fmt(sc.medium.gamma12) << "\n"
     << "# medium.gamma2 = " << fmt(sc.medium.gamma2) << "\n";
  for (const auto& ch : sc.channels) {
    os << "# channel." << ch.label
       << " = direction:" << (ch.direction == Direction::Forward ? "forward" : "backward")
       << " g:" << fmt(ch.g) << " gamma:" << fmt(ch.gamma) << " delta:" << fmt(ch.delta)
       << " omega_opt:" << fmt(ch.omega_opt) << "\n";
  }
  for (const auto& ch : sc.schedule.channels()) {
    os << "# schedule." << ch.label << " = phase:" << fmt(ch.phase) << " points:";
    for (size_t i = 0; i < ch.breakpoints.size(); ++i)
      os << (i ? " " : "") << fmt(ch.breakpoints[i]) << ":" << fmt(ch.values[i]);
    os << "\n";
  }
  os << "# probe.label = " << sc.probe.label << "\n"
     << "# probe.a = " << fmt(sc.probe.a) << "\n"
     << "# probe.l0 = " << fmt(sc.probe.l0) << "\n"
     << "# probe.center = " << fmt(sc.probe.center) << "\n"
     << "# probe.theta = " << fmt(sc.probe.theta) << "\n"
     << "# run.t0 = " << fmt(sc.run.t0) << "\n"
     << "# run.t_start = " << fmt(sc.run.t_start) << "\n"
     << "# run.nk = " << sc.run.n_k << "\n"
     << "# run.nz = " << sc.run.n_z << "\n"
     << "# run.dt = " << fmt(sc.run.dt) << "\n"
     << "# run.mb_init = " << sc.run.mb_init << "\n";
  os << "# run.snapshots =";
  for (double t : sc.run.snapshots) os << " " << fmt(t);
  os << "\n";
  return os.str();
}

}  // namespace mcsl
