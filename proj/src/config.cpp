#include "wpmec/config.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace wpmec {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& key, const std::string& value) {
  if (value == "inf") return std::numeric_limits<double>::infinity();
  try {
    std::size_t used = 0;
    const double out = std::stod(value, &used);
    if (used != value.size()) throw ConfigError("trailing characters");
    return out;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': bad number '" + value + "'");
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size())
    throw ConfigError("config key '" + key + "': bad integer '" + value + "'");
  return out;
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ConfigError("config key '" + key + "': empty list entry");
    out.push_back(parse_number(key, item));
  }
  if (out.empty()) throw ConfigError("config key '" + key + "': empty list");
  return out;
}

void apply(CliConfig& c, const std::string& key, const std::string& value) {
  SystemParams& sys = c.scenario.sys;
  GeometryConfig& geom = c.scenario.geom;
  if (key == "channel") {
    if (value == "static")
      c.scenario.kind = ChannelKind::constant;
    else if (value == "fading")
      c.scenario.kind = ChannelKind::fading;
    else
      throw ConfigError("config key 'channel': expected static|fading, got '" + value + "'");
  } else if (key == "num_slots") {
    sys.num_slots = static_cast<std::size_t>(parse_u64(key, value));
  } else if (key == "slot_len") {
    sys.slot_len = parse_number(key, value);
  } else if (key == "bandwidth") {
    sys.bandwidth = parse_number(key, value);
  } else if (key == "noise_power") {
    sys.noise_power = parse_number(key, value);
  } else if (key == "eh_efficiency") {
    sys.eh_efficiency = parse_number(key, value);
  } else if (key == "cap_coeff") {
    sys.cap_coeff = parse_number(key, value);
  } else if (key == "cycles_per_bit") {
    sys.cycles_per_bit = parse_number(key, value);
  } else if (key == "online_gamma") {
    sys.online_gamma = parse_number(key, value);
  } else if (key == "snr_gap") {
    sys.snr_gap = parse_number(key, value);
  } else if (key == "a_max") {
    c.scenario.a_max = parse_number(key, value);
  } else if (key == "et_ap_distance") {
    geom.et_ap_distance = parse_number(key, value);
  } else if (key == "user_distance") {
    geom.user_distance = parse_number(key, value);
  } else if (key == "pathloss_ref_db") {
    geom.pathloss_ref_db = parse_number(key, value);
  } else if (key == "pathloss_exp") {
    geom.pathloss_exp = parse_number(key, value);
  } else if (key == "rician_factor") {
    geom.rician_factor = parse_number(key, value);
  } else if (key == "num_antennas") {
    geom.num_antennas = static_cast<std::size_t>(parse_u64(key, value));
  } else if (key == "seed") {
    c.scenario.rng.seed = parse_u64(key, value);
  } else if (key == "stream") {
    c.scenario.rng.stream = parse_u64(key, value);
  } else if (key == "arrivals") {
    c.arrivals = parse_list(key, value);
  } else if (key == "wpt_gains") {
    c.wpt_gains = parse_list(key, value);
  } else if (key == "offl_gains") {
    c.offl_gains = parse_list(key, value);
  } else if (key == "mean_arrival") {
    c.mean_arrival = parse_number(key, value);
  } else if (key == "mean_wpt") {
    c.mean_wpt = parse_number(key, value);
  } else if (key == "mean_offl") {
    c.mean_offl = parse_number(key, value);
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

}  // namespace

CliConfig parse_config(const std::string& text) {
  CliConfig config;
  std::stringstream ss(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    apply(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }

  config.scenario.sys.validate();
  config.scenario.geom.validate();
  const std::size_t n = config.scenario.sys.num_slots;
  for (const auto* list : {&config.arrivals, &config.wpt_gains, &config.offl_gains})
    if (list->has_value() && (*list)->size() != n)
      throw ConfigError("explicit trace length does not match num_slots");
  if (config.wpt_gains.has_value() != config.offl_gains.has_value())
    throw ConfigError("wpt_gains and offl_gains must be given together");
  return config;
}

CliConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

Instance build_instance(const CliConfig& config) {
  Instance inst;
  const std::size_t n = config.scenario.sys.num_slots;

  if (config.wpt_gains) {
    inst.channels.wpt_gain = *config.wpt_gains;
    inst.channels.offl_gain = *config.offl_gains;
    inst.channels.mean_wpt = config.scenario.geom.mean_wpt_gain();
    inst.channels.mean_offl = config.scenario.geom.mean_offl_gain();
  } else {
    Philox rng(config.scenario.rng.seed, config.scenario.rng.stream);
    inst.channels = gen_channels(config.scenario.geom, n, config.scenario.kind, rng);
  }
  if (config.mean_wpt) inst.channels.mean_wpt = *config.mean_wpt;
  if (config.mean_offl) inst.channels.mean_offl = *config.mean_offl;

  if (config.arrivals) {
    inst.tasks.arrivals = *config.arrivals;
    inst.tasks.mean_arrival = 0.5 * config.scenario.a_max;
  } else {
    Philox rng(config.scenario.rng.seed, config.scenario.rng.stream + 1);
    inst.tasks = gen_tasks(config.scenario.a_max, n, rng);
  }
  if (config.mean_arrival) inst.tasks.mean_arrival = *config.mean_arrival;

  inst.tasks.validate();
  inst.channels.validate();
  return inst;
}

}  // namespace wpmec
