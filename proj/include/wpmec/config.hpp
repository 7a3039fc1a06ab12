#ifndef WPMEC_CONFIG_HPP
#define WPMEC_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpmec/scenario.hpp"

namespace wpmec {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A scenario plus optional explicit per-slot traces. When a trace is
// given inline it overrides generation; its length must match num_slots.
struct CliConfig {
  ScenarioConfig scenario;
  std::optional<std::vector<double>> arrivals;
  std::optional<std::vector<double>> wpt_gains;
  std::optional<std::vector<double>> offl_gains;
  std::optional<double> mean_arrival;
  std::optional<double> mean_wpt;
  std::optional<double> mean_offl;
};

// Flat key-value config file: one `key = value` per line, `#` comments.
// SI base units except pathloss_ref_db (dB). Unknown keys are errors.
CliConfig load_config(const std::string& path);
CliConfig parse_config(const std::string& text);

// Materializes the instance: explicit traces when present, otherwise a
// seeded draw (channel stream = rng.stream, task stream = rng.stream + 1).
struct Instance {
  TaskTrace tasks;
  ChannelTrace channels;
};
Instance build_instance(const CliConfig& config);

}  // namespace wpmec

#endif  // WPMEC_CONFIG_HPP
