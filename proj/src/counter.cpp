#include "nested/counter.hpp"

#include "nested/dynamics.hpp"

namespace nested {

CounterNetwork build_counter(std::size_t levels, std::size_t pattern_size,
                             const SignalWeights& weights) {
  CounterNetwork network;
  network.group = build_ensemble(levels, pattern_size, weights);
  network.on_switch = build_ensemble(1, pattern_size, weights);
  network.off_switch = build_ensemble(1, pattern_size, weights);
  network.weights = weights;
  return network;
}

TickLog run_counter(const CounterNetwork& network, std::size_t max_steps) {
  const EnsembleConfig& group_cfg = network.group;
  SimState on = initial_state(network.on_switch);
  SimState off = initial_state(network.off_switch);
  SimState group = initial_state(group_cfg);

  TickLog log;
  std::vector<bool> ticked(group_cfg.levels, false);
  std::optional<std::size_t> innermost_first;

  for (std::size_t t = 1; t <= max_steps; ++t) {
    const bool on_fired = on.any_fired();
    const bool arm_off = innermost_first && *innermost_first + 1 == t;
    if (off.any_fired()) on.extinguished[0] = true;

    // The pulse at step 1 latches the on-switch until the off-switch fires.
    on = step(on, network.on_switch, Drive::On);
    group = step(group, group_cfg, on_fired ? Drive::On : Drive::Off);
    off = step(off, network.off_switch, arm_off ? Drive::On : Drive::Off);
    log.steps_run = t;

    for (std::size_t k = 0; k < group_cfg.levels; ++k) {
      if (group.fired_last[k] > 0 && !ticked[k]) {
        ticked[k] = true;
        log.ticks.push_back(TickEvent{k + 1, t});
        if (k + 1 == group_cfg.levels) innermost_first = t;
      }
    }
    if (off.any_fired() && !log.off_step) log.off_step = t;

    if (!on.any_fired() && !off.any_fired() && !group.any_fired()) {
      log.quiescent_step = t;
      return log;
    }
  }
  log.timed_out = true;
  return log;
}

}  // namespace nested
