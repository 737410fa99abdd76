#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nested/ensemble.hpp"

namespace nested {

/// Timer/counter built around a nested group: an on-switch pattern drives the
/// outermost level, the innermost level arms an off-switch, and the
/// off-switch shuts the on-switch down.
struct CounterNetwork {
  EnsembleConfig on_switch;   ///< single pattern, drive latched by a pulse
  EnsembleConfig off_switch;  ///< single pattern, fires once when armed
  EnsembleConfig group;       ///< the nested levels being counted
  SignalWeights weights;

  std::size_t neuron_count() const noexcept {
    return on_switch.neuron_count() + off_switch.neuron_count() +
           group.neuron_count();
  }
};

struct TickEvent {
  std::size_t level = 0;
  std::size_t step = 0;

  friend bool operator==(const TickEvent&, const TickEvent&) = default;
};

struct TickLog {
  std::vector<TickEvent> ticks;
  std::optional<std::size_t> off_step;
  std::optional<std::size_t> quiescent_step;
  std::size_t steps_run = 0;
  bool timed_out = false;
};

/// Throws Error{InvalidLevels | InvalidPatternSize | InvalidWeights}.
CounterNetwork build_counter(std::size_t levels, std::size_t pattern_size,
                             const SignalWeights& weights = {});

/// Runs until the first step with no firing anywhere, or until max_steps.
/// A run that does not go quiet is returned with timed_out set.
TickLog run_counter(const CounterNetwork& network, std::size_t max_steps);

}  // namespace nested
