#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "nested/ensemble.hpp"

namespace nested {

/// Evolving state of an ensemble after `step` synchronous updates.
///
/// Firing within a level always recruits the lowest ids first, so the firing
/// set of a step is stored as a per-level count of recruited members.
struct SimState {
  std::size_t step = 0;
  Eigen::VectorXd value;                 ///< accumulated signal, indexed by id - 1
  std::vector<std::size_t> fired_last;   ///< per level: members fired at `step`
  std::vector<bool> extinguished;        ///< per level: permanently switched off
  std::vector<std::size_t> driven_streak;///< per level: consecutive driven steps

  bool fired(const EnsembleConfig& config, std::size_t id) const;
  bool any_fired() const;
  /// Deepest level that fired at `step`, 0 when nothing fired.
  std::size_t deepest_firing_level() const;
};

/// All-zero state at step 0 with nothing fired.
SimState initial_state(const EnsembleConfig& config);

/// Excitatory input received by `id` during the step that produced `state`:
/// external drive plus one unit from each co-firing peer of its pattern.
double excitatory_input(const SimState& state, const EnsembleConfig& config,
                        std::size_t id);

/// Inhibitory input received by `id` during the step that produced `state`:
/// delta * unit for every firing neuron of a strictly deeper level. Silent
/// receivers are unaffected.
double inhibitory_input(const SimState& state, const EnsembleConfig& config,
                        std::size_t id);

/// Whether level 1 receives its external supply during the next step.
enum class Drive { Off, On };

/// One synchronous update with full recruitment.
///
/// Level 1 fires while driven and not extinguished; a deeper level fires while
/// its parent fired at the previous step. Firing neurons add
/// excitatory - inhibitory input (clamped at 0), silent neurons leak, and a
/// level that fired into a value <= 0 is extinguished for good.
///
/// Throws Error{InconsistentState} if `state` does not belong to `config` or
/// members of one level disagree in value.
SimState step(const SimState& state, const EnsembleConfig& config,
              Drive drive = Drive::On);

/// Like step(), but a driven level only recruits
/// max(1, floor(pattern_size * min(1, driven_streak / ramp))) members.
/// A level is extinguished once all its firing members are at <= 0.
SimState step_graded(const SimState& state, const EnsembleConfig& config,
                     std::size_t ramp, Drive drive = Drive::On);

struct TraceRow {
  std::size_t step = 0;
  std::size_t neuron_id = 0;
  std::size_t level = 0;
  double value = 0.0;
  bool fired = false;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

/// Rows in (step, neuron_id) order, one per neuron per step, starting with
/// the step-0 snapshot.
struct Trace {
  EnsembleConfig config;
  std::vector<TraceRow> rows;

  friend bool operator==(const Trace&, const Trace&) = default;
};

void append_rows(Trace& trace, const SimState& state);

Trace run(const EnsembleConfig& config);

/// Throws Error{InvalidRamp} when ramp == 0.
Trace run_graded(const EnsembleConfig& config, std::size_t ramp);

}  // namespace nested
