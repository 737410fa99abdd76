#include "nested/dynamics.hpp"

#include <algorithm>
#include <string>

namespace nested {
namespace {

using Index = Eigen::Index;

Index offset(const EnsembleConfig& config, std::size_t level) {
  return static_cast<Index>((level - 1) * config.pattern_size);
}

void check_shape(const SimState& state, const EnsembleConfig& config) {
  const bool ok = state.value.size() == static_cast<Index>(config.neuron_count()) &&
                  state.fired_last.size() == config.levels &&
                  state.extinguished.size() == config.levels &&
                  state.driven_streak.size() == config.levels;
  if (!ok) throw Error(ErrorKind::InconsistentState, "state does not match the ensemble shape");
  for (std::size_t count : state.fired_last)
    if (count > config.pattern_size)
      throw Error(ErrorKind::InconsistentState, "more members fired than a pattern holds");
}

void check_level_symmetry(const SimState& state, const EnsembleConfig& config) {
  const auto size = static_cast<Index>(config.pattern_size);
  for (std::size_t level = 1; level <= config.levels; ++level) {
    const auto members = state.value.segment(offset(config, level), size);
    if (!(members.array() == members(0)).all())
      throw Error(ErrorKind::InconsistentState,
                  "members of level " + std::to_string(level) + " disagree in value");
  }
}

double excitation(std::size_t recruited, const SignalWeights& w) {
  return w.external_drive + static_cast<double>(recruited - 1) * w.excitatory_unit;
}

double inhibition(std::size_t deeper_firing, const SignalWeights& w) {
  return w.delta * w.excitatory_unit * static_cast<double>(deeper_firing);
}

template <typename Recruit>
SimState advance(const SimState& state, const EnsembleConfig& config, Drive drive,
                 Recruit recruit) {
  const std::size_t levels = config.levels;
  const SignalWeights& w = config.weights;

  SimState next = state;
  next.step = state.step + 1;
  for (std::size_t k = 0; k < levels; ++k) {
    const bool supplied = k == 0 ? drive == Drive::On : state.fired_last[k - 1] > 0;
    const bool driven = supplied && !state.extinguished[k];
    next.driven_streak[k] = driven ? state.driven_streak[k] + 1 : 0;
    next.fired_last[k] = driven ? recruit(next.driven_streak[k]) : 0;
  }

  // Firing neurons strictly deeper than each level.
  std::vector<std::size_t> deeper(levels, 0);
  for (std::size_t k = levels - 1; k > 0; --k) deeper[k - 1] = deeper[k] + next.fired_last[k];

  const auto size = static_cast<Index>(config.pattern_size);
  for (std::size_t k = 0; k < levels; ++k) {
    auto members = next.value.segment(offset(config, k + 1), size);
    const auto firing = static_cast<Index>(next.fired_last[k]);
    if (firing > 0) {
      const double net = excitation(next.fired_last[k], w) - inhibition(deeper[k], w);
      members.head(firing) = (members.head(firing).array() + net).max(0.0).matrix();
      if (members.head(firing).maxCoeff() <= 0.0) next.extinguished[k] = true;
    }
    members.tail(size - firing) *= 1.0 - w.leak;
  }
  return next;
}

}  // namespace

bool SimState::fired(const EnsembleConfig& config, std::size_t id) const {
  const std::size_t level = level_of(config, id);
  return id - first_id(config, level) < fired_last.at(level - 1);
}

bool SimState::any_fired() const {
  return std::any_of(fired_last.begin(), fired_last.end(), [](std::size_t n) { return n > 0; });
}

std::size_t SimState::deepest_firing_level() const {
  for (std::size_t k = fired_last.size(); k > 0; --k)
    if (fired_last[k - 1] > 0) return k;
  return 0;
}

SimState initial_state(const EnsembleConfig& config) {
  validate(config);
  SimState state;
  state.value = Eigen::VectorXd::Zero(static_cast<Index>(config.neuron_count()));
  state.fired_last.assign(config.levels, 0);
  state.extinguished.assign(config.levels, false);
  state.driven_streak.assign(config.levels, 0);
  return state;
}

double excitatory_input(const SimState& state, const EnsembleConfig& config, std::size_t id) {
  check_shape(state, config);
  if (!state.fired(config, id)) return 0.0;
  return excitation(state.fired_last[level_of(config, id) - 1], config.weights);
}

double inhibitory_input(const SimState& state, const EnsembleConfig& config, std::size_t id) {
  check_shape(state, config);
  if (!state.fired(config, id)) return 0.0;
  std::size_t deeper = 0;
  for (std::size_t k = level_of(config, id); k < config.levels; ++k) deeper += state.fired_last[k];
  return inhibition(deeper, config.weights);
}

SimState step(const SimState& state, const EnsembleConfig& config, Drive drive) {
  check_shape(state, config);
  check_level_symmetry(state, config);
  const std::size_t full = config.pattern_size;
  return advance(state, config, drive, [full](std::size_t) { return full; });
}

SimState step_graded(const SimState& state, const EnsembleConfig& config, std::size_t ramp,
                     Drive drive) {
  if (ramp == 0) throw Error(ErrorKind::InvalidRamp, "ramp must be at least 1");
  check_shape(state, config);
  const std::size_t size = config.pattern_size;
  return advance(state, config, drive, [size, ramp](std::size_t streak) {
    const std::size_t scaled = streak >= ramp ? size : size * streak / ramp;
    return std::max<std::size_t>(1, scaled);
  });
}

void append_rows(Trace& trace, const SimState& state) {
  const EnsembleConfig& config = trace.config;
  for (std::size_t id = 1; id <= config.neuron_count(); ++id) {
    trace.rows.push_back(TraceRow{state.step, id, level_of(config, id),
                                  state.value(static_cast<Index>(id - 1)),
                                  state.fired(config, id)});
  }
}

Trace run(const EnsembleConfig& config) {
  Trace trace{config, {}};
  SimState state = initial_state(config);
  trace.rows.reserve((config.steps + 1) * config.neuron_count());
  append_rows(trace, state);
  for (std::size_t t = 0; t < config.steps; ++t) {
    state = step(state, config);
    append_rows(trace, state);
  }
  return trace;
}

Trace run_graded(const EnsembleConfig& config, std::size_t ramp) {
  if (ramp == 0) throw Error(ErrorKind::InvalidRamp, "ramp must be at least 1");
  Trace trace{config, {}};
  SimState state = initial_state(config);
  trace.rows.reserve((config.steps + 1) * config.neuron_count());
  append_rows(trace, state);
  for (std::size_t t = 0; t < config.steps; ++t) {
    state = step_graded(state, config, ramp);
    append_rows(trace, state);
  }
  return trace;
}

}  // namespace nested
