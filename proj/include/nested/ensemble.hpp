#pragma once

#include <cstddef>

#include "nested/error.hpp"

namespace nested {

/// Scalar signal constants shared by every neuron of an ensemble.
struct SignalWeights {
  double excitatory_unit = 1.0;  ///< signal sent by one firing peer per step
  double delta = 0.5;            ///< inhibitory weight relative to excitatory_unit
  double external_drive = 1.0;   ///< supply received by each firing neuron per step
  double leak = 0.0;             ///< fraction lost per step by non-firing neurons

  friend bool operator==(const SignalWeights&, const SignalWeights&) = default;
};

bool is_valid(const SignalWeights& weights) noexcept;

/// Static topology of a chain of nested patterns. Level 1 is the outermost
/// pattern; neuron ids are 1-based and contiguous, outermost level first.
struct EnsembleConfig {
  std::size_t levels = 0;
  std::size_t pattern_size = 0;
  std::size_t steps = 0;
  SignalWeights weights;

  std::size_t neuron_count() const noexcept { return levels * pattern_size; }

  friend bool operator==(const EnsembleConfig&, const EnsembleConfig&) = default;
};

struct NeuronRef {
  std::size_t id = 0;
  std::size_t level = 0;

  friend bool operator==(const NeuronRef&, const NeuronRef&) = default;
};

/// Throws Error{InvalidLevels | InvalidPatternSize | InvalidWeights}.
EnsembleConfig build_ensemble(std::size_t levels, std::size_t pattern_size,
                              const SignalWeights& weights, std::size_t steps = 0);

/// Re-checks a config assembled by hand (e.g. parsed from text).
void validate(const EnsembleConfig& config);

/// ceil(id / pattern_size). Throws Error{UnknownNeuron} when id is out of range.
std::size_t level_of(const EnsembleConfig& config, std::size_t id);

NeuronRef neuron_ref(const EnsembleConfig& config, std::size_t id);

/// Id of the member with 0-based index `member` in `level`.
std::size_t neuron_id(const EnsembleConfig& config, std::size_t level,
                      std::size_t member);

/// 1-based id of the first neuron of `level`.
inline std::size_t first_id(const EnsembleConfig& config, std::size_t level) {
  return (level - 1) * config.pattern_size + 1;
}

}  // namespace nested
