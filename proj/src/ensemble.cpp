#include "nested/ensemble.hpp"

#include <cmath>
#include <string>

namespace nested {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidLevels: return "InvalidLevels";
    case ErrorKind::InvalidPatternSize: return "InvalidPatternSize";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::UnknownNeuron: return "UnknownNeuron";
    case ErrorKind::InconsistentState: return "InconsistentState";
    case ErrorKind::InvalidRamp: return "InvalidRamp";
    case ErrorKind::InvalidRadii: return "InvalidRadii";
    case ErrorKind::InvalidSeparation: return "InvalidSeparation";
    case ErrorKind::InvalidNodeCount: return "InvalidNodeCount";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::EmptyTrace: return "EmptyTrace";
  }
  return "Unknown";
}

bool is_valid(const SignalWeights& w) noexcept {
  return std::isfinite(w.excitatory_unit) && w.excitatory_unit > 0 &&
         std::isfinite(w.delta) && w.delta >= 0 &&
         std::isfinite(w.external_drive) && w.external_drive >= 0 &&
         w.leak >= 0 && w.leak <= 1;
}

void validate(const EnsembleConfig& config) {
  if (config.levels == 0) throw Error(ErrorKind::InvalidLevels, "levels must be at least 1");
  if (config.pattern_size == 0)
    throw Error(ErrorKind::InvalidPatternSize, "pattern_size must be at least 1");
  if (!is_valid(config.weights))
    throw Error(ErrorKind::InvalidWeights,
                "weights require excitatory_unit > 0, delta >= 0, external_drive >= 0, "
                "0 <= leak <= 1");
}

EnsembleConfig build_ensemble(std::size_t levels, std::size_t pattern_size,
                              const SignalWeights& weights, std::size_t steps) {
  EnsembleConfig config{levels, pattern_size, steps, weights};
  validate(config);
  return config;
}

std::size_t level_of(const EnsembleConfig& config, std::size_t id) {
  if (id == 0 || id > config.neuron_count())
    throw Error(ErrorKind::UnknownNeuron,
                "neuron " + std::to_string(id) + " outside 1.." +
                    std::to_string(config.neuron_count()));
  return (id + config.pattern_size - 1) / config.pattern_size;
}

NeuronRef neuron_ref(const EnsembleConfig& config, std::size_t id) {
  return NeuronRef{id, level_of(config, id)};
}

std::size_t neuron_id(const EnsembleConfig& config, std::size_t level, std::size_t member) {
  if (level == 0 || level > config.levels || member >= config.pattern_size)
    throw Error(ErrorKind::UnknownNeuron,
                "no member " + std::to_string(member) + " in level " + std::to_string(level));
  return first_id(config, level) + member;
}

}  // namespace nested
