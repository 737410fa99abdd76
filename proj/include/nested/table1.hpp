#pragma once

#include <array>
#include <functional>
#include <iosfwd>

#include "nested/dynamics.hpp"

namespace nested {

/// Relative pattern strengths of 25 neurons (5 nested patterns of 5) at
/// steps 3, 4 and 5, with inhibition at half the excitatory weight.
inline constexpr std::array<std::size_t, 3> kTable1Steps{3, 4, 5};
extern const std::array<std::array<double, 3>, 25> kTable1Values;

inline constexpr double kTable1Tolerance = 1e-9;

/// 5 levels x 5 neurons, delta = 0.5, 5 steps.
EnsembleConfig table1_config();

using Engine = std::function<Trace(const EnsembleConfig&)>;

/// Runs `engine` on table1_config() and compares all 75 cells against the
/// embedded constants. Writes "N/75 cells match" plus one line per mismatch.
/// Returns 0 on a full match, 1 on any mismatch, 2 on an internal error.
int reproduce_table1(std::ostream& out, const Engine& engine = run);

}  // namespace nested
