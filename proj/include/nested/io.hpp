#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "nested/counter.hpp"
#include "nested/dynamics.hpp"
#include "nested/economy.hpp"

namespace nested {

enum class RunMode { Base, Graded };

/// A simulation request as read from a `key = value` config file.
struct SimConfig {
  EnsembleConfig ensemble;
  RunMode mode = RunMode::Base;
  std::size_t ramp = 0;  ///< only meaningful for RunMode::Graded

  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

/// Parses `key = value` lines; `#` starts a comment. Required keys: levels,
/// pattern_size, steps (and ramp when mode = graded).
///
/// Throws Error{ParseError} with the line number for malformed lines, unknown
/// keys or unparsable values, and Error{ValidationError} for missing keys or
/// invariant violations.
SimConfig parse_config(std::string_view text);

/// Inverse of parse_config(); every key is written explicitly.
std::string emit_config(const SimConfig& config);

/// Shortest decimal that round-trips, always with a fractional part
/// (5 -> "5.0", 7.5 -> "7.5").
std::string format_value(double value);

Trace simulate(const SimConfig& config);

/// Header `step,neuron_id,level,value,fired`, then one line per row.
std::string emit_trace_csv(const Trace& trace);

/// Reads CSV written by emit_trace_csv(). The config echo is reconstructed
/// from the rows (topology and horizon only). Throws Error{ParseError}.
Trace parse_trace_csv(std::string_view text);

/// Config echo plus rows.
std::string emit_trace_json(const Trace& trace);

std::string emit_tick_log_json(const TickLog& log);

std::string emit_cost_json(const Layout<double>& layout, const CostReport<double>& report);

/// Both modes side by side plus whether the inward total is smaller.
std::string emit_economy_json(const Layout<double>& inward, const CostReport<double>& inward_cost,
                              const Layout<double>& outward, const CostReport<double>& outward_cost);

/// SVG with one polyline per level (mean level value against step). A
/// single-step trace gets one marker per level. Throws Error{EmptyTrace}.
std::string render_strength_plot(const Trace& trace);

}  // namespace nested
