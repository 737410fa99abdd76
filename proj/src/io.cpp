#include "nested/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

#include <json.hpp>

namespace nested {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto end = text.find('\n');
    lines.push_back(text.substr(0, end));
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

template <typename T>
std::optional<T> parse_number(std::string_view token) {
  T value{};
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || token.empty()) return std::nullopt;
  return value;
}

enum class Key { Levels, PatternSize, Delta, ExcitatoryUnit, ExternalDrive, Leak, Steps, Mode, Ramp };

const std::map<std::string_view, Key> kKeys{
    {"levels", Key::Levels},     {"pattern_size", Key::PatternSize},
    {"delta", Key::Delta},       {"excitatory_unit", Key::ExcitatoryUnit},
    {"external_drive", Key::ExternalDrive},
    {"leak", Key::Leak},         {"steps", Key::Steps},
    {"mode", Key::Mode},         {"ramp", Key::Ramp},
};

json config_json(const EnsembleConfig& c) {
  return json{{"levels", c.levels},
              {"pattern_size", c.pattern_size},
              {"steps", c.steps},
              {"weights",
               {{"excitatory_unit", c.weights.excitatory_unit},
                {"delta", c.weights.delta},
                {"external_drive", c.weights.external_drive},
                {"leak", c.weights.leak}}}};
}

json cost_json(const Layout<double>& layout, const CostReport<double>& report) {
  return json{{"mode", to_string(layout.mode)},
              {"radii", layout.radii},
              {"nodes_per_ring", layout.nodes_per_ring},
              {"separation", layout.separation},
              {"intra_a", report.intra_a},
              {"intra_b", report.intra_b},
              {"inter", report.inter},
              {"total", report.total}};
}

}  // namespace

SimConfig parse_config(std::string_view text) {
  SimConfig config;
  SignalWeights& w = config.ensemble.weights;
  std::map<Key, std::size_t> seen;

  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    std::string_view line = lines[i];
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      parse_error(lineno, "expected 'key = value', got '" + std::string(line) + "'");
    const std::string_view name = trim(line.substr(0, eq));
    const std::string_view token = trim(line.substr(eq + 1));

    const auto it = kKeys.find(name);
    if (it == kKeys.end()) parse_error(lineno, "unknown key '" + std::string(name) + "'");
    const Key key = it->second;
    if (seen.contains(key))
      parse_error(lineno, "duplicate key '" + std::string(name) + "' (first on line " +
                              std::to_string(seen[key]) + ")");
    seen[key] = lineno;

    auto count = [&]() {
      const auto v = parse_number<std::size_t>(token);
      if (!v) parse_error(lineno, "expected a non-negative integer, got '" + std::string(token) + "'");
      return *v;
    };
    auto real = [&]() {
      const auto v = parse_number<double>(token);
      if (!v) parse_error(lineno, "expected a number, got '" + std::string(token) + "'");
      return *v;
    };

    switch (key) {
      case Key::Levels: config.ensemble.levels = count(); break;
      case Key::PatternSize: config.ensemble.pattern_size = count(); break;
      case Key::Steps: config.ensemble.steps = count(); break;
      case Key::Ramp: config.ramp = count(); break;
      case Key::Delta: w.delta = real(); break;
      case Key::ExcitatoryUnit: w.excitatory_unit = real(); break;
      case Key::ExternalDrive: w.external_drive = real(); break;
      case Key::Leak: w.leak = real(); break;
      case Key::Mode:
        if (token == "base") config.mode = RunMode::Base;
        else if (token == "graded") config.mode = RunMode::Graded;
        else parse_error(lineno, "mode must be 'base' or 'graded', got '" + std::string(token) + "'");
        break;
    }
  }

  for (const auto& [name, key] : {std::pair{"levels", Key::Levels},
                                  std::pair{"pattern_size", Key::PatternSize},
                                  std::pair{"steps", Key::Steps}}) {
    if (!seen.contains(key))
      throw Error(ErrorKind::ValidationError, std::string("missing required key '") + name + "'");
  }
  if (config.mode == RunMode::Graded && config.ramp == 0)
    throw Error(ErrorKind::ValidationError, "mode = graded requires ramp >= 1");
  try {
    validate(config.ensemble);
  } catch (const Error& e) {
    throw Error(ErrorKind::ValidationError, e.what());
  }
  return config;
}

std::string format_value(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  std::string out(buf, ptr);
  if (out.find_first_of(".eni") == std::string::npos) out += ".0";
  return out;
}

std::string emit_config(const SimConfig& config) {
  const EnsembleConfig& c = config.ensemble;
  std::ostringstream out;
  out << "levels = " << c.levels << '\n'
      << "pattern_size = " << c.pattern_size << '\n'
      << "steps = " << c.steps << '\n'
      << "delta = " << format_value(c.weights.delta) << '\n'
      << "excitatory_unit = " << format_value(c.weights.excitatory_unit) << '\n'
      << "external_drive = " << format_value(c.weights.external_drive) << '\n'
      << "leak = " << format_value(c.weights.leak) << '\n'
      << "mode = " << (config.mode == RunMode::Graded ? "graded" : "base") << '\n';
  if (config.mode == RunMode::Graded || config.ramp != 0) out << "ramp = " << config.ramp << '\n';
  return out.str();
}

Trace simulate(const SimConfig& config) {
  return config.mode == RunMode::Graded ? run_graded(config.ensemble, config.ramp)
                                        : run(config.ensemble);
}

std::string emit_trace_csv(const Trace& trace) {
  std::string out = "step,neuron_id,level,value,fired\n";
  out.reserve(out.size() + trace.rows.size() * 20);
  for (const TraceRow& row : trace.rows) {
    out += std::to_string(row.step);
    out += ',';
    out += std::to_string(row.neuron_id);
    out += ',';
    out += std::to_string(row.level);
    out += ',';
    out += format_value(row.value);
    out += row.fired ? ",true\n" : ",false\n";
  }
  return out;
}

Trace parse_trace_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || trim(lines[0]) != "step,neuron_id,level,value,fired")
    parse_error(1, "expected header 'step,neuron_id,level,value,fired'");

  Trace trace;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string_view line = trim(lines[i]);
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t comma; (comma = line.find(',', start)) != std::string_view::npos;
         start = comma + 1)
      fields.push_back(line.substr(start, comma - start));
    fields.push_back(line.substr(start));
    if (fields.size() != 5) parse_error(i + 1, "expected 5 fields, got " + std::to_string(fields.size()));

    TraceRow row;
    const auto step = parse_number<std::size_t>(fields[0]);
    const auto id = parse_number<std::size_t>(fields[1]);
    const auto level = parse_number<std::size_t>(fields[2]);
    const auto value = parse_number<double>(fields[3]);
    if (!step || !id || !level || !value)
      parse_error(i + 1, "malformed row '" + std::string(line) + "'");
    if (fields[4] != "true" && fields[4] != "false")
      parse_error(i + 1, "fired must be true or false, got '" + std::string(fields[4]) + "'");
    row.step = *step;
    row.neuron_id = *id;
    row.level = *level;
    row.value = *value;
    row.fired = fields[4] == "true";
    trace.rows.push_back(row);
  }

  if (!trace.rows.empty()) {
    EnsembleConfig& c = trace.config;
    std::size_t max_id = 0;
    for (const TraceRow& row : trace.rows) {
      c.levels = std::max(c.levels, row.level);
      c.steps = std::max(c.steps, row.step);
      max_id = std::max(max_id, row.neuron_id);
    }
    c.pattern_size = c.levels > 0 ? max_id / c.levels : 0;
  }
  return trace;
}

std::string emit_trace_json(const Trace& trace) {
  json rows = json::array();
  for (const TraceRow& row : trace.rows)
    rows.push_back({{"step", row.step},
                    {"neuron_id", row.neuron_id},
                    {"level", row.level},
                    {"value", row.value},
                    {"fired", row.fired}});
  return json{{"config", config_json(trace.config)}, {"rows", std::move(rows)}}.dump(1) + "\n";
}

std::string emit_tick_log_json(const TickLog& log) {
  json ticks = json::array();
  for (const TickEvent& tick : log.ticks) ticks.push_back({{"level", tick.level}, {"step", tick.step}});
  json out{{"ticks", std::move(ticks)},
           {"off_step", nullptr},
           {"quiescent_step", nullptr},
           {"steps_run", log.steps_run},
           {"timed_out", log.timed_out}};
  if (log.off_step) out["off_step"] = *log.off_step;
  if (log.quiescent_step) out["quiescent_step"] = *log.quiescent_step;
  return out.dump(2) + "\n";
}

std::string emit_cost_json(const Layout<double>& layout, const CostReport<double>& report) {
  return cost_json(layout, report).dump(2) + "\n";
}

std::string emit_economy_json(const Layout<double>& inward, const CostReport<double>& inward_cost,
                              const Layout<double>& outward, const CostReport<double>& outward_cost) {
  const json out{{"inward", cost_json(inward, inward_cost)},
                 {"outward", cost_json(outward, outward_cost)},
                 {"inward_more_economic", inward_cost.total < outward_cost.total}};
  return out.dump(2) + "\n";
}

}  // namespace nested
