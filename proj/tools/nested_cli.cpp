// Command-line front end: simulate, reproduce-table1, counter, economy, plot.

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nested/counter.hpp"
#include "nested/economy.hpp"
#include "nested/io.hpp"
#include "nested/table1.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nested firing-pattern ensemble simulator"};
  app.require_subcommand(1);

  std::string config_path, csv_path, json_path, svg_path;
  auto* simulate = app.add_subcommand("simulate", "Run a configured simulation and write its trace");
  simulate->add_option("--config", config_path, "key = value config file")->required();
  simulate->add_option("--out", csv_path, "CSV trace output (stdout when omitted)");
  simulate->add_option("--json", json_path, "JSON trace output");
  simulate->add_option("--svg", svg_path, "SVG strength plot output");

  auto* table1 = app.add_subcommand("reproduce-table1",
                                    "Check the 5x5 nested run against the embedded reference table");

  std::size_t levels = 0, pattern_size = 0, max_steps = 64;
  double delta = 0.5;
  auto* counter = app.add_subcommand("counter", "Run the nested-pattern counter and print its tick log");
  counter->add_option("--levels", levels, "nested levels")->required();
  counter->add_option("--pattern-size", pattern_size, "neurons per pattern")->required();
  counter->add_option("--max-steps", max_steps, "step horizon")->capture_default_str();
  counter->add_option("--delta", delta, "inhibitory weight")->capture_default_str();

  std::vector<double> radii;
  std::size_t nodes = 0;
  double separation = 0;
  auto* economy = app.add_subcommand("economy", "Compare inward and outward wiring costs");
  economy->add_option("--radii", radii, "ring radii, outermost first")->required()->delimiter(',');
  economy->add_option("--nodes", nodes, "nodes per ring")->required();
  economy->add_option("--separation", separation, "distance between group centers")->required();

  std::string plot_in, plot_out;
  auto* plot = app.add_subcommand("plot", "Render a CSV trace as an SVG strength plot");
  plot->add_option("--in", plot_in, "CSV trace")->required();
  plot->add_option("--out", plot_out, "SVG output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*simulate) {
      const nested::SimConfig config = nested::parse_config(read_file(config_path));
      const nested::Trace trace = nested::simulate(config);
      const std::string csv = nested::emit_trace_csv(trace);
      if (csv_path.empty()) std::cout << csv;
      else write_file(csv_path, csv);
      if (!json_path.empty()) write_file(json_path, nested::emit_trace_json(trace));
      if (!svg_path.empty()) write_file(svg_path, nested::render_strength_plot(trace));
      return 0;
    }
    if (*table1) return nested::reproduce_table1(std::cout);
    if (*counter) {
      nested::SignalWeights weights;
      weights.delta = delta;
      const auto network = nested::build_counter(levels, pattern_size, weights);
      const nested::TickLog log = nested::run_counter(network, max_steps);
      std::cout << nested::emit_tick_log_json(log);
      return log.timed_out ? 1 : 0;
    }
    if (*economy) {
      using nested::SearchMode;
      const auto inward = nested::build_layout(radii, nodes, separation, SearchMode::Inward);
      const auto outward = nested::build_layout(radii, nodes, separation, SearchMode::Outward);
      const auto in_cost = nested::wiring_cost(inward);
      const auto out_cost = nested::wiring_cost(outward);
      std::cout << nested::emit_economy_json(inward, in_cost, outward, out_cost);
      return 0;
    }
    if (*plot) {
      const nested::Trace trace = nested::parse_trace_csv(read_file(plot_in));
      write_file(plot_out, nested::render_strength_plot(trace));
      return 0;
    }
  } catch (const nested::Error& e) {
    std::cerr << "error [" << nested::to_string(e.kind()) << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
