#include "nested/table1.hpp"

#include <cmath>
#include <exception>
#include <map>
#include <ostream>
#include <utility>

namespace nested {

// Rows are neurons 1..25, columns are steps 3, 4, 5.
const std::array<std::array<double, 3>, 25> kTable1Values{{
    {7.5, 5.0, 0.0}, {7.5, 5.0, 0.0}, {7.5, 5.0, 0.0}, {7.5, 5.0, 0.0}, {7.5, 5.0, 0.0},
    {7.5, 7.5, 5.0}, {7.5, 7.5, 5.0}, {7.5, 7.5, 5.0}, {7.5, 7.5, 5.0}, {7.5, 7.5, 5.0},
    {5.0, 7.5, 7.5}, {5.0, 7.5, 7.5}, {5.0, 7.5, 7.5}, {5.0, 7.5, 7.5}, {5.0, 7.5, 7.5},
    {0.0, 5.0, 7.5}, {0.0, 5.0, 7.5}, {0.0, 5.0, 7.5}, {0.0, 5.0, 7.5}, {0.0, 5.0, 7.5},
    {0.0, 0.0, 5.0}, {0.0, 0.0, 5.0}, {0.0, 0.0, 5.0}, {0.0, 0.0, 5.0}, {0.0, 0.0, 5.0},
}};

EnsembleConfig table1_config() {
  return build_ensemble(5, 5, SignalWeights{1.0, 0.5, 1.0, 0.0}, 5);
}

int reproduce_table1(std::ostream& out, const Engine& engine) {
  try {
    const Trace trace = engine(table1_config());

    std::map<std::pair<std::size_t, std::size_t>, double> cells;
    for (const TraceRow& row : trace.rows) cells[{row.step, row.neuron_id}] = row.value;

    std::size_t matched = 0;
    std::size_t total = 0;
    std::string diffs;
    for (std::size_t id = 1; id <= kTable1Values.size(); ++id) {
      for (std::size_t c = 0; c < kTable1Steps.size(); ++c) {
        ++total;
        const double expected = kTable1Values[id - 1][c];
        const auto it = cells.find({kTable1Steps[c], id});
        if (it != cells.end() && std::abs(it->second - expected) <= kTable1Tolerance) {
          ++matched;
          continue;
        }
        diffs += "  neuron " + std::to_string(id) + " t=" + std::to_string(kTable1Steps[c]) +
                 ": expected " + std::to_string(expected) + ", got " +
                 (it == cells.end() ? std::string("missing") : std::to_string(it->second)) + "\n";
      }
    }
    out << matched << "/" << total << " cells match\n" << diffs;
    return matched == total ? 0 : 1;
  } catch (const std::exception& e) {
    out << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace nested
