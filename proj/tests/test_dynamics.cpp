#include <doctest.h>

#include <random>

#include "nested/dynamics.hpp"
#include "nested/io.hpp"
#include "oracle/reference_replay.hpp"
#include "trace_utils.hpp"

using namespace nested;
using testutil::value_at;

namespace {

EnsembleConfig table1(std::size_t steps = 5, double delta = 0.5) {
  SignalWeights w;
  w.delta = delta;
  return build_ensemble(5, 5, w, steps);
}

SimState advance_to(const EnsembleConfig& config, std::size_t t) {
  SimState s = initial_state(config);
  while (s.step < t) s = step(s, config);
  return s;
}

double level_value(const SimState& s, const EnsembleConfig& config, std::size_t level) {
  return s.value(static_cast<Eigen::Index>(first_id(config, level) - 1));
}

// Level values of the 5x5, delta = 0.5 run for steps 6..12, produced by
// oracle::replay and frozen here.
constexpr double kContinuation[7][5] = {
    {0.0, 2.5, 7.5, 10.0, 10.0}, {0.0, 2.5, 7.5, 12.5, 15.0}, {0.0, 2.5, 7.5, 15.0, 20.0},
    {0.0, 2.5, 7.5, 15.0, 25.0}, {0.0, 2.5, 7.5, 15.0, 25.0}, {0.0, 2.5, 7.5, 15.0, 25.0},
    {0.0, 2.5, 7.5, 15.0, 25.0},
};

}  // namespace

TEST_CASE("excitatory input is drive plus one unit per co-firing peer") {
  const auto config = table1();
  const SimState s = advance_to(config, 3);
  CHECK(excitatory_input(s, config, 1) == 5.0);
  CHECK(excitatory_input(s, config, 13) == 5.0);
  CHECK(excitatory_input(s, config, 16) == 0.0);  // level 4 silent at t=3

  const auto single = build_ensemble(3, 1, SignalWeights{});
  const SimState s1 = advance_to(single, 1);
  CHECK(excitatory_input(s1, single, 1) == 1.0);
  CHECK_THROWS_AS(excitatory_input(s1, single, 4), Error);
}

TEST_CASE("inhibitory input counts firing neurons of deeper levels") {
  const auto config = table1();
  const SimState s3 = advance_to(config, 3);
  CHECK(inhibitory_input(s3, config, 1) == 5.0);
  CHECK(inhibitory_input(s3, config, 6) == 2.5);
  CHECK(inhibitory_input(s3, config, 11) == 0.0);  // deepest firing level
  CHECK(inhibitory_input(s3, config, 20) == 0.0);  // silent

  const SimState s5 = advance_to(config, 5);
  for (std::size_t id = 21; id <= 25; ++id) CHECK(inhibitory_input(s5, config, id) == 0.0);

  const auto free = table1(5, 0.0);
  const SimState f = advance_to(free, 5);
  for (std::size_t id = 1; id <= 25; ++id) CHECK(inhibitory_input(f, free, id) == 0.0);
}

TEST_CASE("step from t=2 reproduces the t=3 column") {
  const auto config = table1();
  const SimState s2 = advance_to(config, 2);
  const SimState s3 = step(s2, config);
  CHECK(s3.step == 3);
  const double expected[5] = {7.5, 7.5, 5.0, 0.0, 0.0};
  for (std::size_t level = 1; level <= 5; ++level) CHECK(level_value(s3, config, level) == expected[level - 1]);
}

TEST_CASE("step from t=5 extinguishes level 1 and keeps the cascade going") {
  const auto config = table1();
  const SimState s5 = advance_to(config, 5);
  CHECK(s5.extinguished[0]);
  const SimState s6 = step(s5, config);
  CHECK(s6.fired_last[0] == 0);
  for (std::size_t level = 1; level <= 5; ++level)
    CHECK(level_value(s6, config, level) == kContinuation[0][level - 1]);
}

TEST_CASE("a fully extinguished state is a fixed point") {
  const auto config = table1();
  SimState s = advance_to(config, 4);
  s.extinguished.assign(config.levels, true);
  const SimState next = step(s, config);
  CHECK(!next.any_fired());
  CHECK(next.value == s.value);
}

TEST_CASE("step rejects states that break level symmetry or shape") {
  const auto config = table1();
  SimState s = advance_to(config, 2);
  s.value(2) += 1.0;
  CHECK_THROWS_WITH_AS(step(s, config), doctest::Contains("level 1"), Error);
  try {
    step(s, config);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InconsistentState);
  }

  SimState wrong = initial_state(build_ensemble(2, 2, SignalWeights{}));
  CHECK_THROWS_AS(step(wrong, config), Error);
}

TEST_CASE("run matches the reference table in every cell") {
  const Trace trace = run(table1());
  CHECK(trace.rows.size() == 6 * 25);
  const double columns[3][5] = {{7.5, 7.5, 5.0, 0.0, 0.0},
                                {5.0, 7.5, 7.5, 5.0, 0.0},
                                {0.0, 5.0, 7.5, 7.5, 5.0}};
  for (std::size_t t = 3; t <= 5; ++t)
    for (std::size_t id = 1; id <= 25; ++id)
      CHECK(value_at(trace, t, id) == columns[t - 3][(id - 1) / 5]);
}

TEST_CASE("run with zero steps is the initial snapshot") {
  const Trace trace = run(table1(0));
  REQUIRE(trace.rows.size() == 25);
  for (const auto& row : trace.rows) {
    CHECK(row.step == 0);
    CHECK(row.value == 0.0);
    CHECK(!row.fired);
  }
}

TEST_CASE("continuation past the table collapses the chain") {
  const Trace trace = run(table1(12));
  const auto fired = testutil::firing_steps(trace);
  for (std::size_t level = 1; level <= 5; ++level) {
    REQUIRE(!fired[level - 1].empty());
    CHECK(fired[level - 1].front() == level);
    CHECK(fired[level - 1].back() == level + 4);
  }
  CHECK(!testutil::fired_at_or_after(trace, 10));
  for (std::size_t t = 6; t <= 12; ++t)
    for (std::size_t id = 1; id <= 25; ++id)
      CHECK(value_at(trace, t, id) == kContinuation[t - 6][(id - 1) / 5]);
}

TEST_CASE("frozen continuation agrees with the reference replay") {
  const auto snaps = oracle::replay(oracle::Params{}, 12);
  for (std::size_t t = 6; t <= 12; ++t)
    for (std::size_t level = 1; level <= 5; ++level)
      CHECK(snaps[t].value[(level - 1) * 5] == doctest::Approx(kContinuation[t - 6][level - 1]));
}

TEST_CASE("step agrees with the reference replay, including non-default weights") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.2, 2.0), drive(0.0, 3.0), delta(0.0, 1.5), leak(0.0, 0.5);
  std::uniform_int_distribution<std::size_t> levels(1, 6), size(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    oracle::Params p;
    p.levels = levels(rng);
    p.size = size(rng);
    p.unit = unit(rng);
    p.drive = drive(rng);
    p.delta = delta(rng);
    p.leak = trial % 2 ? leak(rng) : 0.0;
    const auto config = build_ensemble(p.levels, p.size, SignalWeights{p.unit, p.delta, p.drive, p.leak}, 15);
    const auto snaps = oracle::replay(p, 15);
    const Trace trace = run(config);
    for (std::size_t t = 0; t <= 15; ++t)
      for (std::size_t id = 1; id <= config.neuron_count(); ++id) {
        const auto& row = testutil::row_at(trace, t, id);
        REQUIRE(row.fired == snaps[t].fired[id - 1]);
        REQUIRE(std::abs(row.value - snaps[t].value[id - 1]) <= 1e-9);
      }
  }
}

TEST_CASE("graded mode with ramp 1 is the base mode") {
  for (std::size_t levels : {1, 3, 5})
    for (std::size_t size : {1, 4}) {
      const auto config = build_ensemble(levels, size, SignalWeights{}, 20);
      CHECK(run_graded(config, 1) == run(config));
    }
}

TEST_CASE("graded mode recruits lowest ids first and agrees with the reference replay") {
  const auto config = build_ensemble(5, 5, SignalWeights{}, 60);
  for (std::size_t ramp : {2, 3, 5, 10}) {
    oracle::Params p;
    p.ramp = ramp;
    const auto snaps = oracle::replay(p, 60);
    const Trace trace = run_graded(config, ramp);
    for (std::size_t t = 0; t <= 60; ++t)
      for (std::size_t id = 1; id <= 25; ++id) {
        const auto& row = testutil::row_at(trace, t, id);
        REQUIRE(row.fired == snaps[t].fired[id - 1]);
        REQUIRE(std::abs(row.value - snaps[t].value[id - 1]) <= 1e-9);
      }
    // ramp 5, first driven step of level 1 recruits exactly one member
    if (ramp == 5) {
      CHECK(testutil::row_at(trace, 1, 1).fired);
      CHECK(!testutil::row_at(trace, 1, 2).fired);
      CHECK(testutil::row_at(trace, 2, 2).fired);
    }
  }
}

TEST_CASE("graded mode switches the whole region off") {
  const auto config = build_ensemble(5, 5, SignalWeights{}, 60);
  const Trace trace = run_graded(config, 5);
  CHECK(!testutil::fired_at_or_after(trace, 60));
  CHECK_THROWS_AS(run_graded(config, 0), Error);
  CHECK_THROWS_AS(step_graded(initial_state(config), config, 0), Error);
}

TEST_CASE("without inhibition values follow pattern_size * (t - k + 1)") {
  for (std::size_t size = 1; size <= 6; ++size) {
    const auto config = build_ensemble(4, size, SignalWeights{1.0, 0.0, 1.0, 0.0}, 12);
    const Trace trace = run(config);
    for (std::size_t t = 0; t <= 12; ++t)
      for (std::size_t id = 1; id <= config.neuron_count(); ++id) {
        const double k = static_cast<double>(level_of(config, id));
        const double expected = static_cast<double>(size) * std::max(0.0, static_cast<double>(t) - k + 1);
        CHECK(value_at(trace, t, id) == expected);
      }
  }
}

TEST_CASE("leak decays silent neurons") {
  const auto config = build_ensemble(2, 2, SignalWeights{1.0, 0.5, 1.0, 0.5}, 3);
  SimState s = initial_state(config);
  s = step(s, config);  // level 1: 2.0
  CHECK(level_value(s, config, 1) == 2.0);
  s.extinguished[0] = true;
  s = step(s, config);  // level 1 silent, level 2 fires
  CHECK(level_value(s, config, 1) == 1.0);
  CHECK(level_value(s, config, 2) == 2.0);
}

TEST_CASE("identical configs give identical traces") {
  const auto config = table1(15);
  CHECK(emit_trace_csv(run(config)) == emit_trace_csv(run(config)));
}
