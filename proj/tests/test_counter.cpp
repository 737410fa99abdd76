#include <doctest.h>

#include "nested/counter.hpp"
#include "nested/dynamics.hpp"

using namespace nested;

TEST_CASE("three-level counter ticks once per level and shuts down") {
  const auto network = build_counter(3, 5);
  CHECK(network.neuron_count() == 25);
  CHECK(network.group.levels == 3);
  CHECK(network.on_switch.neuron_count() == 5);
  CHECK(network.off_switch.neuron_count() == 5);

  const TickLog log = run_counter(network, 32);
  REQUIRE(log.ticks.size() == 3);
  CHECK(log.ticks[0] == TickEvent{1, 2});
  CHECK(log.ticks[1] == TickEvent{2, 3});
  CHECK(log.ticks[2] == TickEvent{3, 4});
  REQUIRE(log.off_step);
  CHECK(*log.off_step == 5);
  REQUIRE(log.quiescent_step);
  // on-switch fires through step 5, level k last fires at 5 + k.
  CHECK(*log.quiescent_step == 9);
  CHECK(*log.quiescent_step <= 2 * 3 + 4);
  CHECK(!log.timed_out);
}

TEST_CASE("single-level counter ticks once") {
  const TickLog log = run_counter(build_counter(1, 1), 32);
  REQUIRE(log.ticks.size() == 1);
  CHECK(log.ticks[0] == TickEvent{1, 2});
  CHECK(*log.off_step == 3);
  CHECK(*log.quiescent_step == 5);
}

TEST_CASE("short horizon times out with a partial log") {
  const TickLog log = run_counter(build_counter(3, 5), 2);
  CHECK(log.timed_out);
  CHECK(log.ticks.size() == 1);
  CHECK(!log.off_step);
  CHECK(!log.quiescent_step);
  CHECK(log.steps_run == 2);
}

TEST_CASE("invalid counters are rejected") {
  auto kind = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::EmptyTrace;
  };
  CHECK(kind([] { build_counter(0, 5); }) == ErrorKind::InvalidLevels);
  CHECK(kind([] { build_counter(3, 0); }) == ErrorKind::InvalidPatternSize);
}

TEST_CASE("counter counts its nesting depth") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t size : {1, 3, 5}) {
      CAPTURE(n);
      CAPTURE(size);
      const TickLog log = run_counter(build_counter(n, size), 64);
      REQUIRE(log.ticks.size() == n);
      for (std::size_t k = 0; k < n; ++k) {
        CHECK(log.ticks[k].level == k + 1);
        if (k > 0) CHECK(log.ticks[k].step > log.ticks[k - 1].step);
      }
      REQUIRE(log.off_step);
      CHECK(*log.off_step > log.ticks.back().step);
      REQUIRE(log.quiescent_step);
      CHECK(*log.quiescent_step >= *log.off_step);
      CHECK(*log.quiescent_step <= 2 * n + 4);
    }
  }
}

TEST_CASE("a longer horizon does not change a quiescent log") {
  const TickLog short_run = run_counter(build_counter(4, 3), 20);
  const TickLog long_run = run_counter(build_counter(4, 3), 200);
  CHECK(short_run.ticks == long_run.ticks);
  CHECK(short_run.off_step == long_run.off_step);
  CHECK(short_run.quiescent_step == long_run.quiescent_step);
}
