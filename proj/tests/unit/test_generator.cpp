#include <cmath>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "ltsd/generator.hpp"
#include "test_support.hpp"

using ltsd::action;
using ltsd::generate;
using ltsd::generator_params;
using ltsd::lts;
using ltsd::state_id;

TEST_CASE("equal parameters give byte-identical systems") {
  generator_params opt;
  opt.states = 20;
  opt.actions = 4;
  opt.density = 2.0;
  opt.internal_weight = 1;
  opt.seed = 42;
  CHECK(generate(opt) == generate(opt));

  generator_params other = opt;
  other.seed = 43;
  CHECK_FALSE(generate(opt) == generate(other));
}

TEST_CASE("density zero means no transitions at all") {
  generator_params opt;
  opt.states = 10;
  opt.actions = 3;
  opt.density = 0.0;
  opt.seed = 7;
  lts m = generate(opt);
  CHECK(m.transitions().empty());
  // the alphabet is still the full label range
  CHECK(m.alphabet() == test_support::labels({"a0", "a1", "a2"}));
}

TEST_CASE("any positive density keeps every state reachable") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    generator_params opt;
    opt.states = 2 + static_cast<state_id>(seed % 17);
    opt.actions = 1 + static_cast<std::uint32_t>(seed % 3);
    opt.density = 0.1 + 0.5 * static_cast<double>(seed % 4);
    opt.internal_weight = seed % 2 ? 1 : 0;
    opt.seed = seed;
    lts m = generate(opt);
    CAPTURE(seed);
    CHECK(test_support::reachable_count(m) == m.num_states());
    CHECK(m.initial() == 0);
  }
}

TEST_CASE("transition counts stay within the configured budget") {
  generator_params opt;
  opt.states = 30;
  opt.actions = 3;
  opt.density = 1.5;
  opt.seed = 11;
  lts m = generate(opt);
  // spanning tree (states - 1) plus floor(density * states) extras, as upper
  // bound since duplicate draws collapse
  CHECK(m.transitions().size() <= (30 - 1) + 45);
  CHECK(m.transitions().size() >= 30 - 1);
}

TEST_CASE("the alphabet follows the prefix and action count") {
  generator_params opt;
  opt.states = 4;
  opt.actions = 2;
  opt.label_prefix = "job";
  opt.seed = 3;
  lts m = generate(opt);
  CHECK(m.alphabet() == test_support::labels({"job0", "job1"}));
  for (const auto& t : m.transitions()) {
    if (!t.act.is_internal()) CHECK(m.alphabet().count(t.act) == 1);
  }
}

TEST_CASE("internal weight controls whether internal steps appear") {
  generator_params opt;
  opt.states = 12;
  opt.actions = 2;
  opt.density = 2.0;

  opt.internal_weight = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    opt.seed = seed;
    CHECK_FALSE(generate(opt).has_internal_transitions());
  }

  opt.internal_weight = 3;
  bool saw_internal = false;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    opt.seed = seed;
    saw_internal |= generate(opt).has_internal_transitions();
  }
  CHECK(saw_internal);
}

TEST_CASE("generated systems never use co-action labels") {
  generator_params opt;
  opt.states = 15;
  opt.actions = 3;
  opt.density = 2.5;
  opt.internal_weight = 1;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    opt.seed = seed;
    CHECK_FALSE(generate(opt).has_co_labels());
  }
}

TEST_CASE("deterministic mode yields at most one move per state and label") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    generator_params opt;
    opt.states = 10;
    opt.actions = 2;
    opt.density = 3.0;
    opt.deterministic = true;
    opt.seed = seed;
    lts m = generate(opt);

    std::set<std::pair<state_id, action>> slots;
    for (const auto& t : m.transitions())
      CHECK(slots.insert({t.src, t.act}).second);
    CAPTURE(seed);
    CHECK(test_support::reachable_count(m) == m.num_states());
  }
}

TEST_CASE("parameter validation") {
  generator_params opt;

  SUBCASE("at least one state") {
    opt.states = 0;
    CHECK_THROWS_AS(generate(opt), std::invalid_argument);
  }
  SUBCASE("at least one action") {
    opt.actions = 0;
    CHECK_THROWS_AS(generate(opt), std::invalid_argument);
  }
  SUBCASE("density must be finite and non-negative") {
    opt.density = -1.0;
    CHECK_THROWS_AS(generate(opt), std::invalid_argument);
    opt.density = std::nan("");
    CHECK_THROWS_AS(generate(opt), std::invalid_argument);
  }
  SUBCASE("the prefix must form valid labels") {
    opt.label_prefix = "!x";
    CHECK_THROWS_AS(generate(opt), std::invalid_argument);
  }
}
