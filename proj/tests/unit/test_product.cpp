#include <set>

#include "doctest.h"
#include "ltsd/generator.hpp"
#include "ltsd/product.hpp"
#include "test_support.hpp"

using ltsd::action;
using ltsd::lts;
using ltsd::state_id;
using ltsd::sync_product;
using test_support::make_lts;

TEST_CASE("complementary labels fire jointly as one internal step") {
  lts left = make_lts(2, 0, {{0, "a", 1}});
  lts right = make_lts(2, 0, {{0, "!a", 1}});
  auto [system, map] = sync_product(left, right);

  CHECK(system.num_states() == 2);
  REQUIRE(system.transitions().size() == 1);
  CHECK(system.transitions().front() == ltsd::transition{0, action::tau(), 1});
  // both "a" and "!a" are synchronised away
  CHECK(system.alphabet().empty());
  CHECK(map[0] == std::pair<state_id, state_id>{0, 0});
  CHECK(map[1] == std::pair<state_id, state_id>{1, 1});
}

TEST_CASE("a label fires alone only when the other side lacks its co-action") {
  // left offers a and b; right's alphabet contains !a but never offers it
  lts left = make_lts(3, 0, {{0, "a", 1}, {0, "b", 2}});
  lts right = lts(1, 0, {}, std::set<action>{action::co("a")});
  auto [system, map] = sync_product(left, right);

  // "a" must synchronise but never finds a partner; "b" moves alone
  REQUIRE(system.transitions().size() == 1);
  CHECK(system.transitions().front().act == action::visible("b"));
  CHECK(system.num_states() == 2);
  CHECK(system.alphabet() == test_support::labels({"b"}));
}

TEST_CASE("product alphabet drops synchronised labels and keeps lone ones") {
  lts left = make_lts(2, 0, {{0, "a", 1}, {0, "c", 1}});
  lts right = make_lts(2, 0, {{0, "!a", 1}, {0, "d", 1}});
  auto [system, map] = sync_product(left, right);
  CHECK(system.alphabet() == test_support::labels({"c", "d"}));
}

TEST_CASE("internal steps interleave freely") {
  lts left = make_lts(2, 0, {{0, "tau", 1}});
  lts right = make_lts(2, 0, {{0, "tau", 1}});
  auto [system, map] = sync_product(left, right);

  CHECK(system.num_states() == 4);
  CHECK(system.transitions().size() == 4);
  for (const auto& t : system.transitions()) CHECK(t.act.is_internal());
  // left moves are explored before right moves
  CHECK(map[1] == std::pair<state_id, state_id>{1, 0});
  CHECK(map[2] == std::pair<state_id, state_id>{0, 1});
  CHECK(map[3] == std::pair<state_id, state_id>{1, 1});
}

TEST_CASE("only the reachable part is built") {
  lts left = make_lts(3, 0, {{0, "a", 1}, {2, "a", 0}});
  lts right = make_lts(2, 0, {{0, "b", 1}, {1, "b", 0}});
  auto [system, map] = sync_product(left, right);
  // pairs containing left state 2 are unreachable
  for (state_id s = 0; s < map.size(); ++s) CHECK(map[s].first != 2);
}

TEST_CASE("numbering is breadth-first from the initial pair") {
  lts left = make_lts(3, 0, {{0, "a", 1}, {1, "b", 2}});
  lts right = make_lts(1, 0, {});
  auto [system, map] = sync_product(left, right);
  CHECK(map[0] == std::pair<state_id, state_id>{0, 0});
  CHECK(map[1] == std::pair<state_id, state_id>{1, 0});
  CHECK(map[2] == std::pair<state_id, state_id>{2, 0});
  CHECK(system.initial() == 0);
}

TEST_CASE("synchronised labels never appear on product transitions") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    ltsd::generator_params opt;
    opt.states = 8;
    opt.actions = 3;
    opt.density = 1.5;
    opt.seed = seed;
    lts a = ltsd::generate(opt);
    opt.seed = seed + 1000;
    opt.label_prefix = "b";
    lts b = ltsd::generate(opt);
    lts partner = test_support::inject_co_labels(a, b, seed);

    auto [system, map] = sync_product(a, partner);
    for (const auto& t : system.transitions()) {
      if (t.act.is_internal()) continue;
      CHECK(system.alphabet().count(t.act) == 1);
    }
    // alphabet rule: nothing in the product alphabet has a co-action opposite
    for (const action& x : a.alphabet()) {
      if (partner.alphabet().count(ltsd::co_action(x)) == 1) {
        CHECK(system.alphabet().count(x) == 0);
        CHECK(system.alphabet().count(ltsd::co_action(x)) == 0);
      }
    }
  }
}
