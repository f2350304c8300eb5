#include "doctest.h"

#include <cstdlib>

#include "support.hpp"
#include "tempex/oracles.hpp"

using namespace tempex;
using namespace tempex::testing;

namespace {

struct EnvGuard {
  explicit EnvGuard(const char* value) { ::setenv("TEMPEX_BUDGET", value, 1); }
  ~EnvGuard() { ::unsetenv("TEMPEX_BUDGET"); }
};

}  // namespace

TEST_CASE("strict oracle examples") {
  const auto g = g1();
  const auto all = bf_strict(g, 0, TargetSpec::all());
  REQUIRE(all.yes);
  CHECK(all.arrival == 3);
  CHECK(certificate_ok(StrictProvider(g), all, TargetSpec::all()));
  CHECK_FALSE(bf_strict(g1_truncated(), 0, TargetSpec::all()).yes);
  const auto two = bf_strict(g, 0, TargetSpec::of_count(2));
  REQUIRE(two.yes);
  CHECK(two.arrival == 2);
  const auto waits = bf_strict(g, 1, TargetSpec::fixed({2}));
  REQUIRE(waits.yes);
  CHECK(waits.arrival == 3);
}

TEST_CASE("non-strict oracle examples") {
  CHECK_FALSE(bf_ns(g2(), 0, TargetSpec::all()).yes);
  const auto g = g3();
  const auto r = bf_ns(g, 0, TargetSpec::all());
  REQUIRE(r.yes);
  CHECK(r.arrival == 3);
  const auto x = bf_ns(g2(), 0, TargetSpec::fixed({3}));
  REQUIRE(x.yes);
  CHECK(x.arrival == 2);
  const NonStrictTemporalGraph empty(2, 0, {});
  const auto e = bf_ns(empty, 1, TargetSpec::fixed({1}));
  REQUIRE(e.yes);
  CHECK(e.arrival == 1);
}

TEST_CASE("set variants") {
  const auto g = g1();
  CHECK(bf_set_texp(g, 0, {}));
  const auto r = bf_strict(g, 0, TargetSpec::of_sets({}));
  REQUIRE(r.yes);
  CHECK(r.arrival == 1);
  CHECK(bf_set_texp(g, 0, {{2}, {1}}));
  CHECK_FALSE(bf_set_texp(g1_truncated(), 0, {{2}}));
  CHECK(bf_set_ns_texp(g2(), 0, {{3}, {0}}));
  CHECK_FALSE(bf_set_ns_texp(g2(), 0, {{2}, {3}}));
}

TEST_CASE("budgets") {
  const StrictTemporalGraph wide(8, 1, {{}});
  CHECK_THROWS_AS(bf_strict(wide, 0, TargetSpec::all()), BudgetError);
  const StrictTemporalGraph longer(2, 7, std::vector<std::vector<Edge>>(7));
  CHECK_THROWS_AS(bf_strict(longer, 0, TargetSpec::all()), BudgetError);
  CHECK_NOTHROW(bf_strict(longer, 0, TargetSpec::all(), OracleBudget{2, 7, 100}));

  // Complete layers blow up the visited-set states quickly.
  std::vector<Edge> complete;
  for (Vertex u = 0; u < 7; ++u) {
    for (Vertex v = u + 1; v < 7; ++v) complete.push_back({u, v});
  }
  const StrictTemporalGraph dense(7, 6, std::vector<std::vector<Edge>>(6, complete));
  CHECK_THROWS_AS(bf_strict(dense, 0, TargetSpec::of_sets({{6}, {5}, {4}, {3}, {2}, {1}, {0}}), OracleBudget{7, 6, 50}),
                  BudgetError);
  CHECK_THROWS_AS(bf_ns(g2(), 0, TargetSpec::all(), OracleBudget{7, 6, -1}), InputError);
  CHECK_THROWS_AS(bf_ns(g2(), 0, TargetSpec::all(), OracleBudget{33, 6, 10}), InputError);
  CHECK_THROWS_AS(bf_ns(g2(), 0, TargetSpec::all(), OracleBudget{7, 17, 10}), InputError);
  CHECK_THROWS_AS(bf_ns(g2(), 0, TargetSpec::all(), OracleBudget{7, 6, 10'000'001}), InputError);
  CHECK_NOTHROW(OracleBudget::maximal().check());
  CHECK_THROWS_AS(bf_ns(g2(), 4, TargetSpec::all()), InputError);
  CHECK_THROWS_AS(bf_ns(g2(), 0, TargetSpec::fixed({5})), InputError);
}

TEST_CASE("state budget from the environment") {
  {
    EnvGuard env("25");
    CHECK(OracleBudget{}.with_env_override().max_states == 25);
    CHECK(OracleBudget{7, 6, 10}.with_env_override().max_states == 10);
  }
  {
    EnvGuard env("lots");
    CHECK_THROWS_AS(OracleBudget{}.with_env_override(), InputError);
  }
  {
    EnvGuard env("-3");
    CHECK_THROWS_AS(OracleBudget{}.with_env_override(), InputError);
  }
  CHECK(OracleBudget{}.with_env_override().max_states == OracleBudget{}.max_states);
}

TEST_CASE("all vertices equals fixed V, and outputs are repeatable") {
  Rng rng(197);
  for (int rep = 0; rep < 300; ++rep) {
    const auto sg = random_strict(rng, StrictShape{1, 6, 1, 5});
    std::vector<Vertex> every(static_cast<std::size_t>(sg.vertex_count()));
    for (Vertex v = 0; v < sg.vertex_count(); ++v) every[static_cast<std::size_t>(v)] = v;
    const auto a = bf_strict(sg, 0, TargetSpec::all());
    const auto b = bf_strict(sg, 0, TargetSpec::fixed(every));
    CHECK(a.yes == b.yes);
    CHECK(a.arrival == b.arrival);
    const auto a2 = bf_strict(sg, 0, TargetSpec::all());
    CHECK(a2.walk == a.walk);

    const auto ng = random_ns(rng, NsShape{1, 7, 1, 5, 3});
    std::vector<Vertex> nevery(static_cast<std::size_t>(ng.vertex_count()));
    for (Vertex v = 0; v < ng.vertex_count(); ++v) nevery[static_cast<std::size_t>(v)] = v;
    const auto c = bf_ns(ng, 0, TargetSpec::all());
    const auto d = bf_ns(ng, 0, TargetSpec::fixed(nevery));
    CHECK(c.yes == d.yes);
    CHECK(c.arrival == d.arrival);
    if (c.yes) {
      // Non-strict arrivals are the last occupied step.
      const auto& w = std::get<NonStrictWalk>(*c.walk);
      CHECK(c.arrival == static_cast<Time>(w.steps.size()));
      CHECK(certificate_ok(NonStrictProvider(ng), c, TargetSpec::all()));
    }
    if (a.yes) {
      const auto& w = std::get<StrictWalk>(*a.walk);
      CHECK(a.arrival == (w.traversals.empty() ? 1 : w.traversals.back().time + 1));
    }
  }
}

TEST_CASE("order enumeration") {
  const auto g = g1();
  const std::vector<Vertex> xs{2, 1};
  const auto r = bf_fixed_orders(StrictProvider(g), 0, xs);
  REQUIRE(r.yes);
  CHECK(r.arrival == 3);
  CHECK(r.order == std::vector<Vertex>{1, 2});
  const std::vector<Vertex> nine{0, 1, 2, 3, 4, 5, 6, 7, 8};
  const StrictTemporalGraph big(9, 1, {{}});
  CHECK_THROWS_AS(bf_fixed_orders(StrictProvider(big), 0, nine), CapacityError);
}
