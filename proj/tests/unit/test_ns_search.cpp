#include "doctest.h"

#include <algorithm>

#include "support.hpp"
#include "tempex/ns_search.hpp"
#include "tempex/oracles.hpp"

using namespace tempex;
using namespace tempex::testing;

namespace {

/// Enumerates every component sequence from s's first component and reports
/// whether one occupies all members of q.
bool sequences_cover(const NonStrictTemporalGraph& g, Vertex s, const std::vector<std::int32_t>& choice) {
  const Time lifetime = g.lifetime();
  std::vector<std::int32_t> path;
  auto rec = [&](auto& self, Time t, std::int32_t comp) -> bool {
    const auto want = choice[static_cast<std::size_t>(t - 1)];
    if (want >= 0 && want != comp) return false;
    if (t == lifetime) return true;
    const auto here = g.component({t, comp});
    for (std::int32_t j = 0; j < g.gamma(t + 1); ++j) {
      const auto next = g.component({t + 1, j});
      const bool meet = std::any_of(here.begin(), here.end(), [&](Vertex v) {
        return std::binary_search(next.begin(), next.end(), v);
      });
      if (meet && self(self, t + 1, j)) return true;
    }
    return false;
  };
  if (lifetime == 0) return true;
  return rec(rec, 1, g.component_index(1, s));
}

}  // namespace

TEST_CASE("component reachability examples") {
  const auto g = g2();
  CHECK(comp_reachable(g, {1, 0}, {2, 1}));
  CHECK(comp_reachable(g, {1, 0}, {1, 0}));
  CHECK_FALSE(comp_reachable(g, {1, 0}, {1, 1}));
  CHECK_THROWS_AS(comp_reachable(g, {2, 0}, {1, 0}), InputError);
  CHECK_THROWS_AS(comp_reachable(g, {1, 2}, {2, 0}), InputError);
  const auto h = h1();
  CHECK_FALSE(comp_reachable(h, {1, 0}, {2, 1}));
  CHECK(comp_reachable(h, {1, 1}, {2, 1}));

  const auto w = walk_between(g, 1, {1, 0}, {2, 1});
  REQUIRE(w.has_value());
  CHECK(w->steps == std::vector<ComponentRef>{{1, 0}, {2, 1}});
  CHECK_FALSE(walk_between(h, 0, {1, 0}, {2, 1}).has_value());
}

TEST_CASE("feasibility of component selections") {
  const auto g = g2();
  ComponentSelection q(g);
  CHECK(w_feasible(g, 0, q));
  q.add({2, 1});
  CHECK(w_feasible(g, 0, q));
  CHECK(q.covered().count() == 2);
  CHECK(q.uses_step(2));
  CHECK_FALSE(q.uses_step(1));
  CHECK_THROWS_AS(q.add({2, 0}), InputError);

  ComponentSelection bad(g);
  bad.add({1, 1});
  CHECK_FALSE(w_feasible(g, 0, bad));

  ComponentSelection two(g);
  two.add({2, 0});
  two.add({1, 0});
  CHECK(two.members() == std::vector<ComponentRef>{{1, 0}, {2, 0}});
  CHECK(two.choices() == std::vector<std::int32_t>{0, 0});
  const auto walk = walk_through(g, 0, two.members());
  REQUIRE(walk.has_value());
  CHECK(validate_ns_walk(g, *walk));
}

TEST_CASE("walk assembly helpers") {
  const auto g = g3();
  const std::vector<ComponentRef> none;
  const auto trivial = walk_through(g, 2, none);
  REQUIRE(trivial.has_value());
  CHECK(trivial->steps == std::vector<ComponentRef>{{1, 1}});
  const std::vector<ComponentRef> backwards{{2, 0}, {1, 0}};
  CHECK_THROWS_AS(walk_through(g, 0, backwards), InputError);

  const NonStrictWalk full{0, {{1, 0}, {2, 0}, {3, 0}}, 3};
  const auto cut = truncate_to_target(g, full, TargetSpec::fixed({2}));
  REQUIRE(cut.has_value());
  CHECK(cut->arrival == 2);
  CHECK(cut->steps.size() == 2);
  CHECK_FALSE(truncate_to_target(g2(), NonStrictWalk{0, {{1, 0}, {2, 0}}, 2}, TargetSpec::all()).has_value());
}

TEST_CASE("search tree examples") {
  CHECK_FALSE(solve_ns_texp(g2(), 0).yes);
  const auto g = g3();
  const auto r = solve_ns_texp(g, 0);
  REQUIRE(r.yes);
  const auto& w = std::get<NonStrictWalk>(*r.walk);
  CHECK(w.steps.back() == ComponentRef{3, 0});
  CHECK(validate_ns_walk(g, w));

  const NonStrictTemporalGraph one(1, 2, {{{0}}, {{0}}});
  const auto r1 = solve_ns_texp(one, 0);
  REQUIRE(r1.yes);
  CHECK(r1.arrival == 1);

  const auto g2g = g2();
  const std::vector<Vertex> x3{3};
  const auto k3 = solve_ns_k_fixed_search(g2g, 0, x3);
  REQUIRE(k3.yes);
  CHECK(std::get<NonStrictWalk>(*k3.walk).steps == std::vector<ComponentRef>{{1, 0}, {2, 1}});
  const std::vector<Vertex> x23{2, 3};
  CHECK_FALSE(solve_ns_k_fixed_search(g2g, 0, x23).yes);
  const std::vector<Vertex> none;
  const auto e = solve_ns_k_fixed_search(g2g, 0, none);
  REQUIRE(e.yes);
  CHECK(e.arrival == 1);
}

TEST_CASE("search tree agrees with the oracle") {
  Rng rng(163);
  const OracleBudget budget{7, 5, 1'000'000};
  SearchStats stats;
  int yes = 0;
  for (int rep = 0; rep < 600; ++rep) {
    const auto g = random_ns(rng, NsShape{1, 7, 1, 5, 3, 0.05, 0.15});
    const auto s = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(g.vertex_count())));
    const auto want = bf_ns(g, s, TargetSpec::all(), budget);
    const auto got = solve_ns_texp(g, s, &stats);
    REQUIRE_MESSAGE(got.yes == want.yes, describe(g), " s=", s);
    if (!got.yes) continue;
    ++yes;
    CHECK(certificate_ok(NonStrictProvider(g), got, TargetSpec::all()));
    // Some component covers at least n / L vertices.
    std::size_t largest = 0;
    for (Time t = 1; t <= g.lifetime(); ++t) {
      for (const auto& c : g.step(t)) largest = std::max(largest, c.size());
    }
    CHECK(static_cast<std::int64_t>(largest) * g.lifetime() >= g.vertex_count());

    const auto xs = random_subset(rng, g.vertex_count());
    const auto kw = bf_ns(g, s, TargetSpec::fixed(xs), budget);
    const auto kg = solve_ns_k_fixed_search(g, s, xs, &stats);
    REQUIRE(kg.yes == kw.yes);
    if (kg.yes) CHECK(certificate_ok(NonStrictProvider(g), kg, TargetSpec::fixed(xs)));
  }
  CHECK(yes > 20);
  CHECK(stats.bound_violations == 0);
  CHECK(stats.calls > 0);
}

TEST_CASE("feasibility agrees with sequence enumeration") {
  Rng rng(167);
  for (int rep = 0; rep < 400; ++rep) {
    const auto g = random_ns(rng, NsShape{2, 6, 1, 5, 3});
    const auto s = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(g.vertex_count())));
    ComponentSelection q(g);
    std::vector<std::int32_t> choice(static_cast<std::size_t>(g.lifetime()), -1);
    for (Time t = 1; t <= g.lifetime(); ++t) {
      if (!bernoulli(rng, 0.4)) continue;
      const auto j = static_cast<std::int32_t>(uniform_below(rng, static_cast<std::uint64_t>(g.gamma(t))));
      q.add({t, j});
      choice[static_cast<std::size_t>(t - 1)] = j;
    }
    CHECK(q.choices() == choice);
    const bool want = sequences_cover(g, s, choice);
    REQUIRE(w_feasible(g, s, q) == want);
    if (!want || q.size() == 0) continue;
    const auto w = walk_through(g, s, q.members());
    REQUIRE(w.has_value());
    CHECK(validate_ns_walk(g, *w));
    for (const auto& c : q.members()) {
      CHECK(w->steps[static_cast<std::size_t>(c.time - 1)] == c);
    }
  }
}
