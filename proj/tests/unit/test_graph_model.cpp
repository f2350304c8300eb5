#include "doctest.h"

#include "support.hpp"

using namespace tempex;
using namespace tempex::testing;

TEST_CASE("strict walk validation") {
  const auto g = g1();
  const StrictWalk good{0, 1, {{1, 0, 1}, {2, 1, 2}}, 3};
  CHECK(validate_strict_walk(g, good));

  SUBCASE("traversal steps must increase") {
    const StrictWalk swapped{0, 1, {{2, 1, 2}, {1, 0, 1}}, 3};
    CHECK_FALSE(validate_strict_walk(g, swapped));
  }
  SUBCASE("waiting only") {
    CHECK(validate_strict_walk(g, StrictWalk{0, 1, {}, 1}));
    CHECK(validate_strict_walk(g, StrictWalk{2, 3, {}, 3}));
    CHECK_FALSE(validate_strict_walk(g, StrictWalk{0, 1, {}, 2}));
    CHECK_FALSE(validate_strict_walk(g, StrictWalk{0, 4, {}, 4}));
  }
  SUBCASE("arrival must follow the last traversal") {
    CHECK_FALSE(validate_strict_walk(g, StrictWalk{0, 1, {{1, 0, 1}, {2, 1, 2}}, 2}));
    CHECK_FALSE(validate_strict_walk(g, StrictWalk{0, 1, {{1, 0, 1}, {2, 1, 2}}, 4}));
  }
  SUBCASE("edges must exist and chain") {
    CHECK_FALSE(validate_strict_walk(g, StrictWalk{0, 1, {{1, 1, 2}}, 2}));
    CHECK_FALSE(validate_strict_walk(g, StrictWalk{0, 1, {{1, 0, 1}, {2, 0, 1}}, 3}));
    CHECK(validate_strict_walk(g, StrictWalk{1, 1, {{1, 1, 0}}, 2}));
  }
  SUBCASE("start time after the first traversal") {
    CHECK_FALSE(validate_strict_walk(g, StrictWalk{0, 2, {{1, 0, 1}}, 2}));
  }
  SUBCASE("malformed ids are rejected, not thrown") {
    CHECK_FALSE(validate_strict_walk(g, StrictWalk{7, 1, {}, 1}));
    CHECK_FALSE(validate_strict_walk(g, StrictWalk{0, 1, {{1, 0, 9}}, 2}));
    CHECK_FALSE(validate_strict_walk(g, StrictWalk{0, 1, {{5, 0, 1}}, 6}));
  }
}

TEST_CASE("non-strict walk validation") {
  const auto g = g2();
  // step 1: [01|23], step 2: [02|13]
  const NonStrictWalk good{0, {{1, 0}, {2, 1}}, 2};
  CHECK(validate_ns_walk(g, good));
  CHECK_FALSE(validate_ns_walk(g, NonStrictWalk{0, {{1, 1}}, 1}));
  CHECK_FALSE(validate_ns_walk(g, NonStrictWalk{0, {{1, 0}, {2, 2}}, 2}));
  CHECK_FALSE(validate_ns_walk(g, NonStrictWalk{0, {{1, 0}, {2, 1}}, 1}));
  CHECK_FALSE(validate_ns_walk(g, NonStrictWalk{0, {{1, 0}, {3, 0}}, 3}));

  SUBCASE("walks may start at a later step") {
    CHECK(validate_ns_walk(g, NonStrictWalk{3, {{2, 1}}, 2}));
  }
  SUBCASE("consecutive components must intersect") {
    const NonStrictTemporalGraph split(4, 2, {{{0, 1}, {2, 3}}, {{0, 1}, {2, 3}}});
    CHECK_FALSE(validate_ns_walk(split, NonStrictWalk{0, {{1, 0}, {2, 1}}, 2}));
    CHECK(validate_ns_walk(split, NonStrictWalk{0, {{1, 0}, {2, 0}}, 2}));
  }
  SUBCASE("empty walk only without steps") {
    CHECK_FALSE(validate_ns_walk(g, NonStrictWalk{0, {}, 1}));
    const NonStrictTemporalGraph none(3, 0, {});
    CHECK(validate_ns_walk(none, NonStrictWalk{1, {}, 1}));
  }
}

TEST_CASE("visited vertices") {
  CHECK(visited_vertices(g1(), StrictWalk{0, 1, {{1, 0, 1}, {2, 1, 2}}, 3}) ==
        make_vertex_set(3, std::vector<Vertex>{0, 1, 2}));
  CHECK(visited_vertices(g2(), NonStrictWalk{0, {{1, 0}, {2, 1}}, 2}) ==
        make_vertex_set(4, std::vector<Vertex>{0, 1, 3}));
  CHECK(visited_vertices(g2(), NonStrictWalk{0, {{1, 0}}, 1}) ==
        make_vertex_set(4, std::vector<Vertex>{0, 1}));
  CHECK(visited_vertices(g1(), StrictWalk{2, 1, {}, 1}) == make_vertex_set(3, std::vector<Vertex>{2}));
  CHECK_THROWS_AS(visited_vertices(g1(), StrictWalk{0, 1, {{2, 1, 2}}, 3}), InputError);
  CHECK_THROWS_AS(visited_vertices(g2(), NonStrictWalk{0, {{1, 1}}, 1}), InputError);
}

TEST_CASE("strict graph construction rejects malformed layers") {
  CHECK_THROWS_AS(StrictTemporalGraph(3, 1, {{{0, 0}}}), InputError);
  CHECK_THROWS_AS(StrictTemporalGraph(3, 1, {{{0, 3}}}), InputError);
  CHECK_THROWS_AS(StrictTemporalGraph(3, 1, {{{0, 1}, {1, 0}}}), InputError);
  CHECK_THROWS_AS(StrictTemporalGraph(3, 2, {{{0, 1}}}), InputError);
  CHECK_THROWS_AS(StrictTemporalGraph(-1, 0, {}), InputError);

  const StrictTemporalGraph g(4, 2, {{{2, 1}, {0, 3}}, {}});
  CHECK(g.has_edge(1, 1, 2));
  CHECK(g.has_edge(1, 2, 1));
  CHECK_FALSE(g.has_edge(2, 1, 2));
  CHECK(g.time_edge_count() == 2);
  const auto nb = g.neighbours(1, 3);
  CHECK(std::vector<Vertex>(nb.begin(), nb.end()) == std::vector<Vertex>{0});
}

TEST_CASE("non-strict graph construction enforces partitions") {
  CHECK_THROWS_AS(NonStrictTemporalGraph(3, 1, {{{0, 1}}}), InputError);
  CHECK_THROWS_AS(NonStrictTemporalGraph(3, 1, {{{0, 1}, {1, 2}}}), InputError);
  CHECK_THROWS_AS(NonStrictTemporalGraph(3, 1, {{{0, 1, 2}, {}}}), InputError);
  CHECK_THROWS_AS(NonStrictTemporalGraph(3, 1, {{{0, 1, 5}, {2}}}), InputError);
  CHECK_THROWS_AS(NonStrictTemporalGraph(3, 2, {{{0, 1, 2}}}), InputError);

  const NonStrictTemporalGraph g(3, 2, {{{2, 0}, {1}}, {{0, 1, 2}}});
  CHECK(g.gamma(1) == 2);
  CHECK(g.gamma(2) == 1);
  CHECK(g.gamma() == 2);
  CHECK(g.component_index(1, 2) == 0);
  const auto c = g.component({1, 0});
  CHECK(std::vector<Vertex>(c.begin(), c.end()) == std::vector<Vertex>{0, 2});
}

TEST_CASE("random non-strict graphs are partitions at every step") {
  Rng rng(11);
  for (int rep = 0; rep < 300; ++rep) {
    const auto g = random_ns(rng, NsShape{1, 9, 1, 6, 4});
    for (Time t = 1; t <= g.lifetime(); ++t) {
      std::vector<int> hits(static_cast<std::size_t>(g.vertex_count()), 0);
      std::size_t total = 0;
      for (const auto& comp : g.step(t)) {
        REQUIRE_FALSE(comp.empty());
        total += comp.size();
        for (Vertex v : comp) ++hits[static_cast<std::size_t>(v)];
      }
      CHECK(total == static_cast<std::size_t>(g.vertex_count()));
      CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    }
  }
}

TEST_CASE("target specifications") {
  SUBCASE("validation") {
    CHECK_NOTHROW(TargetSpec::fixed({2, 0, 2}).validate(3));
    CHECK_THROWS_AS(TargetSpec::fixed({3}).validate(3), InputError);
    CHECK_THROWS_AS(TargetSpec::of_count(4).validate(3), InputError);
    CHECK_THROWS_AS(TargetSpec::of_count(-1).validate(3), InputError);
    CHECK_THROWS_AS(TargetSpec::of_sets({{0}, {}}).validate(3), InputError);
    CHECK_NOTHROW(TargetSpec::of_sets({}).validate(3));
  }
  SUBCASE("fixed targets are sorted and deduplicated") {
    CHECK(TargetSpec::fixed({2, 0, 2}).vertices == std::vector<Vertex>{0, 2});
  }
  SUBCASE("predicates") {
    const auto seen = make_vertex_set(4, std::vector<Vertex>{0, 2});
    CHECK_FALSE(TargetSpec::all().satisfied_by(seen));
    CHECK(TargetSpec::all().satisfied_by(make_vertex_set(4, std::vector<Vertex>{0, 1, 2, 3})));
    CHECK(TargetSpec::fixed({2}).satisfied_by(seen));
    CHECK_FALSE(TargetSpec::fixed({1, 2}).satisfied_by(seen));
    CHECK(TargetSpec::of_count(2).satisfied_by(seen));
    CHECK_FALSE(TargetSpec::of_count(3).satisfied_by(seen));
    CHECK(TargetSpec::of_sets({{1, 2}, {0}}).satisfied_by(seen));
    CHECK_FALSE(TargetSpec::of_sets({{1, 3}}).satisfied_by(seen));
    CHECK(TargetSpec::of_sets({}).satisfied_by(seen));
  }
}
