#include <doctest.h>

#include "tanglekit/generators.hpp"
#include "tanglekit/graph8.hpp"
#include "tanglekit/link_analysis.hpp"
#include "tanglekit/tangle.hpp"
#include "test_helpers.hpp"

using namespace tanglekit;

TEST_CASE("generators are deterministic in seed and parameters") {
  CHECK(serialize(gen_alternating_tangle(42, 6)) == serialize(gen_alternating_tangle(42, 6)));
  CHECK(serialize(gen_positive_tangle(42, 6)) == serialize(gen_positive_tangle(42, 6)));
  CHECK(serialize(gen_local_knot_graph8(5, KnotKind::Trefoil, LocalKnotVariant::NonSplit).graph) ==
        serialize(gen_local_knot_graph8(5, KnotKind::Trefoil, LocalKnotVariant::NonSplit).graph));
  CHECK(serialize(random_tangle_shadow(9, 7)) == serialize(random_tangle_shadow(9, 7)));
}

TEST_CASE("torus family") {
  Diagram t5 = gen_torus2(5);
  CHECK(t5.crossing_count() == 5);
  CHECK(twist_regions(t5).size() == 1);
  CHECK(is_alternating(t5));
  CHECK(is_reduced(t5).reduced);
  CHECK(!is_reduced(gen_torus2(1)).reduced);  // the forced kink
  CHECK_THROWS_AS(gen_torus2(0), DiagramError);
}

TEST_CASE("pretzel family") {
  Diagram p = gen_pretzel(3, 3, 3);
  CHECK(p.crossing_count() == 9);
  CHECK(twist_regions(p).size() == 3);
  CHECK(is_alternating(p));
  Diagram m = gen_pretzel(2, -3, 2);
  CHECK(m.crossing_count() == 7);
  CHECK(!is_alternating(m));  // mixed handedness
  CHECK_THROWS_AS(gen_pretzel(0, 1, 1), DiagramError);
}

TEST_CASE("alternating tangles satisfy their contract") {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    int size = 2 + static_cast<int>(seed % 8);
    Diagram t = gen_alternating_tangle(seed, size);
    CHECK(is_connected(t).connected);
    CHECK(is_alternating(t));
    Diagram d = denominator_closure(t);
    CHECK(is_reduced(d).reduced);
    CHECK(is_alternating(d));
  }
}

TEST_CASE("positive tangles satisfy their contract") {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    int size = 2 + static_cast<int>(seed % 6);
    Diagram t = gen_positive_tangle(seed, size);
    CHECK(is_connected(t).connected);
    Diagram d = denominator_closure(t);
    CHECK(is_reduced(d).reduced);
    CHECK(exists_positive_orientation(d).has_value());
  }
}

TEST_CASE("size-one tangles never pass the closure filter") {
  // Both closures of a 1-crossing tangle are kinked unknots, so the
  // reduced-closure filter exhausts its retries.
  CHECK_THROWS_WITH_AS(gen_alternating_tangle(1, 1), doctest::Contains("exhausted"),
                       DiagramError);
  CHECK_THROWS_WITH_AS(gen_positive_tangle(1, 1), doctest::Contains("exhausted"),
                       DiagramError);
}

TEST_CASE("make_alternating preserves the shadow") {
  Diagram shadow = random_tangle_shadow(11, 6);
  Diagram alt = make_alternating(shadow);
  CHECK(is_alternating(alt));
  CHECK(alt.crossing_count() == shadow.crossing_count());
  // Same shadow: strand edge sequences agree.
  REQUIRE(alt.strands.size() == shadow.strands.size());
  for (size_t i = 0; i < alt.strands.size(); ++i)
    CHECK(alt.strands[i].edges == shadow.strands[i].edges);
  // Mirror flips every crossing.
  Diagram mirror = make_alternating(shadow, true);
  for (NodeId n = 0; n < alt.node_count(); ++n)
    CHECK(alt.nodes[n].over0 == 1 - mirror.nodes[n].over0);
}

TEST_CASE("make_positive realizes a positive orientation") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    Diagram shadow = random_tangle_shadow(seed, 5);
    Diagram pos = make_positive(shadow);
    CHECK(is_positive(pos, orient_strands(pos)));
  }
}

TEST_CASE("local knot ground truths") {
  auto split = gen_local_knot_graph8(1, KnotKind::Trefoil, LocalKnotVariant::VertexSplit);
  CHECK(split.variant == LocalKnotVariant::VertexSplit);
  CHECK(sawollek_reduced_alternating(split.graph));
  CHECK(vertex_split_witness(split.graph).has_value());

  auto ns = gen_local_knot_graph8(1, KnotKind::Figure8, LocalKnotVariant::NonSplit);
  CHECK(!vertex_split_witness(ns.graph).has_value());
  auto lk = local_knot_witness(ns.graph);
  REQUIRE(lk.has_value());
  CHECK(lk->route == LocalKnotWitness::Route::InteriorDisk);
  CHECK(lk->knot.crossing_count() == 4);
  CHECK(lk->criterion == KnotCriterion::KMT);
}

TEST_CASE("generated diagrams pass validation") {
  // Construction runs the validator; reaching here is the check.
  for (uint64_t seed = 50; seed < 58; ++seed) {
    gen_alternating_tangle(seed, 5);
    gen_positive_tangle(seed, 5);
    gen_local_knot_graph8(seed, KnotKind::Trefoil,
                          seed % 2 ? LocalKnotVariant::NonSplit
                                   : LocalKnotVariant::VertexSplit);
  }
  CHECK(true);
}
