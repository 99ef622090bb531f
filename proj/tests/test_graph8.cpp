#include <doctest.h>

#include "tanglekit/generators.hpp"
#include "tanglekit/graph8.hpp"
#include "test_helpers.hpp"

using namespace tanglekit;
using tanglekit::testing::corpus;

TEST_CASE("excising the planar figure-eight gives the trivial tangle") {
  Diagram t = excise_vertex(planar_figure8_graph());
  CHECK(t.mode == Mode::Tangle);
  CHECK(t.crossing_count() == 0);
  CHECK(t.strands.size() == 2);
  for (const Strand& s : t.strands) CHECK(s.passages.empty());
}

TEST_CASE("excision and vertexification are inverse") {
  for (const char* name :
       {"clasped_loops_one_smoothing_unreduced.pd", "strict_alternating_prime_graph.pd",
        "split_loops_local_trefoil.pd", "positive_nonalternating_local_knot.pd"}) {
    Diagram g = corpus(name);
    Diagram back = make_graph8_from_tangle(excise_vertex(g));
    CHECK(isomorphic(g, back));
  }
}

TEST_CASE("vertex smoothings match closure re-gluings of the excised tangle") {
  for (const char* name :
       {"clasped_loops_one_smoothing_unreduced.pd", "strict_alternating_prime_graph.pd",
        "split_loops_local_trefoil.pd", "loose_reduced_strict_fails.pd"}) {
    Diagram g = corpus(name);
    Diagram t = excise_vertex(g);
    CHECK(isomorphic(smooth_vertex(g, true), denominator_closure(t)));
    CHECK(isomorphic(smooth_vertex(g, false), numerator_closure(t)));
  }
}

TEST_CASE("sawollek strictness") {
  CHECK(sawollek_reduced_alternating(planar_figure8_graph()));  // vacuous
  CHECK(sawollek_reduced_alternating(corpus("strict_alternating_prime_graph.pd")));
  CHECK(sawollek_reduced_alternating(corpus("split_loops_local_trefoil.pd")));

  // Clasped loops: opening the clasp leaves curls (one smoothing unreduced).
  Diagram c2 = corpus("clasped_loops_one_smoothing_unreduced.pd");
  CHECK(is_reduced(c2).reduced);
  CHECK(is_alternating(c2));
  CHECK(!sawollek_reduced_alternating(c2));
  bool unreduced_smoothing = !is_reduced(smooth_vertex(c2, true)).reduced ||
                             !is_reduced(smooth_vertex(c2, false)).reduced;
  CHECK(unreduced_smoothing);

  // The looser diagram fails on both counts across its smoothings.
  Diagram l = corpus("loose_reduced_strict_fails.pd");
  CHECK(is_reduced(l).reduced);
  CHECK(!sawollek_reduced_alternating(l));
  bool some_unreduced = false, some_nonalternating = false;
  for (bool pairing : {true, false}) {
    Diagram s = smooth_vertex(l, pairing);
    some_unreduced = some_unreduced || !is_reduced(s).reduced;
    some_nonalternating = some_nonalternating || !is_alternating(s);
  }
  CHECK(some_unreduced);
  CHECK(some_nonalternating);
}

TEST_CASE("vertex split witnesses") {
  auto w = vertex_split_witness(planar_figure8_graph());
  REQUIRE(w.has_value());

  CHECK(vertex_split_witness(corpus("split_loops_local_trefoil.pd")).has_value());
  CHECK(!vertex_split_witness(corpus("clasped_loops_one_smoothing_unreduced.pd")));
  CHECK(!vertex_split_witness(corpus("strict_alternating_prime_graph.pd")));

  // Consistency with the excised tangle's split chord.
  for (const char* name : {"split_loops_local_trefoil.pd",
                           "strict_alternating_prime_graph.pd",
                           "clasped_loops_one_smoothing_unreduced.pd"}) {
    Diagram g = corpus(name);
    CHECK(vertex_split_witness(g).has_value() ==
          split_tangle_witness(excise_vertex(g)).has_value());
  }
}

TEST_CASE("local knot witness routes") {
  CHECK(!local_knot_witness(planar_figure8_graph()).has_value());

  auto split = local_knot_witness(corpus("split_loops_local_trefoil.pd"));
  REQUIRE(split.has_value());
  CHECK(split->route == LocalKnotWitness::Route::ThroughVertex);
  CHECK(split->criterion == KnotCriterion::KMT);
  CHECK(split->knot.crossing_count() == 3);

  auto interior = local_knot_witness(corpus("positive_nonalternating_local_knot.pd"));
  REQUIRE(interior.has_value());
  CHECK(interior->route == LocalKnotWitness::Route::InteriorDisk);
  CHECK(interior->criterion == KnotCriterion::Stoimenow);
  CHECK(interior->knot.crossing_count() == 4);

  // A non-split embedding with an alternating bead goes the interior route.
  auto gt = gen_local_knot_graph8(3, KnotKind::Trefoil, LocalKnotVariant::NonSplit);
  auto lk = local_knot_witness(gt.graph);
  REQUIRE(lk.has_value());
  CHECK(lk->route == LocalKnotWitness::Route::InteriorDisk);
}

TEST_CASE("theorem suite: strict alternating + vertex split implies a visible knot") {
  int cases = 0;
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    for (KnotKind k : {KnotKind::Trefoil, KnotKind::Figure8}) {
      auto gt = gen_local_knot_graph8(seed, k, LocalKnotVariant::VertexSplit);
      REQUIRE(sawollek_reduced_alternating(gt.graph));
      REQUIRE(vertex_split_witness(gt.graph).has_value());
      auto lk = local_knot_witness(gt.graph);
      REQUIRE(lk.has_value());
      CHECK(lk->route == LocalKnotWitness::Route::ThroughVertex);
      CHECK(nontrivial_knot_criterion(lk->knot) == lk->criterion);
      ++cases;
    }
  }
  CHECK(cases == 24);
}

TEST_CASE("theorem suite: local knot + MOF implies a disk avoiding the vertex") {
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    for (KnotKind k : {KnotKind::Trefoil, KnotKind::Figure8}) {
      auto gt = gen_local_knot_graph8(seed, k, LocalKnotVariant::NonSplit);
      REQUIRE(mof(excise_vertex(gt.graph)).satisfied != MofClause::None);
      auto lk = local_knot_witness(gt.graph);
      REQUIRE(lk.has_value());
      CHECK(lk->route == LocalKnotWitness::Route::InteriorDisk);
      CHECK(nontrivial_knot_criterion(lk->knot) == lk->criterion);
    }
  }
}

TEST_CASE("graph mode guards") {
  CHECK_THROWS_AS(excise_vertex(corpus("trefoil.pd")), DiagramError);
  CHECK_THROWS_AS(sawollek_reduced_alternating(corpus("trefoil.pd")), DiagramError);
}
