#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "tanglekit/generators.hpp"
#include "tanglekit/link_analysis.hpp"
#include "tanglekit/tangle.hpp"
#include "test_helpers.hpp"

using namespace tanglekit;
using tanglekit::testing::corpus;

TEST_CASE("connectivity and split witnesses") {
  CHECK(is_connected(corpus("trefoil.pd")).connected);
  CHECK(oracle::connected(corpus("trefoil.pd")));

  Diagram two_loops = parse("link { O(1) O(2) }");
  auto r = is_connected(two_loops);
  CHECK(!r.connected);
  CHECK(!oracle::connected(two_loops));
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->side_a_components.size() == 1);
  CHECK(r.witness->side_b_components.size() == 1);
  CHECK(r.witness->face >= 0);

  Diagram mix = parse("link { X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) O(7) }");
  CHECK(!is_connected(mix).connected);
  CHECK(!oracle::connected(mix));
}

TEST_CASE("reducedness flags nugatory crossings") {
  CHECK(is_reduced(corpus("trefoil.pd")).reduced);
  auto r = is_reduced(testing::kinked_trefoil());
  CHECK(!r.reduced);
  REQUIRE(r.nugatory.size() == 1);
  CHECK(r.nugatory[0] == 3);  // the curl crossing
  CHECK(is_reduced(parse("link { O(1) }")).reduced);  // vacuous
  CHECK(!is_reduced(gen_torus2(1)).reduced);
}

TEST_CASE("alternation along strands") {
  Diagram t = corpus("trefoil.pd");
  CHECK(is_alternating(t));
  CHECK(!is_alternating(testing::flip_one_crossing(t, 0)));
  CHECK(is_alternating(parse("link { O(1) }")));
  CHECK(is_alternating(gen_torus2(1)));  // single kink wraps over->under
}

TEST_CASE("crossing signs and positivity") {
  // The standard code above is the negative trefoil; its mirror is positive.
  Diagram neg = corpus("trefoil.pd");
  Diagram pos = testing::flip_all_crossings(neg);
  Orientation o = orient_strands(pos);
  for (NodeId n = 0; n < pos.node_count(); ++n) CHECK(crossing_sign(pos, o, n) == 1);
  for (NodeId n = 0; n < neg.node_count(); ++n)
    CHECK(crossing_sign(neg, orient_strands(neg), n) == -1);
  CHECK(is_positive(pos, o));
  CHECK(exists_positive_orientation(pos).has_value());
  CHECK(!exists_positive_orientation(neg).has_value());

  // The figure-eight knot has no positive diagram at this projection.
  CHECK(!exists_positive_orientation(figure8_knot()).has_value());
  CHECK(!exists_positive_orientation(testing::flip_all_crossings(figure8_knot()))
             .has_value());

  // Zero crossings: positive for the unique orientation, vacuously.
  Diagram u = parse("link { O(1) }");
  CHECK(exists_positive_orientation(u).has_value());
}

TEST_CASE("sign is invariant under reversing every component") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    Diagram d = denominator_closure(gen_alternating_tangle(seed, 4));
    uint64_t all = (uint64_t{1} << d.strands.size()) - 1;
    Orientation fwd = orient_strands(d, 0), rev = orient_strands(d, all);
    for (NodeId n = 0; n < d.node_count(); ++n)
      CHECK(crossing_sign(d, fwd, n) == crossing_sign(d, rev, n));
  }
}

TEST_CASE("resolutions and state circles") {
  Diagram t = corpus("trefoil.pd");
  auto a = resolution(t, ResolutionKind::AllA), b = resolution(t, ResolutionKind::AllB);
  CHECK(a.circle_count() + b.circle_count() == 5);
  CHECK(a.segments.size() == 3);
  CHECK(a.circle_count() == oracle::state_circle_count(t, ResolutionKind::AllA));
  CHECK(b.circle_count() == oracle::state_circle_count(t, ResolutionKind::AllB));

  Diagram kink = gen_torus2(1);
  int ka = resolution(kink, ResolutionKind::AllA).circle_count();
  int kb = resolution(kink, ResolutionKind::AllB).circle_count();
  CHECK(((ka == 2 && kb == 1) || (ka == 1 && kb == 2)));

  auto u = resolution(parse("link { O(1) }"), ResolutionKind::AllA);
  CHECK(u.circle_count() == 1);
  CHECK(u.segments.empty());
}

TEST_CASE("adequacy") {
  CHECK(is_adequate(corpus("trefoil.pd")));
  Diagram kink = gen_torus2(1);
  CHECK(is_semi_adequate(kink));
  CHECK(!is_adequate(kink));
  CHECK(is_adequate(parse("link { O(1) }")));  // vacuous
}

TEST_CASE("twist regions") {
  auto r5 = twist_regions(gen_torus2(5));
  REQUIRE(r5.size() == 1);
  CHECK(r5[0].crossings.size() == 5);
  CHECK(twist_regions(gen_pretzel(3, 3, 3)).size() == 3);
  auto rt = twist_regions(corpus("trefoil.pd"));
  REQUIRE(rt.size() == 1);
  CHECK(rt[0].crossings.size() == 3);
  // Partition property.
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    Diagram d = denominator_closure(gen_alternating_tangle(seed, 6));
    std::set<NodeId> seen;
    for (const auto& region : twist_regions(d))
      for (NodeId n : region.crossings) CHECK(seen.insert(n).second);
    CHECK(static_cast<int>(seen.size()) == d.crossing_count());
  }
}

TEST_CASE("twist adequacy") {
  CHECK(is_twist_adequate(gen_torus2(5)));
  CHECK(is_twist_adequate(corpus("trefoil.pd")));
  CHECK(is_twist_adequate(parse("link { O(1) }")));  // vacuous
  CHECK(is_twist_adequate(granny_knot()));
}

TEST_CASE("projection primeness") {
  CHECK(is_prime_projection(corpus("trefoil.pd")).prime);
  CHECK(is_prime_projection(parse("link { O(1) }")).prime);

  auto g = is_prime_projection(granny_knot());
  CHECK(!g.prime);
  REQUIRE(g.witness.has_value());
  CHECK(g.witness->side_a_crossings.size() == 3);
  CHECK(g.witness->side_b_crossings.size() == 3);

  CHECK_THROWS_AS(is_prime_projection(parse("link { O(1) O(2) }")), DiagramError);
}

TEST_CASE("primeness matches the brute-force oracle") {
  std::vector<Diagram> batch;
  batch.push_back(corpus("trefoil.pd"));
  batch.push_back(granny_knot());
  batch.push_back(gen_torus2(8));
  batch.push_back(gen_pretzel(2, 2, 3));
  batch.push_back(figure8_knot());
  for (uint64_t seed = 1; seed <= 15; ++seed)
    batch.push_back(denominator_closure(gen_alternating_tangle(seed, 5)));
  for (const Diagram& d : batch) {
    if (!is_connected(d).connected) continue;
    CHECK(is_prime_projection(d).prime == !oracle::brute_force_composite(d).has_value());
  }
}
