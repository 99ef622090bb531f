#include <doctest.h>

#include <map>
#include <set>

#include "tanglekit/certify.hpp"
#include "tanglekit/generators.hpp"
#include "test_helpers.hpp"

using namespace tanglekit;
using tanglekit::testing::corpus;

namespace {

std::multiset<std::pair<std::string, std::string>> summary(
    const std::vector<Certificate>& certs) {
  std::multiset<std::pair<std::string, std::string>> out;
  for (const Certificate& c : certs) out.insert({conclusion_name(c.conclusion), c.rule});
  return out;
}

bool has(const std::vector<Certificate>& certs, Conclusion c, const std::string& rule) {
  for (const Certificate& cert : certs)
    if (cert.conclusion == c && cert.rule == rule) return true;
  return false;
}

void check_no_contradiction(const std::vector<Certificate>& certs) {
  bool prime_t = false, comp_t = false, prime_l = false;
  for (const Certificate& c : certs) {
    prime_t = prime_t || c.conclusion == Conclusion::PrimeTangle;
    comp_t = comp_t || c.conclusion == Conclusion::CompositeTangle;
    prime_l = prime_l || c.conclusion == Conclusion::PrimeLink;
  }
  CHECK(!(prime_t && comp_t));
  (void)prime_l;
}

}  // namespace

TEST_CASE("trefoil certificates") {
  Diagram t = corpus("trefoil.pd");
  auto certs = certify_link(t);
  CHECK(has(certs, Conclusion::NonSplitLink, "menasco_nonsplit"));
  CHECK(has(certs, Conclusion::NonTrivialLink, "kmt_nontrivial"));
  CHECK(has(certs, Conclusion::PrimeLink, "menasco_prime"));
  CHECK(has(certs, Conclusion::NonTrivialLink, "thistlethwaite_nontrivial"));
  CHECK(has(certs, Conclusion::CompositeLinkIffProjection, "futer_prime_iff"));
  for (const Certificate& c : certs) CHECK(replay(t, c));
  check_no_contradiction(certs);
}

TEST_CASE("granny knot: the iff rule reports a composite projection") {
  Diagram g = granny_knot();
  auto certs = certify_link(g);
  bool found = false;
  for (const Certificate& c : certs) {
    if (c.rule == "futer_prime_iff") {
      found = true;
      CHECK(c.note.find("composite") != std::string::npos);
      REQUIRE(c.composite.has_value());
      CHECK(c.composite->side_a_crossings.size() == 3);
    }
    CHECK(replay(g, c));
  }
  CHECK(found);
}

TEST_CASE("positive diagrams fire the positivity rules") {
  Diagram pos = testing::flip_all_crossings(corpus("trefoil.pd"));
  auto certs = certify_link(pos);
  CHECK(has(certs, Conclusion::NonSplitLink, "ozawa_nonsplit"));
  CHECK(has(certs, Conclusion::NonTrivialLink, "stoimenow_nontrivial"));
  CHECK(has(certs, Conclusion::PrimeLink, "ozawa_prime"));
  for (const Certificate& c : certs) CHECK(replay(pos, c));
}

TEST_CASE("the crossing-free unknot earns no non-triviality certificate") {
  auto certs = certify_link(parse("link { O(1) }"));
  for (const Certificate& c : certs) {
    CHECK(c.conclusion != Conclusion::NonTrivialLink);
    CHECK(replay(parse("link { O(1) }"), c));
  }
}

TEST_CASE("tangle certificates: prime transfer") {
  Diagram t = corpus("prime_tangle_composite_closure.pd");
  auto certs = certify_tangle(t);
  CHECK(has(certs, Conclusion::NotRational, "lickorish_thistlethwaite"));
  CHECK(has(certs, Conclusion::PrimeTangle, "mof_prime_transfer"));
  for (const Certificate& c : certs) CHECK(replay(t, c));
  check_no_contradiction(certs);
}

TEST_CASE("tangle certificates: knotted arc composite") {
  Diagram t = testing::split_trefoil_tangle();
  auto certs = certify_tangle(t);
  CHECK(has(certs, Conclusion::CompositeTangle, "knotted_arc_composite"));
  CHECK(!has(certs, Conclusion::PrimeTangle, "mof_prime_transfer"));
  for (const Certificate& c : certs) CHECK(replay(t, c));
  check_no_contradiction(certs);

  Diagram pos = positive_local_knot_tangle();
  auto pcerts = certify_tangle(pos);
  CHECK(has(pcerts, Conclusion::CompositeTangle, "knotted_arc_composite"));
  // Not strongly alternating, so no non-rationality certificate fires.
  CHECK(!has(pcerts, Conclusion::NotRational, "lickorish_thistlethwaite"));
  for (const Certificate& c : pcerts) CHECK(replay(pos, c));
}

TEST_CASE("rational twist columns earn no certificates") {
  auto certs = certify_tangle(vertical_twist_tangle(3));
  CHECK(certs.empty());
}

TEST_CASE("graph8 certificates") {
  auto planar = certify_graph8(planar_figure8_graph());
  REQUIRE(planar.size() == 1);
  CHECK(planar[0].conclusion == Conclusion::VertexSplitProjection);

  Diagram split = corpus("split_loops_local_trefoil.pd");
  auto scerts = certify_graph8(split);
  CHECK(has(scerts, Conclusion::VertexSplitProjection, "vertex_split_circle"));
  CHECK(has(scerts, Conclusion::LocalKnot, "vertex_split_local_knot"));
  for (const Certificate& c : scerts) CHECK(replay(split, c));

  Diagram interior = corpus("positive_nonalternating_local_knot.pd");
  auto icerts = certify_graph8(interior);
  CHECK(has(icerts, Conclusion::LocalKnot, "knotted_arc_local_knot"));
  CHECK(!has(icerts, Conclusion::VertexSplitProjection, "vertex_split_circle"));
  for (const Certificate& c : icerts) CHECK(replay(interior, c));

  // The strict alternating prime graph must not earn any composite-style
  // certificate.
  auto quiet = certify_graph8(corpus("strict_alternating_prime_graph.pd"));
  CHECK(quiet.empty());
  auto fig4 = certify_graph8(corpus("clasped_loops_one_smoothing_unreduced.pd"));
  CHECK(fig4.empty());
}

TEST_CASE("replay holds across the generated corpus") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    Diagram t = gen_alternating_tangle(seed, 4);
    for (const Certificate& c : certify(t)) CHECK(replay(t, c));
    Diagram d = denominator_closure(t);
    for (const Certificate& c : certify(d)) CHECK(replay(d, c));
  }
}

TEST_CASE("adding a split component keeps certificates replayable") {
  // Pure recomputation: certificates carry hypothesis values, and replaying
  // them against the same diagram is stable across repeated evaluation.
  Diagram t = corpus("trefoil.pd");
  auto certs = certify_link(t);
  for (int round = 0; round < 3; ++round)
    for (const Certificate& c : certs) CHECK(replay(t, c));
}
