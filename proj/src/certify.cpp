#include "tanglekit/certify.hpp"

#include <algorithm>

namespace tanglekit {

const char* conclusion_name(Conclusion c) {
  switch (c) {
    case Conclusion::NonSplitLink: return "NonSplitLink";
    case Conclusion::NonTrivialLink: return "NonTrivialLink";
    case Conclusion::PrimeLink: return "PrimeLink";
    case Conclusion::CompositeLinkIffProjection: return "CompositeLinkIffProjection";
    case Conclusion::PrimeTangle: return "PrimeTangle";
    case Conclusion::CompositeTangle: return "CompositeTangle";
    case Conclusion::LocalKnot: return "LocalKnot";
    case Conclusion::VertexSplitProjection: return "VertexSplitProjection";
    case Conclusion::SplitGraph: return "SplitGraph";
    case Conclusion::NotRational: return "NotRational";
  }
  return "?";
}

namespace {

std::string bool_str(bool b) { return b ? "true" : "false"; }

struct LinkFacts {
  bool connected, reduced, alternating, positive, semi_adequate, twist_adequate;
  int crossings, components;
  bool nontrivial_certified() const {
    bool kmt = connected && reduced && alternating && crossings >= 1;
    bool stoimenow = components == 1 && reduced && positive && crossings >= 1;
    bool thistle = semi_adequate && crossings >= 1 && reduced;
    return kmt || stoimenow || thistle;
  }
};

LinkFacts link_facts(const Diagram& d) {
  LinkFacts f;
  f.connected = is_connected(d).connected;
  f.reduced = is_reduced(d).reduced;
  f.alternating = is_alternating(d);
  f.positive = exists_positive_orientation(d).has_value();
  f.semi_adequate = is_semi_adequate(d);
  f.twist_adequate = is_twist_adequate(d);
  f.crossings = d.crossing_count();
  f.components = static_cast<int>(d.strands.size());
  return f;
}

Certificate make(Conclusion c, std::string rule, std::vector<Hypothesis> hyps) {
  Certificate cert;
  cert.conclusion = c;
  cert.rule = std::move(rule);
  cert.hypotheses = std::move(hyps);
  return cert;
}

}  // namespace

std::vector<Certificate> certify_link(const Diagram& d) {
  if (d.mode != Mode::Link) throw DiagramError("certify_link expects link mode");
  std::vector<Certificate> out;
  LinkFacts f = link_facts(d);

  Hypothesis h_conn{"connected", bool_str(f.connected)};
  Hypothesis h_red{"reduced", bool_str(f.reduced)};
  Hypothesis h_alt{"alternating", bool_str(f.alternating)};
  Hypothesis h_pos{"positive", bool_str(f.positive)};
  Hypothesis h_semi{"semi_adequate", bool_str(f.semi_adequate)};
  Hypothesis h_twist{"twist_adequate", bool_str(f.twist_adequate)};
  Hypothesis h_cross{"crossings", std::to_string(f.crossings)};
  Hypothesis h_comp{"components", std::to_string(f.components)};

  std::optional<PrimenessResult> primeness;
  auto prime = [&]() -> const PrimenessResult& {
    if (!primeness) primeness = is_prime_projection(d);
    return *primeness;
  };

  if (f.connected && f.reduced && f.alternating)
    out.push_back(make(Conclusion::NonSplitLink, "menasco_nonsplit", {h_conn, h_red, h_alt}));
  if (f.connected && f.reduced && f.alternating && f.crossings >= 1)
    out.push_back(make(Conclusion::NonTrivialLink, "kmt_nontrivial",
                       {h_conn, h_red, h_alt, h_cross}));
  if (f.connected && f.reduced && f.alternating && prime().prime) {
    Certificate c = make(Conclusion::PrimeLink, "menasco_prime",
                         {h_conn, h_red, h_alt, {"prime_projection", "true"}});
    out.push_back(std::move(c));
  }
  if (f.semi_adequate && f.crossings >= 1 && f.reduced)
    out.push_back(make(Conclusion::NonTrivialLink, "thistlethwaite_nontrivial",
                       {h_semi, h_cross, h_red}));
  if (f.semi_adequate && f.crossings >= 1 && f.connected)
    out.push_back(make(Conclusion::NonSplitLink, "thistlethwaite_nonsplit",
                       {h_semi, h_cross, h_conn}));
  if (f.connected && f.positive)
    out.push_back(make(Conclusion::NonSplitLink, "ozawa_nonsplit", {h_conn, h_pos}));
  if (f.components == 1 && f.reduced && f.positive && f.crossings >= 1)
    out.push_back(make(Conclusion::NonTrivialLink, "stoimenow_nontrivial",
                       {h_comp, h_red, h_pos, h_cross}));
  if (f.connected && f.positive && f.nontrivial_certified() && prime().prime) {
    out.push_back(make(Conclusion::PrimeLink, "ozawa_prime",
                       {h_conn, h_pos, {"nontrivial_certified", "true"},
                        {"prime_projection", "true"}}));
  }
  if (f.connected && f.reduced && f.twist_adequate) {
    Certificate c = make(Conclusion::CompositeLinkIffProjection, "futer_prime_iff",
                         {h_conn, h_red, h_twist,
                          {"prime_projection", bool_str(prime().prime)}});
    c.note = prime().prime ? "projection prime, hence the link is prime"
                           : "projection composite, hence the link is composite";
    if (!prime().prime) c.composite = prime().witness;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Certificate> certify_tangle(const Diagram& t) {
  if (t.mode != Mode::Tangle) throw DiagramError("certify_tangle expects tangle mode");
  std::vector<Certificate> out;

  bool strongly_alt = is_strongly_alternating(t);
  bool connected = is_connected(t).connected;
  MofReport m = mof(t);
  PrimenessResult prime = is_prime_tangle_projection(t);

  Hypothesis h_sa{"strongly_alternating", bool_str(strongly_alt)};
  Hypothesis h_conn{"connected", bool_str(connected)};
  Hypothesis h_mof{"mof", mof_clause_name(m.satisfied)};
  Hypothesis h_prime{"tangle_prime_projection", bool_str(prime.prime)};

  bool not_rational = strongly_alt && connected;
  if (not_rational) {
    Certificate c = make(Conclusion::NotRational, "lickorish_thistlethwaite",
                         {h_sa, h_conn});
    c.note = "strongly alternating and connected tangle projections are non-rational";
    out.push_back(std::move(c));
  }
  if (m.satisfied != MofClause::None && not_rational) {
    if (prime.prime) {
      out.push_back(make(Conclusion::PrimeTangle, "mof_prime_transfer",
                         {h_mof, {"not_rational_certified", "true"}, h_prime}));
    } else {
      Certificate c = make(Conclusion::CompositeTangle, "mof_prime_transfer",
                           {h_mof, {"not_rational_certified", "true"}, h_prime});
      c.composite = prime.witness;
      out.push_back(std::move(c));
    }
  }
  // The knotted-arc route needs no non-rationality: a composite circle whose
  // enclosed arc closes to a certified non-trivial knot.
  if (m.satisfied != MofClause::None && !prime.prime) {
    if (auto arc = knotted_arc_witness(t)) {
      Certificate c = make(Conclusion::CompositeTangle, "knotted_arc_composite",
                           {h_mof, h_prime,
                            {"knot_criterion", knot_criterion_name(arc->criterion)},
                            {"knot_crossings", std::to_string(arc->knot.crossing_count())}});
      c.note = strongly_alt ? "strongly alternating case (Cromwell's composite direction)"
                            : "";
      c.knotted_arc = std::make_shared<KnottedArcWitness>(std::move(*arc));
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Certificate> certify_graph8(const Diagram& g) {
  if (g.mode != Mode::Graph8) throw DiagramError("certify_graph8 expects graph8 mode");
  std::vector<Certificate> out;

  bool shadow_connected = g.component_count <= 1;
  if (!shadow_connected) {
    // Unreachable for validated figure-eight diagrams; a split projection
    // lifts to a splitting sphere directly.
    out.push_back(make(Conclusion::SplitGraph, "split_projection",
                       {{"shadow_connected", "false"}}));
    return out;
  }

  if (auto vs = vertex_split_witness(g)) {
    Certificate c = make(Conclusion::VertexSplitProjection, "vertex_split_circle",
                         {{"shadow_connected", "true"},
                          {"vertex_split", "true"}});
    c.vertex_split = *vs;
    out.push_back(std::move(c));
  }

  if (auto lk = local_knot_witness(g)) {
    bool through_vertex = lk->route == LocalKnotWitness::Route::ThroughVertex;
    std::vector<Hypothesis> hyps;
    if (through_vertex) {
      hyps.push_back({"vertex_split", "true"});
    } else {
      hyps.push_back({"excised_mof", mof_clause_name(mof(excise_vertex(g)).satisfied)});
      hyps.push_back({"excised_tangle_composite", "true"});
    }
    hyps.push_back({"knot_criterion", knot_criterion_name(lk->criterion)});
    hyps.push_back({"knot_crossings", std::to_string(lk->knot.crossing_count())});
    Certificate c = make(Conclusion::LocalKnot,
                         through_vertex ? "vertex_split_local_knot" : "knotted_arc_local_knot",
                         std::move(hyps));
    c.note = through_vertex
                 ? "knot visible in a disk whose boundary passes through the vertex"
                 : "knot visible in a disk disjoint from the vertex";
    c.local_knot = std::make_shared<LocalKnotWitness>(std::move(*lk));
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Certificate> certify(const Diagram& d) {
  switch (d.mode) {
    case Mode::Link: return certify_link(d);
    case Mode::Tangle: return certify_tangle(d);
    case Mode::Graph8: return certify_graph8(d);
  }
  return {};
}

std::string eval_hypothesis(const Diagram& d, const Certificate& c, const std::string& name) {
  const Diagram* knot = nullptr;
  if (c.local_knot) knot = &c.local_knot->knot;
  if (c.knotted_arc) knot = &c.knotted_arc->knot;

  if (name == "connected") return bool_str(is_connected(d).connected);
  if (name == "reduced") return bool_str(is_reduced(d).reduced);
  if (name == "alternating") return bool_str(is_alternating(d));
  if (name == "positive") return bool_str(exists_positive_orientation(d).has_value());
  if (name == "semi_adequate") return bool_str(is_semi_adequate(d));
  if (name == "twist_adequate") return bool_str(is_twist_adequate(d));
  if (name == "crossings") return std::to_string(d.crossing_count());
  if (name == "components") return std::to_string(d.strands.size());
  if (name == "prime_projection") return bool_str(is_prime_projection(d).prime);
  if (name == "nontrivial_certified") return bool_str(link_facts(d).nontrivial_certified());
  if (name == "strongly_alternating") return bool_str(is_strongly_alternating(d));
  if (name == "mof") return mof_clause_name(mof(d).satisfied);
  if (name == "tangle_prime_projection")
    return bool_str(is_prime_tangle_projection(d).prime);
  if (name == "not_rational_certified")
    return bool_str(is_strongly_alternating(d) && is_connected(d).connected);
  if (name == "shadow_connected") return bool_str(d.component_count <= 1);
  if (name == "vertex_split") return bool_str(vertex_split_witness(d).has_value());
  if (name == "excised_mof") return mof_clause_name(mof(excise_vertex(d)).satisfied);
  if (name == "excised_tangle_composite")
    return bool_str(!is_prime_tangle_projection(excise_vertex(d)).prime);
  if (name == "knot_criterion") {
    if (!knot) return "?";
    auto crit = nontrivial_knot_criterion(*knot);
    return crit ? knot_criterion_name(*crit) : "none";
  }
  if (name == "knot_crossings") return knot ? std::to_string(knot->crossing_count()) : "?";
  throw DiagramError("unknown hypothesis name: " + name);
}

bool replay(const Diagram& d, const Certificate& c) {
  for (const Hypothesis& h : c.hypotheses)
    if (eval_hypothesis(d, c, h.name) != h.value) return false;
  return true;
}

}  // namespace tanglekit
