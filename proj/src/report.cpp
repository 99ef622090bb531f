#include "tanglekit/report.hpp"

#include "tanglekit/generators.hpp"
#include "tanglekit/graph8.hpp"
#include "tanglekit/link_analysis.hpp"
#include "tanglekit/tangle.hpp"

namespace tanglekit {

namespace {

Json json_composite(const CompositeWitness& w) {
  return Json{{"edge_pair", {w.e, w.f}},
              {"face_pair", {w.face1, w.face2}},
              {"side_a_crossings", w.side_a_crossings},
              {"side_b_crossings", w.side_b_crossings}};
}

Json json_face(const Diagram& d, int32_t face) {
  Json corners = Json::array();
  if (face >= 0 && face < static_cast<int32_t>(d.faces.size())) {
    for (const FaceCorner& c : d.faces[face].corners) {
      switch (c.kind) {
        case FaceCorner::Kind::Node:
          corners.push_back(Json{{"node", c.node}, {"corner", c.corner}});
          break;
        case FaceCorner::Kind::Gap:
          corners.push_back(Json{{"gap", gap_name(c.gap)}});
          break;
        case FaceCorner::Kind::LoopInterior:
          corners.push_back(Json{{"loop", c.loop}});
          break;
      }
    }
  }
  return Json{{"face", face}, {"corners", corners}};
}

Json link_predicates(const Diagram& d) {
  Json j;
  j["connected"] = is_connected(d).connected;
  j["reduced"] = is_reduced(d).reduced;
  j["alternating"] = is_alternating(d);
  j["positive"] = exists_positive_orientation(d).has_value();
  j["a_adequate"] = is_A_adequate(d);
  j["b_adequate"] = is_B_adequate(d);
  j["semi_adequate"] = is_semi_adequate(d);
  j["adequate"] = is_adequate(d);
  j["twist_adequate"] = is_twist_adequate(d);
  j["state_circles"] = {{"all_a", resolution(d, ResolutionKind::AllA).circle_count()},
                        {"all_b", resolution(d, ResolutionKind::AllB).circle_count()}};
  Json regions = Json::array();
  for (const TwistRegion& r : twist_regions(d)) regions.push_back(r.crossings);
  j["twist_regions"] = regions;
  if (is_connected(d).connected) {
    auto p = is_prime_projection(d);
    j["prime_projection"] = p.prime;
    if (p.witness) j["composite_witness"] = json_composite(*p.witness);
  }
  return j;
}

Json tangle_predicates(const Diagram& d) {
  Json j;
  j["connected"] = is_connected(d).connected;
  j["reduced"] = is_reduced(d).reduced;
  j["alternating"] = is_alternating(d);
  j["strongly_alternating"] = is_strongly_alternating(d);
  MofReport m = mof(d);
  j["mof"] = {{"satisfied", mof_clause_name(m.satisfied)},
              {"numerator", {{"reduced", m.n_reduced},
                             {"alternating", m.n_alternating},
                             {"positive", m.n_positive},
                             {"connected", m.n_connected}}},
              {"denominator", {{"reduced", m.d_reduced},
                               {"alternating", m.d_alternating},
                               {"positive", m.d_positive},
                               {"connected", m.d_connected}}},
              {"both_twist_a_adequate", m.both_twist_a},
              {"both_twist_b_adequate", m.both_twist_b}};
  auto p = is_prime_tangle_projection(d);
  j["prime_projection"] = p.prime;
  if (p.witness) j["composite_witness"] = json_composite(*p.witness);
  if (auto sw = split_tangle_witness(d)) {
    j["split_witness"] = {{"face", sw->face},
                          {"gaps", {gap_name(sw->gaps[0]), gap_name(sw->gaps[1])}},
                          {"side_a_strand", sw->side_a_strand},
                          {"side_b_strand", sw->side_b_strand}};
  } else {
    j["split_witness"] = nullptr;
  }
  return j;
}

Json graph8_predicates(const Diagram& d) {
  Json j;
  j["reduced"] = is_reduced(d).reduced;
  j["alternating"] = is_alternating(d);
  j["sawollek_reduced_alternating"] = sawollek_reduced_alternating(d);
  if (auto vs = vertex_split_witness(d)) {
    j["vertex_split"] = {{"vertex", vs->vertex},
                         {"corners", vs->corners},
                         {"face", vs->face}};
  } else {
    j["vertex_split"] = nullptr;
  }
  if (auto lk = local_knot_witness(d)) {
    Json w;
    w["route"] = lk->route == LocalKnotWitness::Route::ThroughVertex ? "through-vertex"
                                                                     : "interior-disk";
    w["criterion"] = knot_criterion_name(lk->criterion);
    w["knot"] = serialize(lk->knot);
    w["knot_crossings"] = lk->knot.crossing_count();
    if (lk->circle) w["circle"] = json_composite(*lk->circle);
    if (lk->route == LocalKnotWitness::Route::ThroughVertex)
      w["vertex_corners"] = lk->vertex_corners;
    j["local_knot"] = w;
  } else {
    j["local_knot"] = nullptr;
  }
  return j;
}

}  // namespace

Json report_certificate(const Certificate& c) {
  Json j;
  j["conclusion"] = conclusion_name(c.conclusion);
  j["rule"] = c.rule;
  Json hyps = Json::array();
  for (const Hypothesis& h : c.hypotheses)
    hyps.push_back(Json{{"name", h.name}, {"value", h.value}});
  j["hypotheses"] = hyps;
  if (!c.note.empty()) j["note"] = c.note;
  if (c.composite) j["witness"] = json_composite(*c.composite);
  if (c.split)
    j["witness"] = {{"face", c.split->face},
                    {"side_a_components", c.split->side_a_components},
                    {"side_b_components", c.split->side_b_components}};
  if (c.tangle_split)
    j["witness"] = {{"face", c.tangle_split->face},
                    {"gaps", {gap_name(c.tangle_split->gaps[0]),
                              gap_name(c.tangle_split->gaps[1])}}};
  if (c.vertex_split)
    j["witness"] = {{"vertex", c.vertex_split->vertex},
                    {"corners", c.vertex_split->corners},
                    {"face", c.vertex_split->face}};
  if (c.local_knot) {
    j["witness"] = {{"route", c.local_knot->route == LocalKnotWitness::Route::ThroughVertex
                                  ? "through-vertex"
                                  : "interior-disk"},
                    {"criterion", knot_criterion_name(c.local_knot->criterion)},
                    {"knot", serialize(c.local_knot->knot)}};
  }
  if (c.knotted_arc) {
    j["witness"] = {{"circle", json_composite(c.knotted_arc->circle)},
                    {"criterion", knot_criterion_name(c.knotted_arc->criterion)},
                    {"knot", serialize(c.knotted_arc->knot)}};
  }
  return j;
}

Json report_diagram(const Diagram& d) {
  Json j;
  j["schema"] = kReportSchema;
  j["mode"] = mode_name(d.mode);
  j["summary"] = {{"crossings", d.crossing_count()},
                  {"edges", d.edge_count},
                  {"faces", d.faces.size()},
                  {"strands", d.strands.size()},
                  {"free_loops", d.free_loops().size()},
                  {"components", d.component_count}};
  j["canonical"] = canonical_text(d);
  switch (d.mode) {
    case Mode::Link: j["predicates"] = link_predicates(d); break;
    case Mode::Tangle: j["predicates"] = tangle_predicates(d); break;
    case Mode::Graph8: j["predicates"] = graph8_predicates(d); break;
  }
  if (d.mode == Mode::Tangle) {
    j["closures"] = {{"numerator", serialize(numerator_closure(d))},
                     {"denominator", serialize(denominator_closure(d))}};
  }
  if (d.mode == Mode::Graph8) {
    j["excised_tangle"] = serialize(excise_vertex(d));
    j["smoothings"] = {serialize(smooth_vertex(d, true)), serialize(smooth_vertex(d, false))};
  }
  Json certs = Json::array();
  for (const Certificate& c : certify(d)) certs.push_back(report_certificate(c));
  j["certificates"] = certs;

  // A face table keyed the way witnesses reference it.
  Json faces = Json::array();
  for (size_t f = 0; f < d.faces.size(); ++f)
    faces.push_back(json_face(d, static_cast<int32_t>(f)));
  j["faces"] = faces;
  return j;
}

Json report_file(const std::string& name, const std::string& text) {
  Json j;
  j["file"] = name;
  try {
    Diagram d = parse(text);
    Json inner = report_diagram(d);
    for (auto& [key, value] : inner.items()) j[key] = value;
    j["status"] = "ok";
  } catch (const ParseError& e) {
    j["status"] = "rejected";
    j["error"] = {{"message", e.what()}, {"line", e.line}, {"col", e.col}};
  } catch (const DiagramError& e) {
    j["status"] = "rejected";
    j["error"] = {{"message", e.what()}};
  }
  return j;
}

}  // namespace tanglekit
