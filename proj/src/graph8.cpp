#include "tanglekit/graph8.hpp"

#include "rewire.hpp"

namespace tanglekit {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw DiagramError(msg); }

void require_graph8(const Diagram& g, const char* who) {
  if (g.mode != Mode::Graph8) fail(std::string(who) + " expects graph8 mode");
}

// The vertex disk is the complement of the tangle disk, so the vertex's ccw
// rotation meets the boundary circle in clockwise compass order.
constexpr int kSlotCompass[4] = {SW, NW, NE, SE};

// Rebuild g without its vertex; each vertex slot maps to the caller's site.
Diagram rebuild_without_vertex(const Diagram& g, NodeId v,
                               const std::array<int, 4>& slot_site, Rewire& rw,
                               DiagramBuilder& builder, Mode mode) {
  std::vector<NodeId> node_map(g.node_count(), -1);
  for (NodeId n = 0; n < g.node_count(); ++n) {
    if (n == v) continue;
    node_map[n] = builder.add_crossing(g.nodes[n].over0);
  }
  for (EdgeId e = 0; e < g.edge_count; ++e) {
    int site[2];
    for (int end = 0; end < 2; ++end) {
      const Attach& a = g.attach[dart_of(e, end)];
      if (a.node == v)
        site[end] = slot_site[a.slot];
      else
        site[end] = rw.add_terminal(Attach::at_slot(node_map[a.node], a.slot));
    }
    rw.add_segment(site[0], site[1]);
  }
  return rw.finish(builder, mode, Options{});
}

}  // namespace

Diagram excise_vertex(const Diagram& g) {
  require_graph8(g, "excise_vertex");
  NodeId v = g.graph_vertex();
  Rewire rw;
  DiagramBuilder builder;
  std::array<int, 4> sites;
  for (int s = 0; s < 4; ++s) sites[s] = rw.add_terminal(Attach::at_end(kSlotCompass[s]));
  return rebuild_without_vertex(g, v, sites, rw, builder, Mode::Tangle);
}

Diagram smooth_vertex(const Diagram& g, bool pairing_01_23) {
  require_graph8(g, "smooth_vertex");
  NodeId v = g.graph_vertex();
  Rewire rw;
  DiagramBuilder builder;
  std::array<int, 4> sites;
  for (int s = 0; s < 4; ++s) sites[s] = rw.add_joint();
  if (pairing_01_23) {
    rw.add_segment(sites[0], sites[1]);
    rw.add_segment(sites[2], sites[3]);
  } else {
    rw.add_segment(sites[1], sites[2]);
    rw.add_segment(sites[3], sites[0]);
  }
  return rebuild_without_vertex(g, v, sites, rw, builder, Mode::Link);
}

Diagram make_graph8_from_tangle(const Diagram& t) {
  if (t.mode != Mode::Tangle) fail("make_graph8_from_tangle expects tangle mode");
  DiagramBuilder builder;
  for (const Node& n : t.nodes) builder.add_crossing(n.over0);
  NodeId v = builder.add_vertex();
  Rewire rw;
  std::array<int, 4> compass_site;
  for (int s = 0; s < 4; ++s)
    compass_site[kSlotCompass[s]] = rw.add_terminal(Attach::at_slot(v, s));
  for (EdgeId e = 0; e < t.edge_count; ++e) {
    if (t.edge_is_free_loop(e)) fail("make_graph8_from_tangle: free loop in tangle");
    int site[2];
    for (int end = 0; end < 2; ++end) {
      const Attach& a = t.attach[dart_of(e, end)];
      site[end] = a.kind == Attach::Kind::Slot
                      ? rw.add_terminal(Attach::at_slot(a.node, a.slot))
                      : compass_site[a.end];
    }
    rw.add_segment(site[0], site[1]);
  }
  return rw.finish(builder, Mode::Graph8, Options{});
}

bool sawollek_reduced_alternating(const Diagram& g) {
  require_graph8(g, "sawollek_reduced_alternating");
  for (bool pairing : {true, false}) {
    Diagram s = smooth_vertex(g, pairing);
    if (!is_reduced(s).reduced || !is_alternating(s)) return false;
  }
  return true;
}

std::optional<VertexSplitWitness> vertex_split_witness(const Diagram& g) {
  require_graph8(g, "vertex_split_witness");
  NodeId v = g.graph_vertex();
  for (int c : {0, 1}) {
    int32_t f1 = g.face_at_corner(v, c);
    int32_t f2 = g.face_at_corner(v, c + 2);
    if (f1 == f2) {
      VertexSplitWitness w;
      w.vertex = v;
      w.corners = {c, c + 2};
      w.face = f1;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<LocalKnotWitness> local_knot_witness(const Diagram& g) {
  require_graph8(g, "local_knot_witness");
  Diagram t = excise_vertex(g);

  if (auto split = split_tangle_witness(t)) {
    for (int strand : {split->side_a_strand, split->side_b_strand}) {
      Diagram k = close_string(t, strand);
      if (k.crossing_count() < 1) continue;
      if (auto crit = nontrivial_knot_criterion(k)) {
        LocalKnotWitness w;
        w.route = LocalKnotWitness::Route::ThroughVertex;
        // Chord gaps {top,bottom} correspond to vertex corners {1,3} under
        // the slot->compass assignment, {right,left} to corners {0,2}.
        w.vertex_corners = split->gaps[0] == 0 ? std::array<int, 2>{1, 3}
                                               : std::array<int, 2>{0, 2};
        w.split_strand = strand;
        w.knot = std::move(k);
        w.criterion = *crit;
        return w;
      }
    }
  }

  if (mof(t).satisfied != MofClause::None) {
    if (auto arc = knotted_arc_witness(t)) {
      LocalKnotWitness w;
      w.route = LocalKnotWitness::Route::InteriorDisk;
      w.circle = arc->circle;
      w.knot = std::move(arc->knot);
      w.criterion = arc->criterion;
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace tanglekit
