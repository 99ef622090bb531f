#include "tanglekit/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tanglekit {

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::Link: return "link";
    case Mode::Tangle: return "tangle";
    case Mode::Graph8: return "graph8";
  }
  return "?";
}

const char* compass_name(int c) {
  static const char* names[4] = {"nw", "ne", "se", "sw"};
  return (c >= 0 && c < 4) ? names[c] : "?";
}

const char* gap_name(int gap) {
  static const char* names[4] = {"top", "right", "bottom", "left"};
  return (gap >= 0 && gap < 4) ? names[gap] : "?";
}

int Diagram::crossing_count() const {
  int n = 0;
  for (const Node& nd : nodes)
    if (nd.kind == NodeKind::Crossing) ++n;
  return n;
}

std::vector<EdgeId> Diagram::free_loops() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edge_count; ++e)
    if (edge_is_free_loop(e)) out.push_back(e);
  return out;
}

NodeId Diagram::graph_vertex() const {
  for (NodeId n = 0; n < node_count(); ++n)
    if (nodes[n].kind == NodeKind::GraphVertex) return n;
  throw DiagramError("diagram has no graph vertex");
}

std::string Diagram::describe() const {
  std::ostringstream os;
  os << mode_name(mode) << ": " << crossing_count() << " crossings, "
     << edge_count << " edges, " << faces.size() << " faces, "
     << strands.size() << " strands";
  return os.str();
}

// ---------------------------------------------------------------------------
// Builder

NodeId DiagramBuilder::add_crossing(int over0) {
  if (over0 != 0 && over0 != 1) throw DiagramError("crossing over0 must be 0 or 1");
  Node n;
  n.kind = NodeKind::Crossing;
  n.over0 = over0;
  nodes_.push_back(n);
  return static_cast<NodeId>(nodes_.size()) - 1;
}

NodeId DiagramBuilder::add_vertex() {
  Node n;
  n.kind = NodeKind::GraphVertex;
  nodes_.push_back(n);
  return static_cast<NodeId>(nodes_.size()) - 1;
}

EdgeId DiagramBuilder::add_edge(Attach a, Attach b) {
  EdgeId e = static_cast<EdgeId>(attach_.size() / 2);
  attach_.push_back(a);
  attach_.push_back(b);
  return e;
}

EdgeId DiagramBuilder::connect(NodeId n1, int slot1, NodeId n2, int slot2) {
  return add_edge(Attach::at_slot(n1, slot1), Attach::at_slot(n2, slot2));
}

EdgeId DiagramBuilder::connect_end(int compass, NodeId n, int slot) {
  return add_edge(Attach::at_end(compass), Attach::at_slot(n, slot));
}

EdgeId DiagramBuilder::connect_ends(int compass1, int compass2) {
  return add_edge(Attach::at_end(compass1), Attach::at_end(compass2));
}

EdgeId DiagramBuilder::add_free_loop() { return add_edge(Attach::free(), Attach::free()); }

Diagram DiagramBuilder::build(Mode mode, Options options) {
  Diagram d;
  d.mode = mode;
  d.options = options;
  d.nodes = nodes_;
  d.edge_count = static_cast<int>(attach_.size() / 2);
  d.attach = attach_;
  finalize(d);
  return d;
}

// ---------------------------------------------------------------------------
// Face walk.
//
// Rotations are counterclockwise.  A face is walked with the region on the
// left: arriving at node u along the dart in slot j, the walk records the
// corner between slots j-1 and j, then leaves along the edge in slot j-1.
// Arriving at tangle endpoint P, the walk follows the boundary gap to the
// counterclockwise-adjacent endpoint Q = (P+3)%4 and re-enters the disk along
// Q's edge.  The region outside the disk boundary is never walked.

std::vector<Face> walk_faces(const Diagram& d) {
  std::vector<Face> faces;
  const int dart_count = 2 * d.edge_count;
  std::vector<char> seen(dart_count, 0);

  bool any_attached = false;
  for (Dart s = 0; s < dart_count; ++s) {
    if (d.attach[s].kind == Attach::Kind::Free) continue;
    any_attached = true;
    if (seen[s]) continue;
    Face face;
    Dart cur = s;
    do {
      seen[cur] = 1;
      face.darts.push_back(cur);
      const Attach& a = d.attach[cur];
      if (a.kind == Attach::Kind::Slot) {
        int corner = (a.slot + 3) % 4;
        FaceCorner c;
        c.kind = FaceCorner::Kind::Node;
        c.node = a.node;
        c.corner = corner;
        face.corners.push_back(c);
        cur = dart_twin(d.nodes[a.node].slot_dart[corner]);
      } else {  // endpoint P: traverse gap (P+3)%4 to endpoint (P+3)%4
        int p = a.end;
        int gap = (p + 3) % 4;
        FaceCorner c;
        c.kind = FaceCorner::Kind::Gap;
        c.gap = gap;
        face.corners.push_back(c);
        face.touches_gap[gap] = true;
        int q = (p + 3) % 4;
        cur = dart_twin(d.endpoint_dart[q]);
      }
    } while (cur != s);
    faces.push_back(std::move(face));
  }

  if (!any_attached && d.mode == Mode::Link) {
    faces.push_back(Face{});  // the bare sphere
  }

  for (EdgeId e = 0; e < d.edge_count; ++e) {
    if (!d.edge_is_free_loop(e)) continue;
    Face face;
    FaceCorner c;
    c.kind = FaceCorner::Kind::LoopInterior;
    c.loop = e;
    face.corners.push_back(c);
    face.darts.push_back(dart_of(e, 0));
    faces.push_back(std::move(face));
  }
  return faces;
}

// ---------------------------------------------------------------------------
// Strand tracing: strands run straight through crossings (slot i -> i+2) and
// stop at tangle endpoints and at the graph vertex.

namespace {

Strand trace_strand(const Diagram& d, Dart first, std::vector<char>& seen) {
  Strand s;
  Dart cur = first;  // we walk edge dart_edge(cur) toward end dart_end(cur)
  for (;;) {
    seen[cur] = 1;
    seen[dart_twin(cur)] = 1;
    s.steps.push_back(cur);
    s.edges.push_back(dart_edge(cur));
    const Attach& a = d.attach[cur];
    if (a.kind == Attach::Kind::End) {
      s.to_end = a.end;
      break;
    }
    const Node& node = d.nodes[a.node];
    if (node.kind == NodeKind::GraphVertex) {
      s.at_vertex = true;
      break;
    }
    s.passages.push_back({a.node, a.slot, node.slot_is_over(a.slot)});
    Dart out = node.slot_dart[(a.slot + 2) % 4];
    cur = dart_twin(out);
    if (cur == first) {
      s.closed = true;
      break;
    }
  }
  return s;
}

}  // namespace

static std::vector<Strand> trace_strands(const Diagram& d) {
  std::vector<Strand> out;
  const int dart_count = 2 * d.edge_count;
  std::vector<char> seen(dart_count, 0);

  // Open strands from tangle endpoints, NW first.
  if (d.mode == Mode::Tangle) {
    for (int c = 0; c < 4; ++c) {
      Dart start = d.endpoint_dart[c];
      if (start < 0 || seen[start]) continue;
      Strand s = trace_strand(d, dart_twin(start), seen);
      s.from_end = c;
      out.push_back(std::move(s));
    }
  }
  // Graph-8 loops, leaving the vertex from slot 0 upward.
  for (NodeId n = 0; n < d.node_count(); ++n) {
    if (d.nodes[n].kind != NodeKind::GraphVertex) continue;
    for (int slot = 0; slot < 4; ++slot) {
      Dart start = d.nodes[n].slot_dart[slot];
      if (seen[start]) continue;
      Strand s = trace_strand(d, dart_twin(start), seen);
      s.at_vertex = true;
      out.push_back(std::move(s));
    }
  }
  // Remaining closed strands and free loops.
  for (Dart start = 0; start < dart_count; ++start) {
    if (seen[start]) continue;
    if (d.attach[start].kind == Attach::Kind::Free) {
      Strand s;
      s.closed = true;
      s.free_loop = dart_edge(start);
      s.edges.push_back(dart_edge(start));
      seen[start] = 1;
      seen[dart_twin(start)] = 1;
      out.push_back(std::move(s));
      continue;
    }
    out.push_back(trace_strand(d, start, seen));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validation + finalize

namespace {

struct UnionFind {
  std::vector<int32_t> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int32_t find(int32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int32_t a, int32_t b) { parent[find(a)] = find(b); }
};

[[noreturn]] void fail(const std::string& msg) { throw DiagramError(msg); }

}  // namespace

void finalize(Diagram& d) {
  const int dart_count = 2 * d.edge_count;
  if (static_cast<int>(d.attach.size()) != dart_count)
    fail("attach table size mismatch");

  // Rebuild node slot tables from the attach table and check occupancy.
  for (Node& n : d.nodes) n.slot_dart = {-1, -1, -1, -1};
  d.endpoint_dart = {-1, -1, -1, -1};
  for (Dart dd = 0; dd < dart_count; ++dd) {
    const Attach& a = d.attach[dd];
    switch (a.kind) {
      case Attach::Kind::Free:
        break;
      case Attach::Kind::Slot: {
        if (a.node < 0 || a.node >= d.node_count()) fail("attachment to unknown node");
        if (a.slot < 0 || a.slot > 3) fail("slot index out of range");
        Dart& cell = d.nodes[a.node].slot_dart[a.slot];
        if (cell != -1) fail("two edge ends attached to one node slot");
        cell = dd;
        break;
      }
      case Attach::Kind::End: {
        if (d.mode != Mode::Tangle) fail("boundary endpoint outside tangle mode");
        if (a.end < 0 || a.end > 3) fail("bad compass position");
        Dart& cell = d.endpoint_dart[a.end];
        if (cell != -1) fail("two edge ends attached to one boundary endpoint");
        cell = dd;
        break;
      }
    }
  }
  for (NodeId n = 0; n < d.node_count(); ++n) {
    const Node& node = d.nodes[n];
    for (int s = 0; s < 4; ++s)
      if (node.slot_dart[s] == -1) fail("node with unoccupied slot");
    if (node.kind == NodeKind::Crossing && node.over0 != 0 && node.over0 != 1)
      fail("crossing without over-strand data");
    if (node.kind == NodeKind::GraphVertex && node.over0 != -1)
      fail("graph vertex carries over-strand data");
  }
  for (EdgeId e = 0; e < d.edge_count; ++e) {
    bool f0 = d.attach[dart_of(e, 0)].kind == Attach::Kind::Free;
    bool f1 = d.attach[dart_of(e, 1)].kind == Attach::Kind::Free;
    if (f0 != f1) fail("edge with exactly one free end");
  }

  // Mode constraints.
  int vertex_count = 0;
  for (const Node& n : d.nodes)
    if (n.kind == NodeKind::GraphVertex) ++vertex_count;
  switch (d.mode) {
    case Mode::Link:
      if (vertex_count != 0) fail("link mode does not allow graph vertices");
      for (int c = 0; c < 4; ++c)
        if (d.endpoint_dart[c] != -1) fail("link mode does not allow endpoints");
      break;
    case Mode::Tangle:
      if (vertex_count != 0) fail("tangle mode does not allow graph vertices");
      for (int c = 0; c < 4; ++c)
        if (d.endpoint_dart[c] == -1)
          fail(std::string("tangle endpoint ") + compass_name(c) + " is unattached");
      break;
    case Mode::Graph8:
      if (vertex_count != 1) fail("graph8 mode requires exactly one 4-valent vertex");
      for (int c = 0; c < 4; ++c)
        if (d.endpoint_dart[c] != -1) fail("graph8 mode does not allow endpoints");
      if (!d.free_loops().empty()) fail("graph8 mode does not allow free loops");
      break;
  }

  // Shadow components over nodes and edges (free loops are own components).
  {
    UnionFind uf(d.node_count() + d.edge_count);
    auto edge_elem = [&](EdgeId e) { return d.node_count() + e; };
    for (EdgeId e = 0; e < d.edge_count; ++e) {
      for (int end = 0; end < 2; ++end) {
        const Attach& a = d.attach[dart_of(e, end)];
        if (a.kind == Attach::Kind::Slot) uf.unite(edge_elem(e), a.node);
      }
    }
    d.component_of_node.assign(d.node_count(), -1);
    d.component_of_edge.assign(d.edge_count, -1);
    std::vector<int32_t> root_to_comp(d.node_count() + d.edge_count, -1);
    int next = 0;
    for (EdgeId e = 0; e < d.edge_count; ++e) {
      int32_t r = uf.find(edge_elem(e));
      if (root_to_comp[r] == -1) root_to_comp[r] = next++;
      d.component_of_edge[e] = root_to_comp[r];
    }
    for (NodeId n = 0; n < d.node_count(); ++n) {
      int32_t r = uf.find(n);
      if (root_to_comp[r] == -1) root_to_comp[r] = next++;  // isolated node: impossible
      d.component_of_node[n] = root_to_comp[r];
    }
    d.component_count = next;
  }

  // Faces and the per-dart face table.
  d.faces = walk_faces(d);
  d.face_of_dart.assign(dart_count, -1);
  d.gap_face = {-1, -1, -1, -1};
  for (size_t f = 0; f < d.faces.size(); ++f) {
    const Face& face = d.faces[f];
    for (Dart dd : face.darts) d.face_of_dart[dd] = static_cast<int32_t>(f);
    for (int g = 0; g < 4; ++g)
      if (face.touches_gap[g]) d.gap_face[g] = static_cast<int32_t>(f);
  }

  // Planarity via Euler's formula, per component.  Components touching the
  // tangle boundary form one complex with the boundary circle: counting the
  // 4 endpoints as vertices, the 4 gaps as edges and the outer region as one
  // face, V - E + F = 2 is equivalent to V - E + F_interior = 1 below.
  {
    std::vector<int> comp_nodes(d.component_count, 0);
    std::vector<int> comp_edges(d.component_count, 0);
    std::vector<int> comp_faces(d.component_count, 0);
    std::vector<char> comp_boundary(d.component_count, 0);
    for (NodeId n = 0; n < d.node_count(); ++n) comp_nodes[d.component_of_node[n]]++;
    for (EdgeId e = 0; e < d.edge_count; ++e) {
      if (d.edge_is_free_loop(e)) continue;
      comp_edges[d.component_of_edge[e]]++;
      for (int end = 0; end < 2; ++end)
        if (d.attach[dart_of(e, end)].kind == Attach::Kind::End)
          comp_boundary[d.component_of_edge[e]] = 1;
    }
    int boundary_faces = 0;
    for (const Face& face : d.faces) {
      if (face.darts.empty()) continue;  // bare sphere
      if (face.corners.front().kind == FaceCorner::Kind::LoopInterior) continue;
      bool has_gap = false;
      for (int g = 0; g < 4; ++g) has_gap = has_gap || face.touches_gap[g];
      if (has_gap) {
        ++boundary_faces;
      } else {
        comp_faces[d.component_of_edge[dart_edge(face.darts.front())]]++;
      }
    }
    int boundary_nodes = 0, boundary_edges = 0;
    for (int c = 0; c < d.component_count; ++c) {
      if (comp_edges[c] == 0) continue;  // free loop component
      if (comp_boundary[c]) {
        boundary_nodes += comp_nodes[c];
        boundary_edges += comp_edges[c];
        boundary_faces += comp_faces[c];
      } else if (comp_nodes[c] - comp_edges[c] + comp_faces[c] != 2) {
        fail("rotation data is not planar (Euler check failed)");
      }
    }
    if (d.mode == Mode::Tangle &&
        boundary_nodes - boundary_edges + boundary_faces != 1)
      fail("rotation data is not planar (Euler check failed at the disk boundary)");
  }

  // Strands, plus tangle strand-structure constraints.
  d.strands = trace_strands(d);
  if (d.mode == Mode::Tangle) {
    int open = 0, closed = 0;
    for (const Strand& s : d.strands) {
      if (s.from_end >= 0) ++open;
      if (s.closed || s.free_loop >= 0) ++closed;
    }
    if (open != 2) fail("tangle must have exactly 2 open strands");
    if (closed > 0 && !d.options.allow_closed_in_tangle)
      fail("closed component inside a tangle (pass allow_closed_in_tangle to accept)");
  }
  if (d.mode == Mode::Graph8) {
    int at_vertex = 0;
    for (const Strand& s : d.strands)
      if (s.at_vertex) ++at_vertex;
    if (at_vertex != 2) fail("figure-eight graph must have exactly 2 loops at the vertex");
    if (d.strands.size() != 2)
      fail("graph8 mode does not allow components disjoint from the vertex");
  }
}

}  // namespace tanglekit
