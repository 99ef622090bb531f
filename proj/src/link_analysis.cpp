#include "tanglekit/link_analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tanglekit {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw DiagramError(msg); }

struct UnionFind {
  std::vector<int32_t> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int32_t find(int32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int32_t a, int32_t b) { parent[find(a)] = find(b); }
};

}  // namespace

// ---------------------------------------------------------------------------
// Connectivity

ConnectivityResult is_connected(const Diagram& d) {
  if (d.mode == Mode::Graph8) fail("is_connected expects link or tangle mode");
  ConnectivityResult r;
  r.connected = d.component_count <= 1;
  if (r.connected) return r;

  SplitWitness w;
  for (int c = 0; c < d.component_count; ++c)
    (c == 0 ? w.side_a_components : w.side_b_components).push_back(c);
  // A face in which a circle separating side a from side b can be drawn:
  // for a free loop, the circle runs parallel to the loop just outside it;
  // otherwise any face of the second component works once siblings are nested.
  int32_t other = w.side_b_components.front();
  for (size_t f = 0; f < d.faces.size() && w.face < 0; ++f) {
    const Face& face = d.faces[f];
    for (const FaceCorner& c : face.corners) {
      int32_t comp = -1;
      if (c.kind == FaceCorner::Kind::Node) comp = d.component_of_node[c.node];
      if (c.kind == FaceCorner::Kind::LoopInterior) comp = d.component_of_edge[c.loop];
      if (comp == other) {
        w.face = static_cast<int32_t>(f);
        break;
      }
    }
  }
  r.witness = std::move(w);
  return r;
}

// ---------------------------------------------------------------------------
// Reducedness: a crossing is nugatory iff two opposite corners lie on the
// same face (a circle then meets the diagram in that crossing alone).

ReducedResult is_reduced(const Diagram& d) {
  ReducedResult r;
  for (NodeId n = 0; n < d.node_count(); ++n) {
    if (d.nodes[n].kind != NodeKind::Crossing) continue;
    if (d.face_at_corner(n, 0) == d.face_at_corner(n, 2) ||
        d.face_at_corner(n, 1) == d.face_at_corner(n, 3))
      r.nugatory.push_back(n);
  }
  r.reduced = r.nugatory.empty();
  return r;
}

// ---------------------------------------------------------------------------
// Alternation

bool is_alternating(const Diagram& d) {
  for (const Strand& s : d.strands) {
    const auto& p = s.passages;
    if (p.empty()) continue;
    for (size_t i = 1; i < p.size(); ++i)
      if (p[i].over == p[i - 1].over) return false;
    bool wraps = s.closed || s.at_vertex;
    if (wraps && p.back().over == p.front().over) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Positivity

Orientation orient_strands(const Diagram& d, uint64_t flips) {
  Orientation o;
  o.head.assign(d.edge_count, 0);
  for (size_t i = 0; i < d.strands.size(); ++i) {
    const Strand& s = d.strands[i];
    bool flip = (i < 64) && ((flips >> i) & 1);
    for (Dart step : s.steps) {
      EdgeId e = dart_edge(step);
      int toward = dart_end(step);
      o.head[e] = static_cast<int8_t>(flip ? 1 - toward : toward);
    }
  }
  return o;
}

int crossing_sign(const Diagram& d, const Orientation& o, NodeId n) {
  const Node& node = d.nodes[n];
  if (node.kind != NodeKind::Crossing) fail("crossing_sign on a graph vertex");
  if (static_cast<int>(o.head.size()) != d.edge_count)
    fail("orientation does not match diagram");
  int under0 = 1 - node.over0;
  auto incoming = [&](int slot) {
    Dart dd = node.slot_dart[slot];
    return o.head[dart_edge(dd)] == dart_end(dd);
  };
  int u_in = -1, o_in = -1;
  for (int k : {under0, under0 + 2}) {
    if (incoming(k % 4)) {
      if (u_in >= 0) fail("orientation incoherent at a crossing");
      u_in = k % 4;
    }
  }
  for (int k : {node.over0, node.over0 + 2}) {
    if (incoming(k % 4)) {
      if (o_in >= 0) fail("orientation incoherent at a crossing");
      o_in = k % 4;
    }
  }
  if (u_in < 0 || o_in < 0) fail("orientation incoherent at a crossing");
  return u_in == (o_in + 1) % 4 ? 1 : -1;
}

bool is_positive(const Diagram& d, const Orientation& o) {
  if (d.mode == Mode::Graph8) fail("is_positive expects link or tangle mode");
  for (NodeId n = 0; n < d.node_count(); ++n)
    if (d.nodes[n].kind == NodeKind::Crossing && crossing_sign(d, o, n) < 0) return false;
  return true;
}

std::optional<Orientation> exists_positive_orientation(const Diagram& d) {
  if (d.mode == Mode::Graph8) fail("exists_positive_orientation expects link or tangle");
  size_t k = d.strands.size();
  if (k > 20) fail("too many components for orientation search");
  if (k == 0) return orient_strands(d, 0);
  // Reversing every strand preserves all crossing signs, so strand 0's
  // direction can be fixed.
  uint64_t limit = uint64_t{1} << (k - 1);
  for (uint64_t f = 0; f < limit; ++f) {
    Orientation o = orient_strands(d, f << 1);
    if (is_positive(d, o)) return o;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Resolutions

namespace {

// The smoothing mate of slot s at a crossing whose under slots have parity u.
int smoothing_mate(int s, int under_parity, ResolutionKind kind) {
  bool same_parity = (s % 2) == (under_parity % 2);
  if (kind == ResolutionKind::AllA) return same_parity ? (s + 1) % 4 : (s + 3) % 4;
  return same_parity ? (s + 3) % 4 : (s + 1) % 4;
}

}  // namespace

StateGraph resolution(const Diagram& d, ResolutionKind kind) {
  if (d.mode != Mode::Link) fail("resolution expects link mode (close tangles first)");
  StateGraph sg;
  sg.kind = kind;

  const int dart_count = 2 * d.edge_count;
  std::vector<int32_t> circle_of(dart_count, -1);
  auto next = [&](Dart dd) {
    const Attach& a = d.attach[dd];
    int mate = smoothing_mate(a.slot, 1 - d.nodes[a.node].over0, kind);
    return dart_twin(d.nodes[a.node].slot_dart[mate]);
  };
  for (Dart start = 0; start < dart_count; ++start) {
    if (circle_of[start] >= 0 || d.attach[start].kind != Attach::Kind::Slot) continue;
    int32_t id = static_cast<int32_t>(sg.circles.size());
    std::vector<Dart> circle;
    Dart cur = start;
    do {
      circle_of[cur] = id;
      circle_of[dart_twin(cur)] = id;  // the reverse traversal is the same circle
      circle.push_back(cur);
      cur = next(cur);
    } while (cur != start);
    sg.circles.push_back(std::move(circle));
  }
  for (EdgeId e = 0; e < d.edge_count; ++e) {
    if (!d.edge_is_free_loop(e)) continue;
    int32_t id = static_cast<int32_t>(sg.circles.size());
    circle_of[dart_of(e, 0)] = circle_of[dart_of(e, 1)] = id;
    sg.circles.push_back({dart_of(e, 0)});
  }

  for (NodeId n = 0; n < d.node_count(); ++n) {
    const Node& node = d.nodes[n];
    int u = 1 - node.over0;
    int arc1_slot = (kind == ResolutionKind::AllA) ? u : (u + 1) % 4;
    int arc2_slot = (arc1_slot + 2) % 4;
    StateGraph::Segment seg;
    seg.crossing = n;
    seg.circle_a = circle_of[node.slot_dart[arc1_slot]];
    seg.circle_b = circle_of[node.slot_dart[arc2_slot]];
    sg.segments.push_back(seg);
  }
  return sg;
}

namespace {

bool state_adequate(const StateGraph& sg) {
  for (const auto& seg : sg.segments)
    if (seg.circle_a == seg.circle_b) return false;
  return true;
}

}  // namespace

bool is_A_adequate(const Diagram& d) { return state_adequate(resolution(d, ResolutionKind::AllA)); }
bool is_B_adequate(const Diagram& d) { return state_adequate(resolution(d, ResolutionKind::AllB)); }
bool is_semi_adequate(const Diagram& d) { return is_A_adequate(d) || is_B_adequate(d); }
bool is_adequate(const Diagram& d) { return is_A_adequate(d) && is_B_adequate(d); }

// ---------------------------------------------------------------------------
// Twist regions

std::vector<TwistRegion> twist_regions(const Diagram& d) {
  std::vector<NodeId> crossings;
  for (NodeId n = 0; n < d.node_count(); ++n)
    if (d.nodes[n].kind == NodeKind::Crossing) crossings.push_back(n);
  std::vector<int32_t> index(d.node_count(), -1);
  for (size_t i = 0; i < crossings.size(); ++i) index[crossings[i]] = static_cast<int32_t>(i);

  UnionFind uf(static_cast<int>(crossings.size()));
  std::vector<std::set<NodeId>> adj(crossings.size());
  for (const Face& face : d.faces) {
    if (face.corners.size() != 2) continue;
    const FaceCorner& a = face.corners[0];
    const FaceCorner& b = face.corners[1];
    if (a.kind != FaceCorner::Kind::Node || b.kind != FaceCorner::Kind::Node) continue;
    if (a.node == b.node) continue;
    if (d.nodes[a.node].kind != NodeKind::Crossing ||
        d.nodes[b.node].kind != NodeKind::Crossing)
      continue;
    uf.unite(index[a.node], index[b.node]);
    adj[index[a.node]].insert(b.node);
    adj[index[b.node]].insert(a.node);
  }

  std::map<int32_t, std::vector<NodeId>> groups;
  for (size_t i = 0; i < crossings.size(); ++i)
    groups[uf.find(static_cast<int32_t>(i))].push_back(crossings[i]);

  std::vector<TwistRegion> regions;
  for (auto& [root, members] : groups) {
    TwistRegion region;
    if (members.size() <= 2) {
      region.crossings = members;  // already in id order
    } else {
      // Order along the row when the bigon chain is a path or a cycle.
      bool simple = true;
      NodeId start = members.front();
      for (NodeId m : members) {
        if (adj[index[m]].size() > 2) simple = false;
        if (adj[index[m]].size() == 1 && (adj[index[start]].size() != 1 || m < start))
          start = m;
      }
      if (!simple) {
        region.crossings = members;
      } else {
        std::set<NodeId> seen;
        NodeId cur = start;
        while (true) {
          region.crossings.push_back(cur);
          seen.insert(cur);
          NodeId nxt = -1;
          for (NodeId cand : adj[index[cur]])
            if (!seen.count(cand) && (nxt == -1 || cand < nxt)) nxt = cand;
          if (nxt == -1) break;
          cur = nxt;
        }
        if (region.crossings.size() != members.size()) region.crossings = members;
      }
    }
    regions.push_back(std::move(region));
  }
  std::sort(regions.begin(), regions.end(), [](const TwistRegion& a, const TwistRegion& b) {
    return *std::min_element(a.crossings.begin(), a.crossings.end()) <
           *std::min_element(b.crossings.begin(), b.crossings.end());
  });
  return regions;
}

namespace {

bool twist_condition(const Diagram& d, ResolutionKind kind) {
  if (d.crossing_count() == 0) return true;
  StateGraph sg = resolution(d, kind);
  if (!state_adequate(sg)) return false;
  std::vector<int32_t> region_of(d.node_count(), -1);
  auto regions = twist_regions(d);
  for (size_t r = 0; r < regions.size(); ++r)
    for (NodeId n : regions[r].crossings) region_of[n] = static_cast<int32_t>(r);

  std::map<std::pair<int32_t, int32_t>, int32_t> pair_region;
  for (const auto& seg : sg.segments) {
    auto key = std::minmax(seg.circle_a, seg.circle_b);
    auto [it, inserted] = pair_region.emplace(key, region_of[seg.crossing]);
    if (!inserted && it->second != region_of[seg.crossing]) return false;
  }
  return true;
}

}  // namespace

bool is_twist_A_adequate(const Diagram& d) { return twist_condition(d, ResolutionKind::AllA); }
bool is_twist_B_adequate(const Diagram& d) { return twist_condition(d, ResolutionKind::AllB); }
bool is_twist_adequate(const Diagram& d) {
  return is_twist_A_adequate(d) || is_twist_B_adequate(d);
}

// ---------------------------------------------------------------------------
// Primeness.  A circle meeting two distinct edges exists iff the edges have
// the same unordered pair of side faces; the two sides of the circle are then
// read off from the components of the shadow minus the two edges.

std::vector<CompositeWitness> composite_circles(const Diagram& d) {
  if (d.mode == Mode::Graph8) fail("composite_circles expects link or tangle mode");
  std::vector<CompositeWitness> out;

  std::map<std::pair<int32_t, int32_t>, std::vector<EdgeId>> buckets;
  for (EdgeId e = 0; e < d.edge_count; ++e) {
    if (d.edge_is_free_loop(e)) continue;
    auto [f1, f2] = d.edge_faces(e);
    buckets[std::minmax(f1, f2)].push_back(e);
  }

  const int boundary_elem = d.node_count();  // virtual element for the disk boundary
  for (const auto& [face_pair, edges] : buckets) {
    if (edges.size() < 2) continue;
    for (size_t i = 0; i < edges.size(); ++i) {
      for (size_t j = i + 1; j < edges.size(); ++j) {
        EdgeId e = edges[i], f = edges[j];
        UnionFind uf(d.node_count() + 1);
        for (EdgeId g = 0; g < d.edge_count; ++g) {
          if (g == e || g == f || d.edge_is_free_loop(g)) continue;
          int32_t elems[2];
          for (int end = 0; end < 2; ++end) {
            const Attach& a = d.attach[dart_of(g, end)];
            elems[end] = a.kind == Attach::Kind::Slot ? a.node : boundary_elem;
          }
          uf.unite(elems[0], elems[1]);
        }
        auto stub_elem = [&](EdgeId g, int end) {
          const Attach& a = d.attach[dart_of(g, end)];
          return a.kind == Attach::Kind::Slot ? a.node : boundary_elem;
        };
        int32_t e0 = uf.find(stub_elem(e, 0)), e1 = uf.find(stub_elem(e, 1));
        int32_t f0 = uf.find(stub_elem(f, 0)), f1 = uf.find(stub_elem(f, 1));
        if (e0 == e1 || f0 == f1)
          fail("internal: matched side faces but the cut does not separate");
        // 2-color the components: e0 side 0, e1 side 1; f's ends must land on
        // opposite sides.
        std::map<int32_t, int> color;
        color[e0] = 0;
        color[e1] = 1;
        auto it0 = color.find(f0);
        auto it1 = color.find(f1);
        if (it0 == color.end() && it1 == color.end()) {
          fail("internal: floating component in a two-edge cut");
        } else if (it0 == color.end()) {
          color[f0] = 1 - it1->second;
        } else if (it1 == color.end()) {
          color[f1] = 1 - it0->second;
        } else if (it0->second == it1->second) {
          fail("internal: inconsistent two-edge cut sides");
        }

        std::vector<NodeId> side[2];
        for (NodeId n = 0; n < d.node_count(); ++n) {
          if (d.nodes[n].kind != NodeKind::Crossing) continue;
          auto it = color.find(uf.find(n));
          if (it == color.end()) fail("internal: crossing on no side of a cut");
          side[it->second].push_back(n);
        }

        if (d.mode == Mode::Tangle) {
          auto itb = color.find(uf.find(boundary_elem));
          if (itb == color.end()) fail("internal: boundary on no side of a cut");
          int inside = 1 - itb->second;
          if (side[inside].empty()) continue;  // crossing-free inner arc
          CompositeWitness w;
          w.e = e;
          w.f = f;
          w.face1 = face_pair.first;
          w.face2 = face_pair.second;
          w.side_a_crossings = side[inside];
          w.side_b_crossings = side[1 - inside];
          out.push_back(std::move(w));
        } else {
          if (side[0].empty() || side[1].empty()) continue;
          CompositeWitness w;
          w.e = e;
          w.f = f;
          w.face1 = face_pair.first;
          w.face2 = face_pair.second;
          w.side_a_crossings = side[0];
          w.side_b_crossings = side[1];
          out.push_back(std::move(w));
        }
      }
    }
  }
  return out;
}

PrimenessResult is_prime_projection(const Diagram& d) {
  if (d.mode != Mode::Link) fail("is_prime_projection expects link mode");
  if (!is_connected(d).connected)
    fail("is_prime_projection expects a connected diagram (report the split first)");
  PrimenessResult r;
  auto witnesses = composite_circles(d);
  if (!witnesses.empty()) {
    r.prime = false;
    r.witness = witnesses.front();
  }
  return r;
}

}  // namespace tanglekit
