#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tanglekit::oracle {

namespace {

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

bool connected(const Diagram& d) {
  int n_elems = d.node_count() + d.edge_count;
  if (n_elems == 0) return true;
  DSU dsu(n_elems);
  for (EdgeId e = 0; e < d.edge_count; ++e)
    for (int end = 0; end < 2; ++end) {
      const Attach& a = d.attach[dart_of(e, end)];
      if (a.kind == Attach::Kind::Slot) dsu.join(d.node_count() + e, a.node);
    }
  std::set<int> roots;
  for (EdgeId e = 0; e < d.edge_count; ++e) roots.insert(dsu.find(d.node_count() + e));
  for (NodeId n = 0; n < d.node_count(); ++n) roots.insert(dsu.find(n));
  return roots.size() <= 1;
}

int state_circle_count(const Diagram& d, ResolutionKind kind) {
  DSU dsu(2 * d.edge_count);
  for (EdgeId e = 0; e < d.edge_count; ++e) dsu.join(dart_of(e, 0), dart_of(e, 1));
  for (NodeId n = 0; n < d.node_count(); ++n) {
    const Node& node = d.nodes[n];
    int u = 1 - node.over0;  // an under slot
    if (kind == ResolutionKind::AllA) {
      dsu.join(node.slot_dart[u], node.slot_dart[(u + 1) % 4]);
      dsu.join(node.slot_dart[(u + 2) % 4], node.slot_dart[(u + 3) % 4]);
    } else {
      dsu.join(node.slot_dart[(u + 1) % 4], node.slot_dart[(u + 2) % 4]);
      dsu.join(node.slot_dart[(u + 3) % 4], node.slot_dart[u]);
    }
  }
  std::set<int> roots;
  for (Dart dd = 0; dd < 2 * d.edge_count; ++dd) roots.insert(dsu.find(dd));
  return static_cast<int>(roots.size());
}

std::optional<std::pair<EdgeId, EdgeId>> brute_force_composite(const Diagram& d) {
  // Edge -> set of faces that walk one of its sides, read from corner walks.
  std::map<EdgeId, std::multiset<int>> face_sides;
  for (size_t f = 0; f < d.faces.size(); ++f)
    for (Dart dd : d.faces[f].darts)
      face_sides[dart_edge(dd)].insert(static_cast<int>(f));

  const int boundary = d.node_count();
  for (EdgeId e = 0; e < d.edge_count; ++e) {
    if (d.edge_is_free_loop(e)) continue;
    for (EdgeId f = e + 1; f < d.edge_count; ++f) {
      if (d.edge_is_free_loop(f)) continue;
      // Candidate circle: faces F1 != F2 (or F1 == F2), each crossed by both
      // edges, covering both sides of each.
      if (face_sides[e] != face_sides[f]) continue;

      DSU dsu(d.node_count() + 1);
      for (EdgeId g = 0; g < d.edge_count; ++g) {
        if (g == e || g == f || d.edge_is_free_loop(g)) continue;
        int elems[2];
        for (int end = 0; end < 2; ++end) {
          const Attach& a = d.attach[dart_of(g, end)];
          elems[end] = a.kind == Attach::Kind::Slot ? a.node : boundary;
        }
        dsu.join(elems[0], elems[1]);
      }
      auto stub = [&](EdgeId g, int end) {
        const Attach& a = d.attach[dart_of(g, end)];
        return dsu.find(a.kind == Attach::Kind::Slot ? a.node : boundary);
      };
      int e0 = stub(e, 0), e1 = stub(e, 1), f0 = stub(f, 0), f1 = stub(f, 1);
      if (e0 == e1 || f0 == f1) continue;
      std::map<int, int> side;
      side[e0] = 0;
      side[e1] = 1;
      bool consistent = true;
      if (side.count(f0) && side.count(f1)) {
        consistent = side[f0] != side[f1];
      } else if (side.count(f0)) {
        side[f1] = 1 - side[f0];
      } else if (side.count(f1)) {
        side[f0] = 1 - side[f1];
      } else {
        consistent = false;
      }
      if (!consistent) continue;

      int count[2] = {0, 0};
      bool all_assigned = true;
      int boundary_side = -1;
      if (d.mode == Mode::Tangle) {
        auto it = side.find(dsu.find(boundary));
        if (it == side.end()) {
          all_assigned = false;
        } else {
          boundary_side = it->second;
        }
      }
      for (NodeId n = 0; n < d.node_count() && all_assigned; ++n) {
        if (d.nodes[n].kind != NodeKind::Crossing) continue;
        auto it = side.find(dsu.find(n));
        if (it == side.end())
          all_assigned = false;
        else
          count[it->second]++;
      }
      if (!all_assigned) continue;
      bool composite = d.mode == Mode::Tangle ? count[1 - boundary_side] >= 1
                                              : (count[0] >= 1 && count[1] >= 1);
      if (composite) return std::make_pair(e, f);
    }
  }
  return std::nullopt;
}

bool euler_face_count_ok(const Diagram& d) {
  int loops = static_cast<int>(d.free_loops().size());
  int attached_faces = static_cast<int>(d.faces.size()) - loops;
  int v = d.node_count();
  int e = 0;
  for (EdgeId g = 0; g < d.edge_count; ++g)
    if (!d.edge_is_free_loop(g)) ++e;

  if (d.mode == Mode::Tangle) {
    // Disk convention: counting the 4 endpoints, 4 gaps and the outer region,
    // V - E + F = 2; with interior faces only this reads V - E + F = 1.
    // Attached components not touching the boundary add 2 apiece.
    int extra = 0;
    std::set<int32_t> floating;
    for (EdgeId g = 0; g < d.edge_count; ++g)
      if (!d.edge_is_free_loop(g)) floating.insert(d.component_of_edge[g]);
    for (EdgeId g = 0; g < d.edge_count; ++g)
      for (int end = 0; end < 2; ++end)
        if (d.attach[dart_of(g, end)].kind == Attach::Kind::End)
          floating.erase(d.component_of_edge[g]);
    extra = 2 * static_cast<int>(floating.size());
    return v - e + attached_faces == 1 + extra;
  }
  // Sphere: V - E + F = 2 per attached component (the base face stands in
  // for the empty diagram's sphere).
  std::set<int32_t> comps;
  for (EdgeId g = 0; g < d.edge_count; ++g)
    if (!d.edge_is_free_loop(g)) comps.insert(d.component_of_edge[g]);
  int c = std::max<int>(1, static_cast<int>(comps.size()));
  return v - e + attached_faces == 2 * c;
}

}  // namespace tanglekit::oracle
