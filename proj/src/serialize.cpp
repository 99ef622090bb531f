#include <algorithm>
#include <deque>
#include <sstream>
#include <vector>

#include "tanglekit/diagram.hpp"

namespace tanglekit {

namespace {

// Breadth-first relabeling walk.  Nodes are numbered in discovery order; at
// each node the four slots are scanned counterclockwise starting from the
// entry slot; edges are labeled on first encounter.  The resulting integer
// code determines the component up to isomorphism for a fixed start.
struct Walk {
  std::vector<int> code;
  std::vector<NodeId> node_order;            // discovery order
  std::vector<int> entry_slot;               // per discovered node
  std::vector<int> edge_label;               // by EdgeId, -1 if untouched
  int next_label = 1;

  explicit Walk(const Diagram& d) : edge_label(d.edge_count, -1) {}
};

void bfs_from(const Diagram& d, Walk& w, std::vector<int>& node_seen, NodeId start,
              int start_entry) {
  std::deque<std::pair<NodeId, int>> queue;
  if (node_seen[start] < 0) {
    node_seen[start] = static_cast<int>(w.node_order.size());
    w.node_order.push_back(start);
    w.entry_slot.push_back(start_entry);
    queue.emplace_back(start, start_entry);
  }
  while (!queue.empty()) {
    auto [n, entry] = queue.front();
    queue.pop_front();
    const Node& node = d.nodes[n];
    if (node.kind == NodeKind::GraphVertex)
      w.code.push_back(2);
    else
      w.code.push_back(node.slot_is_over(entry) ? 1 : 0);
    for (int k = 0; k < 4; ++k) {
      int s = (entry + k) % 4;
      EdgeId e = dart_edge(node.slot_dart[s]);
      if (w.edge_label[e] < 0) {
        w.edge_label[e] = w.next_label++;
        const Attach& other = d.attach[dart_twin(node.slot_dart[s])];
        if (other.kind == Attach::Kind::Slot && node_seen[other.node] < 0) {
          node_seen[other.node] = static_cast<int>(w.node_order.size());
          w.node_order.push_back(other.node);
          w.entry_slot.push_back(other.slot);
          queue.emplace_back(other.node, other.slot);
        }
      }
      w.code.push_back(w.edge_label[e]);
    }
  }
}

// Encode one link component starting from the given attached dart.
std::vector<int> encode_component(const Diagram& d, Dart start) {
  Walk w(d);
  std::vector<int> node_seen(d.node_count(), -1);
  const Attach& a = d.attach[start];
  bfs_from(d, w, node_seen, a.node, a.slot);
  return w.code;
}

struct ComponentPlan {
  int32_t component;
  Dart best_start;
  std::vector<int> best_code;
};

std::vector<ComponentPlan> plan_link_components(const Diagram& d) {
  std::vector<ComponentPlan> plans;
  std::vector<char> comp_done(d.component_count, 0);
  for (Dart dd = 0; dd < 2 * d.edge_count; ++dd) {
    const Attach& a = d.attach[dd];
    if (a.kind != Attach::Kind::Slot) continue;
    int32_t c = d.component_of_node[a.node];
    if (comp_done[c]) continue;
    comp_done[c] = 1;
    ComponentPlan plan;
    plan.component = c;
    plan.best_start = dd;
    plan.best_code = encode_component(d, dd);
    for (Dart other = dd + 1; other < 2 * d.edge_count; ++other) {
      const Attach& oa = d.attach[other];
      if (oa.kind != Attach::Kind::Slot || d.component_of_node[oa.node] != c) continue;
      std::vector<int> code = encode_component(d, other);
      if (code < plan.best_code) {
        plan.best_code = std::move(code);
        plan.best_start = other;
      }
    }
    plans.push_back(std::move(plan));
  }
  std::sort(plans.begin(), plans.end(),
            [](const ComponentPlan& x, const ComponentPlan& y) {
              return x.best_code < y.best_code;
            });
  return plans;
}

std::string emit(const Diagram& d, const Walk& w, int free_loop_count) {
  std::ostringstream os;
  os << mode_name(d.mode) << " {";
  if (d.mode == Mode::Tangle) {
    os << " ends(";
    for (int c = 0; c < 4; ++c) {
      if (c) os << ", ";
      os << compass_name(c) << "=" << w.edge_label[dart_edge(d.endpoint_dart[c])];
    }
    os << ")";
  }
  for (size_t i = 0; i < w.node_order.size(); ++i) {
    const Node& node = d.nodes[w.node_order[i]];
    std::array<int, 4> lbl;
    for (int s = 0; s < 4; ++s) lbl[s] = w.edge_label[dart_edge(node.slot_dart[s])];
    if (node.kind == NodeKind::GraphVertex) {
      std::array<int, 4> best = lbl;
      for (int r = 1; r < 4; ++r) {
        std::array<int, 4> cand{lbl[r], lbl[(r + 1) % 4], lbl[(r + 2) % 4], lbl[(r + 3) % 4]};
        best = std::min(best, cand);
      }
      os << " V(" << best[0] << "," << best[1] << "," << best[2] << "," << best[3] << ")";
    } else {
      int u = 1 - node.over0;  // an under slot; slot 0 of PD output must be under
      std::array<int, 4> c1{lbl[u], lbl[(u + 1) % 4], lbl[(u + 2) % 4], lbl[(u + 3) % 4]};
      int v = u + 2;
      std::array<int, 4> c2{lbl[v % 4], lbl[(v + 1) % 4], lbl[(v + 2) % 4], lbl[(v + 3) % 4]};
      std::array<int, 4> best = std::min(c1, c2);
      os << " X(" << best[0] << "," << best[1] << "," << best[2] << "," << best[3] << ")";
    }
  }
  int next = w.next_label;
  for (int i = 0; i < free_loop_count; ++i) os << " O(" << next++ << ")";
  os << " }";
  return os.str();
}

}  // namespace

std::string canonical_text(const Diagram& d) {
  int loops = static_cast<int>(d.free_loops().size());
  Walk w(d);
  std::vector<int> node_seen(d.node_count(), -1);

  switch (d.mode) {
    case Mode::Tangle: {
      // Endpoints pin the labeling: seed the walk from NW, NE, SE, SW.
      for (int c = 0; c < 4; ++c) {
        Dart ep = d.endpoint_dart[c];
        EdgeId e = dart_edge(ep);
        if (w.edge_label[e] < 0) w.edge_label[e] = w.next_label++;
      }
      for (int c = 0; c < 4; ++c) {
        const Attach& other = d.attach[dart_twin(d.endpoint_dart[c])];
        if (other.kind == Attach::Kind::Slot)
          bfs_from(d, w, node_seen, other.node, other.slot);
      }
      // Closed components (allowed under a flag) are appended like link parts.
      for (const ComponentPlan& plan : plan_link_components(d)) {
        const Attach& a = d.attach[plan.best_start];
        if (node_seen[a.node] < 0) bfs_from(d, w, node_seen, a.node, a.slot);
      }
      break;
    }
    case Mode::Graph8: {
      NodeId v = d.graph_vertex();
      Walk best(d);
      bool have = false;
      for (int r = 0; r < 4; ++r) {
        Walk cand(d);
        std::vector<int> seen(d.node_count(), -1);
        bfs_from(d, cand, seen, v, r);
        if (!have || cand.code < best.code) {
          best = cand;
          have = true;
        }
      }
      w = best;
      break;
    }
    case Mode::Link: {
      auto plans = plan_link_components(d);
      for (const ComponentPlan& plan : plans) {
        const Attach& a = d.attach[plan.best_start];
        bfs_from(d, w, node_seen, a.node, a.slot);
      }
      break;
    }
  }
  return emit(d, w, loops);
}

std::string serialize(const Diagram& d) { return canonical_text(d); }

bool isomorphic(const Diagram& a, const Diagram& b) {
  if (a.mode != b.mode) return false;
  return canonical_text(a) == canonical_text(b);
}

}  // namespace tanglekit
