#include "tanglekit/tangle.hpp"

#include <algorithm>
#include <set>

#include "rewire.hpp"

namespace tanglekit {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw DiagramError(msg); }

void require_tangle(const Diagram& t, const char* who) {
  if (t.mode != Mode::Tangle) fail(std::string(who) + " expects tangle mode");
}

// Copy a tangle's nodes into the rewire plan; compass sites become joints
// (returned) unless kept as terminals by the caller.
struct TanglePlan {
  DiagramBuilder builder;
  Rewire rw;
  std::array<int, 4> compass_site{-1, -1, -1, -1};
};

// Rebuilds t with each compass position mapped to a caller-provided site.
void plan_tangle(const Diagram& t, TanglePlan& plan,
                 const std::array<int, 4>& compass_site, NodeId node_offset = 0) {
  for (EdgeId e = 0; e < t.edge_count; ++e) {
    if (t.edge_is_free_loop(e)) {
      plan.rw.add_free_loop();
      continue;
    }
    int site[2];
    for (int end = 0; end < 2; ++end) {
      const Attach& a = t.attach[dart_of(e, end)];
      if (a.kind == Attach::Kind::Slot)
        site[end] = plan.rw.add_terminal(Attach::at_slot(a.node + node_offset, a.slot));
      else
        site[end] = compass_site[a.end];
    }
    plan.rw.add_segment(site[0], site[1]);
  }
}

void add_nodes(const Diagram& t, DiagramBuilder& builder) {
  for (const Node& n : t.nodes) {
    if (n.kind == NodeKind::Crossing)
      builder.add_crossing(n.over0);
    else
      builder.add_vertex();
  }
}

Diagram closure(const Diagram& t, bool numerator) {
  require_tangle(t, "closure");
  TanglePlan plan;
  add_nodes(t, plan.builder);
  std::array<int, 4> cs;
  for (int c = 0; c < 4; ++c) cs[c] = plan.rw.add_joint();
  if (numerator) {
    plan.rw.add_segment(cs[NW], cs[NE]);
    plan.rw.add_segment(cs[SW], cs[SE]);
  } else {
    plan.rw.add_segment(cs[NW], cs[SW]);
    plan.rw.add_segment(cs[NE], cs[SE]);
  }
  plan_tangle(t, plan, cs);
  return plan.rw.finish(plan.builder, Mode::Link, t.options);
}

}  // namespace

Diagram numerator_closure(const Diagram& t) { return closure(t, true); }
Diagram denominator_closure(const Diagram& t) { return closure(t, false); }

Diagram tangle_sum(const Diagram& t1, const Diagram& t2) {
  require_tangle(t1, "tangle_sum");
  require_tangle(t2, "tangle_sum");
  TanglePlan plan;
  add_nodes(t1, plan.builder);
  add_nodes(t2, plan.builder);
  int join_top = plan.rw.add_joint();
  int join_bottom = plan.rw.add_joint();
  std::array<int, 4> cs1, cs2;
  cs1[NW] = plan.rw.add_terminal(Attach::at_end(NW));
  cs1[SW] = plan.rw.add_terminal(Attach::at_end(SW));
  cs1[NE] = join_top;
  cs1[SE] = join_bottom;
  cs2[NW] = join_top;
  cs2[SW] = join_bottom;
  cs2[NE] = plan.rw.add_terminal(Attach::at_end(NE));
  cs2[SE] = plan.rw.add_terminal(Attach::at_end(SE));
  plan_tangle(t1, plan, cs1);
  plan_tangle(t2, plan, cs2, t1.node_count());
  // The sum may close a pair of strings into a closed component (for
  // instance when both summands pair their endpoints vertically); that is a
  // legitimate geometric outcome, so the result always tolerates it.  The
  // string-level predicates still refuse tangles with closed components.
  Options opt = t1.options;
  opt.allow_closed_in_tangle = true;
  return plan.rw.finish(plan.builder, Mode::Tangle, opt);
}

namespace {

Diagram rotate(const Diagram& t, int steps) {
  require_tangle(t, "rotation");
  Diagram d = t;
  for (Attach& a : d.attach)
    if (a.kind == Attach::Kind::End) a.end = (a.end + steps) % 4;
  finalize(d);
  return d;
}

}  // namespace

Diagram pi_rotation(const Diagram& t) { return rotate(t, 2); }
Diagram quarter_rotation(const Diagram& t) { return rotate(t, 1); }

bool is_strongly_alternating(const Diagram& t) {
  require_tangle(t, "is_strongly_alternating");
  if (t.crossing_count() < 1) return false;
  Diagram n = numerator_closure(t);
  Diagram d = denominator_closure(t);
  return is_reduced(n).reduced && is_reduced(d).reduced && is_alternating(n) &&
         is_alternating(d);
}

const char* mof_clause_name(MofClause c) {
  switch (c) {
    case MofClause::None: return "none";
    case MofClause::M: return "M";
    case MofClause::O: return "O";
    case MofClause::F: return "F";
  }
  return "?";
}

MofReport mof(const Diagram& t) {
  require_tangle(t, "mof");
  MofReport r;
  Diagram n = numerator_closure(t);
  Diagram d = denominator_closure(t);
  r.n_reduced = is_reduced(n).reduced;
  r.d_reduced = is_reduced(d).reduced;
  r.n_alternating = is_alternating(n);
  r.d_alternating = is_alternating(d);
  r.n_positive = exists_positive_orientation(n).has_value();
  r.d_positive = exists_positive_orientation(d).has_value();
  r.n_connected = is_connected(n).connected;
  r.d_connected = is_connected(d).connected;
  r.both_twist_a = is_twist_A_adequate(n) && is_twist_A_adequate(d);
  r.both_twist_b = is_twist_B_adequate(n) && is_twist_B_adequate(d);
  // A crossing-free tangle is vacuously reduced but satisfies no useful
  // clause downstream; report none rather than false confidence.
  if (t.crossing_count() == 0) return r;
  if (!(r.n_reduced && r.d_reduced)) return r;
  if (r.n_alternating || r.d_alternating)
    r.satisfied = MofClause::M;
  else if (r.n_positive || r.d_positive)
    r.satisfied = MofClause::O;
  else if (r.n_connected && r.d_connected && (r.both_twist_a || r.both_twist_b))
    r.satisfied = MofClause::F;
  return r;
}

PrimenessResult is_prime_tangle_projection(const Diagram& t) {
  require_tangle(t, "is_prime_tangle_projection");
  for (const Strand& s : t.strands)
    if (s.closed || s.free_loop >= 0)
      fail("tangle primeness requires a tangle without closed components");
  PrimenessResult r;
  auto witnesses = composite_circles(t);
  if (!witnesses.empty()) {
    r.prime = false;
    r.witness = witnesses.front();
  }
  return r;
}

std::optional<TangleSplitWitness> split_tangle_witness(const Diagram& t) {
  require_tangle(t, "split_tangle_witness");
  for (const Strand& s : t.strands)
    if (s.closed || s.free_loop >= 0)
      fail("split_tangle_witness requires a tangle without closed components");

  // Strand endpoint pairs, as compass sets.
  std::array<int, 2> open{-1, -1};
  int k = 0;
  for (size_t i = 0; i < t.strands.size(); ++i)
    if (t.strands[i].from_end >= 0) open[k++] = static_cast<int>(i);

  auto strand_ends = [&](int idx) {
    std::set<int> ends{t.strands[open[idx]].from_end, t.strands[open[idx]].to_end};
    return ends;
  };

  // A chord through opposite gaps {top,bottom} separates {NW,SW} from
  // {NE,SE}; one through {right,left} separates {NW,NE} from {SW,SE}.
  struct Chord {
    std::array<int, 2> gaps;
    std::set<int> side_a;
  };
  const Chord chords[2] = {{{0, 2}, {NW, SW}}, {{1, 3}, {NW, NE}}};

  for (size_t f = 0; f < t.faces.size(); ++f) {
    const Face& face = t.faces[f];
    for (const Chord& chord : chords) {
      if (!face.touches_gap[chord.gaps[0]] || !face.touches_gap[chord.gaps[1]]) continue;
      int a_strand = -1, b_strand = -1;
      for (int idx = 0; idx < 2; ++idx) {
        std::set<int> ends = strand_ends(idx);
        if (ends == chord.side_a) a_strand = idx;
        std::set<int> other;
        for (int c = 0; c < 4; ++c)
          if (!chord.side_a.count(c)) other.insert(c);
        if (ends == other) b_strand = idx;
      }
      if (a_strand < 0 || b_strand < 0) continue;  // chord does not split the strings
      TangleSplitWitness w;
      w.face = static_cast<int32_t>(f);
      w.gaps = chord.gaps;
      w.side_a_strand = open[a_strand];
      w.side_b_strand = open[b_strand];
      return w;
    }
  }
  return std::nullopt;
}

Diagram close_string(const Diagram& t, int strand_index) {
  require_tangle(t, "close_string");
  if (strand_index < 0 || strand_index >= static_cast<int>(t.strands.size()))
    fail("close_string: no such strand");
  const Strand& s = t.strands[strand_index];
  if (s.from_end < 0) fail("close_string expects an open strand");

  int32_t comp = t.component_of_edge[s.edges.front()];
  std::vector<NodeId> node_map(t.node_count(), -1);
  DiagramBuilder builder;
  for (NodeId n = 0; n < t.node_count(); ++n) {
    if (t.component_of_node[n] != comp) continue;
    node_map[n] = builder.add_crossing(t.nodes[n].over0);
  }
  Rewire rw;
  int ja = rw.add_joint(), jb = rw.add_joint();  // the closing outer arc
  rw.add_segment(ja, jb);
  for (EdgeId e = 0; e < t.edge_count; ++e) {
    if (t.edge_is_free_loop(e) || t.component_of_edge[e] != comp) continue;
    int site[2];
    for (int end = 0; end < 2; ++end) {
      const Attach& a = t.attach[dart_of(e, end)];
      if (a.kind == Attach::Kind::Slot)
        site[end] = rw.add_terminal(Attach::at_slot(node_map[a.node], a.slot));
      else if (a.end == s.from_end)
        site[end] = ja;
      else if (a.end == s.to_end)
        site[end] = jb;
      else
        fail("close_string: strand component touches a foreign endpoint");
    }
    rw.add_segment(site[0], site[1]);
  }
  return rw.finish(builder, Mode::Link, Options{});
}

Diagram close_enclosed_arc(const Diagram& t, const CompositeWitness& w) {
  if (t.mode == Mode::Graph8) fail("close_enclosed_arc expects link or tangle mode");
  std::vector<char> inside(t.node_count(), 0);
  for (NodeId n : w.side_a_crossings) inside[n] = 1;

  std::vector<NodeId> node_map(t.node_count(), -1);
  DiagramBuilder builder;
  for (NodeId n = 0; n < t.node_count(); ++n)
    if (inside[n]) node_map[n] = builder.add_crossing(t.nodes[n].over0);

  Rewire rw;
  int ja = rw.add_joint(), jb = rw.add_joint();  // the closing outer arc
  rw.add_segment(ja, jb);
  auto inside_attach = [&](const Attach& a) {
    return a.kind == Attach::Kind::Slot && inside[a.node];
  };
  for (EdgeId e = 0; e < t.edge_count; ++e) {
    if (t.edge_is_free_loop(e)) continue;
    const Attach& a0 = t.attach[dart_of(e, 0)];
    const Attach& a1 = t.attach[dart_of(e, 1)];
    bool in0 = inside_attach(a0), in1 = inside_attach(a1);
    if (e == w.e || e == w.f) {
      if (in0 == in1) fail("close_enclosed_arc: cut edge not split by the circle");
      const Attach& ain = in0 ? a0 : a1;
      rw.add_segment(rw.add_terminal(Attach::at_slot(node_map[ain.node], ain.slot)),
                     e == w.e ? ja : jb);
      continue;
    }
    if (in0 != in1) fail("close_enclosed_arc: edge crosses the circle");
    if (!in0) continue;
    rw.add_segment(rw.add_terminal(Attach::at_slot(node_map[a0.node], a0.slot)),
                   rw.add_terminal(Attach::at_slot(node_map[a1.node], a1.slot)));
  }
  return rw.finish(builder, Mode::Link, Options{});
}

const char* knot_criterion_name(KnotCriterion c) {
  switch (c) {
    case KnotCriterion::KMT: return "kauffman-murasugi-thistlethwaite";
    case KnotCriterion::Stoimenow: return "stoimenow";
    case KnotCriterion::Thistlethwaite: return "thistlethwaite";
  }
  return "?";
}

std::optional<KnotCriterion> nontrivial_knot_criterion(const Diagram& k) {
  if (k.mode != Mode::Link) fail("nontrivial_knot_criterion expects link mode");
  if (k.crossing_count() < 1) return std::nullopt;
  if (!is_reduced(k).reduced) return std::nullopt;
  bool connected = is_connected(k).connected;
  if (connected && is_alternating(k)) return KnotCriterion::KMT;
  if (k.strands.size() == 1 && exists_positive_orientation(k).has_value())
    return KnotCriterion::Stoimenow;
  if (is_semi_adequate(k)) return KnotCriterion::Thistlethwaite;
  return std::nullopt;
}

std::optional<KnottedArcWitness> knotted_arc_witness(const Diagram& t) {
  require_tangle(t, "knotted_arc_witness");
  for (const CompositeWitness& w : composite_circles(t)) {
    Diagram k = close_enclosed_arc(t, w);
    if (auto crit = nontrivial_knot_criterion(k))
      return KnottedArcWitness{w, std::move(k), *crit};
  }
  return std::nullopt;
}

}  // namespace tanglekit
