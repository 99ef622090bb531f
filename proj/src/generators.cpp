#include "tanglekit/generators.hpp"

#include <random>

#include "rewire.hpp"
#include "tanglekit/graph8.hpp"
#include "tanglekit/link_analysis.hpp"
#include "tanglekit/tangle.hpp"

namespace tanglekit {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw DiagramError(msg); }

uint64_t rng_below(std::mt19937_64& rng, uint64_t n) { return rng() % n; }

}  // namespace

// ---------------------------------------------------------------------------
// Fixed families

Diagram gen_torus2(int n) {
  if (n < 1) fail("gen_torus2 requires n >= 1");
  DiagramBuilder b;
  std::vector<NodeId> c(n);
  for (int i = 0; i < n; ++i) c[i] = b.add_crossing(1);
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    b.connect(c[i], 2, c[j], 3);
    b.connect(c[i], 1, c[j], 0);
  }
  return b.build(Mode::Link);
}

namespace {

// One vertical twist column: slots 0=top-right, 1=top-left, 2=bottom-left,
// 3=bottom-right; over0=1 gives the alternating right-handed column.
struct Column {
  NodeId top, bottom;
};

Column add_column(DiagramBuilder& b, int crossings, int over0) {
  std::vector<NodeId> v(crossings);
  for (int j = 0; j < crossings; ++j) v[j] = b.add_crossing(over0);
  for (int j = 0; j + 1 < crossings; ++j) {
    b.connect(v[j], 2, v[j + 1], 1);
    b.connect(v[j], 3, v[j + 1], 0);
  }
  return {v.front(), v.back()};
}

}  // namespace

Diagram gen_pretzel(int p, int q, int r) {
  if (p == 0 || q == 0 || r == 0) fail("gen_pretzel requires nonzero parameters");
  DiagramBuilder b;
  int params[3] = {p, q, r};
  Column col[3];
  for (int k = 0; k < 3; ++k)
    col[k] = add_column(b, std::abs(params[k]), params[k] > 0 ? 1 : 0);
  for (int k = 0; k < 3; ++k) {
    int nxt = (k + 1) % 3;
    b.connect(col[k].top, 0, col[nxt].top, 1);       // top arcs (last wraps around)
    b.connect(col[k].bottom, 3, col[nxt].bottom, 2);  // bottom arcs
  }
  return b.build(Mode::Link);
}

Diagram vertical_twist_tangle(int n) {
  if (n < 1) fail("vertical_twist_tangle requires n >= 1");
  DiagramBuilder b;
  Column col = add_column(b, n, 1);
  b.connect_end(NW, col.top, 1);
  b.connect_end(NE, col.top, 0);
  b.connect_end(SW, col.bottom, 2);
  b.connect_end(SE, col.bottom, 3);
  return b.build(Mode::Tangle);
}

Diagram trefoil() {
  return parse("link { X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) }");
}

Diagram figure8_knot() {
  return parse("link { X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8) }");
}

Diagram granny_knot() {
  return denominator_closure(tangle_sum(vertical_twist_tangle(3), vertical_twist_tangle(3)));
}

// ---------------------------------------------------------------------------
// Crossing reassignment

namespace {

// Checkerboard 2-coloring of the faces (adjacent across every edge).
std::vector<int> face_coloring(const Diagram& d) {
  std::vector<int> color(d.faces.size(), -1);
  for (size_t start = 0; start < d.faces.size(); ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::vector<int32_t> stack{static_cast<int32_t>(start)};
    while (!stack.empty()) {
      int32_t f = stack.back();
      stack.pop_back();
      for (Dart dd : d.faces[f].darts) {
        int32_t g = d.face_of_dart[dart_twin(dd)];
        if (g < 0) continue;
        if (color[g] == -1) {
          color[g] = 1 - color[f];
          stack.push_back(g);
        } else if (color[g] == color[f]) {
          fail("shadow faces are not checkerboard colorable");
        }
      }
    }
  }
  return color;
}

}  // namespace

Diagram make_alternating(const Diagram& shadow, bool flip) {
  std::vector<int> color = face_coloring(shadow);
  Diagram d = shadow;
  int black = flip ? 0 : 1;
  for (NodeId n = 0; n < d.node_count(); ++n) {
    if (d.nodes[n].kind != NodeKind::Crossing) continue;
    int c0 = color[shadow.face_at_corner(n, 0)];
    int c1 = color[shadow.face_at_corner(n, 1)];
    if (c0 == c1) fail("corner colors degenerate");
    // Over-strand occupies the parity whose following corner is black.
    d.nodes[n].over0 = (c0 == black) ? 0 : 1;
  }
  finalize(d);
  return d;
}

Diagram make_positive(const Diagram& shadow, uint64_t flips) {
  Diagram d = shadow;
  Orientation o = orient_strands(shadow, flips);
  for (NodeId n = 0; n < d.node_count(); ++n) {
    if (d.nodes[n].kind != NodeKind::Crossing) continue;
    d.nodes[n].over0 = 0;
    if (crossing_sign(d, o, n) < 0) d.nodes[n].over0 = 1;
  }
  finalize(d);
  return d;
}

// ---------------------------------------------------------------------------
// Random tangles

Diagram twist(const Diagram& t, int side, int over0) {
  if (t.mode != Mode::Tangle) fail("twist expects tangle mode");
  // quarter_rotation moves gap g to g+1; rotate the wanted side to the top,
  // twist there, rotate back.
  Diagram cur = t;
  int fwd = (4 - side) % 4;
  for (int i = 0; i < fwd; ++i) cur = quarter_rotation(cur);

  DiagramBuilder b;
  for (const Node& n : cur.nodes) b.add_crossing(n.over0);
  NodeId c = b.add_crossing(over0);
  Rewire rw;
  std::array<int, 4> cs;
  cs[NW] = rw.add_joint();
  cs[NE] = rw.add_joint();
  cs[SW] = rw.add_terminal(Attach::at_end(SW));
  cs[SE] = rw.add_terminal(Attach::at_end(SE));
  rw.add_segment(cs[NW], rw.add_terminal(Attach::at_slot(c, 2)));  // old NW to bottom-left
  rw.add_segment(cs[NE], rw.add_terminal(Attach::at_slot(c, 3)));  // old NE to bottom-right
  rw.add_segment(rw.add_terminal(Attach::at_end(NW)), rw.add_terminal(Attach::at_slot(c, 1)));
  rw.add_segment(rw.add_terminal(Attach::at_end(NE)), rw.add_terminal(Attach::at_slot(c, 0)));
  for (EdgeId e = 0; e < cur.edge_count; ++e) {
    if (cur.edge_is_free_loop(e)) {
      rw.add_free_loop();
      continue;
    }
    int site[2];
    for (int end = 0; end < 2; ++end) {
      const Attach& a = cur.attach[dart_of(e, end)];
      site[end] = a.kind == Attach::Kind::Slot
                      ? rw.add_terminal(Attach::at_slot(a.node, a.slot))
                      : cs[a.end];
    }
    rw.add_segment(site[0], site[1]);
  }
  Diagram out = rw.finish(b, Mode::Tangle, cur.options);
  for (int i = 0; i < (4 - fwd) % 4; ++i) out = quarter_rotation(out);
  return out;
}

namespace {

Diagram trivial_tangle(bool horizontal) {
  DiagramBuilder b;
  if (horizontal) {
    b.connect_ends(NW, NE);
    b.connect_ends(SW, SE);
  } else {
    b.connect_ends(NW, SW);
    b.connect_ends(NE, SE);
  }
  return b.build(Mode::Tangle);
}

Diagram random_shadow_rec(std::mt19937_64& rng, int size) {
  if (size <= 0) return trivial_tangle(rng_below(rng, 2) == 0);
  if (size >= 2 && rng_below(rng, 4) == 0) {
    int left = 1 + static_cast<int>(rng_below(rng, static_cast<uint64_t>(size - 1)));
    Diagram t1 = random_shadow_rec(rng, left);
    Diagram t2 = random_shadow_rec(rng, size - left);
    int spins = static_cast<int>(rng_below(rng, 4));
    for (int i = 0; i < spins; ++i) t2 = quarter_rotation(t2);
    try {
      return tangle_sum(t1, t2);
    } catch (const DiagramError&) {
      // The sum closed a component; twist one factor instead.
      return twist(t1, static_cast<int>(rng_below(rng, 4)),
                   static_cast<int>(rng_below(rng, 2)));
    }
  }
  Diagram t = random_shadow_rec(rng, size - 1);
  int side = static_cast<int>(rng_below(rng, 4));
  return twist(t, side, static_cast<int>(rng_below(rng, 2)));
}

}  // namespace

Diagram random_tangle_shadow(uint64_t seed, int size) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 1);
  return random_shadow_rec(rng, size);
}

Diagram gen_alternating_tangle(uint64_t seed, int size) {
  if (size < 1) fail("gen_alternating_tangle requires size >= 1");
  for (uint64_t attempt = 0; attempt < 256; ++attempt) {
    Diagram shadow = random_tangle_shadow(seed ^ (attempt * 0xD1B54A32D192ED03ull), size);
    for (int rot = 0; rot < 2; ++rot) {
      Diagram t = rot ? quarter_rotation(shadow) : shadow;
      Diagram alt = make_alternating(t, false);
      if (!is_connected(alt).connected) continue;
      if (alt.strands.size() != 2) continue;  // no closed components
      Diagram dcl = denominator_closure(alt);
      if (is_reduced(dcl).reduced && is_alternating(dcl)) return alt;
    }
  }
  fail("gen_alternating_tangle: generation exhausted after bounded retries");
}

Diagram gen_positive_tangle(uint64_t seed, int size) {
  if (size < 1) fail("gen_positive_tangle requires size >= 1");
  for (uint64_t attempt = 0; attempt < 256; ++attempt) {
    Diagram shadow = random_tangle_shadow(seed ^ (attempt * 0xA24BAED4963EE407ull), size);
    if (shadow.strands.size() != 2) continue;  // no closed components
    for (uint64_t flips = 0; flips < 4; ++flips) {
      Diagram pos = make_positive(shadow, flips);
      if (!is_connected(pos).connected) continue;
      Diagram dcl = denominator_closure(pos);
      if (is_reduced(dcl).reduced && exists_positive_orientation(dcl).has_value())
        return pos;
    }
  }
  fail("gen_positive_tangle: generation exhausted after bounded retries");
}

// ---------------------------------------------------------------------------
// Locally knotted figure-eight graphs

const char* knot_kind_name(KnotKind k) {
  return k == KnotKind::Trefoil ? "trefoil" : "figure8";
}
const char* local_knot_variant_name(LocalKnotVariant v) {
  return v == LocalKnotVariant::VertexSplit ? "vertex-split" : "non-split";
}

namespace {

// Wire a knot bead (the knot diagram cut open at one edge); returns the two
// stub attachments.  Over/under data is a placeholder when the caller
// reassigns it afterwards.
std::pair<Attach, Attach> add_knot_bead(DiagramBuilder& b, KnotKind kind) {
  if (kind == KnotKind::Trefoil) {
    NodeId x0 = b.add_crossing(1), x1 = b.add_crossing(1), x2 = b.add_crossing(1);
    b.connect(x0, 2, x2, 1);
    b.connect(x1, 0, x2, 3);
    b.connect(x0, 1, x1, 2);
    b.connect(x0, 3, x2, 0);
    b.connect(x1, 1, x2, 2);
    return {Attach::at_slot(x0, 0), Attach::at_slot(x1, 3)};
  }
  NodeId x0 = b.add_crossing(1), x1 = b.add_crossing(1), x2 = b.add_crossing(1),
         x3 = b.add_crossing(1);
  b.connect(x0, 1, x3, 0);
  b.connect(x2, 1, x3, 2);
  b.connect(x0, 0, x2, 3);
  b.connect(x0, 2, x1, 3);
  b.connect(x1, 1, x2, 0);
  b.connect(x2, 2, x3, 1);
  b.connect(x1, 0, x3, 3);
  return {Attach::at_slot(x0, 3), Attach::at_slot(x1, 2)};
}

// Positive non-alternating trefoil bead: the closed 3-strand braid with word
// (s1 s2)^2, cut open at one wrap edge.  Slots: 0 in-top-right, 1 in-top-left,
// 2 out-bottom-left, 3 out-bottom-right; over0=0 is positive for downward
// strands.
std::pair<Attach, Attach> add_positive_trefoil_bead(DiagramBuilder& b) {
  NodeId c1 = b.add_crossing(0), c2 = b.add_crossing(0), c3 = b.add_crossing(0),
         c4 = b.add_crossing(0);
  b.connect(c1, 2, c3, 1);
  b.connect(c1, 3, c2, 1);
  b.connect(c2, 2, c3, 0);
  b.connect(c3, 3, c4, 1);
  b.connect(c4, 2, c1, 0);
  b.connect(c2, 3, c4, 0);
  b.connect(c4, 3, c2, 0);
  return {Attach::at_slot(c1, 1), Attach::at_slot(c3, 2)};
}

enum class BeadStyle { Alternating, PositiveBraid };

}  // namespace

/// Splice a knot bead into the interior of one edge of a tangle.
static Diagram splice_bead(const Diagram& t, EdgeId host, KnotKind kind, BeadStyle style) {
  DiagramBuilder b;
  for (const Node& n : t.nodes) b.add_crossing(n.over0);
  auto [bead_in, bead_out] = style == BeadStyle::PositiveBraid
                                 ? add_positive_trefoil_bead(b)
                                 : add_knot_bead(b, kind);
  Rewire rw;
  auto site = [&](const Attach& a) {
    return rw.add_terminal(a.kind == Attach::Kind::Slot ? Attach::at_slot(a.node, a.slot)
                                                        : Attach::at_end(a.end));
  };
  for (EdgeId e = 0; e < t.edge_count; ++e) {
    if (t.edge_is_free_loop(e)) {
      rw.add_free_loop();
      continue;
    }
    if (e == host) {
      rw.add_segment(site(t.attach[dart_of(e, 0)]), rw.add_terminal(bead_in));
      rw.add_segment(rw.add_terminal(bead_out), site(t.attach[dart_of(e, 1)]));
      continue;
    }
    rw.add_segment(site(t.attach[dart_of(e, 0)]), site(t.attach[dart_of(e, 1)]));
  }
  return rw.finish(b, Mode::Tangle, t.options);
}

namespace {

Diagram trivial_vertical_tangle() {
  DiagramBuilder b;
  b.connect_ends(NW, SW);
  b.connect_ends(NE, SE);
  return b.build(Mode::Tangle);
}

// Connected base tangles whose closures both stay reduced (a bare clasp
// would not: capping a 2-crossing clasp leaves a nugatory crossing; sums of
// twist columns with at least one odd column do the job).
Diagram nonsplit_base(std::mt19937_64& rng) {
  static const int cols[5][2] = {{2, 3}, {3, 2}, {3, 3}, {3, 4}, {4, 3}};
  const int* pick = cols[rng_below(rng, 5)];
  return tangle_sum(vertical_twist_tangle(pick[0]), vertical_twist_tangle(pick[1]));
}

// Edges lying on an open strand of the tangle.
std::vector<EdgeId> open_strand_edges(const Diagram& t) {
  std::vector<EdgeId> out;
  for (const Strand& s : t.strands)
    if (s.from_end >= 0)
      for (EdgeId e : s.edges) out.push_back(e);
  return out;
}

Diagram local_knot_tangle_shadow(std::mt19937_64& rng, KnotKind knot,
                                 LocalKnotVariant variant) {
  Diagram base = variant == LocalKnotVariant::VertexSplit ? trivial_vertical_tangle()
                                                          : nonsplit_base(rng);
  std::vector<EdgeId> hosts = open_strand_edges(base);
  EdgeId host = hosts[rng_below(rng, hosts.size())];
  Diagram t = splice_bead(base, host, knot, BeadStyle::Alternating);
  if (variant == LocalKnotVariant::VertexSplit && rng_below(rng, 4) == 0) {
    // Occasionally bead the second string as well.
    std::vector<EdgeId> hosts2;
    for (const Strand& s : t.strands)
      if (s.from_end >= 0 && s.passages.empty())
        for (EdgeId e : s.edges) hosts2.push_back(e);
    if (!hosts2.empty())
      t = splice_bead(t, hosts2[rng_below(rng, hosts2.size())], knot,
                      BeadStyle::Alternating);
  }
  return t;
}

}  // namespace

LocalKnotGroundTruth gen_local_knot_graph8(uint64_t seed, KnotKind knot,
                                           LocalKnotVariant variant) {
  std::mt19937_64 rng(seed * 0xBF58476D1CE4E5B9ull + 0x94D049BB133111EBull);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Diagram shadow = local_knot_tangle_shadow(rng, knot, variant);
    Diagram t = make_alternating(shadow, rng_below(rng, 2) == 0);
    Diagram g = make_graph8_from_tangle(t);

    auto witness = local_knot_witness(g);
    if (!witness) continue;
    if (variant == LocalKnotVariant::VertexSplit) {
      if (!sawollek_reduced_alternating(g)) continue;
      if (!vertex_split_witness(g)) continue;
      if (witness->route != LocalKnotWitness::Route::ThroughVertex) continue;
    } else {
      if (vertex_split_witness(g)) continue;
      if (mof(excise_vertex(g)).satisfied == MofClause::None) continue;
      if (witness->route != LocalKnotWitness::Route::InteriorDisk) continue;
    }
    return {std::move(g), knot, variant};
  }
  fail("gen_local_knot_graph8: generation exhausted after bounded retries");
}

Diagram planar_figure8_graph() {
  DiagramBuilder b;
  NodeId v = b.add_vertex();
  b.connect(v, 0, v, 1);
  b.connect(v, 2, v, 3);
  return b.build(Mode::Graph8);
}

Diagram clasped_loops_graph(int crossings, bool flip) {
  if (crossings < 1) fail("clasped_loops_graph requires >= 1 crossing");
  Diagram t = make_alternating(vertical_twist_tangle(crossings), flip);
  return make_graph8_from_tangle(t);
}

Diagram positive_local_knot_tangle() {
  // Deterministic search over the non-split base family, bead positions and
  // orientation flips for a tangle whose closures are reduced and positive
  // but not alternating, with the positive-braid trefoil tied in a string.
  std::mt19937_64 rng(12345);
  for (int attempt = 0; attempt < 256; ++attempt) {
    Diagram base = nonsplit_base(rng);
    std::vector<EdgeId> hosts = open_strand_edges(base);
    EdgeId host = hosts[rng_below(rng, hosts.size())];
    Diagram shadow = splice_bead(base, host, KnotKind::Trefoil, BeadStyle::PositiveBraid);
    for (uint64_t flips = 0; flips < 4; ++flips) {
      Diagram t = make_positive(shadow, flips);
      MofReport m = mof(t);
      if (m.satisfied != MofClause::O) continue;
      if (m.n_alternating || m.d_alternating) continue;
      if (!m.n_positive || !m.d_positive) continue;
      if (is_prime_tangle_projection(t).prime) continue;
      auto arc = knotted_arc_witness(t);
      if (!arc || arc->criterion != KnotCriterion::Stoimenow) continue;
      if (split_tangle_witness(t)) continue;
      return t;
    }
  }
  fail("positive_local_knot_tangle: search exhausted");
}

}  // namespace tanglekit
