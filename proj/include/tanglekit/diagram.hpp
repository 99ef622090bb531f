#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tanglekit {

using NodeId = int32_t;
using EdgeId = int32_t;

/// A dart is one end of an edge: dart = 2*edge + end.
using Dart = int32_t;

constexpr Dart dart_of(EdgeId e, int end) { return 2 * e + end; }
constexpr Dart dart_twin(Dart d) { return d ^ 1; }
constexpr EdgeId dart_edge(Dart d) { return d >> 1; }
constexpr int dart_end(Dart d) { return d & 1; }

enum class Mode : uint8_t { Link, Tangle, Graph8 };
enum class NodeKind : uint8_t { Crossing, GraphVertex };

/// Tangle endpoint positions, clockwise around the disk boundary.
/// Boundary gap g runs from compass g to compass (g+1)%4:
/// gap 0 = top (NW-NE), 1 = right (NE-SE), 2 = bottom (SE-SW), 3 = left (SW-NW).
enum Compass : int { NW = 0, NE = 1, SE = 2, SW = 3 };

const char* mode_name(Mode m);
const char* compass_name(int c);
const char* gap_name(int gap);

struct DiagramError : std::runtime_error {
  explicit DiagramError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : DiagramError {
  int line;
  int col;
  ParseError(const std::string& what, int line_, int col_)
      : DiagramError(what), line(line_), col(col_) {}
};

struct Attach {
  enum class Kind : uint8_t { Free, Slot, End };
  Kind kind = Kind::Free;
  NodeId node = -1;  // Kind::Slot
  int slot = -1;     // Kind::Slot, 0..3
  int end = -1;      // Kind::End, a Compass value

  static Attach free() { return Attach{}; }
  static Attach at_slot(NodeId n, int s) {
    Attach a;
    a.kind = Kind::Slot;
    a.node = n;
    a.slot = s;
    return a;
  }
  static Attach at_end(int compass) {
    Attach a;
    a.kind = Kind::End;
    a.end = compass;
    return a;
  }
  bool operator==(const Attach& o) const {
    return kind == o.kind && node == o.node && slot == o.slot && end == o.end;
  }
};

/// A 4-valent node. Slots are in counterclockwise rotation order.
/// A straight-through strand enters slot i and leaves slot (i+2)%4.
/// For crossings, the over-strand occupies slots over0 and over0+2.
struct Node {
  NodeKind kind = NodeKind::Crossing;
  std::array<Dart, 4> slot_dart{-1, -1, -1, -1};
  int over0 = -1;  // 0 or 1 for crossings, -1 for the graph vertex

  bool slot_is_over(int slot) const { return over0 >= 0 && (slot % 2) == over0; }
};

struct FaceCorner {
  enum class Kind : uint8_t { Node, Gap, LoopInterior };
  Kind kind = Kind::Node;
  NodeId node = -1;  // Node: corner between slots `corner` and `corner+1` (ccw)
  int corner = -1;
  int gap = -1;        // Gap
  EdgeId loop = -1;    // LoopInterior
};

struct Face {
  std::vector<FaceCorner> corners;
  std::vector<Dart> darts;  // arrival darts of Node/End steps, walk order
  std::array<bool, 4> touches_gap{false, false, false, false};
};

/// One maximal straight-through strand: a path or cycle through crossings.
struct Strand {
  struct Passage {
    NodeId node;
    int in_slot;
    bool over;
  };
  bool closed = false;      // closed through crossings only
  bool at_vertex = false;   // graph-8 loop, both ends on the vertex
  int from_end = -1;        // Compass, open tangle strands
  int to_end = -1;
  EdgeId free_loop = -1;    // set for zero-crossing closed components
  std::vector<Dart> steps;  // dart walked *toward* at each edge traversal
  std::vector<Passage> passages;
  std::vector<EdgeId> edges;  // in traversal order
};

/// Direction assignment: head[e] is the end index the edge points toward.
struct Orientation {
  std::vector<int8_t> head;
};

struct Options {
  bool allow_closed_in_tangle = false;
};

/// An immutable link / tangle / spatial-graph projection with rotation system.
/// Build through parse(), DiagramBuilder, or the surgery helpers; all of those
/// validate invariants and precompute faces, strands and components.
struct Diagram {
  Mode mode = Mode::Link;
  Options options;
  std::vector<Node> nodes;
  int edge_count = 0;
  std::vector<Attach> attach;             // indexed by dart, size 2*edge_count
  std::array<Dart, 4> endpoint_dart{-1, -1, -1, -1};  // tangle, by Compass

  // Derived data, filled by finalize().
  std::vector<Face> faces;
  std::vector<int32_t> face_of_dart;      // -1 for the outer side of free loops
  std::array<int32_t, 4> gap_face{-1, -1, -1, -1};
  std::vector<Strand> strands;
  std::vector<int32_t> component_of_node;
  std::vector<int32_t> component_of_edge;
  int component_count = 0;

  int crossing_count() const;
  int node_count() const { return static_cast<int>(nodes.size()); }
  std::vector<EdgeId> free_loops() const;
  bool edge_is_free_loop(EdgeId e) const {
    return attach[dart_of(e, 0)].kind == Attach::Kind::Free;
  }
  /// The two faces on the two sides of an edge (equal to the loop's interior
  /// face and -1 for free loops).
  std::pair<int32_t, int32_t> edge_faces(EdgeId e) const {
    return {face_of_dart[dart_of(e, 0)], face_of_dart[dart_of(e, 1)]};
  }
  /// Face containing the corner between slots `corner` and `corner+1` of node n.
  int32_t face_at_corner(NodeId n, int corner) const {
    return face_of_dart[nodes[n].slot_dart[(corner + 1) % 4]];
  }
  NodeId graph_vertex() const;  // Graph8 mode only

  std::string describe() const;
};

/// Incrementally wires nodes, endpoints and loops, then validates.
class DiagramBuilder {
 public:
  NodeId add_crossing(int over0);
  NodeId add_vertex();
  EdgeId add_edge(Attach a, Attach b);
  EdgeId connect(NodeId n1, int slot1, NodeId n2, int slot2);
  EdgeId connect_end(int compass, NodeId n, int slot);
  EdgeId connect_ends(int compass1, int compass2);
  EdgeId add_free_loop();
  Diagram build(Mode mode, Options options = {});

 private:
  std::vector<Node> nodes_;
  std::vector<Attach> attach_;
};

/// Validates all structural invariants (slot occupancy, mode constraints,
/// planarity via Euler's formula) and computes faces/strands/components.
/// Throws DiagramError on violation.
void finalize(Diagram& d);

std::vector<Face> walk_faces(const Diagram& d);

Diagram parse(const std::string& text, Options options = {});
std::string serialize(const Diagram& d);

/// Canonical serialization: equal strings iff the diagrams are isomorphic
/// (label renaming; tangle endpoints and the ccw rotation data are preserved).
std::string canonical_text(const Diagram& d);
bool isomorphic(const Diagram& a, const Diagram& b);

}  // namespace tanglekit
