#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tanglekit/diagram.hpp"

namespace tanglekit {

struct SplitWitness {
  int32_t face = -1;  // a face in which a separating circle can be drawn
  std::vector<int32_t> side_a_components;
  std::vector<int32_t> side_b_components;
};

struct ConnectivityResult {
  bool connected = true;
  std::optional<SplitWitness> witness;
};

/// Shadow connectivity (crossings flattened).  Link or Tangle mode.
ConnectivityResult is_connected(const Diagram& d);

struct ReducedResult {
  bool reduced = true;
  std::vector<NodeId> nugatory;  // crossings with opposite corners on one face
};

ReducedResult is_reduced(const Diagram& d);

/// Along every strand, consecutive crossing passages alternate over/under.
/// Closed strands wrap around; graph-vertex passages are transparent (the
/// loop wraps through the vertex with no over/under event); open tangle
/// strands do not wrap.
bool is_alternating(const Diagram& d);

int crossing_sign(const Diagram& d, const Orientation& o, NodeId n);
bool is_positive(const Diagram& d, const Orientation& o);
std::optional<Orientation> exists_positive_orientation(const Diagram& d);

/// Orient every strand in its traversal direction, flipping strand i when
/// bit i of `flips` is set.  Free loops carry no meaningful direction.
Orientation orient_strands(const Diagram& d, uint64_t flips = 0);

enum class ResolutionKind : uint8_t { AllA, AllB };

struct StateGraph {
  ResolutionKind kind;
  std::vector<std::vector<Dart>> circles;
  /// One grey segment per crossing: the two circles its endpoints lie on.
  struct Segment {
    NodeId crossing;
    int32_t circle_a, circle_b;
  };
  std::vector<Segment> segments;
  int circle_count() const { return static_cast<int>(circles.size()); }
};

/// Smooth every crossing the same way.  The A-smoothing joins slot pairs
/// (u, u+1) and (u+2, u+3) where u is an under slot.  Link mode only.
StateGraph resolution(const Diagram& d, ResolutionKind kind);

bool is_A_adequate(const Diagram& d);
bool is_B_adequate(const Diagram& d);
bool is_semi_adequate(const Diagram& d);
bool is_adequate(const Diagram& d);

struct TwistRegion {
  std::vector<NodeId> crossings;  // in row order where the region is a row/cycle
};

/// Partition of the crossings into maximal chains through bigon faces.
std::vector<TwistRegion> twist_regions(const Diagram& d);

bool is_twist_A_adequate(const Diagram& d);
bool is_twist_B_adequate(const Diagram& d);
bool is_twist_adequate(const Diagram& d);

struct CompositeWitness {
  EdgeId e = -1, f = -1;
  int32_t face1 = -1, face2 = -1;
  std::vector<NodeId> side_a_crossings;
  std::vector<NodeId> side_b_crossings;
};

struct PrimenessResult {
  bool prime = true;
  std::optional<CompositeWitness> witness;
};

/// A connected link projection is composite iff some circle through two
/// distinct edges and two common faces has at least one crossing strictly on
/// each side.  Throws if the diagram is disconnected.
PrimenessResult is_prime_projection(const Diagram& d);

/// All composite circles of a connected Link or Tangle diagram.  In tangle
/// mode only circles whose crossing-containing side avoids the disk boundary
/// are reported (the side counts of the witness put the enclosed side first).
std::vector<CompositeWitness> composite_circles(const Diagram& d);

}  // namespace tanglekit
