#pragma once

#include <optional>

#include "tanglekit/diagram.hpp"
#include "tanglekit/link_analysis.hpp"
#include "tanglekit/tangle.hpp"

namespace tanglekit {

/// Remove the 4-valent vertex; its edge ends become tangle endpoints with
/// compass labels following the rotation: slot 0 -> SW, 1 -> NW, 2 -> NE,
/// 3 -> SE.  With this assignment the two planar vertex smoothings are
/// exactly the denominator and numerator re-gluings of the excised tangle.
Diagram excise_vertex(const Diagram& g);

/// Smooth the vertex planarly: pairing_01_23 joins slots (0,1) and (2,3)
/// (the denominator re-gluing), otherwise slots (1,2) and (3,0) (the
/// numerator re-gluing).
Diagram smooth_vertex(const Diagram& g, bool pairing_01_23);

/// Attach a tangle's endpoints to a fresh 4-valent vertex (the inverse of
/// excise_vertex).
Diagram make_graph8_from_tangle(const Diagram& t);

/// Both planar smoothings of the vertex yield reduced alternating link
/// diagrams.
bool sawollek_reduced_alternating(const Diagram& g);

struct VertexSplitWitness {
  NodeId vertex = -1;
  /// Opposite rotation gaps at the vertex on a common face: corners{0,2}
  /// separate slots {1,2} from {3,0}; corners{1,3} separate {2,3} from {0,1}.
  std::array<int, 2> corners{-1, -1};
  int32_t face = -1;
};

std::optional<VertexSplitWitness> vertex_split_witness(const Diagram& g);

struct LocalKnotWitness {
  enum class Route : uint8_t { ThroughVertex, InteriorDisk };
  Route route;
  /// ThroughVertex: the separating circle through the vertex.
  std::array<int, 2> vertex_corners{-1, -1};
  int split_strand = -1;  // strand of the excised tangle that carries the knot
  /// InteriorDisk: the composite circle inside the excised tangle.
  std::optional<CompositeWitness> circle;
  Diagram knot;  // closed sub-diagram certified non-trivial
  KnotCriterion criterion = KnotCriterion::KMT;
};

/// Search for a certified local-knot witness: (a) excise the vertex; (b) if
/// the tangle splits and a separated string closes to a certified non-trivial
/// knot, report the circle through the vertex; (c) otherwise, if the tangle
/// satisfies MOF and is composite, report the interior knotted-arc disk.
/// Absence of a witness asserts nothing about the embedding.
std::optional<LocalKnotWitness> local_knot_witness(const Diagram& g);

}  // namespace tanglekit
