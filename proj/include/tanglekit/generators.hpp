#pragma once

#include <cstdint>
#include <utility>

#include "tanglekit/diagram.hpp"

namespace tanglekit {

/// Standard (2,n)-torus diagram: n crossings in one cyclic row of bigons.
Diagram gen_torus2(int n);

/// Standard pretzel diagram with three vertical twist columns of |p|, |q|,
/// |r| crossings; negative arguments mirror the column.
Diagram gen_pretzel(int p, int q, int r);

/// Column of n crossings between two vertical strings; its denominator
/// closure is the (2,n)-torus diagram.
Diagram vertical_twist_tangle(int n);

Diagram trefoil();
Diagram figure8_knot();
/// trefoil # trefoil, 6 crossings.
Diagram granny_knot();

/// Reassign every crossing so the diagram is alternating (checkerboard
/// rule); flip selects the mirror.  The shadow is unchanged.
Diagram make_alternating(const Diagram& shadow, bool flip = false);

/// Reassign every crossing so it is positive for the strand orientation
/// selected by `flips` (bit i flips strand i).
Diagram make_positive(const Diagram& shadow, uint64_t flips = 0);

/// Seeded random tangle shadow built from boundary twists and tangle sums.
Diagram random_tangle_shadow(uint64_t seed, int size);

/// Add one crossing twisting the two endpoints of the given side
/// (0 top, 1 right, 2 bottom, 3 left).
Diagram twist(const Diagram& t, int side, int over0);

/// Connected tangle whose denominator closure is reduced and alternating
/// (generate-and-filter; throws after bounded retries).
Diagram gen_alternating_tangle(uint64_t seed, int size);

/// Connected tangle whose denominator closure is reduced with a positive
/// orientation (generate-and-filter; throws after bounded retries).
Diagram gen_positive_tangle(uint64_t seed, int size);

enum class KnotKind : uint8_t { Trefoil, Figure8 };
enum class LocalKnotVariant : uint8_t { VertexSplit, NonSplit };
const char* knot_kind_name(KnotKind k);
const char* local_knot_variant_name(LocalKnotVariant v);

struct LocalKnotGroundTruth {
  Diagram graph;
  KnotKind knot;
  LocalKnotVariant variant;
};

/// Figure-eight graph with the chosen knot tied locally in one loop.
/// VertexSplit draws the loops disjointly (the knot is visible through a
/// circle through the vertex); NonSplit clasps the loops so that only the
/// interior-disk route applies.  Construction-verified before returning.
LocalKnotGroundTruth gen_local_knot_graph8(uint64_t seed, KnotKind knot,
                                           LocalKnotVariant variant);

/// Planar figure-eight graph: two crossing-free loops at the vertex.
Diagram planar_figure8_graph();

/// Two clasped loops at a vertex: the loops cross `crossings` times in a
/// vertical clasp column; over/under data from the checkerboard rule.
Diagram clasped_loops_graph(int crossings, bool flip = false);

/// Tangle with a positive non-alternating trefoil tied in the left string
/// and a positive clasp joining the strings: both closures are reduced and
/// positive but not alternating.
Diagram positive_local_knot_tangle();

}  // namespace tanglekit
