#pragma once

// Test-only oracles, independently coded from the library's implementation
// paths they check.

#include <optional>
#include <vector>

#include "tanglekit/diagram.hpp"
#include "tanglekit/link_analysis.hpp"

namespace tanglekit::oracle {

/// Shadow connectivity by plain union-find over node/edge incidences.
bool connected(const Diagram& d);

/// State-circle count by union-find over darts (no successor walk):
/// each edge joins its two darts, each smoothing arc joins the darts of its
/// paired slots; circles are the connected components.
int state_circle_count(const Diagram& d, ResolutionKind kind);

/// Exhaustive primeness: every edge pair crossed with every face pair, edge
/// incidence read off the face corner walks, sides solved independently.
/// Returns a witness pair if composite.
std::optional<std::pair<EdgeId, EdgeId>> brute_force_composite(const Diagram& d);

/// Face count check from Euler's formula (components handled per the disk /
/// sphere conventions).
bool euler_face_count_ok(const Diagram& d);

}  // namespace tanglekit::oracle
