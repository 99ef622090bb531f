#pragma once

#include <optional>

#include "tanglekit/diagram.hpp"
#include "tanglekit/link_analysis.hpp"

namespace tanglekit {

/// Conway closures: the numerator joins NW-NE and SW-SE by crossing-free
/// outer arcs, the denominator joins NW-SW and NE-SE.
Diagram numerator_closure(const Diagram& t);
Diagram denominator_closure(const Diagram& t);

/// Horizontal sum: t1's NE joins t2's NW and t1's SE joins t2's SW.
Diagram tangle_sum(const Diagram& t1, const Diagram& t2);

/// Rigid rotations of the disk; rotation systems and crossings are untouched.
/// pi: NW<->SE, NE<->SW.  quarter: NW->NE->SE->SW->NW (so N of the rotation
/// is D of the original and vice versa).
Diagram pi_rotation(const Diagram& t);
Diagram quarter_rotation(const Diagram& t);

/// At least one crossing and both closures reduced and alternating.
bool is_strongly_alternating(const Diagram& t);

enum class MofClause : uint8_t { None, M, O, F };
const char* mof_clause_name(MofClause c);

struct MofReport {
  bool n_reduced = false, d_reduced = false;
  bool n_alternating = false, d_alternating = false;
  bool n_positive = false, d_positive = false;
  bool n_connected = false, d_connected = false;
  bool both_twist_a = false, both_twist_b = false;
  MofClause satisfied = MofClause::None;
};

/// Both closures reduced plus one of: (M) a closure alternating, (O) a
/// closure positive, (F) both closures connected and jointly twist-A- or
/// twist-B-adequate.  A crossing-free tangle reports None.
MofReport mof(const Diagram& t);

/// Composite iff some circle inside the disk meets the strings in two points
/// with a crossing-containing arc on its boundary-free side.
PrimenessResult is_prime_tangle_projection(const Diagram& t);

struct TangleSplitWitness {
  int32_t face = -1;             // face admitting the separating chord
  std::array<int, 2> gaps{-1, -1};  // the opposite boundary gaps it joins
  int side_a_strand = -1;        // strand index on each side of the chord
  int side_b_strand = -1;
};

/// A chord through one face joining two opposite boundary gaps and
/// separating the two strings (shadow connectivity forces full separation).
std::optional<TangleSplitWitness> split_tangle_witness(const Diagram& t);

/// Close one open strand's shadow component into a link diagram by joining
/// its two endpoints with a crossing-free outer arc; the other component is
/// discarded.  Meaningful for split tangles.
Diagram close_string(const Diagram& t, int strand_index);

/// Extract the enclosed side of a composite circle and close the cut arc
/// with a crossing-free outer arc, yielding a knot diagram.
Diagram close_enclosed_arc(const Diagram& t, const CompositeWitness& w);

enum class KnotCriterion : uint8_t { KMT, Stoimenow, Thistlethwaite };
const char* knot_criterion_name(KnotCriterion c);

/// First classical non-triviality criterion that applies to a knot diagram:
/// KMT (connected reduced alternating, >=1 crossing), Stoimenow (knot,
/// reduced positive, >=1 crossing), Thistlethwaite (reduced semi-adequate,
/// >=1 crossing).
std::optional<KnotCriterion> nontrivial_knot_criterion(const Diagram& k);

struct KnottedArcWitness {
  CompositeWitness circle;
  Diagram knot;
  KnotCriterion criterion;
};

/// The knotted-arc pipeline: find a composite circle of the tangle whose
/// enclosed arc closes to a certified non-trivial knot.
std::optional<KnottedArcWitness> knotted_arc_witness(const Diagram& t);

}  // namespace tanglekit
