#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tanglekit/diagram.hpp"
#include "tanglekit/graph8.hpp"
#include "tanglekit/link_analysis.hpp"
#include "tanglekit/tangle.hpp"

namespace tanglekit {

enum class Conclusion : uint8_t {
  NonSplitLink,
  NonTrivialLink,
  PrimeLink,
  CompositeLinkIffProjection,
  PrimeTangle,
  CompositeTangle,
  LocalKnot,
  VertexSplitProjection,
  SplitGraph,
  NotRational,
};

const char* conclusion_name(Conclusion c);

struct Hypothesis {
  std::string name;
  std::string value;
};

/// A theorem-backed conclusion.  Hypotheses are recorded as (predicate,
/// value) pairs and can be replayed against the diagram; witnesses carry the
/// diagram data realizing the conclusion.
struct Certificate {
  Conclusion conclusion;
  std::string rule;
  std::vector<Hypothesis> hypotheses;
  std::string note;
  std::optional<CompositeWitness> composite;
  std::optional<SplitWitness> split;
  std::optional<TangleSplitWitness> tangle_split;
  std::optional<VertexSplitWitness> vertex_split;
  std::shared_ptr<const LocalKnotWitness> local_knot;
  std::shared_ptr<const KnottedArcWitness> knotted_arc;
};

std::vector<Certificate> certify_link(const Diagram& d);
std::vector<Certificate> certify_tangle(const Diagram& t);
std::vector<Certificate> certify_graph8(const Diagram& g);
std::vector<Certificate> certify(const Diagram& d);

/// Recompute a named hypothesis predicate over the diagram (and the
/// certificate's witness payloads where the name refers to them).
std::string eval_hypothesis(const Diagram& d, const Certificate& c, const std::string& name);

/// Soundness by replay: every recorded hypothesis value is reproduced.
bool replay(const Diagram& d, const Certificate& c);

}  // namespace tanglekit
