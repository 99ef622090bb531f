#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "tanglekit/diagram.hpp"
#include "tanglekit/generators.hpp"
#include "tanglekit/tangle.hpp"

namespace tanglekit::testing {

inline std::string read_corpus(const std::string& name) {
  std::ifstream in(std::string(TANGLEKIT_CORPUS_DIR) + "/" + name);
  REQUIRE_MESSAGE(in.good(), "missing corpus file " << name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Diagram corpus(const std::string& name) { return parse(read_corpus(name)); }

/// The strongly alternating prime tangle whose denominator closure is a
/// connected sum (two 3-crossing twist columns side by side).
inline Diagram composite_closure_tangle() {
  return tangle_sum(vertical_twist_tangle(3), vertical_twist_tangle(3));
}

/// A tangle with a trefoil tied locally in the left string, right string
/// plain; the strings do not cross.
inline Diagram split_trefoil_tangle() {
  DiagramBuilder b;
  NodeId x0 = b.add_crossing(1), x1 = b.add_crossing(1), x2 = b.add_crossing(1);
  b.connect(x0, 2, x2, 1);
  b.connect(x1, 0, x2, 3);
  b.connect(x0, 1, x1, 2);
  b.connect(x0, 3, x2, 0);
  b.connect(x1, 1, x2, 2);
  b.add_edge(Attach::at_end(NW), Attach::at_slot(x0, 0));
  b.add_edge(Attach::at_slot(x1, 3), Attach::at_end(SW));
  b.connect_ends(NE, SE);
  return b.build(Mode::Tangle);
}

/// Trefoil diagram with one extra reducing kink.
inline Diagram kinked_trefoil() {
  DiagramBuilder b;
  NodeId x0 = b.add_crossing(1), x1 = b.add_crossing(1), x2 = b.add_crossing(1);
  b.connect(x0, 2, x2, 1);
  b.connect(x1, 0, x2, 3);
  b.connect(x0, 1, x1, 2);
  b.connect(x0, 3, x2, 0);
  b.connect(x1, 1, x2, 2);
  NodeId k = b.add_crossing(1);
  b.connect(k, 2, k, 3);  // the curl
  b.connect(x1, 3, k, 0);
  b.connect(k, 1, x0, 0);
  return b.build(Mode::Link);
}

inline Diagram flip_all_crossings(Diagram d) {
  for (Node& n : d.nodes)
    if (n.kind == NodeKind::Crossing) n.over0 = 1 - n.over0;
  finalize(d);
  return d;
}

inline Diagram flip_one_crossing(Diagram d, NodeId n) {
  d.nodes[n].over0 = 1 - d.nodes[n].over0;
  finalize(d);
  return d;
}

}  // namespace tanglekit::testing
