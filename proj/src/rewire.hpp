#pragma once

#include <vector>

#include "tanglekit/diagram.hpp"

namespace tanglekit {

// Shared engine for diagram surgery (closures, sums, vertex excision and
// smoothing, sub-diagram extraction).  Sites are either terminals (final
// attachment points of the rebuilt diagram, used exactly once) or joints
// (2-valent gluing points that get smoothed away).  Segments connect sites;
// chains between terminals become edges, pure joint cycles become free loops.
class Rewire {
 public:
  int add_terminal(Attach a) {
    sites_.push_back({true, a});
    return static_cast<int>(sites_.size()) - 1;
  }
  int add_joint() {
    sites_.push_back({false, Attach::free()});
    return static_cast<int>(sites_.size()) - 1;
  }
  void add_segment(int site1, int site2) { segments_.push_back({site1, site2}); }
  void add_free_loop() { ++free_loops_; }

  Diagram finish(DiagramBuilder& builder, Mode mode, Options options) {
    const int n_sites = static_cast<int>(sites_.size());
    std::vector<std::vector<std::pair<int, int>>> incident(n_sites);  // (segment, side)
    for (size_t s = 0; s < segments_.size(); ++s) {
      incident[segments_[s].first].push_back({static_cast<int>(s), 0});
      incident[segments_[s].second].push_back({static_cast<int>(s), 1});
    }
    for (int s = 0; s < n_sites; ++s) {
      size_t want = sites_[s].terminal ? 1 : 2;
      if (incident[s].size() != want)
        throw DiagramError("rewire: site with wrong segment count");
    }
    std::vector<char> used(segments_.size(), 0);
    auto far_site = [&](int seg, int side) {
      return side == 0 ? segments_[seg].second : segments_[seg].first;
    };
    for (int start = 0; start < n_sites; ++start) {
      if (!sites_[start].terminal) continue;
      auto [seg, side] = incident[start][0];
      if (used[seg]) continue;
      used[seg] = 1;
      int at = far_site(seg, side);
      while (!sites_[at].terminal) {
        auto [s1, d1] = incident[at][0];
        auto [s2, d2] = incident[at][1];
        int nseg = used[s1] ? s2 : s1;
        int nside = used[s1] ? d2 : d1;
        used[nseg] = 1;
        at = far_site(nseg, nside);
      }
      builder.add_edge(sites_[start].attach, sites_[at].attach);
    }
    for (size_t seg = 0; seg < segments_.size(); ++seg) {
      if (used[seg]) continue;
      int at = segments_[seg].first;
      int cur = static_cast<int>(seg);
      while (!used[cur]) {
        used[cur] = 1;
        int far = far_site(cur, segments_[cur].first == at ? 0 : 1);
        auto [s1, d1] = incident[far][0];
        auto [s2, d2] = incident[far][1];
        cur = (s1 == cur) ? s2 : s1;
        at = far;
      }
      builder.add_free_loop();
    }
    for (int i = 0; i < free_loops_; ++i) builder.add_free_loop();
    return builder.build(mode, options);
  }

 private:
  struct Site {
    bool terminal;
    Attach attach;
  };
  std::vector<Site> sites_;
  std::vector<std::pair<int, int>> segments_;
  int free_loops_ = 0;
};

}  // namespace tanglekit
