#pragma once

#include <vector>

#include "torus4/map.hpp"

namespace torus4 {

struct CensusResult {
  int n = 0;
  long rotation_systems = 0;   // labelled systems generated
  long torus_triangulations = 0;
  long essentially_4connected = 0;
  std::vector<Map> graphs;     // one per isomorphism class, by canonical code
  std::vector<int> roots_per_graph;  // rooted classes of each graph
  int rooted_classes() const;
};

// Every essentially 4-connected toroidal triangulation with n vertices, n <= 2.
// Rotations are fixed as consecutive dart ranges, the edge pairing runs over
// all perfect matchings; jobs > 1 shards the matchings across threads.
CensusResult census(int n, int jobs = 1);

}  // namespace torus4
