#pragma once

#include <vector>

#include "torus4/angle.hpp"
#include "torus4/connectivity.hpp"
#include "torus4/homology.hpp"
#include "torus4/map.hpp"

namespace torus4 {

// Per dart label: 0 outgoing blue, 1 outgoing red, 2 incoming blue,
// 3 incoming red. The two darts of an edge differ by 2 mod 4.
struct TransversalStructure {
  std::vector<int> label;
  bool operator==(const TransversalStructure&) const = default;

  bool is_blue(int d) const { return label[d] % 2 == 0; }
  bool is_outgoing(int d) const { return label[d] < 2; }
};

bool check_local_property(const Map& g, const TransversalStructure& ts);
FourOrientation ts_to_orientation(const Map& g, const TransversalStructure& ts);
// Labels with the root (if any) at 0. Throws Domain if the mod 8 condition fails.
TransversalStructure orientation_to_ts(const Map& g, const FourOrientation& d, const HomologyBasis& basis);

// Adds 1 to every label (mod 4); keeps the local property and the orientation.
TransversalStructure rotate_labels(const TransversalStructure& ts, int k);

// All balanced structures of a one-vertex triangulation, smallest first.
std::vector<TransversalStructure> base_case_structures(const Map& g);
// Extends a balanced structure of c.after to c.before.
TransversalStructure decontract(const Contraction& c, const TransversalStructure& ts_after);
// Throws Domain when g is not essentially 4-connected.
TransversalStructure find_balanced_ts(const Map& g);

bool ts_is_balanced(const Map& g, const TransversalStructure& ts);

}  // namespace torus4
