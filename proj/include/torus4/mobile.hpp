#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torus4/angle.hpp"
#include "torus4/map.hpp"

namespace torus4 {

// A map whose half-edges are either paired (full edges) or stems. Half-edge
// ids are arbitrary non-negative integers.
class ExtendedMobile {
 public:
  ExtendedMobile() = default;
  // rot: ccw half-edges per vertex; partner[h] = other half of h, -1 for a
  // stem, -2 for an unused id.
  ExtendedMobile(std::vector<std::vector<int>> rot, std::vector<int> partner, std::optional<int> root);

  int num_vertices() const { return static_cast<int>(rot_.size()); }
  int num_half_edges() const { return half_count_; }
  int num_edges() const { return edge_count_; }
  int num_stems() const { return half_count_ - 2 * edge_count_; }
  int id_bound() const { return static_cast<int>(partner_.size()); }
  bool used(int h) const { return h >= 0 && h < id_bound() && partner_[h] != -2; }
  bool is_stem(int h) const { return partner_[h] == -1; }
  int partner(int h) const { return partner_[h]; }
  int vertex(int h) const { return vert_[h]; }
  int sigma(int h) const { return sigma_[h]; }
  int sigma_inv(int h) const { return sigma_inv_[h]; }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }
  const std::vector<int>& rotation(int v) const { return rot_[v]; }
  const std::vector<std::vector<int>>& rotations() const { return rot_; }
  const std::vector<int>& partners() const { return partner_; }
  // Next half-edge along the border of the faces, face on the left; a stem
  // is walked around.
  int border_next(int h) const { return sigma_inv_[is_stem(h) ? h : partner_[h]]; }
  // Faces of the map of full edges.
  int num_faces() const;
  bool is_connected() const;

  std::optional<int> root;

 private:
  std::vector<std::vector<int>> rot_;
  std::vector<int> partner_, vert_, sigma_, sigma_inv_;
  int half_count_ = 0, edge_count_ = 0;
};

// Canonical code from half-edge h (breadth first over sigma and partner).
std::vector<int> mobile_code(const ExtendedMobile& m, int h);
// Rooted code when rooted, minimum over all starts otherwise.
std::vector<int> mobile_canonical_code(const ExtendedMobile& m);

// Mobile of the orientation: h belongs to it when the angle just before h in
// clockwise order is outgoing; h0 is added. Throws Invariant when the result
// is not a unicellular mobile with the expected counts.
ExtendedMobile extract_mobile(const Map& g, const FourOrientation& d, int h0);
// Unicellular with n vertices, n+1 edges, 2n-1 stems, degrees 4 (5 at root).
std::string mobile_structure_problem(const ExtendedMobile& m);

struct ClosureResult {
  Map g;
  std::vector<int> dart_of;  // mobile half-edge -> dart of g
};
// Closes admissible triples until no stem is left. Without a seed the first
// triple along the border is closed; with a seed a random one.
ClosureResult complete_closure(const ExtendedMobile& m, std::optional<uint64_t> seed = std::nullopt);
// Single walk from the root angle, each stem closed when met.
ClosureResult recover_walk(const ExtendedMobile& m);
// Two turns around the border from border position `start`, closing only admissible triples.
ClosureResult rootless_recovery(const ExtendedMobile& m, int start);
// The closure never swallows the root angle.
bool is_safe(const ExtendedMobile& m, std::optional<uint64_t> seed = std::nullopt);
// The root component condition: h0 is a stem, or removing it splits off a tree.
bool root_splits_tree(const ExtendedMobile& m);
// Equal left and right counts on every cycle (root half-edge not counted).
bool is_balanced_mobile(const ExtendedMobile& m);
// Number of distinct simple cycles (up to direction) of the full edges.
int count_mobile_cycles(const ExtendedMobile& m);

// Drops h0 and the tree hanging from it.
ExtendedMobile unrooted(const ExtendedMobile& m);
// Labels 0..3, increasing ccw around every vertex, +2 across full edges,
// with the angle after half-edge h between labels 0 and 1. Unrooted mobiles
// only. Throws Domain when inconsistent.
std::vector<int> mobile_labeling(const ExtendedMobile& m, int h);

// Rebuilds (G, h0) from a rooted mobile and checks every condition on the way.
Map inverse_bijection(const ExtendedMobile& m);

enum class SkeletonKind { Square, Hexagon };
struct Skeleton {
  SkeletonKind kind;
  ExtendedMobile core;             // vertices on cycles; slots are stems
  std::vector<int> slots;          // core half-edges carrying a tree
  std::vector<std::string> trees;  // ternary tree word per slot
};
Skeleton skeleton_of(const ExtendedMobile& m);
ExtendedMobile reassemble(const Skeleton& s);

}  // namespace torus4
