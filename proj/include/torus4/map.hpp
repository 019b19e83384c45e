#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace torus4 {

// A map given by a rotation system. Darts are 0..2m-1, every dart belongs to
// exactly one vertex rotation (listed counterclockwise) and alpha pairs darts
// into edges. The angle "d" is the corner between d and sigma(d); the face
// containing angle d lies on the left of d.
class Map {
 public:
  Map() = default;
  // Builds from per-vertex ccw rotations and the alpha involution. Validates
  // structure but not genus.
  Map(std::vector<std::vector<int>> rotations, std::vector<int> alpha);

  int num_darts() const { return static_cast<int>(alpha_.size()); }
  int num_vertices() const { return static_cast<int>(rot_.size()); }
  int num_edges() const { return num_darts() / 2; }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  int alpha(int d) const { return alpha_[d]; }
  int sigma(int d) const { return sigma_[d]; }
  int sigma_inv(int d) const { return sigma_inv_[d]; }
  // Face successor: d -> alpha(sigma(d)). Orbits are the faces.
  int phi(int d) const { return alpha_[sigma_[d]]; }
  int vertex(int d) const { return vert_[d]; }
  int head(int d) const { return vert_[alpha_[d]]; }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }
  const std::vector<int>& rotation(int v) const { return rot_[v]; }
  const std::vector<std::vector<int>>& rotations() const { return rot_; }
  const std::vector<int>& alpha_array() const { return alpha_; }

  // Edge ids rank edges by their smaller dart.
  int edge_of(int d) const { return edge_of_[d]; }
  int edge_dart(int e) const { return edge_dart_[e]; }  // the smaller dart
  bool is_loop(int d) const { return vert_[d] == vert_[alpha_[d]]; }

  // Face containing angle d (face on the left of d).
  int face_of(int d) const { return face_of_[d]; }
  const std::vector<int>& face(int f) const { return faces_[f]; }
  const std::vector<std::vector<int>>& faces() const { return faces_; }

  int euler_characteristic() const { return num_vertices() - num_edges() + num_faces(); }
  bool is_connected() const;
  bool is_triangulation() const;

  std::optional<int> root;
  // Original dart names from a parsed file, if any (index = dart id).
  std::vector<std::string> dart_names;

 private:
  std::vector<std::vector<int>> rot_;
  std::vector<int> alpha_, sigma_, sigma_inv_, vert_;
  std::vector<int> edge_of_, edge_dart_;
  std::vector<int> face_of_;
  std::vector<std::vector<int>> faces_;
};

// Throws Domain unless m is a connected map of genus 1 (n - m + f = 0).
void require_torus(const Map& m);
// Throws Domain unless m is a toroidal triangulation.
void require_triangulation(const Map& m);

// Deletes the given darts' edges (both halves) and renumbers the survivors in
// increasing old-id order. old_of[new] = old id.
Map delete_edges(const Map& m, const std::vector<int>& edge_darts, std::vector<int>* old_of = nullptr);

// Canonical code of the map rooted at dart r: darts relabeled in breadth-first
// discovery order (sigma before alpha), then the sequence of (sigma, alpha).
std::vector<int> rooted_code(const Map& m, int r);
// Minimum rooted code over all darts; equal for isomorphic maps.
std::vector<int> canonical_code(const Map& m);
// Rooted code when m.root is set, canonical code otherwise.
std::vector<int> canonical_or_rooted_code(const Map& m);
bool isomorphic(const Map& a, const Map& b);
// Relabels m so that dart ids follow the rooted code order from r.
Map relabel_from(const Map& m, int r);

}  // namespace torus4
