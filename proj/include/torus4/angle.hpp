#pragma once

#include <functional>
#include <vector>

#include "torus4/homology.hpp"
#include "torus4/map.hpp"

namespace torus4 {

// Angle map of a triangulation. Angle x of G (the corner between dart x and
// sigma(x)) becomes the edge with darts 2x (at the primal vertex) and 2x+1
// (at the dual vertex). Vertex ids: primal v, dual n + face.
struct AngleMap {
  Map g;
  Map a;
  int num_primal = 0;
  bool is_primal(int v) const { return v < num_primal; }
  int dual_vertex(int face) const { return num_primal + face; }
  // Face of A(G) that contains the edge of G of dart h.
  int face_of_edge(int h) const { return a.face_of(2 * g.sigma_inv(h)); }
};

AngleMap build_angle_map(const Map& g);

// out[x] == 1 when angle edge x goes from its primal to its dual vertex.
struct FourOrientation {
  std::vector<char> out;
  bool operator==(const FourOrientation&) const = default;
  auto operator<=>(const FourOrientation&) const = default;
};

// Is angle-map dart ad oriented away from its vertex?
inline bool forward(const FourOrientation& d, int ad) { return (ad & 1) ? !d.out[ad / 2] : d.out[ad / 2] != 0; }

bool is_four_orientation(const Map& g, const FourOrientation& d);
void require_four_orientation(const Map& g, const FourOrientation& d);

// Head vertex of angle edge x in angle-map vertex ids.
int orientation_head(const Map& g, const FourOrientation& d, int x);

// Calls f on every 4-orientation of A(g) (backtracking over faces).
void for_each_four_orientation(const Map& g, const std::function<void(const FourOrientation&)>& f);
std::vector<FourOrientation> all_four_orientations(const Map& g);

// Out-edges of A(G) leaving the cycle on its right minus those on its left.
int gamma(const Map& g, const FourOrientation& d, const CycleWalk& c);
bool is_balanced(const Map& g, const FourOrientation& d, const HomologyBasis& basis);
bool admits_tts_labeling(const Map& g, const FourOrientation& d, const HomologyBasis& basis);

// Faces of the angle-dual-completion correspond to darts of G: cell h is the
// quadrangle crossed by the half-edge h. Moves between cells:
enum class CellStep {
  Sigma,        // cell h -> cell sigma(h), crossing angle edge h
  SigmaInv,     // cell h -> cell sigma^-1(h)
  AcrossLeft,   // cell h -> cell alpha(h) through the dual half-edge in the left face of h
  AcrossRight,  // same through the right face
};
struct CellWalk {
  int start = 0;
  std::vector<CellStep> steps;
};
int cell_after(const Map& g, int h, CellStep s);
int step_delta(const Map& g, const FourOrientation& d, int h, CellStep s);
// Throws Precondition if the walk is not closed.
int delta(const Map& g, const FourOrientation& d, const CellWalk& w);

enum class CompletionVertex { Primal, Dual, Edge };
struct CompletionFace {
  CompletionVertex kind;
  int id;  // vertex, face or edge of G
  CellWalk walk;  // counterclockwise around the completion vertex
};
std::vector<CompletionFace> completion_faces(const Map& g);

CellWalk left_walk(const Map& g, const CycleWalk& c);
CellWalk right_walk(const Map& g, const CycleWalk& c);

struct GammaDelta {
  int gamma, delta_left, delta_right;
};
// Throws Invariant when gamma != dL + dR or dL != gamma/2 - 4|c|.
GammaDelta gamma_delta_consistency(const Map& g, const FourOrientation& d, const CycleWalk& c);

struct TTSLabeling {
  std::vector<int> label;  // per dart of G
  bool operator==(const TTSLabeling&) const = default;
};
bool is_tts_labeling(const Map& g, const TTSLabeling& l);
// Labels cells by delta mod 4 from seed cell (label 0). Throws Domain when
// two paths disagree.
TTSLabeling tts_labeling(const Map& g, const FourOrientation& d, int seed_cell = 0);

// All simple cycles of g with at most max_len edges, each listed once per
// direction of traversal (starting at its smallest vertex).
std::vector<CycleWalk> simple_cycles(const Map& g, int max_len);

}  // namespace torus4
