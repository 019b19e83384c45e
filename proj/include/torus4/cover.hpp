#pragma once

#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "torus4/homology.hpp"
#include "torus4/map.hpp"

namespace torus4 {

// Finite window of the universal cover: copies of every vertex at shifts
// p in [-k,k]^2.
struct CoverPatch {
  int k = 0;
  struct Lift {
    int v;
    Vec2 p;
  };
  std::vector<Lift> vertices;
  // index of lifted vertex (v, p), or -1 outside the window
  int index(int v, Vec2 p) const;
  // neighbor[i][j]: index of the far end of the j-th dart of the rotation of
  // the base vertex, or -1 when it leaves the window
  std::vector<std::vector<int>> neighbor;
  // base dart lifted at position j of the rotation
  std::vector<std::vector<int>> dart;

 private:
  friend CoverPatch cover_patch(const Map&, const HomologyBasis&, int);
  std::map<std::tuple<int, int, int>, int> idx_;
};

CoverPatch cover_patch(const Map& m, const HomologyBasis& h, int k);

struct LiftedFace {
  int face;
  Vec2 p;  // copy of the vertex of the face's first dart
  auto operator<=>(const LiftedFace&) const = default;
};

// Per-dart offset of its vertex copy relative to the first dart of its face.
std::vector<Vec2> face_offsets(const Map& m, const HomologyBasis& h);

// Lifted face on the left of dart d placed at vertex copy p.
inline LiftedFace left_face(const Map& m, const std::vector<Vec2>& offs, int d, Vec2 p) {
  return {m.face_of(d), p - offs[d]};
}

// Faces of the region on the left of a closed walk, lifted with the walk's
// first vertex at the origin. Empty optional when the region has more than
// `limit` faces (the walk does not bound a finite disk on that side) or the
// lifted walk is not closed.
std::optional<std::set<LiftedFace>> region_left_of(const Map& m, const HomologyBasis& h,
                                                   const std::vector<Vec2>& offs,
                                                   const std::vector<int>& walk, int limit);

}  // namespace torus4
