#pragma once

#include <array>
#include <vector>

#include "torus4/map.hpp"

namespace torus4 {

using Vec2 = std::array<int, 2>;

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a[0] - b[0], a[1] - b[1]}; }

// A closed walk given by consecutive darts: head(d_i) == vertex(d_{i+1}).
struct CycleWalk {
  std::vector<int> darts;
  bool is_simple = false;  // no repeated vertex
};

CycleWalk make_walk(const Map& m, std::vector<int> darts);
bool is_closed_walk(const Map& m, const std::vector<int>& darts);
CycleWalk reversed(const Map& m, const CycleWalk& w);

// Tree-cotree homology basis. shift[d] holds the signed crossing numbers of
// dart d with the two dual loops, so the class of a closed walk is the sum of
// its shifts; b1 has class (1,0) and b2 has class (0,1).
struct HomologyBasis {
  CycleWalk b1, b2;
  std::vector<Vec2> shift;
  std::vector<char> in_tree;  // per edge: primal spanning tree T
  std::vector<char> in_cotree;  // per edge: dual lies in T*
};

HomologyBasis homology_basis(const Map& m);
// Throws Precondition when the walk is not closed.
Vec2 cycle_class(const Map& m, const HomologyBasis& h, const CycleWalk& w);
Vec2 walk_shift(const HomologyBasis& h, const std::vector<int>& darts);

}  // namespace torus4
