#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "torus4/cover.hpp"
#include "torus4/homology.hpp"
#include "torus4/map.hpp"

namespace torus4 {

struct ConnectivityReport {
  bool ok = false;
  std::string reason;  // empty when ok
};

// Triangulation required. The check runs on a cover patch of radius k.
ConnectivityReport diagnose_essential_4connectivity(const Map& m, int k = 3);
bool is_essentially_4connected(const Map& m, int k = 3);

// Result of contracting one edge, with what is needed to undo it.
struct Contraction {
  Map before;
  Map after;
  int dart = -1;             // contracted dart of `before` (u -> v)
  std::vector<int> old_of;   // dart of `after` -> dart of `before`
  std::vector<int> touched;  // edge darts of `before` around the contracted edge, e first
};

// Contracts the edge of dart d and keeps one edge of each created digon.
Contraction contract_edge(const Map& m, int d);
// First non-loop edge (by edge id) whose contraction stays essentially
// 4-connected. Throws Precondition on a single vertex map and Invariant when
// no candidate works.
int find_contractible_edge(const Map& m, int k = 3);

// Inverse of contraction: splits the vertex of a and b (distinct darts at the
// same vertex) into two adjacent vertices. The result may be invalid for
// degenerate choices; Domain is thrown then.
Map split_vertex(const Map& m, int a, int b);

struct Quadrangle {
  std::vector<int> boundary;           // four darts, interior on their left
  std::set<LiftedFace> interior;       // lifted with the vertex of h0 at the origin
  int interior_vertices = 0;
  bool root_incident = false;          // h0 sits on the boundary, pointing inside
};

// All contractible quadrangles whose interior contains the edge of h0, each
// translated so that the dart h0 is lifted at the origin.
std::vector<Quadrangle> quadrangles_containing(const Map& m, int h0);
// The unique maximal one. Throws Invariant if maximality is not unique.
Quadrangle maximal_quadrangle_containing(const Map& m, int h0);

}  // namespace torus4
