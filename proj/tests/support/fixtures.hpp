#pragma once

#include <cstdint>
#include <vector>

#include "torus4/map.hpp"

namespace fixtures {

using torus4::Map;

// One vertex, three loops.
Map one_vertex();
// K7: neighbors v+1, v+3, v+2, v-1, v-3, v-2 counterclockwise.
Map k7();
// The two essentially 4-connected maps on two vertices (degrees 6,6 and 4,8).
Map two_vertex_66();
Map two_vertex_48();
// K7 with a degree 3 vertex stacked in face 0; not essentially 4-connected.
Map stacked_k7();
// K7 with the edge of dart 0 replaced by a degree 4 vertex: its quadrangle
// holds 4 faces.
Map wheel_k7();
// An essentially 4-connected map on three vertices.
Map three_vertex();
// Random essentially 4-connected map with n vertices grown by vertex splits.
Map random_e4c(int n, uint64_t seed);

// p x q grid with one diagonal per square; essentially 4-connected for p, q >= 3.
Map triangulated_grid(int p, int q);

// New vertex joined to every corner of face f.
Map insert_vertex_in_face(const Map& m, int f);

// Every fixture that is essentially 4-connected with at most 2 vertices.
std::vector<Map> small_maps();

}  // namespace fixtures
