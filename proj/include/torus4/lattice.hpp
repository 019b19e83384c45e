#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "torus4/angle.hpp"
#include "torus4/cover.hpp"
#include "torus4/homology.hpp"

namespace torus4 {

// Homology data of the angle map, computed once per instance.
struct AngleContext {
  AngleMap am;
  HomologyBasis basis_g;  // on G
  HomologyBasis basis_a;  // on A(G)
  std::vector<Vec2> offs_a;
  explicit AngleContext(const Map& g);
};

bool homologous(const AngleContext& ctx, const FourOrientation& d1, const FourOrientation& d2);

// All balanced 4-orientations, sorted. Precondition: n <= 4.
std::vector<FourOrientation> enumerate_balanced(const AngleContext& ctx);

enum class Side { Left, Right };
// Periodic part of the walk that always takes the first outgoing edge
// clockwise (Left) or counterclockwise (Right) from the arrival edge.
std::vector<int> left_right_walk(const AngleContext& ctx, const FourOrientation& d, int start, Side side);

// Directed cycles of the right (or left) walk whose region on the right (left)
// is a finite disk avoiding face f0 of A(G), smallest boundary dart first.
std::vector<std::vector<int>> flippable_cycles(const AngleContext& ctx, const FourOrientation& d, int f0, Side side);

FourOrientation reverse_darts(const FourOrientation& d, const std::vector<int>& adarts);

// Descent to the minimum (clockwise disks flipped) or ascent to the maximum.
// With a seed, the disk to flip is drawn at random instead of smallest first.
FourOrientation minimize(const AngleContext& ctx, const FourOrientation& d, int f0,
                         std::optional<uint64_t> seed = std::nullopt);
FourOrientation maximize(const AngleContext& ctx, const FourOrientation& d, int f0,
                         std::optional<uint64_t> seed = std::nullopt);

// Angle edges whose orientation is not the same in all states.
std::vector<int> non_rigid_edges(const std::vector<FourOrientation>& states);
// Reduced face id per face of A(G): faces glued across rigid edges.
std::vector<int> reduced_faces(const AngleContext& ctx, const std::vector<FourOrientation>& states);

struct Hasse {
  std::vector<FourOrientation> states;
  std::vector<std::vector<int>> up;  // i -> j when j is i with one reduced face flipped upwards
  std::vector<int> group;            // reduced face per face of A(G)
  int root_group = -1;
  std::vector<int> sources, sinks;
};
Hasse hasse_diagram(const AngleContext& ctx, const std::vector<FourOrientation>& states, int f0);

struct LatticeReport {
  bool unique_min = false, unique_max = false;
  bool meets_joins = false, distributive = false;
  int min = -1, max = -1;
};
LatticeReport check_lattice(const Hasse& h);

struct Disk48 {
  std::vector<int> boundary;  // angle-map darts, interior on the left
  bool is_cw(const FourOrientation& d) const;
  bool is_ccw(const FourOrientation& d) const;
};
Disk48 maximal_disk48_at_root(const AngleContext& ctx, int h0);

uint64_t orientation_digest(const FourOrientation& d);

}  // namespace torus4
