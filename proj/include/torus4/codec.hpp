#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "torus4/map.hpp"
#include "torus4/mobile.hpp"

namespace torus4 {

// Plane tree rooted at a leaf, every inner vertex of degree 4. Node 0 is the
// inner vertex next to the root leaf (absent when there is no inner vertex);
// children are listed ccw after the parent, -1 for a leaf.
struct TernaryTree {
  std::vector<std::array<int, 3>> children;
  int inner() const { return static_cast<int>(children.size()); }
  bool operator==(const TernaryTree&) const = default;
};

// Words are strings over {'0','1'}: '0' for the root leaf, then a preorder
// walk writing '1' for an inner vertex and '0' for a leaf.
std::string encode_tree(const TernaryTree& t);
TernaryTree decode_tree(const std::string& bits);
bool is_tree_word(const std::string& bits);
// All trees with the given number of inner vertices, in word order.
std::vector<TernaryTree> all_ternary_trees(int inner);

struct CodeWord {
  int k = 0;                  // inner vertices of the tree hanging from the root
  std::array<int, 3> special{};  // leaf positions of the special stems in tree1 (besides its root leaf)
  int pairing = 0;            // which of them is joined to the root leaf of tree1
  int root_angle = 0;         // 4 * preorder index + corner of the root attachment
  std::string tree1, tree2;
  bool operator==(const CodeWord&) const = default;

  std::string bits() const;
  static CodeWord from_bits(const std::string& bits);
};

CodeWord encode_mobile(const ExtendedMobile& m);
ExtendedMobile decode_mobile(const CodeWord& c);

// Full pipeline. g must be essentially 4-connected and h0 admissible.
CodeWord encode(const Map& g, int h0);
Map decode(const CodeWord& c);
// Whether h0 is an admissible root: interior-incident to its maximal quadrangle.
bool admissible_root(const Map& g, int h0);
// Mobile of (g, h0) from the minimal balanced orientation.
ExtendedMobile mobile_of(const Map& g, int h0);

// File form: hex of "T4CT", a 32-bit big-endian bit count, and the packed bits.
std::string to_hex_file(const CodeWord& c);
CodeWord from_hex_file(const std::string& text);

}  // namespace torus4
