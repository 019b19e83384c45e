#include "torus4/homology.hpp"

#include <algorithm>
#include <set>

#include "torus4/error.hpp"

namespace torus4 {

bool is_closed_walk(const Map& m, const std::vector<int>& darts) {
  if (darts.empty()) return false;
  for (size_t i = 0; i < darts.size(); ++i) {
    int nx = darts[(i + 1) % darts.size()];
    if (m.head(darts[i]) != m.vertex(nx)) return false;
  }
  return true;
}

CycleWalk make_walk(const Map& m, std::vector<int> darts) {
  require(is_closed_walk(m, darts), ErrorKind::Precondition, "walk is not closed");
  CycleWalk w;
  std::set<int> verts;
  for (int d : darts) verts.insert(m.vertex(d));
  w.is_simple = verts.size() == darts.size();
  w.darts = std::move(darts);
  return w;
}

CycleWalk reversed(const Map& m, const CycleWalk& w) {
  CycleWalk r;
  for (auto it = w.darts.rbegin(); it != w.darts.rend(); ++it) r.darts.push_back(m.alpha(*it));
  r.is_simple = w.is_simple;
  return r;
}

namespace {

// Darts of the tree path from vertex a to vertex b, given parent darts
// (parent_dart[v] points from v towards the root).
std::vector<int> tree_path(const Map& m, const std::vector<int>& parent_dart, const std::vector<int>& depth,
                           int a, int b) {
  std::vector<int> up, down;
  while (a != b) {
    if (depth[a] >= depth[b]) {
      up.push_back(parent_dart[a]);
      a = m.head(parent_dart[a]);
    } else {
      down.push_back(m.alpha(parent_dart[b]));
      b = m.head(parent_dart[b]);
    }
  }
  std::reverse(down.begin(), down.end());
  up.insert(up.end(), down.begin(), down.end());
  return up;
}

}  // namespace

HomologyBasis homology_basis(const Map& m) {
  require_torus(m);
  const int n = m.num_vertices(), ne = m.num_edges(), nf = m.num_faces();
  HomologyBasis h;
  h.in_tree.assign(ne, 0);
  h.in_cotree.assign(ne, 0);

  std::vector<int> parent(n, -1), depth(n, -1);
  std::vector<int> queue{0};
  depth[0] = 0;
  for (size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    for (int d : m.rotation(v)) {
      int w = m.head(d);
      if (depth[w] == -1) {
        depth[w] = depth[v] + 1;
        parent[w] = m.alpha(d);
        h.in_tree[m.edge_of(d)] = 1;
        queue.push_back(w);
      }
    }
  }

  // Dual tree over faces; fparent[f] is a dart c with face_of(c) == f whose
  // crossing leads to the parent face.
  std::vector<int> fparent(nf, -1), fdepth(nf, -1);
  std::vector<int> fq{0};
  fdepth[0] = 0;
  for (size_t i = 0; i < fq.size(); ++i) {
    int f = fq[i];
    for (int c : m.face(f)) {
      if (h.in_tree[m.edge_of(c)]) continue;
      int g = m.face_of(m.alpha(c));
      if (fdepth[g] == -1) {
        fdepth[g] = fdepth[f] + 1;
        fparent[g] = m.alpha(c);
        h.in_cotree[m.edge_of(c)] = 1;
        fq.push_back(g);
      }
    }
  }
  require(static_cast<int>(fq.size()) == nf, ErrorKind::Invariant, "dual spanning tree incomplete");

  std::vector<int> leftover;
  for (int e = 0; e < ne; ++e)
    if (!h.in_tree[e] && !h.in_cotree[e]) leftover.push_back(e);
  require(leftover.size() == 2, ErrorKind::Invariant, "tree-cotree left " + std::to_string(leftover.size()) +
                                                          " edges instead of 2");

  h.shift.assign(m.num_darts(), Vec2{0, 0});
  CycleWalk* basis[2] = {&h.b1, &h.b2};
  for (int j = 0; j < 2; ++j) {
    const int d = m.edge_dart(leftover[j]);
    // Dual loop: T* path from the face left of d to the face right of d,
    // then across d from right to left.
    int a = m.face_of(d), b = m.face_of(m.alpha(d));
    std::vector<int> up, down;  // crossing darts, each crossed from its left face to its right face
    while (a != b) {
      if (fdepth[a] >= fdepth[b]) {
        up.push_back(fparent[a]);
        a = m.face_of(m.alpha(fparent[a]));
      } else {
        down.push_back(m.alpha(fparent[b]));
        b = m.face_of(m.alpha(fparent[b]));
      }
    }
    for (int c : up) {
      h.shift[c][j] -= 1;
      h.shift[m.alpha(c)][j] += 1;
    }
    for (int c : down) {
      h.shift[c][j] -= 1;
      h.shift[m.alpha(c)][j] += 1;
    }
    h.shift[d][j] += 1;
    h.shift[m.alpha(d)][j] -= 1;

    std::vector<int> darts{d};
    auto back = tree_path(m, parent, depth, m.head(d), m.vertex(d));
    darts.insert(darts.end(), back.begin(), back.end());
    *basis[j] = make_walk(m, std::move(darts));
  }
  return h;
}

Vec2 walk_shift(const HomologyBasis& h, const std::vector<int>& darts) {
  Vec2 s{0, 0};
  for (int d : darts) s = s + h.shift[d];
  return s;
}

Vec2 cycle_class(const Map& m, const HomologyBasis& h, const CycleWalk& w) {
  require(is_closed_walk(m, w.darts), ErrorKind::Precondition, "walk is not closed");
  return walk_shift(h, w.darts);
}

}  // namespace torus4
