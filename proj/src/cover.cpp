#include "torus4/cover.hpp"

#include <algorithm>

#include "torus4/error.hpp"

namespace torus4 {

int CoverPatch::index(int v, Vec2 p) const {
  auto it = idx_.find({v, p[0], p[1]});
  return it == idx_.end() ? -1 : it->second;
}

CoverPatch cover_patch(const Map& m, const HomologyBasis& h, int k) {
  require(k >= 0, ErrorKind::Precondition, "cover window radius must be non-negative");
  CoverPatch c;
  c.k = k;
  for (int x = -k; x <= k; ++x)
    for (int y = -k; y <= k; ++y)
      for (int v = 0; v < m.num_vertices(); ++v) {
        c.idx_[{v, x, y}] = static_cast<int>(c.vertices.size());
        c.vertices.push_back({v, {x, y}});
      }
  c.neighbor.resize(c.vertices.size());
  c.dart.resize(c.vertices.size());
  for (size_t i = 0; i < c.vertices.size(); ++i) {
    auto [v, p] = c.vertices[i];
    for (int d : m.rotation(v)) {
      c.dart[i].push_back(d);
      c.neighbor[i].push_back(c.index(m.head(d), p + h.shift[d]));
    }
  }
  return c;
}

std::vector<Vec2> face_offsets(const Map& m, const HomologyBasis& h) {
  std::vector<Vec2> offs(m.num_darts(), Vec2{0, 0});
  for (const auto& f : m.faces()) {
    Vec2 cur{0, 0};
    for (int c : f) {
      offs[c] = cur;
      cur = cur + h.shift[m.sigma(c)];
    }
  }
  return offs;
}

std::optional<std::set<LiftedFace>> region_left_of(const Map& m, const HomologyBasis& h,
                                                   const std::vector<Vec2>& offs,
                                                   const std::vector<int>& walk, int limit) {
  // lifted edge key: (smaller dart, copy of its vertex)
  auto edge_key = [&](int d, Vec2 p) {
    int a = m.alpha(d);
    if (d < a) return std::make_tuple(d, p[0], p[1]);
    Vec2 q = p + h.shift[d];
    return std::make_tuple(a, q[0], q[1]);
  };
  std::set<std::tuple<int, int, int>> blocked;
  std::vector<LiftedFace> frontier;
  Vec2 p{0, 0};
  for (int d : walk) {
    blocked.insert(edge_key(d, p));
    frontier.push_back(left_face(m, offs, d, p));
    p = p + h.shift[d];
  }
  if (p != Vec2{0, 0}) return std::nullopt;
  std::set<LiftedFace> region;
  std::vector<LiftedFace> stack;
  for (auto f : frontier)
    if (region.insert(f).second) stack.push_back(f);
  while (!stack.empty()) {
    if (static_cast<int>(region.size()) > limit) return std::nullopt;
    LiftedFace f = stack.back();
    stack.pop_back();
    for (int c : m.face(f.face)) {
      Vec2 q = f.p + offs[c];
      if (blocked.count(edge_key(c, q))) continue;
      LiftedFace g = left_face(m, offs, m.alpha(c), q + h.shift[c]);
      if (region.insert(g).second) stack.push_back(g);
    }
  }
  if (static_cast<int>(region.size()) > limit) return std::nullopt;
  return region;
}

}  // namespace torus4
