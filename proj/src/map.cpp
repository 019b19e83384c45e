#include "torus4/map.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "torus4/error.hpp"

namespace torus4 {

Map::Map(std::vector<std::vector<int>> rotations, std::vector<int> alpha)
    : rot_(std::move(rotations)), alpha_(std::move(alpha)) {
  const int nd = num_darts();
  require(nd > 0, ErrorKind::Domain, "map has no darts");
  require(nd % 2 == 0, ErrorKind::Domain, "odd number of darts");
  sigma_.assign(nd, -1);
  sigma_inv_.assign(nd, -1);
  vert_.assign(nd, -1);
  for (int v = 0; v < num_vertices(); ++v) {
    const auto& r = rot_[v];
    require(!r.empty(), ErrorKind::Domain, "vertex " + std::to_string(v) + " has empty rotation");
    for (size_t i = 0; i < r.size(); ++i) {
      int d = r[i];
      require(d >= 0 && d < nd, ErrorKind::Domain, "dart out of range in rotation");
      require(vert_[d] == -1, ErrorKind::Domain, "dart " + std::to_string(d) + " in two rotations");
      vert_[d] = v;
      int nx = r[(i + 1) % r.size()];
      sigma_[d] = nx;
      sigma_inv_[nx] = d;
    }
  }
  for (int d = 0; d < nd; ++d) {
    require(vert_[d] != -1, ErrorKind::Domain, "dart " + std::to_string(d) + " in no rotation");
    int a = alpha_[d];
    require(a >= 0 && a < nd && a != d && alpha_[a] == d, ErrorKind::Domain,
            "alpha is not a fixed-point-free involution at dart " + std::to_string(d));
  }
  edge_of_.assign(nd, -1);
  for (int d = 0; d < nd; ++d) {
    if (d < alpha_[d]) {
      edge_of_[d] = edge_of_[alpha_[d]] = static_cast<int>(edge_dart_.size());
      edge_dart_.push_back(d);
    }
  }
  face_of_.assign(nd, -1);
  for (int d = 0; d < nd; ++d) {
    if (face_of_[d] != -1) continue;
    std::vector<int> orbit;
    int x = d;
    do {
      face_of_[x] = static_cast<int>(faces_.size());
      orbit.push_back(x);
      x = phi(x);
    } while (x != d);
    faces_.push_back(std::move(orbit));
  }
}

bool Map::is_connected() const {
  if (num_vertices() == 0) return false;
  std::vector<char> seen(num_vertices(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int d : rot_[v]) {
      int w = head(d);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == num_vertices();
}

bool Map::is_triangulation() const {
  for (const auto& f : faces_)
    if (f.size() != 3) return false;
  return true;
}

void require_torus(const Map& m) {
  require(m.is_connected(), ErrorKind::Domain, "map is not connected");
  require(m.euler_characteristic() == 0, ErrorKind::Domain,
          "map is not toroidal (n - m + f = " + std::to_string(m.euler_characteristic()) + ")");
}

void require_triangulation(const Map& m) {
  require_torus(m);
  require(m.is_triangulation(), ErrorKind::Domain, "map is not a triangulation");
}

Map delete_edges(const Map& m, const std::vector<int>& edge_darts, std::vector<int>* old_of) {
  std::vector<char> dead(m.num_darts(), 0);
  for (int d : edge_darts) dead[d] = dead[m.alpha(d)] = 1;
  std::vector<int> new_of(m.num_darts(), -1), olds;
  for (int d = 0; d < m.num_darts(); ++d)
    if (!dead[d]) {
      new_of[d] = static_cast<int>(olds.size());
      olds.push_back(d);
    }
  std::vector<std::vector<int>> rot;
  for (int v = 0; v < m.num_vertices(); ++v) {
    std::vector<int> r;
    for (int d : m.rotation(v))
      if (!dead[d]) r.push_back(new_of[d]);
    require(!r.empty(), ErrorKind::Domain, "edge deletion isolates a vertex");
    rot.push_back(std::move(r));
  }
  std::vector<int> alpha(olds.size());
  for (size_t i = 0; i < olds.size(); ++i) alpha[i] = new_of[m.alpha(olds[i])];
  Map out(std::move(rot), std::move(alpha));
  if (m.root && !dead[*m.root]) out.root = new_of[*m.root];
  if (old_of) *old_of = std::move(olds);
  return out;
}

namespace {

std::vector<int> bfs_order(const Map& m, int r, std::vector<int>* label_out) {
  std::vector<int> label(m.num_darts(), -1), order;
  order.reserve(m.num_darts());
  label[r] = 0;
  order.push_back(r);
  for (size_t i = 0; i < order.size(); ++i) {
    int d = order[i];
    for (int nb : {m.sigma(d), m.alpha(d)}) {
      if (label[nb] == -1) {
        label[nb] = static_cast<int>(order.size());
        order.push_back(nb);
      }
    }
  }
  if (label_out) *label_out = std::move(label);
  return order;
}

}  // namespace

std::vector<int> rooted_code(const Map& m, int r) {
  std::vector<int> label;
  std::vector<int> order = bfs_order(m, r, &label);
  std::vector<int> code;
  code.reserve(2 * order.size() + 1);
  code.push_back(static_cast<int>(order.size()));
  for (int d : order) {
    code.push_back(label[m.sigma(d)]);
    code.push_back(label[m.alpha(d)]);
  }
  return code;
}

std::vector<int> canonical_code(const Map& m) {
  std::vector<int> best;
  for (int r = 0; r < m.num_darts(); ++r) {
    auto c = rooted_code(m, r);
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

std::vector<int> canonical_or_rooted_code(const Map& m) {
  return m.root ? rooted_code(m, *m.root) : canonical_code(m);
}

bool isomorphic(const Map& a, const Map& b) {
  if (a.num_darts() != b.num_darts() || a.num_vertices() != b.num_vertices()) return false;
  return canonical_code(a) == canonical_code(b);
}

Map relabel_from(const Map& m, int r) {
  std::vector<int> label;
  bfs_order(m, r, &label);
  std::vector<std::vector<int>> rot;
  // Vertices ordered by the smallest new label among their darts.
  std::vector<int> vorder(m.num_vertices());
  std::iota(vorder.begin(), vorder.end(), 0);
  std::vector<int> vmin(m.num_vertices(), m.num_darts());
  for (int d = 0; d < m.num_darts(); ++d) vmin[m.vertex(d)] = std::min(vmin[m.vertex(d)], label[d]);
  std::sort(vorder.begin(), vorder.end(), [&](int a, int b) { return vmin[a] < vmin[b]; });
  for (int v : vorder) {
    const auto& old = m.rotation(v);
    size_t start = 0;
    for (size_t i = 0; i < old.size(); ++i)
      if (label[old[i]] < label[old[start]]) start = i;
    std::vector<int> r;
    for (size_t i = 0; i < old.size(); ++i) r.push_back(label[old[(start + i) % old.size()]]);
    rot.push_back(std::move(r));
  }
  std::vector<int> alpha(m.num_darts());
  for (int d = 0; d < m.num_darts(); ++d) alpha[label[d]] = label[m.alpha(d)];
  Map out(std::move(rot), std::move(alpha));
  if (m.root) out.root = label[*m.root];
  return out;
}

}  // namespace torus4
