#include <algorithm>
#include <functional>
#include <set>

#include "torus4/codec.hpp"
#include "torus4/error.hpp"
#include "torus4/mobile.hpp"

namespace torus4 {

Skeleton skeleton_of(const ExtendedMobile& m) {
  require(!m.root, ErrorKind::Precondition, "skeleton needs an unrooted mobile");
  const int n = m.num_vertices();
  for (int v = 0; v < n; ++v) require(m.degree(v) == 4, ErrorKind::Precondition, "unrooted mobile vertex of degree != 4");
  std::vector<int> deg(n, 0);
  for (int v = 0; v < n; ++v)
    for (int h : m.rotation(v))
      if (!m.is_stem(h)) ++deg[v];
  std::vector<char> core(n, 1);
  std::vector<int> st;
  for (int v = 0; v < n; ++v)
    if (deg[v] <= 1) st.push_back(v);
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    if (!core[v]) continue;
    core[v] = 0;
    for (int h : m.rotation(v)) {
      if (m.is_stem(h)) continue;
      int w = m.vertex(m.partner(h));
      if (core[w] && --deg[w] <= 1) st.push_back(w);
    }
  }

  std::function<std::string(int)> sub = [&](int h) -> std::string {
    if (m.is_stem(h)) return "0";
    int p = m.partner(h);
    return "1" + sub(m.sigma(p)) + sub(m.sigma(m.sigma(p))) + sub(m.sigma(m.sigma(m.sigma(p))));
  };

  Skeleton s;
  std::vector<int> partner = m.partners();
  std::vector<std::vector<int>> rot;
  std::vector<int> core_deg;
  for (int v = 0; v < n; ++v) {
    if (!core[v]) {
      for (int h : m.rotation(v)) partner[h] = -2;
      continue;
    }
    rot.push_back(m.rotation(v));
    int cd = 0;
    for (int h : m.rotation(v)) {
      if (!m.is_stem(h) && core[m.vertex(m.partner(h))]) {
        ++cd;
        continue;
      }
      s.slots.push_back(h);
      s.trees.push_back("0" + sub(h));
      partner[h] = -1;
    }
    core_deg.push_back(cd);
  }
  require(!rot.empty(), ErrorKind::Invariant, "mobile has no cycle");
  s.core = ExtendedMobile(std::move(rot), std::move(partner), std::nullopt);
  int c3 = static_cast<int>(std::count(core_deg.begin(), core_deg.end(), 3));
  int c4 = static_cast<int>(std::count(core_deg.begin(), core_deg.end(), 4));
  if (c4 == 1 && c3 == 0)
    s.kind = SkeletonKind::Square;
  else if (c3 == 2 && c4 == 0)
    s.kind = SkeletonKind::Hexagon;
  else
    fail(ErrorKind::Invariant, "skeleton is neither square nor hexagon");
  require(static_cast<int>(s.slots.size()) == 2 * s.core.num_vertices() - 2, ErrorKind::Invariant,
          "skeleton slot count differs from 2k-2");
  return s;
}

ExtendedMobile reassemble(const Skeleton& s) {
  require(s.slots.size() == s.trees.size(), ErrorKind::Precondition, "one tree per slot");
  std::vector<std::vector<int>> rot = s.core.rotations();
  std::vector<int> partner = s.core.partners();
  auto fresh = [&](int p) {
    partner.push_back(p);
    return static_cast<int>(partner.size()) - 1;
  };
  for (size_t i = 0; i < s.slots.size(); ++i) {
    TernaryTree t = decode_tree(s.trees[i]);
    if (t.inner() == 0) continue;
    std::function<void(int, int)> grow = [&](int node, int parent_half) {
      int ph = fresh(parent_half);
      partner[parent_half] = ph;
      std::vector<int> r{ph};
      std::vector<std::pair<int, int>> later;
      for (int c : t.children[node]) {
        int h = fresh(-1);
        r.push_back(h);
        if (c >= 0) later.push_back({c, h});
      }
      rot.push_back(r);
      for (auto [c, h] : later) grow(c, h);
    };
    grow(0, s.slots[i]);
  }
  return ExtendedMobile(std::move(rot), std::move(partner), std::nullopt);
}

}  // namespace torus4
