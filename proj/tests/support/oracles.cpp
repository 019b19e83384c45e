#include "oracles.hpp"

#include <string>

namespace oracles {

int face_count(const std::vector<std::vector<int>>& rot, const std::vector<int>& alpha) {
  const int n = static_cast<int>(alpha.size());
  std::vector<int> next(n);
  for (const auto& r : rot)
    for (size_t i = 0; i < r.size(); ++i) next[r[i]] = r[(i + 1) % r.size()];
  std::vector<char> seen(n, 0);
  int faces = 0;
  for (int d = 0; d < n; ++d) {
    if (seen[d]) continue;
    ++faces;
    for (int x = d; !seen[x]; x = alpha[next[x]]) seen[x] = 1;
  }
  return faces;
}

int euler(const std::vector<std::vector<int>>& rot, const std::vector<int>& alpha) {
  return static_cast<int>(rot.size()) - static_cast<int>(alpha.size()) / 2 + face_count(rot, alpha);
}

std::vector<torus4::FourOrientation> brute_four_orientations(const torus4::Map& g) {
  const int angles = g.num_darts();
  std::vector<torus4::FourOrientation> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << angles); ++mask) {
    std::vector<int> primal(g.num_vertices(), 0), dual(g.num_faces(), 0);
    for (int x = 0; x < angles; ++x) {
      if (mask >> x & 1) ++primal[g.vertex(x)];
      else ++dual[g.face_of(x)];
    }
    bool ok = true;
    for (int c : primal) ok = ok && c == 4;
    for (int c : dual) ok = ok && c == 1;
    if (!ok) continue;
    torus4::FourOrientation d;
    for (int x = 0; x < angles; ++x) d.out.push_back((mask >> x & 1) ? 1 : 0);
    out.push_back(d);
  }
  return out;
}

uint64_t ternary_count(int n) {
  // trees with n inner vertices: root plus three subtrees
  std::vector<uint64_t> t(n + 1, 0);
  t[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int a = 0; a < m; ++a)
      for (int b = 0; a + b < m; ++b) t[m] += t[a] * t[b] * t[m - 1 - a - b];
  return t[n];
}

uint64_t forest_count(int n, int k) {
  // sequences of k trees with n inner vertices in total
  std::vector<uint64_t> f(n + 1, 0);
  f[0] = 1;
  for (int j = 0; j < k; ++j) {
    std::vector<uint64_t> g(n + 1, 0);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) g[a + b] += f[a] * ternary_count(b);
    f = g;
  }
  return f[n];
}

std::vector<std::string> tree_words_by_filter(int i) {
  // leaf-rooted: '0' then a preorder word where the deficit first hits -1 at the end
  std::vector<std::string> out;
  const int len = 3 * i + 1;
  for (uint64_t mask = 0; mask < (uint64_t{1} << len); ++mask) {
    std::string w = "0";
    int need = 1, ones = 0;
    bool ok = true;
    for (int p = 0; p < len; ++p) {
      bool one = mask >> (len - 1 - p) & 1;
      if (need == 0) {
        ok = false;
        break;
      }
      w += one ? '1' : '0';
      need += one ? 2 : -1;
      ones += one;
    }
    if (ok && need == 0 && ones == i) out.push_back(w);
  }
  return out;
}

int gamma_by_angles(const torus4::Map& g, const torus4::FourOrientation& d, const std::vector<int>& darts) {
  const int k = static_cast<int>(darts.size());
  int right = 0, left = 0;
  for (int i = 0; i < k; ++i) {
    int in = g.alpha(darts[i]), out = darts[(i + 1) % k];
    const auto& rot = g.rotation(g.vertex(out));
    const int deg = static_cast<int>(rot.size());
    int pin = 0, pout = 0;
    for (int j = 0; j < deg; ++j) {
      if (rot[j] == in) pin = j;
      if (rot[j] == out) pout = j;
    }
    // angle at position j lies between rot[j] and rot[j+1]
    for (int s = 0; s < (pin - pout + deg) % deg; ++s) left += d.out[rot[(pout + s) % deg]];
    for (int s = 0; s < (pout - pin + deg) % deg; ++s) right += d.out[rot[(pin + s) % deg]];
  }
  return right - left;
}

}  // namespace oracles
