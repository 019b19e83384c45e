#include "fixtures.hpp"

#include <algorithm>
#include <random>

#include "torus4/census.hpp"
#include "torus4/connectivity.hpp"
#include "torus4/error.hpp"

namespace fixtures {

using namespace torus4;

Map one_vertex() { return Map({{0, 1, 2, 3, 4, 5}}, {3, 4, 5, 0, 1, 2}); }

Map k7() {
  const int offs[6] = {1, 3, 2, -1, -3, -2};
  std::vector<std::vector<int>> rot(7);
  std::vector<int> alpha(42);
  for (int v = 0; v < 7; ++v)
    for (int i = 0; i < 6; ++i) {
      rot[v].push_back(6 * v + i);
      int w = ((v + offs[i]) % 7 + 7) % 7;
      int j = 0;
      while (offs[j] != -offs[i]) ++j;
      alpha[6 * v + i] = 6 * w + j;
    }
  return Map(rot, alpha);
}

Map triangulated_grid(int p, int q) {
  // directions E, NE, N, W, SW, S are counterclockwise
  const int dx[6] = {1, 1, 0, -1, -1, 0}, dy[6] = {0, 1, 1, 0, -1, -1};
  std::vector<std::vector<int>> rot(p * q);
  std::vector<int> alpha(6 * p * q);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      int v = i * q + j;
      for (int k = 0; k < 6; ++k) {
        rot[v].push_back(6 * v + k);
        int w = ((i + dx[k] + p) % p) * q + (j + dy[k] + q) % q;
        alpha[6 * v + k] = 6 * w + (k + 3) % 6;
      }
    }
  return Map(rot, alpha);
}

namespace {

const CensusResult& census2() {
  static const CensusResult r = census(2);
  return r;
}

Map by_degrees(int a, int b) {
  for (const Map& m : census2().graphs) {
    int d0 = m.degree(0), d1 = m.degree(1);
    if ((d0 == a && d1 == b) || (d0 == b && d1 == a)) return m;
  }
  fail(ErrorKind::Invariant, "census lacks the requested map");
}

}  // namespace

Map two_vertex_66() { return by_degrees(6, 6); }
Map two_vertex_48() { return by_degrees(4, 8); }

Map insert_vertex_in_face(const Map& m, int f) {
  const auto corners = m.face(f);
  const int k = static_cast<int>(corners.size());
  const int base = m.num_darts();
  // y_i = base + 2i sits at the corner vertex, x_i = base + 2i + 1 at the new one
  for (int flip = 0; flip < 2; ++flip) {
    std::vector<std::vector<int>> rot;
    for (int v = 0; v < m.num_vertices(); ++v) {
      std::vector<int> r;
      for (int d : m.rotation(v)) {
        r.push_back(d);
        for (int i = 0; i < k; ++i)
          if (corners[i] == d) r.push_back(base + 2 * i);
      }
      rot.push_back(r);
    }
    std::vector<int> x;
    for (int i = 0; i < k; ++i) x.push_back(base + 2 * i + 1);
    if (flip) std::reverse(x.begin(), x.end());
    rot.push_back(x);
    std::vector<int> alpha = m.alpha_array();
    alpha.resize(base + 2 * k);
    for (int i = 0; i < k; ++i) {
      alpha[base + 2 * i] = base + 2 * i + 1;
      alpha[base + 2 * i + 1] = base + 2 * i;
    }
    Map out(rot, alpha);
    if (out.euler_characteristic() == 0 && out.is_triangulation()) return out;
  }
  fail(ErrorKind::Invariant, "vertex insertion failed");
}

Map stacked_k7() { return insert_vertex_in_face(k7(), 0); }

Map wheel_k7() {
  Map q = delete_edges(k7(), {0});
  for (int f = 0; f < q.num_faces(); ++f)
    if (q.face(f).size() == 4) return insert_vertex_in_face(q, f);
  fail(ErrorKind::Invariant, "no quadrangle after deleting an edge");
}

Map three_vertex() {
  for (const Map& base : {two_vertex_66(), two_vertex_48()})
    for (int a = 0; a < base.num_darts(); ++a)
      for (int b = 0; b < base.num_darts(); ++b) {
        if (a == b || base.vertex(a) != base.vertex(b)) continue;
        try {
          Map m = split_vertex(base, a, b);
          if (is_essentially_4connected(m)) return m;
        } catch (const Error&) {
        }
      }
  fail(ErrorKind::Invariant, "no essentially 4-connected split");
}

Map random_e4c(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Map m = one_vertex();
  while (m.num_vertices() < n) {
    std::uniform_int_distribution<int> pick(0, m.num_darts() - 1);
    bool grown = false;
    for (int tries = 0; tries < 1000 && !grown; ++tries) {
      int a = pick(rng), b = pick(rng);
      if (a == b || m.vertex(a) != m.vertex(b)) continue;
      try {
        Map s = split_vertex(m, a, b);
        if (!is_essentially_4connected(s)) continue;
        m = s;
        grown = true;
      } catch (const Error&) {
      }
    }
    if (!grown) fail(ErrorKind::Invariant, "random growth got stuck");
  }
  return m;
}

std::vector<Map> small_maps() { return {one_vertex(), two_vertex_66(), two_vertex_48()}; }

}  // namespace fixtures
