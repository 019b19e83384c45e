#include "torus4/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "torus4/connectivity.hpp"
#include "torus4/error.hpp"

namespace torus4 {

AngleContext::AngleContext(const Map& g)
    : am(build_angle_map(g)), basis_g(homology_basis(g)), basis_a(homology_basis(am.a)),
      offs_a(face_offsets(am.a, basis_a)) {}

bool homologous(const AngleContext& ctx, const FourOrientation& d1, const FourOrientation& d2) {
  const Map& a = ctx.am.a;
  std::vector<int> bal(a.num_vertices(), 0);
  Vec2 cls{0, 0};
  for (size_t x = 0; x < d1.out.size(); ++x) {
    if (d1.out[x] == d2.out[x]) continue;
    int ad = d1.out[x] ? 2 * static_cast<int>(x) : 2 * static_cast<int>(x) + 1;
    ++bal[a.vertex(ad)];
    --bal[a.head(ad)];
    cls = cls + ctx.basis_a.shift[ad];
  }
  for (int b : bal)
    if (b != 0) return false;
  return cls == Vec2{0, 0};
}

std::vector<FourOrientation> enumerate_balanced(const AngleContext& ctx) {
  const Map& g = ctx.am.g;
  require(g.num_vertices() <= 4, ErrorKind::Precondition, "enumeration limited to n <= 4");
  std::vector<FourOrientation> out;
  for_each_four_orientation(g, [&](const FourOrientation& d) {
    if (gamma(g, d, ctx.basis_g.b1) == 0 && gamma(g, d, ctx.basis_g.b2) == 0) out.push_back(d);
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int next_dart(const Map& a, const FourOrientation& d, int x, Side side) {
  int y = a.alpha(x);
  do {
    y = side == Side::Right ? a.sigma(y) : a.sigma_inv(y);
  } while (!forward(d, y));
  return y;
}

std::vector<int> reversed_walk(const Map& a, const std::vector<int>& w) {
  std::vector<int> r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(a.alpha(*it));
  return r;
}

}  // namespace

std::vector<int> left_right_walk(const AngleContext& ctx, const FourOrientation& d, int start, Side side) {
  const Map& a = ctx.am.a;
  require(forward(d, start), ErrorKind::Precondition, "walk must start on an outgoing dart");
  std::map<int, int> pos;
  std::vector<int> seq;
  int x = start;
  while (!pos.count(x)) {
    pos[x] = static_cast<int>(seq.size());
    seq.push_back(x);
    x = next_dart(a, d, x, side);
  }
  return std::vector<int>(seq.begin() + pos[x], seq.end());
}

std::vector<std::vector<int>> flippable_cycles(const AngleContext& ctx, const FourOrientation& d, int f0, Side side) {
  const Map& a = ctx.am.a;
  std::vector<int> nxt(a.num_darts(), -1), state(a.num_darts(), 0);
  for (int x = 0; x < a.num_darts(); ++x)
    if (forward(d, x)) nxt[x] = next_dart(a, d, x, side);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < a.num_darts(); ++s) {
    if (nxt[s] < 0 || state[s]) continue;
    std::vector<int> path;
    int x = s;
    while (!state[x]) {
      state[x] = 1;
      path.push_back(x);
      x = nxt[x];
    }
    if (state[x] == 1) {
      auto it = std::find(path.begin(), path.end(), x);
      std::vector<int> cyc(it, path.end());
      std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
      // the disk sits on the turning side of the walk
      auto walk = side == Side::Right ? reversed_walk(a, cyc) : cyc;
      auto region = region_left_of(a, ctx.basis_a, ctx.offs_a, walk, a.num_faces());
      bool ok = region.has_value();
      if (ok)
        for (const auto& f : *region)
          if (f.face == f0) ok = false;
      if (ok) out.push_back(cyc);
    }
    for (int y : path) state[y] = 2;
  }
  std::sort(out.begin(), out.end());
  return out;
}

FourOrientation reverse_darts(const FourOrientation& d, const std::vector<int>& adarts) {
  FourOrientation r = d;
  for (int x : adarts) r.out[x / 2] ^= 1;
  return r;
}

namespace {

FourOrientation descend(const AngleContext& ctx, const FourOrientation& d, int f0, Side side,
                        std::optional<uint64_t> seed) {
  const Map& g = ctx.am.g;
  require(is_balanced(g, d, ctx.basis_g), ErrorKind::Domain, "orientation is not balanced");
  require(f0 >= 0 && f0 < ctx.am.a.num_faces(), ErrorKind::Precondition, "root face out of range");
  std::mt19937_64 rng(seed.value_or(0));
  FourOrientation cur = d;
  // every flip moves strictly in the lattice; this bound only guards against bugs
  const long limit = 1000000;
  for (long it = 0; it < limit; ++it) {
    auto cyc = flippable_cycles(ctx, cur, f0, side);
    if (cyc.empty()) return cur;
    size_t pick = seed ? std::uniform_int_distribution<size_t>(0, cyc.size() - 1)(rng) : 0;
    cur = reverse_darts(cur, cyc[pick]);
  }
  fail(ErrorKind::Invariant, "lattice descent does not terminate");
}

}  // namespace

FourOrientation minimize(const AngleContext& ctx, const FourOrientation& d, int f0, std::optional<uint64_t> seed) {
  return descend(ctx, d, f0, Side::Right, seed);
}

FourOrientation maximize(const AngleContext& ctx, const FourOrientation& d, int f0, std::optional<uint64_t> seed) {
  return descend(ctx, d, f0, Side::Left, seed);
}

std::vector<int> non_rigid_edges(const std::vector<FourOrientation>& states) {
  require(!states.empty(), ErrorKind::Precondition, "empty state set");
  std::vector<int> out;
  for (size_t x = 0; x < states[0].out.size(); ++x)
    for (const auto& s : states)
      if (s.out[x] != states[0].out[x]) {
        out.push_back(static_cast<int>(x));
        break;
      }
  return out;
}

std::vector<int> reduced_faces(const AngleContext& ctx, const std::vector<FourOrientation>& states) {
  const Map& a = ctx.am.a;
  std::vector<int> parent(a.num_faces());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto nr = non_rigid_edges(states);
  std::vector<char> flexible(states[0].out.size(), 0);
  for (int x : nr) flexible[x] = 1;
  for (size_t x = 0; x < flexible.size(); ++x) {
    if (flexible[x]) continue;
    int f1 = find(a.face_of(2 * static_cast<int>(x))), f2 = find(a.face_of(2 * static_cast<int>(x) + 1));
    parent[std::max(f1, f2)] = std::min(f1, f2);
  }
  std::map<int, int> ids;
  std::vector<int> group(a.num_faces());
  for (int f = 0; f < a.num_faces(); ++f) {
    int r = find(f);
    if (!ids.count(r)) ids.emplace(r, static_cast<int>(ids.size()));
    group[f] = ids[r];
  }
  return group;
}

Hasse hasse_diagram(const AngleContext& ctx, const std::vector<FourOrientation>& states, int f0) {
  const Map& a = ctx.am.a;
  Hasse h;
  h.states = states;
  std::sort(h.states.begin(), h.states.end());
  h.group = reduced_faces(ctx, h.states);
  h.root_group = h.group[f0];
  const int ng = *std::max_element(h.group.begin(), h.group.end()) + 1;
  // boundary of each reduced face: angle edges with different groups on the two sides
  std::vector<std::vector<std::pair<int, char>>> border(ng);  // (angle, out value when ccw)
  for (int x = 0; x < a.num_edges(); ++x) {
    int gl = h.group[a.face_of(2 * x)], gr = h.group[a.face_of(2 * x + 1)];
    if (gl == gr) continue;
    border[gl].push_back({x, 1});
    border[gr].push_back({x, 0});
  }
  std::map<FourOrientation, int> index;
  for (size_t i = 0; i < h.states.size(); ++i) index[h.states[i]] = static_cast<int>(i);
  h.up.assign(h.states.size(), {});
  std::vector<int> indeg(h.states.size(), 0);
  for (size_t i = 0; i < h.states.size(); ++i) {
    for (int gi = 0; gi < ng; ++gi) {
      if (gi == h.root_group || border[gi].empty()) continue;
      bool ccw = true;
      for (auto [x, v] : border[gi]) ccw &= h.states[i].out[x] == v;
      if (!ccw) continue;
      FourOrientation t = h.states[i];
      for (auto [x, v] : border[gi]) t.out[x] ^= 1;
      auto it = index.find(t);
      require(it != index.end(), ErrorKind::Invariant, "face flip leaves the balanced set");
      h.up[i].push_back(it->second);
      ++indeg[it->second];
    }
  }
  for (size_t i = 0; i < h.states.size(); ++i) {
    if (indeg[i] == 0) h.sources.push_back(static_cast<int>(i));
    if (h.up[i].empty()) h.sinks.push_back(static_cast<int>(i));
  }
  return h;
}

LatticeReport check_lattice(const Hasse& h) {
  LatticeReport r;
  const int n = static_cast<int>(h.states.size());
  r.unique_min = h.sources.size() == 1;
  r.unique_max = h.sinks.size() == 1;
  if (r.unique_min) r.min = h.sources[0];
  if (r.unique_max) r.max = h.sinks[0];
  // le[i][j]: i <= j
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    std::vector<int> st{i};
    le[i][i] = 1;
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (int y : h.up[x])
        if (!le[i][y]) {
          le[i][y] = 1;
          st.push_back(y);
        }
    }
  }
  auto bound = [&](int a, int b, bool upper) {
    int best = -1;
    for (int c = 0; c < n; ++c) {
      bool ok = upper ? (le[a][c] && le[b][c]) : (le[c][a] && le[c][b]);
      if (!ok) continue;
      if (best == -1 || (upper ? le[c][best] : le[best][c])) best = c;
    }
    if (best == -1) return -1;
    for (int c = 0; c < n; ++c) {
      bool ok = upper ? (le[a][c] && le[b][c]) : (le[c][a] && le[c][b]);
      if (ok && !(upper ? le[best][c] : le[c][best])) return -1;
    }
    return best;
  };
  std::vector<std::vector<int>> meet(n, std::vector<int>(n)), join(n, std::vector<int>(n));
  r.meets_joins = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      meet[a][b] = bound(a, b, false);
      join[a][b] = bound(a, b, true);
      if (meet[a][b] < 0 || join[a][b] < 0) r.meets_joins = false;
    }
  if (!r.meets_joins) return r;
  r.distributive = true;
  for (int a = 0; a < n && r.distributive; ++a)
    for (int b = 0; b < n && r.distributive; ++b)
      for (int c = 0; c < n; ++c)
        if (meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]) {
          r.distributive = false;
          break;
        }
  return r;
}

bool Disk48::is_cw(const FourOrientation& d) const {
  for (int x : boundary)
    if (forward(d, x)) return false;
  return true;
}

bool Disk48::is_ccw(const FourOrientation& d) const {
  for (int x : boundary)
    if (!forward(d, x)) return false;
  return true;
}

Disk48 maximal_disk48_at_root(const AngleContext& ctx, int h0) {
  const Map& g = ctx.am.g;
  const Map& a = ctx.am.a;
  Quadrangle q = maximal_quadrangle_containing(g, h0);
  Disk48 disk;
  if (q.interior.size() == 2) {
    int f0 = ctx.am.face_of_edge(h0);
    int x = a.face(f0)[0], y = x;
    do {
      disk.boundary.push_back(y);
      y = a.sigma_inv(a.alpha(y));
    } while (y != x);
    return disk;
  }
  for (int t : q.boundary) {
    disk.boundary.push_back(2 * t);
    disk.boundary.push_back(2 * g.sigma_inv(g.alpha(t)) + 1);
  }
  return disk;
}

uint64_t orientation_digest(const FourOrientation& d) {
  uint64_t h = 1469598103934665603ull;
  for (char c : d.out) {
    h ^= static_cast<uint64_t>(c ? '1' : '0');
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace torus4
