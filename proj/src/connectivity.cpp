#include "torus4/connectivity.hpp"

#include <algorithm>
#include <map>

#include "torus4/error.hpp"

namespace torus4 {

namespace {

bool is_face_walk(const Map& m, int x, int y, int z) {
  return y == m.sigma(m.alpha(x)) && z == m.sigma(m.alpha(y)) && x == m.sigma(m.alpha(z));
}

}  // namespace

ConnectivityReport diagnose_essential_4connectivity(const Map& m, int k) {
  require_triangulation(m);
  HomologyBasis h = homology_basis(m);
  CoverPatch c = cover_patch(m, h, k);
  for (int v = 0; v < m.num_vertices(); ++v) {
    int i0 = c.index(v, {0, 0});
    std::set<int> seen;
    for (size_t j = 0; j < c.neighbor[i0].size(); ++j) {
      int nb = c.neighbor[i0][j];
      int d = c.dart[i0][j];
      if (nb == i0) return {false, "contractible loop at dart " + std::to_string(d)};
      if (nb >= 0 && !seen.insert(nb).second)
        return {false, "homotopic multiple edges at vertex " + std::to_string(v)};
    }
  }
  for (int v = 0; v < m.num_vertices(); ++v) {
    int i0 = c.index(v, {0, 0});
    for (size_t j1 = 0; j1 < c.neighbor[i0].size(); ++j1) {
      int a = c.neighbor[i0][j1];
      if (a < 0) continue;
      for (size_t j2 = 0; j2 < c.neighbor[a].size(); ++j2) {
        int b = c.neighbor[a][j2];
        if (b < 0 || b == i0 || b == a) continue;
        for (size_t j3 = 0; j3 < c.neighbor[b].size(); ++j3) {
          if (c.neighbor[b][j3] != i0) continue;
          int t1 = c.dart[i0][j1], t2 = c.dart[a][j2], t3 = c.dart[b][j3];
          if (is_face_walk(m, t1, t2, t3) || is_face_walk(m, m.alpha(t3), m.alpha(t2), m.alpha(t1))) continue;
          return {false, "separating triangle through darts " + std::to_string(t1) + " " + std::to_string(t2) +
                             " " + std::to_string(t3)};
        }
      }
    }
  }
  return {true, ""};
}

bool is_essentially_4connected(const Map& m, int k) { return diagnose_essential_4connectivity(m, k).ok; }

Contraction contract_edge(const Map& m, int d) {
  require_triangulation(m);
  require(!m.is_loop(d), ErrorKind::Precondition, "cannot contract a loop");
  const int ad = m.alpha(d);
  const int u = m.vertex(d), v = m.vertex(ad);
  const int a = m.sigma(d), b = m.sigma_inv(d);      // u-side edges of the two faces
  const int bp = m.sigma(ad), ap = m.sigma_inv(ad);  // v-side edges

  // Merge the rotations of u and v without e.
  std::vector<std::vector<int>> rot;
  std::vector<int> merged;
  for (int x = m.sigma(d); x != d; x = m.sigma(x)) merged.push_back(x);
  for (int x = m.sigma(ad); x != ad; x = m.sigma(x)) merged.push_back(x);
  for (int w = 0; w < m.num_vertices(); ++w) {
    if (w == v) continue;
    if (w == u)
      rot.push_back(merged);
    else
      rot.push_back(m.rotation(w));
  }
  // Renumber darts without e.
  std::vector<int> new_of(m.num_darts(), -1), old_of;
  for (int x = 0; x < m.num_darts(); ++x)
    if (x != d && x != ad) {
      new_of[x] = static_cast<int>(old_of.size());
      old_of.push_back(x);
    }
  for (auto& r : rot)
    for (auto& x : r) x = new_of[x];
  std::vector<int> alpha(old_of.size());
  for (size_t i = 0; i < old_of.size(); ++i) alpha[i] = new_of[m.alpha(old_of[i])];
  Map g1(std::move(rot), std::move(alpha));

  // The two faces that contained e are now digons; drop one edge of each.
  // When the digons share an edge (the identified case) keep the shared one.
  std::vector<std::vector<int>> digons;
  for (const auto& f : g1.faces())
    if (f.size() == 2) digons.push_back({g1.edge_of(f[0]), g1.edge_of(f[1])});
  require(digons.size() == 2, ErrorKind::Domain, "contraction did not create two digons");
  std::vector<int> drop;
  int shared = -1;
  for (int e1 : digons[0])
    for (int e2 : digons[1])
      if (e1 == e2) shared = e1;
  const int ap_edge = g1.edge_of(new_of[ap]), bp_edge = g1.edge_of(new_of[bp]);
  for (const auto& dg : digons) {
    require(dg[0] != dg[1], ErrorKind::Domain, "degenerate digon");
    int pick;
    if (shared >= 0)
      pick = dg[0] == shared ? dg[1] : dg[0];
    else
      pick = (dg[0] == ap_edge || dg[0] == bp_edge) ? dg[0] : dg[1];
    drop.push_back(g1.edge_dart(pick));
  }
  require(g1.edge_of(drop[0]) != g1.edge_of(drop[1]), ErrorKind::Domain, "both digons drop the same edge");
  std::vector<int> old2;
  Map g2 = delete_edges(g1, drop, &old2);
  require(g2.num_vertices() == m.num_vertices() - 1 && g2.num_edges() == m.num_edges() - 3 && g2.is_triangulation() &&
              g2.euler_characteristic() == 0,
          ErrorKind::Domain, "contraction does not yield a toroidal triangulation");

  Contraction c;
  c.before = m;
  c.dart = d;
  c.old_of.resize(g2.num_darts());
  for (int x = 0; x < g2.num_darts(); ++x) c.old_of[x] = old_of[old2[x]];
  std::vector<int> touched{d};
  for (int x : {a, b, ap, bp}) {
    bool dup = false;
    for (int t : touched) dup |= m.edge_of(t) == m.edge_of(x);
    if (!dup) touched.push_back(x);
  }
  c.touched = touched;
  if (m.root) {
    int r = *m.root;
    for (int x = 0; x < g2.num_darts(); ++x)
      if (c.old_of[x] == r) g2.root = x;
  }
  c.after = std::move(g2);
  return c;
}

int find_contractible_edge(const Map& m, int k) {
  require_triangulation(m);
  require(m.num_vertices() >= 2, ErrorKind::Precondition, "single vertex map has no contractible edge");
  for (int e = 0; e < m.num_edges(); ++e) {
    int d = m.edge_dart(e);
    if (m.is_loop(d)) continue;
    try {
      Contraction c = contract_edge(m, d);
      if (is_essentially_4connected(c.after, k)) return d;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::Domain) throw;
    }
  }
  fail(ErrorKind::Invariant, "no contractible edge found in an essentially 4-connected triangulation");
}

Map split_vertex(const Map& m, int a, int b) {
  require(a != b && m.vertex(a) == m.vertex(b), ErrorKind::Precondition, "split needs two darts of one vertex");
  const int w = m.vertex(a);
  const int nd = m.num_darts();
  const int eu = nd, ev = nd + 1, ap = nd + 2, apx = nd + 3, bp = nd + 4, bpy = nd + 5;
  const int xa = m.alpha(a), yb = m.alpha(b);
  std::vector<int> ulist, vlist{ev, bp};
  int x = a;
  do {
    ulist.push_back(x);
    x = m.sigma(x);
  } while (x != b);
  ulist.push_back(b);
  ulist.push_back(eu);
  for (x = m.sigma(b); x != a; x = m.sigma(x)) vlist.push_back(x);
  vlist.push_back(ap);
  std::vector<std::vector<int>> rot = m.rotations();
  rot[w] = ulist;
  rot.push_back(vlist);
  auto insert_rel = [&](int anchor, int dart, bool after) {
    for (auto& r : rot) {
      auto it = std::find(r.begin(), r.end(), anchor);
      if (it == r.end()) continue;
      r.insert(after ? it + 1 : it, dart);
      return;
    }
  };
  insert_rel(xa, apx, true);
  insert_rel(yb, bpy, false);
  std::vector<int> alpha = m.alpha_array();
  alpha.resize(nd + 6);
  alpha[eu] = ev;
  alpha[ev] = eu;
  alpha[ap] = apx;
  alpha[apx] = ap;
  alpha[bp] = bpy;
  alpha[bpy] = bp;
  Map out(std::move(rot), std::move(alpha));
  require(out.is_triangulation() && out.euler_characteristic() == 0 && out.num_vertices() == m.num_vertices() + 1,
          ErrorKind::Domain, "vertex split does not yield a toroidal triangulation");
  return out;
}

std::vector<Quadrangle> quadrangles_containing(const Map& m, int h0) {
  require_triangulation(m);
  const HomologyBasis h = homology_basis(m);
  const auto offs = face_offsets(m, h);
  const int limit = m.num_faces();
  const int e = m.edge_of(h0);
  std::map<std::set<LiftedFace>, Quadrangle> found;

  for (int t1 = 0; t1 < m.num_darts(); ++t1) {
    const int v0 = m.vertex(t1);
    for (int t2 : m.rotation(m.head(t1))) {
      for (int t3 : m.rotation(m.head(t2))) {
        for (int t4 : m.rotation(m.head(t3))) {
          if (m.head(t4) != v0) continue;
          std::vector<int> walk{t1, t2, t3, t4};
          Vec2 p1 = h.shift[t1], p2 = p1 + h.shift[t2], p3 = p2 + h.shift[t3];
          if (p3 + h.shift[t4] != Vec2{0, 0}) continue;
          std::set<std::pair<int, Vec2>> lv{{v0, {0, 0}}, {m.head(t1), p1}, {m.head(t2), p2}, {m.head(t3), p3}};
          if (lv.size() != 4) continue;
          auto region = region_left_of(m, h, offs, walk, limit);
          if (!region) continue;

          std::set<std::tuple<int, int, int>> bedges;
          Vec2 p{0, 0};
          for (int d : walk) {
            int ad = m.alpha(d);
            Vec2 q = p + h.shift[d];
            bedges.insert(d < ad ? std::make_tuple(d, p[0], p[1]) : std::make_tuple(ad, q[0], q[1]));
            p = q;
          }
          for (const auto& f : *region) {
            for (int c : m.face(f.face)) {
              if (m.edge_of(c) != e) continue;
              Vec2 q = f.p + offs[c];
              int ac = m.alpha(c);
              Vec2 qa = q + h.shift[c];
              if (!region->count(left_face(m, offs, ac, qa))) continue;
              if (bedges.count(c < ac ? std::make_tuple(c, q[0], q[1]) : std::make_tuple(ac, qa[0], qa[1]))) continue;
              Vec2 origin = c == h0 ? q : qa;
              Quadrangle quad;
              quad.boundary = walk;
              for (const auto& g : *region) quad.interior.insert({g.face, g.p - origin});
              if (found.count(quad.interior)) continue;
              std::set<std::pair<int, Vec2>> inner;
              for (const auto& g : *region)
                for (int y : m.face(g.face)) inner.insert({m.vertex(y), g.p + offs[y]});
              for (const auto& b : lv) inner.erase(b);
              quad.interior_vertices = static_cast<int>(inner.size());
              quad.root_incident = lv.count({m.vertex(h0), origin}) > 0;
              found.emplace(quad.interior, std::move(quad));
            }
          }
        }
      }
    }
  }
  std::vector<Quadrangle> out;
  for (auto& [k, q] : found) out.push_back(std::move(q));
  return out;
}

Quadrangle maximal_quadrangle_containing(const Map& m, int h0) {
  auto all = quadrangles_containing(m, h0);
  require(!all.empty(), ErrorKind::Invariant, "no quadrangle contains the root edge");
  auto best = std::max_element(all.begin(), all.end(),
                               [](const Quadrangle& a, const Quadrangle& b) { return a.interior.size() < b.interior.size(); });
  for (const auto& q : all)
    require(std::includes(best->interior.begin(), best->interior.end(), q.interior.begin(), q.interior.end()),
            ErrorKind::Invariant, "maximal quadrangle is not unique");
  return *best;
}

}  // namespace torus4
