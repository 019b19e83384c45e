#include "torus4/mobile.hpp"

#include <algorithm>
#include <deque>
#include <list>
#include <map>
#include <random>
#include <set>

#include "torus4/connectivity.hpp"
#include "torus4/error.hpp"
#include "torus4/lattice.hpp"

namespace torus4 {

ExtendedMobile::ExtendedMobile(std::vector<std::vector<int>> rot, std::vector<int> partner, std::optional<int> r)
    : root(r), rot_(std::move(rot)), partner_(std::move(partner)) {
  const int nb = id_bound();
  vert_.assign(nb, -1);
  sigma_.assign(nb, -1);
  sigma_inv_.assign(nb, -1);
  for (int v = 0; v < num_vertices(); ++v) {
    const auto& r2 = rot_[v];
    for (size_t i = 0; i < r2.size(); ++i) {
      int h = r2[i];
      require(h >= 0 && h < nb && partner_[h] != -2, ErrorKind::Parse, "unknown half-edge in rotation");
      require(vert_[h] == -1, ErrorKind::Parse, "half-edge in two rotations");
      vert_[h] = v;
      sigma_[h] = r2[(i + 1) % r2.size()];
      sigma_inv_[r2[(i + 1) % r2.size()]] = h;
    }
  }
  for (int h = 0; h < nb; ++h) {
    if (partner_[h] == -2) continue;
    require(vert_[h] != -1, ErrorKind::Parse, "half-edge missing from rotations");
    ++half_count_;
    int p = partner_[h];
    if (p >= 0) {
      require(p < nb && p != h && partner_[p] == h, ErrorKind::Parse, "edge pairing is not an involution");
      if (h < p) ++edge_count_;
    } else {
      require(p == -1, ErrorKind::Parse, "bad partner value");
    }
  }
  if (root) require(used(*root), ErrorKind::Parse, "root is not a half-edge");
}

int ExtendedMobile::num_faces() const {
  std::vector<char> seen(id_bound(), 0);
  auto next_full = [&](int h) {
    int x = sigma_[h];
    while (is_stem(x)) x = sigma_[x];
    return x;
  };
  int f = 0;
  for (int h = 0; h < id_bound(); ++h) {
    if (!used(h) || is_stem(h) || seen[h]) continue;
    ++f;
    for (int x = h; !seen[x]; x = partner_[next_full(x)]) seen[x] = 1;
  }
  return f;
}

bool ExtendedMobile::is_connected() const {
  if (num_vertices() == 0) return true;
  std::vector<char> seen(num_vertices(), 0);
  std::vector<int> st{0};
  seen[0] = 1;
  int c = 1;
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    for (int h : rot_[v])
      if (!is_stem(h) && !seen[vert_[partner_[h]]]) {
        seen[vert_[partner_[h]]] = 1;
        ++c;
        st.push_back(vert_[partner_[h]]);
      }
  }
  return c == num_vertices();
}

std::vector<int> mobile_code(const ExtendedMobile& m, int h) {
  std::map<int, int> lab;
  std::vector<int> order{h};
  lab[h] = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    int x = order[i];
    for (int y : {m.sigma(x), m.is_stem(x) ? -1 : m.partner(x)}) {
      if (y < 0 || lab.count(y)) continue;
      lab[y] = static_cast<int>(order.size());
      order.push_back(y);
    }
  }
  std::vector<int> code{static_cast<int>(order.size())};
  for (int x : order) {
    code.push_back(lab[m.sigma(x)]);
    code.push_back(m.is_stem(x) ? -1 : lab[m.partner(x)]);
  }
  return code;
}

std::vector<int> mobile_canonical_code(const ExtendedMobile& m) {
  if (m.root) return mobile_code(m, *m.root);
  std::vector<int> best;
  for (int h = 0; h < m.id_bound(); ++h) {
    if (!m.used(h)) continue;
    auto c = mobile_code(m, h);
    if (best.empty() || c < best) best = c;
  }
  return best;
}

std::string mobile_structure_problem(const ExtendedMobile& m) {
  const int n = m.num_vertices();
  if (!m.is_connected()) return "mobile is not connected";
  if (m.num_edges() != n + 1) return "mobile has " + std::to_string(m.num_edges()) + " edges, expected n+1";
  if (m.num_stems() != 2 * n - 1) return "mobile has " + std::to_string(m.num_stems()) + " stems, expected 2n-1";
  if (m.num_faces() != 1) return "mobile has " + std::to_string(m.num_faces()) + " faces, expected 1";
  if (!m.root) return "mobile has no root";
  for (int v = 0; v < n; ++v) {
    int want = v == m.vertex(*m.root) ? 5 : 4;
    if (m.degree(v) != want) return "vertex " + std::to_string(v) + " has degree " + std::to_string(m.degree(v));
  }
  return "";
}

ExtendedMobile extract_mobile(const Map& g, const FourOrientation& d, int h0) {
  require_four_orientation(g, d);
  require(h0 >= 0 && h0 < g.num_darts(), ErrorKind::Precondition, "root dart out of range");
  std::vector<char> in(g.num_darts(), 0);
  for (int h = 0; h < g.num_darts(); ++h) in[h] = d.out[g.sigma_inv(h)];
  require(!in[h0], ErrorKind::Domain, "root half-edge already belongs to the mobile");
  in[h0] = 1;
  std::vector<std::vector<int>> rot(g.num_vertices());
  std::vector<int> partner(g.num_darts(), -2);
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int h : g.rotation(v))
      if (in[h]) {
        rot[v].push_back(h);
        partner[h] = in[g.alpha(h)] ? g.alpha(h) : -1;
      }
  ExtendedMobile m(std::move(rot), std::move(partner), h0);
  auto problem = mobile_structure_problem(m);
  require(problem.empty(), ErrorKind::Invariant, "extracted mobile is malformed: " + problem);
  return m;
}

namespace {

class Closure {
 public:
  explicit Closure(const ExtendedMobile& m) : m_(m) {
    rot_ = m.rotations();
    partner_ = m.partners();
    vert_.assign(partner_.size(), -1);
    for (int v = 0; v < m.num_vertices(); ++v)
      for (int h : rot_[v]) vert_[h] = v;
    int first = -1;
    if (m.root) {
      first = m.border_next(m.is_stem(*m.root) ? *m.root : m.partner(*m.root));
    } else {
      for (int h = 0; h < m.id_bound() && first < 0; ++h)
        if (m.used(h)) first = h;
    }
    int h = first;
    do {
      border_.push_back(h);
      if (m.is_stem(h)) ++stems_;
      h = m.border_next(h);
    } while (h != first && static_cast<int>(border_.size()) <= m.num_half_edges());
    require(static_cast<int>(border_.size()) == m.num_half_edges(), ErrorKind::Domain, "mobile is not unicellular");
    if (m.root) {
      marker_ = std::prev(border_.end());
      has_marker_ = true;
    }
  }

  using It = std::list<int>::iterator;
  bool edge(int h) const { return partner_[h] >= 0; }
  It prev(It it) { return std::prev(it == border_.begin() ? border_.end() : it); }
  It next(It it) {
    ++it;
    return it == border_.end() ? border_.begin() : it;
  }
  bool admissible(It s) {
    if (edge(*s) || border_.size() < 3) return false;
    It b = prev(s), a = prev(b);
    return edge(*a) && edge(*b);
  }
  void close(It s) {
    It b = prev(s), a = prev(b);
    if (has_marker_ && (marker_ == a || marker_ == b)) {
      safe_ = false;
      has_marker_ = false;
    }
    int d1 = *a, st = *s;
    int u = vert_[d1];
    int x = static_cast<int>(partner_.size());
    partner_.push_back(st);
    vert_.push_back(u);
    partner_[st] = x;
    auto& r = rot_[u];
    r.insert(std::find(r.begin(), r.end(), d1) + 1, x);
    border_.erase(a);
    border_.erase(b);
    *s = x;
    --stems_;
  }
  int stems() const { return stems_; }
  std::list<int>& border() { return border_; }
  bool safe() const { return safe_; }

  ClosureResult finish() {
    require(stems_ == 0, ErrorKind::Domain, "stems left after closure");
    require(border_.size() == 3, ErrorKind::Invariant, "closure did not end on a triangle");
    std::vector<int> ids;
    for (int h = 0; h < static_cast<int>(partner_.size()); ++h)
      if (partner_[h] >= 0) ids.push_back(h);
    std::vector<int> to(partner_.size(), -1);
    for (size_t i = 0; i < ids.size(); ++i) to[ids[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> rot;
    for (auto& r : rot_) {
      std::vector<int> rr;
      for (int h : r) rr.push_back(to[h]);
      rot.push_back(std::move(rr));
    }
    std::vector<int> alpha(ids.size());
    for (size_t i = 0; i < ids.size(); ++i) alpha[i] = to[partner_[ids[i]]];
    ClosureResult res;
    res.g = Map(std::move(rot), std::move(alpha));
    require(res.g.is_triangulation() && res.g.euler_characteristic() == 0 && res.g.is_connected(), ErrorKind::Domain,
            "closure is not a toroidal triangulation");
    res.dart_of.assign(m_.id_bound(), -1);
    for (int h = 0; h < m_.id_bound(); ++h)
      if (m_.used(h)) res.dart_of[h] = to[h];
    if (m_.root) res.g.root = to[*m_.root];
    return res;
  }

 private:
  const ExtendedMobile& m_;
  std::vector<std::vector<int>> rot_;
  std::vector<int> partner_, vert_;
  std::list<int> border_;
  It marker_;
  bool has_marker_ = false, safe_ = true;
  int stems_ = 0;
};

void run_complete(Closure& c, std::optional<uint64_t> seed) {
  std::mt19937_64 rng(seed.value_or(0));
  while (c.stems() > 0) {
    std::vector<Closure::It> cand;
    for (auto it = c.border().begin(); it != c.border().end(); ++it)
      if (c.admissible(it)) cand.push_back(it);
    require(!cand.empty(), ErrorKind::Domain, "no admissible triple while stems remain");
    size_t pick = seed ? std::uniform_int_distribution<size_t>(0, cand.size() - 1)(rng) : 0;
    c.close(cand[pick]);
  }
}

}  // namespace

ClosureResult complete_closure(const ExtendedMobile& m, std::optional<uint64_t> seed) {
  Closure c(m);
  run_complete(c, seed);
  return c.finish();
}

bool is_safe(const ExtendedMobile& m, std::optional<uint64_t> seed) {
  require(m.root.has_value(), ErrorKind::Precondition, "safety needs a rooted mobile");
  Closure c(m);
  run_complete(c, seed);
  return c.safe();
}

ClosureResult recover_walk(const ExtendedMobile& m) {
  require(m.root.has_value(), ErrorKind::Precondition, "walk recovery needs a rooted mobile");
  Closure c(m);
  int stack_edges = 0;
  for (auto it = c.border().begin(); it != c.border().end(); ++it) {
    if (c.edge(*it)) {
      ++stack_edges;
      continue;
    }
    require(stack_edges >= 2, ErrorKind::Domain, "stem met after fewer than two edges");
    c.close(it);
    --stack_edges;
  }
  return c.finish();
}

ClosureResult rootless_recovery(const ExtendedMobile& m, int start) {
  Closure c(m);
  const int len = static_cast<int>(c.border().size());
  require(start >= 0 && start < len, ErrorKind::Precondition, "start position out of range");
  auto it = std::next(c.border().begin(), start);
  for (int step = 0; step < 2 * len && c.stems() > 0; ++step) {
    if (c.admissible(it)) c.close(it);
    it = c.next(it);
  }
  return c.finish();
}

namespace {

// Map of the full edges with contiguous dart ids; ids[i] is the mobile id of dart i.
Map full_edge_map(const ExtendedMobile& m, std::vector<int>& ids) {
  ids.clear();
  std::vector<int> to(m.id_bound(), -1);
  for (int h = 0; h < m.id_bound(); ++h)
    if (m.used(h) && !m.is_stem(h)) {
      to[h] = static_cast<int>(ids.size());
      ids.push_back(h);
    }
  std::vector<std::vector<int>> rot;
  for (const auto& r : m.rotations()) {
    std::vector<int> rr;
    for (int h : r)
      if (to[h] >= 0) rr.push_back(to[h]);
    rot.push_back(std::move(rr));
  }
  std::vector<int> alpha(ids.size());
  for (size_t i = 0; i < ids.size(); ++i) alpha[i] = to[m.partner(ids[i])];
  return Map(std::move(rot), std::move(alpha));
}

// Vertices of the component of v after removing the edge of h, or empty if it
// still contains the other end.
std::set<int> component_without(const ExtendedMobile& m, int v, int h) {
  std::set<int> seen{v};
  std::vector<int> st{v};
  while (!st.empty()) {
    int x = st.back();
    st.pop_back();
    for (int y : m.rotation(x)) {
      if (m.is_stem(y) || y == h || y == m.partner(h)) continue;
      int w = m.vertex(m.partner(y));
      if (seen.insert(w).second) st.push_back(w);
    }
  }
  return seen;
}

int edges_inside(const ExtendedMobile& m, const std::set<int>& verts) {
  int c = 0;
  for (int v : verts)
    for (int y : m.rotation(v))
      if (!m.is_stem(y) && verts.count(m.vertex(m.partner(y))) && y < m.partner(y)) ++c;
  return c;
}

}  // namespace

bool root_splits_tree(const ExtendedMobile& m) {
  require(m.root.has_value(), ErrorKind::Precondition, "mobile has no root");
  int h0 = *m.root;
  if (m.is_stem(h0)) return true;
  auto side = component_without(m, m.vertex(m.partner(h0)), h0);
  if (side.count(m.vertex(h0))) return false;
  return edges_inside(m, side) == static_cast<int>(side.size()) - 1;
}

bool is_balanced_mobile(const ExtendedMobile& m) {
  std::vector<int> ids;
  Map f = full_edge_map(m, ids);
  const int skip = m.root ? *m.root : -1;
  for (const auto& c : simple_cycles(f, f.num_vertices())) {
    const int k = static_cast<int>(c.darts.size());
    int balance = 0;
    for (int i = 0; i < k; ++i) {
      int in = m.partner(ids[c.darts[(i + k - 1) % k]]), out = ids[c.darts[i]];
      int x = out;
      do {
        x = m.sigma(x);
        if (x != skip) --balance;
      } while (x != in);
      x = in;
      do {
        x = m.sigma(x);
        if (x != skip) ++balance;
      } while (x != out);
    }
    if (balance != 0) return false;
  }
  return true;
}

int count_mobile_cycles(const ExtendedMobile& m) {
  std::vector<int> ids;
  Map f = full_edge_map(m, ids);
  return static_cast<int>(simple_cycles(f, f.num_vertices()).size()) / 2;
}

ExtendedMobile unrooted(const ExtendedMobile& m) {
  require(m.root.has_value(), ErrorKind::Precondition, "mobile has no root");
  int h0 = *m.root;
  std::vector<int> partner = m.partners();
  std::set<int> drop_v;
  partner[h0] = -2;
  if (!m.is_stem(h0)) {
    require(root_splits_tree(m), ErrorKind::Domain, "root edge does not split off a tree");
    drop_v = component_without(m, m.vertex(m.partner(h0)), h0);
    for (int v : drop_v)
      for (int y : m.rotation(v)) partner[y] = -2;
  }
  std::vector<std::vector<int>> rot;
  for (int v = 0; v < m.num_vertices(); ++v) {
    if (drop_v.count(v)) continue;
    std::vector<int> r;
    for (int y : m.rotation(v))
      if (partner[y] != -2) r.push_back(y);
    rot.push_back(std::move(r));
  }
  return ExtendedMobile(std::move(rot), std::move(partner), std::nullopt);
}

std::vector<int> mobile_labeling(const ExtendedMobile& m, int h) {
  require(!m.root, ErrorKind::Precondition, "labeling is defined on unrooted mobiles");
  require(m.used(h), ErrorKind::Precondition, "unknown half-edge");
  for (int v = 0; v < m.num_vertices(); ++v)
    require(m.degree(v) == 4, ErrorKind::Precondition, "labeling needs degree 4 everywhere");
  std::vector<int> label(m.id_bound(), -1);
  auto fill = [&](int y, int l) {
    for (int j = 0; j < 4; ++j, y = m.sigma(y)) label[y] = (l + j) % 4;
  };
  fill(h, 0);
  std::deque<int> q{m.vertex(h)};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int y : m.rotation(v)) {
      if (m.is_stem(y)) continue;
      int p = m.partner(y), want = (label[y] + 2) % 4;
      if (label[p] == -1) {
        fill(p, want);
        q.push_back(m.vertex(p));
      } else {
        require(label[p] == want, ErrorKind::Domain, "mobile labeling is inconsistent");
      }
    }
  }
  return label;
}

Map inverse_bijection(const ExtendedMobile& m) {
  auto problem = mobile_structure_problem(m);
  require(problem.empty(), ErrorKind::Domain, problem);
  require(root_splits_tree(m), ErrorKind::Domain, "root edge neither a stem nor splitting off a tree");
  require(is_safe(m), ErrorKind::Domain, "closure wraps over the root angle");
  require(is_balanced_mobile(m), ErrorKind::Domain, "mobile is not balanced");
  ClosureResult r = complete_closure(m);
  Map g = r.g;
  const int h0 = *g.root;
  FourOrientation d;
  d.out.assign(g.num_darts(), 0);
  for (int h = 0; h < m.id_bound(); ++h)
    if (m.used(h) && h != *m.root) d.out[g.sigma_inv(r.dart_of[h])] = 1;
  require(is_four_orientation(g, d), ErrorKind::Invariant, "rebuilt orientation is not a 4-orientation");
  auto conn = diagnose_essential_4connectivity(g);
  require(conn.ok, ErrorKind::Invariant, "closure is not essentially 4-connected: " + conn.reason);
  AngleContext ctx(g);
  require(is_balanced(g, d, ctx.basis_g), ErrorKind::Invariant, "rebuilt orientation is not balanced");
  require(minimize(ctx, d, ctx.am.face_of_edge(h0)) == d, ErrorKind::Invariant, "rebuilt orientation is not minimal");
  require(maximal_quadrangle_containing(g, h0).root_incident, ErrorKind::Invariant, "rebuilt root is not admissible");
  return g;
}

}  // namespace torus4
