#include "torus4/angle.hpp"

#include <algorithm>
#include <deque>

#include "torus4/error.hpp"

namespace torus4 {

AngleMap build_angle_map(const Map& g) {
  require_triangulation(g);
  AngleMap am;
  am.g = g;
  am.num_primal = g.num_vertices();
  std::vector<std::vector<int>> rot;
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<int> r;
    for (int d : g.rotation(v)) r.push_back(2 * d);
    rot.push_back(std::move(r));
  }
  for (const auto& f : g.faces()) {
    std::vector<int> r;
    for (auto it = f.rbegin(); it != f.rend(); ++it) r.push_back(2 * *it + 1);
    rot.push_back(std::move(r));
  }
  std::vector<int> alpha(2 * g.num_darts());
  for (int x = 0; x < g.num_darts(); ++x) {
    alpha[2 * x] = 2 * x + 1;
    alpha[2 * x + 1] = 2 * x;
  }
  am.a = Map(std::move(rot), std::move(alpha));
  return am;
}

bool is_four_orientation(const Map& g, const FourOrientation& d) {
  if (static_cast<int>(d.out.size()) != g.num_darts()) return false;
  for (int v = 0; v < g.num_vertices(); ++v) {
    int c = 0;
    for (int x : g.rotation(v)) c += d.out[x] ? 1 : 0;
    if (c != 4) return false;
  }
  for (const auto& f : g.faces()) {
    int c = 0;
    for (int x : f) c += d.out[x] ? 0 : 1;
    if (c != 1) return false;
  }
  return true;
}

void require_four_orientation(const Map& g, const FourOrientation& d) {
  require(is_four_orientation(g, d), ErrorKind::Domain, "not a 4-orientation of the angle map");
}

int orientation_head(const Map& g, const FourOrientation& d, int x) {
  return d.out[x] ? g.num_vertices() + g.face_of(x) : g.vertex(x);
}

void for_each_four_orientation(const Map& g, const std::function<void(const FourOrientation&)>& f) {
  require_triangulation(g);
  const int nf = g.num_faces();
  std::vector<int> need(g.num_vertices()), cap(g.num_vertices(), 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    need[v] = g.degree(v) - 4;
    if (need[v] < 0) return;
  }
  for (const auto& fc : g.faces())
    for (int x : fc) ++cap[g.vertex(x)];
  FourOrientation cur;
  cur.out.assign(g.num_darts(), 1);
  // cap[v]: angles at v in faces not yet decided
  std::function<void(int)> rec = [&](int fi) {
    if (fi == nf) {
      for (int v = 0; v < g.num_vertices(); ++v)
        if (need[v] != 0) return;
      f(cur);
      return;
    }
    const auto& fc = g.face(fi);
    for (int x : fc) --cap[g.vertex(x)];
    for (int x : fc) {
      int v = g.vertex(x);
      if (need[v] == 0) continue;
      --need[v];
      bool ok = true;
      for (int y : fc)
        if (need[g.vertex(y)] > cap[g.vertex(y)]) ok = false;
      if (ok) {
        cur.out[x] = 0;
        rec(fi + 1);
        cur.out[x] = 1;
      }
      ++need[v];
    }
    for (int x : fc) ++cap[g.vertex(x)];
  };
  rec(0);
}

std::vector<FourOrientation> all_four_orientations(const Map& g) {
  std::vector<FourOrientation> out;
  for_each_four_orientation(g, [&](const FourOrientation& d) { out.push_back(d); });
  return out;
}

int gamma(const Map& g, const FourOrientation& d, const CycleWalk& c) {
  require(is_closed_walk(g, c.darts), ErrorKind::Precondition, "walk is not closed");
  require(make_walk(g, c.darts).is_simple, ErrorKind::Precondition, "gamma needs a cycle without repeated vertices");
  const int k = static_cast<int>(c.darts.size());
  int right = 0, left = 0;
  for (int i = 0; i < k; ++i) {
    int din = g.alpha(c.darts[(i + k - 1) % k]), dout = c.darts[i];
    for (int x = dout; x != din; x = g.sigma(x)) left += d.out[x];
    for (int x = din; x != dout; x = g.sigma(x)) right += d.out[x];
  }
  return right - left;
}

bool is_balanced(const Map& g, const FourOrientation& d, const HomologyBasis& basis) {
  require_four_orientation(g, d);
  return gamma(g, d, basis.b1) == 0 && gamma(g, d, basis.b2) == 0;
}

bool admits_tts_labeling(const Map& g, const FourOrientation& d, const HomologyBasis& basis) {
  require_four_orientation(g, d);
  return gamma(g, d, basis.b1) % 8 == 0 && gamma(g, d, basis.b2) % 8 == 0;
}

int cell_after(const Map& g, int h, CellStep s) {
  switch (s) {
    case CellStep::Sigma:
      return g.sigma(h);
    case CellStep::SigmaInv:
      return g.sigma_inv(h);
    default:
      return g.alpha(h);
  }
}

int step_delta(const Map& g, const FourOrientation& d, int h, CellStep s) {
  switch (s) {
    case CellStep::Sigma:
      return d.out[h];
    case CellStep::SigmaInv:
      return -d.out[g.sigma_inv(h)];
    case CellStep::AcrossLeft:
      return -2;
    case CellStep::AcrossRight:
      return 2;
  }
  return 0;
}

int delta(const Map& g, const FourOrientation& d, const CellWalk& w) {
  int h = w.start, total = 0;
  for (auto s : w.steps) {
    total += step_delta(g, d, h, s);
    h = cell_after(g, h, s);
  }
  require(h == w.start, ErrorKind::Precondition, "completion dual walk is not closed");
  return total;
}

std::vector<CompletionFace> completion_faces(const Map& g) {
  std::vector<CompletionFace> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    CellWalk w{g.rotation(v)[0], std::vector<CellStep>(g.degree(v), CellStep::Sigma)};
    out.push_back({CompletionVertex::Primal, v, w});
  }
  for (int f = 0; f < g.num_faces(); ++f) {
    CellWalk w{g.face(f)[0], {}};
    for (size_t i = 0; i < g.face(f).size(); ++i) {
      w.steps.push_back(CellStep::AcrossLeft);
      w.steps.push_back(CellStep::SigmaInv);
    }
    out.push_back({CompletionVertex::Dual, f, w});
  }
  for (int e = 0; e < g.num_edges(); ++e)
    out.push_back({CompletionVertex::Edge, e, CellWalk{g.edge_dart(e), {CellStep::AcrossRight, CellStep::AcrossRight}}});
  return out;
}

namespace {

CellWalk side_walk(const Map& g, const CycleWalk& c, bool left) {
  require(is_closed_walk(g, c.darts), ErrorKind::Precondition, "walk is not closed");
  const int k = static_cast<int>(c.darts.size());
  CellWalk w;
  w.start = g.alpha(c.darts[k - 1]);
  int h = w.start;
  for (int i = 0; i < k; ++i) {
    while (h != c.darts[i]) {
      w.steps.push_back(left ? CellStep::SigmaInv : CellStep::Sigma);
      h = left ? g.sigma_inv(h) : g.sigma(h);
    }
    w.steps.push_back(left ? CellStep::AcrossLeft : CellStep::AcrossRight);
    h = g.alpha(h);
  }
  return w;
}

}  // namespace

CellWalk left_walk(const Map& g, const CycleWalk& c) { return side_walk(g, c, true); }
CellWalk right_walk(const Map& g, const CycleWalk& c) { return side_walk(g, c, false); }

GammaDelta gamma_delta_consistency(const Map& g, const FourOrientation& d, const CycleWalk& c) {
  GammaDelta r{gamma(g, d, c), delta(g, d, left_walk(g, c)), delta(g, d, right_walk(g, c))};
  const int k = static_cast<int>(c.darts.size());
  require(r.gamma == r.delta_left + r.delta_right, ErrorKind::Invariant, "gamma differs from dL + dR");
  require(2 * r.delta_left == r.gamma - 8 * k, ErrorKind::Invariant, "dL differs from gamma/2 - 4k");
  return r;
}

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

}  // namespace

bool is_tts_labeling(const Map& g, const TTSLabeling& l) {
  if (static_cast<int>(l.label.size()) != g.num_darts()) return false;
  for (int d = 0; d < g.num_darts(); ++d) {
    if (l.label[d] < 0 || l.label[d] > 3) return false;
    if (l.label[g.alpha(d)] != mod4(l.label[d] + 2)) return false;
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    int changes = 0;
    for (int x : g.rotation(v)) {
      int a = l.label[x], b = l.label[g.sigma(x)];
      if (a == b) continue;
      if (b != mod4(a + 1)) return false;
      ++changes;
    }
    if (changes != 4) return false;
  }
  return true;
}

TTSLabeling tts_labeling(const Map& g, const FourOrientation& d, int seed_cell) {
  require_four_orientation(g, d);
  require(seed_cell >= 0 && seed_cell < g.num_darts(), ErrorKind::Precondition, "seed cell out of range");
  TTSLabeling l;
  l.label.assign(g.num_darts(), -1);
  l.label[seed_cell] = 0;
  std::deque<int> q{seed_cell};
  while (!q.empty()) {
    int h = q.front();
    q.pop_front();
    for (auto s : {CellStep::Sigma, CellStep::SigmaInv, CellStep::AcrossRight, CellStep::AcrossLeft}) {
      int nb = cell_after(g, h, s);
      int want = mod4(l.label[h] + step_delta(g, d, h, s));
      if (l.label[nb] == -1) {
        l.label[nb] = want;
        q.push_back(nb);
      } else if (l.label[nb] != want) {
        fail(ErrorKind::Domain, "orientation admits no mod-4 labeling (gamma not 0 mod 8)");
      }
    }
  }
  return l;
}

std::vector<CycleWalk> simple_cycles(const Map& g, int max_len) {
  std::vector<CycleWalk> out;
  std::vector<char> on(g.num_vertices(), 0);
  std::vector<int> path;
  for (int s = 0; s < g.num_vertices(); ++s) {
    std::function<void(int)> rec = [&](int v) {
      for (int d : g.rotation(v)) {
        int w = g.head(d);
        if (path.size() == 1 && g.alpha(path[0]) == d) continue;
        if (w == s) {
          path.push_back(d);
          out.push_back(make_walk(g, path));
          path.pop_back();
          continue;
        }
        if (w < s || on[w] || static_cast<int>(path.size()) + 1 >= max_len) continue;
        on[w] = 1;
        path.push_back(d);
        rec(w);
        path.pop_back();
        on[w] = 0;
      }
    };
    on[s] = 1;
    rec(s);
    on[s] = 0;
  }
  return out;
}

}  // namespace torus4
