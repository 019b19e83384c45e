#include "torus4/transversal.hpp"

#include <algorithm>

#include "torus4/error.hpp"

namespace torus4 {

namespace {

bool local_at(const Map& g, const std::vector<int>& label, int v) {
  int changes = 0;
  for (int x : g.rotation(v)) {
    int a = label[x], b = label[g.sigma(x)];
    if (a == b) continue;
    if (b != (a + 1) % 4) return false;
    ++changes;
  }
  return changes == 4;
}

bool edges_consistent(const Map& g, const std::vector<int>& label) {
  for (int d = 0; d < g.num_darts(); ++d)
    if (label[d] < 0 || label[d] > 3 || label[g.alpha(d)] != (label[d] + 2) % 4) return false;
  return true;
}

}  // namespace

bool check_local_property(const Map& g, const TransversalStructure& ts) {
  if (static_cast<int>(ts.label.size()) != g.num_darts() || !edges_consistent(g, ts.label)) return false;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!local_at(g, ts.label, v)) return false;
  return true;
}

FourOrientation ts_to_orientation(const Map& g, const TransversalStructure& ts) {
  require(check_local_property(g, ts), ErrorKind::Domain, "transversal structure local property fails");
  FourOrientation d;
  d.out.resize(g.num_darts());
  for (int x = 0; x < g.num_darts(); ++x) d.out[x] = ts.label[x] != ts.label[g.sigma(x)];
  return d;
}

TransversalStructure rotate_labels(const TransversalStructure& ts, int k) {
  TransversalStructure r = ts;
  for (auto& l : r.label) l = ((l + k) % 4 + 4) % 4;
  return r;
}

TransversalStructure orientation_to_ts(const Map& g, const FourOrientation& d, const HomologyBasis& basis) {
  require(admits_tts_labeling(g, d, basis), ErrorKind::Domain, "gamma of a basis cycle is not 0 mod 8");
  TTSLabeling l = tts_labeling(g, d);
  TransversalStructure ts{l.label};
  if (g.root) ts = rotate_labels(ts, -ts.label[*g.root]);
  require(check_local_property(g, ts), ErrorKind::Invariant, "labeling does not give a transversal structure");
  return ts;
}

bool ts_is_balanced(const Map& g, const TransversalStructure& ts) {
  return is_balanced(g, ts_to_orientation(g, ts), homology_basis(g));
}

std::vector<TransversalStructure> base_case_structures(const Map& g) {
  require(g.num_vertices() == 1 && g.is_triangulation(), ErrorKind::Precondition,
          "base case needs the one-vertex triangulation");
  std::vector<TransversalStructure> out;
  const HomologyBasis h = homology_basis(g);
  const int ne = g.num_edges();
  int total = 1;
  for (int i = 0; i < ne; ++i) total *= 4;
  for (int code = 0; code < total; ++code) {
    TransversalStructure ts;
    ts.label.assign(g.num_darts(), 0);
    int c = code;
    for (int e = ne - 1; e >= 0; --e) {
      int d = g.edge_dart(e);
      ts.label[d] = c % 4;
      ts.label[g.alpha(d)] = (c % 4 + 2) % 4;
      c /= 4;
    }
    if (!check_local_property(g, ts)) continue;
    if (is_balanced(g, ts_to_orientation(g, ts), h)) out.push_back(ts);
  }
  return out;
}

TransversalStructure decontract(const Contraction& c, const TransversalStructure& ts_after) {
  const Map& g = c.before;
  require(static_cast<int>(ts_after.label.size()) == c.after.num_darts(), ErrorKind::Precondition,
          "structure does not match the contracted map");
  std::vector<int> label(g.num_darts(), -1);
  for (int x = 0; x < c.after.num_darts(); ++x) label[c.old_of[x]] = ts_after.label[x];
  std::vector<int> free_darts;
  for (int t : c.touched) free_darts.push_back(g.edge_dart(g.edge_of(t)));
  std::vector<int> verts;
  for (int t : free_darts) {
    verts.push_back(g.vertex(t));
    verts.push_back(g.head(t));
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  const HomologyBasis h = homology_basis(g);
  const int k = static_cast<int>(free_darts.size());
  int total = 1;
  for (int i = 0; i < k; ++i) total *= 4;
  for (int code = 0; code < total; ++code) {
    int cc = code;
    for (int i = k - 1; i >= 0; --i) {
      label[free_darts[i]] = cc % 4;
      label[g.alpha(free_darts[i])] = (cc % 4 + 2) % 4;
      cc /= 4;
    }
    bool ok = true;
    for (int v : verts)
      if (!local_at(g, label, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    TransversalStructure ts{label};
    if (!check_local_property(g, ts)) continue;
    if (is_balanced(g, ts_to_orientation(g, ts), h)) return ts;
  }
  fail(ErrorKind::Invariant, "no balanced extension across the contracted edge");
}

TransversalStructure find_balanced_ts(const Map& g) {
  require_triangulation(g);
  auto report = diagnose_essential_4connectivity(g);
  require(report.ok, ErrorKind::Domain, "not essentially 4-connected: " + report.reason);
  std::vector<Contraction> chain;
  Map cur = g;
  while (cur.num_vertices() > 1) {
    chain.push_back(contract_edge(cur, find_contractible_edge(cur)));
    cur = chain.back().after;
  }
  auto base = base_case_structures(cur);
  require(!base.empty(), ErrorKind::Invariant, "one-vertex triangulation has no balanced structure");
  TransversalStructure ts = base.front();
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) ts = decontract(*it, ts);
  if (g.root) ts = rotate_labels(ts, -ts.label[*g.root]);
  require(check_local_property(g, ts) && ts_is_balanced(g, ts), ErrorKind::Invariant,
          "constructed structure is not balanced");
  return ts;
}

}  // namespace torus4
