#include "torus4/census.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "torus4/connectivity.hpp"
#include "torus4/error.hpp"

namespace torus4 {

int CensusResult::rooted_classes() const {
  int s = 0;
  for (int r : roots_per_graph) s += r;
  return s;
}

namespace {

struct Partial {
  long systems = 0, torus = 0, e4c = 0;
  std::map<std::vector<int>, Map> found;
};

// All perfect matchings of darts [0, 2m) whose first pair is (0, first).
void matchings(std::vector<int>& alpha, const std::function<void()>& emit) {
  int i = static_cast<int>(std::find(alpha.begin(), alpha.end(), -1) - alpha.begin());
  if (i == static_cast<int>(alpha.size())) {
    emit();
    return;
  }
  for (int j = i + 1; j < static_cast<int>(alpha.size()); ++j) {
    if (alpha[j] != -1) continue;
    alpha[i] = j;
    alpha[j] = i;
    matchings(alpha, emit);
    alpha[i] = alpha[j] = -1;
  }
}

void examine(const std::vector<std::vector<int>>& rot, const std::vector<int>& alpha, Partial& p) {
  ++p.systems;
  Map m(rot, alpha);
  if (!m.is_connected() || m.euler_characteristic() != 0 || !m.is_triangulation()) return;
  ++p.torus;
  if (!is_essentially_4connected(m)) return;
  ++p.e4c;
  auto code = canonical_code(m);
  p.found.emplace(std::move(code), std::move(m));
}

}  // namespace

CensusResult census(int n, int jobs) {
  require(n == 1 || n == 2, ErrorKind::Precondition, "census supports n = 1 or 2");
  require(jobs >= 1, ErrorKind::Precondition, "jobs must be positive");
  const int darts = 6 * n;

  std::vector<std::vector<std::vector<int>>> systems;
  if (n == 1) {
    std::vector<int> r(darts);
    for (int i = 0; i < darts; ++i) r[i] = i;
    systems.push_back({r});
  } else {
    for (int d1 = 1; d1 < darts; ++d1) {
      std::vector<int> a, b;
      for (int i = 0; i < darts; ++i) (i < d1 ? a : b).push_back(i);
      systems.push_back({a, b});
    }
  }

  // one task per (system, partner of dart 0)
  std::vector<std::pair<int, int>> tasks;
  for (int s = 0; s < static_cast<int>(systems.size()); ++s)
    for (int j = 1; j < darts; ++j) tasks.emplace_back(s, j);

  std::vector<Partial> parts(jobs);
  auto worker = [&](int w) {
    for (size_t t = w; t < tasks.size(); t += jobs) {
      auto [s, j] = tasks[t];
      std::vector<int> alpha(darts, -1);
      alpha[0] = j;
      alpha[j] = 0;
      matchings(alpha, [&] { examine(systems[s], alpha, parts[w]); });
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }

  CensusResult r;
  r.n = n;
  std::map<std::vector<int>, Map> found;
  for (auto& p : parts) {
    r.rotation_systems += p.systems;
    r.torus_triangulations += p.torus;
    r.essentially_4connected += p.e4c;
    for (auto& [code, m] : p.found) found.emplace(code, m);
  }
  for (auto& [code, m] : found) {
    std::set<std::vector<int>> rooted;
    for (int d = 0; d < m.num_darts(); ++d) rooted.insert(rooted_code(m, d));
    r.graphs.push_back(m);
    r.roots_per_graph.push_back(static_cast<int>(rooted.size()));
  }
  return r;
}

}  // namespace torus4
