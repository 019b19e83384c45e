#include "torus4/io.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "torus4/error.hpp"

namespace torus4 {

namespace {

struct Line {
  int number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    std::istringstream ls(raw);
    Line l{no, {}};
    for (std::string w; ls >> w;) l.words.push_back(w);
    if (!l.words.empty()) out.push_back(std::move(l));
  }
  return out;
}

[[noreturn]] void bad(const Line& l, const std::string& msg) {
  fail(ErrorKind::Parse, "line " + std::to_string(l.number) + ": " + msg);
}

int to_int(const Line& l, const std::string& w) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(w, &used);
  } catch (const std::exception&) {
    bad(l, "expected an integer, got '" + w + "'");
  }
  if (used != w.size()) bad(l, "expected an integer, got '" + w + "'");
  return v;
}

// Common reader for maps and mobiles.
struct Raw {
  std::vector<std::vector<int>> rot;
  std::vector<std::string> names;
  std::vector<int> partner;  // -1 until paired or declared a stem
  std::vector<char> stem;
  std::optional<int> root;
};

Raw read_raw(const std::string& text, bool allow_stems) {
  auto lines = tokenize(text);
  if (lines.empty()) fail(ErrorKind::Parse, "empty input");
  if (lines[0].words != std::vector<std::string>{"tmap", "1"}) bad(lines[0], "expected header 'tmap 1'");
  Raw r;
  std::unordered_map<std::string, int> id;
  auto dart = [&](const Line& l, const std::string& w) {
    auto it = id.find(w);
    if (it == id.end()) bad(l, "unknown dart '" + w + "'");
    return it->second;
  };
  for (size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const auto& w = l.words;
    const std::string& kw = w[0];
    if (kw == "vertex") {
      if (w.size() < 3 || w[2] != ":") bad(l, "expected 'vertex <id> : <darts>'");
      if (to_int(l, w[1]) != static_cast<int>(r.rot.size()))
        bad(l, "vertex ids must be 0, 1, 2, ... in order");
      if (w.size() == 3) bad(l, "vertex without darts");
      std::vector<int> rot;
      for (size_t j = 3; j < w.size(); ++j) {
        if (id.count(w[j])) bad(l, "dart '" + w[j] + "' appears in two rotations");
        int d = static_cast<int>(r.names.size());
        id[w[j]] = d;
        r.names.push_back(w[j]);
        r.partner.push_back(-1);
        r.stem.push_back(0);
        rot.push_back(d);
      }
      r.rot.push_back(std::move(rot));
    } else if (kw == "edge") {
      if (w.size() != 3) bad(l, "expected 'edge <dart> <dart>'");
      int a = dart(l, w[1]), b = dart(l, w[2]);
      if (a == b) bad(l, "edge pairs a dart with itself");
      if (r.partner[a] != -1 || r.partner[b] != -1 || r.stem[a] || r.stem[b]) bad(l, "dart already paired");
      r.partner[a] = b;
      r.partner[b] = a;
    } else if (kw == "stem") {
      if (!allow_stems) bad(l, "stem lines only occur in mobiles");
      if (w.size() != 2) bad(l, "expected 'stem <dart>'");
      int a = dart(l, w[1]);
      if (r.partner[a] != -1 || r.stem[a]) bad(l, "dart already paired");
      r.stem[a] = 1;
    } else if (kw == "root") {
      if (w.size() != 2) bad(l, "expected 'root <dart>'");
      if (r.root) bad(l, "second root line");
      r.root = dart(l, w[1]);
    } else if (kw == "ts" || kw == "orient" || kw == "label") {
      continue;
    } else {
      bad(l, "unknown keyword '" + kw + "'");
    }
  }
  if (r.rot.empty()) fail(ErrorKind::Parse, "no vertices");
  for (size_t d = 0; d < r.partner.size(); ++d)
    if (r.partner[d] == -1 && !r.stem[d]) fail(ErrorKind::Parse, "dart '" + r.names[d] + "' is in no edge line");
  return r;
}

}  // namespace

Map parse_tmap(const std::string& text) {
  Raw r = read_raw(text, false);
  Map m(r.rot, r.partner);
  m.dart_names = r.names;
  m.root = r.root;
  require_torus(m);
  return m;
}

Map normalized(const Map& in) {
  std::vector<int> id(in.num_darts());
  int next = 0;
  for (const auto& r : in.rotations())
    for (int d : r) id[d] = next++;
  std::vector<std::vector<int>> rot;
  for (const auto& r : in.rotations()) {
    rot.emplace_back();
    for (int d : r) rot.back().push_back(id[d]);
  }
  std::vector<int> alpha(in.num_darts());
  for (int d = 0; d < in.num_darts(); ++d) alpha[id[d]] = id[in.alpha(d)];
  Map out(std::move(rot), std::move(alpha));
  if (in.root) out.root = id[*in.root];
  return out;
}

std::string write_tmap(const Map& in) {
  const Map m = normalized(in);
  std::ostringstream o;
  o << "tmap 1\n";
  for (int v = 0; v < m.num_vertices(); ++v) {
    o << "vertex " << v << " :";
    for (int d : m.rotation(v)) o << ' ' << d;
    o << '\n';
  }
  for (int e = 0; e < m.num_edges(); ++e) o << "edge " << m.edge_dart(e) << ' ' << m.alpha(m.edge_dart(e)) << '\n';
  if (m.root) o << "root " << *m.root << '\n';
  return o.str();
}

namespace {

int named_dart(const Map& m, const Line& l, const std::string& w) {
  if (!m.dart_names.empty()) {
    for (int d = 0; d < m.num_darts(); ++d)
      if (m.dart_names[d] == w) return d;
    bad(l, "unknown dart '" + w + "'");
  }
  int d = to_int(l, w);
  if (d < 0 || d >= m.num_darts()) bad(l, "dart out of range");
  return d;
}

}  // namespace

std::optional<TransversalStructure> parse_ts(const Map& m, const std::string& text) {
  TransversalStructure ts;
  ts.label.assign(m.num_darts(), -1);
  bool any = false;
  for (const Line& l : tokenize(text)) {
    if (l.words[0] != "ts") continue;
    any = true;
    if (l.words.size() != 4) bad(l, "expected 'ts <edge> <blue|red> <out-dart>'");
    int e = to_int(l, l.words[1]);
    if (e < 0 || e >= m.num_edges()) bad(l, "edge out of range");
    int color;
    if (l.words[2] == "blue") color = 0;
    else if (l.words[2] == "red") color = 1;
    else bad(l, "color must be blue or red");
    int d = named_dart(m, l, l.words[3]);
    if (m.edge_of(d) != e) bad(l, "dart is not on that edge");
    if (ts.label[d] != -1) bad(l, "edge listed twice");
    ts.label[d] = color;
    ts.label[m.alpha(d)] = color + 2;
  }
  if (!any) return std::nullopt;
  for (int d = 0; d < m.num_darts(); ++d)
    if (ts.label[d] == -1) fail(ErrorKind::Parse, "edge " + std::to_string(m.edge_of(d)) + " has no ts line");
  if (!check_local_property(m, ts)) fail(ErrorKind::Domain, "ts lines violate the local property");
  return ts;
}

std::string write_ts(const Map& m, const TransversalStructure& ts) {
  std::ostringstream o;
  for (int e = 0; e < m.num_edges(); ++e) {
    int d = m.edge_dart(e);
    if (!ts.is_outgoing(d)) d = m.alpha(d);
    o << "ts " << e << ' ' << (ts.is_blue(d) ? "blue" : "red") << ' ' << d << '\n';
  }
  return o.str();
}

std::optional<FourOrientation> parse_orient(const Map& m, const std::string& text) {
  FourOrientation d;
  d.out.assign(m.num_darts(), 0);
  std::vector<char> seen(m.num_darts(), 0);
  bool any = false;
  for (const Line& l : tokenize(text)) {
    if (l.words[0] != "orient") continue;
    any = true;
    if (l.words.size() != 3) bad(l, "expected 'orient <angle-edge> <head-vertex>'");
    int x = to_int(l, l.words[1]), h = to_int(l, l.words[2]);
    if (x < 0 || x >= m.num_darts()) bad(l, "angle edge out of range");
    if (seen[x]) bad(l, "angle edge listed twice");
    seen[x] = 1;
    int primal = m.vertex(x), dual = m.num_vertices() + m.face_of(x);
    if (h == dual) d.out[x] = 1;
    else if (h != primal) bad(l, "head is not an end of the angle edge");
  }
  if (!any) return std::nullopt;
  for (int x = 0; x < m.num_darts(); ++x)
    if (!seen[x]) fail(ErrorKind::Parse, "angle edge " + std::to_string(x) + " has no orient line");
  if (!is_four_orientation(m, d)) fail(ErrorKind::Domain, "orient lines do not form a 4-orientation");
  return d;
}

std::string write_orient(const Map& m, const FourOrientation& d) {
  std::ostringstream o;
  for (int x = 0; x < m.num_darts(); ++x) o << "orient " << x << ' ' << orientation_head(m, d, x) << '\n';
  return o.str();
}

std::string write_labels(const TTSLabeling& l) {
  std::ostringstream o;
  for (size_t d = 0; d < l.label.size(); ++d) o << "label " << d << ' ' << l.label[d] << '\n';
  return o.str();
}

ExtendedMobile parse_mobile(const std::string& text) {
  Raw r = read_raw(text, true);
  std::vector<int> partner(r.partner.size());
  for (size_t d = 0; d < partner.size(); ++d) partner[d] = r.stem[d] ? -1 : r.partner[d];
  return ExtendedMobile(r.rot, partner, r.root);
}

std::string write_mobile(const ExtendedMobile& m) {
  // renumber used ids densely, in rotation order
  std::vector<int> id(m.id_bound(), -1);
  int next = 0;
  for (const auto& rot : m.rotations())
    for (int h : rot) id[h] = next++;
  std::ostringstream o;
  o << "tmap 1\n";
  for (int v = 0; v < m.num_vertices(); ++v) {
    o << "vertex " << v << " :";
    for (int h : m.rotation(v)) o << ' ' << id[h];
    o << '\n';
  }
  std::vector<std::pair<int, int>> edges;
  std::vector<int> stems;
  for (int h = 0; h < m.id_bound(); ++h) {
    if (!m.used(h)) continue;
    if (m.is_stem(h)) stems.push_back(id[h]);
    else if (id[h] < id[m.partner(h)]) edges.emplace_back(id[h], id[m.partner(h)]);
  }
  std::sort(edges.begin(), edges.end());
  std::sort(stems.begin(), stems.end());
  for (auto [a, b] : edges) o << "edge " << a << ' ' << b << '\n';
  for (int s : stems) o << "stem " << s << '\n';
  if (m.root) o << "root " << id[*m.root] << '\n';
  return o.str();
}

}  // namespace torus4
