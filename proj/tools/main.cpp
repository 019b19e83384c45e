#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "torus4/angle.hpp"
#include "torus4/census.hpp"
#include "torus4/codec.hpp"
#include "torus4/connectivity.hpp"
#include "torus4/enumeration.hpp"
#include "torus4/error.hpp"
#include "torus4/io.hpp"
#include "torus4/lattice.hpp"
#include "torus4/mobile.hpp"
#include "torus4/transversal.hpp"

using namespace torus4;
using json = nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::string format = "text";
  uint64_t seed = 0;
  bool seeded = false;
  int jobs = 1;
  int k = 3;
  bool minimize = false;
  std::string root;
  int n = 6;
  int max_n = 4;
};

std::string read_input(const std::string& path) {
  std::ostringstream s;
  if (path == "-") {
    s << std::cin.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(ErrorKind::Parse, "cannot open " + path);
    s << f.rdbuf();
  }
  return s.str();
}

// Output is assembled in memory and written once, so failures leave nothing behind.
void write_output(const Options& o, const std::string& text) {
  if (o.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) fail(ErrorKind::Parse, "cannot write " + o.output);
  f << text;
}

bool json_out(const Options& o) { return o.format == "json"; }

std::string wrap(const Options& o, const std::string& kind, const std::string& text) {
  if (!json_out(o)) return text;
  return json{{"format", kind}, {"content", text}}.dump(2) + "\n";
}

// Resolves --root (a dart name from the file, or an id) or the file's root line.
int resolve_root(const Options& o, const Map& g) {
  if (!o.root.empty()) {
    for (int d = 0; d < static_cast<int>(g.dart_names.size()); ++d)
      if (g.dart_names[d] == o.root) return d;
    try {
      size_t used = 0;
      int d = std::stoi(o.root, &used);
      if (used == o.root.size() && d >= 0 && d < g.num_darts() && g.dart_names.empty()) return d;
    } catch (const std::exception&) {
    }
    throw UsageError("unknown root dart '" + o.root + "'");
  }
  if (g.root) return *g.root;
  throw UsageError("a root is required: pass --root or add a root line");
}

Map with_root(Map g, int h0) {
  g.root = h0;
  return g;
}

// The orientation given in the file (orient or ts lines), or a balanced one.
FourOrientation orientation_from(const Map& g, const std::string& text) {
  if (auto d = parse_orient(g, text)) return *d;
  if (auto ts = parse_ts(g, text)) return ts_to_orientation(g, *ts);
  require(is_essentially_4connected(g), ErrorKind::Domain, "map is not essentially 4-connected");
  return ts_to_orientation(g, find_balanced_ts(g));
}

int cmd_check(const Options& o) {
  Map g = parse_tmap(read_input(o.input));
  bool tri = g.is_triangulation();
  ConnectivityReport rep;
  if (tri) rep = diagnose_essential_4connectivity(g, o.k);
  else rep.reason = "not a triangulation";
  std::string out;
  if (json_out(o)) {
    out = json{{"vertices", g.num_vertices()},
               {"edges", g.num_edges()},
               {"faces", g.num_faces()},
               {"triangulation", tri},
               {"essentially_4connected", rep.ok},
               {"reason", rep.reason}}
              .dump(2) +
          "\n";
  } else {
    std::ostringstream s;
    s << "vertices " << g.num_vertices() << "\nedges " << g.num_edges() << "\nfaces " << g.num_faces()
      << "\ntriangulation " << (tri ? "yes" : "no") << "\n";
    if (rep.ok) s << "essentially 4-connected: yes\n";
    else s << "essentially 4-connected: no (" << rep.reason << ")\n";
    out = s.str();
  }
  write_output(o, out);
  return rep.ok ? 0 : 1;
}

int cmd_ts(const Options& o) {
  Map g = parse_tmap(read_input(o.input));
  require_triangulation(g);
  require(is_essentially_4connected(g, o.k), ErrorKind::Domain, "map is not essentially 4-connected");
  auto ts = find_balanced_ts(g);
  write_output(o, wrap(o, "tmap+ts", write_tmap(g) + write_ts(g, ts)));
  return 0;
}

int cmd_orient(const Options& o) {
  std::string text = read_input(o.input);
  Map g = parse_tmap(text);
  require_triangulation(g);
  FourOrientation d = orientation_from(g, text);
  std::optional<int> h0;
  if (o.minimize || !o.root.empty() || g.root) h0 = resolve_root(o, g);
  if (o.minimize) {
    AngleContext ctx(g);
    require(is_balanced(g, d, ctx.basis_g), ErrorKind::Domain, "orientation is not balanced");
    d = minimize(ctx, d, ctx.am.face_of_edge(*h0), o.seeded ? std::optional<uint64_t>(o.seed) : std::nullopt);
  }
  Map out = h0 ? with_root(g, *h0) : g;
  write_output(o, wrap(o, "tmap+orient", write_tmap(out) + write_orient(g, d)));
  return 0;
}

int cmd_lattice(const Options& o) {
  std::string text = read_input(o.input);
  Map g = parse_tmap(text);
  require_triangulation(g);
  if (g.num_vertices() > o.max_n)
    fail(ErrorKind::Domain, "lattice enumeration is limited to " + std::to_string(o.max_n) + " vertices");
  int h0 = (!o.root.empty() || g.root) ? resolve_root(o, g) : 0;
  AngleContext ctx(g);
  auto states = enumerate_balanced(ctx);
  require(!states.empty(), ErrorKind::Domain, "no balanced 4-orientation");
  auto h = hasse_diagram(ctx, states, ctx.am.face_of_edge(h0));
  auto rep = check_lattice(h);
  std::ostringstream s;
  if (json_out(o)) {
    json nodes = json::array(), edges = json::array();
    for (size_t i = 0; i < h.states.size(); ++i) {
      std::ostringstream dg;
      dg << std::hex << std::setw(16) << std::setfill('0') << orientation_digest(h.states[i]);
      nodes.push_back({{"id", i}, {"digest", dg.str()}});
      for (int j : h.up[i]) edges.push_back({i, j});
    }
    s << json{{"nodes", nodes}, {"edges", edges}, {"min", rep.min}, {"max", rep.max}, {"distributive", rep.distributive}}
             .dump(2)
      << "\n";
  } else {
    for (size_t i = 0; i < h.states.size(); ++i)
      s << "node " << i << ' ' << std::hex << std::setw(16) << std::setfill('0') << orientation_digest(h.states[i])
        << std::dec << '\n';
    for (size_t i = 0; i < h.states.size(); ++i)
      for (int j : h.up[i]) s << "edge " << i << ' ' << j << '\n';
    s << "min " << rep.min << "\nmax " << rep.max << "\ndistributive " << (rep.distributive ? "yes" : "no") << '\n';
  }
  write_output(o, s.str());
  return rep.unique_min && rep.unique_max && rep.distributive ? 0 : 1;
}

int cmd_mobile(const Options& o) {
  std::string text = read_input(o.input);
  Map g = parse_tmap(text);
  require_triangulation(g);
  int h0 = resolve_root(o, g);
  require(admissible_root(g, h0), ErrorKind::Domain, "root is not admissible");
  ExtendedMobile m;
  if (auto d = parse_orient(g, text)) m = extract_mobile(g, *d, h0);
  else m = mobile_of(g, h0);
  write_output(o, wrap(o, "mobile", write_mobile(m)));
  return 0;
}

int cmd_rebuild(const Options& o) {
  ExtendedMobile m = parse_mobile(read_input(o.input));
  Map g = inverse_bijection(m);
  write_output(o, wrap(o, "tmap", write_tmap(relabel_from(g, *g.root))));
  return 0;
}

int cmd_encode(const Options& o) {
  Map g = parse_tmap(read_input(o.input));
  require_triangulation(g);
  int h0 = resolve_root(o, g);
  require(admissible_root(g, h0), ErrorKind::Domain, "root is not admissible");
  CodeWord c = encode(g, h0);
  std::string out = to_hex_file(c);
  if (json_out(o)) out = json{{"bits", c.bits()}, {"length", c.bits().size()}, {"hex", out.substr(0, out.size() - 1)}}.dump(2) + "\n";
  write_output(o, out);
  return 0;
}

int cmd_decode(const Options& o) {
  CodeWord c = from_hex_file(read_input(o.input));
  Map g = decode(c);
  write_output(o, wrap(o, "tmap", write_tmap(relabel_from(g, *g.root))));
  return 0;
}

int cmd_count(const Options& o) {
  if (o.n < 0) throw UsageError("--n must be non-negative");
  auto rows = count_table(o.n);
  std::ostringstream s;
  if (json_out(o)) {
    json cols = json::object();
    auto col = [&](const char* name, auto get) {
      json a = json::array();
      for (const auto& r : rows) a.push_back(get(r).str());
      cols[name] = a;
    };
    col("A", [](const CountRow& r) { return r.ternary; });
    col("Tp", [](const CountRow& r) { return r.planar; });
    col("Ss", [](const CountRow& r) { return r.square; });
    col("Sh", [](const CountRow& r) { return r.hexagon; });
    col("S", [](const CountRow& r) { return r.skeleton; });
    col("Tt", [](const CountRow& r) { return r.toroidal; });
    col("Th", [](const CountRow& r) { return r.total; });
    s << json{{"n", o.n}, {"columns", cols}}.dump(2) << "\n";
  } else {
    s << "n\tA\tTp\tSs\tSh\tS\tTt\tTh\n";
    for (const auto& r : rows)
      s << r.n << '\t' << r.ternary << '\t' << r.planar << '\t' << r.square << '\t' << r.hexagon << '\t' << r.skeleton
        << '\t' << r.toroidal << '\t' << r.total << '\n';
  }
  write_output(o, s.str());
  return 0;
}

int cmd_census(const Options& o) {
  if (o.n != 1 && o.n != 2) throw UsageError("census supports --n 1 or --n 2");
  if (o.jobs < 1) throw UsageError("--jobs must be positive");
  auto r = census(o.n, o.jobs);
  std::ostringstream s;
  if (json_out(o)) {
    json graphs = json::array();
    for (size_t i = 0; i < r.graphs.size(); ++i) {
      json deg = json::array();
      for (int v = 0; v < r.graphs[i].num_vertices(); ++v) deg.push_back(r.graphs[i].degree(v));
      graphs.push_back({{"degrees", deg}, {"rooted", r.roots_per_graph[i]}});
    }
    s << json{{"n", r.n},
              {"rotation_systems", r.rotation_systems},
              {"torus_triangulations", r.torus_triangulations},
              {"essentially_4connected", r.essentially_4connected},
              {"graphs", graphs},
              {"rooted", r.rooted_classes()}}
             .dump(2)
      << "\n";
  } else {
    s << "rotation systems " << r.rotation_systems << "\ntoroidal triangulations " << r.torus_triangulations
      << "\nessentially 4-connected " << r.essentially_4connected << "\ngraphs " << r.graphs.size() << "\n";
    for (size_t i = 0; i < r.graphs.size(); ++i) {
      s << "graph " << i << " degrees";
      for (int v = 0; v < r.graphs[i].num_vertices(); ++v) s << ' ' << r.graphs[i].degree(v);
      s << " rooted " << r.roots_per_graph[i] << "\n";
    }
    s << "rooted " << r.rooted_classes() << "\n";
  }
  write_output(o, s.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transversal structures on toroidal triangulations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-o,--output", o.output, "output file, - for stdout");

  auto input = [&](CLI::App* c) { c->add_option("input", o.input, "input file, - for stdin"); };
  auto rooted = [&](CLI::App* c) { c->add_option("--root", o.root, "root dart"); };

  auto* check = app.add_subcommand("check", "essential 4-connectivity verdict");
  input(check);
  check->add_option("--k", o.k, "cover patch radius")->check(CLI::PositiveNumber);
  auto* ts = app.add_subcommand("ts", "balanced transversal structure");
  input(ts);
  ts->add_option("--k", o.k, "cover patch radius")->check(CLI::PositiveNumber);
  auto* orient = app.add_subcommand("orient", "4-orientation of the angle map");
  input(orient);
  rooted(orient);
  orient->add_flag("--minimize", o.minimize, "descend to the minimal balanced orientation");
  orient->add_option("--seed", o.seed, "random flip order")->each([&](const std::string&) { o.seeded = true; });
  auto* lattice = app.add_subcommand("lattice", "Hasse diagram of balanced orientations");
  input(lattice);
  rooted(lattice);
  lattice->add_option("--max-n", o.max_n, "vertex limit for enumeration");
  auto* mobile = app.add_subcommand("mobile", "mobile of the rooted map");
  input(mobile);
  rooted(mobile);
  auto* rebuild = app.add_subcommand("rebuild", "map from a mobile");
  input(rebuild);
  auto* enc = app.add_subcommand("encode", "code word of the rooted map");
  input(enc);
  rooted(enc);
  auto* dec = app.add_subcommand("decode", "map from a code word file");
  input(dec);
  auto* count = app.add_subcommand("count", "counting sequences");
  count->add_option("--n", o.n, "largest size")->required();
  auto* cen = app.add_subcommand("census", "exhaustive census for n <= 2");
  cen->add_option("--n", o.n, "number of vertices")->required();
  cen->add_option("--jobs", o.jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(o);
    if (*ts) return cmd_ts(o);
    if (*orient) return cmd_orient(o);
    if (*lattice) return cmd_lattice(o);
    if (*mobile) return cmd_mobile(o);
    if (*rebuild) return cmd_rebuild(o);
    if (*enc) return cmd_encode(o);
    if (*dec) return cmd_decode(o);
    if (*count) return cmd_count(o);
    if (*cen) return cmd_census(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    static const char* kinds[] = {"parse", "domain", "precondition", "invariant"};
    std::cerr << "error (" << kinds[static_cast<int>(e.kind())] << "): " << e.what() << "\n";
    return 1;
  }
  return 2;
}
