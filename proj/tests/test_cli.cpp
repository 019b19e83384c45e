#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "torus4/codec.hpp"
#include "torus4/io.hpp"

using namespace torus4;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

std::string cli() {
  const char* p = std::getenv("TORUS4_CLI");
  REQUIRE(p != nullptr);
  return p;
}

Run run(const std::string& args) {
  std::string cmd = cli() + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  int status = pclose(f);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("torus4-cli-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    auto p = path / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

std::string canonical(Map m, int root) {
  m.root = root;
  return write_tmap(relabel_from(m, root));
}

}  // namespace

TEST_CASE("count reproduces the sequence") {
  auto r = run("count --n 6");
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line, last;
  while (std::getline(in, line)) last = line;
  CHECK(last.substr(last.rfind('\t') + 1) == "12120");
  auto j = run("count --n 3 --format json");
  CHECK(j.code == 0);
  CHECK(j.out.find("\"268\"") == std::string::npos);
  CHECK(j.out.find("\"40\"") != std::string::npos);
}

TEST_CASE("check verdicts") {
  TempDir t;
  auto k7 = t.write("k7.tmap", write_tmap(fixtures::k7()));
  auto r = run("check " + k7);
  CHECK(r.code == 0);
  CHECK(r.out.find("essentially 4-connected: yes") != std::string::npos);
  auto st = t.write("st.tmap", write_tmap(fixtures::stacked_k7()));
  CHECK(run("check " + st).code == 1);
  CHECK(run("check --format json " + k7).out.find("\"essentially_4connected\": true") != std::string::npos);
  CHECK(run("check " + t.write("bad.tmap", "tmap 1\nvertex 0 :\n")).code == 1);
}

TEST_CASE("pipeline rebuilds the input") {
  TempDir t;
  for (const Map& g : {fixtures::k7(), fixtures::two_vertex_48(), fixtures::wheel_k7()}) {
    auto in = t.write("g.tmap", write_tmap(g));
    int root = 0;
    while (!admissible_root(g, root)) ++root;
    auto cmd = "ts " + in + " | " + cli() + " orient --minimize --root " + std::to_string(root) + " - | " + cli() +
               " mobile - | " + cli() + " rebuild -";
    auto r = run(cmd);
    CHECK(r.code == 0);
    CHECK(r.out == canonical(g, root));
  }
}

TEST_CASE("encode and decode") {
  TempDir t;
  Map g = fixtures::k7();
  auto in = t.write("k7.tmap", write_tmap(g));
  auto code = t.path / "k7.hex";
  CHECK(run("encode --root 4 " + in + " -o " + code.string()).code == 0);
  auto r = run("decode " + code.string());
  CHECK(r.code == 0);
  CHECK(r.out == canonical(g, 4));
  CHECK(run("encode " + in).code == 2);  // no root

  std::ifstream f(code);
  std::string hex;
  std::getline(f, hex);
  auto cut = t.write("cut.hex", hex.substr(0, hex.size() - 6) + "\n");
  auto out = t.path / "never.tmap";
  CHECK(run("decode " + cut + " -o " + out.string()).code == 1);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("count").code == 2);
  CHECK(run("census --n 3").code == 2);
  CHECK(run("count --n 2 --format yaml").code == 2);
}

TEST_CASE("census and lattice") {
  auto r = run("census --n 2 --jobs 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("rooted 6\n") != std::string::npos);
  TempDir t;
  auto in = t.write("one.tmap", write_tmap(fixtures::one_vertex()));
  auto l = run("lattice " + in);
  CHECK(l.code == 0);
  CHECK(l.out.find("distributive yes") != std::string::npos);
  auto big = t.write("k7.tmap", write_tmap(fixtures::k7()));
  CHECK(run("lattice " + big).code == 1);
}

TEST_CASE("outputs are deterministic") {
  TempDir t;
  auto in = t.write("k7.tmap", write_tmap(fixtures::k7()));
  for (std::string args : {"ts ", "orient --minimize --root 2 ", "mobile --root 2 ", "encode --root 2 "}) {
    auto a = run(args + in), b = run(args + in);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  auto a = run("orient --minimize --root 2 --seed 5 " + in);
  CHECK(a.out == run("orient --minimize --root 2 " + in).out);
}
