#include "torus4/codec.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <functional>
#include <map>
#include <set>

#include "torus4/error.hpp"
#include "torus4/lattice.hpp"
#include "torus4/transversal.hpp"

namespace torus4 {

std::string encode_tree(const TernaryTree& t) {
  std::function<std::string(int)> node = [&](int x) -> std::string {
    if (x < 0) return "0";
    std::string s = "1";
    for (int c : t.children[x]) s += node(c);
    return s;
  };
  return "0" + node(t.inner() ? 0 : -1);
}

namespace {

// Parses one subtree at pos; returns the node index or -1 for a leaf.
int parse_node(const std::string& bits, size_t& pos, TernaryTree& t) {
  require(pos < bits.size(), ErrorKind::Parse, "tree word ends early");
  char b = bits[pos++];
  require(b == '0' || b == '1', ErrorKind::Parse, "tree word has a non-binary symbol");
  if (b == '0') return -1;
  int id = t.inner();
  t.children.push_back({-1, -1, -1});
  for (int j = 0; j < 3; ++j) {
    int c = parse_node(bits, pos, t);
    t.children[id][j] = c;
  }
  return id;
}

// Length of the tree word starting at pos, from the zero/one balance.
size_t tree_word_length(const std::string& bits, size_t pos) {
  long zeros = 0, ones = 0;
  for (size_t i = pos; i < bits.size(); ++i) {
    if (bits[i] == '1')
      ++ones;
    else
      ++zeros;
    if (zeros == 2 * ones + 2) return i + 1 - pos;
  }
  fail(ErrorKind::Parse, "tree word ends early");
}

}  // namespace

TernaryTree decode_tree(const std::string& bits) {
  require(!bits.empty() && bits[0] == '0', ErrorKind::Parse, "tree word must start with the root leaf");
  TernaryTree t;
  size_t pos = 1;
  parse_node(bits, pos, t);
  require(pos == bits.size(), ErrorKind::Parse, "trailing bits after tree word");
  return t;
}

bool is_tree_word(const std::string& bits) {
  try {
    decode_tree(bits);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<TernaryTree> all_ternary_trees(int inner) {
  std::vector<std::vector<std::string>> w(inner + 1);
  w[0] = {"0"};
  for (int j = 1; j <= inner; ++j)
    for (int a = 0; a < j; ++a)
      for (int b = 0; a + b < j; ++b) {
        int c = j - 1 - a - b;
        for (const auto& x : w[a])
          for (const auto& y : w[b])
            for (const auto& z : w[c]) w[j].push_back("1" + x + y + z);
      }
  std::sort(w[inner].begin(), w[inner].end());
  std::vector<TernaryTree> out;
  for (const auto& s : w[inner]) out.push_back(decode_tree("0" + s));
  return out;
}

namespace {

void put_int(std::string& out, int v) {
  require(v >= 0, ErrorKind::Precondition, "negative side information");
  std::string b;
  for (unsigned x = static_cast<unsigned>(v); x; x >>= 1) b.insert(b.begin(), (x & 1) ? '1' : '0');
  require(b.size() < 32, ErrorKind::Precondition, "side information too large");
  for (int i = 4; i >= 0; --i) out += ((b.size() >> i) & 1) ? '1' : '0';
  out += b;
}

int get_int(const std::string& in, size_t& pos) {
  require(pos + 5 <= in.size(), ErrorKind::Parse, "code word ends inside side information");
  int len = 0;
  for (int i = 0; i < 5; ++i) len = 2 * len + (in[pos++] == '1');
  require(pos + len <= in.size(), ErrorKind::Parse, "code word ends inside side information");
  require(len < 31, ErrorKind::Parse, "side information field too long");
  int v = 0;
  for (int i = 0; i < len; ++i) v = 2 * v + (in[pos++] == '1');
  return v;
}

}  // namespace

std::string CodeWord::bits() const {
  std::string out;
  put_int(out, k);
  for (int s : special) put_int(out, s);
  put_int(out, pairing);
  put_int(out, root_angle);
  return out + tree1 + tree2;
}

CodeWord CodeWord::from_bits(const std::string& bits) {
  for (char b : bits) require(b == '0' || b == '1', ErrorKind::Parse, "code word has a non-binary symbol");
  CodeWord c;
  size_t pos = 0;
  c.k = get_int(bits, pos);
  for (auto& s : c.special) s = get_int(bits, pos);
  c.pairing = get_int(bits, pos);
  c.root_angle = get_int(bits, pos);
  size_t l1 = tree_word_length(bits, pos);
  c.tree1 = bits.substr(pos, l1);
  pos += l1;
  size_t l2 = tree_word_length(bits, pos);
  c.tree2 = bits.substr(pos, l2);
  pos += l2;
  require(pos == bits.size(), ErrorKind::Parse, "trailing bits after code word");
  return c;
}

CodeWord encode_mobile(const ExtendedMobile& m) {
  require(m.root.has_value(), ErrorKind::Precondition, "encoding needs a rooted mobile");
  const int h0 = *m.root;
  std::function<std::string(const ExtendedMobile&, int, const std::set<int>&)> sub;
  sub = [&](const ExtendedMobile& mm, int h, const std::set<int>& cut) -> std::string {
    if (mm.is_stem(h) || cut.count(h)) return "0";
    int p = mm.partner(h);
    return "1" + sub(mm, mm.sigma(p), cut) + sub(mm, mm.sigma(mm.sigma(p)), cut) +
           sub(mm, mm.sigma(mm.sigma(mm.sigma(p))), cut);
  };
  CodeWord c;
  c.tree2 = "0" + (m.is_stem(h0) ? std::string("0") : sub(m, h0, {}));
  c.k = static_cast<int>(std::count(c.tree2.begin(), c.tree2.end(), '1'));
  const int y = m.sigma_inv(h0);
  ExtendedMobile g1 = unrooted(m);
  const int n1 = g1.num_vertices();

  // BFS over full edges from the root vertex, each rotation read from its arrival half-edge.
  std::vector<int> start(n1, -1), order;
  std::set<int> tree_halves;
  const int v0 = g1.vertex(y);
  start[v0] = g1.sigma(y);
  order.push_back(v0);
  for (size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int j = 0, h = start[v]; j < 4; ++j, h = g1.sigma(h)) {
      if (g1.is_stem(h)) continue;
      int p = g1.partner(h), w = g1.vertex(p);
      if (start[w] != -1) continue;
      start[w] = p;
      tree_halves.insert(h);
      tree_halves.insert(p);
      order.push_back(w);
    }
  }
  require(static_cast<int>(order.size()) == n1, ErrorKind::Invariant, "toroidal part of the mobile is disconnected");
  std::vector<int> specials;
  for (int v : order)
    for (int j = 0, h = start[v]; j < 4; ++j, h = g1.sigma(h))
      if (!g1.is_stem(h) && !tree_halves.count(h)) specials.push_back(h);
  require(specials.size() == 4, ErrorKind::Invariant, "toroidal part does not have exactly two non-tree edges");
  const std::set<int> cut(specials.begin(), specials.end());
  const int s0 = specials[0];

  // Preorder walk of T1 from s0, recording leaves and node corners.
  std::map<int, int> leaf_index{{s0, 0}};
  std::vector<int> node_parent_half;  // preorder index -> half-edge at corner 0
  std::function<std::string(int)> walk = [&](int ph) -> std::string {
    node_parent_half.push_back(ph);
    std::string s = "1";
    for (int j = 1, h = g1.sigma(ph); j < 4; ++j, h = g1.sigma(h)) {
      if (g1.is_stem(h) || cut.count(h)) {
        leaf_index.emplace(h, static_cast<int>(leaf_index.size()));
        s += "0";
      } else {
        s += walk(g1.partner(h));
      }
    }
    return s;
  };
  c.tree1 = "0" + walk(s0);
  std::array<std::pair<int, int>, 3> pos;  // (leaf index, half-edge)
  for (int i = 0; i < 3; ++i) pos[i] = {leaf_index.at(specials[i + 1]), specials[i + 1]};
  std::sort(pos.begin(), pos.end());
  for (int i = 0; i < 3; ++i) {
    c.special[i] = pos[i].first;
    if (pos[i].second == g1.partner(s0)) c.pairing = i;
  }
  int node = -1, corner = -1;
  for (size_t x = 0; x < node_parent_half.size(); ++x)
    for (int j = 0, h = node_parent_half[x]; j < 4; ++j, h = g1.sigma(h))
      if (h == y) {
        node = static_cast<int>(x);
        corner = j;
      }
  require(node >= 0, ErrorKind::Invariant, "root corner not found in the tree walk");
  c.root_angle = 4 * node + corner;
  return c;
}

ExtendedMobile decode_mobile(const CodeWord& c) {
  TernaryTree t1 = decode_tree(c.tree1), t2 = decode_tree(c.tree2);
  require(t1.inner() >= 1, ErrorKind::Parse, "first tree has no inner vertex");
  require(t2.inner() == c.k, ErrorKind::Parse, "tree size does not match k");
  std::vector<std::vector<int>> rot;
  std::vector<int> partner;
  auto fresh = [&](int p) {
    partner.push_back(p);
    return static_cast<int>(partner.size()) - 1;
  };
  std::vector<int> leaves;
  // Vertices are created in preorder; returns nothing, fills rot.
  std::function<void(const TernaryTree&, int, int, bool)> build = [&](const TernaryTree& t, int node, int ph,
                                                                       bool record) {
    size_t slot = rot.size();
    rot.push_back({ph});
    for (int j = 0; j < 3; ++j) {
      int h = fresh(-1);
      rot[slot].push_back(h);
      int ch = t.children[node][j];
      if (ch < 0) {
        if (record) leaves.push_back(h);
      } else {
        int p = fresh(h);
        partner[h] = p;
        build(t, ch, p, record);
      }
    }
  };
  int s0 = fresh(-1);
  leaves.push_back(s0);
  build(t1, 0, s0, true);
  const int nl = static_cast<int>(leaves.size());
  for (int i = 0; i < 3; ++i) {
    require(c.special[i] >= 1 && c.special[i] < nl, ErrorKind::Parse, "special stem position out of range");
    if (i) require(c.special[i] > c.special[i - 1], ErrorKind::Parse, "special stem positions not increasing");
  }
  require(c.pairing >= 0 && c.pairing < 3, ErrorKind::Parse, "pairing index out of range");
  auto join = [&](int a, int b) {
    partner[a] = b;
    partner[b] = a;
  };
  join(s0, leaves[c.special[c.pairing]]);
  std::vector<int> rest;
  for (int i = 0; i < 3; ++i)
    if (i != c.pairing) rest.push_back(leaves[c.special[i]]);
  join(rest[0], rest[1]);

  const int n1 = static_cast<int>(rot.size());
  require(c.root_angle >= 0 && c.root_angle < 4 * n1, ErrorKind::Parse, "root corner out of range");
  int h0 = fresh(-1);
  auto& r = rot[c.root_angle / 4];
  r.insert(r.begin() + c.root_angle % 4 + 1, h0);
  if (t2.inner() > 0) {
    int p = fresh(h0);
    partner[h0] = p;
    build(t2, 0, p, false);
  }
  return ExtendedMobile(std::move(rot), std::move(partner), h0);
}

bool admissible_root(const Map& g, int h0) { return maximal_quadrangle_containing(g, h0).root_incident; }

ExtendedMobile mobile_of(const Map& g, int h0) {
  require(h0 >= 0 && h0 < g.num_darts(), ErrorKind::Precondition, "root dart out of range");
  require(admissible_root(g, h0), ErrorKind::Domain, "root is not interior-incident to its maximal quadrangle");
  Map gr = g;
  gr.root = h0;
  TransversalStructure ts = find_balanced_ts(gr);
  AngleContext ctx(gr);
  FourOrientation dmin = minimize(ctx, ts_to_orientation(gr, ts), ctx.am.face_of_edge(h0));
  return extract_mobile(gr, dmin, h0);
}

CodeWord encode(const Map& g, int h0) { return encode_mobile(mobile_of(g, h0)); }

Map decode(const CodeWord& c) { return recover_walk(decode_mobile(c)).g; }

namespace {

const char* kHex = "0123456789abcdef";

}  // namespace

std::string to_hex_file(const CodeWord& c) {
  std::string bits = c.bits();
  std::vector<unsigned char> bytes{'T', '4', 'C', 'T'};
  uint32_t nb = static_cast<uint32_t>(bits.size());
  for (int i = 3; i >= 0; --i) bytes.push_back(static_cast<unsigned char>((nb >> (8 * i)) & 0xff));
  for (size_t i = 0; i < bits.size(); i += 8) {
    unsigned char b = 0;
    for (size_t j = 0; j < 8; ++j) b = static_cast<unsigned char>(2 * b + (i + j < bits.size() && bits[i + j] == '1'));
    bytes.push_back(b);
  }
  std::string out;
  for (unsigned char b : bytes) {
    out += kHex[b >> 4];
    out += kHex[b & 15];
  }
  return out + "\n";
}

CodeWord from_hex_file(const std::string& text) {
  std::string hex;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) hex += static_cast<char>(std::tolower(ch));
  require(hex.size() % 2 == 0, ErrorKind::Parse, "odd number of hex digits");
  std::vector<unsigned char> bytes;
  for (size_t i = 0; i < hex.size(); i += 2) {
    auto val = [](char ch) {
      const char* p = std::strchr(kHex, ch);
      require(ch != 0 && p != nullptr, ErrorKind::Parse, "not a hex digit");
      return static_cast<int>(p - kHex);
    };
    bytes.push_back(static_cast<unsigned char>(16 * val(hex[i]) + val(hex[i + 1])));
  }
  require(bytes.size() >= 8 && bytes[0] == 'T' && bytes[1] == '4' && bytes[2] == 'C' && bytes[3] == 'T',
          ErrorKind::Parse, "missing T4CT magic");
  uint32_t nb = 0;
  for (int i = 4; i < 8; ++i) nb = (nb << 8) | bytes[i];
  require(bytes.size() - 8 == (nb + 7) / 8, ErrorKind::Parse, "code word file is truncated or has trailing bytes");
  std::string bits;
  for (uint32_t i = 0; i < nb; ++i) bits += ((bytes[8 + i / 8] >> (7 - i % 8)) & 1) ? '1' : '0';
  return CodeWord::from_bits(bits);
}

}  // namespace torus4
