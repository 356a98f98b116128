#include "xline/signedrep.hpp"

#include <deque>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>

namespace xline {

SignedPerm identity_sp(int n) {
  SignedPerm e;
  e.perm.resize(n);
  std::iota(e.perm.begin(), e.perm.end(), 0);
  e.signs.assign(n, 1);
  return e;
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  if (a.n() != b.n()) fail(Errc::size_mismatch, "signed permutations have different sizes");
  int n = a.n();
  SignedPerm c;
  c.perm.resize(n);
  c.signs.resize(n);
  for (int j = 0; j < n; ++j) {
    c.perm[j] = a.perm[b.perm[j]];
    c.signs[j] = b.signs[j] * a.signs[b.perm[j]];
  }
  return c;
}

SignedPerm inverse(const SignedPerm& a) {
  int n = a.n();
  SignedPerm inv;
  inv.perm.resize(n);
  inv.signs.resize(n);
  for (int j = 0; j < n; ++j) inv.perm[a.perm[j]] = j;
  for (int j = 0; j < n; ++j) inv.signs[j] = a.signs[inv.perm[j]];
  return inv;
}

bool is_valid_signed_perm(const SignedPerm& a) {
  int n = a.n();
  if (static_cast<int>(a.signs.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : a.perm) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int s : a.signs)
    if (s != 1 && s != -1) return false;
  return true;
}

SignedPerm lift(const ProjBasis& basis, const MatG& M) {
  int n = basis.n();
  SignedPerm g;
  g.perm.resize(n);
  g.signs.resize(n);
  for (int i = 0; i < n; ++i) {
    auto [j, lambda] = basis.act_on_point(M, i);
    g.perm[i] = j;
    g.signs[i] = basis.field().is_square(lambda) ? 1 : -1;
  }
  return g;
}

namespace {

std::vector<SignedPerm> with_inverses(const std::vector<SignedPerm>& gens) {
  std::vector<SignedPerm> all = gens;
  for (const auto& g : gens) {
    SignedPerm inv = inverse(g);
    if (inv != g) all.push_back(std::move(inv));
  }
  return all;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  }
};

// Symbol coding for Y: y in [0, 2n), line y % n, sign -1 when y >= n.
inline int apply_y(const SignedPerm& g, int n, int y) {
  int i = y < n ? y : y - n;
  int s = y < n ? 1 : -1;
  int ns = s * g.signs[i];
  return g.perm[i] + (ns < 0 ? n : 0);
}

}  // namespace

bool is_two_transitive(const std::vector<SignedPerm>& gens, int n) {
  if (n < 2) fail(Errc::dimension_too_small, "2-transitivity needs n >= 2");
  auto all = with_inverses(gens);
  std::vector<char> seen(static_cast<size_t>(n) * n, 0);
  std::deque<std::pair<int, int>> queue;
  seen[0 * n + 1] = 1;
  queue.emplace_back(0, 1);
  long reached = 1;
  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    for (const auto& g : all) {
      int a = g.perm[i], b = g.perm[j];
      if (!seen[static_cast<size_t>(a) * n + b]) {
        seen[static_cast<size_t>(a) * n + b] = 1;
        ++reached;
        queue.emplace_back(a, b);
      }
    }
  }
  return reached == static_cast<long>(n) * (n - 1);
}

SignedOrbitReport orbits_on_signed_pairs(const std::vector<SignedPerm>& gens, int n) {
  auto all = with_inverses(gens);
  int m = 2 * n;

  SignedOrbitReport report;

  {
    UnionFind uf(static_cast<size_t>(n) * n);
    for (const auto& g : all)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          uf.unite(i * n + j, g.perm[i] * n + g.perm[j]);
    std::unordered_set<int> roots;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) roots.insert(uf.find(i * n + j));
    report.orbit_count_X2 = static_cast<int>(roots.size());
  }

  {
    UnionFind uf(static_cast<size_t>(m));
    for (const auto& g : all)
      for (int y = 0; y < m; ++y) uf.unite(y, apply_y(g, n, y));
    std::unordered_set<int> roots;
    for (int y = 0; y < m; ++y) roots.insert(uf.find(y));
    report.transitive_on_Y = roots.size() == 1;
  }

  UnionFind uf(static_cast<size_t>(m) * m);
  for (const auto& g : all)
    for (int y1 = 0; y1 < m; ++y1) {
      int z1 = apply_y(g, n, y1);
      for (int y2 = 0; y2 < m; ++y2)
        uf.unite(y1 * m + y2, z1 * m + apply_y(g, n, y2));
    }
  std::unordered_set<int> all_roots, nabla_roots;
  for (int y1 = 0; y1 < m; ++y1)
    for (int y2 = 0; y2 < m; ++y2) {
      int root = uf.find(y1 * m + y2);
      all_roots.insert(root);
      if (y1 % n != y2 % n) nabla_roots.insert(root);
    }
  report.orbit_count_YxY = static_cast<int>(all_roots.size());
  report.orbit_count_nabla = static_cast<int>(nabla_roots.size());
  return report;
}

namespace {

// Compact element key: two bytes per image plus packed sign bits.
std::string pack_key(const SignedPerm& g) {
  int n = g.n();
  std::string key(static_cast<size_t>(2 * n + (n + 7) / 8), '\0');
  for (int i = 0; i < n; ++i) {
    key[2 * i] = static_cast<char>(g.perm[i] & 0xff);
    key[2 * i + 1] = static_cast<char>((g.perm[i] >> 8) & 0xff);
  }
  for (int i = 0; i < n; ++i)
    if (g.signs[i] < 0) key[2 * n + i / 8] |= static_cast<char>(1 << (i % 8));
  return key;
}

}  // namespace

long burnside_orbit_count(const std::vector<SignedPerm>& gens, int n, long max_order) {
  // BFS closure of the generated group; for a finite group the reachable
  // set under left multiplication by generators is the whole subgroup.
  std::unordered_set<std::string> seen;
  std::deque<SignedPerm> queue;
  SignedPerm e = identity_sp(n);
  seen.insert(pack_key(e));

  unsigned long long fix_sq_sum = 0;
  auto account = [&](const SignedPerm& g) {
    long fixed = 0;
    for (int i = 0; i < n; ++i)
      if (g.perm[i] == i && g.signs[i] > 0) ++fixed;
    unsigned long long fy = 2ULL * fixed;
    fix_sq_sum += fy * fy;
  };
  account(e);
  queue.push_back(std::move(e));

  while (!queue.empty()) {
    SignedPerm g = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      SignedPerm h = compose(s, g);
      auto key = pack_key(h);
      if (seen.contains(key)) continue;
      if (static_cast<long>(seen.size()) >= max_order)
        fail(Errc::group_too_large, "group closure exceeds " + std::to_string(max_order) + " elements");
      seen.insert(std::move(key));
      account(h);
      queue.push_back(std::move(h));
    }
  }

  unsigned long long order = seen.size();
  if (fix_sq_sum % order != 0)
    fail(Errc::inconsistent_spectrum, "fixed-point average is not an integer");
  return static_cast<long>(fix_sq_sum / order);
}

std::vector<SignedPerm> read_generators(std::istream& in) {
  int n = 0, g = 0;
  if (!(in >> n >> g) || n < 1 || g < 0) fail(Errc::parse_error, "expected header 'n g'");
  if (n > (1 << 16)) fail(Errc::bound_exceeded, "generator file size out of range");
  std::vector<SignedPerm> gens;
  for (int t = 0; t < g; ++t) {
    SignedPerm sp;
    sp.perm.resize(n);
    sp.signs.resize(n);
    for (int i = 0; i < n; ++i)
      if (!(in >> sp.perm[i])) fail(Errc::parse_error, "truncated permutation row");
    for (int i = 0; i < n; ++i) {
      std::string tok;
      if (!(in >> tok)) fail(Errc::parse_error, "truncated sign row");
      if (tok == "+")
        sp.signs[i] = 1;
      else if (tok == "-")
        sp.signs[i] = -1;
      else
        fail(Errc::parse_error, "sign tokens must be + or -");
    }
    if (!is_valid_signed_perm(sp)) fail(Errc::parse_error, "row is not a permutation of 0..n-1");
    gens.push_back(std::move(sp));
  }
  return gens;
}

void write_generators(std::ostream& out, const std::vector<SignedPerm>& gens) {
  int n = gens.empty() ? 0 : gens.front().n();
  out << n << " " << gens.size() << "\n";
  for (const auto& g : gens) {
    std::ostringstream perm, signs;
    for (int i = 0; i < n; ++i) {
      perm << (i ? " " : "") << g.perm[i];
      signs << (i ? " " : "") << (g.signs[i] > 0 ? "+" : "-");
    }
    out << perm.str() << "\n" << signs.str() << "\n";
  }
}

}  // namespace xline
