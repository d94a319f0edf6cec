#include "family.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace testsupport {

namespace {

using opetokit::FiniteCategory;

// One hom-count matrix; arrows are numbered hom-set by hom-set in row-major
// order of (source, target).
struct Shape {
  int n = 0;
  std::vector<std::vector<int>> cnt;
  int k = 0;
  std::vector<int> src, tgt;
  std::vector<std::vector<std::vector<int>>> hom;  // hom[i][j] = arrows
  std::vector<std::pair<int, int>> slots;          // (g, f), g after f
  std::vector<std::array<int, 3>> triples;         // (h, g, f)
  std::vector<std::vector<int>> syms;              // arrow maps, identities appended
  std::vector<std::vector<int>> inverses;
  std::vector<std::vector<int>> touching;          // slot -> triples using it directly
};

struct Search {
  const Shape& s;
  std::vector<int> table;  // k*k, -1 unknown
  std::vector<FiniteCategory>& out;

  int id(int o) const { return s.k + o; }
  bool is_id(int a) const { return a >= s.k; }

  int comp(int g, int f) const {
    if (is_id(g)) return f;
    if (is_id(f)) return g;
    return table[g * s.k + f];
  }

  bool holds(const std::array<int, 3>& t) const {
    const auto [h, g, f] = t;
    const int a = comp(h, g), b = comp(g, f);
    if (a < 0 || b < 0) return true;
    const int x = comp(a, f), y = comp(h, b);
    return x < 0 || y < 0 || x == y;
  }

  // Triples where the entry (g, f) is used directly or as an outer product.
  bool consistent(int g, int f) const {
    const int slot = g * s.k + f;
    for (int t : s.touching[slot]) {
      if (!holds(s.triples[t])) return false;
    }
    for (int x = 0; x < s.k; ++x) {
      for (int y = 0; y < s.k; ++y) {
        if (s.tgt[y] != s.src[x]) continue;
        const int v = table[x * s.k + y];
        if (v == g && s.tgt[f] == s.src[y] && !holds({x, y, f})) return false;
        if (v == f && s.tgt[x] == s.src[g] && !holds({g, x, y})) return false;
      }
    }
    return true;
  }

  // False once some relabeling is already known to give a smaller table.
  bool least() const {
    for (std::size_t i = 0; i < s.syms.size(); ++i) {
      const auto& sig = s.syms[i];
      const auto& inv = s.inverses[i];
      for (const auto& [g, f] : s.slots) {
        const int pre = comp(inv[g], inv[f]);
        const int mine = comp(g, f);
        if (pre < 0 || mine < 0) break;
        const int image = sig[pre];
        if (image < mine) return false;
        if (image > mine) break;
      }
    }
    return true;
  }

  void emit() {
    FiniteCategory c;
    auto obj = [](int o) { return std::to_string(o); };
    auto name = [&](int a) {
      return is_id(a) ? "1_" + obj(a - s.k) : "a" + std::to_string(a);
    };
    for (int o = 0; o < s.n; ++o) {
      c.objects.insert(obj(o));
      c.arrows[name(id(o))] = {obj(o), obj(o)};
      c.identity[obj(o)] = name(id(o));
    }
    for (int a = 0; a < s.k; ++a) c.arrows[name(a)] = {obj(s.src[a]), obj(s.tgt[a])};
    const int total = s.k + s.n;
    auto source = [&](int a) { return is_id(a) ? a - s.k : s.src[a]; };
    auto target = [&](int a) { return is_id(a) ? a - s.k : s.tgt[a]; };
    for (int g = 0; g < total; ++g) {
      for (int f = 0; f < total; ++f) {
        if (target(f) == source(g)) c.compose[{name(g), name(f)}] = name(comp(g, f));
      }
    }
    out.push_back(std::move(c));
  }

  void run(std::size_t i) {
    if (i == s.slots.size()) {
      emit();
      return;
    }
    const auto [g, f] = s.slots[i];
    const int a = s.src[f], b = s.tgt[g];
    auto attempt = [&](int v) {
      table[g * s.k + f] = v;
      if (consistent(g, f) && least()) run(i + 1);
      table[g * s.k + f] = -1;
    };
    for (int v : s.hom[a][b]) attempt(v);
    if (a == b) attempt(id(a));
  }
};

std::vector<int> flat(const std::vector<std::vector<int>>& m,
                      const std::vector<int>& perm) {
  const int n = static_cast<int>(m.size());
  std::vector<int> v(n * n);
  // entry (i, j) of the relabeled matrix
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) v[perm[i] * n + perm[j]] = m[i][j];
  }
  return v;
}

void build_syms(Shape& s) {
  std::vector<int> perm(s.n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto base = flat(s.cnt, perm);
  do {
    if (flat(s.cnt, perm) != base) continue;
    // choose a bijection hom(i,j) -> hom(perm i, perm j) for every hom-set
    std::vector<std::pair<int, int>> homs;
    for (int i = 0; i < s.n; ++i) {
      for (int j = 0; j < s.n; ++j) {
        if (s.cnt[i][j] > 0) homs.push_back({i, j});
      }
    }
    std::vector<int> sig(s.k + s.n, -1);
    for (int o = 0; o < s.n; ++o) sig[s.k + o] = s.k + perm[o];
    auto rec = [&](auto& self, std::size_t h) -> void {
      if (h == homs.size()) {
        bool identity = true;
        for (int a = 0; a < s.k + s.n; ++a) identity &= sig[a] == a;
        if (!identity) s.syms.push_back(sig);
        return;
      }
      const auto [i, j] = homs[h];
      const auto& from = s.hom[i][j];
      auto to = s.hom[perm[i]][perm[j]];
      std::sort(to.begin(), to.end());
      do {
        for (std::size_t t = 0; t < from.size(); ++t) sig[from[t]] = to[t];
        self(self, h + 1);
      } while (std::next_permutation(to.begin(), to.end()));
    };
    rec(rec, 0);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

Shape make_shape(int n, const std::vector<std::vector<int>>& cnt) {
  Shape s;
  s.n = n;
  s.cnt = cnt;
  s.hom.assign(n, std::vector<std::vector<int>>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int c = 0; c < cnt[i][j]; ++c) {
        s.hom[i][j].push_back(s.k);
        s.src.push_back(i);
        s.tgt.push_back(j);
        ++s.k;
      }
    }
  }
  for (int g = 0; g < s.k; ++g) {
    for (int f = 0; f < s.k; ++f) {
      if (s.tgt[f] != s.src[g]) continue;
      s.slots.push_back({g, f});
      for (int h = 0; h < s.k; ++h) {
        if (s.tgt[g] == s.src[h]) s.triples.push_back({h, g, f});
      }
    }
  }
  s.touching.assign(s.k * s.k, {});
  for (std::size_t t = 0; t < s.triples.size(); ++t) {
    const auto [h, g, f] = s.triples[t];
    s.touching[h * s.k + g].push_back(static_cast<int>(t));
    s.touching[g * s.k + f].push_back(static_cast<int>(t));
  }
  build_syms(s);
  for (const auto& sig : s.syms) {
    std::vector<int> inv(sig.size());
    for (std::size_t a = 0; a < sig.size(); ++a) inv[sig[a]] = static_cast<int>(a);
    s.inverses.push_back(std::move(inv));
  }
  return s;
}

// Count matrices with the given total, least under object relabeling.
void matrices(int n, int total, std::vector<std::vector<std::vector<int>>>& out) {
  std::vector<int> cells(n * n, 0);
  auto rec = [&](auto& self, int at, int left) -> void {
    if (at == n * n - 1) {
      cells[at] = left;
      std::vector<std::vector<int>> m(n, std::vector<int>(n));
      for (int i = 0; i < n * n; ++i) m[i / n][i % n] = cells[i];
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      const auto mine = flat(m, perm);
      bool least = true;
      while (least && std::next_permutation(perm.begin(), perm.end())) {
        least = !(flat(m, perm) < mine);
      }
      if (least) out.push_back(m);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      cells[at] = c;
      self(self, at + 1, left - c);
    }
  };
  if (n == 0) return;
  rec(rec, 0, total);
}

}  // namespace

std::vector<FiniteCategory> category_family(std::size_t max_objects,
                                            std::size_t max_arrows) {
  std::vector<FiniteCategory> out;
  out.push_back({});  // the empty category
  for (int n = 1; n <= static_cast<int>(max_objects); ++n) {
    for (int k = 0; n + k <= static_cast<int>(max_arrows); ++k) {
      std::vector<std::vector<std::vector<int>>> ms;
      matrices(n, k, ms);
      for (const auto& m : ms) {
        const Shape s = make_shape(n, m);
        Search search{s, std::vector<int>(s.k * s.k, -1), out};
        search.run(0);
      }
    }
  }
  return out;
}

}  // namespace testsupport
