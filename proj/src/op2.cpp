#include <algorithm>

#include "collector.hpp"
#include "op2_index.hpp"
#include "opetokit/error.hpp"

namespace opetokit {

namespace detail {

Op2Index::Op2Index(const FiniteOpTwoCat& xx) : x(&xx) {
  for (const auto& [id, _] : xx.cells1) {
    one_by_id.emplace(id, static_cast<int>(ones.size()));
    ones.push_back(id);
  }
  std::map<ObjId, int> obj;
  for (const auto& o : xx.objects) obj.emplace(o, static_cast<int>(obj.size()));

  const auto n = xx.cells2.size();
  ids.reserve(n);
  src.reserve(n);
  for (const auto& [id, c] : xx.cells2) {
    const int k = static_cast<int>(ids.size());
    by_id.emplace(id, k);
    ids.push_back(id);
    std::vector<int> s;
    for (const auto& e : c.source.edges) {
      auto it = one_by_id.find(e);
      s.push_back(it == one_by_id.end() ? -1 : it->second);
    }
    src.push_back(std::move(s));
    if (c.source.empty()) {
      auto it = obj.find(c.source.anchor);
      anchor.push_back(it == obj.end() ? -1 : it->second);
    } else {
      anchor.push_back(-1);
    }
    auto t = one_by_id.find(c.target);
    tgt.push_back(t == one_by_id.end() ? -1 : t->second);

    PastingPath key = c.source;
    if (!key.empty()) key.anchor = xx.cells1.count(key.edges.front())
                                       ? xx.cells1.at(key.edges.front()).source
                                       : key.anchor;
    auto [nit, inserted] =
        niche_by_path.emplace(key, static_cast<int>(niches.size()));
    if (inserted) {
      niches.push_back(key);
      occupants.emplace_back();
    }
    niche.push_back(nit->second);
    occupants[nit->second].push_back(k);
  }

  ident_of.assign(ones.size(), -1);
  for (const auto& [f, c] : xx.ident2) {
    auto fi = one_by_id.find(f);
    auto ci = by_id.find(c);
    if (fi != one_by_id.end() && ci != by_id.end()) {
      ident_of[fi->second] = ci->second;
    }
  }

  unary_from.assign(ones.size(), {});
  for (int c = 0; c < static_cast<int>(ids.size()); ++c) {
    if (src[c].size() == 1 && src[c][0] >= 0) unary_from[src[c][0]].push_back(c);
  }

  graft_table.reserve(xx.grafts.size());
  for (const auto& [k, v] : xx.grafts) {
    auto o = by_id.find(k.outer);
    auto i = by_id.find(k.inner);
    auto r = by_id.find(v);
    if (o == by_id.end() || i == by_id.end() || r == by_id.end() ||
        k.slot >= 64) {
      continue;
    }
    graft_table[key(o->second, static_cast<int>(k.slot), i->second)] =
        r->second;
  }
}

int Op2Index::cell(const TwoCellId& id) const {
  auto it = by_id.find(id);
  if (it == by_id.end()) throw Error(ErrorCode::DanglingId, "2-cell " + id);
  return it->second;
}

}  // namespace detail

namespace {

using detail::Collector;

std::string name(const detail::Op2Index& ix, int c) {
  return c < 0 ? std::string("<missing>") : ix.ids[c];
}

std::string triple(const detail::Op2Index& ix, int a, int i, int b) {
  return "graft(" + name(ix, a) + ", " + std::to_string(i) + ", " +
         name(ix, b) + ")";
}

}  // namespace

ValidationReport validate_op2(const FiniteOpTwoCat& x) {
  ValidationReport r;
  r.arity_bound = x.arity_bound;
  Collector out(r);

  // references first; nothing else is meaningful with dangling ids
  for (const auto& [id, ends] : x.cells1) {
    if (!x.objects.contains(ends.source) || !x.objects.contains(ends.target)) {
      out.add("dangling id", "1-cell " + id + " has an unknown endpoint");
    }
  }
  for (const auto& [id, c] : x.cells2) {
    if (!x.cells1.contains(c.target)) {
      out.add("dangling id", "2-cell " + id + " targets unknown " + c.target);
    }
    if (c.source.empty() && !x.objects.contains(c.source.anchor)) {
      out.add("dangling id",
              "2-cell " + id + " anchored at unknown " + c.source.anchor);
    }
    for (const auto& e : c.source.edges) {
      if (!x.cells1.contains(e)) {
        out.add("dangling id", "2-cell " + id + " has unknown source edge " + e);
      }
    }
  }
  for (const auto& [f, c] : x.ident2) {
    if (!x.cells1.contains(f)) out.add("dangling id", "ident2 of unknown " + f);
    if (!x.cells2.contains(c)) out.add("dangling id", "ident2 cell " + c);
  }
  for (const auto& [k, v] : x.grafts) {
    for (const auto* id : {&k.outer, &k.inner, &v}) {
      if (!x.cells2.contains(*id)) {
        out.add("dangling id", "graft entry mentions unknown " + *id);
      }
    }
  }
  if (!r.ok()) {
    out.finish();
    return r;
  }

  // frames
  for (const auto& [id, c] : x.cells2) {
    try {
      check_path(x.objects, x.cells1, c.source);
    } catch (const Error& e) {
      out.add("frame", "2-cell " + id + ": " + e.what());
      continue;
    }
    if (endpoints(x.cells1, c.source) != x.cells1.at(c.target)) {
      out.add("frame", "2-cell " + id + " source " + to_string(c.source) +
                           " is not parallel to target " + c.target);
    }
    if (c.arity() > x.arity_bound) {
      out.add("arity bound", "2-cell " + id + " has arity " +
                                 std::to_string(c.arity()));
    }
  }
  for (const auto& [f, c] : x.ident2) {
    const TwoCell& cell = x.cells2.at(c);
    if (cell.arity() != 1 || cell.source.edges[0] != f || cell.target != f) {
      out.add("frame", "ident2(" + f + ") = " + c + " is not an endo-cell on " +
                           f);
    }
  }
  for (const auto& [f, _] : x.cells1) {
    if (!x.ident2.contains(f)) out.add("totality", "no ident2 for " + f);
  }
  for (const auto& [k, v] : x.grafts) {
    const TwoCell& o = x.cells2.at(k.outer);
    const TwoCell& i = x.cells2.at(k.inner);
    const TwoCell& res = x.cells2.at(v);
    const std::string what =
        "graft(" + k.outer + ", " + std::to_string(k.slot) + ", " + k.inner + ")";
    if (k.slot >= o.arity() || o.source.edges[k.slot] != i.target) {
      out.add("frame", what + " is recorded for a non-composable pair");
      continue;
    }
    if (res.target != o.target) {
      out.add("frame", what + " = " + v + " targets " + res.target +
                           " instead of " + o.target);
    }
    PastingPath expect = splice(o.source, k.slot, i.source);
    if (expect.empty()) expect.anchor = i.source.anchor;
    if (res.source != expect) {
      out.add("frame", what + " = " + v + " has source " +
                           to_string(res.source) + " instead of " +
                           to_string(expect));
    }
  }
  if (!r.ok()) {
    out.finish();
    return r;
  }

  detail::Op2Index ix(x);
  const int n = static_cast<int>(ix.ids.size());
  const int bound = static_cast<int>(x.arity_bound);

  // inner candidates by target 1-cell
  std::vector<std::vector<int>> by_target(ix.ones.size());
  for (int c = 0; c < n; ++c) by_target[ix.tgt[c]].push_back(c);

  auto in_bound = [&](int a, int b) {
    return ix.arity(a) + ix.arity(b) - 1 <= bound;
  };

  for (int a = 0; a < n; ++a) {
    for (int i = 0; i < ix.arity(a); ++i) {
      for (int b : by_target[ix.src[a][i]]) {
        if (!in_bound(a, b)) {
          if (ix.graft(a, i, b) >= 0) {
            out.add("arity bound", triple(ix, a, i, b) + " exceeds the bound");
          }
          continue;
        }
        if (ix.graft(a, i, b) < 0) {
          out.add("totality", triple(ix, a, i, b) + " is missing");
        }
      }
    }
  }
  if (!r.ok()) {
    out.finish();
    return r;
  }

  // unit laws
  for (int a = 0; a < n; ++a) {
    for (int i = 0; i < ix.arity(a); ++i) {
      const int id = ix.ident_of[ix.src[a][i]];
      const int got = ix.graft(a, i, id);
      if (got != a) {
        out.add("right unit", triple(ix, a, i, id) + " = " + name(ix, got) +
                                  " instead of " + name(ix, a));
      }
    }
    const int id = ix.ident_of[ix.tgt[a]];
    const int got = ix.graft(id, 0, a);
    if (got != a) {
      out.add("left unit", triple(ix, id, 0, a) + " = " + name(ix, got) +
                               " instead of " + name(ix, a));
    }
  }

  // sequential associativity and parallel commutation
  for (int a = 0; a < n; ++a) {
    const int ma = ix.arity(a);
    for (int i = 0; i < ma; ++i) {
      for (int b : by_target[ix.src[a][i]]) {
        if (!in_bound(a, b)) continue;
        const int ab = ix.graft(a, i, b);
        const int mb = ix.arity(b);
        const int mab = ix.arity(ab);
        for (int j = 0; j < mb; ++j) {
          for (int c : by_target[ix.src[b][j]]) {
            if (mab + ix.arity(c) - 1 > bound) continue;
            const int lhs = ix.graft(ab, i + j, c);
            const int bc = ix.graft(b, j, c);
            const int rhs = ix.graft(a, i, bc);
            if (lhs != rhs) {
              out.add("associativity",
                      "graft(" + triple(ix, a, i, b) + ", " +
                          std::to_string(i + j) + ", " + name(ix, c) + ") = " +
                          name(ix, lhs) + " but graft(" + name(ix, a) + ", " +
                          std::to_string(i) + ", " + triple(ix, b, j, c) +
                          ") = " + name(ix, rhs));
            }
          }
        }
        for (int k = i + 1; k < ma; ++k) {
          for (int c : by_target[ix.src[a][k]]) {
            if (mab + ix.arity(c) - 1 > bound || !in_bound(a, c)) continue;
            const int ac = ix.graft(a, k, c);
            const int lhs = ix.graft(ac, i, b);
            const int rhs = ix.graft(ab, k + mb - 1, c);
            if (lhs != rhs) {
              out.add("commutation",
                      "slots " + std::to_string(i) + " and " +
                          std::to_string(k) + " of " + name(ix, a) + " with " +
                          name(ix, b) + ", " + name(ix, c) + ": " + name(ix, lhs) +
                          " vs " + name(ix, rhs));
            }
          }
        }
      }
    }
  }
  out.finish();
  return r;
}

}  // namespace opetokit
