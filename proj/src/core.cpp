#include "opetokit/core.hpp"

#include <algorithm>

#include "opetokit/error.hpp"

namespace opetokit {

namespace {

// Suppress flooding: keep the first few witnesses of each law.
constexpr std::size_t kMaxWitnesses = 64;

void add_capped(ValidationReport& r, const std::string& law,
                std::string detail) {
  if (r.count(law) < kMaxWitnesses) r.add(law, std::move(detail));
}

// Object sitting at position `i` of a path (0 = start, arity = end).
ObjId object_at(const OneCellTable& cells, const PastingPath& p,
                std::size_t i) {
  if (i == 0) return p.anchor;
  return cells.at(p.edges[i - 1]).target;
}

PastingPath subpath(const OneCellTable& cells, const PastingPath& p,
                    std::size_t from, std::size_t to) {
  PastingPath out;
  out.anchor = object_at(cells, p, from);
  out.edges.assign(p.edges.begin() + static_cast<std::ptrdiff_t>(from),
                   p.edges.begin() + static_cast<std::ptrdiff_t>(to));
  return out;
}

}  // namespace

PastingPath PastingPath::along(const OneCellTable& cells,
                               std::vector<OneCellId> edges) {
  if (edges.empty()) {
    throw Error(ErrorCode::InvalidInput, "PastingPath::along needs an edge");
  }
  auto it = cells.find(edges.front());
  if (it == cells.end()) throw Error(ErrorCode::DanglingId, edges.front());
  return {it->second.source, std::move(edges)};
}

std::string to_string(const PastingPath& p) {
  if (p.edges.empty()) return "(@" + p.anchor + ")";
  std::string s = "(";
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) s += ",";
    s += p.edges[i];
  }
  return s + ")";
}

Endpoints endpoints(const OneCellTable& cells, const PastingPath& p) {
  if (p.edges.empty()) return {p.anchor, p.anchor};
  return {cells.at(p.edges.front()).source, cells.at(p.edges.back()).target};
}

void check_path(const std::set<ObjId>& objects, const OneCellTable& cells,
                const PastingPath& p) {
  if (!objects.contains(p.anchor)) {
    throw Error(ErrorCode::DanglingId, "object " + p.anchor + " in path " +
                                           to_string(p));
  }
  if (!p.edges.empty()) {
    auto first = cells.find(p.edges.front());
    if (first != cells.end() && first->second.source != p.anchor) {
      throw Error(ErrorCode::FrameMismatch,
                  "anchor " + p.anchor + " is not the source of path " +
                      to_string(p));
    }
  }
  ObjId at = p.anchor;
  for (const auto& e : p.edges) {
    auto it = cells.find(e);
    if (it == cells.end()) {
      throw Error(ErrorCode::DanglingId,
                  "1-cell " + e + " in path " + to_string(p));
    }
    if (it->second.source != at) {
      throw Error(ErrorCode::FrameMismatch,
                  "edges do not compose in path " + to_string(p));
    }
    at = it->second.target;
  }
}

std::vector<PastingPath> enumerate_paths(const std::set<ObjId>& objects,
                                         const OneCellTable& cells,
                                         std::size_t max_arity) {
  std::map<ObjId, std::vector<OneCellId>> out;
  for (const auto& [id, ends] : cells) out[ends.source].push_back(id);

  std::vector<PastingPath> paths;
  std::vector<std::pair<PastingPath, ObjId>> frontier;
  for (const auto& a : objects) {
    paths.push_back(PastingPath::nullary(a));
    frontier.emplace_back(PastingPath::nullary(a), a);
  }
  for (std::size_t len = 1; len <= max_arity; ++len) {
    std::vector<std::pair<PastingPath, ObjId>> next;
    for (const auto& [p, end] : frontier) {
      auto it = out.find(end);
      if (it == out.end()) continue;
      for (const auto& e : it->second) {
        PastingPath q = p;
        q.edges.push_back(e);
        paths.push_back(q);
        next.emplace_back(std::move(q), cells.at(e).target);
      }
    }
    frontier = std::move(next);
  }
  return paths;
}

PastingPath splice(const PastingPath& outer, std::size_t slot,
                   const PastingPath& inner) {
  PastingPath out;
  out.anchor = outer.anchor;
  if (outer.edges.size() == 1 && slot == 0) out.anchor = inner.anchor;
  out.edges.reserve(outer.edges.size() + inner.edges.size());
  for (std::size_t i = 0; i < outer.edges.size(); ++i) {
    if (i == slot) {
      out.edges.insert(out.edges.end(), inner.edges.begin(),
                       inner.edges.end());
    } else {
      out.edges.push_back(outer.edges[i]);
    }
  }
  return out;
}

const OneCellId& FiniteOpOneCat::composite(const PastingPath& p) const {
  auto it = comp.find(p);
  if (it == comp.end()) {
    throw Error(ErrorCode::MissingEntry, "no composite for " + to_string(p));
  }
  return it->second;
}

const TwoCell& FiniteOpTwoCat::cell(const TwoCellId& id) const {
  auto it = cells2.find(id);
  if (it == cells2.end()) throw Error(ErrorCode::DanglingId, "2-cell " + id);
  return it->second;
}

const Endpoints& FiniteOpTwoCat::cell1(const OneCellId& id) const {
  auto it = cells1.find(id);
  if (it == cells1.end()) throw Error(ErrorCode::DanglingId, "1-cell " + id);
  return it->second;
}

ValidationReport validate_op1(const FiniteOpOneCat& x) {
  ValidationReport r;
  r.arity_bound = x.arity_bound;

  for (const auto& [id, ends] : x.cells1) {
    if (!x.objects.contains(ends.source) || !x.objects.contains(ends.target)) {
      add_capped(r, "dangling id", "1-cell " + id + " has unknown endpoint");
    }
  }
  if (!r.ok()) return r;

  for (const auto& [p, result] : x.comp) {
    try {
      check_path(x.objects, x.cells1, p);
    } catch (const Error& e) {
      add_capped(r, e.code() == ErrorCode::DanglingId ? "dangling id"
                                                      : "malformed path",
                 e.what());
      continue;
    }
    if (p.arity() > x.arity_bound) {
      add_capped(r, "arity bound", to_string(p));
    }
    auto it = x.cells1.find(result);
    if (it == x.cells1.end()) {
      add_capped(r, "dangling id",
                 "composite of " + to_string(p) + " is unknown " + result);
      continue;
    }
    if (it->second != endpoints(x.cells1, p)) {
      add_capped(r, "endpoints",
                 "composite " + result + " of " + to_string(p) +
                     " has the wrong source or target");
    }
  }
  if (!r.ok()) return r;

  const auto paths = enumerate_paths(x.objects, x.cells1, x.arity_bound);
  for (const auto& p : paths) {
    if (!x.comp.contains(p)) add_capped(r, "totality", to_string(p));
  }
  if (!r.ok()) return r;

  for (const auto& [id, ends] : x.cells1) {
    if (x.arity_bound == 0) break;
    const auto& c = x.comp.at(PastingPath{ends.source, {id}});
    if (c != id) add_capped(r, "singleton law", "comp([" + id + "]) = " + c);
  }

  // comp(p1 ++ [comp(p2)] ++ p3) = comp(p1 ++ p2 ++ p3)
  for (const auto& p : paths) {
    const std::size_t len = p.arity();
    const auto& whole = x.comp.at(p);
    for (std::size_t i = 0; i <= len; ++i) {
      for (std::size_t j = i; j <= len; ++j) {
        if (j - i == 1) continue;  // covered by the singleton law
        if (len - (j - i) + 1 > x.arity_bound) continue;
        const auto& inner = x.comp.at(subpath(x.cells1, p, i, j));
        PastingPath q;
        q.anchor = p.anchor;
        q.edges.assign(p.edges.begin(),
                       p.edges.begin() + static_cast<std::ptrdiff_t>(i));
        q.edges.push_back(inner);
        q.edges.insert(q.edges.end(),
                       p.edges.begin() + static_cast<std::ptrdiff_t>(j),
                       p.edges.end());
        const auto& got = x.comp.at(q);
        if (got != whole) {
          add_capped(r, "substitution law",
                     "comp" + to_string(q) + " = " + got + " but comp" +
                         to_string(p) + " = " + whole);
        }
      }
    }
  }
  return r;
}

TwoCellId graft(const FiniteOpTwoCat& x, const TwoCellId& outer,
                std::size_t slot, const TwoCellId& inner) {
  const TwoCell& o = x.cell(outer);
  const TwoCell& i = x.cell(inner);
  if (slot >= o.arity()) {
    throw Error(ErrorCode::FrameMismatch,
                "slot " + std::to_string(slot) + " out of range for " + outer);
  }
  if (o.source.edges[slot] != i.target) {
    throw Error(ErrorCode::FrameMismatch,
                inner + " targets " + i.target + " but slot " +
                    std::to_string(slot) + " of " + outer + " is " +
                    o.source.edges[slot]);
  }
  if (o.arity() + i.arity() - 1 > x.arity_bound) {
    throw Error(ErrorCode::ArityBoundExceeded,
                "grafting " + inner + " into " + outer + " exceeds arity " +
                    std::to_string(x.arity_bound));
  }
  auto it = x.grafts.find(GraftKey{outer, slot, inner});
  if (it == x.grafts.end()) {
    throw Error(ErrorCode::MissingEntry, "graft(" + outer + ", " +
                                             std::to_string(slot) + ", " +
                                             inner + ")");
  }
  return it->second;
}

std::size_t tree_arity(const FiniteOpTwoCat& x, const TwoCellTree& t) {
  if (t.is_leaf()) return 1;
  const TwoCell& root = x.cell(t.root);
  if (t.slots.empty()) return root.arity();
  if (t.slots.size() != root.arity()) {
    throw Error(ErrorCode::FrameMismatch,
                "tree at " + t.root + " has the wrong number of slots");
  }
  std::size_t n = 0;
  for (const auto& s : t.slots) n += tree_arity(x, s);
  return n;
}

namespace {

TwoCellId fold_children_first(const FiniteOpTwoCat& x, const TwoCellTree& t,
                              bool right_to_left) {
  TwoCellId cur = t.root;
  if (t.slots.empty()) return cur;
  const std::size_t n = t.slots.size();
  if (n != x.cell(t.root).arity()) {
    throw Error(ErrorCode::FrameMismatch,
                "tree at " + t.root + " has the wrong number of slots");
  }
  if (right_to_left) {
    for (std::size_t k = n; k-- > 0;) {
      if (t.slots[k].is_leaf()) continue;
      cur = graft(x, cur, k,
                  fold_children_first(x, t.slots[k], right_to_left));
    }
  } else {
    std::size_t offset = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (t.slots[k].is_leaf()) {
        ++offset;
        continue;
      }
      auto sub = fold_children_first(x, t.slots[k], right_to_left);
      cur = graft(x, cur, offset, sub);
      offset += x.cell(sub).arity();
    }
  }
  return cur;
}

// `t.root` already sits in `cur` with its source starting at `pos`.
void fold_top_down(const FiniteOpTwoCat& x, TwoCellId& cur,
                   const TwoCellTree& t, std::size_t pos) {
  if (t.slots.empty()) return;
  if (t.slots.size() != x.cell(t.root).arity()) {
    throw Error(ErrorCode::FrameMismatch,
                "tree at " + t.root + " has the wrong number of slots");
  }
  std::size_t at = pos;
  for (const auto& child : t.slots) {
    if (child.is_leaf()) {
      ++at;
      continue;
    }
    cur = graft(x, cur, at, child.root);
    fold_top_down(x, cur, child, at);
    at += tree_arity(x, child);
  }
}

}  // namespace

TwoCellId composite_of_tree(const FiniteOpTwoCat& x, const TwoCellTree& t,
                            FoldOrder order) {
  if (t.is_leaf()) {
    throw Error(ErrorCode::InvalidInput, "a tree needs a root 2-cell");
  }
  switch (order) {
    case FoldOrder::BottomUp: return fold_children_first(x, t, true);
    case FoldOrder::LeftToRight: return fold_children_first(x, t, false);
    case FoldOrder::TopDown: {
      TwoCellId cur = t.root;
      x.cell(cur);
      fold_top_down(x, cur, t, 0);
      return cur;
    }
  }
  return {};
}

std::vector<TwoCellId> occupants_of_niche(const FiniteOpTwoCat& x,
                                          const PastingPath& p) {
  check_path(x.objects, x.cells1, p);
  std::vector<TwoCellId> out;
  for (const auto& [id, c] : x.cells2) {
    if (c.source == p) out.push_back(id);
  }
  return out;
}

FiniteOpOneCat hom_category_of_frame(const FiniteOpTwoCat& x, const ObjId& a,
                                     const ObjId& b) {
  if (!x.objects.contains(a)) throw Error(ErrorCode::DanglingId, "object " + a);
  if (!x.objects.contains(b)) throw Error(ErrorCode::DanglingId, "object " + b);

  FiniteOpOneCat hom;
  hom.arity_bound = x.arity_bound;
  for (const auto& [id, ends] : x.cells1) {
    if (ends.source == a && ends.target == b) hom.objects.insert(id);
  }
  for (const auto& [id, c] : x.cells2) {
    if (c.arity() == 1 && hom.objects.contains(c.source.edges.front())) {
      hom.cells1[id] = Endpoints{c.source.edges.front(), c.target};
    }
  }
  for (const auto& p : enumerate_paths(hom.objects, hom.cells1,
                                       hom.arity_bound)) {
    if (p.empty()) {
      auto it = x.ident2.find(p.anchor);
      if (it == x.ident2.end()) {
        throw Error(ErrorCode::MissingEntry, "identity 2-cell on " + p.anchor);
      }
      hom.comp[p] = it->second;
      continue;
    }
    TwoCellId acc = p.edges.front();
    for (std::size_t k = 1; k < p.edges.size(); ++k) {
      acc = graft(x, p.edges[k], 0, acc);
    }
    hom.comp[p] = acc;
  }
  return hom;
}

std::set<OneCellId> hom_set_of_frame(const FiniteOpOneCat& x, const ObjId& a,
                                     const ObjId& b) {
  if (!x.objects.contains(a)) throw Error(ErrorCode::DanglingId, "object " + a);
  if (!x.objects.contains(b)) throw Error(ErrorCode::DanglingId, "object " + b);
  std::set<OneCellId> out;
  for (const auto& [id, ends] : x.cells1) {
    if (ends.source == a && ends.target == b) out.insert(id);
  }
  return out;
}

}  // namespace opetokit
