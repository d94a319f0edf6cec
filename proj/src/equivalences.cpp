#include "opetokit/equivalences.hpp"

#include <functional>
#include <optional>

#include "collector.hpp"
#include "opetokit/error.hpp"
#include "opetokit/universality.hpp"

namespace opetokit {

using detail::Collector;

namespace {

void require_clean(const ValidationReport& r, const std::string& what) {
  if (r.ok()) return;
  throw Error(ErrorCode::InvalidInput, what + " fails " +
                                           r.violations.front().law + ": " +
                                           r.violations.front().detail);
}

}  // namespace

// ---------------------------------------------------------------- dimension 0

ValidationReport validate_op0(const FiniteOpZeroCat& x) {
  ValidationReport r;
  Collector out(r);
  std::map<ObjId, int> loops;
  for (const auto& [f, e] : x.cells1) {
    if (!x.objects.contains(e.source) || !x.objects.contains(e.target)) {
      out.add("dangling id", "1-cell " + f + " has an unknown endpoint");
    } else if (e.source != e.target) {
      out.add("frame", "1-cell " + f + " is not a loop");
    } else {
      ++loops[e.source];
    }
  }
  for (const auto& a : x.objects) {
    if (loops[a] != 1) {
      out.add("unique occupant",
              "object " + a + " carries " + std::to_string(loops[a]) + " loops");
    }
  }
  return r;
}

std::set<ObjId> zeta0(const FiniteOpZeroCat& x) {
  require_clean(validate_op0(x), "opetopic 0-category");
  return x.objects;
}

FiniteOpZeroCat zeta0_inv(const std::set<ObjId>& s) {
  FiniteOpZeroCat x;
  x.objects = s;
  for (const auto& a : s) x.cells1["1_" + a] = {a, a};
  return x;
}

// ---------------------------------------------------------------- dimension 1

FiniteCategory zeta1(const FiniteOpOneCat& x) {
  require_clean(validate_op1(x), "opetopic 1-category");
  if (x.arity_bound < 2) {
    throw Error(ErrorCode::InvalidInput, "composites need arity bound >= 2");
  }
  FiniteCategory c;
  c.objects = x.objects;
  c.arrows = x.cells1;
  for (const auto& a : x.objects) {
    c.identity[a] = x.composite(PastingPath::nullary(a));
  }
  for (const auto& [f, fe] : x.cells1) {
    for (const auto& [g, ge] : x.cells1) {
      if (fe.target != ge.source) continue;
      c.compose[{g, f}] = x.composite(PastingPath{fe.source, {f, g}});
    }
  }
  return c;
}

FiniteOpOneCat zeta1_inv(const FiniteCategory& c, std::size_t arity_bound) {
  require_clean(validate_category(c), "category");
  FiniteOpOneCat x;
  x.arity_bound = arity_bound;
  x.objects = c.objects;
  x.cells1 = c.arrows;
  for (const auto& p : enumerate_paths(c.objects, c.arrows, arity_bound)) {
    if (p.empty()) {
      x.comp[p] = c.identity.at(p.anchor);
      continue;
    }
    ArrowId acc = p.edges.front();
    for (std::size_t k = 1; k < p.edges.size(); ++k) {
      acc = c.comp(p.edges[k], acc);
    }
    x.comp[p] = acc;
  }
  return x;
}

namespace {

// Objects and 1-cells part of a morphism check, shared by both dimensions.
void check_low(const OpMorphism& f, const std::set<ObjId>& xo,
               const OneCellTable& x1, const std::set<ObjId>& yo,
               const OneCellTable& y1, Collector& out) {
  for (const auto& a : xo) {
    auto it = f.f0.find(a);
    if (it == f.f0.end()) {
      out.add("totality", "object " + a + " is not mapped");
    } else if (!yo.contains(it->second)) {
      out.add("dangling id", "object image " + it->second);
    }
  }
  for (const auto& [g, e] : x1) {
    auto it = f.f1.find(g);
    if (it == f.f1.end()) {
      out.add("totality", "1-cell " + g + " is not mapped");
      continue;
    }
    auto y = y1.find(it->second);
    if (y == y1.end()) {
      out.add("dangling id", "1-cell image " + it->second);
    } else if (f.f0.contains(e.source) && f.f0.contains(e.target) &&
               y->second != Endpoints{f.f0.at(e.source), f.f0.at(e.target)}) {
      out.add("frame", "image of 1-cell " + g + " has the wrong endpoints");
    }
  }
}

PastingPath map_path(const OpMorphism& f, const PastingPath& p) {
  PastingPath q;
  q.anchor = f.f0.at(p.anchor);
  for (const auto& e : p.edges) q.edges.push_back(f.f1.at(e));
  return q;
}

}  // namespace

ValidationReport validate_op_morphism(const OpMorphism& f,
                                      const FiniteOpOneCat& x,
                                      const FiniteOpOneCat& y) {
  ValidationReport r;
  Collector out(r);
  check_low(f, x.objects, x.cells1, y.objects, y.cells1, out);
  if (!r.ok()) return r;
  for (const auto& [p, g] : x.comp) {
    const auto q = map_path(f, p);
    auto it = y.comp.find(q);
    if (it == y.comp.end()) {
      out.add("composite", "image of " + to_string(p) + " has no composite");
    } else if (it->second != f.f1.at(g)) {
      out.add("composite", "comp" + to_string(p) + " = " + g + " maps to " +
                               f.f1.at(g) + " but comp" + to_string(q) + " = " +
                               it->second);
    }
  }
  return r;
}

ValidationReport validate_op_morphism(const OpMorphism& f,
                                      const FiniteOpTwoCat& x,
                                      const FiniteOpTwoCat& y) {
  ValidationReport r;
  Collector out(r);
  check_low(f, x.objects, x.cells1, y.objects, y.cells1, out);
  if (!r.ok()) return r;
  for (const auto& [a, c] : x.cells2) {
    auto it = f.f2.find(a);
    if (it == f.f2.end()) {
      out.add("totality", "2-cell " + a + " is not mapped");
      continue;
    }
    auto yc = y.cells2.find(it->second);
    if (yc == y.cells2.end()) {
      out.add("dangling id", "2-cell image " + it->second);
      continue;
    }
    if (yc->second.source != map_path(f, c.source) ||
        yc->second.target != f.f1.at(c.target)) {
      out.add("frame", "image " + it->second + " of " + a +
                           " does not sit in the image frame");
    }
  }
  if (!r.ok()) return r;
  for (const auto& [g, c] : x.ident2) {
    if (f.f2.at(c) != y.ident2.at(f.f1.at(g))) {
      out.add("identity", "identity on " + g + " is not preserved");
    }
  }
  for (const auto& [k, v] : x.grafts) {
    auto it = y.grafts.find(GraftKey{f.f2.at(k.outer), k.slot, f.f2.at(k.inner)});
    if (it == y.grafts.end() || it->second != f.f2.at(v)) {
      out.add("grafting", "graft(" + k.outer + ", " + std::to_string(k.slot) +
                              ", " + k.inner + ") is not preserved");
    }
  }
  return r;
}

Functor zeta1_mor(const OpMorphism& f, const FiniteOpOneCat& x,
                  const FiniteOpOneCat& y) {
  require_clean(validate_op_morphism(f, x, y), "morphism");
  return Functor{f.f0, f.f1};
}

OpMorphism identity_morphism(const FiniteOpTwoCat& x) {
  OpMorphism f;
  for (const auto& a : x.objects) f.f0[a] = a;
  for (const auto& [g, _] : x.cells1) f.f1[g] = g;
  for (const auto& [c, _] : x.cells2) f.f2[c] = c;
  return f;
}

// ---------------------------------------------------------------- biasing

void check_biasing(const FiniteOpTwoCat& x, const Biasing& b) {
  UniversalityChecker uc(x);
  auto check = [&](const std::optional<TwoCellId>& id, const PastingPath& p) {
    if (!id) {
      throw Error(ErrorCode::InvalidBiasing, "no choice for niche " + to_string(p));
    }
    auto it = x.cells2.find(*id);
    if (it == x.cells2.end()) {
      throw Error(ErrorCode::InvalidBiasing, "unknown chosen cell " + *id);
    }
    if (it->second.source != p) {
      throw Error(ErrorCode::InvalidBiasing,
                  *id + " does not occupy niche " + to_string(p));
    }
    if (!uc.cell2(*id)) {
      throw Error(ErrorCode::InvalidBiasing, *id + " is not universal");
    }
  };
  for (const auto& a : x.objects) {
    auto it = b.iota.find(a);
    check(it == b.iota.end() ? std::nullopt : std::optional(it->second),
          PastingPath::nullary(a));
  }
  for (const auto& [f, fe] : x.cells1) {
    for (const auto& [g, ge] : x.cells1) {
      if (fe.target != ge.source) continue;
      auto it = b.c.find({f, g});
      check(it == b.c.end() ? std::nullopt : std::optional(it->second),
            PastingPath{fe.source, {f, g}});
    }
  }
  if (b.iota.size() != x.objects.size()) {
    throw Error(ErrorCode::InvalidBiasing, "choice for an unknown object");
  }
  for (const auto& [k, _] : b.c) {
    if (!x.cells1.contains(k.first) || !x.cells1.contains(k.second) ||
        x.cells1.at(k.first).target != x.cells1.at(k.second).source) {
      throw Error(ErrorCode::InvalidBiasing,
                  "choice for non-composable (" + k.first + ", " + k.second + ")");
    }
  }
}

Biasing choose_biasing(const FiniteOpTwoCat& x) {
  UniversalityChecker uc(x);
  Biasing b;
  for (const auto& a : x.objects) {
    auto us = uc.universal_occupants(PastingPath::nullary(a));
    if (us.empty()) {
      throw Error(ErrorCode::NoUniversalOccupant, "nullary niche at " + a);
    }
    b.iota[a] = us.front();
  }
  for (const auto& [f, fe] : x.cells1) {
    for (const auto& [g, ge] : x.cells1) {
      if (fe.target != ge.source) continue;
      PastingPath p{fe.source, {f, g}};
      auto us = uc.universal_occupants(p);
      if (us.empty()) {
        throw Error(ErrorCode::NoUniversalOccupant, "niche " + to_string(p));
      }
      b.c[{f, g}] = us.front();
    }
  }
  return b;
}

// ---------------------------------------------------------------- zeta2

namespace {

// 1-ary cells by source, for the "unique θ such that" searches.
class UnarySolver {
 public:
  explicit UnarySolver(const FiniteOpTwoCat& x) : x_(x) {
    for (const auto& [id, c] : x.cells2) {
      if (c.arity() == 1) from_[c.source.edges[0]].push_back(id);
    }
  }

  TwoCellId solve(const OneCellId& s, const OneCellId& t,
                  const std::function<bool(const TwoCellId&)>& pred,
                  const std::string& what) const {
    std::optional<TwoCellId> hit;
    auto it = from_.find(s);
    if (it != from_.end()) {
      for (const auto& th : it->second) {
        if (x_.cells2.at(th).target != t || !pred(th)) continue;
        if (hit) {
          throw Error(ErrorCode::NonUniqueSolution,
                      what + ": both " + *hit + " and " + th);
        }
        hit = th;
      }
    }
    if (!hit) throw Error(ErrorCode::NoSolution, what);
    return *hit;
  }

  const std::vector<TwoCellId>& from(const OneCellId& s) const {
    static const std::vector<TwoCellId> none;
    auto it = from_.find(s);
    return it == from_.end() ? none : it->second;
  }

 private:
  const FiniteOpTwoCat& x_;
  std::map<OneCellId, std::vector<TwoCellId>> from_;
};

}  // namespace

FiniteBicategory zeta2(const FiniteOpTwoCat& x, const Biasing& b) {
  check_biasing(x, b);
  UnarySolver sv(x);
  auto c = [&](const OneCellId& f, const OneCellId& g) -> const TwoCellId& {
    return b.c.at({f, g});
  };
  auto tgt = [&](const TwoCellId& id) -> const OneCellId& {
    return x.cell(id).target;
  };

  FiniteBicategory B;
  B.objects = x.objects;
  B.cells1 = x.cells1;
  for (const auto& [id, cell] : x.cells2) {
    if (cell.arity() == 1) B.cells2[id] = {cell.source.edges[0], cell.target};
  }
  B.id2 = x.ident2;
  for (const auto& [a, i] : b.iota) B.unit[a] = tgt(i);
  for (const auto& [k, u] : b.c) B.hcomp1[{k.second, k.first}] = tgt(u);

  for (const auto& [al, ae] : B.cells2) {
    for (const auto& be : sv.from(ae.target)) {
      B.vcomp[{be, al}] = graft(x, be, 0, al);
    }
  }

  for (const auto& [al, ae] : B.cells2) {
    const auto& f1 = ae.source;
    const auto& f2 = ae.target;
    for (const auto& [be, bee] : B.cells2) {
      const auto& g1 = bee.source;
      const auto& g2 = bee.target;
      if (x.cell1(f1).target != x.cell1(g1).source) continue;
      const auto rhs = graft(x, graft(x, c(f2, g2), 1, be), 0, al);
      const auto& c1 = c(f1, g1);
      B.hcomp2[{be, al}] = sv.solve(
          tgt(c1), tgt(c(f2, g2)),
          [&](const TwoCellId& th) { return graft(x, th, 0, c1) == rhs; },
          "horizontal composite of " + be + " and " + al);
    }
  }

  for (const auto& [f, fe] : x.cells1) {
    for (const auto& [g, ge] : x.cells1) {
      if (ge.source != fe.target) continue;
      for (const auto& [h, he] : x.cells1) {
        if (he.source != ge.target) continue;
        const auto& hg = B.comp1(h, g);
        const auto& gf = B.comp1(g, f);
        const auto theta = graft(x, c(f, hg), 1, c(g, h));
        const auto phi = graft(x, c(gf, h), 0, c(f, g));
        B.assoc[{h, g, f}] = sv.solve(
            tgt(theta), tgt(phi),
            [&](const TwoCellId& al) { return graft(x, al, 0, theta) == phi; },
            "associator at (" + h + ", " + g + ", " + f + ")");
      }
    }
    const auto& ia = B.I(fe.source);
    const auto& ib = B.I(fe.target);
    const auto& one = x.ident2.at(f);
    {
      const auto k = graft(x, c(ia, f), 0, b.iota.at(fe.source));
      B.runit[f] = sv.solve(
          tgt(k), f, [&](const TwoCellId& r) { return graft(x, r, 0, k) == one; },
          "right unitor at " + f);
    }
    {
      const auto k = graft(x, c(f, ib), 1, b.iota.at(fe.target));
      B.lunit[f] = sv.solve(
          tgt(k), f, [&](const TwoCellId& l) { return graft(x, l, 0, k) == one; },
          "left unitor at " + f);
    }
  }
  return B;
}

// ---------------------------------------------------------------- zeta2_inv

namespace {

Bracketing replace_leaf(const Bracketing& t, std::size_t i, const Bracketing& sub,
                        std::size_t& at) {
  if (t.is_leaf()) return at++ == i ? sub : t;
  auto l = replace_leaf(t.kids[0], i, sub, at);
  auto r = replace_leaf(t.kids[1], i, sub, at);
  return Bracketing::node(std::move(l), std::move(r));
}

Bracketing replace_leaf(const Bracketing& t, std::size_t i,
                        const Bracketing& sub) {
  std::size_t at = 0;
  return replace_leaf(t, i, sub, at);
}

class Generator {
 public:
  Generator(const FiniteBicategory& b, std::size_t m) : B(b), M(m) {
    for (const auto& [x, e] : B.cells2) from2[e.source].push_back(x);
  }

  OneCellId N(const PastingPath& p) {
    auto it = nf.find(p);
    if (it != nf.end()) return it->second;
    OneCellId v = p.empty() ? B.I(p.anchor)
                            : tree_value(B, p.edges, Bracketing::normal(p.arity()));
    nf.emplace(p, v);
    return v;
  }

  TwoCellId id_of(const PastingPath& p, const TwoCellId& alpha) {
    if (p.arity() == 1) return alpha;
    std::string s;
    if (p.empty()) {
      s = "iota[" + p.anchor + "]";
    } else {
      s = p.arity() == 2 ? "c[" : "u[";
      for (std::size_t i = 0; i < p.edges.size(); ++i) {
        if (i) s += ",";
        s += p.edges[i];
      }
      s += "]";
    }
    if (alpha != B.id(N(p))) s += "/" + alpha;
    return s;
  }

  // (q, β) grafted into slot i of (p, α)
  std::pair<PastingPath, TwoCellId> graft(const PastingPath& p,
                                          const TwoCellId& alpha,
                                          std::size_t i, const PastingPath& q,
                                          const TwoCellId& beta) {
    const std::size_t m = p.arity();
    std::vector<TwoCellId> ws;
    for (const auto& e : p.edges) ws.push_back(B.id(e));
    ws[i] = beta;
    const auto W = horizontal_tree(B, Bracketing::normal(m), ws);

    if (!q.empty()) {
      const std::size_t k = q.arity();
      PastingPath p2 = splice(p, i, q);
      const auto T = replace_leaf(Bracketing::normal(m), i, Bracketing::normal(k));
      const auto kappa =
          coherence_cell(B, p2.edges, Bracketing::normal(m + k - 1), T);
      return {p2, B.vert(alpha, B.vert(W, kappa))};
    }

    const ObjId& a = q.anchor;
    PastingPath p1;  // p without edge i
    p1.anchor = (i == 0 && m > 1) ? B.cell1(p.edges[0]).target : p.anchor;
    if (m == 1) p1.anchor = a;
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) p1.edges.push_back(p.edges[j]);
    }
    PastingPath p3 = p;  // edge i replaced by the unit
    p3.edges[i] = B.I(a);

    TwoCellId U;
    if (m == 1) {
      U = B.id(B.I(a));
    } else {
      const std::size_t j = i > 0 ? i - 1 : 0;
      const auto unitor = i > 0 ? inverse_2cell(B, B.l(p.edges[i - 1]))
                                : inverse_2cell(B, B.r(p.edges[1]));
      std::vector<TwoCellId> us;
      for (const auto& e : p1.edges) us.push_back(B.id(e));
      us[j] = unitor;
      const auto W1 = horizontal_tree(B, Bracketing::normal(m - 1), us);
      const auto T1 = replace_leaf(
          Bracketing::normal(m - 1), j,
          Bracketing::node(Bracketing::leaf(), Bracketing::leaf()));
      const auto k1 = coherence_cell(B, p3.edges, T1, Bracketing::normal(m));
      U = B.vert(k1, W1);
    }
    return {p1, B.vert(alpha, B.vert(W, U))};
  }

  const FiniteBicategory& B;
  std::size_t M;
  std::map<OneCellId, std::vector<TwoCellId>> from2;
  std::map<PastingPath, OneCellId> nf;
};

}  // namespace

GeneratedOpTwoCat zeta2_inv(const FiniteBicategory& b, std::size_t arity_bound) {
  require_clean(validate_bicategory(b), "bicategory");
  if (arity_bound < 2 || arity_bound > 16) {
    throw Error(ErrorCode::ArityBoundExceeded,
                "arity bound must lie between 2 and 16");
  }
  Generator gen(b, arity_bound);
  GeneratedOpTwoCat out;
  auto& x = out.x;
  x.arity_bound = arity_bound;
  x.objects = b.objects;
  x.cells1 = b.cells1;

  std::map<OneCellId, std::vector<TwoCellId>> by_target;
  for (const auto& p : enumerate_paths(b.objects, b.cells1, arity_bound)) {
    const auto n = gen.N(p);
    for (const auto& al : gen.from2[n]) {
      const auto id = gen.id_of(p, al);
      const auto& h = b.cells2.at(al).target;
      if (!x.cells2.emplace(id, TwoCell{p, h}).second) {
        throw Error(ErrorCode::InvalidInput, "generated cell id " + id +
                                                 " collides with another cell");
      }
      out.presentation[id] = {p, al};
      by_target[h].push_back(id);
    }
    out.canonical[p] = gen.id_of(p, b.id(n));
  }
  for (const auto& [f, _] : b.cells1) x.ident2[f] = b.id(f);

  for (const auto& [outer, po] : out.presentation) {
    const std::size_t m = po.path.arity();
    for (std::size_t i = 0; i < m; ++i) {
      for (const auto& inner : by_target[po.path.edges[i]]) {
        const auto& pi = out.presentation.at(inner);
        if (m + pi.path.arity() - 1 > arity_bound) continue;
        auto [p2, a2] = gen.graft(po.path, po.alpha, i, pi.path, pi.alpha);
        x.grafts[GraftKey{outer, i, inner}] = gen.id_of(p2, a2);
      }
    }
  }

  for (const auto& a : b.objects) {
    out.biasing.iota[a] = out.canonical.at(PastingPath::nullary(a));
  }
  for (const auto& [k, _] : b.hcomp1) {
    const auto& f = k.second;
    const auto& g = k.first;
    out.biasing.c[{f, g}] =
        out.canonical.at(PastingPath{b.cell1(f).source, {f, g}});
  }
  return out;
}

TwoCellTree bracketing_tree(const FiniteOpTwoCat& x, const Biasing& b,
                            const std::vector<OneCellId>& path,
                            const Bracketing& t) {
  if (t.leaves() != path.size()) {
    throw Error(ErrorCode::PathMismatch, "bracketing does not fit the path");
  }
  if (t.is_leaf()) {
    throw Error(ErrorCode::InvalidInput, "a tree needs at least two leaves");
  }
  std::function<std::pair<TwoCellTree, OneCellId>(const Bracketing&,
                                                  std::size_t&)>
      go = [&](const Bracketing& s, std::size_t& at)
      -> std::pair<TwoCellTree, OneCellId> {
    if (s.is_leaf()) return {TwoCellTree::leaf(), path.at(at++)};
    auto [l, lv] = go(s.kids[0], at);
    auto [r, rv] = go(s.kids[1], at);
    auto it = b.c.find({lv, rv});
    if (it == b.c.end()) {
      throw Error(ErrorCode::InvalidBiasing,
                  "no chosen cell for (" + lv + ", " + rv + ")");
    }
    TwoCellTree node = TwoCellTree::node(it->second);
    if (!l.is_leaf() || !r.is_leaf()) node.slots = {l, r};
    return {node, x.cell(it->second).target};
  };
  std::size_t at = 0;
  return go(t, at).first;
}

// ---------------------------------------------------------------- morphisms

LaxFunctor zeta2_mor(const OpMorphism& F, const FiniteOpTwoCat& x,
                     const Biasing& bx, const FiniteOpTwoCat& y,
                     const Biasing& by) {
  require_clean(validate_op_morphism(F, x, y), "morphism");
  check_biasing(x, bx);
  check_biasing(y, by);
  UnarySolver sv(y);
  LaxFunctor G;
  G.on_objects = F.f0;
  G.on_1cells = F.f1;
  for (const auto& [id, c] : x.cells2) {
    if (c.arity() == 1) G.on_2cells[id] = F.f2.at(id);
  }
  for (const auto& [k, u] : bx.c) {
    const auto& cy = by.c.at({F.f1.at(k.first), F.f1.at(k.second)});
    const auto& img = F.f2.at(u);
    G.phi[{k.second, k.first}] = sv.solve(
        y.cell(cy).target, F.f1.at(x.cell(u).target),
        [&](const TwoCellId& th) { return graft(y, th, 0, cy) == img; },
        "constraint at (" + k.second + ", " + k.first + ")");
  }
  for (const auto& [a, i] : bx.iota) {
    const auto& iy = by.iota.at(F.f0.at(a));
    const auto& img = F.f2.at(i);
    G.phi_unit[a] = sv.solve(
        y.cell(iy).target, F.f1.at(x.cell(i).target),
        [&](const TwoCellId& th) { return graft(y, th, 0, iy) == img; },
        "unit constraint at " + a);
  }
  return G;
}

OpMorphism zeta2_mor_inv(const LaxFunctor& G, const GeneratedOpTwoCat& src,
                         const GeneratedOpTwoCat& dst) {
  const auto& X = src.x;
  const auto& Y = dst.x;
  OpMorphism F;
  F.f0 = G.on_objects;
  F.f1 = G.on_1cells;
  for (const auto& a : X.objects) {
    if (!F.f0.contains(a)) throw Error(ErrorCode::InvalidInput, "object " + a);
  }
  for (const auto& [f, _] : X.cells1) {
    if (!F.f1.contains(f)) throw Error(ErrorCode::InvalidInput, "1-cell " + f);
  }
  auto G2 = [&](const TwoCellId& al) -> const TwoCellId& {
    auto it = G.on_2cells.find(al);
    if (it == G.on_2cells.end()) {
      throw Error(ErrorCode::InvalidInput, "2-cell " + al + " is not mapped");
    }
    return it->second;
  };

  std::map<PastingPath, TwoCellId> canon;
  std::function<TwoCellId(const PastingPath&)> image_of_canonical =
      [&](const PastingPath& p) -> TwoCellId {
    auto it = canon.find(p);
    if (it != canon.end()) return it->second;
    TwoCellId v;
    if (p.empty()) {
      v = graft(Y, G.phi_unit.at(p.anchor), 0,
                dst.biasing.iota.at(F.f0.at(p.anchor)));
    } else if (p.arity() == 1) {
      v = Y.ident2.at(F.f1.at(p.edges[0]));
    } else if (p.arity() == 2) {
      const auto& f = p.edges[0];
      const auto& g = p.edges[1];
      v = graft(Y, G.phi.at({g, f}), 0, dst.biasing.c.at({F.f1.at(f), F.f1.at(g)}));
    } else {
      PastingPath rest{X.cell1(p.edges[1]).source,
                       {p.edges.begin() + 1, p.edges.end()}};
      const auto& nrest = X.cell(src.canonical.at(rest)).target;
      PastingPath head{p.anchor, {p.edges[0], nrest}};
      v = graft(Y, image_of_canonical(head), 1, image_of_canonical(rest));
    }
    canon.emplace(p, v);
    return v;
  };

  for (const auto& [id, pr] : src.presentation) {
    if (pr.path.arity() == 1) {
      F.f2[id] = G2(pr.alpha);
    } else {
      F.f2[id] = graft(Y, G2(pr.alpha), 0, image_of_canonical(pr.path));
    }
  }
  return F;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Lax: return "lax";
    case Verdict::Weak: return "weak";
    case Verdict::Strict: return "strict";
  }
  return "lax";
}

Classification classify_morphism(const OpMorphism& F, const FiniteOpTwoCat& x,
                                 const Biasing& bx, const FiniteOpTwoCat& y,
                                 const Biasing& by) {
  require_clean(validate_op_morphism(F, x, y), "morphism");
  check_biasing(x, bx);
  check_biasing(y, by);

  Classification out;
  out.verdict = Verdict::Strict;
  auto miss = [&](const TwoCellId& from) {
    if (out.verdict == Verdict::Strict) {
      out.verdict = Verdict::Weak;
      out.witness = from;
      out.image = F.f2.at(from);
    }
  };
  for (const auto& [a, i] : bx.iota) {
    if (F.f2.at(i) != by.iota.at(F.f0.at(a))) miss(i);
  }
  for (const auto& [k, u] : bx.c) {
    if (F.f2.at(u) != by.c.at({F.f1.at(k.first), F.f1.at(k.second)})) miss(u);
  }
  if (out.verdict == Verdict::Strict) return out;

  UniversalityChecker ux(x);
  UniversalityChecker uy(y);
  auto lax = [&](const std::string& from, const std::string& to, bool one) {
    out.verdict = Verdict::Lax;
    out.witness = from;
    out.image = to;
    out.witness_is_1cell = one;
  };
  // chosen cells first
  for (const auto& [a, i] : bx.iota) {
    if (!uy.cell2(F.f2.at(i))) {
      lax(i, F.f2.at(i), false);
      return out;
    }
  }
  for (const auto& [k, u] : bx.c) {
    if (!uy.cell2(F.f2.at(u))) {
      lax(u, F.f2.at(u), false);
      return out;
    }
  }
  for (const auto& [id, _] : x.cells2) {
    if (ux.cell2(id) && !uy.cell2(F.f2.at(id))) {
      lax(id, F.f2.at(id), false);
      return out;
    }
  }
  for (const auto& [f, _] : x.cells1) {
    if (ux.cell1(f) && !uy.cell1(F.f1.at(f))) {
      lax(f, F.f1.at(f), true);
      return out;
    }
  }
  return out;
}

}  // namespace opetokit
