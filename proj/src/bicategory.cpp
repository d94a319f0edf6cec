#include "opetokit/bicategory.hpp"

#include <algorithm>

#include "collector.hpp"
#include "opetokit/error.hpp"

namespace opetokit {

using detail::Collector;

namespace {

std::string pair_str(const std::string& g, const std::string& f) {
  return "(" + g + ", " + f + ")";
}

std::string triple_str(const std::string& h, const std::string& g,
                       const std::string& f) {
  return "(" + h + ", " + g + ", " + f + ")";
}

}  // namespace

// ---------------------------------------------------------------- categories

const ArrowId& FiniteCategory::comp(const ArrowId& g, const ArrowId& f) const {
  auto it = compose.find({g, f});
  if (it == compose.end()) {
    throw Error(ErrorCode::MissingComposite, g + " after " + f);
  }
  return it->second;
}

ValidationReport validate_category(const FiniteCategory& c) {
  ValidationReport r;
  Collector out(r);
  for (const auto& [id, e] : c.arrows) {
    if (!c.objects.contains(e.source) || !c.objects.contains(e.target)) {
      out.add("dangling id", "arrow " + id + " has an unknown endpoint");
    }
  }
  for (const auto& [o, id] : c.identity) {
    if (!c.objects.contains(o)) out.add("dangling id", "identity of " + o);
    if (!c.arrows.contains(id)) out.add("dangling id", "identity arrow " + id);
  }
  for (const auto& [k, v] : c.compose) {
    for (const auto* id : {&k.first, &k.second, &v}) {
      if (!c.arrows.contains(*id)) {
        out.add("dangling id", "composite table mentions " + *id);
      }
    }
  }
  if (!r.ok()) return r;

  for (const auto& o : c.objects) {
    auto it = c.identity.find(o);
    if (it == c.identity.end()) {
      out.add("totality", "no identity on " + o);
    } else if (c.arrows.at(it->second) != Endpoints{o, o}) {
      out.add("typing", "identity " + it->second + " is not an endo-arrow of " + o);
    }
  }
  for (const auto& [k, v] : c.compose) {
    const auto& g = c.arrows.at(k.first);
    const auto& f = c.arrows.at(k.second);
    if (f.target != g.source) {
      out.add("typing", "composite recorded for non-composable " +
                            pair_str(k.first, k.second));
    } else if (c.arrows.at(v) != Endpoints{f.source, g.target}) {
      out.add("typing", pair_str(k.first, k.second) + " composes to " + v +
                            " with the wrong endpoints");
    }
  }
  for (const auto& [f, fe] : c.arrows) {
    for (const auto& [g, ge] : c.arrows) {
      if (fe.target == ge.source && !c.compose.contains({g, f})) {
        out.add("totality", "no composite " + pair_str(g, f));
      }
    }
  }
  if (!r.ok()) return r;

  for (const auto& [f, fe] : c.arrows) {
    const auto& is = c.identity.at(fe.source);
    const auto& it = c.identity.at(fe.target);
    if (c.comp(f, is) != f) out.add("identity", f + " after 1_" + fe.source);
    if (c.comp(it, f) != f) out.add("identity", "1_" + fe.target + " after " + f);
  }
  std::map<ObjId, std::vector<ArrowId>> out_of;
  for (const auto& [f, fe] : c.arrows) out_of[fe.source].push_back(f);
  for (const auto& [f, fe] : c.arrows) {
    for (const auto& g : out_of[fe.target]) {
      const auto& gf = c.comp(g, f);
      for (const auto& h : out_of[c.arrows.at(g).target]) {
        const auto& lhs = c.comp(c.comp(h, g), f);
        const auto& rhs = c.comp(h, gf);
        if (lhs != rhs) {
          out.add("associativity", triple_str(h, g, f) + ": (hg)f = " + lhs +
                                       ", h(gf) = " + rhs);
        }
      }
    }
  }
  return r;
}

ValidationReport validate_functor(const Functor& f, const FiniteCategory& c,
                                  const FiniteCategory& d) {
  ValidationReport r;
  Collector out(r);
  for (const auto& o : c.objects) {
    auto it = f.on_objects.find(o);
    if (it == f.on_objects.end()) {
      out.add("totality", "object " + o + " is not mapped");
    } else if (!d.objects.contains(it->second)) {
      out.add("dangling id", "object image " + it->second);
    }
  }
  for (const auto& [a, _] : c.arrows) {
    auto it = f.on_arrows.find(a);
    if (it == f.on_arrows.end()) {
      out.add("totality", "arrow " + a + " is not mapped");
    } else if (!d.arrows.contains(it->second)) {
      out.add("dangling id", "arrow image " + it->second);
    }
  }
  if (!r.ok()) return r;
  for (const auto& [a, e] : c.arrows) {
    const auto& fa = d.arrows.at(f.on_arrows.at(a));
    if (fa != Endpoints{f.on_objects.at(e.source), f.on_objects.at(e.target)}) {
      out.add("typing", "image of " + a + " has the wrong endpoints");
    }
  }
  if (!r.ok()) return r;
  for (const auto& [o, id] : c.identity) {
    if (f.on_arrows.at(id) != d.identity.at(f.on_objects.at(o))) {
      out.add("functor", "identity on " + o + " is not preserved");
    }
  }
  for (const auto& [k, v] : c.compose) {
    const auto& lhs = f.on_arrows.at(v);
    const auto& rhs = d.comp(f.on_arrows.at(k.first), f.on_arrows.at(k.second));
    if (lhs != rhs) {
      out.add("functor", "composite " + pair_str(k.first, k.second) +
                             " is not preserved");
    }
  }
  return r;
}

bool is_invertible_arrow(const FiniteCategory& c, const ArrowId& f) {
  auto it = c.arrows.find(f);
  if (it == c.arrows.end()) throw Error(ErrorCode::DanglingId, "arrow " + f);
  const auto& e = it->second;
  for (const auto& [g, ge] : c.arrows) {
    if (ge.source != e.target || ge.target != e.source) continue;
    if (c.comp(g, f) == c.identity.at(e.source) &&
        c.comp(f, g) == c.identity.at(e.target)) {
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------- bicategories

const OneCellId& FiniteBicategory::comp1(const OneCellId& g,
                                         const OneCellId& f) const {
  auto it = hcomp1.find({g, f});
  if (it == hcomp1.end()) {
    throw Error(ErrorCode::MissingComposite, "1-cell composite " + pair_str(g, f));
  }
  return it->second;
}

const TwoCellId& FiniteBicategory::hcomp(const TwoCellId& b,
                                         const TwoCellId& a) const {
  auto it = hcomp2.find({b, a});
  if (it == hcomp2.end()) {
    throw Error(ErrorCode::MissingComposite,
                "horizontal composite " + pair_str(b, a));
  }
  return it->second;
}

const TwoCellId& FiniteBicategory::vert(const TwoCellId& b,
                                        const TwoCellId& a) const {
  auto it = vcomp.find({b, a});
  if (it == vcomp.end()) {
    throw Error(ErrorCode::MissingComposite,
                "vertical composite " + pair_str(b, a));
  }
  return it->second;
}

const TwoCellId& FiniteBicategory::id(const OneCellId& f) const {
  auto it = id2.find(f);
  if (it == id2.end()) throw Error(ErrorCode::MissingEntry, "identity on " + f);
  return it->second;
}

const OneCellId& FiniteBicategory::I(const ObjId& a) const {
  auto it = unit.find(a);
  if (it == unit.end()) throw Error(ErrorCode::MissingEntry, "unit on " + a);
  return it->second;
}

const TwoCellId& FiniteBicategory::a(const OneCellId& h, const OneCellId& g,
                                     const OneCellId& f) const {
  auto it = assoc.find({h, g, f});
  if (it == assoc.end()) {
    throw Error(ErrorCode::MissingEntry, "associator " + triple_str(h, g, f));
  }
  return it->second;
}

const TwoCellId& FiniteBicategory::l(const OneCellId& f) const {
  auto it = lunit.find(f);
  if (it == lunit.end()) throw Error(ErrorCode::MissingEntry, "l_" + f);
  return it->second;
}

const TwoCellId& FiniteBicategory::r(const OneCellId& f) const {
  auto it = runit.find(f);
  if (it == runit.end()) throw Error(ErrorCode::MissingEntry, "r_" + f);
  return it->second;
}

const Endpoints& FiniteBicategory::cell1(const OneCellId& f) const {
  auto it = cells1.find(f);
  if (it == cells1.end()) throw Error(ErrorCode::DanglingId, "1-cell " + f);
  return it->second;
}

const Endpoints& FiniteBicategory::cell2(const TwoCellId& x) const {
  auto it = cells2.find(x);
  if (it == cells2.end()) throw Error(ErrorCode::DanglingId, "2-cell " + x);
  return it->second;
}

std::vector<TwoCellId> FiniteBicategory::hom2(const OneCellId& f,
                                              const OneCellId& g) const {
  std::vector<TwoCellId> out;
  for (const auto& [id, e] : cells2) {
    if (e.source == f && e.target == g) out.push_back(id);
  }
  return out;
}

FiniteCategory FiniteBicategory::hom_category(const ObjId& a,
                                              const ObjId& b) const {
  FiniteCategory c;
  for (const auto& [f, e] : cells1) {
    if (e.source == a && e.target == b) c.objects.insert(f);
  }
  for (const auto& [x, e] : cells2) {
    if (c.objects.contains(e.source)) c.arrows[x] = e;
  }
  for (const auto& [k, v] : vcomp) {
    if (c.arrows.contains(k.first)) c.compose[k] = v;
  }
  for (const auto& f : c.objects) {
    auto it = id2.find(f);
    if (it != id2.end()) c.identity[f] = it->second;
  }
  return c;
}

namespace {

// Typing and totality of every structure table.
void check_tables(const FiniteBicategory& b, Collector& out) {
  for (const auto& [f, e] : b.cells1) {
    for (const auto& [gf, ge] : b.cells1) {
      if (e.target != ge.source) continue;
      auto it = b.hcomp1.find({gf, f});
      if (it == b.hcomp1.end()) {
        out.add("totality", "no 1-cell composite " + pair_str(gf, f));
      } else if (!b.cells1.contains(it->second)) {
        out.add("dangling id", "1-cell composite " + it->second);
      } else if (b.cells1.at(it->second) != Endpoints{e.source, ge.target}) {
        out.add("typing", "1-cell composite " + pair_str(gf, f) + " = " +
                              it->second + " has the wrong endpoints");
      }
    }
  }
  for (const auto& o : b.objects) {
    auto it = b.unit.find(o);
    if (it == b.unit.end()) {
      out.add("totality", "no unit on " + o);
    } else if (!b.cells1.contains(it->second) ||
               b.cells1.at(it->second) != Endpoints{o, o}) {
      out.add("typing", "unit on " + o + " is not an endo-1-cell");
    }
  }
}

bool typed(const FiniteBicategory& b, const TwoCellId& x, const OneCellId& s,
           const OneCellId& t) {
  auto it = b.cells2.find(x);
  return it != b.cells2.end() && it->second.source == s && it->second.target == t;
}

void check_2tables(const FiniteBicategory& b, Collector& out) {
  std::map<OneCellId, std::vector<TwoCellId>> from;
  for (const auto& [x, e] : b.cells2) from[e.source].push_back(x);

  for (const auto& [f, _] : b.cells1) {
    auto it = b.id2.find(f);
    if (it == b.id2.end()) {
      out.add("totality", "no identity 2-cell on " + f);
    } else if (!typed(b, it->second, f, f)) {
      out.add("typing", "identity 2-cell on " + f + " is mistyped");
    }
  }
  for (const auto& [x, xe] : b.cells2) {
    for (const auto& y : from[xe.target]) {
      auto it = b.vcomp.find({y, x});
      if (it == b.vcomp.end()) {
        out.add("totality", "no vertical composite " + pair_str(y, x));
      } else if (!typed(b, it->second, xe.source, b.cells2.at(y).target)) {
        out.add("typing", "vertical composite " + pair_str(y, x) + " = " +
                              it->second + " is mistyped");
      }
    }
  }
  for (const auto& [x, xe] : b.cells2) {
    for (const auto& [y, ye] : b.cells2) {
      if (b.cells1.at(xe.source).target != b.cells1.at(ye.source).source) {
        continue;
      }
      auto it = b.hcomp2.find({y, x});
      if (it == b.hcomp2.end()) {
        out.add("totality", "no horizontal composite " + pair_str(y, x));
        continue;
      }
      const auto s = b.hcomp1.at({ye.source, xe.source});
      const auto t = b.hcomp1.at({ye.target, xe.target});
      if (!typed(b, it->second, s, t)) {
        out.add("typing", "horizontal composite " + pair_str(y, x) + " = " +
                              it->second + " is mistyped");
      }
    }
  }
  for (const auto& [f, fe] : b.cells1) {
    const auto& ia = b.unit.at(fe.source);
    const auto& ib = b.unit.at(fe.target);
    auto r = b.runit.find(f);
    if (r == b.runit.end()) {
      out.add("totality", "no r_" + f);
    } else if (!typed(b, r->second, b.hcomp1.at({f, ia}), f)) {
      out.add("typing", "r_" + f + " is not " + f + " after I => " + f);
    }
    auto l = b.lunit.find(f);
    if (l == b.lunit.end()) {
      out.add("totality", "no l_" + f);
    } else if (!typed(b, l->second, b.hcomp1.at({ib, f}), f)) {
      out.add("typing", "l_" + f + " is not I after " + f + " => " + f);
    }
    for (const auto& [g, ge] : b.cells1) {
      if (ge.source != fe.target) continue;
      for (const auto& [h, he] : b.cells1) {
        if (he.source != ge.target) continue;
        auto a = b.assoc.find({h, g, f});
        if (a == b.assoc.end()) {
          out.add("totality", "no associator " + triple_str(h, g, f));
          continue;
        }
        const auto s = b.hcomp1.at({b.hcomp1.at({h, g}), f});
        const auto t = b.hcomp1.at({h, b.hcomp1.at({g, f})});
        if (!typed(b, a->second, s, t)) {
          out.add("typing", "associator " + triple_str(h, g, f) + " is mistyped");
        }
      }
    }
  }
}

}  // namespace

std::vector<PentagonInstance> pentagon_instances(const FiniteBicategory& b) {
  std::vector<PentagonInstance> out;
  std::map<ObjId, std::vector<OneCellId>> from;
  for (const auto& [f, e] : b.cells1) from[e.source].push_back(f);
  for (const auto& [f, fe] : b.cells1) {
    for (const auto& g : from[fe.target]) {
      for (const auto& h : from[b.cells1.at(g).target]) {
        for (const auto& k : from[b.cells1.at(h).target]) {
          const auto& kh = b.comp1(k, h);
          const auto& hg = b.comp1(h, g);
          const auto& gf = b.comp1(g, f);
          PentagonInstance p{k, h, g, f, {}, {}};
          p.lhs = b.vert(b.a(k, h, gf), b.a(kh, g, f));
          p.rhs = b.vert(b.hcomp(b.id(k), b.a(h, g, f)),
                         b.vert(b.a(k, hg, f),
                                b.hcomp(b.a(k, h, g), b.id(f))));
          out.push_back(std::move(p));
        }
      }
    }
  }
  return out;
}

bool is_invertible_2cell(const FiniteBicategory& b, const TwoCellId& x) {
  const auto& e = b.cell2(x);
  for (const auto& y : b.hom2(e.target, e.source)) {
    if (b.vert(y, x) == b.id(e.source) && b.vert(x, y) == b.id(e.target)) {
      return true;
    }
  }
  return false;
}

TwoCellId inverse_2cell(const FiniteBicategory& b, const TwoCellId& x) {
  const auto& e = b.cell2(x);
  for (const auto& y : b.hom2(e.target, e.source)) {
    if (b.vert(y, x) == b.id(e.source) && b.vert(x, y) == b.id(e.target)) {
      return y;
    }
  }
  throw Error(ErrorCode::NoSolution, "2-cell " + x + " is not invertible");
}

namespace {

bool isomorphic(const FiniteBicategory& b, const OneCellId& f,
                const OneCellId& g) {
  for (const auto& x : b.hom2(f, g)) {
    if (is_invertible_2cell(b, x)) return true;
  }
  return false;
}

}  // namespace

bool is_equivalence_1cell(const FiniteBicategory& b, const OneCellId& f) {
  const auto& e = b.cell1(f);
  for (const auto& [g, ge] : b.cells1) {
    if (ge.source != e.target || ge.target != e.source) continue;
    if (isomorphic(b, b.comp1(g, f), b.I(e.source)) &&
        isomorphic(b, b.comp1(f, g), b.I(e.target))) {
      return true;
    }
  }
  return false;
}

ValidationReport validate_bicategory(const FiniteBicategory& b) {
  ValidationReport r;
  Collector out(r);

  for (const auto& [f, e] : b.cells1) {
    if (!b.objects.contains(e.source) || !b.objects.contains(e.target)) {
      out.add("dangling id", "1-cell " + f + " has an unknown endpoint");
    }
  }
  for (const auto& [x, e] : b.cells2) {
    if (!b.cells1.contains(e.source) || !b.cells1.contains(e.target)) {
      out.add("dangling id", "2-cell " + x + " has an unknown boundary");
    } else if (b.cells1.at(e.source) != b.cells1.at(e.target)) {
      out.add("typing", "2-cell " + x + " joins non-parallel 1-cells");
    }
  }
  auto check_ref2 = [&](const TwoCellId& x, const char* table) {
    if (!b.cells2.contains(x)) {
      out.add("dangling id", std::string(table) + " mentions " + x);
    }
  };
  for (const auto& [k, v] : b.vcomp) {
    check_ref2(k.first, "vertical table");
    check_ref2(k.second, "vertical table");
    check_ref2(v, "vertical table");
  }
  for (const auto& [k, v] : b.hcomp2) {
    check_ref2(k.first, "horizontal table");
    check_ref2(k.second, "horizontal table");
    check_ref2(v, "horizontal table");
  }
  for (const auto& [k, v] : b.id2) check_ref2(v, "identity table");
  for (const auto& [k, v] : b.assoc) check_ref2(v, "associator table");
  for (const auto& [k, v] : b.lunit) check_ref2(v, "left unitor table");
  for (const auto& [k, v] : b.runit) check_ref2(v, "right unitor table");
  if (!r.ok()) return r;

  check_tables(b, out);
  if (!r.ok()) return r;
  check_2tables(b, out);
  if (!r.ok()) return r;

  for (const auto& a : b.objects) {
    for (const auto& c : b.objects) {
      auto rep = validate_category(b.hom_category(a, c));
      for (const auto& v : rep.violations) {
        out.add("hom category", "Hom(" + a + ", " + c + ") " + v.law + ": " +
                                    v.detail);
      }
    }
  }
  if (!r.ok()) return r;

  std::map<OneCellId, std::vector<TwoCellId>> from;
  for (const auto& [x, e] : b.cells2) from[e.source].push_back(x);
  std::map<ObjId, std::vector<OneCellId>> out_of;
  for (const auto& [f, e] : b.cells1) out_of[e.source].push_back(f);

  // interchange
  for (const auto& [f, fe] : b.cells1) {
    for (const auto& g : out_of[fe.target]) {
      if (b.hcomp(b.id(g), b.id(f)) != b.id(b.comp1(g, f))) {
        out.add("interchange", "1_" + g + " * 1_" + f + " is not an identity");
      }
    }
  }
  for (const auto& [a1, a1e] : b.cells2) {
    for (const auto& a2 : from[a1e.target]) {
      const auto& a21 = b.vert(a2, a1);
      for (const auto& g : out_of[b.cells1.at(a1e.source).target]) {
        for (const auto& b1 : from[g]) {
          for (const auto& b2 : from[b.cells2.at(b1).target]) {
            const auto& lhs = b.hcomp(b.vert(b2, b1), a21);
            const auto& rhs = b.vert(b.hcomp(b2, a2), b.hcomp(b1, a1));
            if (lhs != rhs) {
              out.add("interchange", "(" + b2 + "." + b1 + ")*(" + a2 + "." +
                                         a1 + ") = " + lhs + " but " + rhs);
            }
          }
        }
      }
    }
  }

  // invertibility of the constraints
  for (const auto& [k, v] : b.assoc) {
    if (!is_invertible_2cell(b, v)) {
      out.add("invertibility", "a" + triple_str(std::get<0>(k), std::get<1>(k),
                                                std::get<2>(k)) + " = " + v);
    }
  }
  for (const auto& [f, v] : b.lunit) {
    if (!is_invertible_2cell(b, v)) out.add("invertibility", "l_" + f + " = " + v);
  }
  for (const auto& [f, v] : b.runit) {
    if (!is_invertible_2cell(b, v)) out.add("invertibility", "r_" + f + " = " + v);
  }

  // naturality
  for (const auto& [al, ae] : b.cells2) {
    const auto& f = ae.source;
    const auto& f2 = ae.target;
    const auto& fe = b.cells1.at(f);
    const auto& ia = b.id(b.I(fe.source));
    const auto& ib = b.id(b.I(fe.target));
    {
      const auto& lhs = b.vert(b.r(f2), b.hcomp(al, ia));
      const auto& rhs = b.vert(al, b.r(f));
      if (lhs != rhs) out.add("naturality of r", "at " + al);
    }
    {
      const auto& lhs = b.vert(b.l(f2), b.hcomp(ib, al));
      const auto& rhs = b.vert(al, b.l(f));
      if (lhs != rhs) out.add("naturality of l", "at " + al);
    }
    for (const auto& g : out_of[fe.target]) {
      for (const auto& be : from[g]) {
        const auto& g2 = b.cells2.at(be).target;
        for (const auto& h : out_of[b.cells1.at(g).target]) {
          for (const auto& ga : from[h]) {
            const auto& h2 = b.cells2.at(ga).target;
            const auto& lhs =
                b.vert(b.a(h2, g2, f2), b.hcomp(b.hcomp(ga, be), al));
            const auto& rhs =
                b.vert(b.hcomp(ga, b.hcomp(be, al)), b.a(h, g, f));
            if (lhs != rhs) {
              out.add("naturality of a", "at " + triple_str(ga, be, al));
            }
          }
        }
      }
    }
  }

  for (const auto& p : pentagon_instances(b)) {
    if (!p.holds()) {
      out.add("pentagon", "(" + p.k + ", " + p.h + ", " + p.g + ", " + p.f +
                              "): " + p.lhs + " vs " + p.rhs);
    }
  }

  for (const auto& [f, fe] : b.cells1) {
    const auto& i = b.I(fe.target);
    for (const auto& g : out_of[fe.target]) {
      const auto& lhs = b.vert(b.hcomp(b.id(g), b.l(f)), b.a(g, i, f));
      const auto& rhs = b.hcomp(b.r(g), b.id(f));
      if (lhs != rhs) {
        out.add("triangle", pair_str(g, f) + ": " + lhs + " vs " + rhs);
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------- bracketings

std::size_t Bracketing::leaves() const {
  if (is_leaf()) return 1;
  return kids[0].leaves() + kids[1].leaves();
}

Bracketing Bracketing::normal(std::size_t m) {
  if (m <= 1) return leaf();
  return node(leaf(), normal(m - 1));
}

std::vector<Bracketing> Bracketing::all(std::size_t m) {
  if (m <= 1) return {leaf()};
  std::vector<Bracketing> out;
  for (std::size_t k = 1; k < m; ++k) {
    for (const auto& l : all(k)) {
      for (const auto& r : all(m - k)) out.push_back(node(l, r));
    }
  }
  return out;
}

namespace {

std::string render(const Bracketing& t, const std::vector<OneCellId>& path,
                   std::size_t& at) {
  if (t.is_leaf()) return at < path.size() ? path[at++] : "?";
  auto l = render(t.kids[0], path, at);
  auto r = render(t.kids[1], path, at);
  return "(" + r + " " + l + ")";
}

OneCellId value(const FiniteBicategory& b, const std::vector<OneCellId>& path,
                const Bracketing& t, std::size_t& at) {
  if (t.is_leaf()) return path.at(at++);
  auto l = value(b, path, t.kids[0], at);
  auto r = value(b, path, t.kids[1], at);
  return b.comp1(r, l);
}

TwoCellId htree(const FiniteBicategory& b, const Bracketing& t,
                const std::vector<TwoCellId>& cells, std::size_t& at) {
  if (t.is_leaf()) return cells.at(at++);
  auto l = htree(b, t.kids[0], cells, at);
  auto r = htree(b, t.kids[1], cells, at);
  return b.hcomp(r, l);
}

std::vector<OneCellId> slice(const std::vector<OneCellId>& p, std::size_t from,
                             std::size_t n) {
  return {p.begin() + static_cast<std::ptrdiff_t>(from),
          p.begin() + static_cast<std::ptrdiff_t>(from + n)};
}

// Both X and Y in normal form, X over path[0..nx), Y over the rest.
// Returns v(Node(X, Y)) => v(normal form).
TwoCellId merge(const FiniteBicategory& b, const std::vector<OneCellId>& path,
                std::size_t nx) {
  const std::size_t m = path.size();
  if (nx == 1) {
    return b.id(tree_value(b, path, Bracketing::normal(m)));
  }
  const auto& x = path[0];
  auto rest = slice(path, 1, m - 1);
  const auto x1 = tree_value(b, slice(path, 1, nx - 1), Bracketing::normal(nx - 1));
  const auto y = tree_value(b, slice(path, nx, m - nx), Bracketing::normal(m - nx));
  const auto ainv = inverse_2cell(b, b.a(y, x1, x));
  const auto inner = merge(b, rest, nx - 1);
  return b.vert(b.hcomp(inner, b.id(x)), ainv);
}

// v(t) => v(normal form)
TwoCellId normalize(const FiniteBicategory& b, const std::vector<OneCellId>& path,
                    const Bracketing& t) {
  if (t.is_leaf()) return b.id(path.at(0));
  const std::size_t nl = t.kids[0].leaves();
  auto lp = slice(path, 0, nl);
  auto rp = slice(path, nl, path.size() - nl);
  const auto nL = normalize(b, lp, t.kids[0]);
  const auto nR = normalize(b, rp, t.kids[1]);
  return b.vert(merge(b, path, nl), b.hcomp(nR, nL));
}

}  // namespace

std::string to_string(const Bracketing& t, const std::vector<OneCellId>& path) {
  std::size_t at = 0;
  return render(t, path, at);
}

OneCellId tree_value(const FiniteBicategory& b,
                     const std::vector<OneCellId>& path, const Bracketing& t) {
  if (t.leaves() != path.size()) {
    throw Error(ErrorCode::PathMismatch, "bracketing has " +
                                             std::to_string(t.leaves()) +
                                             " leaves for a path of length " +
                                             std::to_string(path.size()));
  }
  std::size_t at = 0;
  return value(b, path, t, at);
}

TwoCellId horizontal_tree(const FiniteBicategory& b, const Bracketing& t,
                          const std::vector<TwoCellId>& leaves) {
  if (t.leaves() != leaves.size()) {
    throw Error(ErrorCode::PathMismatch, "bracketing does not fit the cells");
  }
  std::size_t at = 0;
  return htree(b, t, leaves, at);
}

TwoCellId coherence_cell(const FiniteBicategory& b,
                         const std::vector<OneCellId>& path,
                         const Bracketing& from, const Bracketing& to) {
  if (path.empty() || from.leaves() != path.size() ||
      to.leaves() != path.size()) {
    throw Error(ErrorCode::PathMismatch,
                "bracketings do not fit a path of length " +
                    std::to_string(path.size()));
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (b.cell1(path[i]).target != b.cell1(path[i + 1]).source) {
      throw Error(ErrorCode::PathMismatch, "1-cells do not compose");
    }
  }
  if (from == to) return b.id(tree_value(b, path, from));
  const auto n1 = normalize(b, path, from);
  const auto n2 = normalize(b, path, to);
  return b.vert(inverse_2cell(b, n2), n1);
}

// ---------------------------------------------------------------- lax functors

ValidationReport validate_lax_functor(const LaxFunctor& F,
                                      const FiniteBicategory& B,
                                      const FiniteBicategory& C) {
  ValidationReport r;
  Collector out(r);

  auto ob = [&](const ObjId& a) -> const ObjId* {
    auto it = F.on_objects.find(a);
    return it == F.on_objects.end() ? nullptr : &it->second;
  };
  for (const auto& a : B.objects) {
    const auto* fa = ob(a);
    if (!fa) {
      out.add("typing", "object " + a + " is not mapped");
    } else if (!C.objects.contains(*fa)) {
      out.add("typing", "object image " + *fa + " is unknown");
    }
  }
  if (!r.ok()) return r;
  for (const auto& [f, e] : B.cells1) {
    auto it = F.on_1cells.find(f);
    if (it == F.on_1cells.end() || !C.cells1.contains(it->second)) {
      out.add("typing", "1-cell " + f + " has no valid image");
    } else if (C.cells1.at(it->second) !=
               Endpoints{F.on_objects.at(e.source), F.on_objects.at(e.target)}) {
      out.add("typing", "image of 1-cell " + f + " has the wrong endpoints");
    }
  }
  if (!r.ok()) return r;
  auto F1 = [&](const OneCellId& f) -> const OneCellId& {
    return F.on_1cells.at(f);
  };
  for (const auto& [x, e] : B.cells2) {
    auto it = F.on_2cells.find(x);
    if (it == F.on_2cells.end() || !C.cells2.contains(it->second)) {
      out.add("typing", "2-cell " + x + " has no valid image");
    } else if (C.cells2.at(it->second) !=
               Endpoints{F1(e.source), F1(e.target)}) {
      out.add("typing", "image of 2-cell " + x + " has the wrong boundary");
    }
  }
  for (const auto& [f, fe] : B.cells1) {
    for (const auto& [g, ge] : B.cells1) {
      if (fe.target != ge.source) continue;
      auto it = F.phi.find({g, f});
      if (it == F.phi.end()) {
        out.add("typing", "no phi" + pair_str(g, f));
      } else if (!typed(C, it->second, C.comp1(F1(g), F1(f)),
                        F1(B.comp1(g, f)))) {
        out.add("typing", "phi" + pair_str(g, f) + " = " + it->second +
                              " is mistyped");
      }
    }
  }
  for (const auto& a : B.objects) {
    auto it = F.phi_unit.find(a);
    if (it == F.phi_unit.end()) {
      out.add("typing", "no phi_" + a);
    } else if (!typed(C, it->second, C.I(F.on_objects.at(a)), F1(B.I(a)))) {
      out.add("typing", "phi_" + a + " = " + it->second + " is mistyped");
    }
  }
  if (!r.ok()) return r;
  auto F2 = [&](const TwoCellId& x) -> const TwoCellId& {
    return F.on_2cells.at(x);
  };
  auto phi = [&](const OneCellId& g, const OneCellId& f) -> const TwoCellId& {
    return F.phi.at({g, f});
  };

  for (const auto& [f, x] : B.id2) {
    if (F2(x) != C.id(F1(f))) {
      out.add("functor", "identity on " + f + " is not preserved");
    }
  }
  for (const auto& [k, v] : B.vcomp) {
    if (F2(v) != C.vert(F2(k.first), F2(k.second))) {
      out.add("functor", "vertical composite " + pair_str(k.first, k.second) +
                             " is not preserved");
    }
  }

  std::map<OneCellId, std::vector<TwoCellId>> from;
  for (const auto& [x, e] : B.cells2) from[e.source].push_back(x);
  std::map<ObjId, std::vector<OneCellId>> out_of;
  for (const auto& [f, e] : B.cells1) out_of[e.source].push_back(f);

  for (const auto& [al, ae] : B.cells2) {
    const auto& f = ae.source;
    const auto& f2 = ae.target;
    for (const auto& g : out_of[B.cells1.at(f).target]) {
      for (const auto& be : from[g]) {
        const auto& g2 = B.cells2.at(be).target;
        const auto& lhs = C.vert(phi(g2, f2), C.hcomp(F2(be), F2(al)));
        const auto& rhs = C.vert(F2(B.hcomp(be, al)), phi(g, f));
        if (lhs != rhs) {
          out.add("phi naturality", pair_str(be, al) + ": " + lhs + " vs " + rhs);
        }
      }
    }
  }

  for (const auto& [f, fe] : B.cells1) {
    for (const auto& g : out_of[fe.target]) {
      for (const auto& h : out_of[B.cells1.at(g).target]) {
        const auto& hg = B.comp1(h, g);
        const auto& gf = B.comp1(g, f);
        const auto lhs =
            C.vert(F2(B.a(h, g, f)),
                   C.vert(phi(hg, f), C.hcomp(phi(h, g), C.id(F1(f)))));
        const auto rhs =
            C.vert(phi(h, gf), C.vert(C.hcomp(C.id(F1(h)), phi(g, f)),
                                      C.a(F1(h), F1(g), F1(f))));
        if (lhs != rhs) {
          out.add("phi associativity",
                  triple_str(h, g, f) + ": " + lhs + " vs " + rhs);
        }
      }
    }
    const auto& ia = B.I(fe.source);
    const auto& ib = B.I(fe.target);
    {
      const auto lhs =
          C.vert(F2(B.r(f)),
                 C.vert(phi(f, ia),
                        C.hcomp(C.id(F1(f)), F.phi_unit.at(fe.source))));
      const auto& rhs = C.r(F1(f));
      if (lhs != rhs) {
        out.add("phi right unit", f + ": " + lhs + " vs " + rhs);
      }
    }
    {
      const auto lhs =
          C.vert(F2(B.l(f)),
                 C.vert(phi(ib, f),
                        C.hcomp(F.phi_unit.at(fe.target), C.id(F1(f)))));
      const auto& rhs = C.l(F1(f));
      if (lhs != rhs) {
        out.add("phi left unit", f + ": " + lhs + " vs " + rhs);
      }
    }
  }
  return r;
}

LaxFunctor identity_lax_functor(const FiniteBicategory& b) {
  LaxFunctor F;
  for (const auto& a : b.objects) {
    F.on_objects[a] = a;
    F.phi_unit[a] = b.id(b.I(a));
  }
  for (const auto& [f, _] : b.cells1) F.on_1cells[f] = f;
  for (const auto& [x, _] : b.cells2) F.on_2cells[x] = x;
  for (const auto& [k, v] : b.hcomp1) F.phi[k] = b.id(v);
  return F;
}

}  // namespace opetokit
