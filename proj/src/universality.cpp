#include "opetokit/universality.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

#include "op2_index.hpp"
#include "opetokit/error.hpp"

namespace opetokit {

struct UniversalityChecker::Impl {
  detail::Op2Index ix;
  mutable std::vector<std::int8_t> u2, uf, u1;  // -1 unknown

  explicit Impl(const FiniteOpTwoCat& x) : ix(x) {
    u2.assign(ix.ids.size(), -1);
    uf.assign(ix.ids.size(), -1);
    u1.assign(ix.ones.size(), -1);
  }

  int one(const OneCellId& f) const {
    auto it = ix.one_by_id.find(f);
    if (it == ix.one_by_id.end()) throw Error(ErrorCode::DanglingId, "1-cell " + f);
    return it->second;
  }

  std::vector<int> factor(int a, int g) const {
    std::vector<int> out;
    for (int b : ix.unary_from[ix.tgt[a]]) {
      if (ix.tgt[b] == ix.tgt[g] && ix.graft(b, 0, a) == g) out.push_back(b);
    }
    return out;
  }

  bool cell2(int a) const {
    if (u2[a] >= 0) return u2[a] != 0;
    bool ok = true;
    for (int g : ix.occupants[ix.niche[a]]) {
      int hits = 0;
      for (int b : ix.unary_from[ix.tgt[a]]) {
        if (ix.tgt[b] == ix.tgt[g] && ix.graft(b, 0, a) == g && ++hits > 1) {
          break;
        }
      }
      if (hits != 1) {
        ok = false;
        break;
      }
    }
    u2[a] = ok ? 1 : 0;
    return ok;
  }

  // 1-cells with the same endpoints as h
  std::vector<int> parallel(int h) const {
    std::vector<int> out;
    const auto& e = ix.x->cells1.at(ix.ones[h]);
    for (int k = 0; k < static_cast<int>(ix.ones.size()); ++k) {
      if (ix.x->cells1.at(ix.ones[k]) == e) out.push_back(k);
    }
    return out;
  }

  int niche_of(int f, int g) const {
    const auto& ends = ix.x->cells1.at(ix.ones[f]);
    PastingPath p{ends.source, {ix.ones[f], ix.ones[g]}};
    auto it = ix.niche_by_path.find(p);
    return it == ix.niche_by_path.end() ? -1 : it->second;
  }

  bool factorization(int u) const {
    if (ix.arity(u) != 2) {
      throw Error(ErrorCode::ArityError,
                  ix.ids[u] + " is not 2-ary");
    }
    if (uf[u] >= 0) return uf[u] != 0;
    const int f = ix.src[u][0];
    const int gbar = ix.src[u][1];
    bool ok = true;
    for (int h : parallel(gbar)) {
      const int n = niche_of(f, h);
      if (n < 0) continue;
      for (int v : ix.occupants[n]) {
        if (ix.tgt[v] != ix.tgt[u]) continue;
        int hits = 0;
        for (int th : ix.unary_from[h]) {
          if (ix.tgt[th] == gbar && ix.graft(u, 1, th) == v && ++hits > 1) {
            break;
          }
        }
        if (hits != 1) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    uf[u] = ok ? 1 : 0;
    return ok;
  }

  bool cell1(int f) const {
    if (u1[f] >= 0) return u1[f] != 0;
    const auto& fe = ix.x->cells1.at(ix.ones[f]);
    bool ok = true;
    for (int g = 0; g < static_cast<int>(ix.ones.size()) && ok; ++g) {
      const auto& ge = ix.x->cells1.at(ix.ones[g]);
      if (ge.source != fe.source) continue;
      bool found = false;
      for (int h = 0; h < static_cast<int>(ix.ones.size()) && ok; ++h) {
        const auto& he = ix.x->cells1.at(ix.ones[h]);
        if (he.source != fe.target || he.target != ge.target) continue;
        const int n = niche_of(f, h);
        if (n < 0) continue;
        for (int u : ix.occupants[n]) {
          if (ix.tgt[u] != g || !cell2(u)) continue;
          if (factorization(u)) {
            found = true;
          } else {
            ok = false;
            break;
          }
        }
      }
      if (!found) ok = false;
    }
    u1[f] = ok ? 1 : 0;
    return ok;
  }
};

UniversalityChecker::UniversalityChecker(const FiniteOpTwoCat& x)
    : impl_(std::make_unique<Impl>(x)) {}

UniversalityChecker::~UniversalityChecker() = default;

std::vector<TwoCellId> UniversalityChecker::factorizations(
    const TwoCellId& alpha, const TwoCellId& gamma) const {
  const int a = impl_->ix.cell(alpha);
  const int g = impl_->ix.cell(gamma);
  if (impl_->ix.niche[a] != impl_->ix.niche[g]) {
    throw Error(ErrorCode::NicheMismatch,
                alpha + " and " + gamma + " lie in different niches");
  }
  std::vector<TwoCellId> out;
  for (int b : impl_->factor(a, g)) out.push_back(impl_->ix.ids[b]);
  return out;
}

bool UniversalityChecker::cell2(const TwoCellId& alpha) const {
  return impl_->cell2(impl_->ix.cell(alpha));
}

bool UniversalityChecker::factorization(const TwoCellId& u) const {
  return impl_->factorization(impl_->ix.cell(u));
}

bool UniversalityChecker::cell1(const OneCellId& f) const {
  return impl_->cell1(impl_->one(f));
}

std::vector<TwoCellId> UniversalityChecker::universal_occupants(
    const PastingPath& p) const {
  std::vector<TwoCellId> out;
  auto it = impl_->ix.niche_by_path.find(p);
  if (it == impl_->ix.niche_by_path.end()) return out;
  for (int c : impl_->ix.occupants[it->second]) {
    if (impl_->cell2(c)) out.push_back(impl_->ix.ids[c]);
  }
  return out;
}

std::vector<TwoCellId> factorizations_through(const FiniteOpTwoCat& x,
                                              const TwoCellId& alpha,
                                              const TwoCellId& gamma) {
  if (x.cell(alpha).source != x.cell(gamma).source) {
    throw Error(ErrorCode::NicheMismatch,
                alpha + " and " + gamma + " lie in different niches");
  }
  std::vector<TwoCellId> out;
  const auto& ta = x.cell(alpha).target;
  const auto& tg = x.cell(gamma).target;
  for (const auto& [id, c] : x.cells2) {
    if (c.arity() != 1 || c.source.edges[0] != ta || c.target != tg) continue;
    auto it = x.grafts.find(GraftKey{id, 0, alpha});
    if (it != x.grafts.end() && it->second == gamma) out.push_back(id);
  }
  return out;
}

bool is_universal_2cell(const FiniteOpTwoCat& x, const TwoCellId& alpha) {
  x.cell(alpha);
  return UniversalityChecker(x).cell2(alpha);
}

bool is_universal_factorization_1(const FiniteOpTwoCat& x,
                                  const TwoCellId& u) {
  if (x.cell(u).arity() != 2) {
    throw Error(ErrorCode::ArityError, u + " is not 2-ary");
  }
  return UniversalityChecker(x).factorization(u);
}

bool is_universal_1cell(const FiniteOpTwoCat& x, const OneCellId& f) {
  x.cell1(f);
  return UniversalityChecker(x).cell1(f);
}

bool is_universal_1cell(const FiniteOpOneCat& x, const OneCellId& f) {
  auto fit = x.cells1.find(f);
  if (fit == x.cells1.end()) throw Error(ErrorCode::DanglingId, "1-cell " + f);
  const auto& fe = fit->second;
  for (const auto& [g, ge] : x.cells1) {
    if (ge.source != fe.source) continue;
    int hits = 0;
    for (const auto& [h, he] : x.cells1) {
      if (he.source != fe.target || he.target != ge.target) continue;
      if (x.composite(PastingPath{fe.source, {f, h}}) == g) ++hits;
    }
    if (hits != 1) return false;
  }
  return true;
}

namespace {

// Universal occupant of an arity >= 3 niche obtained by grafting chosen
// binary universals: (f1, f2, ..., fm) -> (f1f2, f3, ..., fm) -> ...
std::optional<TwoCellId> derived_occupant(
    const FiniteOpTwoCat& x, const UniversalityChecker& uc,
    const PastingPath& p, std::string& why) {
  if (p.arity() < 3) return std::nullopt;
  auto us = uc.universal_occupants(
      PastingPath{p.anchor, {p.edges[0], p.edges[1]}});
  if (us.empty()) {
    why = "no universal binary occupant to start from";
    return std::nullopt;
  }
  const TwoCellId& u = us.front();
  PastingPath rest{p.anchor, {x.cell(u).target}};
  rest.edges.insert(rest.edges.end(), p.edges.begin() + 2, p.edges.end());
  std::optional<TwoCellId> top;
  if (rest.arity() == 2) {
    auto r = uc.universal_occupants(rest);
    if (!r.empty()) top = r.front();
  } else {
    top = derived_occupant(x, uc, rest, why);
  }
  if (!top) {
    if (why.empty()) why = "no universal occupant of " + to_string(rest);
    return std::nullopt;
  }
  return graft(x, *top, 0, u);
}

}  // namespace

CoherenceReport check_coherence(const FiniteOpTwoCat& x,
                                CoherenceOptions opts) {
  CoherenceReport out;
  out.report.arity_bound = x.arity_bound;
  UniversalityChecker uc(x);

  for (const auto& [id, _] : x.cells2) {
    if (uc.cell2(id)) out.universal_2cells.insert(id);
  }
  for (const auto& [f, _] : x.cells1) {
    if (uc.cell1(f)) out.universal_1cells.insert(f);
  }

  for (const auto& a : x.objects) {
    bool has = false;
    for (const auto& f : out.universal_1cells) {
      if (x.cells1.at(f).source == a) {
        has = true;
        break;
      }
    }
    out.object_has_universal_1cell[a] = has;
    if (!has) {
      out.report.add("object without universal 1-cell", "object " + a);
    }
  }

  for (const auto& p : enumerate_paths(x.objects, x.cells1, x.arity_bound)) {
    bool has = false;
    std::string detail = to_string(p);
    if (p.arity() <= 2 || opts.direct_niche_search) {
      has = !uc.universal_occupants(p).empty();
    } else {
      std::string why;
      try {
        auto d = derived_occupant(x, uc, p, why);
        if (d && uc.cell2(*d)) {
          has = true;
        } else if (d) {
          detail += ": derived composite " + *d + " is not universal";
        } else {
          detail += ": " + why;
        }
      } catch (const Error& e) {
        detail += std::string(": ") + e.what();
      }
    }
    out.niche_has_universal[p] = has;
    if (!has) out.report.add("niche without universal occupant", detail);
  }
  if (!opts.direct_niche_search) {
    out.report.notes.push_back(
        "niches of arity 3 and above checked via derived composites");
  }

  // closure under single graftings
  std::size_t closure_failures = 0;
  for (const auto& [k, v] : x.grafts) {
    if (!out.universal_2cells.contains(k.outer) ||
        !out.universal_2cells.contains(k.inner)) {
      continue;
    }
    if (!out.universal_2cells.contains(v) && closure_failures++ < 64) {
      out.report.add("composite of universals",
                     "graft(" + k.outer + ", " + std::to_string(k.slot) +
                         ", " + k.inner + ") = " + v);
    }
  }
  for (const auto& u : out.universal_2cells) {
    const TwoCell& c = x.cells2.at(u);
    if (c.arity() != 2) continue;
    if (!out.universal_1cells.contains(c.source.edges[0]) ||
        !out.universal_1cells.contains(c.source.edges[1])) {
      continue;
    }
    if (!out.universal_1cells.contains(c.target) && closure_failures++ < 64) {
      out.report.add("composite of universals",
                     "1-cell " + c.target + " as target of " + u);
    }
  }
  out.report.notes.push_back("closure checked via generators");
  return out;
}

}  // namespace opetokit
