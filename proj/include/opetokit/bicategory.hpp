#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "opetokit/core.hpp"

namespace opetokit {

using ArrowId = std::string;
using Pair = std::pair<std::string, std::string>;  // (g, f) means g after f
using Triple = std::tuple<std::string, std::string, std::string>;  // (h, g, f)

struct FiniteCategory {
  std::set<ObjId> objects;
  std::map<ArrowId, Endpoints> arrows;
  std::map<Pair, ArrowId> compose;
  std::map<ObjId, ArrowId> identity;

  /// g∘f; throws MissingComposite.
  const ArrowId& comp(const ArrowId& g, const ArrowId& f) const;
  bool operator==(const FiniteCategory&) const = default;
};

ValidationReport validate_category(const FiniteCategory& c);

struct Functor {
  std::map<ObjId, ObjId> on_objects;
  std::map<ArrowId, ArrowId> on_arrows;
  bool operator==(const Functor&) const = default;
};

ValidationReport validate_functor(const Functor& f, const FiniteCategory& c,
                                  const FiniteCategory& d);

bool is_invertible_arrow(const FiniteCategory& c, const ArrowId& f);

/// Bénabou data with global tables. 2-cells are typed by their source and
/// target 1-cells. a(h,g,f): (hg)f => h(gf), r(f): f∘I_A => f,
/// l(f): I_B∘f => f.
struct FiniteBicategory {
  std::set<ObjId> objects;
  OneCellTable cells1;
  std::map<TwoCellId, Endpoints> cells2;
  std::map<Pair, TwoCellId> vcomp;
  std::map<OneCellId, TwoCellId> id2;
  std::map<Pair, OneCellId> hcomp1;
  std::map<Pair, TwoCellId> hcomp2;
  std::map<ObjId, OneCellId> unit;
  std::map<Triple, TwoCellId> assoc;
  std::map<OneCellId, TwoCellId> lunit;
  std::map<OneCellId, TwoCellId> runit;

  bool operator==(const FiniteBicategory&) const = default;

  // Lookups throwing MissingComposite / MissingEntry / DanglingId.
  const OneCellId& comp1(const OneCellId& g, const OneCellId& f) const;
  const TwoCellId& hcomp(const TwoCellId& b, const TwoCellId& a) const;
  const TwoCellId& vert(const TwoCellId& b, const TwoCellId& a) const;
  const TwoCellId& id(const OneCellId& f) const;
  const OneCellId& I(const ObjId& a) const;
  const TwoCellId& a(const OneCellId& h, const OneCellId& g,
                     const OneCellId& f) const;
  const TwoCellId& l(const OneCellId& f) const;
  const TwoCellId& r(const OneCellId& f) const;
  const Endpoints& cell1(const OneCellId& f) const;
  const Endpoints& cell2(const TwoCellId& x) const;

  /// 2-cells f => g, in id order.
  std::vector<TwoCellId> hom2(const OneCellId& f, const OneCellId& g) const;

  /// Objects: 1-cells A -> B; arrows: 2-cells between them.
  FiniteCategory hom_category(const ObjId& a, const ObjId& b) const;
};

/// Law names: "dangling id", "typing", "totality", "hom category",
/// "interchange", "invertibility", "naturality of a", "naturality of l",
/// "naturality of r", "pentagon", "triangle".
ValidationReport validate_bicategory(const FiniteBicategory& b);

struct PentagonInstance {
  OneCellId k, h, g, f;
  TwoCellId lhs;  // a_{k,h,gf} ∘ a_{kh,g,f}
  TwoCellId rhs;  // (1_k ∗ a_{hgf}) ∘ a_{k,hg,f} ∘ (a_{khg} ∗ 1_f)
  bool holds() const { return lhs == rhs; }
};

/// Every composable quadruple, in lexicographic order of (f, g, h, k).
std::vector<PentagonInstance> pentagon_instances(const FiniteBicategory& b);

bool is_invertible_2cell(const FiniteBicategory& b, const TwoCellId& x);
/// Throws NoSolution when x is not invertible.
TwoCellId inverse_2cell(const FiniteBicategory& b, const TwoCellId& x);

bool is_equivalence_1cell(const FiniteBicategory& b, const OneCellId& f);

/// Binary tree over leaves 0..m-1 in path order (leaf 0 is applied first).
/// Node(L, R) stands for v(R)∘v(L).
struct Bracketing {
  std::vector<Bracketing> kids;  // empty (leaf) or exactly two

  static Bracketing leaf() { return {}; }
  static Bracketing node(Bracketing l, Bracketing r) {
    Bracketing b;
    b.kids.push_back(std::move(l));
    b.kids.push_back(std::move(r));
    return b;
  }
  bool is_leaf() const { return kids.empty(); }
  std::size_t leaves() const;

  /// Leftmost-first nesting, written ((..)g)f.
  static Bracketing normal(std::size_t m);
  /// All bracketings of m >= 1 leaves.
  static std::vector<Bracketing> all(std::size_t m);

  bool operator==(const Bracketing&) const = default;
};

std::string to_string(const Bracketing& t, const std::vector<OneCellId>& path);

/// 1-cell denoted by the bracketing applied to the path.
OneCellId tree_value(const FiniteBicategory& b, const std::vector<OneCellId>& path,
                     const Bracketing& t);

/// Given one 2-cell per leaf, the induced 2-cell between the two bracketed
/// composites.
TwoCellId horizontal_tree(const FiniteBicategory& b, const Bracketing& t,
                          const std::vector<TwoCellId>& leaves);

/// Canonical 2-cell γ(path) => γ'(path) built from associator components.
/// Throws PathMismatch when a bracketing does not fit the path.
TwoCellId coherence_cell(const FiniteBicategory& b,
                         const std::vector<OneCellId>& path,
                         const Bracketing& from, const Bracketing& to);

struct LaxFunctor {
  std::map<ObjId, ObjId> on_objects;
  std::map<OneCellId, OneCellId> on_1cells;
  std::map<TwoCellId, TwoCellId> on_2cells;
  std::map<Pair, TwoCellId> phi;        // (g, f): Fg∘Ff => F(g∘f)
  std::map<ObjId, TwoCellId> phi_unit;  // A: I_{FA} => F(I_A)

  bool operator==(const LaxFunctor&) const = default;
};

/// Law names: "typing", "functor", "phi naturality", "phi associativity",
/// "phi left unit", "phi right unit".
ValidationReport validate_lax_functor(const LaxFunctor& f,
                                      const FiniteBicategory& src,
                                      const FiniteBicategory& dst);

LaxFunctor identity_lax_functor(const FiniteBicategory& b);

}  // namespace opetokit
