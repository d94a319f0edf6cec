#pragma once

// Shapes (paths, trees) and the finite tables that present opetopic 1- and
// 2-categories. Cells are identified by strings; equality of cells is
// identifier equality.

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "opetokit/report.hpp"

namespace opetokit {

using ObjId = std::string;
using OneCellId = std::string;
using TwoCellId = std::string;

inline constexpr std::size_t kDefaultArityBound = 4;

struct Endpoints {
  ObjId source;
  ObjId target;

  auto operator<=>(const Endpoints&) const = default;
};

using OneCellTable = std::map<OneCellId, Endpoints>;

/// A linear pasting diagram of 1-cells. The anchor is the start object; it
/// only carries information when the path is empty.
struct PastingPath {
  ObjId anchor;
  std::vector<OneCellId> edges;

  static PastingPath nullary(ObjId at) { return {std::move(at), {}}; }

  /// Builds a non-empty path, taking the anchor from the first edge.
  static PastingPath along(const OneCellTable& cells,
                           std::vector<OneCellId> edges);

  std::size_t arity() const { return edges.size(); }
  bool empty() const { return edges.empty(); }

  auto operator<=>(const PastingPath&) const = default;
};

std::string to_string(const PastingPath& p);

/// Start and end object of a well-formed path.
Endpoints endpoints(const OneCellTable& cells, const PastingPath& p);

/// Throws DanglingId for unknown objects/1-cells and FrameMismatch when
/// consecutive edges do not compose or the anchor disagrees with edge 1.
void check_path(const std::set<ObjId>& objects, const OneCellTable& cells,
                const PastingPath& p);

/// Every well-formed path of length <= max_arity, nullary paths first.
std::vector<PastingPath> enumerate_paths(const std::set<ObjId>& objects,
                                         const OneCellTable& cells,
                                         std::size_t max_arity);

/// source(outer) with the edge at `slot` replaced by source(inner).
PastingPath splice(const PastingPath& outer, std::size_t slot,
                   const PastingPath& inner);

struct TwoCell {
  PastingPath source;
  OneCellId target;

  std::size_t arity() const { return source.arity(); }

  auto operator<=>(const TwoCell&) const = default;
};

/// Source of a 3-cell: a root 2-cell with, per source position, either a
/// leaf (keep the 1-cell) or a subtree whose composite targets that 1-cell.
/// A leaf is encoded by an empty root. An empty `slots` vector means all
/// positions are leaves.
struct TwoCellTree {
  TwoCellId root;
  std::vector<TwoCellTree> slots;

  static TwoCellTree leaf() { return {}; }
  static TwoCellTree node(TwoCellId root, std::vector<TwoCellTree> slots = {}) {
    return {std::move(root), std::move(slots)};
  }
  bool is_leaf() const { return root.empty(); }
};

/// Opetopic 1-category truncated at paths of length <= arity_bound. The
/// unique occupant of every 2-niche is recorded as comp(path).
struct FiniteOpOneCat {
  std::size_t arity_bound = kDefaultArityBound;
  std::set<ObjId> objects;
  OneCellTable cells1;
  std::map<PastingPath, OneCellId> comp;

  /// Throws MissingEntry if the path has no recorded composite.
  const OneCellId& composite(const PastingPath& p) const;
};

struct GraftKey {
  TwoCellId outer;
  std::size_t slot = 0;
  TwoCellId inner;

  auto operator<=>(const GraftKey&) const = default;
};

/// Opetopic 2-category truncated at 2-cells of arity <= arity_bound. The
/// graft table records the unique 3-niche occupants: grafting `inner` into
/// source position `slot` of `outer`.
struct FiniteOpTwoCat {
  std::size_t arity_bound = kDefaultArityBound;
  std::set<ObjId> objects;
  OneCellTable cells1;
  std::map<TwoCellId, TwoCell> cells2;
  std::map<OneCellId, TwoCellId> ident2;
  std::map<GraftKey, TwoCellId> grafts;

  /// Throws DanglingId.
  const TwoCell& cell(const TwoCellId& id) const;
  const Endpoints& cell1(const OneCellId& id) const;
};

ValidationReport validate_op1(const FiniteOpOneCat& x);
ValidationReport validate_op2(const FiniteOpTwoCat& x);

/// Composite of `inner` grafted into `outer` at `slot`.
TwoCellId graft(const FiniteOpTwoCat& x, const TwoCellId& outer,
                std::size_t slot, const TwoCellId& inner);

enum class FoldOrder {
  BottomUp,     // compose subtrees first, graft them right to left
  LeftToRight,  // compose subtrees first, graft them left to right
  TopDown,      // graft subtree roots first, then their own subtrees
};

TwoCellId composite_of_tree(const FiniteOpTwoCat& x, const TwoCellTree& t,
                            FoldOrder order = FoldOrder::BottomUp);

/// Arity of the composite of `t` (number of leaves of the flattened source).
std::size_t tree_arity(const FiniteOpTwoCat& x, const TwoCellTree& t);

/// All 2-cells whose source is exactly `p`, in id order.
std::vector<TwoCellId> occupants_of_niche(const FiniteOpTwoCat& x,
                                          const PastingPath& p);

/// Hom(a, b): objects are the 1-cells a -> b, 1-cells the 1-ary 2-cells
/// between them, composites given by iterated vertical grafting.
FiniteOpOneCat hom_category_of_frame(const FiniteOpTwoCat& x, const ObjId& a,
                                     const ObjId& b);

/// Hom(a, b) of an opetopic 1-category is a set of 1-cells.
std::set<OneCellId> hom_set_of_frame(const FiniteOpOneCat& x, const ObjId& a,
                                     const ObjId& b);

}  // namespace opetokit
