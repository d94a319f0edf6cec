#pragma once

// Integer view of a FiniteOpTwoCat for the hot loops (law checking and
// universality search). Built once, read-only afterwards.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "opetokit/core.hpp"

namespace opetokit::detail {

struct Op2Index {
  const FiniteOpTwoCat* x = nullptr;
  std::vector<TwoCellId> ids;
  std::unordered_map<TwoCellId, int> by_id;
  std::vector<OneCellId> ones;
  std::unordered_map<OneCellId, int> one_by_id;

  // per 2-cell
  std::vector<std::vector<int>> src;  // 1-cell indices
  std::vector<int> anchor;            // object of nullary sources, else -1
  std::vector<int> tgt;               // 1-cell index, -1 when dangling
  std::vector<int> niche;             // niche index
  std::vector<int> ident_of;          // 1-cell index -> ident2 cell or -1

  // niche key -> niche index; a niche is a source path
  std::map<PastingPath, int> niche_by_path;
  std::vector<PastingPath> niches;
  std::vector<std::vector<int>> occupants;  // per niche, sorted by id

  // 1-ary cells by (source 1-cell, target 1-cell)
  std::vector<std::vector<int>> unary_from;  // source 1-cell -> cells

  std::unordered_map<std::uint64_t, int> graft_table;

  explicit Op2Index(const FiniteOpTwoCat& x);

  int arity(int c) const { return static_cast<int>(src[c].size()); }

  std::uint64_t key(int outer, int slot, int inner) const {
    return (static_cast<std::uint64_t>(outer) * 64u +
            static_cast<std::uint64_t>(slot)) *
               static_cast<std::uint64_t>(ids.size() + 1) +
           static_cast<std::uint64_t>(inner);
  }

  // -1 when absent
  int graft(int outer, int slot, int inner) const {
    auto it = graft_table.find(key(outer, slot, inner));
    return it == graft_table.end() ? -1 : it->second;
  }

  int cell(const TwoCellId& id) const;  // throws DanglingId
};

}  // namespace opetokit::detail
