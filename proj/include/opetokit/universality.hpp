#pragma once

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "opetokit/core.hpp"

namespace opetokit {

/// 1-ary β with graft(β, 0, α) = γ. Throws NicheMismatch when α and γ have
/// different sources.
std::vector<TwoCellId> factorizations_through(const FiniteOpTwoCat& x,
                                              const TwoCellId& alpha,
                                              const TwoCellId& gamma);

bool is_universal_2cell(const FiniteOpTwoCat& x, const TwoCellId& alpha);

/// u must be 2-ary over (f, g). True iff every v over (f, h) with the same
/// target factors as graft(u, 1, θ) for exactly one θ: h => g.
bool is_universal_factorization_1(const FiniteOpTwoCat& x, const TwoCellId& u);

bool is_universal_1cell(const FiniteOpTwoCat& x, const OneCellId& f);

/// In an opetopic 1-category: every g out of source(f) is comp([f, h]) for
/// exactly one h.
bool is_universal_1cell(const FiniteOpOneCat& x, const OneCellId& f);

/// Caches verdicts over one structure; cheaper than the free functions when
/// many cells are queried.
class UniversalityChecker {
 public:
  explicit UniversalityChecker(const FiniteOpTwoCat& x);
  ~UniversalityChecker();
  UniversalityChecker(const UniversalityChecker&) = delete;
  UniversalityChecker& operator=(const UniversalityChecker&) = delete;

  std::vector<TwoCellId> factorizations(const TwoCellId& alpha,
                                        const TwoCellId& gamma) const;
  bool cell2(const TwoCellId& alpha) const;
  bool factorization(const TwoCellId& u) const;
  bool cell1(const OneCellId& f) const;

  /// Universal occupants of the niche, in id order.
  std::vector<TwoCellId> universal_occupants(const PastingPath& p) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct CoherenceOptions {
  bool direct_niche_search = false;
};

struct CoherenceReport {
  ValidationReport report;
  std::map<ObjId, bool> object_has_universal_1cell;
  std::map<PastingPath, bool> niche_has_universal;
  std::set<OneCellId> universal_1cells;
  std::set<TwoCellId> universal_2cells;

  bool ok() const { return report.ok(); }
};

CoherenceReport check_coherence(const FiniteOpTwoCat& x,
                                CoherenceOptions opts = {});

}  // namespace opetokit
