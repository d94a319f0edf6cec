#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "opetokit/bicategory.hpp"
#include "opetokit/core.hpp"

namespace opetokit {

// ---------------------------------------------------------------- dimension 0

/// Objects and 1-cells of an opetopic 0-category; every object carries
/// exactly one 1-cell, a loop.
struct FiniteOpZeroCat {
  std::set<ObjId> objects;
  OneCellTable cells1;
  bool operator==(const FiniteOpZeroCat&) const = default;
};

ValidationReport validate_op0(const FiniteOpZeroCat& x);
std::set<ObjId> zeta0(const FiniteOpZeroCat& x);  // throws InvalidInput
FiniteOpZeroCat zeta0_inv(const std::set<ObjId>& s);

// ---------------------------------------------------------------- dimension 1

FiniteCategory zeta1(const FiniteOpOneCat& x);  // throws InvalidInput
FiniteOpOneCat zeta1_inv(const FiniteCategory& c,
                         std::size_t arity_bound = kDefaultArityBound);

/// Level-wise map; f2 is empty between opetopic 1-categories.
struct OpMorphism {
  std::map<ObjId, ObjId> f0;
  std::map<OneCellId, OneCellId> f1;
  std::map<TwoCellId, TwoCellId> f2;
  bool operator==(const OpMorphism&) const = default;
  auto operator<=>(const OpMorphism&) const = default;
};

ValidationReport validate_op_morphism(const OpMorphism& f,
                                      const FiniteOpOneCat& x,
                                      const FiniteOpOneCat& y);
ValidationReport validate_op_morphism(const OpMorphism& f,
                                      const FiniteOpTwoCat& x,
                                      const FiniteOpTwoCat& y);

Functor zeta1_mor(const OpMorphism& f, const FiniteOpOneCat& x,
                  const FiniteOpOneCat& y);  // throws InvalidInput

OpMorphism identity_morphism(const FiniteOpTwoCat& x);

// ---------------------------------------------------------------- dimension 2

/// Chosen universal occupants. c is keyed by the niche path (f, g), f first;
/// its target is written g∘f.
struct Biasing {
  std::map<ObjId, TwoCellId> iota;
  std::map<std::pair<OneCellId, OneCellId>, TwoCellId> c;
  bool operator==(const Biasing&) const = default;
};

/// Throws InvalidBiasing on a missing, misplaced or non-universal choice.
void check_biasing(const FiniteOpTwoCat& x, const Biasing& b);

/// Least-id universal occupant of every nullary and binary niche.
Biasing choose_biasing(const FiniteOpTwoCat& x);  // throws NoUniversalOccupant

FiniteBicategory zeta2(const FiniteOpTwoCat& x, const Biasing& b);

/// A cell of a generated structure is a niche path p together with a 2-cell
/// α: N(p) => h of the bicategory, where N(p) is I_A, the single edge, or
/// the composite bracketed as ((..)g)f.
struct Presentation {
  PastingPath path;
  TwoCellId alpha;
  bool operator==(const Presentation&) const = default;
};

struct GeneratedOpTwoCat {
  FiniteOpTwoCat x;
  Biasing biasing;
  std::map<TwoCellId, Presentation> presentation;
  std::map<PastingPath, TwoCellId> canonical;  // the cell (p, identity)
};

GeneratedOpTwoCat zeta2_inv(const FiniteBicategory& b,
                            std::size_t arity_bound = kDefaultArityBound);

/// Tree of chosen binary cells shaped like the bracketing.
TwoCellTree bracketing_tree(const FiniteOpTwoCat& x, const Biasing& b,
                            const std::vector<OneCellId>& path,
                            const Bracketing& t);

LaxFunctor zeta2_mor(const OpMorphism& f, const FiniteOpTwoCat& x,
                     const Biasing& bx, const FiniteOpTwoCat& y,
                     const Biasing& by);

/// Morphism between zeta2_inv(src) and zeta2_inv(dst).
OpMorphism zeta2_mor_inv(const LaxFunctor& g, const GeneratedOpTwoCat& src,
                         const GeneratedOpTwoCat& dst);

enum class Verdict { Lax, Weak, Strict };
std::string_view to_string(Verdict v);

struct Classification {
  Verdict verdict = Verdict::Lax;
  TwoCellId witness;  // first offending cell; empty for strict
  TwoCellId image;    // its image
  bool witness_is_1cell = false;
};

Classification classify_morphism(const OpMorphism& f, const FiniteOpTwoCat& x,
                                 const Biasing& bx, const FiniteOpTwoCat& y,
                                 const Biasing& by);

}  // namespace opetokit
