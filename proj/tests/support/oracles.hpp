#pragma once

#include <functional>
#include <vector>

#include "opetokit/bicategory.hpp"
#include "opetokit/core.hpp"
#include "opetokit/equivalences.hpp"

namespace testsupport {

/// g with g∘f and f∘g identities, found by scanning the composition table.
bool has_two_sided_inverse(const opetokit::FiniteCategory& c,
                           const opetokit::ArrowId& f);

/// Number of functors c -> d, by brute force over object and arrow maps.
std::size_t count_functors(const opetokit::FiniteCategory& c,
                           const opetokit::FiniteCategory& d);

/// Z/2-valued 3-cochains on Z/2 are indexed by 8 bits; bit 4h+2g+f holds
/// the value at (h, g, f).
using Cochain = unsigned;

int omega_at(Cochain w, int h, int g, int f);

/// The cocycle identity at the quadruple (k, h, g, f).
bool cocycle_at(Cochain w, int k, int h, int g, int f);

/// The one-object Z/2 bicategory with a_{hgf} = (-1)^{w(h,g,f)}.
opetokit::FiniteBicategory z2_bicategory(Cochain w);

/// The 2-cell of the one-object Z/2 bicategory written as a sign and a
/// 1-cell ("e" or "s").
int sign_of(const opetokit::TwoCellId& x);

bool vertically_invertible(const opetokit::FiniteBicategory& b,
                           const opetokit::TwoCellId& x);

/// f with some g such that g∘f and f∘g are isomorphic to the units.
bool internal_equivalence(const opetokit::FiniteBicategory& b,
                          const opetokit::OneCellId& f);

/// Level-wise maps x -> y that respect cell shapes; callers filter them
/// with validate_op_morphism.
std::vector<opetokit::OpMorphism> shape_respecting_maps(
    const opetokit::FiniteOpTwoCat& x, const opetokit::FiniteOpTwoCat& y);

}  // namespace testsupport
