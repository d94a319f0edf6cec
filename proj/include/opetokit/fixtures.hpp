#pragma once

// Small named structures used by the tests, the CLI fixtures and the docs.

#include "opetokit/bicategory.hpp"

namespace opetokit::fixtures {

/// One object "*", arrows e (identity) and s with s∘s = e.
FiniteCategory z2_category();

/// One object; 1-cells e (unit) and s; hom(g, g) = {id_g, neg_g} under sign
/// multiplication; a_{hgf} = -1 exactly when h = g = f = s; l, r trivial.
FiniteBicategory two_group();

/// two_group with a_{hgf} = -1 exactly when h = f = s; fails the pentagon.
FiniteBicategory two_group_broken();

/// One object, one 1-cell I, hom(I, I) = {1_I, t} with t∘t = t; ∗ is the
/// same multiplication; a, l, r trivial.
FiniteBicategory idempotent();

/// One object, 1-cell I, 2-cell 1_I.
FiniteBicategory terminal();

/// One object, 1-cells I and x with x∘x = x, identity 2-cells only.
FiniteBicategory idempotent_loop();

/// Objects A, B; 1-cells IA, IB, f, g: A -> B; hom(f, f) = {1_f, n} with
/// n∘n = 1_f; hom(f, g) = {p, q} with p∘n = q; hom(g, g) = {1_g}.
FiniteBicategory parallel_pair();

/// Lax functor idempotent_loop -> idempotent sending x to I with
/// phi_{x,x} = t and every other constraint trivial.
LaxFunctor idempotent_loop_collapse();

/// Identity on two_group with phi_{s,s} = neg_e.
LaxFunctor two_group_twist();

}  // namespace opetokit::fixtures
