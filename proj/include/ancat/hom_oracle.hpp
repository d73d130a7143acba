#pragma once

#include "ancat/derived.hpp"

namespace ancat {

/// Test-support oracles for morphism spaces between interval modules,
/// computed by explicit linear algebra instead of the closed forms used by
/// DerivedAn::hom_dim. Kept deliberately independent of that code path.

/// dim Hom(x0, y0) for modules (shift 0): one scalar unknown per vertex in
/// the common support, one commuting-square constraint per quiver arrow.
int oracle_hom_module(int n, const DerivedObject& x0, const DerivedObject& y0);

/// dim Ext^1(x0, y0) from the projective resolution
/// 0 -> P_{a-1} -> P_b -> [a,b] -> 0 and oracle_hom_module.
int oracle_ext1_module(int n, const DerivedObject& x0, const DerivedObject& y0);

} // namespace ancat
