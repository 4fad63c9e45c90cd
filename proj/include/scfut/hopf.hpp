#pragma once

#include "scfut/element.hpp"
#include "scfut/permutation.hpp"
#include "scfut/rational.hpp"

namespace scfut {

// Basis change.  chibar^w = sum_{x >= w} chi^x, inverted by the lattice
// Mobius function.  to_sch(to_pch(x)) == x.
ScfElement to_sch(const ScfElement& x);
ScfElement to_pch(const ScfElement& x);
TensorScfElement to_sch(const TensorScfElement& x);
TensorScfElement to_pch(const TensorScfElement& x);

// chi^w chi^v = sum over the shifted shuffle set.  SCH basis only; mixed or
// PCH inputs are rejected, callers convert explicitly.
ScfElement hopf_product(const ScfElement& x, const ScfElement& y);

// Delta(chi^w) = sum_m chi^{w<=m} (x) chi^{w>m}.  SCH basis only.
TensorScfElement hopf_coproduct(const ScfElement& x);

// Componentwise product of tensors (used by the bialgebra compatibility
// checks).  SCH basis only.
TensorScfElement tensor_multiply(const TensorScfElement& a, const TensorScfElement& b);

// Coefficient of w moves to w^-1.  SCH elements directly; PCH elements via
// the closed form star_pch, term by term.
ScfElement star(const ScfElement& x);

// Closed form for star on a PCH basis element: sum over z of
// (-1)^{|iota(z)|-|iota(y)|} chibar^z whenever
// {x in C_z^vee : kappa(x) >= kappa(w^-1)} is the singleton {y}.
ScfElement star_pch(const Permutation& w);

// chibar^v chibar^w assembled from the brute-force structure constants
// (alternating sums over covering-inversion subsets); coefficients lie in
// {-1,0,1}.
ScfElement product_pch(const Permutation& v, const Permutation& w);

// Closed form for Delta(chibar^w): sum over splittings A | B of {1..n} with
// iota(w)_B a valid inversion table, of
//   chibar^{iota(w)_B} (x) chibar^{iota^vee(w)_A min iota^vee(id_A)}.
// Coefficients lie in {0,1}.
TensorScfElement coproduct_pch(const Permutation& w);

Rat counit(const ScfElement& x);
ScfElement hopf_unit(const Rat& c, Basis b = Basis::Sch);

// Graded connected antipode, S(x) = -x - sum S(x') x'' over the reduced
// coproduct.  SCH basis only.
ScfElement antipode(const ScfElement& x);

}  // namespace scfut
