#pragma once

#include <vector>

#include "scfut/permutation.hpp"

namespace scfut {

// The distributive lattice on S_n given by componentwise order on inversion
// tables.  It is a product of chains (entry k ranges over 0..n-k), which is
// what makes meet/join/Mobius componentwise.

// true iff iota(u) <= iota(v) componentwise; degrees must agree
bool lattice_leq(const Permutation& u, const Permutation& v);

Permutation lattice_meet(const Permutation& u, const Permutation& v);
Permutation lattice_join(const Permutation& u, const Permutation& v);

// {z with one covering inversion removed}; each differs from z in exactly
// one iota entry, by one
std::vector<Permutation> lattice_covers(const Permutation& z);

// (-1)^{|iota(z)|-|iota(y)|} when iota(z)-iota(y) is a 0/1 vector, else 0
int lattice_mobius(const Permutation& y, const Permutation& z);

// C_z^vee = { z^{rm(C)} : C subset of CInv(z) }, 2^{|CInv(z)|} elements
std::vector<Permutation> boolean_sublattice(const Permutation& z);

std::vector<Permutation> upper_set(const Permutation& w);
std::vector<Permutation> lower_set(const Permutation& w);

// |iota(w)| = total number of inversions
int inversion_sum(const Permutation& w);

}  // namespace scfut
