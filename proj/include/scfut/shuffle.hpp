#pragma once

#include <utility>
#include <vector>

#include "scfut/permutation.hpp"

namespace scfut {

// A sorted subset A of {1..n} marking positions inside a degree-n word.
struct PositionSet {
    int n = 0;
    std::vector<int> positions;  // strictly increasing, within 1..n

    PositionSet() = default;
    PositionSet(int n_, std::vector<int> positions_);  // validates

    int count() const { return static_cast<int>(positions.size()); }
    bool contains(int i) const;
    std::vector<int> complement() const;
};

std::vector<PositionSet> all_position_sets(int n, int k);

// Rank standardization: the word of ranks of the entries of v.
Permutation standardize(const std::vector<int>& v);

// (v shuffle_A w)(i) = v shifted into the complement of A, w shifted by
// deg(v) into A.  Requires |A| = deg(w) and A.n = deg(v) + deg(w).
Permutation a_shuffle(const Permutation& v, const Permutation& w, const PositionSet& A);

// { v shuffle_A w : all A }, C(m+n, n) distinct permutations, sorted
std::vector<Permutation> shuffle_set(const Permutation& v, const Permutation& w);

// m-standardized deconcatenation (prefix, suffix), each rank standardized
std::pair<Permutation, Permutation> deconcatenate(const Permutation& w, int m);

// w bowtie_A v: iota at positions off A comes from iota(w), dual inversion
// entries on A come from iota^vee(v).  Satisfies
// inverse(bowtie(w,v,A)) == a_shuffle(inverse(w), inverse(v), A).
Permutation bowtie(const Permutation& w, const Permutation& v, const PositionSet& A);

// Standardization of the subword of values in B, read in position order.
// B is a value set.
Permutation restrict_values(const Permutation& w, const std::vector<int>& B);

}  // namespace scfut
