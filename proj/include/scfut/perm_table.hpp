#pragma once

#include <cstdint>
#include <vector>

#include "scfut/permutation.hpp"

namespace scfut {

// Cached per-degree tables for exhaustive sweeps: permutations by rank, the
// lattice upper sets with Mobius signs, and inverse ranks.
struct PermTable {
    int n = 0;
    std::vector<Permutation> perms;                 // indexed by rank
    std::vector<int> inverse_rank;                  // rank of w^-1
    std::vector<int> inv_sum;                       // |iota(w)|
    std::vector<std::vector<int>> upper;            // ranks of {z >= w}
    std::vector<std::vector<std::int8_t>> mobius;   // mu(w, z) aligned with upper

    // Lazily built and cached; thread safe.  n <= 8.
    static const PermTable& get(int n);
};

}  // namespace scfut
