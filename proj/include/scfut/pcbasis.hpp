#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scfut/permutation.hpp"

namespace scfut {

// Structure constants of the permutation character product, computed from
// covering-inversion combinatorics.  The brute-force Mobius sum is the
// authoritative value; the core computation is a validated fast path.

// Subsets C of CInv(z) with z^{rm(C)} in dSh_{v,w}, i.e. the two value
// restrictions of z^{rm(C)} dominate v and w.  Subsets are bit masks over
// the sorted cinv list.
struct CInvSubsetFamily {
    Permutation z, v, w;
    std::vector<CoveringInversion> cinv;   // covering_inversions(z)
    std::vector<std::uint32_t> subsets;    // ascending masks

    bool contains(std::uint32_t mask) const;
    std::vector<CoveringInversion> materialize(std::uint32_t mask) const;
};

CInvSubsetFamily cinvs(const Permutation& z, const Permutation& v, const Permutation& w);

// sum over the family of (-1)^{|C|}; always in {-1,0,1}
int coefficient_bruteforce(const Permutation& v, const Permutation& w, const Permutation& z);

// Definitional scan: c is free iff membership in the family never depends
// on c.
bool is_free(const CoveringInversion& c, const Permutation& v, const Permutation& w,
             const Permutation& z);

enum class CoreStatus { Zero, Signed };

struct CoreResult {
    CoreStatus status = CoreStatus::Zero;
    int core_size = 0;  // min |C| over the core set, when Signed
    int sign = 0;       // (-1)^core_size, when Signed

    friend bool operator==(const CoreResult&, const CoreResult&) = default;
};

// Zero when a free covering inversion exists or the core set has even
// cardinality; Signed otherwise.  A Signed result with core_size == 0 is a
// legitimate +1 coefficient, which is why "no contribution" is a status and
// never the integer 0.
CoreResult core(const Permutation& v, const Permutation& w, const Permutation& z);

// The core set crSt: members of the family with no addable and no
// removable (nested) inversions.
std::vector<std::uint32_t> core_set(const CInvSubsetFamily& fam);

// Connected components (as masks) of members of crSt whose smallest
// position in z is i.
std::vector<std::uint32_t> ccs(const CInvSubsetFamily& fam, int i);

struct RemovalSequencePartition {
    std::vector<std::vector<std::uint32_t>> k_blocks;  // K_1 .. K_|B|
    std::vector<std::uint32_t> remaining;              // R(B)
};

// Partition of the family induced by a removal sequence eta of the
// removable set B; rejects invalid sequences.
RemovalSequencePartition removal_sequence_partition(const Permutation& v, const Permutation& w,
                                                    const Permutation& z,
                                                    const std::vector<CoveringInversion>& B,
                                                    const std::vector<CoveringInversion>& eta);

// One-line debug rendering: the word of z followed by the arcs of C.
std::string arc_diagram(const Permutation& z, const std::vector<CoveringInversion>& C);

}  // namespace scfut
