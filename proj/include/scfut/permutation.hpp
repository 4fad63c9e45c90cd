#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scfut {

// A permutation of {1..n} in one line notation; n == 0 is the empty
// permutation (unit of the Hopf algebra).  Immutable value type.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);  // validates bijectivity
    static Permutation identity(int n);

    int size() const { return static_cast<int>(word_.size()); }
    // w(i), 1-based
    int operator()(int i) const { return word_[static_cast<size_t>(i - 1)]; }
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> word_;
};

// Orders permutations by degree, then lexicographically by one-line word.
// This is the canonical term order for serialization.
struct PermutationOrder {
    bool operator()(const Permutation& a, const Permutation& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.word() < b.word();
    }
};

// iota_k = #{ i < w^-1(k) : w(i) > k }, with 0 <= iota_k <= n-k.
struct InvTable {
    std::vector<int> entries;
    friend bool operator==(const InvTable&, const InvTable&) = default;
};

// iota^vee_k = n - k - iota_k.
struct DualInvTable {
    std::vector<int> entries;
    friend bool operator==(const DualInvTable&, const DualInvTable&) = default;
};

// R_w = {(i,j) : w(i) > j, w^-1(j) > i}; column counts give iota, row
// counts give kappa.
struct RotheDiagram {
    std::vector<std::pair<int, int>> cells;  // sorted lexicographically
    friend bool operator==(const RotheDiagram&, const RotheDiagram&) = default;
};

// A value pair (high, low) with high > low; swapping the two values in w
// lowers iota_low by exactly one.  Second coordinates are distinct across
// the covering inversions of a fixed w.
struct CoveringInversion {
    int high = 0;
    int low = 0;
    friend bool operator==(const CoveringInversion&, const CoveringInversion&) = default;
    friend auto operator<=>(const CoveringInversion&, const CoveringInversion&) = default;
};

InvTable inversion_table(const Permutation& w);
// code(w) == inversion_table(inverse(w))
InvTable code(const Permutation& w);
// Rejects entries outside [0, n-k].
Permutation from_inversion_table(const InvTable& t);
DualInvTable dual_inversion_table(const Permutation& w);
Permutation from_dual_inversion_table(const DualInvTable& t);
RotheDiagram rothe_diagram(const Permutation& w);

// (w(i), w(j)) with i < j, w(i) > w(j) and i maximal for this j; sorted by
// low value.  The arc diagram of the full set is crossing free.
std::vector<CoveringInversion> covering_inversions(const Permutation& w);

// Removes the inversions of C in increasing order of second coordinate;
// rejects C not contained in covering_inversions(w).
Permutation remove_covering_inversions(const Permutation& w,
                                       std::vector<CoveringInversion> C);

// Text form "3,1,4,6,2,5"; the empty permutation is "".
std::string to_text(const Permutation& w);
Permutation permutation_from_text(std::string_view s);

std::vector<Permutation> all_permutations(int n);

long long factorial(int n);
// Factorial-number-system rank within S_n, 0 <= rank < n!.
long long permutation_rank(const Permutation& w);
Permutation permutation_unrank(int n, long long r);

}  // namespace scfut
