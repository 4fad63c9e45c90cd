#include "scfut/shuffle.hpp"

#include <algorithm>
#include <stdexcept>

namespace scfut {

PositionSet::PositionSet(int n_, std::vector<int> positions_)
    : n(n_), positions(std::move(positions_)) {
    int prev = 0;
    for (int p : positions) {
        if (p <= prev || p > n) throw std::invalid_argument("position set not strictly increasing within 1..n");
        prev = p;
    }
}

bool PositionSet::contains(int i) const {
    return std::binary_search(positions.begin(), positions.end(), i);
}

std::vector<int> PositionSet::complement() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n) - positions.size());
    for (int i = 1; i <= n; ++i)
        if (!contains(i)) out.push_back(i);
    return out;
}

std::vector<PositionSet> all_position_sets(int n, int k) {
    std::vector<PositionSet> out;
    std::vector<int> pick(static_cast<size_t>(k));
    // lexicographic k-subsets of {1..n}
    for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i + 1;
    if (k > n) return out;
    while (true) {
        out.emplace_back(n, pick);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

Permutation standardize(const std::vector<int>& v) {
    std::vector<int> sorted(v);
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> word;
    word.reserve(v.size());
    for (int x : v) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
        word.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    return Permutation(std::move(word));
}

Permutation a_shuffle(const Permutation& v, const Permutation& w, const PositionSet& A) {
    const int m = v.size(), n = w.size();
    if (A.count() != n || A.n != m + n)
        throw std::invalid_argument("a_shuffle: position set size mismatch");
    std::vector<int> word(static_cast<size_t>(m + n));
    int seen_in_A = 0;
    for (int i = 1; i <= m + n; ++i) {
        if (A.contains(i)) {
            ++seen_in_A;
            word[static_cast<size_t>(i - 1)] = w(seen_in_A) + m;
        } else {
            word[static_cast<size_t>(i - 1)] = v(i - seen_in_A);
        }
    }
    return Permutation(std::move(word));
}

std::vector<Permutation> shuffle_set(const Permutation& v, const Permutation& w) {
    std::vector<Permutation> out;
    for (const auto& A : all_position_sets(v.size() + w.size(), w.size()))
        out.push_back(a_shuffle(v, w, A));
    std::sort(out.begin(), out.end());
    // shifted alphabets are disjoint, so distinct A give distinct words
    return out;
}

std::pair<Permutation, Permutation> deconcatenate(const Permutation& w, int m) {
    const int n = w.size();
    if (m < 0 || m > n) throw std::invalid_argument("deconcatenate: split point out of range");
    std::vector<int> head, tail;
    head.reserve(static_cast<size_t>(m));
    tail.reserve(static_cast<size_t>(n - m));
    for (int i = 1; i <= m; ++i) head.push_back(w(i));
    for (int i = m + 1; i <= n; ++i) tail.push_back(w(i));
    return {standardize(head), standardize(tail)};
}

Permutation bowtie(const Permutation& w, const Permutation& v, const PositionSet& A) {
    const int m = w.size(), k = v.size();
    if (A.count() != k || A.n != m + k)
        throw std::invalid_argument("bowtie: position set size mismatch");
    const int n = m + k;
    const InvTable iw = inversion_table(w);
    const DualInvTable dv = dual_inversion_table(v);
    InvTable t;
    t.entries.assign(static_cast<size_t>(n), 0);
    int in_A = 0;
    for (int j = 1; j <= n; ++j) {
        if (A.contains(j)) {
            ++in_A;
            // iota^vee_j = iota^vee of v at the rank of j within A
            const int dual = dv.entries[static_cast<size_t>(in_A - 1)];
            t.entries[static_cast<size_t>(j - 1)] = n - j - dual;
        } else {
            t.entries[static_cast<size_t>(j - 1)] = iw.entries[static_cast<size_t>(j - in_A - 1)];
        }
    }
    return from_inversion_table(t);
}

Permutation restrict_values(const Permutation& w, const std::vector<int>& B) {
    std::vector<int> value_set(B);
    std::sort(value_set.begin(), value_set.end());
    std::vector<int> subword;
    subword.reserve(value_set.size());
    for (int i = 1; i <= w.size(); ++i)
        if (std::binary_search(value_set.begin(), value_set.end(), w(i)))
            subword.push_back(w(i));
    return standardize(subword);
}

}  // namespace scfut
