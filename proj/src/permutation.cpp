#include "scfut/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace scfut {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : word_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("one-line word is not a permutation of 1..n");
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    Permutation p;
    p.word_ = std::move(w);
    return p;
}

Permutation Permutation::inverse() const {
    const int n = size();
    std::vector<int> inv(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) inv[static_cast<size_t>(word_[static_cast<size_t>(i - 1)] - 1)] = i;
    Permutation p;
    p.word_ = std::move(inv);
    return p;
}

InvTable inversion_table(const Permutation& w) {
    const int n = w.size();
    InvTable t;
    t.entries.assign(static_cast<size_t>(n), 0);
    // iota_k counts letters to the left of k that exceed k
    for (int pos = 1; pos <= n; ++pos) {
        const int v = w(pos);
        for (int i = 1; i < pos; ++i)
            if (w(i) > v) ++t.entries[static_cast<size_t>(v - 1)];
    }
    return t;
}

InvTable code(const Permutation& w) { return inversion_table(w.inverse()); }

Permutation from_inversion_table(const InvTable& t) {
    const int n = static_cast<int>(t.entries.size());
    for (int k = 1; k <= n; ++k) {
        const int e = t.entries[static_cast<size_t>(k - 1)];
        if (e < 0 || e > n - k) throw std::invalid_argument("inversion table entry out of range");
    }
    // w^-1(j) is the (1 + iota_j)-th smallest position not used by smaller j
    std::vector<int> unused(static_cast<size_t>(n));
    std::iota(unused.begin(), unused.end(), 1);
    std::vector<int> word(static_cast<size_t>(n), 0);
    for (int j = 1; j <= n; ++j) {
        const auto k = static_cast<size_t>(t.entries[static_cast<size_t>(j - 1)]);
        const int pos = unused[k];
        unused.erase(unused.begin() + static_cast<std::ptrdiff_t>(k));
        word[static_cast<size_t>(pos - 1)] = j;
    }
    return Permutation(std::move(word));
}

DualInvTable dual_inversion_table(const Permutation& w) {
    const int n = w.size();
    InvTable t = inversion_table(w);
    DualInvTable d;
    d.entries.assign(static_cast<size_t>(n), 0);
    for (int k = 1; k <= n; ++k)
        d.entries[static_cast<size_t>(k - 1)] = n - k - t.entries[static_cast<size_t>(k - 1)];
    return d;
}

Permutation from_dual_inversion_table(const DualInvTable& t) {
    const int n = static_cast<int>(t.entries.size());
    InvTable inv;
    inv.entries.assign(static_cast<size_t>(n), 0);
    for (int k = 1; k <= n; ++k) {
        const int e = t.entries[static_cast<size_t>(k - 1)];
        if (e < 0 || e > n - k) throw std::invalid_argument("dual inversion table entry out of range");
        inv.entries[static_cast<size_t>(k - 1)] = n - k - e;
    }
    return from_inversion_table(inv);
}

RotheDiagram rothe_diagram(const Permutation& w) {
    const int n = w.size();
    const Permutation wi = w.inverse();
    RotheDiagram d;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (w(i) > j && wi(j) > i) d.cells.emplace_back(i, j);
    return d;
}

std::vector<CoveringInversion> covering_inversions(const Permutation& w) {
    const int n = w.size();
    std::vector<CoveringInversion> out;
    for (int j = 1; j <= n; ++j) {
        // maximal i < j with w(i) > w(j); everything strictly between is smaller
        for (int i = j - 1; i >= 1; --i) {
            if (w(i) > w(j)) {
                out.push_back({w(i), w(j)});
                break;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const CoveringInversion& a, const CoveringInversion& b) {
        return a.low < b.low;
    });
    return out;
}

Permutation remove_covering_inversions(const Permutation& w, std::vector<CoveringInversion> C) {
    {
        auto all = covering_inversions(w);
        for (const auto& c : C)
            if (std::find(all.begin(), all.end(), c) == all.end())
                throw std::invalid_argument("set contains a non covering inversion");
    }
    std::sort(C.begin(), C.end(), [](const CoveringInversion& a, const CoveringInversion& b) {
        return a.low < b.low;
    });
    // Removing in increasing order of second coordinate keeps the rest of C
    // covering inversions of the intermediate permutations.
    std::vector<int> word = w.word();
    for (const auto& c : C) {
        auto hi = std::find(word.begin(), word.end(), c.high);
        auto lo = std::find(word.begin(), word.end(), c.low);
        std::iter_swap(hi, lo);
    }
    return Permutation(std::move(word));
}

std::string to_text(const Permutation& w) {
    std::string s;
    for (int i = 1; i <= w.size(); ++i) {
        if (i > 1) s += ',';
        s += std::to_string(w(i));
    }
    return s;
}

Permutation permutation_from_text(std::string_view s) {
    std::vector<int> word;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string_view::npos) comma = s.size();
        int value = 0;
        auto [p, ec] = std::from_chars(s.data() + pos, s.data() + comma, value);
        if (ec != std::errc() || p != s.data() + comma)
            throw std::invalid_argument("bad permutation text: expected comma separated integers");
        word.push_back(value);
        pos = comma + 1;
    }
    return Permutation(std::move(word));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> word(static_cast<size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    std::vector<Permutation> out;
    out.reserve(static_cast<size_t>(factorial(n)));
    do {
        out.push_back(Permutation(word));
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

long long permutation_rank(const Permutation& w) {
    const int n = w.size();
    long long r = 0;
    for (int i = 1; i <= n; ++i) {
        int smaller_right = 0;
        for (int j = i + 1; j <= n; ++j)
            if (w(j) < w(i)) ++smaller_right;
        r += smaller_right * factorial(n - i);
    }
    return r;
}

Permutation permutation_unrank(int n, long long r) {
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> word;
    word.reserve(static_cast<size_t>(n));
    for (int i = n; i >= 1; --i) {
        const long long f = factorial(i - 1);
        const auto k = static_cast<size_t>(r / f);
        r %= f;
        word.push_back(pool[k]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return Permutation(std::move(word));
}

}  // namespace scfut
