#include "scfut/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace scfut {

namespace {

void require_same_degree(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw std::invalid_argument("degree mismatch");
}

// Enumerates all inversion tables dominating (or dominated by) t.
void extend_componentwise(const std::vector<int>& t, bool upward,
                          std::vector<Permutation>& out) {
    const int n = static_cast<int>(t.size());
    std::vector<int> cur(t);
    std::vector<int> lo(static_cast<size_t>(n)), hi(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        lo[static_cast<size_t>(k)] = upward ? t[static_cast<size_t>(k)] : 0;
        hi[static_cast<size_t>(k)] = upward ? n - 1 - k : t[static_cast<size_t>(k)];
    }
    cur = lo;
    while (true) {
        out.push_back(from_inversion_table(InvTable{cur}));
        int k = n - 1;
        while (k >= 0 && cur[static_cast<size_t>(k)] == hi[static_cast<size_t>(k)]) {
            cur[static_cast<size_t>(k)] = lo[static_cast<size_t>(k)];
            --k;
        }
        if (k < 0) break;
        ++cur[static_cast<size_t>(k)];
    }
}

}  // namespace

bool lattice_leq(const Permutation& u, const Permutation& v) {
    require_same_degree(u, v);
    const InvTable a = inversion_table(u), b = inversion_table(v);
    for (size_t k = 0; k < a.entries.size(); ++k)
        if (a.entries[k] > b.entries[k]) return false;
    return true;
}

Permutation lattice_meet(const Permutation& u, const Permutation& v) {
    require_same_degree(u, v);
    InvTable a = inversion_table(u);
    const InvTable b = inversion_table(v);
    for (size_t k = 0; k < a.entries.size(); ++k)
        a.entries[k] = std::min(a.entries[k], b.entries[k]);
    return from_inversion_table(a);
}

Permutation lattice_join(const Permutation& u, const Permutation& v) {
    require_same_degree(u, v);
    InvTable a = inversion_table(u);
    const InvTable b = inversion_table(v);
    for (size_t k = 0; k < a.entries.size(); ++k)
        a.entries[k] = std::max(a.entries[k], b.entries[k]);
    return from_inversion_table(a);
}

std::vector<Permutation> lattice_covers(const Permutation& z) {
    std::vector<Permutation> out;
    for (const auto& c : covering_inversions(z))
        out.push_back(remove_covering_inversions(z, {c}));
    std::sort(out.begin(), out.end());
    return out;
}

int lattice_mobius(const Permutation& y, const Permutation& z) {
    require_same_degree(y, z);
    const InvTable a = inversion_table(y), b = inversion_table(z);
    int ones = 0;
    for (size_t k = 0; k < a.entries.size(); ++k) {
        const int d = b.entries[k] - a.entries[k];
        if (d < 0 || d > 1) return 0;
        ones += d;
    }
    return (ones % 2 == 0) ? 1 : -1;
}

std::vector<Permutation> boolean_sublattice(const Permutation& z) {
    const auto cinv = covering_inversions(z);
    const size_t m = cinv.size();
    std::vector<Permutation> out;
    out.reserve(size_t{1} << m);
    for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
        std::vector<CoveringInversion> C;
        for (size_t i = 0; i < m; ++i)
            if (mask & (size_t{1} << i)) C.push_back(cinv[i]);
        out.push_back(remove_covering_inversions(z, std::move(C)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> upper_set(const Permutation& w) {
    std::vector<Permutation> out;
    extend_componentwise(inversion_table(w).entries, true, out);
    return out;
}

std::vector<Permutation> lower_set(const Permutation& w) {
    std::vector<Permutation> out;
    extend_componentwise(inversion_table(w).entries, false, out);
    return out;
}

int inversion_sum(const Permutation& w) {
    const InvTable t = inversion_table(w);
    return std::accumulate(t.entries.begin(), t.entries.end(), 0);
}

}  // namespace scfut
