#include "scfut/pcbasis.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "scfut/lattice.hpp"
#include "scfut/shuffle.hpp"

namespace scfut {

namespace {

// positions (i, j) in z of each covering inversion, i < j
struct ArcPositions {
    std::vector<std::pair<int, int>> pos;
};

ArcPositions arc_positions(const Permutation& z, const std::vector<CoveringInversion>& cinv) {
    const Permutation zi = z.inverse();
    ArcPositions a;
    a.pos.reserve(cinv.size());
    for (const auto& c : cinv) a.pos.emplace_back(zi(c.high), zi(c.low));
    return a;
}

bool in_dsh(const Permutation& y, const Permutation& v, const Permutation& w) {
    const int m = v.size();
    const int n = w.size();
    std::vector<int> small(static_cast<size_t>(m)), large(static_cast<size_t>(n));
    std::iota(small.begin(), small.end(), 1);
    std::iota(large.begin(), large.end(), m + 1);
    return lattice_leq(v, restrict_values(y, small)) &&
           lattice_leq(w, restrict_values(y, large));
}

// b nests in C: some arc of C strictly spans b's right endpoint and starts
// at or left of b's left endpoint
bool nests(std::uint32_t c_mask, size_t b, const ArcPositions& arcs) {
    const auto [bi, bj] = arcs.pos[b];
    for (size_t a = 0; a < arcs.pos.size(); ++a) {
        if (!(c_mask & (std::uint32_t{1} << a)) || a == b) continue;
        const auto [ai, al] = arcs.pos[a];
        if (ai <= bi && bj < al) return true;
    }
    return false;
}

struct FamilyScan {
    CInvSubsetFamily fam;
    std::vector<char> member;  // indexed by mask
};

FamilyScan scan_family(const Permutation& z, const Permutation& v, const Permutation& w) {
    if (z.size() != v.size() + w.size())
        throw std::invalid_argument("degree mismatch: |z| must be |v| + |w|");
    FamilyScan out;
    out.fam.z = z;
    out.fam.v = v;
    out.fam.w = w;
    out.fam.cinv = covering_inversions(z);
    const size_t k = out.fam.cinv.size();
    out.member.assign(size_t{1} << k, 0);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
        // cinv is sorted by second coordinate, so bit order is removal order
        std::vector<int> word = z.word();
        for (size_t i = 0; i < k; ++i) {
            if (!(mask & (std::uint32_t{1} << i))) continue;
            auto hi = std::find(word.begin(), word.end(), out.fam.cinv[i].high);
            auto lo = std::find(word.begin(), word.end(), out.fam.cinv[i].low);
            std::iter_swap(hi, lo);
        }
        const Permutation y(std::move(word));
        if (in_dsh(y, v, w)) {
            out.member[mask] = 1;
            out.fam.subsets.push_back(mask);
        }
    }
    return out;
}

bool addable_in(std::uint32_t mask, size_t b, const std::vector<char>& member,
                const ArcPositions& arcs) {
    const std::uint32_t bit = std::uint32_t{1} << b;
    return !(mask & bit) && nests(mask, b, arcs) && member[mask | bit];
}

bool removable_in(std::uint32_t mask, size_t b, const std::vector<char>& member,
                  const ArcPositions& arcs) {
    const std::uint32_t bit = std::uint32_t{1} << b;
    return (mask & bit) && nests(mask, b, arcs) && member[mask & ~bit];
}

}  // namespace

bool CInvSubsetFamily::contains(std::uint32_t mask) const {
    return std::binary_search(subsets.begin(), subsets.end(), mask);
}

std::vector<CoveringInversion> CInvSubsetFamily::materialize(std::uint32_t mask) const {
    std::vector<CoveringInversion> out;
    for (size_t i = 0; i < cinv.size(); ++i)
        if (mask & (std::uint32_t{1} << i)) out.push_back(cinv[i]);
    return out;
}

CInvSubsetFamily cinvs(const Permutation& z, const Permutation& v, const Permutation& w) {
    return scan_family(z, v, w).fam;
}

int coefficient_bruteforce(const Permutation& v, const Permutation& w, const Permutation& z) {
    const auto fam = cinvs(z, v, w);
    int sum = 0;
    for (std::uint32_t mask : fam.subsets)
        sum += (std::popcount(mask) % 2 == 0) ? 1 : -1;
    return sum;
}

bool is_free(const CoveringInversion& c, const Permutation& v, const Permutation& w,
             const Permutation& z) {
    const auto scan = scan_family(z, v, w);
    const auto it = std::find(scan.fam.cinv.begin(), scan.fam.cinv.end(), c);
    if (it == scan.fam.cinv.end()) throw std::invalid_argument("not a covering inversion of z");
    const size_t b = static_cast<size_t>(it - scan.fam.cinv.begin());
    const std::uint32_t bit = std::uint32_t{1} << b;
    const size_t k = scan.fam.cinv.size();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
        if (mask & bit) continue;
        if (scan.member[mask] != scan.member[mask | bit]) return false;
    }
    return true;
}

std::vector<std::uint32_t> core_set(const CInvSubsetFamily& fam) {
    const auto arcs = arc_positions(fam.z, fam.cinv);
    std::vector<char> member(size_t{1} << fam.cinv.size(), 0);
    for (std::uint32_t m : fam.subsets) member[m] = 1;
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask : fam.subsets) {
        bool quiet = true;
        for (size_t b = 0; b < fam.cinv.size() && quiet; ++b)
            if (addable_in(mask, b, member, arcs) || removable_in(mask, b, member, arcs))
                quiet = false;
        if (quiet) out.push_back(mask);
    }
    return out;
}

CoreResult core(const Permutation& v, const Permutation& w, const Permutation& z) {
    const auto scan = scan_family(z, v, w);
    const size_t k = scan.fam.cinv.size();
    const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << k) - 1);
    for (size_t b = 0; b < k; ++b) {
        const std::uint32_t bit = std::uint32_t{1} << b;
        bool free = true;
        for (std::uint32_t mask = 0; mask <= full && free; ++mask) {
            if (mask & bit) continue;
            if (scan.member[mask] != scan.member[mask | bit]) free = false;
        }
        if (free) return {CoreStatus::Zero, 0, 0};
    }
    const auto crst = core_set(scan.fam);
    if (crst.size() % 2 == 0) return {CoreStatus::Zero, 0, 0};
    int best = std::numeric_limits<int>::max();
    for (std::uint32_t mask : crst) best = std::min(best, std::popcount(mask));
    return {CoreStatus::Signed, best, best % 2 == 0 ? 1 : -1};
}

std::vector<std::uint32_t> ccs(const CInvSubsetFamily& fam, int i) {
    const auto arcs = arc_positions(fam.z, fam.cinv);
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask : core_set(fam)) {
        // split mask into connected components of the arc graph on positions
        std::vector<size_t> idx;
        for (size_t b = 0; b < fam.cinv.size(); ++b)
            if (mask & (std::uint32_t{1} << b)) idx.push_back(b);
        std::vector<int> comp(idx.size());
        std::iota(comp.begin(), comp.end(), 0);
        for (size_t a = 0; a < idx.size(); ++a)
            for (size_t b = a + 1; b < idx.size(); ++b) {
                const auto& pa = arcs.pos[idx[a]];
                const auto& pb = arcs.pos[idx[b]];
                const bool touch = pa.first == pb.first || pa.first == pb.second ||
                                   pa.second == pb.first || pa.second == pb.second;
                if (touch) {
                    const int ca = comp[a], cb = comp[b];
                    for (auto& c : comp)
                        if (c == cb) c = ca;
                }
            }
        for (size_t a = 0; a < idx.size(); ++a) {
            if (comp[a] != static_cast<int>(a)) continue;
            std::uint32_t cmask = 0;
            int minpos = fam.z.size() + 1;
            for (size_t b = 0; b < idx.size(); ++b)
                if (comp[b] == comp[a]) {
                    cmask |= std::uint32_t{1} << idx[b];
                    minpos = std::min({minpos, arcs.pos[idx[b]].first, arcs.pos[idx[b]].second});
                }
            if (minpos == i && std::find(out.begin(), out.end(), cmask) == out.end())
                out.push_back(cmask);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

RemovalSequencePartition removal_sequence_partition(const Permutation& v, const Permutation& w,
                                                    const Permutation& z,
                                                    const std::vector<CoveringInversion>& B,
                                                    const std::vector<CoveringInversion>& eta) {
    const auto scan = scan_family(z, v, w);
    const auto arcs = arc_positions(z, scan.fam.cinv);
    if (B.size() != eta.size()) throw std::invalid_argument("eta must order B");
    std::vector<size_t> eta_idx;
    for (const auto& b : eta) {
        const auto it = std::find(scan.fam.cinv.begin(), scan.fam.cinv.end(), b);
        if (it == scan.fam.cinv.end() ||
            std::find(B.begin(), B.end(), b) == B.end())
            throw std::invalid_argument("eta entry outside B or CInv(z)");
        eta_idx.push_back(static_cast<size_t>(it - scan.fam.cinv.begin()));
    }
    {
        auto sorted = eta_idx;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("eta repeats an inversion");
    }

    auto r_of = [&](size_t upto) {  // R({eta(1..upto)})
        std::vector<std::uint32_t> r;
        for (std::uint32_t mask : scan.fam.subsets) {
            bool quiet = true;
            for (size_t j = 0; j < upto && quiet; ++j) {
                const size_t b = eta_idx[j];
                if (addable_in(mask, b, scan.member, arcs) ||
                    removable_in(mask, b, scan.member, arcs))
                    quiet = false;
            }
            if (quiet) r.push_back(mask);
        }
        return r;
    };

    // each eta(j) must be removable in some member of R({eta(1..j-1)})
    for (size_t j = 0; j < eta_idx.size(); ++j) {
        const auto r_prev = r_of(j);
        const bool ok = std::any_of(r_prev.begin(), r_prev.end(), [&](std::uint32_t m) {
            return removable_in(m, eta_idx[j], scan.member, arcs);
        });
        if (!ok) throw std::invalid_argument("invalid removal sequence");
    }

    RemovalSequencePartition out;
    std::vector<std::uint32_t> prev = r_of(0);
    for (size_t j = 1; j <= eta_idx.size(); ++j) {
        std::vector<std::uint32_t> next = r_of(j);
        std::vector<std::uint32_t> k_block;
        std::set_difference(prev.begin(), prev.end(), next.begin(), next.end(),
                            std::back_inserter(k_block));
        out.k_blocks.push_back(std::move(k_block));
        prev = std::move(next);
    }
    out.remaining = std::move(prev);
    return out;
}

std::string arc_diagram(const Permutation& z, const std::vector<CoveringInversion>& C) {
    std::string s;
    for (int i = 1; i <= z.size(); ++i) {
        if (i > 1) s += ' ';
        s += std::to_string(z(i));
    }
    s += "  arcs:";
    auto sorted = C;
    std::sort(sorted.begin(), sorted.end(),
              [](const CoveringInversion& a, const CoveringInversion& b) { return a.low < b.low; });
    for (const auto& c : sorted) {
        s += " (" + std::to_string(c.high) + "," + std::to_string(c.low) + ")";
    }
    return s;
}

}  // namespace scfut
