#include "scfut/perm_table.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "scfut/lattice.hpp"

namespace scfut {

const PermTable& PermTable::get(int n) {
    if (n < 0 || n > 8) throw std::invalid_argument("perm table degree out of range");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<PermTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto t = std::make_unique<PermTable>();
    t->n = n;
    t->perms = all_permutations(n);
    const size_t count = t->perms.size();
    // all_permutations is lexicographic, which coincides with rank order
    t->inverse_rank.resize(count);
    t->inv_sum.resize(count);
    std::map<Permutation, int> rank_of;
    for (size_t r = 0; r < count; ++r) rank_of[t->perms[r]] = static_cast<int>(r);
    for (size_t r = 0; r < count; ++r) {
        t->inverse_rank[r] = rank_of.at(t->perms[r].inverse());
        t->inv_sum[r] = inversion_sum(t->perms[r]);
    }
    t->upper.resize(count);
    t->mobius.resize(count);
    for (size_t r = 0; r < count; ++r) {
        for (const auto& z : upper_set(t->perms[r])) {
            t->upper[r].push_back(rank_of.at(z));
            t->mobius[r].push_back(static_cast<std::int8_t>(lattice_mobius(t->perms[r], z)));
        }
    }
    return *cache.emplace(n, std::move(t)).first->second;
}

}  // namespace scfut
