#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "scfut/lattice.hpp"

using namespace scfut;

namespace {

Permutation P(std::initializer_list<int> w) { return Permutation(std::vector<int>(w)); }

// textbook recursion on the explicit poset, independent of the closed form
int mobius_oracle(const Permutation& y, const Permutation& z,
                  std::map<std::pair<Permutation, Permutation>, int>& memo) {
    if (y == z) return 1;
    if (!lattice_leq(y, z)) return 0;
    auto key = std::make_pair(y, z);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int sum = 0;
    for (const auto& t : all_permutations(z.size()))
        if (t != z && lattice_leq(y, t) && lattice_leq(t, z)) sum += mobius_oracle(y, t, memo);
    return memo.emplace(key, -sum).first->second;
}

}  // namespace

TEST_CASE("order") {
    CHECK(lattice_leq(Permutation::identity(4), P({4, 3, 2, 1})));
    CHECK_FALSE(lattice_leq(P({2, 1, 3, 4}), P({1, 2, 4, 3})));
    CHECK(lattice_leq(P({3, 1, 2}), P({3, 1, 2})));
    CHECK_THROWS(lattice_leq(P({1, 2}), P({1, 2, 3})));
}

TEST_CASE("meet and join") {
    CHECK(lattice_meet(P({2, 3, 1}), P({3, 1, 2})) == P({2, 1, 3}));
    CHECK(lattice_join(P({3, 1, 2}), Permutation::identity(3)) == P({3, 1, 2}));
    CHECK(lattice_meet(P({3, 1, 2}), P({3, 1, 2})) == P({3, 1, 2}));

    for (const auto& u : all_permutations(5)) {
        CHECK(lattice_join(u, Permutation::identity(5)) == u);
        CHECK(lattice_meet(u, u) == u);
    }
    // axioms on a full sweep
    for (const auto& u : all_permutations(4))
        for (const auto& v : all_permutations(4)) {
            CHECK(lattice_meet(u, v) == lattice_meet(v, u));
            CHECK(lattice_join(u, v) == lattice_join(v, u));
            CHECK(lattice_meet(u, lattice_join(u, v)) == u);
            CHECK(lattice_join(u, lattice_meet(u, v)) == u);
            CHECK(lattice_leq(lattice_meet(u, v), u));
            CHECK(lattice_leq(u, lattice_join(u, v)));
        }
}

TEST_CASE("covers") {
    CHECK(lattice_covers(P({4, 3, 2, 1})) ==
          std::vector<Permutation>{P({3, 4, 2, 1}), P({4, 2, 3, 1}), P({4, 3, 1, 2})});
    CHECK(lattice_covers(Permutation::identity(4)).empty());
    CHECK(lattice_covers(P({2, 1})) == std::vector<Permutation>{Permutation::identity(2)});
    // each cover differs by one in exactly one iota entry
    for (const auto& z : all_permutations(5))
        for (const auto& y : lattice_covers(z)) {
            CHECK(inversion_sum(z) - inversion_sum(y) == 1);
            CHECK(lattice_leq(y, z));
        }
    // covering-inversion covers agree with the raw order-theoretic covers
    for (int n = 0; n <= 4; ++n)
        for (const auto& z : all_permutations(n)) {
            std::vector<Permutation> raw;
            for (const auto& y : all_permutations(n)) {
                if (y == z || !lattice_leq(y, z)) continue;
                bool between = false;
                for (const auto& t : all_permutations(n))
                    if (t != y && t != z && lattice_leq(y, t) && lattice_leq(t, z)) between = true;
                if (!between) raw.push_back(y);
            }
            std::sort(raw.begin(), raw.end());
            CHECK(lattice_covers(z) == raw);
        }
}

TEST_CASE("mobius closed form against recursion") {
    CHECK(lattice_mobius(P({3, 1, 2}), P({3, 1, 2})) == 1);
    CHECK(lattice_mobius(Permutation::identity(2), P({2, 1})) == -1);
    CHECK(lattice_mobius(Permutation::identity(4), P({2, 1, 4, 3})) == 1);

    std::map<std::pair<Permutation, Permutation>, int> memo;
    for (int n = 0; n <= 4; ++n)
        for (const auto& y : all_permutations(n))
            for (const auto& z : all_permutations(n))
                CHECK(lattice_mobius(y, z) == mobius_oracle(y, z, memo));

    // row sums vanish except at the bottom
    for (const auto& z : all_permutations(4)) {
        int sum = 0;
        for (const auto& y : all_permutations(4))
            if (lattice_leq(y, z)) sum += lattice_mobius(y, z);
        CHECK(sum == (z == Permutation::identity(4) ? 1 : 0));
    }
}

TEST_CASE("boolean sublattice") {
    CHECK(boolean_sublattice(Permutation::identity(3)) ==
          std::vector<Permutation>{Permutation::identity(3)});
    CHECK(boolean_sublattice(P({2, 1})) ==
          std::vector<Permutation>{Permutation::identity(2), P({2, 1})});
    CHECK(boolean_sublattice(P({3, 2, 1})) ==
          std::vector<Permutation>{P({2, 1, 3}), P({2, 3, 1}), P({3, 1, 2}), P({3, 2, 1})});
    for (const auto& z : all_permutations(6))
        CHECK(boolean_sublattice(z).size() ==
              (size_t{1} << covering_inversions(z).size()));
}

TEST_CASE("upper and lower sets") {
    auto upper231 = upper_set(P({2, 3, 1}));
    std::sort(upper231.begin(), upper231.end());
    CHECK(upper231 == std::vector<Permutation>{P({2, 3, 1}), P({3, 2, 1})});
    CHECK(upper_set(Permutation::identity(3)).size() == 6);
    CHECK(lower_set(Permutation::identity(4)) ==
          std::vector<Permutation>{Permutation::identity(4)});
    for (const auto& w : all_permutations(4)) {
        for (const auto& x : upper_set(w)) CHECK(lattice_leq(w, x));
        for (const auto& x : lower_set(w)) CHECK(lattice_leq(x, w));
    }
}
