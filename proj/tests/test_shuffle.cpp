#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "scfut/lattice.hpp"
#include "scfut/shuffle.hpp"

using namespace scfut;

namespace {

Permutation P(std::initializer_list<int> w) { return Permutation(std::vector<int>(w)); }

long long binom(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<int> range(int lo, int hi) {
    std::vector<int> v(static_cast<size_t>(hi - lo + 1));
    std::iota(v.begin(), v.end(), lo);
    return v;
}

}  // namespace

TEST_CASE("position sets") {
    CHECK_THROWS(PositionSet(3, {2, 2}));
    CHECK_THROWS(PositionSet(3, {0}));
    CHECK_THROWS(PositionSet(3, {4}));
    CHECK(PositionSet(5, {2, 4}).complement() == std::vector<int>{1, 3, 5});
    CHECK(all_position_sets(6, 2).size() == 15);
    CHECK(all_position_sets(4, 0).size() == 1);
}

TEST_CASE("standardize") {
    CHECK(standardize({5, 6, 4, 7}) == P({2, 3, 1, 4}));
    CHECK(standardize({9, 7, 8, 6}) == P({4, 2, 3, 1}));
    CHECK(standardize({}) == Permutation());
}

TEST_CASE("A-shuffle") {
    CHECK(a_shuffle(P({3, 1, 5, 4, 2}), P({3, 1, 2, 4}), PositionSet(9, {1, 4, 5, 8})) ==
          P({8, 3, 1, 6, 7, 5, 4, 9, 2}));
    CHECK(a_shuffle(P({2, 1}), Permutation(), PositionSet(2, {})) == P({2, 1}));
    CHECK(a_shuffle(P({1, 2}), Permutation::identity(1), PositionSet(3, {2})) == P({1, 3, 2}));
    CHECK_THROWS(a_shuffle(P({1, 2}), P({1}), PositionSet(3, {1, 2})));
    CHECK_THROWS(a_shuffle(P({1, 2}), P({1}), PositionSet(4, {1})));
}

TEST_CASE("shuffle set") {
    CHECK(shuffle_set(Permutation::identity(1), Permutation::identity(1)) ==
          std::vector<Permutation>{P({1, 2}), P({2, 1})});
    CHECK(shuffle_set(P({1, 2}), Permutation::identity(1)) ==
          std::vector<Permutation>{P({1, 2, 3}), P({1, 3, 2}), P({3, 1, 2})});
    CHECK(shuffle_set(Permutation(), P({2, 1})) == std::vector<Permutation>{P({2, 1})});

    for (int m = 0; m <= 7; ++m)
        for (int n = 0; m + n <= 7; ++n)
            for (const auto& v : all_permutations(m))
                for (const auto& w : all_permutations(n))
                    CHECK(static_cast<long long>(shuffle_set(v, w).size()) == binom(m + n, n));
}

TEST_CASE("deconcatenate") {
    // prefix/suffix rank standardization
    CHECK(deconcatenate(P({3, 1, 9, 8, 2, 5, 6, 4, 7}), 5) ==
          std::make_pair(P({3, 1, 5, 4, 2}), P({2, 3, 1, 4})));
    // ten-letter example: split 8,3,1,10,7,4 | 6,9,2,5
    CHECK(deconcatenate(P({8, 3, 1, 10, 7, 4, 6, 9, 2, 5}), 6) ==
          std::make_pair(P({5, 2, 1, 6, 4, 3}), P({3, 4, 1, 2})));
    const Permutation w = P({2, 4, 1, 3});
    CHECK(deconcatenate(w, 4) == std::make_pair(w, Permutation()));
    CHECK(deconcatenate(w, 0) == std::make_pair(Permutation(), w));
    CHECK_THROWS(deconcatenate(w, 5));
    CHECK_THROWS(deconcatenate(w, -1));

    // unstandardizing against the original value sets reassembles w
    for (int n = 0; n <= 6; ++n)
        for (const auto& u : all_permutations(n)) {
            for (int m = 0; m <= n; ++m) {
                auto [a, b] = deconcatenate(u, m);
                std::vector<int> head, tail;
                for (int i = 1; i <= m; ++i) head.push_back(u(i));
                for (int i = m + 1; i <= n; ++i) tail.push_back(u(i));
                std::sort(head.begin(), head.end());
                std::sort(tail.begin(), tail.end());
                std::vector<int> rebuilt;
                for (int i = 1; i <= a.size(); ++i)
                    rebuilt.push_back(head[static_cast<size_t>(a(i) - 1)]);
                for (int i = 1; i <= b.size(); ++i)
                    rebuilt.push_back(tail[static_cast<size_t>(b(i) - 1)]);
                CHECK(Permutation(rebuilt) == u);
            }
        }
}

TEST_CASE("bowtie") {
    CHECK(bowtie(P({3, 1, 4, 6, 2, 5}), P({2, 4, 1, 3}), PositionSet(10, {1, 4, 5, 8})) ==
          P({6, 2, 7, 10, 3, 9, 4, 8, 1, 5}));
    CHECK(bowtie(P({3, 1, 2}), Permutation(), PositionSet(3, {})) == P({3, 1, 2}));
    CHECK_THROWS(bowtie(P({1, 2}), P({1}), PositionSet(3, {1, 2})));

    // inverse(bowtie(w, v, A)) == a_shuffle(inverse(w), inverse(v), A)
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; m + n <= 6; ++n)
            for (const auto& w : all_permutations(m))
                for (const auto& v : all_permutations(n))
                    for (const auto& A : all_position_sets(m + n, n))
                        CHECK(bowtie(w, v, A).inverse() ==
                              a_shuffle(w.inverse(), v.inverse(), A));
}

TEST_CASE("restrict to a value set") {
    CHECK(restrict_values(P({9, 7, 1, 4, 5, 8, 3, 2, 6}), range(6, 9)) == P({4, 2, 3, 1}));
    CHECK(restrict_values(P({3, 1, 9, 8, 2, 5, 6, 4, 7}), range(1, 5)) == P({3, 1, 2, 5, 4}));
    const Permutation w = P({2, 4, 1, 3});
    CHECK(restrict_values(w, range(1, 4)) == w);
    CHECK(restrict_values(w, {}) == Permutation());

    // shuffles restrict back to their factors on the two value blocks
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; m + n <= 6; ++n)
            for (const auto& v : all_permutations(m))
                for (const auto& w2 : all_permutations(n))
                    for (const auto& A : all_position_sets(m + n, n)) {
                        const Permutation y = a_shuffle(v, w2, A);
                        CHECK(restrict_values(y, range(1, m)) == v);
                        CHECK(restrict_values(y, range(m + 1, m + n)) == w2);
                    }
}
