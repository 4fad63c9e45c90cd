#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "scfut/lattice.hpp"
#include "scfut/oracle.hpp"
#include "scfut/shuffle.hpp"

using namespace scfut;

namespace {

Permutation P(std::initializer_list<int> w) { return Permutation(std::vector<int>(w)); }

UtMatrix single_entry(int n, int q, int i, int j, int t) {
    UtMatrix x;
    x.n = n;
    x.q = q;
    if (t % q != 0) x.entries.push_back({{i, j}, t});
    return x;
}

ClassFunction chi(const Permutation& w, const UtGroup& g) {
    return basis_function(BasisKind::Chi, w, g);
}

}  // namespace

TEST_CASE("group enumeration") {
    CHECK(enumerate_group(2, 2).size() == 2);
    CHECK(enumerate_group(3, 2).size() == 8);
    CHECK(enumerate_group(4, 3).size() == 729);
    CHECK_THROWS(UtGroup(5, 5));   // 5^10 exceeds the size guard
    CHECK_THROWS(UtGroup(3, 4));   // q must be prime
    CHECK_THROWS(UtGroup(6, 2));
    CHECK(UtGroup(0, 2).size() == 1);
    CHECK(UtGroup(1, 3).size() == 1);

    const UtGroup g(3, 3);
    for (long long idx = 0; idx < g.size(); ++idx) CHECK(g.index_of(g.element(idx)) == idx);
}

TEST_CASE("superclass labels and sizes") {
    const UtGroup g(3, 2);
    CHECK(g.superclass_label(0) == Permutation::identity(3));
    CHECK(g.superclass_label(g.index_of(single_entry(3, 2, 1, 3, 1))) == P({2, 3, 1}));

    for (int q : {2, 3}) {
        const UtGroup h(3, q);
        std::map<Permutation, long long> counts;
        for (long long idx = 0; idx < h.size(); ++idx) ++counts[h.superclass_label(idx)];
        CHECK(counts[P({3, 1, 2})] == static_cast<long long>(q - 1) * (q - 1));
        CHECK(counts[P({2, 3, 1})] == static_cast<long long>(q) * (q - 1));
        long long total = 0;
        for (const auto& [w, c] : counts) total += c;
        CHECK(total == h.size());
        // label's class contains its representative
        for (const auto& w : all_permutations(3))
            CHECK(h.superclass_label(h.class_representative(w)) == w);
    }
}

TEST_CASE("supercharacter values") {
    // the top of the lattice gives the trivial character
    const UtGroup g(3, 2);
    for (long long idx = 0; idx < g.size(); ++idx)
        CHECK(supercharacter_value(P({3, 2, 1}), g.element(idx)) == 1);

    for (int q : {2, 3, 5}) {
        UtMatrix zero;
        zero.n = 2;
        zero.q = q;
        CHECK(supercharacter_value(P({1, 2}), zero) == q - 1);
        CHECK(supercharacter_value(P({1, 2}), single_entry(2, q, 1, 2, 1)) == -1);
        CHECK(supercharacter_value(P({2, 1}), single_entry(2, q, 1, 2, 1)) == 1);
    }

    // sum of all supercharacters is the regular character
    for (int q : {2, 3}) {
        const UtGroup h(3, q);
        for (long long idx = 0; idx < h.size(); ++idx) {
            Rat sum(0);
            for (const auto& w : all_permutations(3))
                sum += supercharacter_value(w, h.element(idx));
            CHECK(sum == (idx == 0 ? Rat(static_cast<long>(h.size())) : Rat(0)));
        }
    }
}

TEST_CASE("basis functions") {
    const UtGroup g(2, 3);
    const auto delta_id = basis_function(BasisKind::Delta, Permutation::identity(2), g);
    for (long long idx = 0; idx < g.size(); ++idx)
        CHECK(delta_id.values[static_cast<size_t>(idx)] == (idx == 0 ? 1 : 0));

    const auto chibar = basis_function(BasisKind::ChiBar, Permutation::identity(2), g);
    CHECK(chibar.values[0] == 3);
    CHECK(chibar.values[1] == 0);
    CHECK(chibar.values[2] == 0);

    for (int q : {2, 3}) {
        const UtGroup h(3, q);
        for (const auto& w : all_permutations(3)) {
            // delta_bar is (|N|/|G|) chi_bar and the lattice sums match
            const auto db = basis_function(BasisKind::DeltaBar, w, h);
            const auto cb = basis_function(BasisKind::ChiBar, w, h);
            Rat ratio = Rat(1);
            for (int i = 0; i < h.coord_count() - inversion_sum(w); ++i) ratio /= q;
            ratio.canonicalize();
            for (size_t i = 0; i < db.values.size(); ++i)
                CHECK(db.values[i] == ratio * cb.values[i]);

            ClassFunction sum{h.n(), h.q(), std::vector<Rat>(static_cast<size_t>(h.size()), Rat(0))};
            for (const auto& v : upper_set(w)) {
                const auto cf = chi(v, h);
                for (size_t i = 0; i < sum.values.size(); ++i) sum.values[i] += cf.values[i];
            }
            CHECK(sum == cb);
        }
    }
}

TEST_CASE("inner products") {
    for (int q : {2, 3}) {
        const UtGroup g(3, q);
        std::vector<std::pair<Permutation, ClassFunction>> chis;
        for (const auto& w : all_permutations(3)) chis.emplace_back(w, chi(w, g));
        for (const auto& [w, cw] : chis)
            for (const auto& [v, cv] : chis) {
                const Rat expect = w == v ? cw.values[0] : Rat(0);
                CHECK(inner_product(cw, cv) == expect);
            }
        std::map<Permutation, long long> counts;
        for (long long idx = 0; idx < g.size(); ++idx) ++counts[g.superclass_label(idx)];
        for (const auto& w : all_permutations(3)) {
            const auto d = basis_function(BasisKind::Delta, w, g);
            Rat expect(static_cast<long>(counts[w]), static_cast<long>(g.size()));
            expect.canonicalize();
            CHECK(inner_product(d, d) == expect);
        }
    }
    const UtGroup g2(2, 2);
    CHECK(inner_product(chi(P({1, 2}), g2), chi(P({1, 2}), g2)) == 1);
}

TEST_CASE("subgroup shapes") {
    const auto s = subgroup_shape(9, PositionSet(9, {1, 4, 5, 7}));
    CHECK(s.u_coords.size() == 6);
    CHECK(s.l_coords.size() == 13);
    CHECK(s.udual_coords.size() == 10);
    CHECK(s.r_coords.size() == 7);

    const auto empty = subgroup_shape(4, PositionSet(4, {}));
    CHECK(empty.u_coords.empty());
    CHECK(empty.l_coords.empty());
    CHECK(empty.r_coords.empty());
    CHECK(empty.udual_coords.size() == 6);

    const auto full = subgroup_shape(4, PositionSet(4, {1, 2, 3, 4}));
    CHECK(full.u_coords.size() == 6);
    CHECK(full.l_coords.empty());
    CHECK(full.udual_coords.empty());
    CHECK(full.r_coords.empty());

    // the reindexing maps are bijections onto the small groups' coordinates
    for (int n = 2; n <= 5; ++n)
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> pos;
            for (int i = 1; i <= n; ++i)
                if (mask & (1u << (i - 1))) pos.push_back(i);
            const auto sh = subgroup_shape(n, PositionSet(n, pos));
            CHECK(sh.u_coords.size() + sh.l_coords.size() + sh.udual_coords.size() +
                      sh.r_coords.size() ==
                  static_cast<size_t>(n * (n - 1) / 2));
            std::vector<char> seen_l(static_cast<size_t>(sh.m * (sh.m - 1) / 2), 0);
            for (int c : sh.udual_coords) {
                const int t = sh.sub_coord[static_cast<size_t>(c)];
                CHECK(t >= 0);
                CHECK(!seen_l[static_cast<size_t>(t)]);
                seen_l[static_cast<size_t>(t)] = 1;
            }
            std::vector<char> seen_r(static_cast<size_t>(sh.k * (sh.k - 1) / 2), 0);
            for (int c : sh.u_coords) {
                const int t = sh.sub_coord[static_cast<size_t>(c)];
                CHECK(t >= 0);
                CHECK(!seen_r[static_cast<size_t>(t)]);
                seen_r[static_cast<size_t>(t)] = 1;
            }
        }
}

TEST_CASE("exflation") {
    // A empty: the left factor passes through
    const UtGroup g(3, 2);
    const auto shape = subgroup_shape(3, PositionSet(3, {}));
    const UtGroup trivial(0, 2);
    ClassFunction unit{0, 2, {Rat(1)}};
    for (const auto& w : all_permutations(3))
        CHECK(exflation(chi(w, g), unit, shape, g) == chi(w, g));

    // boundary instance: the functor value is the full regular average, one
    // supercharacter more than the bowtie label
    const UtGroup g2(2, 2);
    const auto shape2 = subgroup_shape(2, PositionSet(2, {2}));
    ClassFunction one{1, 2, {Rat(1)}};
    const auto ex = exflation(one, one, shape2, g2);
    CHECK(ex.values == std::vector<Rat>{Rat(2), Rat(0)});
    const auto coeffs = decompose_chi(ex, g2);
    REQUIRE(coeffs.size() == 2);
    CHECK(coeffs[0].first == P({1, 2}));
    CHECK(coeffs[0].second == 1);
    CHECK(coeffs[1].first == P({2, 1}));
    CHECK(coeffs[1].second == 1);

    // interior instance matches the bowtie label exactly
    const auto shape3 = subgroup_shape(2, PositionSet(2, {1}));
    CHECK(exflation(one, one, shape3, g2) ==
          chi(bowtie(P({1}), P({1}), PositionSet(2, {1})), g2));
}

TEST_CASE("delapsing") {
    const UtGroup g(2, 2);
    const auto shape = subgroup_shape(2, PositionSet(2, {2}));
    const auto d21 = delapsing(chi(P({2, 1}), g), shape, g);
    CHECK(d21.values == std::vector<Rat>{Rat(0)});
    const auto d12 = delapsing(chi(P({1, 2}), g), shape, g);
    CHECK(d12.values == std::vector<Rat>{Rat(1)});

    // deconcatenation across all (A, w) at n = 3, both fields
    for (int q : {2, 3}) {
        const UtGroup h(3, q);
        for (unsigned mask = 0; mask < 8; ++mask) {
            std::vector<int> pos;
            for (int i = 1; i <= 3; ++i)
                if (mask & (1u << (i - 1))) pos.push_back(i);
            const auto sh = subgroup_shape(3, PositionSet(3, pos));
            const UtGroup left(sh.m, q), right(sh.k, q);
            for (const auto& w : all_permutations(3)) {
                const auto dela = delapsing(chi(w, h), sh, h);
                std::vector<int> winv_a;
                for (int a : pos) winv_a.push_back(w.inverse()(a));
                std::sort(winv_a.begin(), winv_a.end());
                bool terminal = true;
                for (size_t t = 0; t < winv_a.size(); ++t)
                    if (winv_a[t] != sh.m + 1 + static_cast<int>(t)) terminal = false;
                if (terminal) {
                    const auto parts = deconcatenate(w, sh.m);
                    CHECK(dela == tensor_function(chi(parts.first, left), chi(parts.second, right)));
                } else {
                    bool all_zero = true;
                    for (const auto& v : dela.values)
                        if (v != 0) all_zero = false;
                    CHECK(all_zero);
                }
            }
        }
    }
}

TEST_CASE("adjointness report") {
    const UtGroup g(2, 2);
    const auto report_empty = adjointness_check(g, subgroup_shape(2, PositionSet(2, {})));
    CHECK(report_empty.violations.empty());

    // the split at the top position is the minimal boundary counterexample:
    // lhs |r_A| <Dela chi^{12}, 1 (x) 1> = 2, rhs <chi^{12}, Exfl(1 (x) 1)> = 1
    const auto report = adjointness_check(g, subgroup_shape(2, PositionSet(2, {2})));
    CHECK(report.checked == 2);
    REQUIRE(report.violations.size() == 2);
    CHECK(report.violations[0] == "w=1,2 y=1 z=1 lhs=2 rhs=1");
    CHECK(report.violations[1] == "w=2,1 y=1 z=1 lhs=0 rhs=1");
}

TEST_CASE("star preserves degrees") {
    for (int q : {2, 3})
        for (int n = 0; n <= 5; ++n)
            for (const auto& w : all_permutations(n)) {
                UtMatrix zero;
                zero.n = n;
                zero.q = q;
                CHECK(supercharacter_value(w, zero) == supercharacter_value(w.inverse(), zero));
            }
}

TEST_CASE("subgroup coordinates of meet and join") {
    const UtGroup g(5, 2);
    auto coord_set = [&](const Permutation& w) {
        std::vector<char> s(static_cast<size_t>(g.coord_count()), 0);
        const InvTable t = inversion_table(w);
        for (int c = 0; c < g.coord_count(); ++c) {
            const auto [i, j] = g.coords()[static_cast<size_t>(c)];
            if (j - i <= t.entries[static_cast<size_t>(i - 1)]) s[static_cast<size_t>(c)] = 1;
        }
        return s;
    };
    for (const auto& u : all_permutations(5)) {
        // pair u against a fixed spread of partners to keep the sweep small
        for (const auto& v : {P({2, 1, 3, 4, 5}), P({5, 4, 3, 2, 1}), P({1, 3, 5, 2, 4}),
                              P({3, 1, 4, 5, 2}), u.inverse()}) {
            const auto cu = coord_set(u), cv = coord_set(v);
            const auto cm = coord_set(lattice_meet(u, v)), cj = coord_set(lattice_join(u, v));
            for (int c = 0; c < g.coord_count(); ++c) {
                CHECK(cm[static_cast<size_t>(c)] ==
                      (cu[static_cast<size_t>(c)] && cv[static_cast<size_t>(c)]));
                CHECK(cj[static_cast<size_t>(c)] ==
                      (cu[static_cast<size_t>(c)] || cv[static_cast<size_t>(c)]));
            }
        }
    }
}

TEST_CASE("four families are bases") {
    for (int q : {2, 3})
        for (int n = 0; n <= 4; ++n) {
            const UtGroup g(n, q);
            const auto perms = all_permutations(n);
            for (const auto kind :
                 {BasisKind::Delta, BasisKind::DeltaBar, BasisKind::Chi, BasisKind::ChiBar}) {
                std::vector<std::vector<Rat>> mat;
                for (const auto& w : perms) {
                    const auto f = basis_function(kind, w, g);
                    std::vector<Rat> row;
                    for (const auto& v : perms)
                        row.push_back(f.values[static_cast<size_t>(g.class_representative(v))]);
                    mat.push_back(std::move(row));
                }
                const size_t dim = mat.size();
                size_t rank = 0;
                for (size_t col = 0; col < dim && rank < dim; ++col) {
                    size_t pivot = rank;
                    while (pivot < dim && mat[pivot][col] == 0) ++pivot;
                    if (pivot == dim) continue;
                    std::swap(mat[pivot], mat[rank]);
                    for (size_t r = 0; r < dim; ++r) {
                        if (r == rank || mat[r][col] == 0) continue;
                        Rat factor = mat[r][col] / mat[rank][col];
                        factor.canonicalize();
                        for (size_t cc = col; cc < dim; ++cc) {
                            Rat t = mat[r][cc] - factor * mat[rank][cc];
                            t.canonicalize();
                            mat[r][cc] = t;
                        }
                    }
                    ++rank;
                }
                CHECK(rank == dim);
            }
        }
}

TEST_CASE("supercharacter table csv") {
    const UtGroup g(2, 2);
    CHECK(supercharacter_table_csv(g) ==
          "chi,\"1,2\",\"2,1\"\n"
          "\"1,2\",1,-1\n"
          "\"2,1\",1,1\n");
}
