#include "scfut/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "scfut/hopf.hpp"
#include "scfut/lattice.hpp"
#include "scfut/oracle.hpp"
#include "scfut/pcbasis.hpp"
#include "scfut/perm_table.hpp"
#include "scfut/shuffle.hpp"

namespace scfut {

namespace {

using Cases = std::vector<VerifyCase>;

void add(Cases& cases, const std::string& suite, const std::string& name, bool pass,
         std::string detail = "") {
    cases.push_back({suite, name, pass, std::move(detail)});
}

// Splits [0, count) across jobs threads; each worker appends to its own
// case list, merged afterwards.  All checked operations are pure.
Cases parallel_cases(int jobs, long long count,
                     const std::function<void(long long, Cases&)>& body) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count < 2) {
        Cases cases;
        for (long long i = 0; i < count; ++i) body(i, cases);
        return cases;
    }
    std::vector<Cases> partial(static_cast<size_t>(jobs));
    std::atomic<long long> next{0};
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t) {
        workers.emplace_back([&, t] {
            long long i;
            while ((i = next.fetch_add(1)) < count) body(i, partial[static_cast<size_t>(t)]);
        });
    }
    for (auto& th : workers) th.join();
    Cases merged;
    for (auto& p : partial)
        for (auto& c : p) merged.push_back(std::move(c));
    return merged;
}

// ---------------------------------------------------------------- perm --

Cases suite_perm(const VerifyOptions& opt) {
    Cases cases;
    const std::string S = "perm";
    for (int n = 0; n <= opt.max_degree; ++n) {
        bool roundtrip = true, kappa = true;
        for (const auto& w : all_permutations(n)) {
            if (from_inversion_table(inversion_table(w)) != w) roundtrip = false;
            if (code(w) != inversion_table(w.inverse())) kappa = false;
        }
        add(cases, S, "invtable_roundtrip_n" + std::to_string(n), roundtrip);
        add(cases, S, "code_is_inverse_invtable_n" + std::to_string(n), kappa);
    }
    for (int n = 0; n <= std::min(opt.max_degree, 6); ++n) {
        bool rothe = true, removal = true, boolean_size = true;
        for (const auto& w : all_permutations(n)) {
            const auto d = rothe_diagram(w);
            InvTable iota = inversion_table(w), kap = code(w);
            std::vector<int> cols(static_cast<size_t>(n), 0), rows(static_cast<size_t>(n), 0);
            for (const auto& [i, j] : d.cells) {
                ++rows[static_cast<size_t>(i - 1)];
                ++cols[static_cast<size_t>(j - 1)];
            }
            if (cols != iota.entries || rows != kap.entries) rothe = false;

            const auto cinv = covering_inversions(w);
            std::vector<Permutation> removed;
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << cinv.size()); ++mask) {
                std::vector<CoveringInversion> C;
                for (size_t i = 0; i < cinv.size(); ++i)
                    if (mask & (std::uint32_t{1} << i)) C.push_back(cinv[i]);
                const Permutation y = remove_covering_inversions(w, C);
                removed.push_back(y);
                InvTable expect = iota;
                for (const auto& c : C) --expect.entries[static_cast<size_t>(c.low - 1)];
                if (inversion_table(y) != expect) removal = false;
            }
            std::sort(removed.begin(), removed.end());
            removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
            if (removed.size() != (size_t{1} << cinv.size())) boolean_size = false;
        }
        add(cases, S, "rothe_counts_n" + std::to_string(n), rothe);
        add(cases, S, "removal_decrements_iota_n" + std::to_string(n), removal);
        add(cases, S, "removals_distinct_n" + std::to_string(n), boolean_size);
    }
    return cases;
}

// -------------------------------------------------------------- lattice --

int mobius_recursive(const Permutation& y, const Permutation& z,
                     std::map<std::pair<Permutation, Permutation>, int>& memo) {
    if (y == z) return 1;
    if (!lattice_leq(y, z)) return 0;
    const auto key = std::make_pair(y, z);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int sum = 0;
    // mu(y,z) = -sum_{y <= t < z} mu(y,t), over the interval
    for (const auto& t : upper_set(y))
        if (t != z && lattice_leq(t, z)) sum += mobius_recursive(y, t, memo);
    return memo.emplace(key, -sum).first->second;
}

Cases suite_lattice(const VerifyOptions& opt) {
    Cases cases;
    const std::string S = "lattice";
    for (int n = 0; n <= opt.max_degree; ++n) {
        // every bounded integer vector is realized exactly once
        long long expected = factorial(n);
        std::vector<Permutation> hit;
        std::vector<int> t(static_cast<size_t>(n), 0);
        bool done = n == 0, realized = true;
        if (n == 0) hit.push_back(Permutation());
        while (!done) {
            hit.push_back(from_inversion_table(InvTable{t}));
            int k = n - 1;
            while (k >= 0 && t[static_cast<size_t>(k)] == n - 1 - k) {
                t[static_cast<size_t>(k)] = 0;
                --k;
            }
            if (k < 0) break;
            ++t[static_cast<size_t>(k)];
        }
        std::sort(hit.begin(), hit.end());
        realized = hit.size() == static_cast<size_t>(expected) &&
                   std::unique(hit.begin(), hit.end()) == hit.end();
        add(cases, S, "chain_product_bijection_n" + std::to_string(n), realized,
            "count=" + std::to_string(hit.size()));
    }
    for (int n = 0; n <= std::min(opt.max_degree, 5); ++n) {
        const auto perms = all_permutations(n);
        bool axioms = true;
        for (const auto& u : perms)
            for (const auto& v : perms) {
                if (lattice_meet(u, u) != u || lattice_join(u, u) != u) axioms = false;
                if (lattice_meet(u, v) != lattice_meet(v, u)) axioms = false;
                if (lattice_join(u, v) != lattice_join(v, u)) axioms = false;
                if (lattice_meet(u, lattice_join(u, v)) != u) axioms = false;
                if (lattice_join(u, lattice_meet(u, v)) != u) axioms = false;
            }
        add(cases, S, "lattice_axioms_n" + std::to_string(n), axioms);

        std::map<std::pair<Permutation, Permutation>, int> memo;
        bool mob = true, rowsum = true;
        const Permutation bottom = Permutation::identity(n);
        for (const auto& z : perms) {
            int sum = 0;
            for (const auto& y : perms) {
                if (!lattice_leq(y, z)) continue;
                const int closed = lattice_mobius(y, z);
                if (closed != mobius_recursive(y, z, memo)) mob = false;
                sum += closed;
            }
            if ((sum == 1) != (z == bottom)) rowsum = false;
            if (z != bottom && sum != 0) rowsum = false;
        }
        add(cases, S, "mobius_closed_equals_recursive_n" + std::to_string(n), mob);
        add(cases, S, "mobius_row_sum_n" + std::to_string(n), rowsum);

        bool covers_ok = true;
        for (const auto& z : perms) {
            auto cov = lattice_covers(z);
            std::vector<Permutation> dist1;
            for (const auto& y : boolean_sublattice(z))
                if (inversion_sum(z) - inversion_sum(y) == 1) dist1.push_back(y);
            std::sort(dist1.begin(), dist1.end());
            if (cov != dist1) covers_ok = false;
        }
        add(cases, S, "covers_match_boolean_sublattice_n" + std::to_string(n), covers_ok);
    }
    return cases;
}

// ----------------------------------------------------------------- hopf --

Cases suite_hopf(const VerifyOptions& opt) {
    Cases cases;
    const std::string S = "hopf";
    const int maxd = opt.max_degree;

    for (int n = 0; n <= maxd; ++n)
        add(cases, S, "graded_dimension_n" + std::to_string(n),
            static_cast<long long>(all_permutations(n).size()) == factorial(n));

    // associativity / coassociativity
    bool assoc = true;
    std::string assoc_bad;
    for (int a = 0; a <= maxd && assoc; ++a)
        for (int b = 0; a + b <= maxd && assoc; ++b)
            for (int c = 0; a + b + c <= maxd && assoc; ++c)
                for (const auto& u : all_permutations(a))
                    for (const auto& v : all_permutations(b))
                        for (const auto& w : all_permutations(c)) {
                            const auto xu = ScfElement::basis_element(Basis::Sch, u);
                            const auto xv = ScfElement::basis_element(Basis::Sch, v);
                            const auto xw = ScfElement::basis_element(Basis::Sch, w);
                            if (hopf_product(hopf_product(xu, xv), xw) !=
                                hopf_product(xu, hopf_product(xv, xw))) {
                                assoc = false;
                                assoc_bad = to_text(u) + "|" + to_text(v) + "|" + to_text(w);
                            }
                        }
    add(cases, S, "associativity_total_deg_le_" + std::to_string(maxd), assoc, assoc_bad);

    bool coassoc = true;
    for (int n = 0; n <= maxd && coassoc; ++n)
        for (const auto& w : all_permutations(n)) {
            // compare (Delta x id) Delta with (id x Delta) Delta as triple maps
            std::map<std::tuple<Permutation, Permutation, Permutation>, Rat> lhs, rhs;
            const auto d = hopf_coproduct(ScfElement::basis_element(Basis::Sch, w));
            for (const auto& [k, c] : d.terms()) {
                const auto dl = hopf_coproduct(ScfElement::basis_element(Basis::Sch, k.first));
                for (const auto& [k2, c2] : dl.terms()) lhs[{k2.first, k2.second, k.second}] += c * c2;
                const auto dr = hopf_coproduct(ScfElement::basis_element(Basis::Sch, k.second));
                for (const auto& [k2, c2] : dr.terms()) rhs[{k.first, k2.first, k2.second}] += c * c2;
            }
            if (lhs != rhs) coassoc = false;
        }
    add(cases, S, "coassociativity_deg_le_" + std::to_string(maxd), coassoc);

    // bialgebra compatibility Delta(xy) = Delta(x) Delta(y)
    const int compat_max = std::min(maxd, 5);
    bool compat = true;
    for (int a = 0; a <= compat_max && compat; ++a)
        for (int b = 0; a + b <= compat_max && compat; ++b)
            for (const auto& u : all_permutations(a))
                for (const auto& v : all_permutations(b)) {
                    const auto xu = ScfElement::basis_element(Basis::Sch, u);
                    const auto xv = ScfElement::basis_element(Basis::Sch, v);
                    if (hopf_coproduct(hopf_product(xu, xv)) !=
                        tensor_multiply(hopf_coproduct(xu), hopf_coproduct(xv)))
                        compat = false;
                }
    add(cases, S, "coproduct_is_algebra_map_deg_le_" + std::to_string(compat_max), compat);

    // star: involution, support sizes, and the product route through star
    bool star_ok = true;
    for (int a = 0; a <= std::min(maxd, 5) && star_ok; ++a)
        for (int b = 0; a + b <= std::min(maxd, 5) && star_ok; ++b)
            for (const auto& u : all_permutations(a))
                for (const auto& v : all_permutations(b)) {
                    const auto xu = ScfElement::basis_element(Basis::Sch, u);
                    const auto xv = ScfElement::basis_element(Basis::Sch, v);
                    if (star(star(xu)) != xu) star_ok = false;
                    const auto direct = hopf_product(xu, xv);
                    const auto starred = hopf_product(star(xu), star(xv));
                    if (direct.terms().size() != starred.terms().size()) star_ok = false;
                    // product computed as star(star(u) bowtie-summed star(v))
                    ScfElement via_star(Basis::Sch);
                    const auto ui = u.inverse(), vi = v.inverse();
                    for (const auto& A : all_position_sets(a + b, b))
                        via_star.add_term(bowtie(ui, vi, A).inverse(), Rat(1));
                    if (via_star != direct) star_ok = false;
                }
    add(cases, S, "star_involution_and_product_route_deg_le_" + std::to_string(std::min(maxd, 5)),
        star_ok);

    // basis conversions invert each other
    bool conv = true;
    for (int n = 0; n <= maxd; ++n)
        for (const auto& w : all_permutations(n)) {
            const auto pch = ScfElement::basis_element(Basis::Pch, w);
            const auto sch = ScfElement::basis_element(Basis::Sch, w);
            if (to_pch(to_sch(pch)) != pch || to_sch(to_pch(sch)) != sch) conv = false;
        }
    add(cases, S, "basis_conversion_roundtrip_deg_le_" + std::to_string(maxd), conv);

    // permutation character structure constants: product signs are bare
    // signs, coproduct multiplicities are positive integers
    bool prod_range = true, coprod_range = true;
    for (int a = 0; a <= maxd; ++a)
        for (int b = 0; a + b <= maxd; ++b)
            for (const auto& u : all_permutations(a))
                for (const auto& v : all_permutations(b))
                    for (const auto prod = product_pch(u, v); const auto& [z, c] : prod.terms())
                        if (c != 1 && c != -1) prod_range = false;
    for (int n = 0; n <= maxd; ++n)
        for (const auto& w : all_permutations(n))
            for (const auto cop = coproduct_pch(w); const auto& [k, c] : cop.terms())
                if (c < 1 || !rat_is_integer(c)) coprod_range = false;
    add(cases, S, "pch_product_coefficients_in_range_deg_le_" + std::to_string(maxd), prod_range);
    add(cases, S, "pch_coproduct_multiplicities_positive_deg_le_" + std::to_string(maxd),
        coprod_range);

    // star_pch: closed form equals the chi-basis route and stays a character
    bool star_pch_ok = true, positive = true;
    for (int n = 0; n <= maxd; ++n)
        for (const auto& w : all_permutations(n)) {
            const auto closed = star_pch(w);
            const auto route = to_pch(star(to_sch(ScfElement::basis_element(Basis::Pch, w))));
            if (closed != route) star_pch_ok = false;
            for (const auto conv = to_sch(closed); const auto& [x, c] : conv.terms())
                if (c < 0) positive = false;
        }
    add(cases, S, "star_pch_matches_chi_route_deg_le_" + std::to_string(maxd), star_pch_ok);
    add(cases, S, "star_pch_supercharacter_positive_deg_le_" + std::to_string(maxd), positive);

    // antipode convolution identity
    bool conv_id = true;
    for (int n = 0; n <= std::min(maxd, 5); ++n)
        for (const auto& w : all_permutations(n)) {
            const auto x = ScfElement::basis_element(Basis::Sch, w);
            ScfElement acc(Basis::Sch);
            for (const auto dx = hopf_coproduct(x); const auto& [k, c] : dx.terms()) {
                ScfElement piece = hopf_product(antipode(ScfElement::basis_element(Basis::Sch, k.first)),
                                                ScfElement::basis_element(Basis::Sch, k.second));
                piece *= c;
                acc += piece;
            }
            if (acc != hopf_unit(counit(x))) conv_id = false;
        }
    add(cases, S, "antipode_convolution_deg_le_" + std::to_string(std::min(maxd, 5)), conv_id);
    return cases;
}

// ------------------------------------------------------------------ pch --

Cases suite_pch(const VerifyOptions& opt) {
    Cases cases;
    const std::string S = "pch";
    const int maxd = opt.max_degree;

    // enumerate (v, w) pairs with deg v + deg w <= maxd
    std::vector<std::pair<Permutation, Permutation>> pairs;
    for (int a = 0; a <= maxd; ++a)
        for (int b = 0; a + b <= maxd; ++b)
            for (const auto& v : all_permutations(a))
                for (const auto& w : all_permutations(b)) pairs.emplace_back(v, w);

    std::atomic<bool> range_ok{true}, route_ok{true}, core_ok{true}, support_ok{true},
        chains_ok{true};
    std::vector<std::string> core_notes;
    std::mutex notes_mu;

    Cases par = parallel_cases(opt.jobs, static_cast<long long>(pairs.size()),
                               [&](long long i, Cases&) {
        const auto& [v, w] = pairs[static_cast<size_t>(i)];
        const int m = v.size(), deg = v.size() + w.size();
        ScfElement direct(Basis::Pch);
        for (const auto& z : all_permutations(deg)) {
            const int c = coefficient_bruteforce(v, w, z);
            if (c < -1 || c > 1) range_ok = false;
            if (c != 0) direct.add_term(z, Rat(c));
            const CoreResult cr = core(v, w, z);
            if (cr.status == CoreStatus::Signed && c != 0 && cr.sign != c) {
                core_ok = false;
                std::lock_guard<std::mutex> lock(notes_mu);
                core_notes.push_back("core mismatch at v=" + to_text(v) + " w=" + to_text(w) +
                                     " z [" + arc_diagram(z, covering_inversions(z)) + "]");
            }
            if (cr.status == CoreStatus::Signed && c == 0) {
                core_ok = false;
                std::lock_guard<std::mutex> lock(notes_mu);
                core_notes.push_back("core signed but coefficient zero at v=" + to_text(v) +
                                     " w=" + to_text(w) + " z=" + to_text(z));
            }
            if (cr.status == CoreStatus::Zero && c != 0) {
                core_ok = false;
                std::lock_guard<std::mutex> lock(notes_mu);
                core_notes.push_back("core zero but coefficient " + std::to_string(c) +
                                     " at v=" + to_text(v) + " w=" + to_text(w) +
                                     " z=" + to_text(z));
            }
            // support condition when no free inversion and nonempty family
            if (deg <= 5) {
                const auto fam = cinvs(z, v, w);
                if (!fam.subsets.empty()) {
                    bool any_free = false;
                    for (const auto& cinv : fam.cinv)
                        if (is_free(cinv, v, w, z)) {
                            any_free = true;
                            break;
                        }
                    if (!any_free) {
                        std::vector<int> big(static_cast<size_t>(w.size()));
                        for (int t = 0; t < w.size(); ++t) big[static_cast<size_t>(t)] = m + 1 + t;
                        if (restrict_values(z, big) != w) support_ok = false;
                    }
                }
            }
            // connected component families form chains with unit covers
            const auto fam = cinvs(z, v, w);
            if (cr.status == CoreStatus::Signed) {
                for (int pos = 1; pos <= deg; ++pos) {
                    auto family = ccs(fam, pos);
                    std::sort(family.begin(), family.end(),
                              [](std::uint32_t x, std::uint32_t y) {
                                  return std::popcount(x) < std::popcount(y);
                              });
                    for (size_t t = 0; t + 1 < family.size(); ++t) {
                        if ((family[t] & family[t + 1]) != family[t]) chains_ok = false;
                        if (std::popcount(family[t + 1]) != std::popcount(family[t]) + 1)
                            chains_ok = false;
                    }
                }
            }
        }
        // brute force assembles to the same element as the basis change route
        const auto via_basis = to_pch(hopf_product(to_sch(ScfElement::basis_element(Basis::Pch, v)),
                                                   to_sch(ScfElement::basis_element(Basis::Pch, w))));
        if (direct != via_basis) route_ok = false;
    });
    (void)par;

    add(cases, S, "bruteforce_coefficients_in_range_deg_le_" + std::to_string(maxd), range_ok);
    add(cases, S, "bruteforce_equals_basis_change_deg_le_" + std::to_string(maxd), route_ok);
    {
        std::string note;
        for (const auto& s : core_notes) note += s + "; ";
        add(cases, S, "core_agrees_with_bruteforce_deg_le_" + std::to_string(maxd), core_ok, note);
    }
    add(cases, S, "support_condition_no_free_deg_le_" + std::to_string(std::min(maxd, 5)),
        support_ok);
    add(cases, S, "ccs_families_are_unit_chains_deg_le_" + std::to_string(maxd), chains_ok);

    // optional random sample one degree up
    if (opt.sample_pairs > 0) {
        const int deg = maxd + 1;
        std::mt19937_64 rng(opt.seed);
        std::atomic<bool> sample_ok{true};
        std::vector<std::pair<Permutation, Permutation>> sampled;
        for (int s = 0; s < opt.sample_pairs; ++s) {
            const int a = static_cast<int>(rng() % static_cast<unsigned long long>(deg + 1));
            const auto v = permutation_unrank(a, static_cast<long long>(rng() % static_cast<unsigned long long>(factorial(a))));
            const auto w = permutation_unrank(deg - a, static_cast<long long>(rng() % static_cast<unsigned long long>(factorial(deg - a))));
            sampled.emplace_back(v, w);
        }
        parallel_cases(opt.jobs, static_cast<long long>(sampled.size()), [&](long long i, Cases&) {
            const auto& [v, w] = sampled[static_cast<size_t>(i)];
            ScfElement direct(Basis::Pch);
            for (const auto& z : all_permutations(deg)) {
                const int c = coefficient_bruteforce(v, w, z);
                if (c < -1 || c > 1) sample_ok = false;
                if (c != 0) direct.add_term(z, Rat(c));
            }
            const auto via_basis =
                to_pch(hopf_product(to_sch(ScfElement::basis_element(Basis::Pch, v)),
                                    to_sch(ScfElement::basis_element(Basis::Pch, w))));
            if (direct != via_basis) sample_ok = false;
        });
        add(cases, S, "bruteforce_sampled_deg_" + std::to_string(deg), sample_ok,
            std::to_string(opt.sample_pairs) + " pairs, seed " + std::to_string(opt.seed));
    }

    // coproduct closed form against the chi route
    bool coprod_ok = true;
    for (int n = 0; n <= maxd; ++n)
        for (const auto& w : all_permutations(n)) {
            const auto closed = coproduct_pch(w);
            const auto route = to_pch(hopf_coproduct(to_sch(ScfElement::basis_element(Basis::Pch, w))));
            if (closed != route) coprod_ok = false;
        }
    add(cases, S, "coproduct_closed_form_matches_chi_route_deg_le_" + std::to_string(maxd),
        coprod_ok);

    // removing a set in increasing second coordinate order keeps the rest
    bool covering_order = true;
    for (int n = 0; n <= std::min(maxd, 6); ++n)
        for (const auto& w : all_permutations(n)) {
            const auto cinv = covering_inversions(w);
            for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << cinv.size()); ++mask) {
                std::vector<CoveringInversion> C;
                for (size_t i = 0; i < cinv.size(); ++i)
                    if (mask & (std::uint32_t{1} << i)) C.push_back(cinv[i]);
                // C is sorted by low already; peel the minimal one
                const CoveringInversion first = C.front();
                const Permutation w1 = remove_covering_inversions(w, {first});
                const auto rest = covering_inversions(w1);
                for (size_t i = 1; i < C.size(); ++i)
                    if (std::find(rest.begin(), rest.end(), C[i]) == rest.end())
                        covering_order = false;
            }
        }
    add(cases, S, "covering_removal_order_n_le_" + std::to_string(std::min(maxd, 6)),
        covering_order);
    return cases;
}

// --------------------------------------------------------------- oracle --

Cases suite_oracle(const VerifyOptions& opt) {
    Cases cases;
    const std::string S = "oracle";
    const UtGroup g(opt.n, opt.q);
    const auto perms = all_permutations(opt.n);

    // supercharacter orthogonality
    {
        bool ok = true;
        std::vector<ClassFunction> chis;
        for (const auto& w : perms) chis.push_back(basis_function(BasisKind::Chi, w, g));
        for (size_t a = 0; a < perms.size(); ++a)
            for (size_t b = 0; b < perms.size(); ++b) {
                const Rat ip = inner_product(chis[a], chis[b]);
                const Rat expect = a == b ? chis[a].values[0] : Rat(0);
                if (ip != expect) ok = false;
            }
        add(cases, S, "supercharacter_orthogonality", ok);
    }

    // basis functions constant on superclasses
    {
        bool ok = true;
        std::vector<Permutation> labels(static_cast<size_t>(g.size()));
        for (long long idx = 0; idx < g.size(); ++idx)
            labels[static_cast<size_t>(idx)] = g.superclass_label(idx);
        for (const auto& w : perms)
            for (const auto kind :
                 {BasisKind::Delta, BasisKind::DeltaBar, BasisKind::Chi, BasisKind::ChiBar}) {
                const auto f = basis_function(kind, w, g);
                for (long long idx = 0; idx < g.size(); ++idx) {
                    const long long rep =
                        g.class_representative(labels[static_cast<size_t>(idx)]);
                    if (f.values[static_cast<size_t>(idx)] != f.values[static_cast<size_t>(rep)])
                        ok = false;
                }
            }
        add(cases, S, "bases_constant_on_superclasses", ok);
    }

    // superclass sizes, counted and in closed form
    {
        bool ok = true;
        std::map<Permutation, long long> counts;
        for (long long idx = 0; idx < g.size(); ++idx) ++counts[g.superclass_label(idx)];
        long long total = 0;
        for (const auto& w : perms) {
            const auto it = counts.find(w);
            const long long counted = it == counts.end() ? 0 : it->second;
            total += counted;
            long long closed = 1;
            const int c = static_cast<int>(covering_inversions(w).size());
            for (int i = 0; i < inversion_sum(w) - c; ++i) closed *= opt.q;
            for (int i = 0; i < c; ++i) closed *= opt.q - 1;
            if (counted != closed) ok = false;
        }
        if (total != g.size()) ok = false;
        add(cases, S, "superclass_sizes", ok);
    }

    // delta-bar scaling and the two summation identities
    {
        bool ok = true;
        for (const auto& w : perms) {
            const auto db = basis_function(BasisKind::DeltaBar, w, g);
            const auto cb = basis_function(BasisKind::ChiBar, w, g);
            Rat ratio(1);
            for (int i = 0; i < inversion_sum(w); ++i) ratio *= opt.q;
            for (int i = 0; i < g.coord_count(); ++i) ratio /= opt.q;
            ratio.canonicalize();  // |N| / |G|
            for (size_t i = 0; i < db.values.size(); ++i)
                if (db.values[i] != ratio * cb.values[i]) ok = false;

            ClassFunction sum_delta;
            sum_delta.n = g.n();
            sum_delta.q = g.q();
            sum_delta.values.assign(static_cast<size_t>(g.size()), Rat(0));
            for (const auto& v : lower_set(w)) {
                const auto d = basis_function(BasisKind::Delta, v, g);
                for (size_t i = 0; i < d.values.size(); ++i) sum_delta.values[i] += d.values[i];
            }
            if (sum_delta != db) ok = false;

            ClassFunction sum_chi;
            sum_chi.n = g.n();
            sum_chi.q = g.q();
            sum_chi.values.assign(static_cast<size_t>(g.size()), Rat(0));
            for (const auto& v : upper_set(w)) {
                const auto x = basis_function(BasisKind::Chi, v, g);
                for (size_t i = 0; i < x.values.size(); ++i) sum_chi.values[i] += x.values[i];
            }
            if (sum_chi != cb) ok = false;
        }
        add(cases, S, "delta_bar_and_chi_bar_identities", ok);
    }

    // star preserves supercharacter degrees (no enumeration needed)
    {
        bool ok = true;
        for (int n = 0; n <= std::max(opt.n, 5); ++n)
            for (const auto& w : all_permutations(n)) {
                UtMatrix zero;
                zero.n = n;
                zero.q = opt.q;
                if (supercharacter_value(w, zero) != supercharacter_value(w.inverse(), zero))
                    ok = false;
            }
        add(cases, S, "star_preserves_degrees", ok);
    }

    // lattice operations agree with coordinate sets of the subgroups
    {
        bool ok = true;
        auto coord_set = [&](const Permutation& w) {
            std::vector<char> set(static_cast<size_t>(g.coord_count()), 0);
            const InvTable t = inversion_table(w);
            for (int c = 0; c < g.coord_count(); ++c) {
                const auto [i, j] = g.coords()[static_cast<size_t>(c)];
                if (j - i <= t.entries[static_cast<size_t>(i - 1)]) set[static_cast<size_t>(c)] = 1;
            }
            return set;
        };
        for (const auto& u : perms)
            for (const auto& v : perms) {
                const auto cu = coord_set(u), cv = coord_set(v);
                const auto cm = coord_set(lattice_meet(u, v)), cj = coord_set(lattice_join(u, v));
                for (int c = 0; c < g.coord_count(); ++c) {
                    if (cm[static_cast<size_t>(c)] != (cu[static_cast<size_t>(c)] && cv[static_cast<size_t>(c)])) ok = false;
                    if (cj[static_cast<size_t>(c)] != (cu[static_cast<size_t>(c)] || cv[static_cast<size_t>(c)])) ok = false;
                }
            }
        add(cases, S, "subgroup_meet_join_coordinates", ok);
    }

    // all four families are bases: invertible against the superclass grid
    {
        bool ok = true;
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
            // Gaussian elimination over Q
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
            if (rank != dim) ok = false;
        }
        add(cases, S, "four_families_are_bases", ok);
    }

    // dual basis relations
    {
        bool ok = true;
        std::vector<ClassFunction> chis, deltas;
        for (const auto& w : perms) {
            chis.push_back(basis_function(BasisKind::Chi, w, g));
            deltas.push_back(basis_function(BasisKind::Delta, w, g));
        }
        std::map<Permutation, long long> counts;
        for (long long idx = 0; idx < g.size(); ++idx) ++counts[g.superclass_label(idx)];
        for (size_t a = 0; a < perms.size(); ++a)
            for (size_t b = 0; b < perms.size(); ++b) {
                Rat lhs = inner_product(chis[a], chis[b]) / chis[a].values[0];
                lhs.canonicalize();
                if (lhs != Rat(a == b ? 1 : 0)) ok = false;
                Rat dl = inner_product(deltas[a], deltas[b]) * Rat(static_cast<long>(g.size())) /
                         Rat(static_cast<long>(counts[perms[a]]));
                dl.canonicalize();
                if (dl != Rat(a == b ? 1 : 0)) ok = false;
            }
        add(cases, S, "dual_basis_pairings", ok);
    }

    // functor checks: exflation against the bowtie label, delapsing against
    // deconcatenation, adjointness
    {
        long long up_total = 0, up_bad = 0;
        long long down_total = 0, down_bad = 0;
        long long adj_total = 0, adj_bad = 0;
        std::string up_example, adj_example;
        for (unsigned mask = 0; mask < (1u << opt.n); ++mask) {
            std::vector<int> pos;
            for (int i = 1; i <= opt.n; ++i)
                if (mask & (1u << (i - 1))) pos.push_back(i);
            const PositionSet A(opt.n, pos);
            const auto shape = subgroup_shape(opt.n, A);
            const UtGroup left(shape.m, opt.q), right(shape.k, opt.q);

            for (const auto& wl : all_permutations(shape.m))
                for (const auto& vr : all_permutations(shape.k)) {
                    const auto ex = exflation(basis_function(BasisKind::Chi, wl, left),
                                              basis_function(BasisKind::Chi, vr, right), shape, g);
                    const auto expect =
                        basis_function(BasisKind::Chi, bowtie(wl, vr, A), g);
                    ++up_total;
                    if (ex != expect) {
                        ++up_bad;
                        if (up_example.empty()) {
                            std::string aset;
                            for (int p : pos) aset += (aset.empty() ? "" : ",") + std::to_string(p);
                            up_example = "A={" + aset + "} w=" + to_text(wl) + " v=" + to_text(vr);
                        }
                    }
                }

            for (const auto& w : perms) {
                const auto dela = delapsing(basis_function(BasisKind::Chi, w, g), shape, g);
                // nonzero exactly when w^{-1}(A) is the terminal segment
                std::vector<int> winv_a;
                for (int a : pos) winv_a.push_back(w.inverse()(a));
                std::sort(winv_a.begin(), winv_a.end());
                bool terminal = true;
                for (size_t t = 0; t < winv_a.size(); ++t)
                    if (winv_a[t] != shape.m + 1 + static_cast<int>(t)) terminal = false;
                TensorClassFunction expect;
                if (terminal) {
                    const auto parts = deconcatenate(w, shape.m);
                    expect = tensor_function(basis_function(BasisKind::Chi, parts.first, left),
                                             basis_function(BasisKind::Chi, parts.second, right));
                } else {
                    expect.n_left = shape.m;
                    expect.n_right = shape.k;
                    expect.q = opt.q;
                    expect.size_right = right.size();
                    expect.values.assign(static_cast<size_t>(left.size() * right.size()), Rat(0));
                }
                ++down_total;
                if (dela != expect) ++down_bad;
            }

            const auto rep = adjointness_check(g, shape);
            adj_total += rep.checked;
            adj_bad += static_cast<long long>(rep.violations.size());
            if (adj_example.empty() && !rep.violations.empty())
                adj_example = rep.violations.front();
        }
        add(cases, S, "exflation_matches_bowtie", up_bad == 0,
            std::to_string(up_bad) + "/" + std::to_string(up_total) + " mismatches " + up_example);
        add(cases, S, "delapsing_matches_deconcatenation", down_bad == 0,
            std::to_string(down_bad) + "/" + std::to_string(down_total) + " mismatches");
        add(cases, S, "adjointness_identity", adj_bad == 0,
            std::to_string(adj_bad) + "/" + std::to_string(adj_total) + " violations " +
                adj_example);
    }
    return cases;
}

}  // namespace

std::vector<std::string> suite_names() { return {"perm", "lattice", "hopf", "pch", "oracle"}; }

std::vector<VerifyCase> run_suite(const std::string& suite, const VerifyOptions& opt) {
    Cases cases;
    if (suite == "perm" || suite == "all") {
        auto c = suite_perm(opt);
        cases.insert(cases.end(), c.begin(), c.end());
    }
    if (suite == "lattice" || suite == "all") {
        auto c = suite_lattice(opt);
        cases.insert(cases.end(), c.begin(), c.end());
    }
    if (suite == "hopf" || suite == "all") {
        auto c = suite_hopf(opt);
        cases.insert(cases.end(), c.begin(), c.end());
    }
    if (suite == "pch" || suite == "all") {
        auto c = suite_pch(opt);
        cases.insert(cases.end(), c.begin(), c.end());
    }
    if (suite == "oracle" || suite == "all") {
        auto c = suite_oracle(opt);
        cases.insert(cases.end(), c.begin(), c.end());
    }
    if (cases.empty() && suite != "all") throw std::invalid_argument("unknown suite: " + suite);
    std::sort(cases.begin(), cases.end(), [](const VerifyCase& a, const VerifyCase& b) {
        if (a.suite != b.suite) return a.suite < b.suite;
        return a.name < b.name;
    });
    return cases;
}

}  // namespace scfut
