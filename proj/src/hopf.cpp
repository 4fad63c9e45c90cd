#include "scfut/hopf.hpp"

#include <map>
#include <stdexcept>

#include "scfut/lattice.hpp"
#include "scfut/pcbasis.hpp"
#include "scfut/shuffle.hpp"

namespace scfut {

namespace {

void require_basis(const ScfElement& x, Basis b, const char* what) {
    if (x.basis() != b) throw std::invalid_argument(std::string(what) + ": basis mismatch; convert explicitly");
}

void require_basis(const TensorScfElement& x, Basis b, const char* what) {
    if (x.basis() != b) throw std::invalid_argument(std::string(what) + ": basis mismatch; convert explicitly");
}

}  // namespace

ScfElement to_sch(const ScfElement& x) {
    if (x.basis() == Basis::Sch) return x;
    ScfElement out(Basis::Sch);
    for (const auto& [w, c] : x.terms())
        for (const auto& y : upper_set(w)) out.add_term(y, c);
    return out;
}

ScfElement to_pch(const ScfElement& x) {
    if (x.basis() == Basis::Pch) return x;
    ScfElement out(Basis::Pch);
    for (const auto& [w, c] : x.terms())
        for (const auto& z : upper_set(w)) out.add_term(z, c * lattice_mobius(w, z));
    return out;
}

TensorScfElement to_sch(const TensorScfElement& x) {
    if (x.basis() == Basis::Sch) return x;
    TensorScfElement out(Basis::Sch);
    for (const auto& [k, c] : x.terms())
        for (const auto& l : upper_set(k.first))
            for (const auto& r : upper_set(k.second)) out.add_term(l, r, c);
    return out;
}

TensorScfElement to_pch(const TensorScfElement& x) {
    if (x.basis() == Basis::Pch) return x;
    TensorScfElement out(Basis::Pch);
    for (const auto& [k, c] : x.terms())
        for (const auto& l : upper_set(k.first)) {
            const Rat cl = c * lattice_mobius(k.first, l);
            for (const auto& r : upper_set(k.second))
                out.add_term(l, r, cl * lattice_mobius(k.second, r));
        }
    return out;
}

ScfElement hopf_product(const ScfElement& x, const ScfElement& y) {
    require_basis(x, Basis::Sch, "product");
    require_basis(y, Basis::Sch, "product");
    ScfElement out(Basis::Sch);
    for (const auto& [w, cw] : x.terms())
        for (const auto& [v, cv] : y.terms()) {
            const Rat c = cw * cv;
            for (const auto& s : shuffle_set(w, v)) out.add_term(s, c);
        }
    return out;
}

TensorScfElement hopf_coproduct(const ScfElement& x) {
    require_basis(x, Basis::Sch, "coproduct");
    TensorScfElement out(Basis::Sch);
    for (const auto& [w, c] : x.terms())
        for (int m = 0; m <= w.size(); ++m) {
            auto [head, tail] = deconcatenate(w, m);
            out.add_term(head, tail, c);
        }
    return out;
}

TensorScfElement tensor_multiply(const TensorScfElement& a, const TensorScfElement& b) {
    require_basis(a, Basis::Sch, "tensor_multiply");
    require_basis(b, Basis::Sch, "tensor_multiply");
    TensorScfElement out(Basis::Sch);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            const Rat c = ca * cb;
            for (const auto& l : shuffle_set(ka.first, kb.first))
                for (const auto& r : shuffle_set(ka.second, kb.second)) out.add_term(l, r, c);
        }
    return out;
}

ScfElement star(const ScfElement& x) {
    if (x.basis() == Basis::Sch) {
        ScfElement out(Basis::Sch);
        for (const auto& [w, c] : x.terms()) out.add_term(w.inverse(), c);
        return out;
    }
    ScfElement out(Basis::Pch);
    for (const auto& [w, c] : x.terms()) {
        ScfElement s = star_pch(w);
        s *= c;
        out += s;
    }
    return out;
}

ScfElement star_pch(const Permutation& w) {
    const int n = w.size();
    ScfElement out(Basis::Pch);
    for (const auto& z : all_permutations(n)) {
        std::vector<Permutation> hits;
        for (const auto& x : boolean_sublattice(z)) {
            // kappa(x) >= kappa(w^-1)  <=>  x^-1 >= w in the lattice
            if (lattice_leq(w, x.inverse())) hits.push_back(x);
        }
        if (hits.size() != 1) continue;
        const int diff = inversion_sum(z) - inversion_sum(hits.front());
        out.add_term(z, Rat(diff % 2 == 0 ? 1 : -1));
    }
    return out;
}

ScfElement product_pch(const Permutation& v, const Permutation& w) {
    const int n = v.size() + w.size();
    ScfElement out(Basis::Pch);
    for (const auto& z : all_permutations(n)) {
        const int c = coefficient_bruteforce(v, w, z);
        if (c != 0) out.add_term(z, Rat(c));
    }
    return out;
}

TensorScfElement coproduct_pch(const Permutation& w) {
    const int n = w.size();
    const InvTable iw = inversion_table(w);
    const DualInvTable dw = dual_inversion_table(w);
    TensorScfElement out(Basis::Pch);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        // mask selects A; the complement B feeds the left factor
        std::vector<int> a_entries, b_entries;
        bool valid = true;
        for (int k = 1; k <= n; ++k) {
            if (mask & (1u << (k - 1)))
                a_entries.push_back(dw.entries[static_cast<size_t>(k - 1)]);
            else
                b_entries.push_back(iw.entries[static_cast<size_t>(k - 1)]);
        }
        const int nb = static_cast<int>(b_entries.size());
        for (int k = 1; k <= nb && valid; ++k)
            if (b_entries[static_cast<size_t>(k - 1)] > nb - k) valid = false;
        if (!valid) continue;
        const Permutation left = from_inversion_table(InvTable{b_entries});
        const int na = static_cast<int>(a_entries.size());
        DualInvTable d;
        d.entries.resize(static_cast<size_t>(na));
        for (int k = 1; k <= na; ++k)
            d.entries[static_cast<size_t>(k - 1)] =
                std::min(a_entries[static_cast<size_t>(k - 1)], na - k);
        const Permutation right = from_dual_inversion_table(d);
        out.add_term(left, right, Rat(1));
    }
    return out;
}

Rat counit(const ScfElement& x) { return x.coefficient(Permutation()); }

ScfElement hopf_unit(const Rat& c, Basis b) {
    ScfElement x(b);
    x.add_term(Permutation(), c);
    return x;
}

namespace {

const ScfElement& antipode_basis(const Permutation& w,
                                 std::map<Permutation, ScfElement, PermutationOrder>& memo) {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    ScfElement s(Basis::Sch);
    if (w.size() == 0) {
        s.add_term(w, Rat(1));
    } else {
        s.add_term(w, Rat(-1));
        for (int m = 1; m < w.size(); ++m) {
            auto [head, tail] = deconcatenate(w, m);
            ScfElement piece = hopf_product(antipode_basis(head, memo),
                                            ScfElement::basis_element(Basis::Sch, tail));
            piece *= Rat(-1);
            s += piece;
        }
    }
    return memo.emplace(w, std::move(s)).first->second;
}

}  // namespace

ScfElement antipode(const ScfElement& x) {
    require_basis(x, Basis::Sch, "antipode");
    std::map<Permutation, ScfElement, PermutationOrder> memo;
    ScfElement out(Basis::Sch);
    for (const auto& [w, c] : x.terms()) {
        ScfElement s = antipode_basis(w, memo);
        s *= c;
        out += s;
    }
    return out;
}

}  // namespace scfut
