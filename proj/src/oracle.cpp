#include "scfut/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "scfut/lattice.hpp"

namespace scfut {

namespace {

constexpr long long kMaxGroupSize = 1LL << 20;

long long pow_ll(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

UtGroup::UtGroup(int n, int q) : n_(n), q_(q) {
    if (n < 0 || n > 5) throw std::invalid_argument("ut group: n out of range (0..5)");
    if (q != 2 && q != 3 && q != 5) throw std::invalid_argument("ut group: q must be 2, 3 or 5");
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) coords_.emplace_back(i, j);
    size_ = 1;
    weight_.resize(coords_.size());
    for (size_t c = 0; c < coords_.size(); ++c) {
        weight_[c] = size_;
        size_ *= q;
        if (size_ > kMaxGroupSize) throw std::invalid_argument("ut group: size guard exceeded");
    }
}

int UtGroup::coord_index(int i, int j) const {
    // row-major over i < j
    for (size_t c = 0; c < coords_.size(); ++c)
        if (coords_[c] == std::make_pair(i, j)) return static_cast<int>(c);
    throw std::invalid_argument("coordinate out of range");
}

int UtGroup::entry(long long idx, int coord) const {
    return static_cast<int>((idx / weight_[static_cast<size_t>(coord)]) % q_);
}

long long UtGroup::with_entry(long long idx, int coord, int value) const {
    const long long w = weight_[static_cast<size_t>(coord)];
    const long long cur = (idx / w) % q_;
    return idx + (value - cur) * w;
}

UtMatrix UtGroup::element(long long idx) const {
    UtMatrix x;
    x.n = n_;
    x.q = q_;
    for (size_t c = 0; c < coords_.size(); ++c) {
        const int v = entry(idx, static_cast<int>(c));
        if (v != 0) x.entries.emplace_back(coords_[c], v);
    }
    return x;
}

long long UtGroup::index_of(const UtMatrix& x) const {
    if (x.n != n_ || x.q != q_) throw std::invalid_argument("matrix shape mismatch");
    long long idx = 0;
    for (const auto& [ij, v] : x.entries) {
        if (ij.first >= ij.second) throw std::invalid_argument("matrix entry not strictly upper");
        if (v % q_ == 0) throw std::invalid_argument("stored entry must be a nonzero residue");
        idx = with_entry(idx, coord_index(ij.first, ij.second), ((v % q_) + q_) % q_);
    }
    return idx;
}

Permutation UtGroup::superclass_label(long long idx) const {
    InvTable t;
    t.entries.assign(static_cast<size_t>(n_), 0);
    for (size_t c = 0; c < coords_.size(); ++c) {
        if (entry(idx, static_cast<int>(c)) == 0) continue;
        const auto [i, j] = coords_[c];
        t.entries[static_cast<size_t>(i - 1)] = std::max(t.entries[static_cast<size_t>(i - 1)], j - i);
    }
    return from_inversion_table(t);
}

long long UtGroup::class_representative(const Permutation& w) const {
    const InvTable t = inversion_table(w);
    long long idx = 0;
    for (int i = 1; i <= n_; ++i) {
        const int off = t.entries[static_cast<size_t>(i - 1)];
        if (off > 0) idx = with_entry(idx, coord_index(i, i + off), 1);
    }
    return idx;
}

bool UtGroup::in_ut_subgroup(long long idx, const InvTable& iota) const {
    for (size_t c = 0; c < coords_.size(); ++c) {
        if (entry(idx, static_cast<int>(c)) == 0) continue;
        const auto [i, j] = coords_[c];
        if (j - i > iota.entries[static_cast<size_t>(i - 1)]) return false;
    }
    return true;
}

std::vector<UtMatrix> enumerate_group(int n, int q) {
    UtGroup g(n, q);
    std::vector<UtMatrix> out;
    out.reserve(static_cast<size_t>(g.size()));
    for (long long idx = 0; idx < g.size(); ++idx) out.push_back(g.element(idx));
    return out;
}

Rat supercharacter_value(const Permutation& v, const UtMatrix& x) {
    if (v.size() != x.n) throw std::invalid_argument("degree mismatch");
    const int n = x.n, q = x.q;
    const InvTable t = inversion_table(v);
    std::vector<int> dense(static_cast<size_t>(n * n), 0);
    for (const auto& [ij, val] : x.entries)
        dense[static_cast<size_t>((ij.first - 1) * n + (ij.second - 1))] = val % q;
    Rat prod(1);
    for (int i = 1; i <= n; ++i) {
        const int iota = t.entries[static_cast<size_t>(i - 1)];
        for (int j = i + 1; j <= n; ++j) {
            const int off = j - i;
            const bool zero = dense[static_cast<size_t>((i - 1) * n + (j - 1))] == 0;
            if (off <= iota) continue;               // trivial character factor
            if (off == iota + 1)
                prod *= Rat(zero ? q - 1 : -1);      // regular minus trivial
            else {
                if (!zero) return Rat(0);            // regular character factor
                prod *= Rat(q);
            }
        }
    }
    return prod;
}

ClassFunction basis_function(BasisKind kind, const Permutation& w, const UtGroup& g) {
    if (w.size() != g.n()) throw std::invalid_argument("degree mismatch");
    ClassFunction f;
    f.n = g.n();
    f.q = g.q();
    f.values.assign(static_cast<size_t>(g.size()), Rat(0));
    const InvTable iota = inversion_table(w);
    switch (kind) {
        case BasisKind::Delta: {
            for (long long idx = 0; idx < g.size(); ++idx)
                if (g.superclass_label(idx) == w) f.values[static_cast<size_t>(idx)] = 1;
            break;
        }
        case BasisKind::DeltaBar: {
            for (long long idx = 0; idx < g.size(); ++idx)
                if (g.in_ut_subgroup(idx, iota)) f.values[static_cast<size_t>(idx)] = 1;
            break;
        }
        case BasisKind::ChiBar: {
            // Ind from ut_w of the trivial character: (|G|/|N|) on N, 0 off
            int isum = 0;
            for (int e : iota.entries) isum += e;
            const long scale = static_cast<long>(pow_ll(g.q(), g.coord_count() - isum));
            for (long long idx = 0; idx < g.size(); ++idx)
                if (g.in_ut_subgroup(idx, iota)) f.values[static_cast<size_t>(idx)] = Rat(scale);
            break;
        }
        case BasisKind::Chi: {
            for (long long idx = 0; idx < g.size(); ++idx)
                f.values[static_cast<size_t>(idx)] = supercharacter_value(w, g.element(idx));
            break;
        }
    }
    return f;
}

Rat inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.n != g.n || f.q != g.q || f.values.size() != g.values.size())
        throw std::invalid_argument("class function mismatch");
    Rat sum(0);
    for (size_t i = 0; i < f.values.size(); ++i) sum += f.values[i] * g.values[i];
    Rat r = sum / Rat(static_cast<long>(f.values.size()));
    r.canonicalize();
    return r;
}

std::vector<std::pair<Permutation, Rat>> decompose_chi(const ClassFunction& f, const UtGroup& g) {
    std::vector<std::pair<Permutation, Rat>> out;
    for (const auto& w : all_permutations(g.n())) {
        const ClassFunction chi = basis_function(BasisKind::Chi, w, g);
        const Rat degree = chi.values[0];  // value at the zero matrix
        Rat c = inner_product(f, chi) / degree;
        c.canonicalize();
        if (c != 0) out.emplace_back(w, c);
    }
    return out;
}

SubgroupShape subgroup_shape(int n, const PositionSet& A) {
    if (A.n != n) throw std::invalid_argument("position set must live in {1..n}");
    SubgroupShape s;
    s.n = n;
    s.A = A;
    s.k = A.count();
    s.m = n - s.k;
    // above(i) = #{a in A : a > i}
    auto above = [&](int i) {
        return static_cast<int>(A.positions.end() -
                                std::upper_bound(A.positions.begin(), A.positions.end(), i));
    };
    auto below_in_A = [&](int i) {
        return static_cast<int>(std::lower_bound(A.positions.begin(), A.positions.end(), i) -
                                A.positions.begin());
    };
    int coord = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j, ++coord) {
            const bool tail = j > n - above(i);
            Region r;
            int sub = -1;
            if (A.contains(i)) {
                r = tail ? Region::U : Region::L;
                if (r == Region::U) {
                    // tau_A: (i,j) -> (rank of i in A, j - m)
                    const int si = i - (i - 1 - below_in_A(i));
                    const int sj = j - s.m;
                    sub = (si - 1) * s.k - si * (si + 1) / 2 + sj - 1;  // row-major in ut_k
                }
            } else {
                r = tail ? Region::R : Region::Udual;
                if (r == Region::Udual) {
                    // tau'_A: both coordinates shift by #{a in A : a < i}
                    const int shift = below_in_A(i);
                    const int si = i - shift, sj = j - shift;
                    sub = (si - 1) * s.m - si * (si + 1) / 2 + sj - 1;
                }
            }
            s.region.push_back(r);
            s.sub_coord.push_back(sub);
            switch (r) {
                case Region::U: s.u_coords.push_back(coord); break;
                case Region::L: s.l_coords.push_back(coord); break;
                case Region::Udual: s.udual_coords.push_back(coord); break;
                case Region::R: s.r_coords.push_back(coord); break;
            }
        }
    }
    return s;
}

ClassFunction exflation(const ClassFunction& f, const ClassFunction& g, const SubgroupShape& shape,
                        const UtGroup& big) {
    if (big.n() != shape.n) throw std::invalid_argument("shape mismatch");
    if (f.n != shape.m || g.n != shape.k || f.q != big.q() || g.q != big.q())
        throw std::invalid_argument("factor shape mismatch");
    const UtGroup left(shape.m, big.q());
    const UtGroup right(shape.k, big.q());
    const Rat reg_scale(static_cast<long>(pow_ll(big.q(), static_cast<int>(shape.r_coords.size()))));

    ClassFunction out;
    out.n = big.n();
    out.q = big.q();
    out.values.assign(static_cast<size_t>(big.size()), Rat(0));
    for (long long idx = 0; idx < big.size(); ++idx) {
        bool r_zero = true;
        for (int c : shape.r_coords)
            if (big.entry(idx, c) != 0) {
                r_zero = false;
                break;
            }
        if (!r_zero) continue;
        long long lidx = 0, ridx = 0;
        for (int c : shape.udual_coords)
            lidx = left.with_entry(lidx, shape.sub_coord[static_cast<size_t>(c)], big.entry(idx, c));
        for (int c : shape.u_coords)
            ridx = right.with_entry(ridx, shape.sub_coord[static_cast<size_t>(c)], big.entry(idx, c));
        out.values[static_cast<size_t>(idx)] =
            f.values[static_cast<size_t>(lidx)] * g.values[static_cast<size_t>(ridx)] * reg_scale;
    }
    return out;
}

TensorClassFunction delapsing(const ClassFunction& f, const SubgroupShape& shape,
                              const UtGroup& big) {
    if (f.n != shape.n || f.q != big.q() || big.n() != shape.n)
        throw std::invalid_argument("shape mismatch");
    const int q = big.q();
    const UtGroup left(shape.m, q);
    const UtGroup right(shape.k, q);

    TensorClassFunction out;
    out.n_left = shape.m;
    out.n_right = shape.k;
    out.q = q;
    out.size_right = right.size();
    out.values.assign(static_cast<size_t>(left.size() * right.size()), Rat(0));

    // averaging weights: plain character average over l_A, the orthogonal
    // (regular minus trivial, normalized at the identity) average over r_A
    const Rat w_l(1, q);
    const Rat w_r_zero(1, q);
    Rat w_r_nonzero = Rat(-1) / Rat(static_cast<long>(q) * (q - 1));
    w_r_nonzero.canonicalize();

    const size_t n_l = shape.l_coords.size(), n_r = shape.r_coords.size();
    const long long l_count = pow_ll(q, static_cast<int>(n_l));
    const long long r_count = pow_ll(q, static_cast<int>(n_r));

    for (long long lidx = 0; lidx < left.size(); ++lidx) {
        for (long long ridx = 0; ridx < right.size(); ++ridx) {
            long long base = 0;
            for (int c : shape.udual_coords)
                base = big.with_entry(base, c, left.entry(lidx, shape.sub_coord[static_cast<size_t>(c)]));
            for (int c : shape.u_coords)
                base = big.with_entry(base, c, right.entry(ridx, shape.sub_coord[static_cast<size_t>(c)]));
            Rat total(0);
            for (long long la = 0; la < l_count; ++la) {
                long long with_l = base;
                long long rem = la;
                for (size_t t = 0; t < n_l; ++t) {
                    with_l = big.with_entry(with_l, shape.l_coords[t], static_cast<int>(rem % q));
                    rem /= q;
                }
                for (long long ra = 0; ra < r_count; ++ra) {
                    long long full = with_l;
                    Rat weight(1);
                    long long rr = ra;
                    for (size_t t = 0; t < n_r; ++t) {
                        const int digit = static_cast<int>(rr % q);
                        rr /= q;
                        full = big.with_entry(full, shape.r_coords[t], digit);
                        weight *= (digit == 0) ? w_r_zero : w_r_nonzero;
                    }
                    total += weight * f.values[static_cast<size_t>(full)];
                }
            }
            for (size_t t = 0; t < n_l; ++t) total *= w_l;
            total.canonicalize();
            out.values[static_cast<size_t>(lidx * right.size() + ridx)] = total;
        }
    }
    return out;
}

TensorClassFunction tensor_function(const ClassFunction& left, const ClassFunction& right) {
    if (left.q != right.q) throw std::invalid_argument("field mismatch");
    TensorClassFunction out;
    out.n_left = left.n;
    out.n_right = right.n;
    out.q = left.q;
    out.size_right = static_cast<long long>(right.values.size());
    out.values.reserve(left.values.size() * right.values.size());
    for (const auto& lv : left.values)
        for (const auto& rv : right.values) out.values.push_back(lv * rv);
    return out;
}

Rat inner_product(const TensorClassFunction& a, const TensorClassFunction& b) {
    if (a.n_left != b.n_left || a.n_right != b.n_right || a.q != b.q ||
        a.values.size() != b.values.size())
        throw std::invalid_argument("tensor function mismatch");
    Rat sum(0);
    for (size_t i = 0; i < a.values.size(); ++i) sum += a.values[i] * b.values[i];
    Rat r = sum / Rat(static_cast<long>(a.values.size()));
    r.canonicalize();
    return r;
}

AdjointnessReport adjointness_check(const UtGroup& g, const SubgroupShape& shape) {
    if (shape.n > 4) throw std::invalid_argument("adjointness sweep limited to n <= 4");
    AdjointnessReport report;
    const UtGroup left(shape.m, g.q());
    const UtGroup right(shape.k, g.q());
    const Rat r_size(static_cast<long>(pow_ll(g.q(), static_cast<int>(shape.r_coords.size()))));

    struct Pair {
        Permutation y, z;
        TensorClassFunction tensor;
        ClassFunction exfl;
    };
    std::vector<Pair> pairs;
    for (const auto& y : all_permutations(shape.m)) {
        const ClassFunction chi_y = basis_function(BasisKind::Chi, y, left);
        for (const auto& z : all_permutations(shape.k)) {
            const ClassFunction chi_z = basis_function(BasisKind::Chi, z, right);
            pairs.push_back({y, z, tensor_function(chi_y, chi_z),
                             exflation(chi_y, chi_z, shape, g)});
        }
    }

    for (const auto& w : all_permutations(shape.n)) {
        const ClassFunction chi_w = basis_function(BasisKind::Chi, w, g);
        const TensorClassFunction dela = delapsing(chi_w, shape, g);
        for (const auto& p : pairs) {
            const Rat lhs = r_size * inner_product(dela, p.tensor);
            const Rat rhs = inner_product(chi_w, p.exfl);
            ++report.checked;
            if (lhs != rhs) {
                report.violations.push_back("w=" + to_text(w) + " y=" + to_text(p.y) +
                                            " z=" + to_text(p.z) + " lhs=" + rat_str(lhs) +
                                            " rhs=" + rat_str(rhs));
            }
        }
    }
    return report;
}

std::string supercharacter_table_csv(const UtGroup& g) {
    auto perms = all_permutations(g.n());
    std::sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) {
        return inversion_table(a).entries < inversion_table(b).entries;
    });
    std::string csv = "chi";
    for (const auto& w : perms) csv += ",\"" + to_text(w) + "\"";
    csv += "\n";
    for (const auto& v : perms) {
        csv += "\"" + to_text(v) + "\"";
        for (const auto& w : perms) {
            const Rat val = supercharacter_value(v, g.element(g.class_representative(w)));
            csv += "," + rat_str(val);
        }
        csv += "\n";
    }
    return csv;
}

}  // namespace scfut
