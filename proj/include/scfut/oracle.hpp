#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "scfut/permutation.hpp"
#include "scfut/rational.hpp"
#include "scfut/shuffle.hpp"

namespace scfut {

// The additive group ut_n(F_q) of strictly upper triangular matrices, fully
// enumerated.  Elements are mixed-radix indices over the n(n-1)/2
// coordinates (i,j), i < j, in row-major order; the digit at a coordinate
// is the residue there.  The UtMatrix view below is the semantic contract,
// the index is the working representation.
struct UtMatrix {
    int n = 0;
    int q = 2;
    // (i,j) -> nonzero residue; zero entries are absent
    std::vector<std::pair<std::pair<int, int>, int>> entries;
};

class UtGroup {
public:
    // q must be a prime in {2,3,5}; q^{n(n-1)/2} must stay within 2^20
    UtGroup(int n, int q);

    int n() const { return n_; }
    int q() const { return q_; }
    int coord_count() const { return static_cast<int>(coords_.size()); }
    long long size() const { return size_; }
    const std::vector<std::pair<int, int>>& coords() const { return coords_; }
    int coord_index(int i, int j) const;

    int entry(long long idx, int coord) const;
    long long with_entry(long long idx, int coord, int value) const;

    UtMatrix element(long long idx) const;
    long long index_of(const UtMatrix& x) const;

    // the unique w with iota_i(w) = max offset of a nonzero entry in row i
    Permutation superclass_label(long long idx) const;
    // smallest-index element of Cl_w: entry 1 at (i, i + iota_i(w)) for each
    // nonempty row
    long long class_representative(const Permutation& w) const;

    bool in_ut_subgroup(long long idx, const InvTable& iota) const;

private:
    int n_, q_;
    long long size_;
    std::vector<std::pair<int, int>> coords_;
    std::vector<long long> weight_;  // q^coord
};

std::vector<UtMatrix> enumerate_group(int n, int q);

// Entrywise product of trivial / (regular - trivial) / regular factors of
// F_q^+, by the offset of each coordinate relative to iota(v).  Always an
// integer.
Rat supercharacter_value(const Permutation& v, const UtMatrix& x);

enum class BasisKind { Delta, DeltaBar, Chi, ChiBar };

// A rational-valued function on the whole group, stored by element index.
struct ClassFunction {
    int n = 0;
    int q = 2;
    std::vector<Rat> values;

    friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

ClassFunction basis_function(BasisKind kind, const Permutation& w, const UtGroup& g);

// <f, g> = (1/|G|) sum f(u) g(u); conjugation is the identity on these
// rational-valued functions
Rat inner_product(const ClassFunction& f, const ClassFunction& g);

// coefficients of f in the supercharacter basis, via orthogonality
std::vector<std::pair<Permutation, Rat>> decompose_chi(const ClassFunction& f, const UtGroup& g);

enum class Region { U, L, Udual, R };

// The four-block coordinate partition attached to A, with the reindexing
// maps onto ut_{n-|A|} (from U_A^vee) and ut_{|A|} (from U_A).
struct SubgroupShape {
    int n = 0;
    PositionSet A;
    int m = 0;       // n - |A|
    int k = 0;       // |A|
    std::vector<Region> region;     // by coordinate index in ut_n
    std::vector<int> sub_coord;     // image coordinate index, -1 off U/Udual
    std::vector<int> u_coords, l_coords, udual_coords, r_coords;
};

SubgroupShape subgroup_shape(int n, const PositionSet& A);

// Exfl(f (x) g): inflate f (x) g from ut_A^vee x ut_A across l_A, then
// extend with the regular-character weight on r_A:
//   value at l+u'+u+r  =  f(tau'(u')) g(tau(u)) * (|r_A| if r == 0 else 0).
ClassFunction exflation(const ClassFunction& f, const ClassFunction& g, const SubgroupShape& shape,
                        const UtGroup& big);

// Function on ut_{n-|A|} x ut_{|A|}, index = left * |right group| + right.
struct TensorClassFunction {
    int n_left = 0;
    int n_right = 0;
    int q = 2;
    long long size_right = 1;
    std::vector<Rat> values;

    friend bool operator==(const TensorClassFunction&, const TensorClassFunction&) = default;
};

// Dela(f): average over l_A with the plain character weight 1/q per
// coordinate, and over r_A with weight 1/q at 0 and -1/(q(q-1)) elsewhere.
TensorClassFunction delapsing(const ClassFunction& f, const SubgroupShape& shape,
                              const UtGroup& big);

TensorClassFunction tensor_function(const ClassFunction& left, const ClassFunction& right);
Rat inner_product(const TensorClassFunction& a, const TensorClassFunction& b);

struct AdjointnessReport {
    long long checked = 0;
    std::vector<std::string> violations;
};

// |r_A| <Dela(chi^w), chi^y (x) chi^z>  vs  <chi^w, Exfl(chi^y (x) chi^z)>
// over all supercharacter triples for one shape
AdjointnessReport adjointness_check(const UtGroup& g, const SubgroupShape& shape);

// CSV: rows are supercharacters by iota-lex order of their label, columns
// are superclass representatives in the same label order, entries exact
// integers.
std::string supercharacter_table_csv(const UtGroup& g);

}  // namespace scfut
