#pragma once

#include <map>
#include <string>
#include <utility>

#include "scfut/permutation.hpp"
#include "scfut/rational.hpp"

namespace scfut {

// SCH is the supercharacter basis (the fundamental basis under the FQSym
// identification); PCH is the permutation character basis.
enum class Basis { Sch, Pch };

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& s);

// A graded, exact-rational linear combination of permutations, tagged with
// the basis its coefficients refer to.  No zero terms are stored; the empty
// map is the zero element.  Term order is (degree, lex word).
class ScfElement {
public:
    using TermMap = std::map<Permutation, Rat, PermutationOrder>;

    explicit ScfElement(Basis b) : basis_(b) {}
    static ScfElement basis_element(Basis b, const Permutation& w, Rat coeff = Rat(1));

    Basis basis() const { return basis_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Permutation& w, const Rat& c);
    Rat coefficient(const Permutation& w) const;

    ScfElement& operator+=(const ScfElement& other);  // rejects basis mismatch
    ScfElement& operator*=(const Rat& c);
    friend ScfElement operator+(ScfElement a, const ScfElement& b) { return a += b; }
    friend ScfElement operator*(const Rat& c, ScfElement x) { return x *= c; }

    friend bool operator==(const ScfElement&, const ScfElement&) = default;

private:
    Basis basis_;
    TermMap terms_;
};

struct TensorKeyOrder {
    bool operator()(const std::pair<Permutation, Permutation>& a,
                    const std::pair<Permutation, Permutation>& b) const {
        PermutationOrder ord;
        if (a.first != b.first) return ord(a.first, b.first);
        return ord(a.second, b.second);
    }
};

// Linear combination of permutation pairs (coproduct output).
class TensorScfElement {
public:
    using Key = std::pair<Permutation, Permutation>;
    using TermMap = std::map<Key, Rat, TensorKeyOrder>;

    explicit TensorScfElement(Basis b) : basis_(b) {}

    Basis basis() const { return basis_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Permutation& left, const Permutation& right, const Rat& c);
    Rat coefficient(const Permutation& left, const Permutation& right) const;

    TensorScfElement& operator+=(const TensorScfElement& other);
    TensorScfElement& operator*=(const Rat& c);

    friend bool operator==(const TensorScfElement&, const TensorScfElement&) = default;

private:
    Basis basis_;
    TermMap terms_;
};

// JSON forms:
//   {"basis":"sch","terms":[{"perm":[3,1,2],"num":1,"den":1}]}
//   {"basis":"sch","terms":[{"left":[1],"right":[2,1],"num":1,"den":1}]}
std::string to_json_string(const ScfElement& x, int indent = -1);
std::string to_json_string(const TensorScfElement& x, int indent = -1);
ScfElement scf_element_from_json(const std::string& text);

}  // namespace scfut
