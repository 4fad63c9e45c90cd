#include "scfut/element.hpp"

#include <stdexcept>

#include <json.hpp>

namespace scfut {

std::string basis_name(Basis b) { return b == Basis::Sch ? "sch" : "pch"; }

Basis basis_from_name(const std::string& s) {
    if (s == "sch") return Basis::Sch;
    if (s == "pch") return Basis::Pch;
    throw std::invalid_argument("unknown basis: " + s);
}

ScfElement ScfElement::basis_element(Basis b, const Permutation& w, Rat coeff) {
    ScfElement x(b);
    x.add_term(w, coeff);
    return x;
}

void ScfElement::add_term(const Permutation& w, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat ScfElement::coefficient(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
}

ScfElement& ScfElement::operator+=(const ScfElement& other) {
    if (basis_ != other.basis_) throw std::invalid_argument("basis mismatch; convert explicitly");
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

ScfElement& ScfElement::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_) coeff *= c;
    return *this;
}

void TensorScfElement::add_term(const Permutation& left, const Permutation& right, const Rat& c) {
    if (c == 0) return;
    auto key = std::make_pair(left, right);
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat TensorScfElement::coefficient(const Permutation& left, const Permutation& right) const {
    auto it = terms_.find(std::make_pair(left, right));
    return it == terms_.end() ? Rat(0) : it->second;
}

TensorScfElement& TensorScfElement::operator+=(const TensorScfElement& other) {
    if (basis_ != other.basis_) throw std::invalid_argument("basis mismatch; convert explicitly");
    for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, c);
    return *this;
}

TensorScfElement& TensorScfElement::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, coeff] : terms_) coeff *= c;
    return *this;
}

namespace {

nlohmann::json perm_to_json(const Permutation& w) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v : w.word()) arr.push_back(v);
    return arr;
}

std::string dump(const nlohmann::json& j, int indent) {
    return indent >= 0 ? j.dump(indent) : j.dump();
}

}  // namespace

std::string to_json_string(const ScfElement& x, int indent) {
    nlohmann::json j;
    j["basis"] = basis_name(x.basis());
    j["terms"] = nlohmann::json::array();
    for (const auto& [w, c] : x.terms()) {
        nlohmann::json t;
        t["perm"] = perm_to_json(w);
        t["num"] = rat_num_i64(c);
        t["den"] = rat_den_i64(c);
        j["terms"].push_back(std::move(t));
    }
    return dump(j, indent);
}

std::string to_json_string(const TensorScfElement& x, int indent) {
    nlohmann::json j;
    j["basis"] = basis_name(x.basis());
    j["terms"] = nlohmann::json::array();
    for (const auto& [k, c] : x.terms()) {
        nlohmann::json t;
        t["left"] = perm_to_json(k.first);
        t["right"] = perm_to_json(k.second);
        t["num"] = rat_num_i64(c);
        t["den"] = rat_den_i64(c);
        j["terms"].push_back(std::move(t));
    }
    return dump(j, indent);
}

ScfElement scf_element_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    ScfElement x(basis_from_name(j.at("basis").get<std::string>()));
    for (const auto& t : j.at("terms")) {
        std::vector<int> word = t.at("perm").get<std::vector<int>>();
        const auto num = t.at("num").get<std::int64_t>();
        const auto den = t.value("den", std::int64_t{1});
        x.add_term(Permutation(std::move(word)), rat(num, den));
    }
    return x;
}

}  // namespace scfut
