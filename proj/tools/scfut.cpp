// Command line front end: products, coproducts, basis conversion, star,
// antipode, oracle tables and verification suites.  JSON on stdout, exit
// codes 0 (success), 1 (verification failure), 2 (usage error).

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "scfut/element.hpp"
#include "scfut/hopf.hpp"
#include "scfut/lattice.hpp"
#include "scfut/oracle.hpp"
#include "scfut/verify.hpp"

namespace {

using namespace scfut;

int degree_cap() {
    if (const char* env = std::getenv("FQSYM_SCF_MAX_DEGREE")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 8;
}

void require_degree(int degree) {
    const int cap = degree_cap();
    if (degree > cap)
        throw CLI::ValidationError("degree " + std::to_string(degree) + " exceeds the cap " +
                                   std::to_string(cap) + " (FQSYM_SCF_MAX_DEGREE)");
}

void emit(const ScfElement& x, bool plain) {
    if (!plain) {
        std::cout << to_json_string(x) << "\n";
        return;
    }
    if (x.is_zero()) std::cout << "0\n";
    for (const auto& [w, c] : x.terms())
        std::cout << rat_str(c) << " * " << basis_name(x.basis()) << "[" << to_text(w) << "]\n";
}

void emit(const TensorScfElement& x, bool plain) {
    if (!plain) {
        std::cout << to_json_string(x) << "\n";
        return;
    }
    if (x.is_zero()) std::cout << "0\n";
    for (const auto& [k, c] : x.terms())
        std::cout << rat_str(c) << " * " << basis_name(x.basis()) << "[" << to_text(k.first)
                  << "] (x) " << basis_name(x.basis()) << "[" << to_text(k.second) << "]\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"FQSym through supercharacters of ut_n(F_q)"};
    app.require_subcommand(1);

    std::string basis = "sch";
    bool plain = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_flag("--plain{true},--json{false}", plain, "plain text instead of JSON");
    };

    // product
    std::string pa, pb;
    auto* product_cmd = app.add_subcommand("product", "product of two basis elements");
    product_cmd->add_option("--basis", basis)->check(CLI::IsMember({"sch", "pch"}));
    product_cmd->add_option("v", pa, "first permutation, e.g. 1,2")->required();
    product_cmd->add_option("w", pb, "second permutation")->required();
    add_format(product_cmd);

    // coproduct
    std::string cw;
    auto* coproduct_cmd = app.add_subcommand("coproduct", "coproduct of a basis element");
    coproduct_cmd->add_option("--basis", basis)->check(CLI::IsMember({"sch", "pch"}));
    coproduct_cmd->add_option("w", cw, "permutation")->required();
    add_format(coproduct_cmd);

    // convert
    std::string to_basis, conv_perm;
    auto* convert_cmd = app.add_subcommand("convert", "convert an element between bases");
    convert_cmd->add_option("--to", to_basis, "target basis")
        ->required()
        ->check(CLI::IsMember({"sch", "pch"}));
    convert_cmd->add_option("--basis", basis, "basis of --perm input");
    convert_cmd->add_option("--perm", conv_perm, "basis element shortcut; otherwise JSON on stdin");
    add_format(convert_cmd);

    // star
    std::string sw;
    auto* star_cmd = app.add_subcommand("star", "star involution of a basis element");
    star_cmd->add_option("--basis", basis)->check(CLI::IsMember({"sch", "pch"}));
    star_cmd->add_option("w", sw, "permutation")->required();
    add_format(star_cmd);

    // antipode
    std::string aw;
    auto* antipode_cmd = app.add_subcommand("antipode", "antipode of a sch basis element");
    antipode_cmd->add_option("w", aw, "permutation")->required();
    add_format(antipode_cmd);

    // table
    int tn = 3, tq = 2;
    auto* table_cmd = app.add_subcommand("table", "supercharacter table as CSV");
    table_cmd->add_option("--n", tn, "matrix size")->required();
    table_cmd->add_option("--q", tq, "prime field size")->required();

    // oracle
    int on = 3, oq = 2;
    auto* oracle_cmd = app.add_subcommand("oracle", "group facts for ut_n(F_q)");
    oracle_cmd->add_option("--n", on)->required();
    oracle_cmd->add_option("--q", oq)->required();

    // verify
    std::string suite = "all";
    int vmax = 5, vn = 3, vq = 2, vjobs = 1, vsample = 0;
    std::uint64_t vseed = 20240901;
    auto* verify_cmd = app.add_subcommand("verify", "run invariant suites");
    verify_cmd->add_option("--suite", suite, "perm|lattice|hopf|pch|oracle|all");
    verify_cmd->add_option("--max-degree", vmax, "sweep bound (default 5)");
    verify_cmd->add_option("--n", vn, "oracle matrix size (default 3)");
    verify_cmd->add_option("--q", vq, "oracle field size (default 2)");
    verify_cmd->add_option("--jobs", vjobs, "worker threads");
    verify_cmd->add_option("--sample-pairs", vsample, "extra random pairs one degree up (pch)");
    verify_cmd->add_option("--seed", vseed, "sample seed");

    try {
        app.parse(argc, argv);

        if (product_cmd->parsed()) {
            const Permutation v = permutation_from_text(pa), w = permutation_from_text(pb);
            require_degree(v.size() + w.size());
            if (basis == "sch")
                emit(hopf_product(ScfElement::basis_element(Basis::Sch, v),
                                  ScfElement::basis_element(Basis::Sch, w)),
                     plain);
            else
                emit(product_pch(v, w), plain);
        } else if (coproduct_cmd->parsed()) {
            const Permutation w = permutation_from_text(cw);
            require_degree(w.size());
            if (basis == "sch")
                emit(hopf_coproduct(ScfElement::basis_element(Basis::Sch, w)), plain);
            else
                emit(coproduct_pch(w), plain);
        } else if (convert_cmd->parsed()) {
            ScfElement x(Basis::Sch);
            if (!conv_perm.empty()) {
                x = ScfElement::basis_element(basis_from_name(basis),
                                              permutation_from_text(conv_perm));
            } else {
                std::ostringstream buf;
                buf << std::cin.rdbuf();
                x = scf_element_from_json(buf.str());
            }
            for (const auto& [w, c] : x.terms()) require_degree(w.size());
            emit(to_basis == "sch" ? to_sch(x) : to_pch(x), plain);
        } else if (star_cmd->parsed()) {
            const Permutation w = permutation_from_text(sw);
            require_degree(w.size());
            emit(star(ScfElement::basis_element(basis_from_name(basis), w)), plain);
        } else if (antipode_cmd->parsed()) {
            const Permutation w = permutation_from_text(aw);
            require_degree(w.size());
            emit(antipode(ScfElement::basis_element(Basis::Sch, w)), plain);
        } else if (table_cmd->parsed()) {
            std::cout << supercharacter_table_csv(UtGroup(tn, tq));
        } else if (oracle_cmd->parsed()) {
            const UtGroup g(on, oq);
            auto perms = all_permutations(on);
            std::sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) {
                return inversion_table(a).entries < inversion_table(b).entries;
            });
            std::map<Permutation, long long> counts;
            for (long long idx = 0; idx < g.size(); ++idx) ++counts[g.superclass_label(idx)];
            nlohmann::json j;
            j["n"] = on;
            j["q"] = oq;
            j["group_order"] = g.size();
            j["superclasses"] = nlohmann::json::array();
            for (const auto& w : perms) {
                nlohmann::json s;
                s["label"] = w.word();
                s["size"] = counts[w];
                UtMatrix zero;
                zero.n = on;
                zero.q = oq;
                s["degree"] = rat_num_i64(supercharacter_value(w, zero));
                j["superclasses"].push_back(std::move(s));
            }
            std::cout << j.dump() << "\n";
        } else if (verify_cmd->parsed()) {
            require_degree(vmax);
            VerifyOptions opt;
            opt.max_degree = vmax;
            opt.n = vn;
            opt.q = vq;
            opt.jobs = vjobs;
            opt.sample_pairs = vsample;
            opt.seed = vseed;
            const auto cases = run_suite(suite, opt);
            bool all_pass = true;
            for (const auto& c : cases) {
                nlohmann::json j;
                j["suite"] = c.suite;
                j["case"] = c.name;
                j["status"] = c.pass ? "pass" : "fail";
                j["detail"] = c.detail;
                std::cout << j.dump() << "\n";
                if (!c.pass) all_pass = false;
            }
            if (!all_pass) return 1;
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
