#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace scfut {

struct VerifyCase {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int max_degree = 5;
    int n = 3;
    int q = 2;
    int jobs = 1;
    int sample_pairs = 0;  // extra random pairs at max_degree + 1 (pch suite)
    std::uint64_t seed = 20240901;
};

std::vector<std::string> suite_names();

// Runs one invariant suite ("perm", "lattice", "hopf", "pch", "oracle" or
// "all"); results come back in canonical (suite, name) order.
std::vector<VerifyCase> run_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace scfut
