// Derivation runner for the boundary intersection form: computes the Gram
// table of every sign sequence up to a given length with two independent
// oracles (piecewise-linear covering model; braid invariance bootstrap) and
// reports whether they agree. The closed form shipped in the library was
// frozen from this agreement; rerun after any change to the form.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "gram_oracle.hpp"
#include "tangles/linalg.hpp"

namespace {

std::string signs_label(const std::vector<int>& eps) {
    std::string s;
    for (int e : eps) s += e > 0 ? '+' : '-';
    return s.empty() ? "(empty)" : s;
}

} // namespace

int main(int argc, char** argv) {
    int max_n = argc > 1 ? std::atoi(argv[1]) : 5;
    bool verbose = argc > 2 && std::string(argv[2]) == "-v";
    int checked = 0, failed = 0;
    for (int n = 0; n <= max_n; ++n) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> eps;
            for (int b = 0; b < n; ++b) eps.push_back(mask & (1u << b) ? +1 : -1);
            tangles::Mat geo = tangles::oracle::gram_geometric(eps);
            tangles::Mat boot = tangles::oracle::gram_bootstrap(eps);
            bool ok = geo == boot;
            ++checked;
            if (!ok) ++failed;
            if (verbose || !ok) {
                std::cout << signs_label(eps) << ": " << (ok ? "agree" : "DISAGREE") << "\n";
                std::cout << "  geometric:\n" << to_string(geo) << "\n";
                std::cout << "  bootstrap:\n" << to_string(boot) << "\n";
            }
        }
    }
    std::cout << checked << " sign sequences checked, " << failed << " disagreements\n";
    return failed == 0 ? 0 : 1;
}
