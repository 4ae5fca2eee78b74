#pragma once

#include <random>

#include "tangles/laurent.hpp"
#include "tangles/linalg.hpp"

namespace tangles::testutil {

inline Laurent rand_laurent(std::mt19937& rng, int max_terms = 4, int max_exp = 4, int max_coeff = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(-max_exp, max_exp);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    Laurent p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p += Laurent::term(coeff(rng), exp(rng));
    return p;
}

inline Laurent rand_laurent_nonzero(std::mt19937& rng, int max_terms = 4, int max_exp = 4, int max_coeff = 5) {
    while (true) {
        Laurent p = rand_laurent(rng, max_terms, max_exp, max_coeff);
        if (!p.is_zero()) return p;
    }
}

inline Laurent rand_unit(std::mt19937& rng, int max_exp = 3) {
    std::uniform_int_distribution<int> exp(-max_exp, max_exp);
    std::uniform_int_distribution<int> sign(0, 1);
    return Laurent::term(sign(rng) ? 1 : -1, exp(rng));
}

inline Mat rand_mat(std::mt19937& rng, int rows, int cols, int max_terms = 2, int max_exp = 2, int max_coeff = 3) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rand_laurent(rng, max_terms, max_exp, max_coeff);
    return m;
}

} // namespace tangles::testutil
