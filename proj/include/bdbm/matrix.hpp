#pragma once

#include <cstddef>
#include <vector>

namespace bdbm {

// Tridiagonal rate data of a birth-death chain, truncated at `cap` levels.
// Row k of the generator is (a_k, -(a_k+b_k), b_k) with a_0 = 0.
struct BirthDeathMatrix {
    std::vector<double> a;  // death rates, a[0] == 0
    std::vector<double> b;  // birth rates
    std::size_t cap = 0;

    double q(std::size_t k) const { return a[k] + b[k]; }
};

BirthDeathMatrix build_matrix(std::vector<double> a, std::vector<double> b, std::size_t cap);

// Named generator: b_0 = 1, a_k = (ratio/2) * ratio^(k-1), b_k = ratio^k.
// ratio = 4 is the standard geometric test matrix.
BirthDeathMatrix geometric_matrix(double ratio, std::size_t cap);

// Constant rates a_k = b_k = rate (b_0 = rate): simple random walk, divergent scale.
BirthDeathMatrix random_walk_matrix(double rate, std::size_t cap);

}  // namespace bdbm
