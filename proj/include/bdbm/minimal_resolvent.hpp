#pragma once

#include <cstddef>
#include <vector>

#include "bdbm/matrix.hpp"
#include "bdbm/scale_speed.hpp"

namespace bdbm {

// Minimal-chain resolvent Phi_ij(alpha) on the leading N x N block with
// absorbing truncation at level N, plus u_alpha(i) from the row-sum identity.
struct MinimalResolvent {
    double alpha = 0.0;
    std::size_t n = 0;
    std::vector<double> phi;  // row-major N x N
    std::vector<double> u;    // u_alpha(i) = 1 - alpha * row sum
    double trunc_error = 0.0;  // sup-change of (phi, u) when N doubles once

    double operator()(std::size_t i, std::size_t j) const { return phi[i * n + j]; }
    double row_sum(std::size_t i) const;
};

MinimalResolvent phi_minimal(const BirthDeathMatrix& q, const ScaleSpeed& ss, double alpha,
                             std::size_t n);

}  // namespace bdbm
