#pragma once

#include <cstddef>
#include <vector>

#include "bdbm/matrix.hpp"

namespace bdbm {

enum class BoundaryClass { Regular, Exit, Other };

const char* boundary_class_name(BoundaryClass c);

// Scale function c, speed measure mu, and the derived boundary data of the
// minimal chain. c[0] == 0, c strictly increasing; mu[0] == 1.
struct ScaleSpeed {
    std::vector<double> c;
    std::vector<double> mu;
    double c_inf = 0.0;        // +inf when the scale diverges
    double c_inf_bound = 0.0;  // half-width of the declared tail bound on c_inf
    bool c_converged = false;
    std::vector<double> r_partial;  // partial sums of R = sum (c_{k+1}-c_k) * sum_{i<=k} mu_i
    std::vector<double> s_partial;  // partial sums of S = sum c_k mu_k
    bool r_converged = false;
    bool s_converged = false;
    BoundaryClass boundary_class = BoundaryClass::Other;

    std::size_t cap() const { return c.size(); }
    double total_mu() const;
    // Geometric bound on sum_{n >= from} mu_n (0 when not extrapolable).
    double mu_tail(std::size_t from) const;
};

ScaleSpeed compute_scale_speed(const BirthDeathMatrix& q);

BoundaryClass classify_boundary(const ScaleSpeed& ss);

// The reflected state set: c_hat[n] = c_inf - c[n], strictly decreasing to 0.
struct StateEmbedding {
    std::vector<double> c_hat;

    std::size_t levels() const { return c_hat.size(); }
    double operator[](std::size_t n) const { return c_hat[n]; }

    // Xi: exact level of a stored coordinate (throws SnapFailure when `x` is
    // not within `tol` of any stored c_hat value).
    std::size_t level_of(double x, double tol) const;
    // Nearest stored level, with the achieved distance in *dist.
    std::size_t nearest_level(double x, double* dist = nullptr) const;
};

StateEmbedding state_embedding(const ScaleSpeed& ss);

}  // namespace bdbm
