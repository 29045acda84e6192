#pragma once

#include <functional>

namespace bdbm {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // achieved error estimate
};

// Adaptive Gauss-Kronrod 7-15 on [a, b].
QuadResult integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                     double abs_tol = 0.0);

// Integral over [a, inf) of a function with (at least) exponential decay at
// rate `decay`: blocks of width ~8/decay are added until they stop mattering.
QuadResult integrate_semi_inf(const std::function<double(double)>& f, double a, double decay,
                              double rel_tol, double abs_tol = 0.0);

}  // namespace bdbm
