#pragma once

#include <functional>

#include "bdbm/quadrature.hpp"

namespace bdbm {

using Fn = std::function<double(double)>;

// Resolvent kernel of Brownian motion on (0,inf) killed at 0:
// g0(x,y) = u_minus(x^y) u_plus(x v y) / W with u_minus = sinh(s x),
// u_plus = exp(-s x), W = s/2, s = sqrt(2 alpha).
class KilledKernel {
  public:
    explicit KilledKernel(double alpha, double rel_tol = 1e-10);

    double alpha() const { return alpha_; }
    double s() const { return s_; }
    double rel_tol() const { return rel_tol_; }

    double g0(double x, double y) const;

    // G0_alpha h (x); h bounded, decaying within the reachable cutoff.
    // `h_decay` widens the effective integration range for slowly-decaying h.
    QuadResult apply(const Fn& h, double x, double h_decay = 0.0) const;

    // alpha = 0 potential: G0 h (x) = 2 * integral of (x ^ y) h(y) dy.
    QuadResult potential(const Fn& h, double x, double h_decay) const;

  private:
    double alpha_;
    double s_;
    double rel_tol_;
};

}  // namespace bdbm
