#pragma once

#include <cstddef>
#include <vector>

#include "bdbm/errors.hpp"

namespace bdbm {

// Factorized solver for (alpha I - Q_N) x = rhs with Q_N the truncated
// birth-death generator. The system is an M-matrix, so the no-pivot sweep
// below involves only nonnegative quantities for nonnegative rhs: tiny
// solution components keep full relative accuracy, which the resolvent
// identities downstream depend on.
class TridiagResolventSolver {
  public:
    TridiagResolventSolver(const std::vector<double>& a, const std::vector<double>& b,
                           std::size_t n, double alpha)
        : a_(a), b_(b), n_(n) {
        w_.resize(n);
        double w = alpha + a[0] + b[0];
        for (std::size_t k = 0; k < n; ++k) {
            if (k > 0) w = alpha + a_[k] + b_[k] - a_[k] * (b_[k - 1] / w_[k - 1]);
            if (!(w > 0.0)) fail(Errc::SingularSystem, "pivot vanished in tridiagonal sweep");
            w_[k] = w;
        }
    }

    // rhs may alias the output.
    void solve(const double* rhs, double* x) const {
        std::vector<double> g(n_);
        g[0] = rhs[0] / w_[0];
        for (std::size_t k = 1; k < n_; ++k) g[k] = (rhs[k] + a_[k] * g[k - 1]) / w_[k];
        x[n_ - 1] = g[n_ - 1];
        for (std::size_t k = n_ - 1; k-- > 0;) x[k] = g[k] + (b_[k] / w_[k]) * x[k + 1];
    }

    std::vector<double> solve_unit(std::size_t j) const {
        std::vector<double> rhs(n_, 0.0), x(n_);
        rhs[j] = 1.0;
        solve(rhs.data(), x.data());
        return x;
    }

    std::size_t size() const { return n_; }

  private:
    const std::vector<double>& a_;
    const std::vector<double>& b_;
    std::size_t n_;
    std::vector<double> w_;
};

}  // namespace bdbm
