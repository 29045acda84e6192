#include "bdbm/minimal_resolvent.hpp"

#include <algorithm>
#include <cmath>

#include "bdbm/errors.hpp"
#include "bdbm/tridiag.hpp"

namespace bdbm {

namespace {

MinimalResolvent solve_block(const BirthDeathMatrix& q, double alpha, std::size_t n) {
    MinimalResolvent mr;
    mr.alpha = alpha;
    mr.n = n;
    mr.phi.assign(n * n, 0.0);
    TridiagResolventSolver solver(q.a, q.b, n, alpha);
    std::vector<double> col(n);
    for (std::size_t j = 0; j < n; ++j) {
        col = solver.solve_unit(j);
        for (std::size_t i = 0; i < n; ++i) mr.phi[i * n + j] = col[i];
    }
    mr.u.resize(n);
    for (std::size_t i = 0; i < n; ++i) mr.u[i] = 1.0 - alpha * mr.row_sum(i);
    return mr;
}

}  // namespace

double MinimalResolvent::row_sum(std::size_t i) const {
    double s = 0.0, comp = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double y = phi[i * n + j] - comp;
        const double t = s + y;
        comp = (t - s) - y;
        s = t;
    }
    return s;
}

MinimalResolvent phi_minimal(const BirthDeathMatrix& q, const ScaleSpeed& ss, double alpha,
                             std::size_t n) {
    (void)ss;
    if (!(alpha > 0.0)) fail(Errc::SingularSystem, "alpha must be positive");
    if (n < 2 || n > q.cap) fail(Errc::DimensionMismatch, "truncation level out of range");
    MinimalResolvent mr = solve_block(q, alpha, n);
    // Absorbing truncation converges from below; one doubling bounds the error.
    const std::size_t n2 = std::min(q.cap, 2 * n);
    if (n2 > n) {
        MinimalResolvent wide = solve_block(q, alpha, n2);
        double diff = 0.0;
        const std::size_t probe = std::min<std::size_t>(n, 12);
        for (std::size_t i = 0; i < probe; ++i) {
            diff = std::max(diff, std::abs(wide.u[i] - mr.u[i]));
            for (std::size_t j = 0; j < probe; ++j)
                diff = std::max(diff, std::abs(wide.phi[i * n2 + j] - mr.phi[i * n + j]));
        }
        mr.trunc_error = diff;
    }
    return mr;
}

}  // namespace bdbm
