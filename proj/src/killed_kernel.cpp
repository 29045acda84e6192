#include "bdbm/killed_kernel.hpp"

#include <cmath>

#include "bdbm/errors.hpp"

namespace bdbm {

KilledKernel::KilledKernel(double alpha, double rel_tol) : alpha_(alpha), rel_tol_(rel_tol) {
    if (alpha < 0.0) fail(Errc::QuadratureNotConverged, "alpha must be nonnegative");
    s_ = std::sqrt(2.0 * alpha);
}

double KilledKernel::g0(double x, double y) const {
    if (alpha_ == 0.0) return 2.0 * std::min(x, y);
    // sinh(s (x^y)) exp(-s (x v y)) / W expanded into decaying exponentials,
    // so no overflow for large arguments.
    return (std::exp(-s_ * std::abs(x - y)) - std::exp(-s_ * (x + y))) / s_;
}

QuadResult KilledKernel::apply(const Fn& h, double x, double h_decay) const {
    if (alpha_ == 0.0) return potential(h, x, h_decay > 0 ? h_decay : 1.0);
    auto integrand = [&](double y) { return g0(x, y) * h(y); };
    QuadResult near{0.0, 0.0};
    if (x > 0.0) near = integrate(integrand, 0.0, x, rel_tol_);
    QuadResult far = integrate_semi_inf(integrand, x, s_ + h_decay, rel_tol_,
                                        rel_tol_ * std::abs(near.value));
    return {near.value + far.value, near.error + far.error};
}

QuadResult KilledKernel::potential(const Fn& h, double x, double h_decay) const {
    if (!(h_decay > 0.0)) fail(Errc::QuadratureNotConverged, "potential needs a decay hint");
    QuadResult near{0.0, 0.0};
    if (x > 0.0) near = integrate([&](double y) { return 2.0 * y * h(y); }, 0.0, x, rel_tol_);
    QuadResult far = integrate_semi_inf([&](double y) { return 2.0 * x * h(y); }, x, h_decay,
                                        rel_tol_, rel_tol_ * std::abs(near.value));
    return {near.value + far.value, near.error + far.error};
}

}  // namespace bdbm
