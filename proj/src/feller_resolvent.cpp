#include "bdbm/feller_resolvent.hpp"

#include <cmath>

#include "bdbm/errors.hpp"

namespace bdbm {

ResolventValue feller_resolvent_at_zero(const FellerParams& fp, const KilledKernel& kernel,
                                        const Fn& h, double h_decay) {
    fp.validate();
    const double s = kernel.s();
    const double tol = kernel.rel_tol();

    QuadResult laplace = integrate_semi_inf([&](double y) { return std::exp(-s * y) * h(y); }, 0.0,
                                            s + h_decay, tol);
    double num = 2.0 * fp.p2 * laplace.value + fp.p3 * h(0.0);
    double den = fp.p1 + s * fp.p2 + kernel.alpha() * fp.p3;
    double err = 2.0 * fp.p2 * laplace.error;
    for (const Atom& at : fp.p4.atoms()) {
        const QuadResult g = kernel.apply(h, at.x, h_decay);
        num += at.w * g.value;
        den += at.w * (1.0 - std::exp(-s * at.x));
        err += at.w * g.error;
    }
    if (!(den > 0.0)) fail(Errc::InvalidFellerParams, "resolvent denominator vanishes");
    ResolventValue out;
    out.value = num / den;
    // truncated p4 tail: both the numerator (bounded by ||G0 h|| (1^x)-mass)
    // and the denominator (bounded by s (1^x)-mass) shift by at most the bound
    const double tail = fp.p4.tail_bound();
    out.uncertainty = err / den + tail * (1.0 + s * std::abs(out.value)) / den;
    return out;
}

ResolventValue feller_resolvent(const FellerParams& fp, const KilledKernel& kernel, const Fn& h,
                                double x, double h_decay) {
    const ResolventValue at0 = feller_resolvent_at_zero(fp, kernel, h, h_decay);
    const QuadResult g0 = kernel.apply(h, x, h_decay);
    const double w = std::exp(-kernel.s() * x);
    return {g0.value + at0.value * w, g0.error + at0.uncertainty * w};
}

ResolventValue doob_resolvent(const InstantLaw& lambda, const KilledKernel& kernel, const Fn& h,
                              double x, double h_decay) {
    const double s = kernel.s();
    double num = 0.0, den = 1.0, err = 0.0;
    for (const Atom& at : lambda.on_interior.atoms()) {
        const QuadResult g = kernel.apply(h, at.x, h_decay);
        num += at.w * g.value;
        den -= at.w * std::exp(-s * at.x);
        err += at.w * g.error;
    }
    // mass at the cemetery contributes to neither sum; lambda = delta_cemetery
    // degenerates to the killed resolvent itself.
    const QuadResult base = kernel.apply(h, x, h_decay);
    if (lambda.on_interior.empty())
        return {base.value, base.error};
    if (!(den > 0.0)) fail(Errc::ZeroDenominator, "resurrection series diverges");
    const double w = std::exp(-s * x);
    return {base.value + w * num / den, base.error + w * err / den};
}

BcResidual residual_feller_bc(const FellerParams& fp, const KilledKernel& kernel, const Fn& h,
                              double h_decay) {
    const ResolventValue at0 = feller_resolvent_at_zero(fp, kernel, h, h_decay);
    auto f = [&](double x) {
        const QuadResult g0 = kernel.apply(h, x, h_decay);
        return g0.value + at0.value * std::exp(-kernel.s() * x);
    };
    // one-sided three-point difference; step balances truncation against the
    // quadrature noise in each f-evaluation (h* ~ tol^(1/3))
    const double step = std::cbrt(kernel.rel_tol());
    const double f0 = at0.value;
    const double f1 = f(step), f2 = f(2.0 * step);
    BcResidual out;
    out.fprime0 = (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * step);
    out.fsecond0 = 2.0 * (kernel.alpha() * f0 - h(0.0));
    const QuadResult laplace = integrate_semi_inf(
        [&](double y) { return std::exp(-kernel.s() * y) * h(y); }, 0.0, kernel.s() + h_decay,
        kernel.rel_tol());
    out.fprime0_analytic = 2.0 * laplace.value - kernel.s() * f0;
    double resid = fp.p1 * f0 - fp.p2 * out.fprime0 + 0.5 * fp.p3 * out.fsecond0;
    for (const Atom& at : fp.p4.atoms()) resid += at.w * (f0 - f(at.x));
    out.residual = std::abs(resid);
    return out;
}

SymmetricMeasure symmetric_measure(const FellerParams& fp) {
    if (!(fp.p2 > 0.0)) fail(Errc::InvalidFellerParams, "symmetric measure needs p2 > 0");
    return SymmetricMeasure{fp.p3 / (2.0 * fp.p2)};
}

double symmetry_residual(const FellerParams& fp, const KilledKernel& kernel, const Fn& h1,
                         const Fn& h2, double h_decay) {
    const ResolventValue a0_1 = feller_resolvent_at_zero(fp, kernel, h1, h_decay);
    const ResolventValue a0_2 = feller_resolvent_at_zero(fp, kernel, h2, h_decay);
    auto G = [&](const Fn& h, const ResolventValue& a0, double x) {
        return kernel.apply(h, x, h_decay).value + a0.value * std::exp(-kernel.s() * x);
    };
    const double m0 = (fp.p2 > 0.0) ? fp.p3 / (2.0 * fp.p2) : 0.0;
    auto lhs_f = [&](double x) { return G(h1, a0_1, x) * h2(x); };
    auto rhs_f = [&](double x) { return h1(x) * G(h2, a0_2, x); };
    const double tol = kernel.rel_tol();
    const QuadResult lhs = integrate_semi_inf(lhs_f, 0.0, h_decay > 0 ? h_decay : 1.0, tol);
    const QuadResult rhs = integrate_semi_inf(rhs_f, 0.0, h_decay > 0 ? h_decay : 1.0, tol);
    const double atom_term = m0 * (a0_1.value * h2(0.0) - h1(0.0) * a0_2.value);
    return std::abs(lhs.value + atom_term - rhs.value);
}

}  // namespace bdbm
