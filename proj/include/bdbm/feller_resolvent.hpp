#pragma once

#include "bdbm/killed_kernel.hpp"
#include "bdbm/measure.hpp"
#include "bdbm/params.hpp"

namespace bdbm {

struct ResolventValue {
    double value = 0.0;
    double uncertainty = 0.0;  // quadrature error plus propagated p4 tail bound
};

// Boundary value G_alpha h (0) of the resolvent determined by (p1,p2,p3,p4);
// the p4 integral term is evaluated exactly over the stored atoms and a
// truncated tail enters the uncertainty.
ResolventValue feller_resolvent_at_zero(const FellerParams& fp, const KilledKernel& kernel,
                                        const Fn& h, double h_decay = 0.0);

// G_alpha h (x) = G0_alpha h (x) + G_alpha h(0) exp(-s x).
ResolventValue feller_resolvent(const FellerParams& fp, const KilledKernel& kernel, const Fn& h,
                                double x, double h_decay = 0.0);

// Resolvent of the piecing-out of killed Brownian motion with instantaneous
// distribution lambda on (0,inf) plus possible mass at the cemetery.
struct InstantLaw {
    AtomicMeasure on_interior;  // weights on (0, inf)
    double at_cemetery = 0.0;

    double total() const { return on_interior.total_mass() + at_cemetery; }
};

ResolventValue doob_resolvent(const InstantLaw& lambda, const KilledKernel& kernel, const Fn& h,
                              double x, double h_decay = 0.0);

// Residual of the boundary condition
// p1 f(0) - p2 f'(0) + p3/2 f''(0) + integral (f(0)-f(x)) dp4, for f = G_alpha h.
// f'(0) uses a one-sided three-point difference with step ~ tol^(1/3);
// f''(0) uses the generator identity f'' = 2(alpha f - h).
struct BcResidual {
    double residual = 0.0;
    double fprime0 = 0.0;
    double fsecond0 = 0.0;
    double fprime0_analytic = 0.0;  // closed-form derivative for cross-checks
};

BcResidual residual_feller_bc(const FellerParams& fp, const KilledKernel& kernel, const Fn& h,
                              double h_decay = 0.0);

// Mass at zero of the symmetrizing measure, defined when p2 > 0.
struct SymmetricMeasure {
    double atom_at_zero = 0.0;  // p3 / (2 p2); density 1 on (0, inf)
};

SymmetricMeasure symmetric_measure(const FellerParams& fp);

// | integral G_alpha h1 * h2 dm - integral h1 * G_alpha h2 dm | with
// m = (p3/2p2) delta_0 + Lebesgue. Expected ~0 iff p2 > 0 and |p4| = 0.
double symmetry_residual(const FellerParams& fp, const KilledKernel& kernel, const Fn& h1,
                         const Fn& h2, double h_decay);

}  // namespace bdbm
