#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "bdbm/minimal_resolvent.hpp"
#include "bdbm/params.hpp"

namespace bdbm {

// (gamma, beta, nu)-resolvent matrix built on top of a minimal resolvent.
struct ChainResolvent {
    double alpha = 0.0;
    std::size_t n = 0;
    std::vector<double> psi;  // row-major
    double nu_tail_error = 0.0;  // propagated bound from a truncated nu

    double operator()(std::size_t i, std::size_t j) const { return psi[i * n + j]; }
    double row_sum(std::size_t i) const;
};

ChainResolvent psi_chain(const MinimalResolvent& mr, const ScaleSpeed& ss, const ChainParams& cp);

// Tail extrapolation of a level function F(k) -> F(inf) in the c_hat variable
// (polynomial extrapolation to c_hat = 0 over an adaptively chosen window of
// 8 levels whose increments are still numerically reliable).
struct TailLimit {
    double value = 0.0;
    double uncertainty = 0.0;
    std::size_t window_end = 0;  // last level used (exclusive)
};

TailLimit extrapolate_tail(const std::vector<double>& f, const StateEmbedding& emb);

// Residual of the boundary condition at infinity for F = Psi * h:
// |beta/2 * F+(inf) + sum_k (F(inf) - F(k)) nu_k + gamma F(inf)|.
struct ChainBcResidual {
    double residual = 0.0;
    double uncertainty = 0.0;
    double f_inf = 0.0;
    double fplus_inf = 0.0;
};

ChainBcResidual residual_chain_bc(const ChainResolvent& psi, const ScaleSpeed& ss,
                                  const StateEmbedding& emb, const ChainParams& cp,
                                  const std::vector<double>& h);

// Same residual evaluated on the minimal resolvent (formal gamma-only check).
ChainBcResidual residual_chain_bc_minimal(const MinimalResolvent& phi, const ScaleSpeed& ss,
                                          const StateEmbedding& emb,
                                          const std::vector<double>& h);

// max entrywise |Psi(alpha) - Psi(beta) + (alpha-beta) Psi(alpha) Psi(beta)|.
double resolvent_identity_residual(const ChainResolvent& pa, const ChainResolvent& pb);
double resolvent_identity_residual(const MinimalResolvent& pa, const MinimalResolvent& pb);

}  // namespace bdbm
