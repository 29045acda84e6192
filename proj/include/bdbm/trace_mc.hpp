#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bdbm/params.hpp"
#include "bdbm/pathsim.hpp"
#include "bdbm/scale_speed.hpp"

namespace bdbm {

// Monte Carlo estimate of the traced-chain resolvent at a grid of
// (start level i, target level j, alpha) triples.
struct ResolventEstimate {
    std::vector<std::size_t> starts;
    std::vector<std::size_t> targets;
    std::vector<double> alphas;
    std::vector<double> mean;  // indexed ((i_idx * targets + j_idx) * alphas + a_idx)
    std::vector<double> se;
    std::size_t n_paths = 0;
    std::string fingerprint;

    std::size_t index(std::size_t i_idx, std::size_t j_idx, std::size_t a_idx) const {
        return (i_idx * targets.size() + j_idx) * alphas.size() + a_idx;
    }
};

struct TraceMcConfig {
    std::vector<double> alphas{1.0};
    std::vector<std::size_t> start_levels{0};
    std::vector<std::size_t> target_levels{0};
    std::size_t n_paths = 1000;
    SimConfig sim;
    std::size_t level_cap = 30;   // clock truncation: sum mu_n L^n over n < level_cap
    double chain_horizon = 40.0;  // stop once exp(-alpha A) is negligible
    int threads = 0;              // 0: BD_TRACE_THREADS env, then hardware
};

// Primary estimator (change of variables, no clock inversion): per path from
// c_hat[i], the contribution to the (i,j,alpha) cell is
//   mu_j * integral exp(-alpha A_t) dL^{c_hat_j}_t.
// Streamed along the composition; boundary holding inserted by a sojourn
// parameter moves neither the band accumulations nor the kill threshold, so
// p3 drops out exactly as it does from the traced chain.
ResolventEstimate mc_trace_resolvent(const FellerParams& fp, const ScaleSpeed& ss,
                                     const StateEmbedding& emb, const TraceMcConfig& mc);

// Secondary estimator for cross-checks: build full paths, accumulate the
// clock, extract the trace, and integrate exp(-alpha t) along it.
ResolventEstimate trace_resolvent_via_paths(const FellerParams& fp, const ScaleSpeed& ss,
                                            const StateEmbedding& emb, const TraceMcConfig& mc);

int resolve_thread_count(int requested);

std::string fingerprint_string(const FellerParams& fp, const TraceMcConfig& mc);

}  // namespace bdbm
