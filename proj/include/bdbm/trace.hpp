#pragma once

#include <cstdint>
#include <vector>

#include "bdbm/clock.hpp"
#include "bdbm/pathsim.hpp"

namespace bdbm {

constexpr std::int32_t kCemeteryLevel = -1;

// Event-compressed trace: the chain the path induces on the embedded state
// set, in clock time.
struct TraceChainPath {
    struct Event {
        double time = 0.0;        // chain time of entry
        std::int32_t level = 0;   // kCemeteryLevel encodes the cemetery
    };
    std::vector<Event> events;
    double lifetime = 0.0;  // chain time A_{zeta-}

    // integral of exp(-alpha t) 1_{level j} over chain time
    double resolvent_integral(double alpha, std::size_t j) const;
};

// Extract the trace: values at clock-increase times snapped to the embedded
// set, consecutive equal levels merged; lifetime = final clock value.
TraceChainPath trace_path(const SamplePath& path, const ClockPath& clock,
                          const StateEmbedding& emb, double snap_tol);

// Negative demonstration: adding the subordinator jumps after the time change
// (instead of before) pushes the state off the embedded set. Reports the
// fraction of chain-grid times spent off-set for the reversed construction
// and for the correct trace on identical inputs.
struct WrongOrderReport {
    double wrong_fraction = 0.0;
    double correct_fraction = 0.0;
    std::size_t samples = 0;
};

WrongOrderReport wrong_order_demo(const BirthDeathMatrix& q, const FellerParams& fp,
                                  const SimConfig& cfg, std::size_t n_paths);

}  // namespace bdbm
