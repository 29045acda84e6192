#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "bdbm/sim_config.hpp"

namespace bdbm {

// Grid-sampled trajectory. values[k] is the state at time k*dt; a killed path
// stores samples only up to the kill index and carries the lifetime. Samples
// that are exactly 0.0 mark time the process held at the boundary (reflected
// diffusive samples are almost surely nonzero), which the local-time band
// estimators must skip.
struct SamplePath {
    double dt = 0.0;
    std::vector<double> values;
    std::vector<std::uint32_t> jump_marks;  // indices k where the path jumped into (0,inf)
    double lifetime = std::numeric_limits<double>::infinity();
    bool killed = false;

    std::size_t steps() const { return values.size(); }
    double time_at(std::size_t k) const { return static_cast<double>(k) * dt; }
};

// Per-level local-time accumulations along one path, plus the one-sided
// boundary accumulation at 0.
struct LocalTimeLedger {
    std::vector<double> levels;               // band centers (strictly decreasing)
    std::vector<std::vector<double>> cum;     // cum[n][k], nondecreasing in k
    std::vector<double> boundary;             // (1/2eps) * occupation of [0, eps)

    std::size_t grid_size() const { return boundary.size(); }
};

// Occupation-band estimate of the local time at `a`: one-sided band at the
// boundary (a == 0), symmetric band in the interior (Revuz normalization
// delta_a against the killed process). Returns the cumulative accumulation.
std::vector<double> estimate_local_time(const SamplePath& path, double a, const SimConfig& cfg);

LocalTimeLedger build_ledger(const SamplePath& path, const std::vector<double>& levels,
                             const SimConfig& cfg);

}  // namespace bdbm
