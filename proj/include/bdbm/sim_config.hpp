#pragma once

#include <cmath>
#include <cstdint>

#include "bdbm/errors.hpp"

namespace bdbm {

struct SimConfig {
    double dt = 1e-4;
    double horizon = 10.0;
    double eps = 0.0;  // local-time bandwidth; 0 means sqrt(dt)
    std::size_t subordinator_trunc = 64;  // atom-index cutoff for infinite jump measures
    std::uint64_t seed = 1;
    enum class Storage { Grid, Events };
    Storage path_storage = Storage::Grid;

    double bandwidth() const { return eps > 0.0 ? eps : std::sqrt(dt); }
    double snap_tol() const { return 0.5 * bandwidth(); }
    std::size_t n_steps() const { return static_cast<std::size_t>(std::ceil(horizon / dt)); }

    void validate() const {
        if (!(dt > 0.0)) fail(Errc::ConfigError, "dt must be positive");
        if (!(horizon > 0.0)) fail(Errc::ConfigError, "horizon must be positive");
        // estimator consistency requires the band to dominate one step's spread
        if (bandwidth() < std::sqrt(dt) * (1.0 - 1e-12))
            fail(Errc::BandwidthTooSmall, "eps must be at least sqrt(dt)");
    }
};

}  // namespace bdbm
