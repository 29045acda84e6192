#include "bdbm/sample_path.hpp"

#include <cmath>

#include "bdbm/errors.hpp"

namespace bdbm {

std::vector<double> estimate_local_time(const SamplePath& path, double a, const SimConfig& cfg) {
    cfg.validate();
    if (a < 0.0) fail(Errc::ConfigError, "level must be nonnegative");
    const double eps = cfg.bandwidth();
    if (eps < std::sqrt(path.dt) * (1.0 - 1e-12))
        fail(Errc::BandwidthTooSmall, "eps must be at least sqrt(dt)");
    const double gain = path.dt / (2.0 * eps);
    std::vector<double> cum(path.steps(), 0.0);
    double acc = 0.0;
    for (std::size_t k = 0; k < path.steps(); ++k) {
        const double y = path.values[k];
        if (a == 0.0) {
            if (y < eps) acc += gain;
        } else if (y > 0.0 && std::abs(y - a) < eps) {
            acc += gain;
        }
        cum[k] = acc;
    }
    return cum;
}

LocalTimeLedger build_ledger(const SamplePath& path, const std::vector<double>& levels,
                             const SimConfig& cfg) {
    LocalTimeLedger ledger;
    ledger.levels = levels;
    ledger.cum.reserve(levels.size());
    for (double a : levels) ledger.cum.push_back(estimate_local_time(path, a, cfg));
    ledger.boundary = estimate_local_time(path, 0.0, cfg);
    return ledger;
}

}  // namespace bdbm
