#include "bdbm/clock.hpp"

#include <algorithm>

#include "bdbm/errors.hpp"

namespace bdbm {

double ClockPath::inverse(double t) const {
    const std::size_t k = inverse_index(t);
    if (k >= a.size()) return std::numeric_limits<double>::infinity();
    return static_cast<double>(k) * dt;
}

std::size_t ClockPath::inverse_index(double t) const {
    const auto it = std::upper_bound(a.begin(), a.end(), t);
    return static_cast<std::size_t>(it - a.begin());
}

ClockPath accumulate_pcaf(const LocalTimeLedger& ledger, const ScaleSpeed& ss,
                          std::size_t level_cap, double dt) {
    const std::size_t n_levels = std::min(level_cap, ledger.levels.size());
    if (n_levels > ss.mu.size()) fail(Errc::LevelMismatch, "mu shorter than the ledger");
    const std::size_t n = ledger.grid_size();
    ClockPath clock;
    clock.dt = dt;
    clock.a.assign(n, 0.0);
    for (std::size_t lvl = 0; lvl < n_levels; ++lvl) {
        if (ledger.cum[lvl].size() != n) fail(Errc::LevelMismatch, "ragged ledger");
        const double w = ss.mu[lvl];
        for (std::size_t k = 0; k < n; ++k) clock.a[k] += w * ledger.cum[lvl][k];
    }
    // dropped levels contribute at most (mu tail) * (largest accumulated local time)
    double max_lt = 0.0;
    for (std::size_t lvl = 0; lvl < n_levels; ++lvl)
        max_lt = std::max(max_lt, ledger.cum[lvl].back());
    clock.tail_bound = ss.mu_tail(n_levels) * max_lt;
    return clock;
}

}  // namespace bdbm
