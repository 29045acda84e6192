#include "bdbm/trace.hpp"

#include <cmath>

#include "bdbm/errors.hpp"

namespace bdbm {

double TraceChainPath::resolvent_integral(double alpha, std::size_t j) const {
    double acc = 0.0;
    for (std::size_t e = 0; e < events.size(); ++e) {
        if (events[e].level != static_cast<std::int32_t>(j)) continue;
        const double t0 = events[e].time;
        const double t1 = (e + 1 < events.size()) ? events[e + 1].time : lifetime;
        acc += (std::exp(-alpha * t0) - std::exp(-alpha * t1)) / alpha;
    }
    return acc;
}

TraceChainPath trace_path(const SamplePath& path, const ClockPath& clock,
                          const StateEmbedding& emb, double snap_tol) {
    if (clock.a.size() != path.steps()) fail(Errc::LevelMismatch, "clock grid mismatch");
    TraceChainPath trace;
    trace.lifetime = clock.final();
    double prev_a = 0.0;
    std::int32_t prev_level = kCemeteryLevel - 1;  // sentinel distinct from any state
    for (std::size_t k = 0; k < path.steps(); ++k) {
        const double a = clock.a[k];
        if (a <= prev_a && k > 0) continue;  // no chain time passes while A is flat
        const double y = path.values[k];
        double dist = 0.0;
        const std::size_t lvl = emb.nearest_level(y, &dist);
        if (dist > snap_tol)
            fail(Errc::SnapFailure, "clock increased off the embedded set; refine dt/eps");
        const double entry_time = prev_a;  // chain time accrued so far
        if (static_cast<std::int32_t>(lvl) != prev_level) {
            trace.events.push_back({entry_time, static_cast<std::int32_t>(lvl)});
            prev_level = static_cast<std::int32_t>(lvl);
        }
        prev_a = a;
    }
    if (path.killed) trace.events.push_back({trace.lifetime, kCemeteryLevel});
    return trace;
}

}  // namespace bdbm
