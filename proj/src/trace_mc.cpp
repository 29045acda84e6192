#include "bdbm/trace_mc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "bdbm/clock.hpp"
#include "bdbm/errors.hpp"
#include "bdbm/trace.hpp"

namespace bdbm {

namespace {

// Piecewise-constant view of y -> (clock rate, target-band membership):
// breakpoints at every c_hat[n] +- eps for n below the clock cap.
struct BandTable {
    std::vector<double> edges;
    std::vector<double> rate;            // sum mu_n / (2 eps) over covering bands
    std::vector<std::uint32_t> members;  // bit j_idx set when target j's band covers
    double eps = 0.0;

    std::size_t locate(double y) const {
        return static_cast<std::size_t>(
                   std::upper_bound(edges.begin(), edges.end(), y) - edges.begin()) -
               1;
    }
};

BandTable build_band_table(const ScaleSpeed& ss, const StateEmbedding& emb, std::size_t cap,
                           const std::vector<std::size_t>& targets, double eps) {
    const std::size_t n_levels = std::min(cap, emb.levels());
    std::vector<double> cuts{0.0};
    for (std::size_t n = 0; n < n_levels; ++n) {
        if (emb[n] - eps > 0.0) cuts.push_back(emb[n] - eps);
        cuts.push_back(emb[n] + eps);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    BandTable table;
    table.eps = eps;
    table.edges = cuts;
    table.rate.assign(cuts.size(), 0.0);
    table.members.assign(cuts.size(), 0);
    for (std::size_t c = 0; c < cuts.size(); ++c) {
        const double hi = (c + 1 < cuts.size()) ? cuts[c + 1] : cuts[c] * 2.0 + 1.0;
        const double mid = 0.5 * (cuts[c] + hi);
        for (std::size_t n = 0; n < n_levels; ++n) {
            if (std::abs(mid - emb[n]) < eps) {
                table.rate[c] += ss.mu[n] / (2.0 * eps);
                for (std::size_t t = 0; t < targets.size(); ++t)
                    if (targets[t] == n) table.members[c] |= (1u << t);
            }
        }
    }
    return table;
}

struct Accumulator {
    std::vector<double> cells;  // per (j_idx, a_idx)
};

}  // namespace

int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("BD_TRACE_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::string fingerprint_string(const FellerParams& fp, const TraceMcConfig& mc) {
    std::ostringstream os;
    os.precision(17);
    os << "seed=" << mc.sim.seed << ";dt=" << mc.sim.dt << ";eps=" << mc.sim.bandwidth()
       << ";horizon=" << mc.sim.horizon << ";chain_horizon=" << mc.chain_horizon
       << ";cap=" << mc.level_cap << ";trunc=" << mc.sim.subordinator_trunc
       << ";paths=" << mc.n_paths << ";p=(" << fp.p1 << "," << fp.p2 << "," << fp.p3 << ",[";
    for (const Atom& at : fp.p4.atoms()) os << at.x << ":" << at.w << ",";
    os << "])";
    return os.str();
}

namespace {

void run_paths(const FellerParams& fp, const ScaleSpeed& ss, const StateEmbedding& emb,
               const TraceMcConfig& mc, const BandTable& table, const PathRegime regime,
               std::size_t i_idx, std::size_t p_begin, std::size_t p_end,
               std::vector<double>& per_path /* (p, j_idx*na+a_idx) */) {
    const double dt = mc.sim.dt;
    const double sigma = std::sqrt(dt);
    const double eps = mc.sim.bandwidth();
    const double gain = dt / (2.0 * eps);
    const std::size_t na = mc.alphas.size();
    const std::size_t nj = mc.target_levels.size();
    const std::size_t n_steps = mc.sim.n_steps();
    const double x0 = emb[mc.start_levels[i_idx]];
    const double touch = mc.sim.snap_tol();
    const double jump_mass = fp.p4.total_mass();

    std::vector<double> mu_j(nj);
    for (std::size_t j = 0; j < nj; ++j) mu_j[j] = ss.mu[mc.target_levels[j]];

    for (std::size_t p = p_begin; p < p_end; ++p) {
        const std::uint64_t stream = i_idx * mc.n_paths + p;
        PathRng rng(mc.sim.seed, stream);
        double* cells = per_path.data() + (p + i_idx * mc.n_paths) * nj * na;
        for (std::size_t c = 0; c < nj * na; ++c) cells[c] = 0.0;

        double a_clock = 0.0;
        if (regime == PathRegime::KilledBm) {
            double y = x0;
            for (std::size_t k = 0; k < n_steps && a_clock < mc.chain_horizon; ++k) {
                const std::size_t cell = table.locate(y);
                const double da = table.rate[cell] * dt;
                const std::uint32_t mask = table.members[cell];
                if (mask) {
                    const double a_mid = a_clock + 0.5 * da;
                    for (std::size_t j = 0; j < nj; ++j)
                        if (mask & (1u << j))
                            for (std::size_t ai = 0; ai < na; ++ai)
                                cells[j * na + ai] +=
                                    mu_j[j] * std::exp(-mc.alphas[ai] * a_mid) * gain;
                }
                a_clock += da;
                const double y_next = y + sigma * rng.normal();
                if (y_next <= 0.0) break;
                if (rng.uniform() < std::exp(-2.0 * y * y_next / dt)) break;
                y = y_next;
            }
            continue;
        }

        if (regime == PathRegime::HoldAndJump) {
            const double exit_rate = fp.p1 + jump_mass;
            double y = x0;
            bool dead = false;
            for (std::size_t k = 0; k < n_steps && a_clock < mc.chain_horizon && !dead; ++k) {
                if (y <= touch) {
                    // holding contributes nothing to the clock or the bands;
                    // resolve the jump immediately
                    if (exit_rate == 0.0) break;  // absorbed: clock stalls forever
                    const double u = rng.uniform() * exit_rate;
                    if (u < fp.p1) {
                        dead = true;
                        break;
                    }
                    double pick = u - fp.p1;
                    y = fp.p4.atoms().back().x;
                    for (const Atom& at : fp.p4.atoms()) {
                        if (pick < at.w) {
                            y = at.x;
                            break;
                        }
                        pick -= at.w;
                    }
                }
                const std::size_t cell = table.locate(y);
                const double da = table.rate[cell] * dt;
                const std::uint32_t mask = table.members[cell];
                if (mask) {
                    const double a_mid = a_clock + 0.5 * da;
                    for (std::size_t j = 0; j < nj; ++j)
                        if (mask & (1u << j))
                            for (std::size_t ai = 0; ai < na; ++ai)
                                cells[j * na + ai] +=
                                    mu_j[j] * std::exp(-mc.alphas[ai] * a_mid) * gain;
                }
                a_clock += da;
                y = std::abs(y + sigma * rng.normal());
            }
            continue;
        }

        // composition regime
        SubordinatorPath z = simulate_subordinator(fp.p2, fp.p4, mc.sim, stream);
        SubordinatorPath::Cursor cur;
        PathRng kill_rng(mc.sim.seed ^ 0xdeadbeefULL, stream);
        const double kill_threshold = fp.p1 > 0.0 ? kill_rng.exponential() : 0.0;
        double w = x0;
        double ell = 0.0;
        for (std::size_t k = 0; k < n_steps && a_clock < mc.chain_horizon; ++k) {
            if (w < eps) ell += gain;
            const auto zs = z.at(ell, cur);
            if (fp.p1 > 0.0 && fp.p1 * zs.zinv > kill_threshold) break;
            const double y = zs.h + w;
            const std::size_t cell = table.locate(y);
            const double da = table.rate[cell] * dt;
            const std::uint32_t mask = table.members[cell];
            if (mask) {
                const double a_mid = a_clock + 0.5 * da;
                for (std::size_t j = 0; j < nj; ++j)
                    if (mask & (1u << j))
                        for (std::size_t ai = 0; ai < na; ++ai)
                            cells[j * na + ai] +=
                                mu_j[j] * std::exp(-mc.alphas[ai] * a_mid) * gain;
            }
            a_clock += da;
            w = std::abs(w + sigma * rng.normal());
        }
    }
}

ResolventEstimate reduce_estimates(const TraceMcConfig& mc, const std::vector<double>& per_path,
                                   const FellerParams& fp) {
    const std::size_t ni = mc.start_levels.size();
    const std::size_t nj = mc.target_levels.size();
    const std::size_t na = mc.alphas.size();
    ResolventEstimate est;
    est.starts = mc.start_levels;
    est.targets = mc.target_levels;
    est.alphas = mc.alphas;
    est.n_paths = mc.n_paths;
    est.fingerprint = fingerprint_string(fp, mc);
    est.mean.assign(ni * nj * na, 0.0);
    est.se.assign(ni * nj * na, 0.0);
    // reduce in path-index order with compensated sums so the result does not
    // depend on the worker partition
    for (std::size_t i = 0; i < ni; ++i)
        for (std::size_t c = 0; c < nj * na; ++c) {
            double s = 0.0, comp = 0.0, s2 = 0.0, comp2 = 0.0;
            for (std::size_t p = 0; p < mc.n_paths; ++p) {
                const double v = per_path[(p + i * mc.n_paths) * nj * na + c];
                double yv = v - comp;
                double tv = s + yv;
                comp = (tv - s) - yv;
                s = tv;
                const double v2 = v * v;
                yv = v2 - comp2;
                tv = s2 + yv;
                comp2 = (tv - s2) - yv;
                s2 = tv;
            }
            const double n = static_cast<double>(mc.n_paths);
            const double mean = s / n;
            const double var = std::max(0.0, s2 / n - mean * mean);
            est.mean[i * nj * na + c] = mean;
            est.se[i * nj * na + c] = std::sqrt(var / std::max(1.0, n - 1.0));
        }
    return est;
}

}  // namespace

ResolventEstimate mc_trace_resolvent(const FellerParams& fp, const ScaleSpeed& ss,
                                     const StateEmbedding& emb, const TraceMcConfig& mc) {
    mc.sim.validate();
    const PathRegime regime = classify_regime(fp);
    if (regime == PathRegime::Unsupported)
        fail(Errc::RegimeMismatch, "p2 = p3 = 0 with finite p4 has no pathwise route");
    if (ss.boundary_class != BoundaryClass::Regular)
        fail(Errc::RegimeMismatch, "pathwise machinery assumes a regular boundary");
    if (mc.target_levels.size() > 32) fail(Errc::DimensionMismatch, "at most 32 target levels");

    const BandTable table =
        build_band_table(ss, emb, mc.level_cap, mc.target_levels, mc.sim.bandwidth());
    const std::size_t ni = mc.start_levels.size();
    const std::size_t nj = mc.target_levels.size();
    const std::size_t na = mc.alphas.size();
    std::vector<double> per_path(ni * mc.n_paths * nj * na, 0.0);

    const int n_threads = resolve_thread_count(mc.threads);
    for (std::size_t i = 0; i < ni; ++i) {
        if (n_threads <= 1 || mc.n_paths < 64) {
            run_paths(fp, ss, emb, mc, table, regime, i, 0, mc.n_paths, per_path);
        } else {
            std::vector<std::thread> pool;
            const std::size_t chunk = (mc.n_paths + n_threads - 1) / n_threads;
            for (int t = 0; t < n_threads; ++t) {
                const std::size_t lo = std::min<std::size_t>(t * chunk, mc.n_paths);
                const std::size_t hi = std::min(lo + chunk, mc.n_paths);
                if (lo >= hi) break;
                pool.emplace_back([&, i, lo, hi] {
                    run_paths(fp, ss, emb, mc, table, regime, i, lo, hi, per_path);
                });
            }
            for (auto& th : pool) th.join();
        }
    }
    return reduce_estimates(mc, per_path, fp);
}

ResolventEstimate trace_resolvent_via_paths(const FellerParams& fp, const ScaleSpeed& ss,
                                            const StateEmbedding& emb, const TraceMcConfig& mc) {
    mc.sim.validate();
    const std::size_t ni = mc.start_levels.size();
    const std::size_t nj = mc.target_levels.size();
    const std::size_t na = mc.alphas.size();
    std::vector<double> per_path(ni * mc.n_paths * nj * na, 0.0);
    std::vector<double> levels(emb.c_hat.begin(),
                               emb.c_hat.begin() + std::min(mc.level_cap, emb.levels()));
    for (std::size_t i = 0; i < ni; ++i) {
        for (std::size_t p = 0; p < mc.n_paths; ++p) {
            const std::uint64_t stream = i * mc.n_paths + p;
            PathBundle bundle = simulate_feller_bm(fp, mc.sim, emb[mc.start_levels[i]], stream);
            LocalTimeLedger ledger = build_ledger(bundle.path, levels, mc.sim);
            ClockPath clock = accumulate_pcaf(ledger, ss, mc.level_cap, mc.sim.dt);
            TraceChainPath trace = trace_path(bundle.path, clock, emb, mc.sim.snap_tol());
            double* cells = per_path.data() + (p + i * mc.n_paths) * nj * na;
            for (std::size_t j = 0; j < nj; ++j)
                for (std::size_t ai = 0; ai < na; ++ai)
                    cells[j * na + ai] =
                        trace.resolvent_integral(mc.alphas[ai], mc.target_levels[j]);
        }
    }
    return reduce_estimates(mc, per_path, fp);
}

}  // namespace bdbm
