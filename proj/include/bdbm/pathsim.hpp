#pragma once

#include <cstdint>
#include <vector>

#include "bdbm/params.hpp"
#include "bdbm/rng.hpp"
#include "bdbm/sample_path.hpp"
#include "bdbm/subordinator.hpp"

namespace bdbm {

// Boundary-behavior regimes at 0, keyed off (p1,p2,p3,p4).
enum class PathRegime {
    KilledBm,      // p2 = p3 = 0, |p4| = 0, p1 > 0: dies at the first zero hit
    HoldAndJump,   // p2 = 0, p3 > 0, |p4| finite: exponential holding, then jump
    Composition,   // subordinator composition, then sojourn, then killing
    Unsupported,   // p2 = p3 = 0 with finite nonzero p4 (analytic route only)
};

PathRegime classify_regime(const FellerParams& fp);

SamplePath simulate_reflecting_bm(const SimConfig& cfg, double x0, std::uint64_t stream = 0);

// Y1_t = Z(Z^{-1}(ell_t)) - ell_t + W+_t, with jump marks where Z(Z^{-1})
// steps. Also returns ell (input alias) and ell_y1 = Z^{-1}(ell).
struct ComposeResult {
    SamplePath y1;
    std::vector<double> ell;     // boundary local time of the reflected path
    std::vector<double> ell_y1;  // boundary local time of the composed path
};

ComposeResult ito_mckean_compose(const SamplePath& wplus, const std::vector<double>& ell,
                                 SubordinatorPath& z, double jump_threshold);

// Time change by f(t) = t + p3 * ell_y1(t): inserts holding at the boundary.
// Held samples are emitted as exact 0.0. ell_out[k] = ell_y1(f^{-1}(k dt)).
struct SojournResult {
    SamplePath y2;
    std::vector<double> ell_y1_composed;
    double inserted_total = 0.0;
};

SojournResult apply_sojourn(const SamplePath& y1, const std::vector<double>& ell_y1, double p3);

// Exponential-threshold killing: E ~ Exp(1), die at the first grid time with
// p1 * ell(t) > E.
SamplePath kill_by_local_time(const SamplePath& y2, const std::vector<double>& ell, double p1,
                              PathRng& rng);

SamplePath simulate_doob_bm(const FellerParams& fp, const SimConfig& cfg, double x0,
                            std::uint64_t stream = 0);

// Full regime dispatch. The bundle carries the boundary local time needed by
// the time-change machinery (for the composition it is ell_y1 on the final grid).
struct PathBundle {
    SamplePath path;
    std::vector<double> ell_y1;
    double subordinator_bias = 0.0;
};

PathBundle simulate_feller_bm(const FellerParams& fp, const SimConfig& cfg, double x0,
                              std::uint64_t stream = 0);

}  // namespace bdbm
