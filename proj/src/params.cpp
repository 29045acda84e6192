#include "bdbm/params.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "bdbm/errors.hpp"

namespace bdbm {

double FellerParams::norm_total() const { return p1 + p2 + p3 + p4.integral_min1(); }

FellerParams FellerParams::normalized() const {
    const double total = norm_total();
    if (!(total > 0.0)) fail(Errc::InvalidFellerParams, "all parameters vanish");
    FellerParams out;
    out.p1 = p1 / total;
    out.p2 = p2 / total;
    out.p3 = p3 / total;
    out.p4 = p4.scaled(1.0 / total);
    return out;
}

void FellerParams::validate() const {
    if (p1 < 0 || p2 < 0 || p3 < 0 || !std::isfinite(p1 + p2 + p3))
        fail(Errc::InvalidFellerParams, "negative or non-finite parameter");
    if (!(norm_total() > 0.0)) fail(Errc::InvalidFellerParams, "all parameters vanish");
    if (p2 == 0.0 && p3 == 0.0 && !p4.empty() && !p4.truncated_infinite())
        fail(Errc::InvalidFellerParams,
             "p2 == p3 == 0 requires an infinite (truncated) jump measure");
}

double LevelMeasure::total() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
}

double LevelMeasure::weight_at(std::size_t level) const {
    for (std::size_t i = 0; i < levels.size(); ++i)
        if (levels[i] == level) return weights[i];
    return 0.0;
}

AtomicMeasure LevelMeasure::as_atoms(const StateEmbedding& emb) const {
    std::vector<Atom> atoms;
    atoms.reserve(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i)
        atoms.push_back({emb[levels[i]], weights[i]});
    if (truncated_infinite) return AtomicMeasure::truncated_infinite(std::move(atoms),
                                                                    levels.empty() ? 0 : levels.back(),
                                                                    tail_bound);
    return AtomicMeasure(std::move(atoms));
}

void ChainParams::validate(const ScaleSpeed& ss) const {
    if (minimal) return;
    if (gamma < 0 || beta < 0) fail(Errc::InvalidChainParams, "negative parameter");
    for (double w : nu.weights)
        if (!(w > 0.0)) fail(Errc::InvalidChainParams, "nu weights must be positive");
    if (nu.total() + beta == 0.0)
        fail(Errc::InvalidChainParams, "|nu| + beta == 0 only holds for the minimal process");
    // Series condition: sum_k nu_k * (sum_{j>=k} (c_{j+1}-c_j) sum_{i<=j} mu_i).
    // The inner series is the R-tail, so the declared test is convergence of R
    // plus finiteness of the truncated nu sums.
    if (!ss.r_converged)
        fail(Errc::InvalidChainParams, "series condition fails: R diverges");
    const double r_total = ss.r_partial.back();
    double series = 0.0;
    for (std::size_t i = 0; i < nu.levels.size(); ++i) {
        const std::size_t k = nu.levels[i];
        if (k >= ss.cap()) fail(Errc::InvalidChainParams, "nu charges a level beyond the cap");
        const double r_head = (k == 0) ? 0.0 : ss.r_partial[k - 1];
        series += nu.weights[i] * (r_total - r_head);
    }
    if (!std::isfinite(series)) fail(Errc::InvalidChainParams, "series condition fails");
    if (ss.boundary_class == BoundaryClass::Exit && beta != 0.0)
        fail(Errc::InvalidChainParams, "beta must vanish at an exit boundary");
}

ChainParams ChainParams::normalized(const StateEmbedding& emb) const {
    if (minimal) return *this;
    double total = gamma + beta;
    for (std::size_t i = 0; i < nu.levels.size(); ++i)
        total += std::min(emb[nu.levels[i]], 1.0) * nu.weights[i];
    if (!(total > 0.0)) fail(Errc::InvalidChainParams, "all parameters vanish");
    ChainParams out = *this;
    out.gamma /= total;
    out.beta /= total;
    for (double& w : out.nu.weights) w /= total;
    out.nu.tail_bound /= total;
    return out;
}

LevelMeasure allocate_jump_measure(const AtomicMeasure& p4, const StateEmbedding& emb) {
    const std::size_t n_levels = emb.levels();
    const double floor_level = emb[n_levels - 1];
    std::map<std::size_t, double> acc;
    for (const Atom& at : p4.atoms()) {
        if (at.x < floor_level)
            fail(Errc::AtomBelowTruncation,
                 "atom at " + std::to_string(at.x) + " lies below c_hat[cap-1]");
        if (at.x > emb[0]) {
            acc[0] += at.w;
            continue;
        }
        // locate n with c_hat[n+1] < x <= c_hat[n]; c_hat is strictly decreasing
        const auto it = std::lower_bound(emb.c_hat.begin(), emb.c_hat.end(), at.x,
                                         std::greater<double>());
        std::size_t n = static_cast<std::size_t>(it - emb.c_hat.begin());
        if (n < n_levels && emb[n] == at.x) {
            acc[n] += at.w;  // interpolation weight is exactly 1 at a stored level
            continue;
        }
        // now emb[n] < x < emb[n-1]
        const double hi = emb[n - 1], lo = emb[n];
        const double up = (at.x - lo) / (hi - lo);
        acc[n - 1] += at.w * up;
        acc[n] += at.w * (1.0 - up);
    }
    LevelMeasure out;
    for (const auto& [lvl, w] : acc) {
        if (w == 0.0) continue;
        out.levels.push_back(lvl);
        out.weights.push_back(w);
    }
    out.truncated_infinite = p4.truncated_infinite();
    out.tail_bound = p4.tail_bound();
    return out;
}

ChainParams chain_from_feller(const FellerParams& fp, const StateEmbedding& emb) {
    fp.validate();
    ChainParams cp;
    if (fp.p2 == 0.0 && fp.p4.empty()) {
        cp.minimal = true;  // killed or absorbed cases both trace to the minimal chain
        return cp;
    }
    cp.gamma = fp.p1;
    cp.beta = 2.0 * fp.p2;
    cp.nu = allocate_jump_measure(fp.p4, emb);
    return cp;
}

FellerParams feller_from_chain(const ChainParams& cp, const StateEmbedding& emb,
                               const ScaleSpeed& ss) {
    if (cp.minimal) {
        FellerParams fp;
        fp.p3 = 1.0;
        return fp;
    }
    cp.validate(ss);
    FellerParams fp;
    const bool doob = cp.beta == 0.0 && !cp.nu.empty() && !cp.nu.truncated_infinite;
    if (doob) {
        // beta == 0 with finite nu: the image holds at the boundary, so the
        // triple determines (p1, p4) only up to scale and leaves p3 free.
        double base = cp.gamma;
        for (std::size_t i = 0; i < cp.nu.levels.size(); ++i)
            base += cp.nu.weights[i] * std::min(emb[cp.nu.levels[i]], 1.0);
        const double s = 1.0 / (2.0 * base);
        fp.p1 = s * cp.gamma;
        fp.p2 = 0.0;
        fp.p3 = 0.5;
        fp.p4 = cp.nu.as_atoms(emb).scaled(s);
        return fp;
    }
    fp.p1 = cp.gamma;
    fp.p2 = cp.beta / 2.0;
    fp.p3 = 0.0;
    fp.p4 = cp.nu.as_atoms(emb);
    return fp.normalized();
}

}  // namespace bdbm
