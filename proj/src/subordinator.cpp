#include "bdbm/subordinator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bdbm/errors.hpp"

namespace bdbm {

SubordinatorPath::SubordinatorPath(double drift, const AtomicMeasure& jumps,
                                   std::uint64_t master_seed, std::uint64_t stream)
    : drift_(drift), rng_(master_seed ^ 0x5b07a9d5u, stream) {
    if (drift < 0.0) fail(Errc::ConfigError, "subordinator drift must be nonnegative");
    double cum = 0.0;
    for (const Atom& at : jumps.atoms()) {
        atom_size_.push_back(at.x);
        cum += at.w;
        atom_cum_rate_.push_back(cum);
    }
    total_rate_ = cum;
    dropped_bias_ = jumps.tail_bound();
}

void SubordinatorPath::append_jump() {
    const double gap = rng_.exponential() / total_rate_;
    const double t = (times_.empty() ? 0.0 : times_.back()) + gap;
    const double u = rng_.uniform() * total_rate_;
    const std::size_t idx = static_cast<std::size_t>(
        std::lower_bound(atom_cum_rate_.begin(), atom_cum_rate_.end(), u) -
        atom_cum_rate_.begin());
    const double size = atom_size_[std::min(idx, atom_size_.size() - 1)];
    const double jump_mass = times_.empty() ? 0.0 : post_value_.back() - drift_ * times_.back();
    const double pre = drift_ * t + jump_mass;
    times_.push_back(t);
    sizes_.push_back(size);
    pre_value_.push_back(pre);
    post_value_.push_back(pre + size);
    span_ = t;
}

void SubordinatorPath::extend_until_time(double t) {
    if (total_rate_ == 0.0) {
        span_ = std::max(span_, t);
        return;
    }
    while (times_.empty() || times_.back() <= t) append_jump();
}

void SubordinatorPath::extend_until_value(double s) {
    if (total_rate_ == 0.0) return;
    while (post_value_.empty() || post_value_.back() <= s) append_jump();
}

double SubordinatorPath::eval(double t) {
    extend_until_time(t);
    double jump_sum = 0.0;
    const auto it = std::upper_bound(times_.begin(), times_.end(), t);
    const std::size_t m = static_cast<std::size_t>(it - times_.begin());
    if (m > 0) jump_sum = post_value_[m - 1] - drift_ * times_[m - 1];
    return drift_ * t + jump_sum;
}

double SubordinatorPath::inv(double s) {
    if (degenerate()) return std::numeric_limits<double>::infinity();
    if (total_rate_ == 0.0) return s / drift_;
    extend_until_value(s);
    const auto it = std::upper_bound(post_value_.begin(), post_value_.end(), s);
    const std::size_t m = static_cast<std::size_t>(it - post_value_.begin());
    // first jump with post-value > s is jump m
    if (s < pre_value_[m]) {
        // crossed within the preceding drift segment
        const double base_t = (m == 0) ? 0.0 : times_[m - 1];
        const double base_v = (m == 0) ? 0.0 : post_value_[m - 1];
        return base_t + (s - base_v) / drift_;
    }
    return times_[m];
}

SubordinatorPath::Sample SubordinatorPath::at(double s, Cursor& cur) {
    Sample out;
    if (degenerate()) {
        out.h = 0.0;
        out.zinv = std::numeric_limits<double>::infinity();
        return out;
    }
    if (total_rate_ == 0.0) {
        out.h = 0.0;
        out.zinv = s / drift_;
        return out;
    }
    extend_until_value(s);
    const std::size_t before = cur.m;
    while (post_value_[cur.m] <= s) ++cur.m;
    const std::size_t m = cur.m;
    if (drift_ > 0.0 && s < pre_value_[m]) {
        const double base_t = (m == 0) ? 0.0 : times_[m - 1];
        const double base_v = (m == 0) ? 0.0 : post_value_[m - 1];
        out.h = 0.0;
        out.zinv = base_t + (s - base_v) / drift_;
    } else {
        out.h = post_value_[m] - s;
        out.zinv = times_[m];
        out.fresh_jump = (m != before) || (pre_value_[m] == s);
    }
    return out;
}

double SubordinatorPath::laplace_exponent(double x) const {
    double s = drift_ * x;
    double cum_prev = 0.0;
    for (std::size_t j = 0; j < atom_size_.size(); ++j) {
        const double w = atom_cum_rate_[j] - cum_prev;
        cum_prev = atom_cum_rate_[j];
        s += w * (1.0 - std::exp(-x * atom_size_[j]));
    }
    return s;
}

SubordinatorPath simulate_subordinator(double p2, const AtomicMeasure& p4, const SimConfig& cfg,
                                       std::uint64_t stream) {
    // drop atoms below the truncation cutoff index
    const auto& atoms = p4.atoms();
    std::vector<Atom> kept;
    double dropped = p4.tail_bound();
    for (std::size_t j = 0; j < atoms.size(); ++j) {
        if (j < cfg.subordinator_trunc)
            kept.push_back(atoms[j]);
        else
            dropped += atoms[j].x * atoms[j].w;  // expected drift of dropped jumps
    }
    AtomicMeasure trimmed = kept.empty() ? AtomicMeasure()
                                         : AtomicMeasure::truncated_infinite(
                                               std::move(kept), cfg.subordinator_trunc, dropped);
    SubordinatorPath z(p2, trimmed, cfg.seed, stream);
    return z;
}

}  // namespace bdbm
