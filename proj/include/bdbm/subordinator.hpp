#pragma once

#include <cstdint>
#include <vector>

#include "bdbm/measure.hpp"
#include "bdbm/rng.hpp"
#include "bdbm/sim_config.hpp"

namespace bdbm {

// Drift-plus-compound-Poisson subordinator: drift p2, one Poisson jump stream
// per stored atom (size x_j at rate w_j). Atoms below the truncation cutoff
// are dropped and their expected drift contribution is reported as bias.
class SubordinatorPath {
  public:
    SubordinatorPath(double drift, const AtomicMeasure& jumps, std::uint64_t master_seed,
                     std::uint64_t stream);

    double drift() const { return drift_; }
    double dropped_drift_bias() const { return dropped_bias_; }
    double total_jump_rate() const { return total_rate_; }

    double eval(double t);        // Z(t)
    double inv(double s);         // Z^{-1}(s) = inf{t : Z(t) > s}

    // Monotone-query access: for nondecreasing s across calls,
    // h  = Z(Z^{-1}(s)) - s   (the overshoot placed on top of the reflected path)
    // zi = Z^{-1}(s)          (the boundary local time of the composed path)
    struct Cursor {
        std::size_t m = 0;
    };
    struct Sample {
        double h = 0.0;
        double zinv = 0.0;
        bool fresh_jump = false;  // s entered a new jump span on this call
    };
    Sample at(double s, Cursor& cur);

    // Laplace exponent p2 x + sum w_j (1 - exp(-x x_j)) over stored atoms.
    double laplace_exponent(double x) const;

    bool degenerate() const { return drift_ == 0.0 && sizes_.empty(); }

  private:
    void extend_until_time(double t);
    void extend_until_value(double s);
    void append_jump();

    double drift_ = 0.0;
    double dropped_bias_ = 0.0;
    double total_rate_ = 0.0;
    std::vector<double> atom_size_;
    std::vector<double> atom_cum_rate_;
    std::vector<double> times_;      // jump times, increasing
    std::vector<double> sizes_;      // jump sizes
    std::vector<double> pre_value_;  // Z(t_m -)
    std::vector<double> post_value_; // Z(t_m)
    double span_ = 0.0;              // jumps generated on [0, span_]
    PathRng rng_;
};

SubordinatorPath simulate_subordinator(double p2, const AtomicMeasure& p4, const SimConfig& cfg,
                                       std::uint64_t stream);

}  // namespace bdbm
