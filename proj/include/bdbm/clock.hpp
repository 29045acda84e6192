#pragma once

#include <limits>
#include <vector>

#include "bdbm/sample_path.hpp"
#include "bdbm/scale_speed.hpp"

namespace bdbm {

// Additive-functional clock A_t = sum_n mu_n L^{c_hat_n}_t on the path grid.
struct ClockPath {
    double dt = 0.0;
    std::vector<double> a;  // A at grid knots, nondecreasing, a[0] == 0
    double tail_bound = 0.0;  // dropped mu-tail contribution bound

    double final() const { return a.empty() ? 0.0 : a.back(); }

    // right-continuous inverse: gamma_t = inf{s : A_s > t}, +inf at the end
    double inverse(double t) const;
    std::size_t inverse_index(double t) const;  // grid index of gamma_t (a.size() if past the end)
};

ClockPath accumulate_pcaf(const LocalTimeLedger& ledger, const ScaleSpeed& ss,
                          std::size_t level_cap, double dt);

}  // namespace bdbm
