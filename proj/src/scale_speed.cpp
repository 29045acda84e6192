#include "bdbm/scale_speed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bdbm/errors.hpp"

namespace bdbm {

namespace {

constexpr double kRatioCutoff = 0.999;  // geometric-tail test threshold
constexpr int kTailWindow = 5;

// Last-`kTailWindow` consecutive ratios of a positive sequence are all below
// the cutoff -> declared convergent, with the geometric tail of the sequence
// bounded by last_term * r_max / (1 - r_max).
struct TailTest {
    bool convergent = false;
    double r_last = 0.0;
    double r_max = 0.0;
};

TailTest tail_test(const std::vector<double>& terms) {
    TailTest t;
    if (terms.size() < static_cast<std::size_t>(kTailWindow) + 1) return t;
    t.convergent = true;
    t.r_max = 0.0;
    for (int j = 0; j < kTailWindow; ++j) {
        const std::size_t i = terms.size() - 1 - static_cast<std::size_t>(j);
        const double r = terms[i] / terms[i - 1];
        if (!(r < kRatioCutoff) || !std::isfinite(r)) t.convergent = false;
        t.r_max = std::max(t.r_max, r);
        if (j == 0) t.r_last = r;
    }
    return t;
}

}  // namespace

const char* boundary_class_name(BoundaryClass c) {
    switch (c) {
        case BoundaryClass::Regular: return "Regular";
        case BoundaryClass::Exit: return "Exit";
        case BoundaryClass::Other: return "Other";
    }
    return "?";
}

double ScaleSpeed::total_mu() const {
    double s = 0.0, comp = 0.0;
    for (double m : mu) {
        const double y = m - comp;
        const double t = s + y;
        comp = (t - s) - y;
        s = t;
    }
    return s;
}

double ScaleSpeed::mu_tail(std::size_t from) const {
    if (from >= mu.size()) {
        // extrapolate beyond storage from the last stored ratio
        const double r = mu.back() / mu[mu.size() - 2];
        if (!(r < kRatioCutoff)) return std::numeric_limits<double>::infinity();
        double head = mu.back() * std::pow(r, static_cast<double>(from - mu.size() + 1));
        return head / (1.0 - r);
    }
    double s = 0.0;
    for (std::size_t n = from; n < mu.size(); ++n) s += mu[n];
    const double r = mu.back() / mu[mu.size() - 2];
    if (r < kRatioCutoff) s += mu.back() * r / (1.0 - r);
    return s;
}

ScaleSpeed compute_scale_speed(const BirthDeathMatrix& q) {
    const std::size_t n = q.cap;
    ScaleSpeed ss;
    ss.c.resize(n);
    ss.mu.resize(n);

    // Increments d_k = c_k - c_{k-1} and masses mu_k via running ratio
    // products: each factor is a ratio of adjacent rates, so geometric rate
    // growth never overflows the way the raw products of Eq-style numerators
    // and denominators would.
    std::vector<double> d(n);  // d[k] = c_k - c_{k-1}, k >= 1 (d[0] unused)
    ss.c[0] = 0.0;
    ss.mu[0] = 1.0;
    d[0] = 0.0;
    double inc = 1.0 / (2.0 * q.b[0]);
    for (std::size_t k = 1; k < n; ++k) {
        d[k] = inc;
        ss.c[k] = ss.c[k - 1] + inc;
        ss.mu[k] = ss.mu[k - 1] * (q.b[k - 1] / q.a[k]);
        inc *= q.a[k] / q.b[k];
        if (!std::isfinite(ss.c[k]) || !std::isfinite(ss.mu[k]))
            fail(Errc::TailDivergent, "scale/speed product overflowed before cap");
    }
    const double d_next = inc;  // c_cap - c_{cap-1}, from the final ratio

    // c_inf: partial sum plus a geometric tail when the last increment ratios
    // sit uniformly below the cutoff.
    std::vector<double> d_terms(d.begin() + 1, d.end());
    d_terms.push_back(d_next);
    const TailTest ct = tail_test(d_terms);
    if (ct.convergent) {
        ss.c_converged = true;
        ss.c_inf = ss.c[n - 1] + d_next / (1.0 - ct.r_last);
        ss.c_inf_bound = d_next / (1.0 - ct.r_max);
    } else {
        ss.c_converged = false;
        ss.c_inf = std::numeric_limits<double>::infinity();
        ss.c_inf_bound = std::numeric_limits<double>::infinity();
    }

    // R and S partial sums with their own tail tests.
    std::vector<double> r_terms(n - 1), s_terms;
    ss.r_partial.resize(n - 1);
    double cum_mu = 0.0, rsum = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        cum_mu += ss.mu[k];
        r_terms[k] = d[k + 1] * cum_mu;
        rsum += r_terms[k];
        ss.r_partial[k] = rsum;
    }
    ss.s_partial.resize(n);
    double ssum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double term = ss.c[k] * ss.mu[k];
        ssum += term;
        ss.s_partial[k] = ssum;
        if (k >= 1) s_terms.push_back(term);
    }
    ss.r_converged = tail_test(r_terms).convergent;
    ss.s_converged = tail_test(s_terms).convergent;
    ss.boundary_class = classify_boundary(ss);
    return ss;
}

BoundaryClass classify_boundary(const ScaleSpeed& ss) {
    if (ss.r_converged && ss.s_converged) return BoundaryClass::Regular;
    if (ss.r_converged && !ss.s_converged) return BoundaryClass::Exit;
    return BoundaryClass::Other;
}

std::size_t StateEmbedding::level_of(double x, double tol) const {
    double dist = 0.0;
    const std::size_t n = nearest_level(x, &dist);
    if (dist > tol) fail(Errc::SnapFailure, "coordinate not on the embedded state set");
    return n;
}

std::size_t StateEmbedding::nearest_level(double x, double* dist) const {
    // c_hat is strictly decreasing; find the insertion point and compare both sides.
    const auto it = std::lower_bound(c_hat.begin(), c_hat.end(), x, std::greater<double>());
    std::size_t hi = static_cast<std::size_t>(it - c_hat.begin());
    std::size_t best = (hi == 0) ? 0 : hi - 1;
    if (hi < c_hat.size() &&
        std::abs(c_hat[hi] - x) < std::abs(c_hat[best] - x))
        best = hi;
    if (dist) *dist = std::abs(c_hat[best] - x);
    return best;
}

StateEmbedding state_embedding(const ScaleSpeed& ss) {
    if (!ss.c_converged || !std::isfinite(ss.c_inf))
        fail(Errc::InfiniteScale, "state embedding requires a finite scale limit");
    StateEmbedding emb;
    emb.c_hat.resize(ss.c.size());
    for (std::size_t k = 0; k < ss.c.size(); ++k) emb.c_hat[k] = ss.c_inf - ss.c[k];
    return emb;
}

}  // namespace bdbm
