#include "bdbm/chain_resolvent.hpp"

#include <algorithm>
#include <cmath>

#include "bdbm/errors.hpp"

namespace bdbm {

double ChainResolvent::row_sum(std::size_t i) const {
    double s = 0.0, comp = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double y = psi[i * n + j] - comp;
        const double t = s + y;
        comp = (t - s) - y;
        s = t;
    }
    return s;
}

ChainResolvent psi_chain(const MinimalResolvent& mr, const ScaleSpeed& ss, const ChainParams& cp) {
    if (cp.minimal) fail(Errc::InvalidChainParams, "the minimal process has no correction term");
    const std::size_t n = mr.n;
    const double alpha = mr.alpha;
    for (std::size_t lvl : cp.nu.levels)
        if (lvl >= n) fail(Errc::DimensionMismatch, "nu charges a level beyond the truncation");

    double denom = cp.gamma;
    for (std::size_t i = 0; i < cp.nu.levels.size(); ++i)
        denom += cp.nu.weights[i] * (1.0 - mr.u[cp.nu.levels[i]]);
    double mu_u = 0.0;
    for (std::size_t k = 0; k < n; ++k) mu_u += ss.mu[k] * mr.u[k];
    denom += cp.beta * alpha * mu_u;
    if (!(denom > 0.0))
        fail(Errc::ZeroDenominator, "gamma, beta and nu all vanish");

    ChainResolvent out;
    out.alpha = alpha;
    out.n = n;
    out.psi.assign(n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double num_j = cp.beta * ss.mu[j] * mr.u[j];
        for (std::size_t i = 0; i < cp.nu.levels.size(); ++i)
            num_j += cp.nu.weights[i] * mr(cp.nu.levels[i], j);
        const double corr = num_j / denom;
        for (std::size_t i = 0; i < n; ++i) out.psi[i * n + j] = mr(i, j) + mr.u[i] * corr;
    }
    // A dropped nu-tail perturbs both the numerator and the denominator; the
    // first-order effect on any entry is bounded by tail / denom.
    out.nu_tail_error = cp.nu.truncated_infinite ? cp.nu.tail_bound / denom : 0.0;
    return out;
}

namespace {

// Polynomial extrapolation to x = 0 (Neville) over nodes (xs, ys).
double neville_at_zero(const std::vector<double>& xs, std::vector<double> ys) {
    const std::size_t n = xs.size();
    for (std::size_t m = 1; m < n; ++m)
        for (std::size_t i = 0; i + m < n; ++i)
            ys[i] = (xs[i + m] * ys[i] - xs[i] * ys[i + m]) / (xs[i + m] - xs[i]);
    return ys[0];
}

constexpr std::size_t kTailWindow = 8;

TailLimit extrapolate_window(const std::vector<double>& f, const StateEmbedding& emb,
                             std::size_t end) {
    // window [end-kTailWindow, end)
    std::vector<double> xs, ys;
    for (std::size_t k = end - kTailWindow; k < end; ++k) {
        xs.push_back(emb[k]);
        ys.push_back(f[k]);
    }
    TailLimit out;
    out.window_end = end;
    out.value = neville_at_zero(xs, ys);
    // drop the farthest node to estimate the extrapolation uncertainty
    const double alt = neville_at_zero(std::vector<double>(xs.begin() + 1, xs.end()),
                                       std::vector<double>(ys.begin() + 1, ys.end()));
    out.uncertainty = std::abs(out.value - alt);
    return out;
}

}  // namespace

TailLimit extrapolate_tail(const std::vector<double>& f, const StateEmbedding& emb) {
    const std::size_t n = std::min(f.size(), emb.levels());
    if (n < kTailWindow + 2) fail(Errc::TailNotConverged, "too few levels for tail extrapolation");
    double scale = 0.0;
    for (std::size_t k = 0; k < n; ++k) scale = std::max(scale, std::abs(f[k]));
    if (scale == 0.0) return TailLimit{0.0, 0.0, n};
    // Deep-level differences sink below rounding long before the cap; back off
    // to the last window whose increments still carry signal.
    std::size_t end = n;
    while (end > kTailWindow + 1 && std::abs(f[end - 1] - f[end - 2]) < 1e-9 * scale) --end;
    if (end <= kTailWindow) fail(Errc::TailNotConverged, "no reliable tail window");
    return extrapolate_window(f, emb, end);
}

namespace {

ChainBcResidual chain_bc_impl(const std::vector<double>& fvec, const ScaleSpeed& ss,
                              const StateEmbedding& emb, double gamma, double beta,
                              const LevelMeasure& nu) {
    const std::size_t n = fvec.size();
    const TailLimit f_inf = extrapolate_tail(fvec, emb);
    std::vector<double> fplus(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k)
        fplus[k] = (fvec[k + 1] - fvec[k]) / (ss.c[k + 1] - ss.c[k]);
    const TailLimit fp_inf = extrapolate_tail(fplus, emb);

    double resid = beta / 2.0 * fp_inf.value + gamma * f_inf.value;
    for (std::size_t i = 0; i < nu.levels.size(); ++i)
        resid += (f_inf.value - fvec[nu.levels[i]]) * nu.weights[i];

    ChainBcResidual out;
    out.residual = std::abs(resid);
    out.uncertainty = beta / 2.0 * fp_inf.uncertainty +
                      (gamma + nu.total()) * f_inf.uncertainty;
    out.f_inf = f_inf.value;
    out.fplus_inf = fp_inf.value;
    return out;
}

template <typename Res>
std::vector<double> apply_to(const Res& r, const std::vector<double>& h) {
    if (h.size() != r.n) fail(Errc::DimensionMismatch, "level function size mismatch");
    std::vector<double> f(r.n, 0.0);
    for (std::size_t i = 0; i < r.n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < r.n; ++j) s += r(i, j) * h[j];
        f[i] = s;
    }
    return f;
}

}  // namespace

ChainBcResidual residual_chain_bc(const ChainResolvent& psi, const ScaleSpeed& ss,
                                  const StateEmbedding& emb, const ChainParams& cp,
                                  const std::vector<double>& h) {
    return chain_bc_impl(apply_to(psi, h), ss, emb, cp.gamma, cp.beta, cp.nu);
}

ChainBcResidual residual_chain_bc_minimal(const MinimalResolvent& phi, const ScaleSpeed& ss,
                                          const StateEmbedding& emb,
                                          const std::vector<double>& h) {
    return chain_bc_impl(apply_to(phi, h), ss, emb, 1.0, 0.0, LevelMeasure{});
}

namespace {

template <typename A, typename B>
double identity_residual(const A& pa, const B& pb, double alpha, double beta,
                         const double* ma, const double* mb, std::size_t n) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double prod = 0.0;
            for (std::size_t k = 0; k < n; ++k) prod += ma[i * n + k] * mb[k * n + j];
            const double r = ma[i * n + j] - mb[i * n + j] + (alpha - beta) * prod;
            worst = std::max(worst, std::abs(r));
        }
    return worst;
}

}  // namespace

double resolvent_identity_residual(const ChainResolvent& pa, const ChainResolvent& pb) {
    if (pa.n != pb.n) fail(Errc::DimensionMismatch, "truncations differ");
    return identity_residual(pa, pb, pa.alpha, pb.alpha, pa.psi.data(), pb.psi.data(), pa.n);
}

double resolvent_identity_residual(const MinimalResolvent& pa, const MinimalResolvent& pb) {
    if (pa.n != pb.n) fail(Errc::DimensionMismatch, "truncations differ");
    return identity_residual(pa, pb, pa.alpha, pb.alpha, pa.phi.data(), pb.phi.data(), pa.n);
}

}  // namespace bdbm
