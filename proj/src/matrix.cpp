#include "bdbm/matrix.hpp"

#include <cmath>
#include <string>

#include "bdbm/errors.hpp"

namespace bdbm {

BirthDeathMatrix build_matrix(std::vector<double> a, std::vector<double> b, std::size_t cap) {
    if (cap < 3) fail(Errc::CapTooSmall, "cap must be at least 3, got " + std::to_string(cap));
    if (a.size() < cap || b.size() < cap)
        fail(Errc::CapTooSmall, "rate sequences shorter than cap");
    a.resize(cap);
    b.resize(cap);
    if (a[0] != 0.0) fail(Errc::NonPositiveRate, "a[0] must be 0");
    for (std::size_t k = 1; k < cap; ++k) {
        if (!(a[k] > 0.0) || !std::isfinite(a[k]))
            fail(Errc::NonPositiveRate, "a[" + std::to_string(k) + "] must be positive");
    }
    for (std::size_t k = 0; k < cap; ++k) {
        if (!(b[k] > 0.0) || !std::isfinite(b[k]))
            fail(Errc::NonPositiveRate, "b[" + std::to_string(k) + "] must be positive");
        if (!std::isfinite(a[k] + b[k]))
            fail(Errc::NonPositiveRate, "q[" + std::to_string(k) + "] overflows");
    }
    return BirthDeathMatrix{std::move(a), std::move(b), cap};
}

BirthDeathMatrix geometric_matrix(double ratio, std::size_t cap) {
    std::vector<double> a(cap), b(cap);
    a[0] = 0.0;
    b[0] = 1.0;
    // Log-space so large ratios stay finite out to deep caps.
    for (std::size_t k = 1; k < cap; ++k) {
        const double lk = static_cast<double>(k) * std::log(ratio);
        a[k] = std::exp(std::log(ratio / 2.0) + (static_cast<double>(k) - 1.0) * std::log(ratio));
        b[k] = std::exp(lk);
    }
    return build_matrix(std::move(a), std::move(b), cap);
}

BirthDeathMatrix random_walk_matrix(double rate, std::size_t cap) {
    std::vector<double> a(cap, rate), b(cap, rate);
    a[0] = 0.0;
    return build_matrix(std::move(a), std::move(b), cap);
}

}  // namespace bdbm
