#pragma once

#include <cmath>
#include <cstdint>

namespace bdbm {

// Counter-derived streams: every path owns an independent generator keyed by
// (master seed, stream index), so results do not depend on how paths are
// scheduled across workers. Implemented by hand (xoshiro256++ seeded through
// splitmix64) because the standard library distributions are not guaranteed
// to be bit-identical across platforms.

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Xoshiro256pp {
  public:
    Xoshiro256pp() : Xoshiro256pp(0x5eedULL) {}

    explicit Xoshiro256pp(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

// One stream per path. uniform() never returns 0, so log() is always safe.
class PathRng {
  public:
    PathRng(std::uint64_t master_seed, std::uint64_t stream) {
        std::uint64_t sm = master_seed;
        std::uint64_t a = splitmix64(sm);
        sm = a ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
        gen_ = Xoshiro256pp(splitmix64(sm));
        have_spare_ = false;
        spare_ = 0.0;
    }

    double uniform() {
        // 53-bit mantissa in (0,1]
        return (static_cast<double>(gen_.next() >> 11) + 1.0) * 0x1.0p-53;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // Marsaglia polar method; trig-free and portable.
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

    double exponential() { return -std::log(uniform()); }

  private:
    Xoshiro256pp gen_;
    double spare_;
    bool have_spare_;
};

}  // namespace bdbm
