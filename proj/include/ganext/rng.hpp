#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "ganext/common.hpp"

namespace ganext {

// xoshiro256++ with splitmix64 seeding. The standard <random> engines are
// portable but the distributions are not; every draw here is specified down
// to the bit so training runs replay identically across standard libraries.
class Rng {
public:
    Rng() : Rng(0) {}

    explicit Rng(std::uint64_t seed) { reseed(seed); }

    void reseed(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& s : state_) s = splitmix64(x);
        have_gauss_ = false;
        gauss_ = 0.0;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0,1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n), Lemire's method.
    std::uint64_t uniform_int(std::uint64_t n) {
        GANEXT_CHECK(n > 0, "uniform_int: empty range");
        __uint128_t m = static_cast<__uint128_t>(next_u64()) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t t = (0 - n) % n;
            while (lo < t) {
                m = static_cast<__uint128_t>(next_u64()) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi_inclusive) {
        return lo + static_cast<std::int64_t>(uniform_int(static_cast<std::uint64_t>(hi_inclusive - lo + 1)));
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Box-Muller, cached second draw.
    double normal() {
        if (have_gauss_) {
            have_gauss_ = false;
            return gauss_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        gauss_ = r * std::sin(a);
        have_gauss_ = true;
        return r * std::cos(a);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Derive an independent stream; used to key sampling by (seed, case, epoch)
    // so results do not depend on worker count or arrival order.
    static std::uint64_t derive(std::uint64_t seed, const std::string& tag, std::uint64_t index) {
        std::uint64_t h = fnv1a64(&seed, sizeof(seed));
        h = fnv1a64(tag, h);
        h = fnv1a64(&index, sizeof(index), h);
        return h;
    }

    std::array<std::uint64_t, 4> state() const { return state_; }
    void set_state(const std::array<std::uint64_t, 4>& s) {
        state_ = s;
        have_gauss_ = false;
    }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    std::array<std::uint64_t, 4> state_{};
    bool have_gauss_ = false;
    double gauss_ = 0.0;
};

}  // namespace ganext
