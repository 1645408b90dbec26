#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace sphdyn {

// Deterministic random source. Distributions are implemented explicitly so
// that streams are identical across standard libraries and platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(mix(seed)) {}

    // Substream derived from (seed, index); used for per-path / per-start
    // generators that must be independent of scheduling order.
    Rng(std::uint64_t seed, std::uint64_t index)
        : eng_(mix(mix(seed) ^ (index + 0x9E3779B97F4A7C15ull))) {}

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n).
    int uniform_int(int n) {
        return static_cast<int>(eng_() % static_cast<std::uint64_t>(n));
    }

    // Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    // Complex standard normal (independent N(0,1) real and imaginary parts).
    std::complex<double> cgaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

private:
    static std::uint64_t mix(std::uint64_t x) {
        // splitmix64 finalizer
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace sphdyn
