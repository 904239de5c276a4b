#pragma once
// Seedable, cross-platform randomness.
//
// All stochastic code in the library draws from Rng, a thin wrapper around
// std::mt19937_64 (a fully specified algorithm, so streams are identical on
// every platform). Anything whose distribution the standard leaves
// implementation-defined (uniform doubles, bounded integers, discrete
// sampling) is done by hand here.
//
// Seed splitting: components and trials never share an engine. Child seeds
// are derived from a master seed plus a path of indices via splitmix64,
// so trial k of sweep point j is reproducible in isolation.

#include <array>
#include <cstdint>
#include <random>

namespace asmlab {

uint64_t splitmix64(uint64_t x);

// derive_seed(master, a, b, c): child seed for component/trial path (a,b,c).
uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b = 0, uint64_t c = 0);

class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // uniform in [0,1), 53-bit resolution
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // uniform integer in [0,n), rejection sampled (no modulo bias)
    uint64_t below(uint64_t n);

    // index into a 4-way distribution given its cumulative sums
    int sample_cdf4(const std::array<double, 4>& cdf);

private:
    std::mt19937_64 eng_;
};

// cumulative sums of a probability 4-vector; last entry forced to 1
std::array<double, 4> cdf4(const std::array<double, 4>& p);

} // namespace asmlab
