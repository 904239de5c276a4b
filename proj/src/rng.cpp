#include "asmlab/rng.hpp"

namespace asmlab {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b, uint64_t c) {
    uint64_t s = splitmix64(master ^ 0xa0761d6478bd642fULL);
    s = splitmix64(s ^ a);
    s = splitmix64(s ^ b);
    s = splitmix64(s ^ c);
    return s;
}

uint64_t Rng::below(uint64_t n) {
    if (n <= 1) return 0;
    const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n + 1) % n;
    uint64_t v;
    do {
        v = eng_();
    } while (v > limit);
    return v % n;
}

int Rng::sample_cdf4(const std::array<double, 4>& cdf) {
    const double u = unit();
    for (int i = 0; i < 3; ++i)
        if (u < cdf[i]) return i;
    return 3;
}

std::array<double, 4> cdf4(const std::array<double, 4>& p) {
    std::array<double, 4> c{};
    double acc = 0;
    for (int i = 0; i < 4; ++i) {
        acc += p[i];
        c[i] = acc;
    }
    c[3] = 1.0;
    return c;
}

} // namespace asmlab
