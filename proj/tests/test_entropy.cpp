#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "asmlab/entropy.hpp"
#include "asmlab/rng.hpp"

using namespace asmlab;

namespace {
constexpr std::array<double, 4> kUniform{0.25, 0.25, 0.25, 0.25};
constexpr double kLn2 = 0.6931471805599453;
} // namespace

TEST_CASE("renyi2 closed forms") {
    CHECK(renyi2(kUniform) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(renyi2({1, 0, 0, 0}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(renyi2({0.5, 0.5, 0, 0}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(renyi2({0.7, 0.1, 0.1, 0.1}) == doctest::Approx(-std::log2(0.52)).epsilon(1e-12));
    CHECK(renyi2_nats(kUniform) == doctest::Approx(2 * kLn2).epsilon(1e-12));
}

TEST_CASE("markov rate reduces to renyi2 for identical columns") {
    MarkovModel m{};
    const std::array<double, 4> col{0.4, 0.3, 0.2, 0.1};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.q[i][j] = col[i];
    CHECK(renyi2_rate_markov(m) == doctest::Approx(renyi2(col)).epsilon(1e-9));
    MarkovModel u{};
    for (auto& row : u.q) row = {0.25, 0.25, 0.25, 0.25};
    CHECK(renyi2_rate_markov(u) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("divergences") {
    Distribution p{{0.5, 0.5}}, q{{0.25, 0.75}};
    CHECK(kl_divergence(p, p) == doctest::Approx(0.0));
    CHECK(kl_divergence(p, q) ==
          doctest::Approx(0.5 * std::log2(2.0) + 0.5 * std::log2(2.0 / 3.0)).epsilon(1e-12));
    CHECK(bernoulli_divergence(0.5, 0.5) == doctest::Approx(0.0));
    CHECK(bernoulli_divergence(1.0, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(kl_divergence(Distribution{{1, 0}}, Distribution{{0, 1}}),
                    std::invalid_argument);
}

TEST_CASE("eta") {
    CHECK(eta(0) == doctest::Approx(0.0));
    CHECK(eta(0.1) == doctest::Approx(0.18666666666667).epsilon(1e-10));
    // matches the direct two-observation disagreement probability
    const double eps = 0.07;
    const double agree = (1 - eps) * (1 - eps) + 3 * (eps / 3) * (eps / 3);
    CHECK(eta(eps) == doctest::Approx(1 - agree).epsilon(1e-12));
}

TEST_CASE("tilted distribution normalizes and interpolates") {
    std::array<std::array<double, 4>, 4> ch{};
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) ch[r][s] = (r == s) ? 0.9 : 0.1 / 3;
    const JointLaw law = channel_joint(kUniform, ch);
    double mass = 0;
    for (double v : law.pxy) mass += v;
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
    for (double mu : {0.0, 0.1, 0.37, 0.5, 0.9, 1.0}) {
        const auto t = tilted_distribution(law, mu);
        double z = 0;
        for (double v : t) z += v;
        CHECK(z == doctest::Approx(1.0).epsilon(1e-12));
    }
    // mu = 1 recovers the joint, mu = 0 the product law
    const auto t1 = tilted_distribution(law, 1.0);
    for (int i = 0; i < 16; ++i) CHECK(t1[i] == doctest::Approx(law.pxy[i]).epsilon(1e-10));
    const auto t0 = tilted_distribution(law, 0.0);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            CHECK(t0[x * 4 + y] == doctest::Approx(law.px[x] * law.py[y]).epsilon(1e-10));
}

TEST_CASE("theta(mu) is increasing and solve_mu inverts it") {
    std::array<std::array<double, 4>, 4> ch{};
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) ch[r][s] = (r == s) ? 0.95 : 0.05 / 3;
    const JointLaw law = channel_joint(kUniform, ch);
    double prev = -1e9;
    for (double mu : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const auto d = tilt_divergences(law, mu);
        const double theta = d.d_independent - d.d_joint;
        CHECK(theta > prev);
        prev = theta;
    }
    const auto dmid = tilt_divergences(law, 0.4);
    const double theta_mid = dmid.d_independent - dmid.d_joint;
    CHECK(solve_mu(law, theta_mid) == doctest::Approx(0.4).epsilon(1e-8));
}

TEST_CASE("istar pins from the noisy threshold curve") {
    CHECK(istar_symmetric(0.0) == doctest::Approx(2.0));
    CHECK(2.0 / istar_symmetric(0.1) == doctest::Approx(5.29).epsilon(0.01));   // +-0.05 band
    CHECK(2.0 / istar_symmetric(0.01) == doctest::Approx(2.16).epsilon(0.02));  // +-0.05 band
    // frozen independent evaluations
    CHECK(2.0 / istar_symmetric(0.1) == doctest::Approx(5.2921).epsilon(1e-3));
    CHECK(2.0 / istar_symmetric(0.01) == doctest::Approx(2.15196).epsilon(1e-3));
}

TEST_CASE("istar_general agrees with the symmetric specialization") {
    for (double eps : {0.01, 0.05, 0.1}) {
        std::array<std::array<double, 4>, 4> ch{};
        for (int r = 0; r < 4; ++r)
            for (int s = 0; s < 4; ++s) ch[r][s] = (r == s) ? 1 - eps : eps / 3;
        const IstarResult res = istar_general(kUniform, ch);
        CHECK(res.istar_bits == doctest::Approx(istar_symmetric(eps)).epsilon(1e-6));
        CHECK(res.theta_star > 0);
        CHECK(res.mu_star > 0);
        CHECK(res.mu_star < 1);
    }
    // useless channel: uniform output regardless of input
    std::array<std::array<double, 4>, 4> junk{};
    for (auto& row : junk) row = {0.25, 0.25, 0.25, 0.25};
    CHECK(istar_general(kUniform, junk).istar_bits == doctest::Approx(0.0));
}

TEST_CASE("ncov estimate") {
    CHECK(ncov_estimate(0.1, 1e4, 27) == 3044); // ceil(370.37 * ln 3703.7)
    CHECK(ncov_estimate(0.5, 1e4, 27) < ncov_estimate(0.1, 1e4, 27)); // monotone in eps
    CHECK(ncov_estimate(0.9, 1e4, 27) < ncov_estimate(0.5, 1e4, 27));
    CHECK_THROWS_AS(ncov_estimate(0.1, 100, 100), std::invalid_argument);
}

TEST_CASE("expected repeats and stage expectation") {
    CHECK(expected_repeats(1e4, 11, kUniform) == doctest::Approx(11.920928955).epsilon(1e-9));
    // ell = L: exponent of the coverage factor vanishes
    CHECK(greedy_stage_expectation(500, 1e4, 20, 20, kUniform) ==
          doctest::Approx(500.0 * 500.0 * std::exp2(-40)).epsilon(1e-12));
    // endpoint property: max over ell sits at ell = 0 or ell = L
    Rng rng(12345);
    for (int rep = 0; rep < 100; ++rep) {
        const double G = 1000 + rng.unit() * 99000;
        const double L = 10 + rng.unit() * 40;
        const double N = 50 + rng.unit() * 5000;
        double best = -1, at = -1;
        for (int ell = 0; ell <= static_cast<int>(L); ++ell) {
            const double v = greedy_stage_expectation(N, G, L, ell, kUniform);
            if (v > best) {
                best = v;
                at = ell;
            }
        }
        CHECK((at == 0 || at == static_cast<int>(L)));
    }
}

TEST_CASE("printed rate formulas") {
    CHECK(seq_rate(2.0, kUniform) == doctest::Approx(4 * kLn2 / 3).epsilon(1e-12));
    CHECK(std::isinf(seq_rate(0.9, kUniform)));
    CHECK(kmer_rate(3.0, kUniform) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(std::isinf(kmer_rate(1.0, kUniform)));
}

TEST_CASE("repeats and bridging bounds") {
    // uniform: H2_nats = 2 ln 2; alpha=0.2, Lbar=2.6, Kbar=5.2, Jbar=8.7
    const double h2n = 2 * kLn2;
    const double expect = 2.6 / 0.2 + 0.5 * (8.7 - 4 * 0.2 / h2n - 5.2) / 0.2;
    CHECK(repeats_rate_bound(2.6, 8.7, 5.2, 0.2, kUniform) == doctest::Approx(expect).epsilon(1e-12));
    // capacity-recovery boundary: Jbar = Kbar + 4 alpha / H2
    const double jb = 5.2 + 4 * 0.2 / h2n;
    CHECK(repeats_rate_bound(2.6, jb, 5.2, 0.2, kUniform) == doctest::Approx(13.0).epsilon(1e-12));
    // bound grows without limit as alpha -> 0
    CHECK(repeats_rate_bound(2.6, 8.7, 5.2, 0.01, kUniform) >
          repeats_rate_bound(2.6, 8.7, 5.2, 0.2, kUniform));

    CHECK(bridging_rate_bound(100, 30, 4, 60, 10) ==
          doctest::Approx(92.0 / (2 * std::log(10.0))).epsilon(1e-12));
    CHECK_THROWS(bridging_rate_bound(0, 30, 15, 60, 10)); // J+2L = 2d+K
    // doubling M scales the bound by ln M / ln 2M
    const double b1 = bridging_rate_bound(100, 30, 4, 60, 5);
    const double b2 = bridging_rate_bound(100, 30, 4, 60, 10);
    CHECK(b2 / b1 == doctest::Approx(std::log(5.0) / std::log(10.0)).epsilon(1e-12));
}

TEST_CASE("d parameter") {
    CHECK(d_parameter(10, 0.05, kUniform) == 4);
    CHECK(d_parameter(2, 0.0, kUniform) == 1);
    CHECK_THROWS_AS(d_parameter(1, 0.0, kUniform), std::invalid_argument);
}

TEST_CASE("threshold report and the unit bridge") {
    const ThresholdReport rep = threshold_report(kUniform, std::nullopt);
    CHECK(rep.h2_bits == doctest::Approx(2.0));
    CHECK(rep.lbar_threshold_log2 == doctest::Approx(1.0));
    CHECK(rep.lbar_threshold_ln == doctest::Approx(1.0 / kLn2).epsilon(1e-12));
    CHECK_FALSE(rep.istar_bits.has_value());

    for (auto p : {kUniform, std::array<double, 4>{0.4, 0.3, 0.2, 0.1},
                   std::array<double, 4>{0.7, 0.1, 0.1, 0.1}}) {
        const ThresholdReport r = threshold_report(p, std::nullopt);
        CHECK(r.lbar_threshold_ln == doctest::Approx(r.lbar_threshold_log2 / kLn2).epsilon(1e-12));
    }

    const ThresholdReport noisy = threshold_report(kUniform, 0.01);
    REQUIRE(noisy.two_over_istar.has_value());
    CHECK(*noisy.two_over_istar == doctest::Approx(2.16).epsilon(0.02));
    const ThresholdReport zero = threshold_report(kUniform, 0.0);
    CHECK(*zero.two_over_istar == doctest::Approx(1.0).epsilon(1e-12));

    MarkovModel m{};
    const std::array<double, 4> col{0.4, 0.3, 0.2, 0.1};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.q[i][j] = col[i];
    const ThresholdReport mk = threshold_report_markov(m, std::nullopt);
    REQUIRE(mk.markov_rate_bits.has_value());
    CHECK(*mk.markov_rate_bits == doctest::Approx(renyi2(col)).epsilon(1e-9));
    CHECK(mk.h2_bits == doctest::Approx(renyi2(col)).epsilon(1e-9)); // stationary = col here
}

TEST_CASE("rate bounds struct") {
    const RateBounds rb = rate_bounds(2.0, kUniform);
    REQUIRE(rb.greedy_rate.has_value());
    CHECK(*rb.greedy_rate == doctest::Approx(1.0));
    REQUIRE(rb.seq_rate.has_value());
    CHECK(*rb.seq_rate == doctest::Approx(4 * kLn2 / 3).epsilon(1e-12));
    REQUIRE(rb.kmer_rate.has_value());
    CHECK(*rb.kmer_rate == doctest::Approx(2.0).epsilon(1e-12));
    const RateBounds low = rate_bounds(0.8, kUniform);
    CHECK_FALSE(low.greedy_rate.has_value());
    CHECK_FALSE(low.seq_rate.has_value());
    CHECK_FALSE(low.kmer_rate.has_value());
}
