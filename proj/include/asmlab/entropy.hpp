#pragma once
// Closed-form theory: entropies, divergences, spectral radii, hypothesis-test
// exponents, and every threshold / rate bound used by the experiments.
//
// Log-base policy: everything is computed and stored in BITS unless a name
// says otherwise. The repeat/bridging formulas are written against the
// natural-log normalization (K / ln G etc.) and take H2 in nats; helpers
// below convert explicitly. Silent base mixing is the main numeric hazard
// in this domain, so each report labels both conventions.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "asmlab/sequence.hpp"

namespace asmlab {

// generic distribution (length 4 for sources, 16 for joint channel laws)
struct Distribution {
    std::vector<double> masses;
    void validate() const; // nonnegative, sums to 1 within 1e-12
};

double renyi2(const std::array<double, 4>& p); // -log2 sum p_i^2, bits
inline double renyi2_nats(const std::array<double, 4>& p) { return renyi2(p) * 0.6931471805599453; }

// Perron root of a strictly positive 4x4 matrix, power iteration,
// relative residual <= 1e-12, iteration cap 1e5.
double spectral_radius(const std::array<std::array<double, 4>, 4>& m);

// log2(1 / rho_max(Qbar)) with Qbar = [q_ij^2], bits per symbol
double renyi2_rate_markov(const MarkovModel& model);

// sum P log2(P/Q); requires support(P) subset support(Q)
double kl_divergence(const Distribution& p, const Distribution& q);

// divergence between Bernoulli(a) and Bernoulli(b), bits
double bernoulli_divergence(double a, double b);

// probability two independent noisy observations of one symbol disagree
double eta(double eps);

// ---- MAP error exponent machinery (noisy reads) ----

struct JointLaw {
    std::array<double, 16> pxy; // P(x,y), x-major
    std::array<double, 4> px, py;
};

// P_XY(x,y) = sum_s P_S(s) Q(x|s) Q(y|s) for channel T[r][s] = Q(r|s)
JointLaw channel_joint(const std::array<double, 4>& source,
                       const std::array<std::array<double, 4>, 4>& channel);

// P_mu(x,y) ~ P_XY^mu (P_X P_Y)^(1-mu), normalized
std::array<double, 16> tilted_distribution(const JointLaw& law, double mu);

// D(P_mu || P_X P_Y) and D(P_mu || P_XY) in bits
struct TiltDivergences {
    double d_independent; // D(P_mu || P_X * P_Y)
    double d_joint;       // D(P_mu || P_XY)
};
TiltDivergences tilt_divergences(const JointLaw& law, double mu);

// solve D(P_mu||PxPy) - D(P_mu||Pxy) = theta for mu in [0,1] (bisection,
// residual <= 1e-10); theta must lie in the mu in {0,1} endpoint range
double solve_mu(const JointLaw& law, double theta);

struct IstarResult {
    double istar_bits;
    double theta_star; // bits/symbol, the argmax threshold for the MAP test
    double mu_star;
};

// I* = max_theta min(2 D(P_mu||Pxy), D(P_mu||PxPy)); golden-section over the
// valid theta interval, 200 iterations
IstarResult istar_general(const std::array<double, 4>& source,
                          const std::array<std::array<double, 4>, 4>& channel);

// symmetric-channel specialization: bisect for a* in (eta, 3/4) solving
// D(a*||3/4) = 2 D(a*||eta); returns D(a*||3/4). eps = 0 is an exact limit
// case returning renyi2(uniform) = 2 bits.
double istar_symmetric(double eps);

// ---- thresholds and rate bounds ----

// ceil( (G/L) ln(G/(L*eps)) )
long long ncov_estimate(double eps, double G, double L);

// (G^2/2) * 2^(-L*H2(p))
double expected_repeats(double G, double L, const std::array<double, 4>& p);

// [N exp(-lambda (L-ell))]^2 * 2^(-ell H2), lambda = N/G
double greedy_stage_expectation(double N, double G, double L, double ell,
                                const std::array<double, 4>& p);

// Printed-formula rates; both carry a log-base caveat (see ThresholdReport
// docs): the source text is ambiguous about the base, so experiments verify
// only the greedy < sequential ordering, never these constants.
// Returns +infinity outside the domain.
double seq_rate(double lbar, const std::array<double, 4>& p);  // lbar > 2/H2
double kmer_rate(double lbar, const std::array<double, 4>& p); // lbar*H2 > 2

// repeats theorem bound, ln-G normalized lengths, H2 in nats:
// R < L/alpha + (Jbar - 4 alpha/H2 - Kbar) / (2 alpha)
double repeats_rate_bound(double lbar_ln, double jbar_ln, double kbar_ln,
                          double alpha, const std::array<double, 4>& p);

// bridging lemma: R < (J + 2L - (2d+K)) / (2 ln M), raw symbols per read
double bridging_rate_bound(double J, double L, double d, double K, double M);

// flank anchor length: ceil((1+slack) * 2 ln M / H2_nats)
long long d_parameter(long long M, double slack, const std::array<double, 4>& p);

struct ThresholdReport {
    double h2_bits;
    double lbar_threshold_log2; // 2/H2 against Lbar = L/log2 G
    double lbar_threshold_ln;   // same threshold against Lbar = L/ln G
    std::optional<double> istar_bits;
    std::optional<double> two_over_istar;
    std::optional<double> markov_rate_bits;
};

ThresholdReport threshold_report(const std::array<double, 4>& p,
                                 std::optional<double> eps_noise);
ThresholdReport threshold_report_markov(const MarkovModel& model,
                                        std::optional<double> eps_noise);

struct RateBounds {
    std::optional<double> greedy_rate; // 1.0 when lbar > 2/H2
    std::optional<double> seq_rate;
    std::optional<double> kmer_rate;
    bool logbase_caveat = true; // seq/kmer formulas carry the base ambiguity
};
RateBounds rate_bounds(double lbar, const std::array<double, 4>& p);

} // namespace asmlab
