#include "asmlab/entropy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace asmlab {

namespace {
constexpr double kLn2 = 0.6931471805599453;
double log2_(double x) { return std::log2(x); }
} // namespace

void Distribution::validate() const {
    double sum = 0;
    for (double m : masses) {
        if (m < 0) throw std::invalid_argument("Distribution: negative mass");
        sum += m;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("Distribution: masses must sum to 1");
}

double renyi2(const std::array<double, 4>& p) {
    double s = 0;
    for (double x : p) s += x * x;
    return -log2_(s);
}

double spectral_radius(const std::array<std::array<double, 4>, 4>& m) {
    for (auto& row : m)
        for (double x : row)
            if (x <= 0) throw std::invalid_argument("spectral_radius: entries must be > 0");
    std::array<double, 4> v{0.25, 0.25, 0.25, 0.25};
    for (int it = 0; it < 100000; ++it) {
        std::array<double, 4> w{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                w[i] += m[i][j] * v[j];
        // for a positive matrix the normalizer converges to the Perron root
        double norm = w[0] + w[1] + w[2] + w[3];
        for (double& x : w) x /= norm;
        double resid = 0;
        for (int i = 0; i < 4; ++i) resid += std::abs(w[i] - v[i]);
        v = w;
        if (resid <= 1e-14) return norm;
    }
    throw std::runtime_error("spectral_radius: iteration cap exceeded");
}

double renyi2_rate_markov(const MarkovModel& model) {
    model.validate();
    std::array<std::array<double, 4>, 4> qbar;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            qbar[i][j] = model.q[i][j] * model.q[i][j];
    return log2_(1.0 / spectral_radius(qbar));
}

double kl_divergence(const Distribution& p, const Distribution& q) {
    p.validate();
    q.validate();
    if (p.masses.size() != q.masses.size())
        throw std::invalid_argument("kl_divergence: size mismatch");
    double d = 0;
    for (size_t i = 0; i < p.masses.size(); ++i) {
        if (p.masses[i] == 0) continue;
        if (q.masses[i] == 0)
            throw std::invalid_argument("kl_divergence: absolute continuity violated");
        d += p.masses[i] * log2_(p.masses[i] / q.masses[i]);
    }
    return d;
}

double bernoulli_divergence(double a, double b) {
    if (a < 0 || a > 1 || b <= 0 || b >= 1)
        throw std::invalid_argument("bernoulli_divergence: domain");
    double d = 0;
    if (a > 0) d += a * log2_(a / b);
    if (a < 1) d += (1 - a) * log2_((1 - a) / (1 - b));
    return d;
}

double eta(double eps) {
    if (eps < 0 || eps > 1) throw std::invalid_argument("eta: eps out of [0,1]");
    return 2 * eps - (4.0 / 3.0) * eps * eps;
}

JointLaw channel_joint(const std::array<double, 4>& source,
                       const std::array<std::array<double, 4>, 4>& channel) {
    JointLaw law{};
    for (int s = 0; s < 4; ++s)
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y)
                law.pxy[x * 4 + y] += source[s] * channel[x][s] * channel[y][s];
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            law.px[x] += law.pxy[x * 4 + y];
            law.py[y] += law.pxy[x * 4 + y];
        }
    return law;
}

std::array<double, 16> tilted_distribution(const JointLaw& law, double mu) {
    std::array<double, 16> t{};
    double z = 0;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            const double pj = law.pxy[x * 4 + y];
            const double pi = law.px[x] * law.py[y];
            double v = 0;
            if (pj > 0 && pi > 0)
                v = std::pow(pj, mu) * std::pow(pi, 1 - mu);
            else if (pj > 0 && mu == 1.0)
                v = pj;
            else if (pi > 0 && mu == 0.0)
                v = pi;
            t[x * 4 + y] = v;
            z += v;
        }
    if (z <= 0) throw std::invalid_argument("tilted_distribution: degenerate supports");
    for (double& v : t) v /= z;
    return t;
}

TiltDivergences tilt_divergences(const JointLaw& law, double mu) {
    const auto t = tilted_distribution(law, mu);
    TiltDivergences d{0, 0};
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            const double v = t[x * 4 + y];
            if (v == 0) continue;
            d.d_independent += v * log2_(v / (law.px[x] * law.py[y]));
            d.d_joint += v * log2_(v / law.pxy[x * 4 + y]);
        }
    return d;
}

static double theta_of_mu(const JointLaw& law, double mu) {
    const auto d = tilt_divergences(law, mu);
    return d.d_independent - d.d_joint;
}

double solve_mu(const JointLaw& law, double theta) {
    double lo = 0.0, hi = 1.0;
    const double tlo = theta_of_mu(law, lo), thi = theta_of_mu(law, hi);
    if (theta < tlo - 1e-9 || theta > thi + 1e-9)
        throw std::invalid_argument("solve_mu: theta out of achievable range");
    // theta(mu) is increasing in mu
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (theta_of_mu(law, mid) < theta)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-14) break;
    }
    return 0.5 * (lo + hi);
}

IstarResult istar_general(const std::array<double, 4>& source,
                          const std::array<std::array<double, 4>, 4>& channel) {
    const JointLaw law = channel_joint(source, channel);
    const double tlo = theta_of_mu(law, 0.0), thi = theta_of_mu(law, 1.0);
    if (thi - tlo < 1e-12) {
        // channel output independent of input: nothing distinguishes overlap
        return IstarResult{0.0, 0.0, 0.0};
    }
    auto objective = [&](double theta) {
        const double mu = solve_mu(law, theta);
        const auto d = tilt_divergences(law, mu);
        return std::min(2 * d.d_joint, d.d_independent);
    };
    // golden-section maximization over [tlo, thi]
    const double gr = 0.6180339887498949;
    double a = tlo, b = thi;
    double c = b - gr * (b - a), e = a + gr * (b - a);
    double fc = objective(c), fe = objective(e);
    for (int it = 0; it < 200 && (b - a) > 1e-8; ++it) {
        if (fc < fe) {
            a = c;
            c = e;
            fc = fe;
            e = a + gr * (b - a);
            fe = objective(e);
        } else {
            b = e;
            e = c;
            fe = fc;
            c = b - gr * (b - a);
            fc = objective(c);
        }
    }
    const double theta_star = 0.5 * (a + b);
    const double mu_star = solve_mu(law, theta_star);
    return IstarResult{objective(theta_star), theta_star, mu_star};
}

double istar_symmetric(double eps) {
    if (eps < 0 || eps >= 0.75)
        throw std::invalid_argument("istar_symmetric: eps out of [0, 3/4)");
    if (eps == 0) return 2.0; // exact noiseless limit: renyi2(uniform)
    const double h = eta(eps);
    // g(a) = D(a||3/4) - 2 D(a||eta) is decreasing on (eta, 3/4)
    double lo = h + 1e-15, hi = 0.75 - 1e-15;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double g = bernoulli_divergence(mid, 0.75) - 2 * bernoulli_divergence(mid, h);
        if (g > 0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-12) break;
    }
    return bernoulli_divergence(0.5 * (lo + hi), 0.75);
}

long long ncov_estimate(double eps, double G, double L) {
    if (eps <= 0 || eps >= 1 || L <= 0 || L >= G)
        throw std::invalid_argument("ncov_estimate: need 0<eps<1 and 0<L<G");
    return static_cast<long long>(std::ceil((G / L) * std::log(G / (L * eps))));
}

double expected_repeats(double G, double L, const std::array<double, 4>& p) {
    if (L >= G) throw std::invalid_argument("expected_repeats: L < G required");
    return 0.5 * G * G * std::exp2(-L * renyi2(p));
}

double greedy_stage_expectation(double N, double G, double L, double ell,
                                const std::array<double, 4>& p) {
    if (ell < 0 || ell > L) throw std::invalid_argument("greedy_stage_expectation: ell in [0,L]");
    const double lambda = N / G;
    const double contigs = N * std::exp(-lambda * (L - ell));
    return contigs * contigs * std::exp2(-ell * renyi2(p));
}

double seq_rate(double lbar, const std::array<double, 4>& p) {
    const double lh = lbar * renyi2(p);
    if (lh <= 2.0) return std::numeric_limits<double>::infinity();
    return lh * kLn2 / (lh - 1.0);
}

double kmer_rate(double lbar, const std::array<double, 4>& p) {
    const double lh = lbar * renyi2(p);
    if (lh <= 2.0) return std::numeric_limits<double>::infinity();
    return lh / (lh - 2.0);
}

double repeats_rate_bound(double lbar_ln, double jbar_ln, double kbar_ln,
                          double alpha, const std::array<double, 4>& p) {
    if (alpha <= 0) throw std::invalid_argument("repeats_rate_bound: alpha > 0 required");
    const double h2n = renyi2_nats(p);
    const double bound = lbar_ln / alpha + 0.5 * (jbar_ln - 4 * alpha / h2n - kbar_ln) / alpha;
    if (bound <= 0) throw std::domain_error("repeats_rate_bound: nonpositive bound");
    return bound;
}

double bridging_rate_bound(double J, double L, double d, double K, double M) {
    if (M < 2) throw std::invalid_argument("bridging_rate_bound: M >= 2 required");
    const double w = J + 2 * L - (2 * d + K);
    if (w <= 0) throw std::domain_error("bridging_rate_bound: empty bridging interval");
    return w / (2 * std::log(M));
}

long long d_parameter(long long M, double slack, const std::array<double, 4>& p) {
    if (M < 2) throw std::invalid_argument("d_parameter: M >= 2 required");
    if (slack < 0) throw std::invalid_argument("d_parameter: slack >= 0 required");
    return static_cast<long long>(std::ceil((1 + slack) * 2 * std::log(M) / renyi2_nats(p)));
}

static std::array<std::array<double, 4>, 4> symmetric_channel_matrix(double eps) {
    std::array<std::array<double, 4>, 4> t{};
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s)
            t[r][s] = (r == s) ? 1 - eps : eps / 3;
    return t;
}

ThresholdReport threshold_report(const std::array<double, 4>& p,
                                 std::optional<double> eps_noise) {
    ThresholdReport rep{};
    rep.h2_bits = renyi2(p);
    rep.lbar_threshold_log2 = 2.0 / rep.h2_bits;
    rep.lbar_threshold_ln = rep.lbar_threshold_log2 / kLn2;
    if (eps_noise) {
        const double eps = *eps_noise;
        double istar;
        if (eps == 0) {
            istar = renyi2(p);
        } else {
            const bool uniform = std::abs(p[0] - 0.25) < 1e-12 && std::abs(p[1] - 0.25) < 1e-12 &&
                                 std::abs(p[2] - 0.25) < 1e-12;
            istar = uniform ? istar_symmetric(eps)
                            : istar_general(p, symmetric_channel_matrix(eps)).istar_bits;
        }
        rep.istar_bits = istar;
        rep.two_over_istar = 2.0 / istar;
    }
    return rep;
}

ThresholdReport threshold_report_markov(const MarkovModel& model,
                                        std::optional<double> eps_noise) {
    const auto pi = stationary_distribution(model);
    ThresholdReport rep = threshold_report(pi, eps_noise);
    rep.markov_rate_bits = renyi2_rate_markov(model);
    return rep;
}

RateBounds rate_bounds(double lbar, const std::array<double, 4>& p) {
    RateBounds rb;
    const double h2 = renyi2(p);
    if (lbar > 2.0 / h2) rb.greedy_rate = 1.0;
    const double sr = seq_rate(lbar, p);
    if (std::isfinite(sr)) rb.seq_rate = sr;
    const double kr = kmer_rate(lbar, p);
    if (std::isfinite(kr)) rb.kmer_rate = kr;
    return rb;
}

} // namespace asmlab
