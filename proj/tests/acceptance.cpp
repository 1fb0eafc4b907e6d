// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "evi/core_math.hpp"
#include "evi/montecarlo.hpp"

using namespace evi;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& label, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion,
                label.c_str(), detail.c_str());
    if (!ok) ++g_failures;
}

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point start = clock::now();
    return std::chrono::duration<double>(clock::now() - start).count();
}

OrderedSample fixed_point_sample(double xi0, int n) {
    std::vector<double> data;
    for (int i = 1; i <= n; ++i) data.push_back(phi(xi0, 1.0 / i));
    return OrderedSample::from_raw(std::move(data));
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// 1. gg recovers xi0 exactly on the synthetic fixed-point sample.
void criterion_fixed_point() {
    bool ok = true;
    double worst = 0.0;
    for (double xi0 : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 3.0}) {
        const auto s = fixed_point_sample(xi0, 100);
        const double xi = gg_estimate(s, GGConfig{40, 10}).xi_hat;
        worst = std::max(worst, std::fabs(xi - xi0));
        ok = ok && std::fabs(xi - xi0) <= 1e-8;
    }
    report(1, "fixed-point exactness", ok, "max |error| = " + fmt(worst));
}

// 2. Location-scale invariance of gg and pickands on 100 random samples.
void criterion_invariance() {
    bool ok = true;
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        const auto s = sample(DistributionSpec::burr(1, 1, 1), 400,
                              SeededStream(1001, static_cast<std::uint64_t>(rep)));
        const GGConfig cfg{80, 20};
        const double gg0 = gg_estimate(s, cfg).xi_hat;
        const double p0 = pickands(s, 50).xi_hat;
        for (auto [a, b] : {std::pair{2.0, 0.0}, {1.0, 5.0}, {0.1, -3.0}}) {
            std::vector<double> shifted = s.values();
            for (double& v : shifted) v = a * v + b;
            const auto t = OrderedSample::from_raw(std::move(shifted));
            const double dg = std::fabs(gg_estimate(t, cfg).xi_hat - gg0);
            const double dp = std::fabs(pickands(t, 50).xi_hat - p0);
            worst = std::max({worst, dg, dp});
            ok = ok && dg <= 1e-8 && dp <= 1e-8;
        }
    }
    report(2, "location-scale invariance", ok, "max |shift| = " + fmt(worst));
}

// 3. Hand-evaluation oracles for hill, moment, zipf.
void criterion_oracles() {
    const auto s = OrderedSample::from_raw({1, 2, 4, 8});
    const double h = hill(s, 3).xi_hat;
    const double m = moment(s, 3).xi_hat;
    const double z = zipf(s, 2).xi_hat;
    const double z_expected = std::log(4.0 / 3.0) / std::log(2.0);
    const bool ok = std::fabs(h - 2.0 * std::log(2.0)) <= 1e-12 &&
                    std::fabs(m - (2.0 * std::log(2.0) - 2.5)) <= 1e-12 &&
                    std::fabs(z - z_expected) <= 1e-9;
    report(3, "estimator oracles on {1,2,4,8}", ok,
           "hill=" + fmt(h) + " moment=" + fmt(m) + " zipf=" + fmt(z));
}

// 4. Gaussian limit law for xi = -1 (strong-negative branch).
void criterion_limit_law_negative() {
    const auto spec = DistributionSpec::weibull_m(-1.0);
    const auto small = run_asymptotic_check(spec, 5000, 2000, 500, 4.0, 2026);
    const auto large = run_asymptotic_check(spec, 20000, 2000, 2000, 4.0, 2026);
    const bool ok = small.ks_distance < 0.15 && large.ks_distance < small.ks_distance;
    report(4, "limit law, xi = -1 (Gaussian branch)", ok,
           "ks(n=5000)=" + fmt(small.ks_distance) +
               " ks(n=20000)=" + fmt(large.ks_distance));
}

// 5. Gumbel limit law for xi = 3 (positive branch), log-rate regime.
void criterion_limit_law_positive() {
    const auto spec = DistributionSpec::frechet(3.0);
    const auto small = run_asymptotic_check(spec, 5000, 2000, 500, 4.0, 2027);
    const auto large = run_asymptotic_check(spec, 20000, 2000, 2000, 4.0, 2027);
    const bool ok = large.ks_distance < small.ks_distance && large.ks_distance < 0.25;
    report(5, "limit law, xi = 3 (Gumbel branch)", ok,
           "ks(n=5000)=" + fmt(small.ks_distance) +
               " ks(n=20000)=" + fmt(large.ks_distance));
}

// 6. Consistency: median |error| shrinks from (500, 100) to (5000, 1000).
void criterion_consistency() {
    const DistributionSpec specs[] = {
        DistributionSpec::burr(1, 1, 1),
        DistributionSpec::standard_normal(),
        DistributionSpec::weibull_m(-0.25),
        DistributionSpec::weibull_m(-2.0),
    };
    bool ok = true;
    std::string detail;
    for (const auto& spec : specs) {
        const double xi = true_xi(spec);
        auto median_err = [&](int n, int k) {
            std::vector<double> errs;
            for (int rep = 0; rep < 200; ++rep) {
                const auto s = sample(spec, static_cast<std::size_t>(n),
                                      SeededStream(602, static_cast<std::uint64_t>(rep)));
                errs.push_back(
                    std::fabs(gg_estimate(s, GGConfig::from_ratio(k, 4.0)).xi_hat - xi));
            }
            std::sort(errs.begin(), errs.end());
            return errs[errs.size() / 2];
        };
        const double coarse = median_err(500, 100);
        const double fine = median_err(5000, 1000);
        ok = ok && fine < coarse;
        detail += spec.to_string() + ": " + fmt(coarse) + "->" + fmt(fine) + " ";
    }
    report(6, "consistency trend", ok, detail);
}

// 7. Qualitative reproduction of the simulation study at N=100, n=500, c=4.
void criterion_simulation_study() {
    constexpr std::uint64_t kSeed = 20240817;  // documented acceptance seed

    // (a) Frechet xi=3: bias correction shrinks the mean-curve bias.
    ExperimentConfig fa;
    fa.distribution = DistributionSpec::frechet(3.0);
    fa.n = 500;
    fa.replicates = 100;
    fa.c = 4.0;
    fa.estimators = {EstimatorKind::GG, EstimatorKind::GGStar};
    fa.master_seed = kSeed;
    for (int k = 20; k <= 400; k += 5) fa.k_grid.push_back(k);
    const auto ra = run_experiment(fa);
    double bias_gg = 0.0, bias_star = 0.0;
    int count = 0;
    for (const auto& cell : ra.cells) {
        if (cell.error_count == fa.replicates) continue;
        if (cell.estimator == EstimatorKind::GG) {
            bias_gg += std::fabs(cell.mean - 3.0);
            ++count;
        } else {
            bias_star += std::fabs(cell.mean - 3.0);
        }
    }
    bias_gg /= count;
    bias_star /= count;
    const bool ok_a = bias_star <= bias_gg;
    report(7, "simulation 7a: bias correction helps for frechet(3)", ok_a,
           "avg |bias| gg=" + fmt(bias_gg) + " gg_star=" + fmt(bias_star));

    // (b) WeibullM xi=-2: gg_star competitive on MSE.
    ExperimentConfig fb;
    fb.distribution = DistributionSpec::weibull_m(-2.0);
    fb.n = 500;
    fb.replicates = 100;
    fb.c = 4.0;
    fb.estimators = {EstimatorKind::GGStar, EstimatorKind::Pickands,
                     EstimatorKind::Moment, EstimatorKind::Zipf};
    fb.master_seed = kSeed;
    for (int k = 8; k <= 125; k += 5) fb.k_grid.push_back(k);
    const auto rb = run_experiment(fb);
    double mse_star = 0.0, mse_pick = 0.0, mse_mom = 0.0, mse_zipf = 0.0;
    int n_star = 0, n_pick = 0, n_mom = 0, n_zipf = 0;
    for (const auto& cell : rb.cells) {
        if (cell.error_count == fb.replicates) continue;
        switch (cell.estimator) {
            case EstimatorKind::GGStar: mse_star += cell.mse; ++n_star; break;
            case EstimatorKind::Pickands: mse_pick += cell.mse; ++n_pick; break;
            case EstimatorKind::Moment: mse_mom += cell.mse; ++n_mom; break;
            case EstimatorKind::Zipf: mse_zipf += cell.mse; ++n_zipf; break;
            default: break;
        }
    }
    mse_star /= n_star;
    mse_pick /= n_pick;
    mse_mom /= n_mom;
    mse_zipf /= n_zipf;
    const bool ok_b =
        mse_star <= 1.2 * mse_zipf && mse_star <= mse_pick && mse_star <= mse_mom;
    report(7, "simulation 7b: gg_star MSE competitive for weibull_m(-2)", ok_b,
           "gg_star=" + fmt(mse_star) + " zipf=" + fmt(mse_zipf) +
               " pickands=" + fmt(mse_pick) + " moment=" + fmt(mse_mom));
}

// 8. Asymptotics unit checks: shape, mean, spot values.
void criterion_asymptotics() {
    bool ok = true;
    std::string detail;

    for (double xi : {2.0, 0.0, -0.25, -1.5}) {
        const auto law = LimitLaw::for_xi(xi, 4.0);
        double prev = -1.0;
        for (int i = 0; i < 1000; ++i) {
            const double t = -60.0 + 120.0 * i / 999.0;
            const double f = limit_cdf(law, t);
            if (f < prev || f < 0.0 || f > 1.0) ok = false;
            prev = f;
        }
        if (limit_cdf(law, -1e9) > 1e-9 || limit_cdf(law, 1e9) < 1.0 - 1e-9) ok = false;
    }

    // Quadrature mean of the moderate-negative law vs mu(-0.25, 4).
    const auto law = LimitLaw::for_xi(-0.25, 4.0);
    const int steps = 2'000'000;
    const double lo = -60.0, hi = 2.0;
    double mean = 0.0;
    double f_prev = limit_cdf(law, lo);
    for (int i = 1; i <= steps; ++i) {
        const double t1 = lo + (hi - lo) * i / steps;
        const double t0 = lo + (hi - lo) * (i - 1) / steps;
        const double f = limit_cdf(law, t1);
        mean += 0.5 * (t0 + t1) * (f - f_prev);
        f_prev = f;
    }
    const double target = mu(-0.25, 4.0);
    if (std::fabs(mean - target) > 1e-4) ok = false;
    detail += "moderate-negative mean=" + fmt(mean) + " mu=" + fmt(target) + " ";

    // Spot values from the module contracts.
    const double l100 = std::log(100.0);
    if (std::fabs(v_k(0.0, 100) - l100 * l100) > 1e-10) ok = false;
    if (std::fabs(v_k(-2.0, 100) - 18.0) > 1e-10) ok = false;
    if (std::fabs(v_k(1.0, 100) - 0.99 * l100) > 1e-10) ok = false;
    if (std::fabs(mu(1.0, 4.0) - euler_gamma()) > 1e-12) ok = false;
    if (mu(-1.0, 4.0) != 0.0) ok = false;
    if (std::fabs(LimitLaw::for_xi(-1.0, 4.0).sigma - 4.0 * std::sqrt(3.0)) > 1e-12) {
        ok = false;
    }

    report(8, "asymptotics unit suite", ok, detail);
}

}  // namespace

int main() {
    const double t0 = now_seconds();
    criterion_fixed_point();
    criterion_invariance();
    criterion_oracles();
    criterion_limit_law_negative();
    criterion_limit_law_positive();
    criterion_consistency();
    criterion_simulation_study();
    criterion_asymptotics();
    std::printf("acceptance: %d failure(s), %.1f s total\n", g_failures,
                now_seconds() - t0);
    return g_failures == 0 ? 0 : 1;
}
