#include "evi/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "evi/errors.hpp"

namespace evi {

namespace {

bool k_valid_for(EstimatorKind e, int k, int n, double c) {
    switch (e) {
        case EstimatorKind::GG:
        case EstimatorKind::GGStar: {
            const int kp = static_cast<int>(std::floor(k / c));
            return kp >= 2 && kp < k && k < n;
        }
        case EstimatorKind::Pickands:
            return k >= 1 && 4 * k <= n;
        case EstimatorKind::Hill:
        case EstimatorKind::Moment:
            return k >= 1 && k <= n - 1;
        case EstimatorKind::Zipf:
            return k >= 2 && k <= n - 1;
    }
    return false;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (replicates < 1) {
        throw ConfigError("experiment: N must be >= 1");
    }
    if (n < 4) {
        throw ConfigError("experiment: n must be >= 4");
    }
    if (!(c > 1.0)) {
        throw ConfigError("experiment: c must be > 1");
    }
    if (estimators.empty()) {
        throw ConfigError("experiment: no estimators selected");
    }
    if (k_grid.empty()) {
        throw ConfigError("experiment: empty k grid");
    }
    for (EstimatorKind e : estimators) {
        for (int k : k_grid) {
            if (!k_valid_for(e, k, n, c)) {
                throw ConfigError("experiment: k=" + std::to_string(k) +
                                  " violates preconditions of estimator " +
                                  estimator_name(e) + " at n=" + std::to_string(n));
            }
        }
    }
}

std::vector<int> ExperimentConfig::default_k_grid(
    int n, double c, const std::vector<EstimatorKind>& estimators) {
    const int step = std::max(1, n / 100);
    std::vector<int> grid;
    for (int k = 8; k < n; k += step) {
        bool ok = true;
        for (EstimatorKind e : estimators) {
            if (!k_valid_for(e, k, n, c)) {
                ok = false;
                break;
            }
        }
        if (ok) grid.push_back(k);
    }
    if (grid.empty()) {
        throw ConfigError("no valid k in [8, n) for the selected estimators");
    }
    return grid;
}

namespace {

constexpr double kFailed = std::numeric_limits<double>::quiet_NaN();

// One replicate: fills estimates for every (estimator, k) cell, NaN on error.
void compute_replicate(const ExperimentConfig& cfg, int replicate, double* out) {
    const OrderedSample s =
        sample(cfg.distribution, static_cast<std::size_t>(cfg.n),
               SeededStream(cfg.master_seed, static_cast<std::uint64_t>(replicate)));
    std::size_t cell = 0;
    for (EstimatorKind e : cfg.estimators) {
        for (int k : cfg.k_grid) {
            double value = kFailed;
            try {
                switch (e) {
                    case EstimatorKind::GG:
                        value = gg_estimate(s, GGConfig::from_ratio(k, cfg.c)).xi_hat;
                        break;
                    case EstimatorKind::GGStar:
                        value = gg_bias_corrected(s, GGConfig::from_ratio(k, cfg.c)).xi_hat;
                        break;
                    case EstimatorKind::Hill:
                        value = hill(s, k).xi_hat;
                        break;
                    case EstimatorKind::Pickands:
                        value = pickands(s, k).xi_hat;
                        break;
                    case EstimatorKind::Moment:
                        value = moment(s, k).xi_hat;
                        break;
                    case EstimatorKind::Zipf:
                        value = zipf(s, k).xi_hat;
                        break;
                }
            } catch (const Error&) {
                value = kFailed;
            }
            out[cell++] = value;
        }
    }
}

ExperimentResult reduce_experiment(const ExperimentConfig& cfg,
                                   const std::vector<double>& estimates) {
    const std::size_t cells = cfg.estimators.size() * cfg.k_grid.size();
    ExperimentResult result;
    result.config = cfg;
    result.true_xi_value = true_xi(cfg.distribution);

    std::size_t cell = 0;
    for (EstimatorKind e : cfg.estimators) {
        for (int k : cfg.k_grid) {
            double sum = 0.0;
            double sq = 0.0;
            int errors = 0;
            for (int r = 0; r < cfg.replicates; ++r) {
                const double v = estimates[static_cast<std::size_t>(r) * cells + cell];
                if (std::isnan(v)) {
                    ++errors;
                } else {
                    sum += v;
                    const double d = v - result.true_xi_value;
                    sq += d * d;
                }
            }
            const int m = cfg.replicates - errors;
            CellResult cr;
            cr.estimator = e;
            cr.k = k;
            cr.mean = m > 0 ? sum / m : kFailed;
            cr.mse = m > 0 ? sq / m : kFailed;
            cr.error_count = errors;
            result.cells.push_back(cr);
            ++cell;
        }
    }
    return result;
}

}  // namespace

ExperimentResult run_experiment_serial(const ExperimentConfig& cfg) {
    cfg.validate();
    const std::size_t cells = cfg.estimators.size() * cfg.k_grid.size();
    std::vector<double> estimates(static_cast<std::size_t>(cfg.replicates) * cells);
    for (int r = 0; r < cfg.replicates; ++r) {
        compute_replicate(cfg, r, estimates.data() + static_cast<std::size_t>(r) * cells);
    }
    return reduce_experiment(cfg, estimates);
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const std::size_t cells = cfg.estimators.size() * cfg.k_grid.size();
    std::vector<double> estimates(static_cast<std::size_t>(cfg.replicates) * cells);
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < cfg.replicates; ++r) {
        compute_replicate(cfg, r, estimates.data() + static_cast<std::size_t>(r) * cells);
    }
    // Reduction runs serially in replicate order, so the result does not
    // depend on the thread count.
    return reduce_experiment(cfg, estimates);
}

std::string ExperimentResult::to_csv() const {
    std::string out = "estimator,k,mean,mse,errors\n";
    for (const CellResult& c : cells) {
        out += estimator_name(c.estimator);
        out += ',';
        out += std::to_string(c.k);
        out += ',';
        out += fmt(c.mean);
        out += ',';
        out += fmt(c.mse);
        out += ',';
        out += std::to_string(c.error_count);
        out += '\n';
    }
    return out;
}

double ks_distance(std::vector<double> samples, const LimitLaw& law) {
    if (samples.empty()) {
        throw ConfigError("ks_distance: empty sample");
    }
    std::sort(samples.begin(), samples.end());
    const double m = static_cast<double>(samples.size());
    double sup = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = limit_cdf(law, samples[i]);
        const double hi = std::fabs((i + 1) / m - f);
        const double lo = std::fabs(i / m - f);
        sup = std::max(sup, std::max(hi, lo));
    }
    return sup;
}

namespace {

AsymptoticCheckResult asymptotic_check_impl(const DistributionSpec& distribution, int n,
                                            int replicates, int k, double c,
                                            std::uint64_t master_seed, bool parallel) {
    if (replicates < 1) {
        throw ConfigError("asymptotic check: N must be >= 1");
    }
    const GGConfig cfg = GGConfig::from_ratio(k, c);
    const double xi = true_xi(distribution);
    const double realized_c = cfg.ratio();
    const LimitLaw law = LimitLaw::for_xi(xi, realized_c);
    if (law.regime == LawRegime::HalfNegative) {
        throw UnsupportedLawError("xi = -1/2: the limit law has no explicit CDF");
    }
    const double rate = v_k(xi, k);

    std::vector<double> values(static_cast<std::size_t>(replicates), kFailed);
    auto one = [&](int r) {
        try {
            const OrderedSample s =
                sample(distribution, static_cast<std::size_t>(n),
                       SeededStream(master_seed, static_cast<std::uint64_t>(r)));
            values[static_cast<std::size_t>(r)] =
                rate * (gg_estimate(s, cfg).xi_hat - xi);
        } catch (const Error&) {
        }
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int r = 0; r < replicates; ++r) one(r);
    } else {
        for (int r = 0; r < replicates; ++r) one(r);
    }

    AsymptoticCheckResult result{{}, 0.0, law, 0};
    for (double v : values) {
        if (std::isnan(v)) {
            ++result.error_count;
        } else {
            result.standardized.push_back(v);
        }
    }
    std::sort(result.standardized.begin(), result.standardized.end());
    result.ks_distance = ks_distance(result.standardized, law);
    return result;
}

}  // namespace

AsymptoticCheckResult run_asymptotic_check(const DistributionSpec& distribution, int n,
                                           int replicates, int k, double c,
                                           std::uint64_t master_seed) {
    return asymptotic_check_impl(distribution, n, replicates, k, c, master_seed, true);
}

AsymptoticCheckResult run_asymptotic_check_serial(const DistributionSpec& distribution,
                                                  int n, int replicates, int k, double c,
                                                  std::uint64_t master_seed) {
    return asymptotic_check_impl(distribution, n, replicates, k, c, master_seed, false);
}

std::string AsymptoticCheckResult::to_csv() const {
    std::string out = "x\n";
    for (double v : standardized) {
        out += fmt(v);
        out += '\n';
    }
    out += "ks_distance," + fmt(ks_distance) + "\n";
    return out;
}

}  // namespace evi
