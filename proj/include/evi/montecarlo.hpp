#ifndef EVI_MONTECARLO_HPP
#define EVI_MONTECARLO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "evi/asymptotics.hpp"
#include "evi/distributions.hpp"
#include "evi/estimators.hpp"

namespace evi {

struct ExperimentConfig {
    DistributionSpec distribution;
    int n = 500;
    int replicates = 100;  // N
    double c = 4.0;        // ratio k/k' for the gg family
    std::vector<int> k_grid;
    std::vector<EstimatorKind> estimators;
    std::uint64_t master_seed = 0;

    // Checks N >= 1, n >= 4 and every k against every selected
    // estimator's preconditions. Throws ConfigError.
    void validate() const;

    // k from 8 up to the largest k valid for all selected estimators,
    // step max(1, n/100).
    static std::vector<int> default_k_grid(int n, double c,
                                           const std::vector<EstimatorKind>& estimators);
};

struct CellResult {
    EstimatorKind estimator;
    int k;
    double mean;
    double mse;
    int error_count;
};

struct ExperimentResult {
    ExperimentConfig config;
    double true_xi_value;
    std::vector<CellResult> cells;  // estimator-major, k ascending

    std::string to_csv() const;
};

struct AsymptoticCheckResult {
    std::vector<double> standardized;  // sorted V_k(xi)(xi_hat - xi)
    double ks_distance;
    LimitLaw law;
    int error_count;

    std::string to_csv() const;
};

// Runs the replicate loop in parallel (OpenMP); per-replicate streams make
// the result bit-identical to run_experiment_serial.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Serial reference path, kept for testing and benchmarking.
ExperimentResult run_experiment_serial(const ExperimentConfig& cfg);

// Empirical check of the limit law: standardizes each replicate estimate
// with the TRUE xi in both the centering and the rate V_k.
AsymptoticCheckResult run_asymptotic_check(const DistributionSpec& distribution, int n,
                                           int replicates, int k, double c,
                                           std::uint64_t master_seed);

AsymptoticCheckResult run_asymptotic_check_serial(const DistributionSpec& distribution,
                                                  int n, int replicates, int k, double c,
                                                  std::uint64_t master_seed);

// Kolmogorov-Smirnov distance between the empirical CDF of the samples and
// the analytic limit CDF.
double ks_distance(std::vector<double> samples, const LimitLaw& law);

}  // namespace evi

#endif  // EVI_MONTECARLO_HPP
