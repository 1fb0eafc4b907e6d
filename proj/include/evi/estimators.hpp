#ifndef EVI_ESTIMATORS_HPP
#define EVI_ESTIMATORS_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "evi/sample.hpp"

namespace evi {

enum class EstimatorKind { GG, GGStar, Hill, Pickands, Moment, Zipf };

std::string estimator_name(EstimatorKind kind);
EstimatorKind estimator_from_name(const std::string& name);

// Pair (k, k') for the root estimator; c = k/k' is the paper's ratio.
struct GGConfig {
    int k;
    int k_prime;

    // Validates 1 < k' < k < n.
    void validate(const OrderedSample& s) const;

    double ratio() const { return static_cast<double>(k) / k_prime; }

    // k' = floor(k/c), the realized ratio k/k' is used downstream.
    static GGConfig from_ratio(int k, double c);
};

struct EstimateResult {
    double xi_hat;
    EstimatorKind estimator;
    int k;
    std::optional<int> k_prime;
    int solver_iterations = 0;
    double bracket_width = 0.0;
};

// The three spacings entering the root equation.
struct SpacingStatistics {
    double num;  // X_{n-k+1,n} - X_{n-k'+1,n}  (<= 0)
    double den;  // X_{n-k'+1,n} - X_{n,n}      (<= 0)
    double z;    // num/den                     (>= 0)
};

SpacingStatistics spacing_statistics(const OrderedSample& s, const GGConfig& cfg);

// H_n(theta) = [phi_theta(1/k')/phi_theta(1/k)] (X_{n-k+1,n}-X_{n,n})/(X_{n-k'+1,n}-X_{n,n}).
// Non-decreasing in theta; tends to 0 at -inf and 1+Z_n at +inf.
double h_function(const OrderedSample& s, const GGConfig& cfg, double theta);

// Root of H_n(theta) = 1, found by bracket expansion (|theta| <= 64) and
// bisection to 1e-10 absolute.
EstimateResult gg_estimate(const OrderedSample& s, const GGConfig& cfg);

// xi_star = xi_hat - mu(xi_hat, k/k') / V_k(xi_hat).
EstimateResult gg_bias_corrected(const OrderedSample& s, const GGConfig& cfg);

EstimateResult hill(const OrderedSample& s, int k);

EstimateResult pickands(const OrderedSample& s, int k);

EstimateResult moment(const OrderedSample& s, int k);

EstimateResult zipf(const OrderedSample& s, int k);

inline constexpr double kThetaSearchCap = 64.0;
inline constexpr double kRootTolerance = 1e-10;

}  // namespace evi

#endif  // EVI_ESTIMATORS_HPP
