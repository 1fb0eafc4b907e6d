#include "evi/estimators.hpp"

#include <cmath>

#include "evi/asymptotics.hpp"
#include "evi/core_math.hpp"
#include "evi/errors.hpp"

namespace evi {

std::string estimator_name(EstimatorKind kind) {
    switch (kind) {
        case EstimatorKind::GG: return "gg";
        case EstimatorKind::GGStar: return "gg_star";
        case EstimatorKind::Hill: return "hill";
        case EstimatorKind::Pickands: return "pickands";
        case EstimatorKind::Moment: return "moment";
        case EstimatorKind::Zipf: return "zipf";
    }
    return "?";
}

EstimatorKind estimator_from_name(const std::string& name) {
    if (name == "gg") return EstimatorKind::GG;
    if (name == "gg_star") return EstimatorKind::GGStar;
    if (name == "hill") return EstimatorKind::Hill;
    if (name == "pickands") return EstimatorKind::Pickands;
    if (name == "moment") return EstimatorKind::Moment;
    if (name == "zipf") return EstimatorKind::Zipf;
    throw ConfigError("unknown estimator: " + name);
}

void GGConfig::validate(const OrderedSample& s) const {
    const int n = static_cast<int>(s.size());
    if (!(1 < k_prime && k_prime < k && k < n)) {
        throw ConfigError("gg config requires 1 < k' < k < n, got k'=" +
                          std::to_string(k_prime) + ", k=" + std::to_string(k) +
                          ", n=" + std::to_string(n));
    }
}

GGConfig GGConfig::from_ratio(int k, double c) {
    if (!(c > 1.0)) {
        throw ConfigError("gg config: c must be > 1");
    }
    const int kp = static_cast<int>(std::floor(k / c));
    if (kp < 2) {
        throw ConfigError("gg config: floor(k/c) = " + std::to_string(kp) +
                          " < 2 for k=" + std::to_string(k));
    }
    return GGConfig{k, kp};
}

SpacingStatistics spacing_statistics(const OrderedSample& s, const GGConfig& cfg) {
    cfg.validate(s);
    const double xk = s.upper_order_stat(static_cast<std::size_t>(cfg.k));
    const double xkp = s.upper_order_stat(static_cast<std::size_t>(cfg.k_prime));
    const double xmax = s.upper_order_stat(1);
    SpacingStatistics st;
    st.num = xk - xkp;
    st.den = xkp - xmax;
    if (st.den == 0.0) {
        throw TieError("X_{n-k'+1,n} equals the sample maximum; spacings degenerate");
    }
    st.z = st.num / st.den;
    return st;
}

double h_function(const OrderedSample& s, const GGConfig& cfg, double theta) {
    const SpacingStatistics st = spacing_statistics(s, cfg);
    const double ratio = phi(theta, 1.0 / cfg.k_prime) / phi(theta, 1.0 / cfg.k);
    return ratio * (1.0 + st.z);
}

EstimateResult gg_estimate(const OrderedSample& s, const GGConfig& cfg) {
    const SpacingStatistics st = spacing_statistics(s, cfg);
    if (st.num == 0.0) {
        throw RootAtInfinityError(
            "X_{n-k+1,n} equals X_{n-k'+1,n} (Z_n = 0); H_n stays below 1");
    }

    auto h_minus_one = [&](double theta) {
        const double ratio = phi(theta, 1.0 / cfg.k_prime) / phi(theta, 1.0 / cfg.k);
        return ratio * (1.0 + st.z) - 1.0;
    };

    // Expand a symmetric bracket until the sign changes, capped at |theta| <= 64.
    double half_width = 1.0;
    int iterations = 0;
    while (true) {
        ++iterations;
        if (h_minus_one(-half_width) < 0.0 && h_minus_one(half_width) > 0.0) {
            break;
        }
        half_width *= 2.0;
        if (half_width > kThetaSearchCap) {
            // One last try at the cap itself.
            if (h_minus_one(-kThetaSearchCap) < 0.0 && h_minus_one(kThetaSearchCap) > 0.0) {
                half_width = kThetaSearchCap;
                break;
            }
            throw BracketError("no sign change of H_n - 1 within |theta| <= 64");
        }
    }

    double lo = -half_width;
    double hi = half_width;
    while (hi - lo > kRootTolerance) {
        ++iterations;
        const double mid = 0.5 * (lo + hi);
        if (h_minus_one(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    EstimateResult r;
    r.xi_hat = 0.5 * (lo + hi);
    r.estimator = EstimatorKind::GG;
    r.k = cfg.k;
    r.k_prime = cfg.k_prime;
    r.solver_iterations = iterations;
    r.bracket_width = 2.0 * half_width;
    return r;
}

EstimateResult gg_bias_corrected(const OrderedSample& s, const GGConfig& cfg) {
    EstimateResult r = gg_estimate(s, cfg);
    const double xi_hat = r.xi_hat;
    r.xi_hat = xi_hat - mu(xi_hat, cfg.ratio()) / v_k(xi_hat, cfg.k);
    r.estimator = EstimatorKind::GGStar;
    return r;
}

EstimateResult hill(const OrderedSample& s, int k) {
    const int n = static_cast<int>(s.size());
    if (k < 1 || k > n - 1) {
        throw ConfigError("hill: k must satisfy 1 <= k <= n-1");
    }
    const double base = s.upper_order_stat(static_cast<std::size_t>(k + 1));
    if (base <= 0.0) {
        throw DomainError("hill: X_{n-k,n} must be > 0");
    }
    const double log_base = std::log(base);
    double sum = 0.0;
    for (int i = 1; i <= k; ++i) {
        sum += std::log(s.upper_order_stat(static_cast<std::size_t>(i))) - log_base;
    }
    return EstimateResult{sum / k, EstimatorKind::Hill, k, std::nullopt};
}

EstimateResult pickands(const OrderedSample& s, int k) {
    const int n = static_cast<int>(s.size());
    if (k < 1 || 4 * k > n) {
        throw ConfigError("pickands: k must satisfy 1 <= k <= floor(n/4)");
    }
    const double a = s.upper_order_stat(static_cast<std::size_t>(k));
    const double b = s.upper_order_stat(static_cast<std::size_t>(2 * k));
    const double c = s.upper_order_stat(static_cast<std::size_t>(4 * k));
    if (a - b <= 0.0 || b - c <= 0.0) {
        throw TieError("pickands: degenerate spacing among the order statistics used");
    }
    return EstimateResult{std::log((a - b) / (b - c)) / std::log(2.0),
                          EstimatorKind::Pickands, k, std::nullopt};
}

EstimateResult moment(const OrderedSample& s, int k) {
    const EstimateResult h = hill(s, k);
    const double log_base =
        std::log(s.upper_order_stat(static_cast<std::size_t>(k + 1)));
    double s2 = 0.0;
    for (int i = 1; i <= k; ++i) {
        const double e = std::log(s.upper_order_stat(static_cast<std::size_t>(i))) - log_base;
        s2 += e * e;
    }
    s2 /= k;
    const double h2 = h.xi_hat * h.xi_hat;
    if (s2 == h2) {
        throw DegenerateMomentError("moment: S_{k,n} equals the squared Hill estimate");
    }
    const double xi = h.xi_hat + 1.0 - 0.5 / (1.0 - h2 / s2);
    return EstimateResult{xi, EstimatorKind::Moment, k, std::nullopt};
}

EstimateResult zipf(const OrderedSample& s, int k) {
    const int n = static_cast<int>(s.size());
    if (k < 2 || k > n - 1) {
        throw ConfigError("zipf: k must satisfy 2 <= k <= n-1");
    }
    // UH_{j,n} = X_{n-j,n} * [(1/j) sum_{i<=j} ln X_{n-i+1,n} - ln X_{n-j,n}]
    double running_log_sum = 0.0;
    double sw = 0.0, sww = 0.0, su = 0.0, swu = 0.0;
    for (int j = 1; j <= k; ++j) {
        const double xj = s.upper_order_stat(static_cast<std::size_t>(j));
        const double base = s.upper_order_stat(static_cast<std::size_t>(j + 1));
        if (xj <= 0.0 || base <= 0.0) {
            throw DomainError("zipf: order statistics must be > 0");
        }
        running_log_sum += std::log(xj);
        const double uh = base * (running_log_sum / j - std::log(base));
        if (uh <= 0.0) {
            throw DomainError("zipf: UH_{" + std::to_string(j) + ",n} is not positive");
        }
        const double w = std::log(static_cast<double>(k + 1) / j);
        const double lu = std::log(uh);
        sw += w;
        sww += w * w;
        su += lu;
        swu += w * lu;
    }
    const double num = swu - sw * su / k;
    const double den = sww - sw * sw / k;
    return EstimateResult{num / den, EstimatorKind::Zipf, k, std::nullopt};
}

}  // namespace evi
