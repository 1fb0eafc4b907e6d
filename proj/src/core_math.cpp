#include "evi/core_math.hpp"

#include <cmath>
#include <string>

#include "evi/errors.hpp"

namespace evi {

double phi(double t, double x) {
    if (!(x > 0.0)) {
        throw DomainError("phi: x must be > 0, got " + std::to_string(x));
    }
    const double lx = std::log(x);
    if (std::fabs(t) < kPhiLogBranchThreshold) {
        return lx;
    }
    // (x^t - 1)/t evaluated as expm1(t ln x)/t to avoid cancellation near t = 0.
    return std::expm1(t * lx) / t;
}

double phi_star(double t, double x) {
    if (t != 0.0) {
        return 1.0 + t * x;
    }
    return std::exp(x);
}

namespace {

// Lanczos coefficients, g = 7.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos_gamma(double x) {
    if (x < 0.5) {
        // Reflection formula.
        return M_PI / (std::sin(M_PI * x) * lanczos_gamma(1.0 - x));
    }
    x -= 1.0;
    double a = kLanczos[0];
    const double t = x + 7.5;
    for (int i = 1; i < 9; ++i) {
        a += kLanczos[i] / (x + i);
    }
    return std::sqrt(2.0 * M_PI) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

}  // namespace

double gamma_function(double x) {
    if (!(x > 0.0) || x >= 171.6) {
        throw DomainError("gamma_function: argument must be in (0, 171.6), got " +
                          std::to_string(x));
    }
    return lanczos_gamma(x);
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x * M_SQRT1_2);
}

namespace {

// Acklam's rational approximation to the inverse normal CDF.
double acklam_quantile(double p) {
    static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                    -2.759285104469687e+02, 1.383577518672690e+02,
                                    -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                    -1.556989798598866e+02, 6.680131188771972e+01,
                                    -1.328068155288572e+01};
    static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                    -2.400758277161838e+00, -2.549732539343734e+00,
                                    4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                    2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double plow = 0.02425;

    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - plow) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("normal_quantile: p must be in (0, 1), got " + std::to_string(p));
    }
    double x = acklam_quantile(p);
    // One Halley step against the exact CDF.
    const double e = normal_cdf(x) - p;
    const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
    x -= u / (1.0 + 0.5 * x * u);
    return x;
}

}  // namespace evi
