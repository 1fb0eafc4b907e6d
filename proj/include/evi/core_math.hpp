#ifndef EVI_CORE_MATH_HPP
#define EVI_CORE_MATH_HPP

namespace evi {

// Box-Cox-type primitive: phi_t(x) = (x^t - 1)/t for t != 0, ln(x) at t = 0.
// Continuous in t; |t| < kPhiLogBranchThreshold falls back to the log branch.
// Requires x > 0.
double phi(double t, double x);

inline constexpr double kPhiLogBranchThreshold = 1e-12;

// Companion function: phi_star_t(x) = 1 + t*x for t != 0, e^x at t = 0.
// Satisfies phi_star_t(phi_t(x)) = x^t (t != 0) and = x (t = 0).
double phi_star(double t, double x);

// Gamma function, Lanczos approximation (g = 7, 9 coefficients).
// Supported on (0, 171.6); relative error below 1e-10 on (0, 2].
double gamma_function(double x);

// Euler-Mascheroni constant.
constexpr double euler_gamma() { return 0.5772156649015329; }

// Standard normal CDF, accurate to well below 1e-12 absolute.
double normal_cdf(double x);

// Standard normal quantile: rational approximation refined by a Newton step.
// Requires 0 < p < 1.
double normal_quantile(double p);

}  // namespace evi

#endif  // EVI_CORE_MATH_HPP
